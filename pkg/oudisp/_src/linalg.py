# Lint as: python3
# Copyright 2020 The oudisp Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Dense linear algebra for small linear time-invariant systems."""

import math
from typing import Tuple

import jax.numpy as jnp
from oudisp._src import typing
from oudisp._src import utils

MAX_DIMENSION = 16

# Pade degrees and the 1-norm bounds below which each one reaches unit
# roundoff (Higham, "The scaling and squaring method for the matrix
# exponential revisited", 2005).
_PADE_THETAS = (
    (3, 1.495585217958292e-2),
    (5, 2.539398330063230e-1),
    (7, 9.504178996162932e-1),
    (9, 2.097847961257068e0),
    (13, 5.371920351148152e0),
)

_PADE_COEFFS = {
    3: (120., 60., 12., 1.),
    5: (30240., 15120., 3360., 420., 30., 1.),
    7: (17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.),
    9: (17643225600., 8821612800., 2075673600., 302702400., 30270240.,
        2162160., 110880., 3960., 90., 1.),
    13: (64764752532480000., 32382376266240000., 7771770303897600.,
         1187353796428800., 129060195264000., 10559470521600.,
         670442572800., 33522128640., 1323241920., 40840800., 960960.,
         16380., 182., 1.),
}


def _pade(a: jnp.ndarray, degree: int) -> jnp.ndarray:
  b = _PADE_COEFFS[degree]
  ident = jnp.eye(a.shape[0], dtype=a.dtype)
  a2 = a @ a
  if degree == 13:
    a4 = a2 @ a2
    a6 = a4 @ a2
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
             + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = (a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
         + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident)
  else:
    evens = [ident]
    for _ in range(degree // 2):
      evens.append(evens[-1] @ a2)
    u = a @ sum(b[2 * i + 1] * evens[i] for i in range(len(evens)))
    v = sum(b[2 * i] * evens[i] for i in range(len(evens)))
  return jnp.linalg.solve(v - u, v + u)


def matrix_exp(m: typing.ArrayLike) -> jnp.ndarray:
  """Computes the matrix exponential by scaling and squaring.

  Uses the diagonal Pade approximant of the smallest degree whose backward
  error bound is below unit roundoff for the 1-norm of `m`; larger matrices are
  scaled by a power of two, approximated at degree 13 and squared back.

  Args:
    m: A finite square matrix.

  Returns:
    `e^m` with the dtype of `m` (promoted to at least float64).

  Raises:
    NonFinite: If `m` contains NaN or Inf.
  """
  m = utils.assert_square(m, "m")
  if not jnp.issubdtype(m.dtype, jnp.complexfloating):
    m = m.astype(jnp.float64)
  norm = float(jnp.max(jnp.sum(jnp.abs(m), axis=0))) if m.size else 0.
  for degree, theta in _PADE_THETAS:
    if norm <= theta:
      return _pade(m, degree)

  theta13 = _PADE_THETAS[-1][1]
  s = max(0, int(math.ceil(math.log2(norm / theta13))))
  r = _pade(m / 2. ** s, 13)
  for _ in range(s):
    r = r @ r
  return utils.assert_finite(r, "matrix_exp(m)")


def spectral_abscissa(b: typing.ArrayLike) -> float:
  """Returns the largest real part of the eigenvalues of `b`.

  Args:
    b: A finite square matrix.

  Returns:
    `max Re(lambda)` over the spectrum of `b`.

  Raises:
    NonFinite: If `b` contains NaN or Inf.
  """
  b = utils.assert_square(b, "b").astype(jnp.float64)
  return float(jnp.max(jnp.real(jnp.linalg.eigvals(b))))


def symmetrize(m: jnp.ndarray) -> jnp.ndarray:
  return 0.5 * (m + m.T)


def frobenius_norm(m: jnp.ndarray) -> float:
  return float(jnp.linalg.norm(m))


def psd_sqrt(q: typing.ArrayLike, rtol: float = 1e-12) -> jnp.ndarray:
  """Symmetric square root of a PSD matrix.

  Eigenvalues at or below `rtol` times the largest one are set to zero first.
  `eigh` leaves roundoff of order `1e-16 |q|` in the null space of a rotated
  singular `q`, whose square root would otherwise count towards a rank.

  Args:
    q: A symmetric positive semidefinite matrix.
    rtol: Relative eigenvalue cutoff.

  Returns:
    The symmetric `q^{1/2}`.
  """
  q = symmetrize(jnp.asarray(q, dtype=jnp.float64))
  w, v = jnp.linalg.eigh(q)
  w = jnp.where(w > rtol * jnp.maximum(jnp.max(w), 0.), w, 0.)
  w = jnp.sqrt(w)
  return (v * w) @ v.T


def min_eigenvalue(q: jnp.ndarray) -> float:
  return float(jnp.linalg.eigvalsh(symmetrize(q))[0])


def lyapunov_solve(b: typing.ArrayLike, q: typing.ArrayLike) -> jnp.ndarray:
  """Solves `B X + X B^T + Q = 0` for `X` by a dense Kronecker solve.

  With row-major vectorisation `vec(B X) = (B kron I) vec(X)` and
  `vec(X B^T) = (I kron B) vec(X)`.

  Args:
    b: The `[m, m]` drift matrix, `m <= 16`.
    q: The `[m, m]` right hand side.

  Returns:
    The symmetrised solution `X`.
  """
  b = utils.assert_square(b, "b").astype(jnp.float64)
  q = utils.assert_square(q, "q").astype(jnp.float64)
  m = b.shape[0]
  if m > MAX_DIMENSION:
    raise ValueError("Dense Lyapunov solves support m <= {}, got {}.".format(
        MAX_DIMENSION, m))
  ident = jnp.eye(m)
  op = jnp.kron(b, ident) + jnp.kron(ident, b)
  x = jnp.linalg.solve(op, -q.reshape(-1)).reshape(m, m)
  return symmetrize(x)


def kalman_matrix(b: typing.ArrayLike, c: typing.ArrayLike) -> jnp.ndarray:
  """Returns the controllability matrix `[C, BC, ..., B^{m-1} C]`."""
  b = jnp.asarray(b, dtype=jnp.float64)
  c = jnp.asarray(c, dtype=jnp.float64)
  blocks = [c]
  for _ in range(b.shape[0] - 1):
    blocks.append(b @ blocks[-1])
  return jnp.concatenate(blocks, axis=1)


def numerical_rank(m: jnp.ndarray, rtol: float) -> int:
  """Counts singular values above `rtol` times the largest one."""
  s = jnp.linalg.svd(m, compute_uv=False)
  if s.size == 0 or float(s[0]) == 0.:
    return 0
  return int(jnp.sum(s > rtol * s[0]))


def van_loan_blocks(b: jnp.ndarray, q: jnp.ndarray,
                    t: float) -> Tuple[jnp.ndarray, jnp.ndarray]:
  """Returns `(e^{tB}, F12)` from `exp(t [[B, Q], [0, -B^T]])`.

  The Gramian `int_0^t e^{sB} Q e^{sB^T} ds` equals `F12 e^{tB^T}`.
  """
  m = b.shape[0]
  block = jnp.block([[b, q], [jnp.zeros((m, m)), -b.T]])
  e = matrix_exp(t * block)
  return e[:m, :m], e[:m, m:]
