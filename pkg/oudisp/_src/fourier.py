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
"""Fourier transforms at scaled frequencies and Gaussian Fourier pairs.

Throughout, `Fg(xi) = int g(x) e^{-2 pi i <xi, x>} dx`.
"""

import enum
import math

from absl import logging
import jax.numpy as jnp
from oudisp._src import errors
from oudisp._src import grid as grid_lib
from oudisp._src import typing

ALIAS_MARGIN = 0.1


class Engine(enum.Enum):
  CZT = "czt"
  DIRECT = "direct"


def phase_increment_bound(grid: grid_lib.GridSpec,
                          scale: float,
                          chirp: float = 0.) -> float:
  """Bounds the phase change per grid step of `g(y) e^{-2 pi i scale x y}`.

  Args:
    grid: The grid.
    scale: Frequency scale, frequencies are `scale * x_j`.
    chirp: Coefficient `c` of a quadratic phase `e^{i c |y|^2 / 4}` carried by
      `g`, if any.

  Returns:
    `|c| L h / 2 + 2 pi |scale| L h`.
  """
  lh = grid.extent * grid.spacing
  return abs(chirp) * lh / 2. + 2. * math.pi * abs(scale) * lh


def check_aliasing(grid: grid_lib.GridSpec, scale: float, chirp: float = 0.):
  """Raises `GridAliasing` if the integrand is under-resolved."""
  bound = phase_increment_bound(grid, scale, chirp)
  limit = math.pi * (1. - ALIAS_MARGIN)
  logging.debug("Phase increment bound %.3f (limit %.3f).", bound, limit)
  if bound > limit:
    raise errors.GridAliasing(
        "Phase increment per grid step {:.4f} exceeds {:.4f} (scale={!r}, "
        "chirp={!r}, L={!r}, N={!r}).".format(bound, limit, scale, chirp,
                                              grid.extent, grid.n_points))


def _czt_last_axis(a: jnp.ndarray, grid: grid_lib.GridSpec,
                   scale: float) -> jnp.ndarray:
  """Bluestein evaluation of `h sum_k a_k e^{-2 pi i scale x_j x_k}`."""
  n = grid.n_points
  h = grid.spacing
  lh = grid.extent * h
  k = jnp.arange(n, dtype=jnp.float64)
  # x_j x_k = L^2 - L h (j + k) + h^2 j k and 2 j k = j^2 + k^2 - (k - j)^2.
  w = math.pi * scale * h * h
  shift = jnp.exp(2j * math.pi * scale * lh * k)
  chirp = jnp.exp(-1j * w * k**2)

  nfft = 1
  while nfft < 2 * n - 1:
    nfft *= 2
  lag = jnp.arange(nfft, dtype=jnp.float64)
  lag = jnp.where(lag < n, lag, nfft - lag)
  kernel = jnp.where(jnp.arange(nfft) < n, 1., 0.) + jnp.where(
      jnp.arange(nfft) > nfft - n, 1., 0.)
  kernel = kernel * jnp.exp(1j * w * lag**2)

  x = jnp.fft.fft(a * shift * chirp, n=nfft, axis=-1)
  y = jnp.fft.ifft(x * jnp.fft.fft(kernel), axis=-1)[..., :n]
  phase = h * jnp.exp(-2j * math.pi * scale * grid.extent**2)
  return phase * shift * chirp * y


def _direct_matrix(grid: grid_lib.GridSpec, scale: float) -> jnp.ndarray:
  x = grid.axis()
  return grid.spacing * jnp.exp(-2j * math.pi * scale * jnp.outer(x, x))


def fourier_at_scaled(g: grid_lib.ComplexField,
                      scale: float,
                      engine: Engine = Engine.CZT,
                      chirp: float = 0.) -> grid_lib.ComplexField:
  """Evaluates `Fg(scale * x_j)` at every grid point `x_j`.

  Args:
    g: The field to transform. Its gauge tag is carried over unchanged.
    scale: Nonzero frequency scale.
    engine: `CZT` for the Bluestein factorisation, `DIRECT` for the explicit
      `O(N^2)` per axis summation.
    chirp: Coefficient of a quadratic phase carried by `g`, used by the alias
      guard only.

  Returns:
    A field on the same grid.

  Raises:
    OutOfRange: If `scale` is zero or not finite.
    GridAliasing: If the grid cannot resolve the integrand.
  """
  scale = float(scale)
  if scale == 0. or not math.isfinite(scale):
    raise errors.OutOfRange("scale must be finite and nonzero, got {!r}."
                            .format(scale))
  check_aliasing(g.grid, scale, chirp)
  samples = g.samples
  if engine is Engine.CZT:
    for axis in range(g.grid.m):
      samples = jnp.moveaxis(
          _czt_last_axis(jnp.moveaxis(samples, axis, -1), g.grid, scale),
          -1, axis)
  elif engine is Engine.DIRECT:
    matrix = _direct_matrix(g.grid, scale)
    for axis in range(g.grid.m):
      samples = jnp.moveaxis(
          jnp.tensordot(matrix, samples, axes=([1], [axis])), 0, axis)
  else:
    raise ValueError("Unknown engine {!r}.".format(engine))
  return grid_lib.ComplexField(g.grid, samples, g.gauge)


def _check_exponent_matrix(a: typing.ArrayLike) -> jnp.ndarray:
  a = jnp.atleast_2d(jnp.asarray(a, dtype=jnp.complex128))
  if a.ndim != 2 or a.shape[0] != a.shape[1]:
    raise errors.OutOfRange("A must be square, got shape {!r}.".format(a.shape))
  scale = max(float(jnp.max(jnp.abs(a))), 1.)
  if float(jnp.max(jnp.abs(a - a.T))) > 1e-12 * scale:
    raise errors.OutOfRange("A must be symmetric, got {!r}.".format(a))
  re = 0.5 * (jnp.real(a) + jnp.real(a).T)
  if float(jnp.linalg.eigvalsh(re)[0]) < -1e-12 * scale:
    raise errors.OutOfRange("Re A must be positive semidefinite.")
  eigs = jnp.linalg.eigvals(a)
  if float(jnp.min(jnp.abs(eigs))) <= 1e-14 * scale:
    raise errors.SingularA("A is singular, eigenvalues {!r}.".format(eigs))
  return a


def analytic_sqrt_det(a: typing.ArrayLike) -> complex:
  """`sqrt(det A)` on the branch continuous from positive definite real `A`.

  Eigenvalues of admissible `A` have non-negative real part, so the principal
  root of each eigenvalue is continuous along the segment to the identity.
  """
  a = _check_exponent_matrix(a)
  return complex(jnp.prod(jnp.sqrt(jnp.linalg.eigvals(a))))


def gaussian_fourier(a: typing.ArrayLike, xi: typing.Point) -> jnp.ndarray:
  """Returns `F[g_A](xi) = e^{-4 pi^2 <A xi, xi>}`.

  Here `g_A(x) = (4 pi)^{-m/2} det(A)^{-1/2} e^{-<A^{-1} x, x>/4}`, see
  :func:`gaussian_spatial`.

  Args:
    a: `[m, m]` complex symmetric matrix with positive semidefinite real part.
    xi: Frequency, or a batch of frequencies with coordinates last.

  Returns:
    The transform, one value per frequency.

  Raises:
    SingularA: If `A` is not invertible.
  """
  a = _check_exponent_matrix(a)
  xi = jnp.asarray(xi, dtype=jnp.float64)
  quad = jnp.einsum("...i,ij,...j->...", xi, a, xi)
  return jnp.exp(-4. * math.pi**2 * quad)


def gaussian_spatial(a: typing.ArrayLike, x: typing.Point) -> jnp.ndarray:
  """Returns `(4 pi)^{-m/2} det(A)^{-1/2} e^{-<A^{-1} x, x>/4}`."""
  a = _check_exponent_matrix(a)
  x = jnp.asarray(x, dtype=jnp.float64)
  m = a.shape[0]
  quad = jnp.einsum("...i,ij,...j->...", x, jnp.linalg.inv(a), x)
  return ((4. * math.pi) ** (-m / 2) / analytic_sqrt_det(a) *
          jnp.exp(-quad / 4.))
