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
"""Operators `tr(Q D^2 f) + <Bx, Df>` and their covariance Gramians."""

import math
from typing import NamedTuple

from absl import logging
import jax.numpy as jnp
from oudisp._src import errors
from oudisp._src import linalg
from oudisp._src import typing
from oudisp._src import utils

TOL_PSD = 1e-12
TOL_PD = 1e-10
TOL_LYAP = 1e-10

# exp(709) is the largest finite double.
_MAX_EXPONENT = 700.


class SystemSpec(NamedTuple):
  """Diffusion matrix `q` and drift matrix `b` of an `m` dimensional operator.

  Build instances with :func:`system` (or one of the presets) so that the
  symmetric positive semidefinite invariant on `q` is checked.
  """
  q: jnp.ndarray
  b: jnp.ndarray

  @property
  def m(self) -> int:
    return self.q.shape[0]


class HypoReport(NamedTuple):
  t: float
  qt: jnp.ndarray
  det_qt: float
  min_eig: float
  kalman_rank: int
  hypoelliptic: bool
  spectral_abscissa: float
  has_invariant_measure: bool


class InvariantMeasure(NamedTuple):
  """Invariant density `(4 pi)^{-m/2} det(Q_inf)^{-1/2} e^{-<P x, x>/4}`.

  Here `P = Q_inf^{-1}`.

  `log_normalizer` is the logarithm of the constant in front.
  """
  q_inf: jnp.ndarray
  log_normalizer: float
  residual: float


def _check_psd(q: jnp.ndarray, tol_psd: float = TOL_PSD):
  scale = linalg.frobenius_norm(q)
  if linalg.frobenius_norm(q - q.T) > tol_psd * max(scale, 1.):
    raise errors.NonPSDInput("Q must be symmetric, got {!r}.".format(q))
  if linalg.min_eigenvalue(q) < -tol_psd * scale:
    raise errors.NonPSDInput(
        "Q must be positive semidefinite, smallest eigenvalue is {!r}.".format(
            linalg.min_eigenvalue(q)))


def system(q: typing.ArrayLike, b: typing.ArrayLike) -> SystemSpec:
  """Validates and builds a :class:`SystemSpec`.

  Args:
    q: `[m, m]` symmetric positive semidefinite diffusion matrix.
    b: `[m, m]` real drift matrix.

  Returns:
    A :class:`SystemSpec` holding float64 copies of `q` and `b`.

  Raises:
    ValueError: If the shapes disagree or `m` exceeds the dense solver cap.
    NonFinite: If an entry is NaN or Inf.
    NonPSDInput: If `q` is not symmetric positive semidefinite.
  """
  q = utils.assert_square(jnp.atleast_2d(jnp.asarray(q, jnp.float64)), "Q")
  b = utils.assert_square(jnp.atleast_2d(jnp.asarray(b, jnp.float64)), "B")
  if q.shape != b.shape:
    raise ValueError("Q and B must have the same shape, got {!r} and {!r}."
                     .format(q.shape, b.shape))
  if q.shape[0] > linalg.MAX_DIMENSION:
    raise ValueError("Dimension must be at most {}, got {}.".format(
        linalg.MAX_DIMENSION, q.shape[0]))
  _check_psd(q)
  return SystemSpec(q=q, b=b)


def ornstein_uhlenbeck(m: int = 1) -> SystemSpec:
  """The model operator `Delta - <x, D>`: `Q = I`, `B = -I`."""
  return system(jnp.eye(m), -jnp.eye(m))


def kolmogorov(n: int = 1) -> SystemSpec:
  """Kolmogorov operator `Delta_v + <v, D_x>` on `(v, x)` in `R^{2n}`."""
  zero = jnp.zeros((n, n))
  ident = jnp.eye(n)
  q = jnp.block([[ident, zero], [zero, zero]])
  b = jnp.block([[zero, zero], [ident, zero]])
  return system(q, b)


def smoluchowski_kramers() -> SystemSpec:
  """Damped oscillator with drift eigenvalues `-1 +- i`."""
  return system([[1., 0.], [0., 0.]], [[-2., -2.], [1., 0.]])


def spectral_abscissa(b: typing.ArrayLike) -> float:
  return linalg.spectral_abscissa(b)


def drift_flow(sys: SystemSpec, t: float) -> jnp.ndarray:
  """Returns `e^{tB}`."""
  return linalg.matrix_exp(t * sys.b)


def covariance_gramian(sys: SystemSpec, t: float) -> jnp.ndarray:
  """Computes `Q(t) = int_0^t e^{sB} Q e^{sB^T} ds` by Van Loan's method.

  Args:
    sys: The system.
    t: A positive time.

  Returns:
    The symmetrised `[m, m]` Gramian.

  Raises:
    OutOfRange: If `t <= 0`.
    Overflow: If `e^{tB}` or `e^{-tB^T}` would not be representable.
  """
  t = float(t)
  if not t > 0:
    raise errors.OutOfRange("t must be positive, got {!r}.".format(t))
  eigs = jnp.linalg.eigvals(sys.b)
  if t * float(jnp.max(jnp.abs(jnp.real(eigs)))) > _MAX_EXPONENT:
    raise errors.Overflow(
        "t * |Re spectrum(B)| exceeds {} at t={!r}.".format(_MAX_EXPONENT, t))
  f11, f12 = linalg.van_loan_blocks(sys.b, sys.q, t)
  qt = linalg.symmetrize(f12 @ f11.T)
  if not bool(jnp.all(jnp.isfinite(qt))):
    raise errors.Overflow("Q(t) is not finite at t={!r}.".format(t))
  return qt


def is_positive_definite(qt: jnp.ndarray, tol_pd: float = TOL_PD) -> bool:
  return linalg.min_eigenvalue(qt) > tol_pd * linalg.frobenius_norm(qt)


def hypoellipticity_check(sys: SystemSpec,
                          t: float,
                          tol_pd: float = TOL_PD) -> HypoReport:
  """Classifies `sys` by Gramian positivity and by the Kalman rank condition.

  Args:
    sys: The system.
    t: A positive time at which to evaluate the Gramian.
    tol_pd: Relative threshold for both positivity and numerical rank.

  Returns:
    A :class:`HypoReport`.

  Raises:
    NonPSDInput: If `sys.q` is not symmetric positive semidefinite.
  """
  _check_psd(sys.q)
  qt = covariance_gramian(sys, t)
  hypoelliptic = is_positive_definite(qt, tol_pd)
  rank = linalg.numerical_rank(
      linalg.kalman_matrix(sys.b, linalg.psd_sqrt(sys.q, tol_pd)), tol_pd)
  if hypoelliptic != (rank == sys.m):
    logging.warning(
        "Gramian verdict (%s) and Kalman rank %d/%d disagree at t=%g.",
        hypoelliptic, rank, sys.m, t)
  abscissa = linalg.spectral_abscissa(sys.b)
  return HypoReport(
      t=float(t),
      qt=qt,
      det_qt=float(jnp.linalg.det(qt)),
      min_eig=linalg.min_eigenvalue(qt),
      kalman_rank=rank,
      hypoelliptic=hypoelliptic,
      spectral_abscissa=abscissa,
      has_invariant_measure=abscissa < 0)


def invariant_measure(sys: SystemSpec) -> InvariantMeasure:
  """Solves `B Q_inf + Q_inf B^T + Q = 0` for the invariant covariance.

  Args:
    sys: A system whose drift spectrum lies in the open left half plane.

  Returns:
    The :class:`InvariantMeasure`.

  Raises:
    NoInvariantMeasure: If the spectral abscissa of `B` is non-negative or the
      resulting `Q_inf` is singular.
  """
  abscissa = linalg.spectral_abscissa(sys.b)
  if abscissa >= 0:
    raise errors.NoInvariantMeasure(
        "Spectral abscissa of B is {!r} >= 0.".format(abscissa))
  q_inf = linalg.lyapunov_solve(sys.b, sys.q)
  if not is_positive_definite(q_inf):
    raise errors.NoInvariantMeasure(
        "Q_inf is not positive definite: {!r}.".format(q_inf))
  residual = linalg.frobenius_norm(sys.b @ q_inf + q_inf @ sys.b.T + sys.q)
  if residual > TOL_LYAP * max(linalg.frobenius_norm(sys.q), 1.):
    logging.warning("Lyapunov residual %g exceeds tolerance.", residual)
  _, logdet = jnp.linalg.slogdet(q_inf)
  log_normalizer = -0.5 * sys.m * math.log(4 * math.pi) - 0.5 * float(logdet)
  return InvariantMeasure(
      q_inf=q_inf, log_normalizer=log_normalizer, residual=residual)


def invariant_density(measure: InvariantMeasure,
                      x: typing.Point) -> jnp.ndarray:
  """Evaluates the invariant density at `x` (coordinates on the last axis)."""
  x = jnp.asarray(x, dtype=jnp.float64)
  quad = jnp.einsum("...i,ij,...j->...", x, jnp.linalg.inv(measure.q_inf), x)
  return jnp.exp(measure.log_normalizer - quad / 4.)
