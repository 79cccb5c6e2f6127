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
"""Closed-form parabolic kernels and kernel quadrature."""

import math
from typing import NamedTuple, Tuple

from absl import logging
import jax.numpy as jnp
from oudisp._src import errors
from oudisp._src import grid as grid_lib
from oudisp._src import linalg
from oudisp._src import lti
from oudisp._src import typing

# Dense quadrature stores an N^m x N^m kernel matrix.
MAX_DENSE_POINTS = 4096
MIN_WIDTH_IN_SPACINGS = 3.


class KernelSample(NamedTuple):
  value: float
  x: jnp.ndarray
  y: jnp.ndarray
  t: float


class _GaussianKernel(NamedTuple):
  flow: jnp.ndarray  # e^{tB}
  precision: jnp.ndarray  # Q(t)^{-1}
  log_prefactor: float


def _gaussian_kernel(sys: lti.SystemSpec, t: float) -> _GaussianKernel:
  qt = lti.covariance_gramian(sys, t)
  if not lti.is_positive_definite(qt):
    raise errors.NotHypoelliptic(
        "Q(t) is singular at t={!r}, smallest eigenvalue {!r}.".format(
            t, linalg.min_eigenvalue(qt)))
  _, logdet = jnp.linalg.slogdet(qt)
  return _GaussianKernel(
      flow=lti.drift_flow(sys, t),
      precision=jnp.linalg.inv(qt),
      log_prefactor=-0.5 * sys.m * math.log(4 * math.pi) - 0.5 * float(logdet))


def _as_points(v: typing.Point) -> jnp.ndarray:
  """Coordinates on the last axis; a scalar is a point of `R^1`."""
  return jnp.atleast_1d(jnp.asarray(v, dtype=jnp.float64))


def _evaluate(kernel: _GaussianKernel, x: jnp.ndarray,
              y: jnp.ndarray) -> jnp.ndarray:
  d = y - jnp.einsum("ij,...j->...i", kernel.flow, x)
  quad = jnp.einsum("...i,ij,...j->...", d, kernel.precision, d)
  return jnp.exp(kernel.log_prefactor - quad / 4.)


def hormander_kernel(sys: lti.SystemSpec, x: typing.Point, y: typing.Point,
                     t: float) -> jnp.ndarray:
  """Fundamental solution of `d_t u = tr(Q D^2 u) + <Bx, Du>`.

      G(x, y, t) = (4 pi)^{-m/2} det Q(t)^{-1/2}
                   exp(-<Q(t)^{-1} (y - e^{tB} x), y - e^{tB} x> / 4)

  Args:
    sys: The system.
    x: Starting point(s), coordinates on the last axis. A scalar is a point
      of `R^1`.
    y: End point(s), broadcastable against `x`.
    t: Positive time.

  Returns:
    The kernel values, one per broadcast pair of points.

  Raises:
    NotHypoelliptic: If `Q(t)` is singular at the positivity threshold.
    OutOfRange: If the points are not in `R^m`.
  """
  x, y = _as_points(x), _as_points(y)
  if x.shape[-1] != sys.m or y.shape[-1] != sys.m:
    raise errors.OutOfRange(
        "Points must have {} coordinates, got shapes {} and {}.".format(
            sys.m, x.shape, y.shape))
  return _evaluate(_gaussian_kernel(sys, t), x, y)


def kolmogorov_kernel(n: int, x: typing.Point, y: typing.Point,
                      xbar: typing.Point, ybar: typing.Point,
                      t: float) -> jnp.ndarray:
  """Explicit fundamental solution of `Delta_x + <x, D_y>` on `R^{2n}`.

  Starting at `(x, y)` (velocity, position) and ending at `(xbar, ybar)`:

      3^{n/2} (2 pi)^{-n} t^{-2n} exp(-(|x - xbar|^2
          + 12 |(y - ybar)/t + (x + xbar)/2|^2) / (4t))

  This equals `hormander_kernel(lti.kolmogorov(n), (x, y), (xbar, ybar), t)`.
  The position drifts by the velocity, so `(ybar - y) / t` is compared with
  the mean velocity `(x + xbar) / 2`.
  """
  t = float(t)
  if not t > 0:
    raise errors.OutOfRange("t must be positive, got {!r}.".format(t))
  x, y, xbar, ybar = (_as_points(v) for v in (x, y, xbar, ybar))
  a = xbar - x
  b = (ybar - y - t * x) / t - a / 2.
  quad = jnp.sum(a**2, axis=-1) + 12. * jnp.sum(b**2, axis=-1)
  return (3. ** (n / 2) * (2 * math.pi) ** (-n) * t ** (-2 * n) *
          jnp.exp(-quad / (4. * t)))


def mehler_kernel(omega: float, x: typing.Point, y: typing.Point,
                  t: float) -> jnp.ndarray:
  """Mehler kernel of `Delta - 2 sqrt(omega) <x, D>`.

      (4 pi)^{-m/2} e^{m t r} (2r / sinh(2tr))^{m/2}
          exp(-(r / (2 sinh(2tr))) |e^{tr} y - e^{-tr} x|^2),  r = sqrt(omega)
  """
  if not omega > 0 or not t > 0:
    raise errors.OutOfRange("omega and t must be positive, got {!r}, {!r}."
                            .format(omega, t))
  x, y = _as_points(x), _as_points(y)
  m = x.shape[-1]
  r = math.sqrt(omega)
  sh = math.sinh(2. * t * r)
  d = math.exp(t * r) * y - math.exp(-t * r) * x
  return ((4 * math.pi) ** (-m / 2) * math.exp(m * t * r) *
          (2. * r / sh) ** (m / 2) *
          jnp.exp(-(r / (2. * sh)) * jnp.sum(d**2, axis=-1)))


def kernel_sample(sys: lti.SystemSpec, x: typing.Point, y: typing.Point,
                  t: float) -> KernelSample:
  x, y = _as_points(x), _as_points(y)
  return KernelSample(value=float(hormander_kernel(sys, x, y, t)), x=x, y=y,
                      t=float(t))


def kernel_mass(sys: lti.SystemSpec, x: typing.Point, t: float,
                grid: grid_lib.GridSpec) -> float:
  """Trapezoid approximation of `int G(x, y, t) dy` over the grid."""
  values = hormander_kernel(sys, x, grid.points(), t)
  return float(jnp.sum(values)) * grid.cell_volume


def compose_kernels(sys: lti.SystemSpec, x: typing.Point, y: typing.Point,
                    t: float, s: float, grid: grid_lib.GridSpec) -> float:
  """Trapezoid approximation of `int G(x, z, t) G(z, y, s) dz`.

  By the semigroup law this equals `G(x, y, t + s)`.
  """
  z = grid.points()
  first = hormander_kernel(sys, x, z, t)
  second = hormander_kernel(sys, z, y, s)
  return float(jnp.sum(first * second)) * grid.cell_volume


def _is_diagonal(a: jnp.ndarray) -> bool:
  return bool(jnp.all(a == jnp.diag(jnp.diag(a))))


def _axis_systems(sys: lti.SystemSpec) -> Tuple[lti.SystemSpec, ...]:
  return tuple(
      lti.system([[sys.q[i, i]]], [[sys.b[i, i]]]) for i in range(sys.m))


def _check_width(qt: jnp.ndarray, grid: grid_lib.GridSpec):
  width = float(jnp.sqrt(2. * jnp.min(jnp.diag(qt))))
  if width < MIN_WIDTH_IN_SPACINGS * grid.spacing:
    raise errors.GridTooCoarse(
        "Kernel width {:.4g} is below {} grid spacings of {:.4g}.".format(
            width, MIN_WIDTH_IN_SPACINGS, grid.spacing))


def heat_evolve(sys: lti.SystemSpec, phi: grid_lib.ComplexField,
                t: float) -> grid_lib.ComplexField:
  """Computes `u(x, t) = int G(x, y, t) phi(y) dy` by trapezoid quadrature.

  The kernel is applied one axis at a time when `Q` and `B` are diagonal and
  as a dense matrix otherwise, which is limited to `N^m <= 4096` points.

  Args:
    sys: The system, of the same dimension as the grid.
    phi: Initial datum in the `PHI` gauge.
    t: Positive time.

  Returns:
    The evolved field in the `PHI` gauge.

  Raises:
    GaugeMismatch: If `phi` is not in the `PHI` gauge.
    NotHypoelliptic: If `Q(t)` is singular.
    GridTooCoarse: If the kernel is narrower than three grid spacings.
    OutOfRange: On a dimension mismatch or a too large dense quadrature.
  """
  grid_lib.require_gauge(phi, grid_lib.Gauge.PHI)
  grid = phi.grid
  if sys.m != grid.m:
    raise errors.OutOfRange("System dimension {} does not match grid {}."
                            .format(sys.m, grid.m))
  kernel = _gaussian_kernel(sys, t)
  _check_width(jnp.linalg.inv(kernel.precision), grid)
  h = grid.spacing

  if _is_diagonal(sys.q) and _is_diagonal(sys.b):
    samples = phi.samples
    axis = grid.axis()
    for i, axis_sys in enumerate(_axis_systems(sys)):
      matrix = h * hormander_kernel(axis_sys, axis[:, None, None],
                                    axis[None, :, None], t)
      samples = jnp.moveaxis(
          jnp.tensordot(matrix, samples, axes=([1], [i])), 0, i)
    return grid_lib.ComplexField(grid, samples, grid_lib.Gauge.PHI)

  size = grid.n_points ** grid.m
  if size > MAX_DENSE_POINTS:
    raise errors.OutOfRange(
        "Dense quadrature supports at most {} points, got {}.".format(
            MAX_DENSE_POINTS, size))
  logging.info("Dense kernel quadrature on %d points.", size)
  points = grid.points().reshape(size, grid.m)
  matrix = grid.cell_volume * _evaluate(kernel, points[:, None, :],
                                        points[None, :, :])
  samples = (matrix @ phi.samples.reshape(size)).reshape(grid.shape)
  return grid_lib.ComplexField(grid, samples, grid_lib.Gauge.PHI)
