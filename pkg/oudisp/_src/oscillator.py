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
"""The imaginary harmonic oscillator `H = Delta - |x|^2/4` on `L^2(dx)`.

`u = e^{-h} f` with `h(x, t) = |x|^2/4 + i m t/2` maps solutions of
`f_t = i L f` to solutions of `u_t = i H u`.
"""

import cmath
import enum
import math
from typing import Optional, Sequence

from absl import logging
import jax.numpy as jnp
from oudisp._src import fourier
from oudisp._src import grid as grid_lib
from oudisp._src import propagator
from oudisp._src import timepoint
from oudisp._src import utils


class Route(enum.Enum):
  GAUGE = "gauge"
  KERNEL = "kernel"


def gauge_exponent(grid: grid_lib.GridSpec,
                   t: float,
                   a: float = 0.25,
                   b: Optional[complex] = None) -> jnp.ndarray:
  """Samples `h(x, t) = a |x|^2 + b t`; `b` defaults to `i m / 2`."""
  if b is None:
    b = 0.5j * grid.m
  return a * grid.radius_squared() + b * t


def riccati_residual(grid: grid_lib.GridSpec,
                     t_samples: Sequence[float],
                     a: float = 0.25,
                     b: Optional[complex] = None) -> float:
  """Largest `|i h_t + Delta h - |Dh|^2 + |x|^2/4|` over grid and times.

  For the quadratic ansatz `h = a |x|^2 + b t` the derivatives are exact:
  `h_t = b`, `Delta h = 2 m a` and `|Dh|^2 = 4 a^2 |x|^2`. The residual
  vanishes identically for `a = 1/4`, `b = i m/2`.

  Args:
    grid: Spatial sample points.
    t_samples: Times. The ansatz residual does not depend on them.
    a: Quadratic coefficient.
    b: Linear-in-time coefficient, `i m / 2` if omitted.

  Returns:
    The maximal residual magnitude.
  """
  if b is None:
    b = 0.5j * grid.m
  r2 = grid.radius_squared()
  worst = 0.
  for _ in t_samples:
    residual = 1j * b + 2. * grid.m * a - 4. * a**2 * r2 + r2 / 4.
    worst = max(worst, float(jnp.max(jnp.abs(residual))))
  return worst


def _gauge_route(u0: grid_lib.ComplexField, t: float,
                 method: propagator.Method) -> jnp.ndarray:
  phi = grid_lib.from_psi_gauge(u0)
  f = propagator.propagate(phi, t, method)
  # e^{-h} with the unreduced t, since e^{-imt/2} has period 4 pi for odd m.
  return jnp.exp(-gauge_exponent(u0.grid, t)) * f.samples


def _kernel_route(u0: grid_lib.ComplexField, t: float) -> jnp.ndarray:
  grid = u0.grid
  tp = timepoint.as_time_point(t)
  phase_factor = cmath.exp(-0.5j * grid.m * tp.t)
  if tp.is_identity:
    return phase_factor * u0.samples
  fourier.check_aliasing(grid, 1. / (4. * math.pi * tp.sin), tp.cot)
  x = grid.axis()
  s, c = tp.sin, math.cos(tp.reduced)
  phase = (c * (x[:, None]**2 + x[None, :]**2) - 2. * jnp.outer(x, x)) / s
  matrix = grid.spacing * jnp.exp(0.25j * phase)
  prefactor = phase_factor * propagator.branch_prefactor(tp, grid.m)
  return prefactor * utils.apply_per_axis(u0.samples, matrix)


def oscillator_propagate(
    u0: grid_lib.ComplexField,
    t: float,
    route: Route = Route.GAUGE,
    method: propagator.Method = propagator.Method.CHIRP_FT,
) -> grid_lib.ComplexField:
  """Computes `e^{itH} u0`.

  Args:
    u0: A `PSI` gauge field with Schwartz-like decay.
    t: Time.
    route: `GAUGE` conjugates `e^{itL}` by `e^{-h}`; `KERNEL` applies the
      unimodular oscillator kernel directly.
    method: How `GAUGE` evaluates `e^{itL}`.

  Returns:
    A `PSI` gauge field.

  Raises:
    GaugeMismatch: If `u0` is not in the `PSI` gauge.
    SingularTime: If `t` is too close to an odd multiple of `pi`.
    GridAliasing: If the grid cannot resolve the kernel.
  """
  grid_lib.require_gauge(u0, grid_lib.Gauge.PSI)
  t = float(t)
  if route is Route.GAUGE:
    samples = _gauge_route(u0, t, method)
  elif route is Route.KERNEL:
    samples = _kernel_route(u0, t)
  else:
    raise ValueError("Unknown route {!r}.".format(route))
  return grid_lib.ComplexField(u0.grid, samples, grid_lib.Gauge.PSI)


def compare_routes(u0: grid_lib.ComplexField,
                   t: float,
                   method: propagator.Method = propagator.Method.CHIRP_FT
                  ) -> float:
  """Relative `L^2` difference of the two routes on `|x| <= L/2`.

  The gauge route passes through the `PHI` gauge, whose weight `e^{|x|^2/4}`
  is largest at the boundary, so the outer half of the grid is left out.
  """
  grid = u0.grid
  logging.info("Comparing oscillator routes on |x| <= %g.", grid.extent / 2)
  gauge = oscillator_propagate(u0, t, Route.GAUGE, method)
  kernel = oscillator_propagate(u0, t, Route.KERNEL)
  mask = grid_lib.interior_mask(grid, grid.extent / 2)
  return utils.relative_error(gauge.samples, kernel.samples, mask)
