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
"""The Schroedinger group `e^{itL}` of `L = Delta - <x, D>` on `L^2(d gamma)`.

For `t` in `(0, pi)` or `(pi, 2 pi)` the group has the closed form

    e^{itL} phi(x) = P(t) e^{|x|^2/4} e^{i cot(t) |x|^2/4}
                     F(e^{i cot(t) |y|^2/4} psi)(x / (4 pi sin t)),

with `psi = e^{-|y|^2/4} phi` and `F` the Fourier transform with `2 pi` in the
exponent. Other times are reduced modulo `2 pi`, since `e^{2 pi i L} = 1`.
"""

import cmath
import enum
import math
from typing import Optional, Union
import warnings

from absl import logging
import jax.numpy as jnp
from oudisp._src import errors
from oudisp._src import fourier
from oudisp._src import gaussian
from oudisp._src import grid as grid_lib
from oudisp._src import hermite
from oudisp._src import timepoint
from oudisp._src import utils

# Input tails above this fraction of the peak are outside the decay class the
# closed form is valid on.
TAIL_TOLERANCE = 1e-8

TimeLike = Union[float, timepoint.TimePoint]


class Method(enum.Enum):
  CHIRP_FT = "chirp_ft"
  QUADRATURE = "quadrature"
  HERMITE = "hermite"


def branch_prefactor(tp: timepoint.TimePoint, m: int) -> complex:
  """The constant `P(t)` in front of the oscillatory integral.

  `(4 pi)^{-m/2} e^{imt/2} / (e^{i pi m/4} sin(t)^{m/2})` on `(0, pi)` and
  `(4 pi)^{-m/2} e^{imt/2} / (e^{3 i pi m/4} |sin t|^{m/2})` on `(pi, 2 pi)`,
  with `t` the reduced time.

  Args:
    tp: A non identity time.
    m: Dimension.

  Returns:
    The prefactor.
  """
  if tp.is_identity:
    raise ValueError("The identity time has no prefactor.")
  r = tp.reduced
  offset = 0.25 if tp.branch is timepoint.Branch.J_PLUS else 0.75
  return ((4. * math.pi) ** (-m / 2.) * cmath.exp(0.5j * m * r) /
          (cmath.exp(1j * math.pi * offset * m) * abs(tp.sin) ** (m / 2.)))


def _check_input(phi: grid_lib.ComplexField) -> grid_lib.ComplexField:
  psi = grid_lib.to_psi_gauge(phi)
  ratio = grid_lib.tail_ratio(psi)
  if ratio > TAIL_TOLERANCE:
    warnings.warn(
        "Datum tail is {:.3g} of its peak at the grid boundary.".format(ratio),
        errors.TailWarning)
  return psi


def _chirp(grid: grid_lib.GridSpec, cot: float) -> jnp.ndarray:
  return jnp.exp(0.25j * cot * grid.radius_squared())


def _chirp_ft(psi: grid_lib.ComplexField, tp: timepoint.TimePoint,
              engine: fourier.Engine) -> jnp.ndarray:
  grid = psi.grid
  chirp = _chirp(grid, tp.cot)
  chirped = grid_lib.ComplexField(grid, psi.samples * chirp, psi.gauge)
  transformed = fourier.fourier_at_scaled(
      chirped, 1. / (4. * math.pi * tp.sin), engine, chirp=tp.cot)
  return branch_prefactor(tp, grid.m) * chirp * transformed.samples


def oscillatory_matrix(grid: grid_lib.GridSpec,
                       tp: timepoint.TimePoint) -> jnp.ndarray:
  """One axis of `h e^{i (cot t (x^2 + y^2) - 2 x y / sin t) / 4}`."""
  x = grid.axis()
  phase = (tp.cot * (x[:, None]**2 + x[None, :]**2) -
           2. * jnp.outer(x, x) / tp.sin)
  return grid.spacing * jnp.exp(0.25j * phase)


def _quadrature(psi: grid_lib.ComplexField,
                tp: timepoint.TimePoint) -> jnp.ndarray:
  grid = psi.grid
  fourier.check_aliasing(grid, 1. / (4. * math.pi * tp.sin), tp.cot)
  matrix = oscillatory_matrix(grid, tp)
  return branch_prefactor(tp, grid.m) * utils.apply_per_axis(psi.samples,
                                                             matrix)


def propagate(phi: grid_lib.ComplexField,
              t: TimeLike,
              method: Method = Method.CHIRP_FT,
              engine: fourier.Engine = fourier.Engine.CZT,
              order: Optional[int] = None) -> grid_lib.ComplexField:
  """Computes `f(., t) = e^{itL} phi`.

  Args:
    phi: Datum in the `PHI` gauge whose flat gauge samples decay at the grid
      boundary.
    t: A time, or a classified :class:`TimePoint`. `HERMITE` accepts every
      real time including multiples of `pi`.
    method: `CHIRP_FT` multiplies by a chirp, evaluates a scaled Fourier
      transform and multiplies by a second chirp. `QUADRATURE` sums the
      oscillatory kernel directly. `HERMITE` rotates the phases of a Hermite
      expansion.
    engine: Fourier engine for `CHIRP_FT`.
    order: Hermite truncation for `HERMITE`.

  Returns:
    The propagated field in the `PHI` gauge. Within `tau_sing` of a multiple
    of `2 pi` this is a copy of `phi`.

  Raises:
    GaugeMismatch: If `phi` is not in the `PHI` gauge.
    SingularTime: If `t` is too close to an odd multiple of `pi`.
    GridAliasing: If the grid cannot resolve the oscillatory integral.
  """
  psi = _check_input(phi)
  if method is Method.HERMITE:
    t = t.t if isinstance(t, timepoint.TimePoint) else float(t)
    if timepoint.is_full_period(t):
      return grid_lib.ComplexField(phi.grid, phi.samples, phi.gauge)
    coeffs = hermite.hermite_analyze(phi, order)
    return hermite.hermite_synthesize(coeffs, t)

  tp = timepoint.as_time_point(t)
  if tp.is_identity:
    return grid_lib.ComplexField(phi.grid, phi.samples, phi.gauge)
  logging.debug("Propagating to t=%r (%s, reduced %r) with %s.", tp.t,
                tp.branch.value, tp.reduced, method.name)
  if method is Method.CHIRP_FT:
    samples = _chirp_ft(psi, tp, engine)
  elif method is Method.QUADRATURE:
    samples = _quadrature(psi, tp)
  else:
    raise ValueError("Unknown method {!r}.".format(method))
  return grid_lib.from_psi_gauge(
      grid_lib.ComplexField(phi.grid, samples, grid_lib.Gauge.PSI))


def propagate_gaussian(s0: gaussian.GaussianState,
                       t: TimeLike,
                       m: int = 1) -> gaussian.GaussianState:
  """Closed-form image of the flat gauge Gaussian `s0` under `e^{itL}`.

  Chirping turns `psi` into `c e^{-a |y|^2}` with `a = beta - i cot(t)/4`,
  whose transform at `x / (4 pi sin t)` is `c (pi / a)^{m/2} e^{-|x|^2 /
  (16 a sin^2 t)}`. Hence

      beta(t) = 1 / (16 a sin^2 t) - i cot(t) / 4,
      c(t) = P(t) c (pi / a)^{m/2},

  using the principal root since `Re a = Re beta > 0`.

  Args:
    s0: Initial state.
    t: Time.
    m: Dimension.

  Returns:
    The state at time `t`.

  Raises:
    SingularTime: If `t` is too close to an odd multiple of `pi`.
  """
  tp = timepoint.as_time_point(t)
  if tp.is_identity:
    return s0
  a = s0.beta - 0.25j * tp.cot
  beta = 1. / (16. * a * tp.sin**2) - 0.25j * tp.cot
  c = branch_prefactor(tp, m) * s0.c * cmath.sqrt(math.pi / a) ** m
  return gaussian.gaussian_state(beta, c)
