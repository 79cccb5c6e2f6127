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
"""Weighted dispersive estimates for `e^{itL}`.

For `1 <= p <= 2` and `t` not a multiple of `pi`,

    ||e^{-|x|^2/4} e^{itL} phi||_{p'} <=
        C_p (4 pi |sin t|)^{-m (1/2 - 1/p')} ||e^{-|x|^2/4} phi||_p,

with `C_p = (p^{1/p} / p'^{1/p'})^{m/2}` the sharp Hausdorff-Young constant.
Equality holds for Gaussians whose chirped flat gauge form is real.
"""

import math
from typing import NamedTuple, Optional, Union

from absl import logging
from oudisp._src import errors
from oudisp._src import fourier
from oudisp._src import grid as grid_lib
from oudisp._src import propagator
from oudisp._src import timepoint

TOL_DISP = 1e-6


class DispersionRecord(NamedTuple):
  p: float
  p_prime: float
  t: float
  lhs: float
  rhs: float
  ratio: float


def conjugate_exponent(p: float) -> float:
  """Returns `p'` with `1/p + 1/p' = 1`, `inf` for `p = 1`.

  Raises:
    OutOfRange: If `p` is outside `[1, 2]`.
  """
  p = float(p)
  if not 1. <= p <= 2.:
    raise errors.OutOfRange("p must lie in [1, 2], got {!r}.".format(p))
  if p == 1.:
    return math.inf
  return p / (p - 1.)


def decay_exponent(p: float, m: int) -> float:
  """`m (1/2 - 1/p')`, the power of `|sin t|^{-1}` in the estimate."""
  q = conjugate_exponent(p)
  return m * (0.5 - 1. / q)


def hausdorff_young_constant(p: float, m: int) -> float:
  """`(p^{1/p} / p'^{1/p'})^{m/2}`; the `p = 1` limit is 1.

  >>> round(oudisp.estimates.hausdorff_young_constant(4 / 3, 1), 7)
  0.9366871
  """
  q = conjugate_exponent(p)
  if math.isinf(q):
    return 1.
  return (p ** (1. / p) / q ** (1. / q)) ** (m / 2.)


def _require_time(t: Union[float, timepoint.TimePoint]) -> timepoint.TimePoint:
  tp = timepoint.as_time_point(t)
  if tp.is_identity:
    raise errors.SingularTime(
        "t={!r} is a multiple of 2 pi, where the estimate does not "
        "apply.".format(tp.t))
  return tp


def dispersive_rhs_factor(p: float, m: int,
                          t: Union[float, timepoint.TimePoint]) -> float:
  """`C_p (4 pi |sin t|)^{-m (1/2 - 1/p')}`.

  Raises:
    OutOfRange: If `p` is outside `[1, 2]`.
    SingularTime: If `t` is a multiple of `pi`.
  """
  exponent = decay_exponent(p, m)
  tp = _require_time(t)
  return (hausdorff_young_constant(p, m) *
          (4. * math.pi * abs(tp.sin)) ** (-exponent))


def dispersive_report(
    phi: grid_lib.ComplexField,
    p: float,
    t: Union[float, timepoint.TimePoint],
    method: propagator.Method = propagator.Method.CHIRP_FT,
    engine: fourier.Engine = fourier.Engine.CZT,
    order: Optional[int] = None,
) -> DispersionRecord:
  """Evaluates both sides of the dispersive estimate on the grid.

  The `p' = inf` norm is the grid maximum, so it depends on whether the grid
  contains the peak of the propagated field.

  Args:
    phi: Datum in the `PHI` gauge.
    p: Exponent in `[1, 2]`.
    t: Time, not a multiple of `pi`.
    method: Propagation method.
    engine: Fourier engine for `CHIRP_FT`.
    order: Hermite truncation for `HERMITE`.

  Returns:
    The record. `ratio = lhs / rhs` never exceeds `1 + TOL_DISP` for data the
    grid resolves.

  Raises:
    OutOfRange: If `p` is outside `[1, 2]` or `phi` vanishes.
    SingularTime: If `t` is a multiple of `pi`.
  """
  q = conjugate_exponent(p)
  tp = _require_time(t)
  grid = phi.grid
  f = propagator.propagate(phi, tp, method, engine, order)
  lhs = grid_lib.lp_norm(grid_lib.to_psi_gauge(f), q)
  datum_norm = grid_lib.lp_norm(grid_lib.to_psi_gauge(phi), p)
  if datum_norm == 0.:
    raise errors.OutOfRange("The datum vanishes on the grid.")
  rhs = dispersive_rhs_factor(p, grid.m, tp) * datum_norm
  ratio = lhs / rhs
  if ratio > 1. + TOL_DISP:
    logging.warning("Dispersive ratio %.12g exceeds 1 at p=%r, t=%r.", ratio,
                    p, tp.t)
  return DispersionRecord(p=float(p), p_prime=q, t=tp.t, lhs=lhs, rhs=rhs,
                          ratio=ratio)


def friction_bound_curve(p: float, m: int, t: float) -> float:
  """Envelope `e^{(m/p') t} / (1 - e^{-2t})^{m (1/2 - 1/p')}`.

  This is the shape of the bound for the Schroedinger equation with friction
  with its unspecified constant set to 1, for comparison plots only.

  Raises:
    OutOfRange: If `p` is outside `[1, 2]` or `t` is not positive.
  """
  q = conjugate_exponent(p)
  t = float(t)
  if not 0. < t < math.inf:
    raise errors.OutOfRange("t must be positive, got {!r}.".format(t))
  return (math.exp(m * t / q) /
          (-math.expm1(-2. * t)) ** decay_exponent(p, m))


def extremizer_alpha(t: Union[float, timepoint.TimePoint],
                     alpha_real: float = 0.5) -> complex:
  """`alpha` for which `e^{-alpha |x|^2 + |x|^2/4}` attains equality at `t`.

  The chirped flat gauge datum `e^{-(alpha - i cot(t)/4) |x|^2}` must be a
  real Gaussian, so `alpha = alpha_real + i cot(t) / 4`.

  Raises:
    OutOfRange: If `alpha_real` is not positive.
    SingularTime: If `t` is a multiple of `pi`.
  """
  if not alpha_real > 0.:
    raise errors.OutOfRange(
        "alpha_real must be positive, got {!r}.".format(alpha_real))
  tp = _require_time(t)
  return complex(alpha_real, 0.25 * tp.cot)


def gaussian_dispersive_ratio(alpha: complex, p: float,
                              t: Union[float, timepoint.TimePoint],
                              m: int = 1) -> float:
  """Exact ratio `(Re a / |a|)^{m (1/2 - 1/p')}`, `a = alpha - i cot(t)/4`.

  Raises:
    OutOfRange: If `Re alpha` is not positive or `p` is outside `[1, 2]`.
    SingularTime: If `t` is a multiple of `pi`.
  """
  alpha = complex(alpha)
  if not alpha.real > 0.:
    raise errors.OutOfRange(
        "Re alpha must be positive, got {!r}.".format(alpha))
  exponent = decay_exponent(p, m)
  tp = _require_time(t)
  a = alpha - 0.25j * tp.cot
  return (a.real / abs(a)) ** exponent
