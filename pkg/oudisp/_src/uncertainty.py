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
"""Hardy type uncertainty thresholds for `e^{itL}`.

A solution `f` with `||e^{a |x|^2} f(., 0)||` and `||e^{b |x|^2} f(., s)||`
finite in `L^2(d gamma)` vanishes once `a b sin^2 s >= 1/16`. For Gaussian
states both suprema are explicit, which gives a consistency check of the
threshold and shows it cannot be improved.
"""

import math
from typing import List, NamedTuple, Tuple, Union

from absl import logging
import numpy as np
from oudisp._src import errors
from oudisp._src import gaussian
from oudisp._src import propagator
from oudisp._src import timepoint

HARDY_THRESHOLD = 1. / 16.
TOL_UNC = 1e-9


class UncertaintyRecord(NamedTuple):
  beta0: complex
  s: float
  a_max: float
  b_max: float
  product: float
  threshold: float = HARDY_THRESHOLD


def uncertainty_product(
    beta0: complex, s: Union[float, timepoint.TimePoint]) -> UncertaintyRecord:
  """Decay rates of the Gaussian solution with flat gauge exponent `beta0`.

  `a_max = Re beta0` is the supremum of the admissible `a` at time 0 and
  `b_max = Re beta(s)` the one at time `s`; neither is attained.

  Args:
    beta0: Initial exponent, `Re beta0 > 0`.
    s: Observation time, not a multiple of `pi`.

  Returns:
    The record. Its `product` never exceeds `1/16`.

  Raises:
    OutOfRange: If `Re beta0` is not positive.
    SingularTime: If `s` is a multiple of `pi`.
  """
  state = gaussian.gaussian_state(beta0)
  tp = timepoint.as_time_point(s)
  if tp.is_identity:
    raise errors.SingularTime(
        "s={!r} is a multiple of 2 pi, where sin s vanishes.".format(tp.t))
  a = state.beta.real
  b = propagator.propagate_gaussian(state, tp).beta.real
  product = a * b * tp.sin**2
  if product > HARDY_THRESHOLD + TOL_UNC:
    logging.warning("Gaussian beta0=%r violates the threshold at s=%r: %r.",
                    beta0, tp.t, product)
  return UncertaintyRecord(beta0=state.beta, s=tp.t, a_max=a, b_max=b,
                           product=product)


def _check_rates(a: float, b: float):
  if not a > 0. or not b > 0.:
    raise errors.OutOfRange(
        "Decay rates must be positive, got a={!r}, b={!r}.".format(a, b))


def hardy_reduction(a: float, b: float, s: float) -> Tuple[float, float]:
  """Maps `(a, b, s)` to the pair `(a, 16 pi^2 b sin^2 s)`.

  After chirping, `f(., s)` is a Fourier transform of the chirped datum
  evaluated at `x / (4 pi sin s)`, so decay `e^{-b |x|^2}` of the solution is
  decay `e^{-16 pi^2 b sin^2 s |y|^2}` of that transform.
  """
  _check_rates(a, b)
  return a, 16. * math.pi**2 * b * math.sin(s)**2


def hardy_l2_predicate(a: float, b: float) -> bool:
  """Whether decay `a` of `h` and `b` of its transform force `h = 0`."""
  _check_rates(a, b)
  return a * b >= math.pi**2


def hardy_predicate(a: float,
                    b: float,
                    s: float,
                    tau_sing: float = timepoint.TAU_SING) -> bool:
  """Whether decay rates `a` at time 0 and `b` at time `s` force `f = 0`.

  Times within `tau_sing` of `pi Z` return False since the threshold
  `1 / sin^2 s` is infinite there.

  Args:
    a: Decay rate at time 0.
    b: Decay rate at time `s`.
    s: Observation time.
    tau_sing: Distance to `pi Z` treated as zero.

  Returns:
    True iff `a b sin^2 s >= 1/16`.

  Raises:
    OutOfRange: If `a` or `b` is not positive.

  >>> oudisp.estimates.hardy_predicate(0.25, 0.25, math.pi / 2)
  True
  >>> oudisp.estimates.hardy_predicate(0.25, 0.25, math.pi / 4)
  False
  """
  _check_rates(a, b)
  sin = math.sin(float(s))
  if abs(sin) < tau_sing:
    return False
  return a * b * sin**2 >= HARDY_THRESHOLD


def random_gaussian_states(seed: int, count: int) -> List[complex]:
  """Draws `count` exponents with `0.05 <= Re beta < 3`, `|Im beta| <= 2`."""
  rng = np.random.RandomState(seed)
  re = rng.uniform(0.05, 3., size=count)
  im = rng.uniform(-2., 2., size=count)
  return [complex(r, i) for r, i in zip(re, im)]
