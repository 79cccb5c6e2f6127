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
"""Times reduced modulo the period of the Ornstein-Uhlenbeck group."""

import enum
import math
from typing import NamedTuple, Optional, Union

from oudisp._src import errors

TAU_SING = 1e-6
PERIOD = 2. * math.pi


class Branch(enum.Enum):
  """`J_PLUS` is `(0, pi)` and `J_MINUS` is `(pi, 2 pi)` modulo `2 pi`."""
  J_PLUS = "J+"
  J_MINUS = "J-"


class TimePoint(NamedTuple):
  """A time `t = reduced + 2 pi k_period`.

  `branch` is `None` when `t` is within `tau_sing` of a multiple of `2 pi`, in
  which case every propagator acts as the identity.
  """
  t: float
  branch: Optional[Branch]
  k_period: int

  @property
  def reduced(self) -> float:
    return self.t - PERIOD * self.k_period

  @property
  def is_identity(self) -> bool:
    return self.branch is None

  @property
  def sin(self) -> float:
    return math.sin(self.reduced)

  @property
  def cot(self) -> float:
    return math.cos(self.reduced) / math.sin(self.reduced)


def time_point(t: float, tau_sing: float = TAU_SING) -> TimePoint:
  """Classifies `t`.

  Args:
    t: Any finite real time.
    tau_sing: Distance to `pi Z` below which `t` counts as singular.

  Returns:
    The :class:`TimePoint`.

  Raises:
    NonFinite: If `t` is NaN or infinite.
    SingularTime: If `t` lies within `tau_sing` of an odd multiple of `pi`.

  >>> oudisp.time_point(4.).branch is oudisp.Branch.J_MINUS
  True
  >>> oudisp.time_point(2 * math.pi + 1.).k_period
  1
  """
  t = float(t)
  if not math.isfinite(t):
    raise errors.NonFinite("t={!r} is not finite.".format(t))
  k = math.floor(t / PERIOD)
  r = t - PERIOD * k
  if r < tau_sing:
    return TimePoint(t=t, branch=None, k_period=k)
  if PERIOD - r < tau_sing:
    return TimePoint(t=t, branch=None, k_period=k + 1)
  if abs(r - math.pi) < tau_sing:
    raise errors.SingularTime(
        "t={!r} is within {} of an odd multiple of pi.".format(t, tau_sing))
  branch = Branch.J_PLUS if r < math.pi else Branch.J_MINUS
  return TimePoint(t=t, branch=branch, k_period=k)


def as_time_point(t: Union[float, TimePoint]) -> TimePoint:
  return t if isinstance(t, TimePoint) else time_point(t)


def is_full_period(t: float, tau_sing: float = TAU_SING) -> bool:
  """Whether `t` lies within `tau_sing` of a multiple of `2 pi`."""
  return abs(math.remainder(float(t), PERIOD)) < tau_sing
