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
"""Testing utilities for oudisp."""

import functools
import inspect
import itertools
import types
from typing import Optional, Sequence, Text, Tuple

from absl.testing import parameterized
import numpy as np
from oudisp._src import grid as grid_lib
from oudisp._src import utils


def find_public_modules(
    root_module: types.ModuleType,
) -> Sequence[Tuple[Text, types.ModuleType]]:
  """Returns `(name, module)` for the public oudisp modules with `__all__`.

  Modules under `oudisp._src` are skipped even when an import has attached
  `_src` to the package.
  """
  found = {root_module.__name__: root_module}
  to_visit = [root_module]
  while to_visit:
    mod = to_visit.pop()
    for name in getattr(mod, "__all__", ()):
      obj = getattr(mod, name)
      if (inspect.ismodule(obj) and obj.__name__.startswith("oudisp.") and
          "._src" not in obj.__name__ and obj.__name__ not in found):
        found[obj.__name__] = obj
        to_visit.append(obj)
  return sorted(found.items())


def combined_named_parameters(*parameters):
  """Takes the product of `named_parameters` lattices, joining case names.

  >>> routes = ("gauge", "g"), ("kernel", "k")
  >>> @combined_named_parameters(routes, named_times(1., 4.))
  ... def test_route(self, route, t):
  ...   assert route in ("g", "k") and t in (1., 4.)

  The cases above are named `gauge_t_1p0`, `gauge_t_4p0`, `kernel_t_1p0` and
  `kernel_t_4p0`.
  """
  def join(left, right):
    return (left[0] + "_" + right[0],) + tuple(left[1:]) + tuple(right[1:])

  cases = [functools.reduce(join, case)
           for case in itertools.product(*parameters)]
  return parameterized.named_parameters(*cases)


def named_bools(name: Text) -> Sequence[Tuple[Text, bool]]:
  """`(name, True)` and `(not_name, False)`."""
  return (name, True), ("not_{}".format(name), False)


def named_times(*times: float) -> Sequence[Tuple[Text, float]]:
  """Names times for ``named_parameters``, e.g. ``("t_2p5", 2.5)``."""
  return tuple(("t_{}".format(repr(t).replace(".", "p").replace("-", "m")), t)
               for t in times)


def random_psd(rng: np.random.RandomState, m: int, rank: int) -> np.ndarray:
  """Returns a random `[m, m]` symmetric PSD matrix of the given rank."""
  f = rng.randn(m, rank)
  return f @ f.T


def gauss_weight(grid: grid_lib.GridSpec) -> np.ndarray:
  return np.asarray(grid_lib.gauss_density(grid))


def gauss_relative_error(actual: grid_lib.ComplexField,
                         expected: grid_lib.ComplexField,
                         mask: Optional[np.ndarray] = None) -> float:
  """Relative error in the Gaussian weighted norm of two phi-gauge fields."""
  weight = gauss_weight(expected.grid)
  if mask is not None:
    weight = weight * mask
  return utils.relative_error(actual.samples, expected.samples, weight)
