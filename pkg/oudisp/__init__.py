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
"""oudisp: a numerical laboratory for the Ornstein-Uhlenbeck Schroedinger group.

Importing the package enables 64-bit arithmetic in JAX.
"""

import jax

jax.config.update("jax_enable_x64", True)

# pylint: disable=g-import-not-at-top,wrong-import-position
from oudisp import errors
from oudisp import estimates
from oudisp import fields
from oudisp import kernels
from oudisp import lti
from oudisp import testing
from oudisp._src.config import load_config
from oudisp._src.config import RunConfig
from oudisp._src.hermite import hermite_analyze
from oudisp._src.hermite import hermite_datum
from oudisp._src.hermite import hermite_synthesize
from oudisp._src.hermite import HermiteCoeffs
from oudisp._src.oscillator import compare_routes
from oudisp._src.oscillator import oscillator_propagate
from oudisp._src.oscillator import riccati_residual
from oudisp._src.oscillator import Route
from oudisp._src.pipelines import run
from oudisp._src.propagator import Method
from oudisp._src.propagator import propagate
from oudisp._src.propagator import propagate_gaussian
from oudisp._src.timepoint import Branch
from oudisp._src.timepoint import time_point
from oudisp._src.timepoint import TimePoint
# pylint: enable=g-import-not-at-top,wrong-import-position

__version__ = "0.1.0"

__all__ = (
    "Branch",
    "HermiteCoeffs",
    "Method",
    "Route",
    "RunConfig",
    "TimePoint",
    "compare_routes",
    "errors",
    "estimates",
    "fields",
    "hermite_analyze",
    "hermite_datum",
    "hermite_synthesize",
    "kernels",
    "load_config",
    "lti",
    "oscillator_propagate",
    "propagate",
    "propagate_gaussian",
    "riccati_residual",
    "run",
    "testing",
    "time_point",
)

#  _________________________________________
# / Please don't use symbols in `_src` they \
# \ are not part of the oudisp public API.  /
#  -----------------------------------------
#         \   ^__^
#          \  (oo)\_______
#             (__)\       )\/\
#                 ||----w |
#                 ||     ||
#
try:
  del _src  # pylint: disable=undefined-variable
except NameError:
  pass
