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
"""Linear drift-diffusion systems and their covariance Gramians."""

from oudisp._src.lti import covariance_gramian
from oudisp._src.lti import drift_flow
from oudisp._src.lti import HypoReport
from oudisp._src.lti import hypoellipticity_check
from oudisp._src.lti import invariant_density
from oudisp._src.lti import invariant_measure
from oudisp._src.lti import InvariantMeasure
from oudisp._src.lti import kolmogorov
from oudisp._src.lti import ornstein_uhlenbeck
from oudisp._src.lti import smoluchowski_kramers
from oudisp._src.lti import spectral_abscissa
from oudisp._src.lti import system
from oudisp._src.lti import SystemSpec

__all__ = (
    "HypoReport",
    "InvariantMeasure",
    "SystemSpec",
    "covariance_gramian",
    "drift_flow",
    "hypoellipticity_check",
    "invariant_density",
    "invariant_measure",
    "kolmogorov",
    "ornstein_uhlenbeck",
    "smoluchowski_kramers",
    "spectral_abscissa",
    "system",
)
