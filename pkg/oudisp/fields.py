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
"""Sampled fields, gauges, norms and scaled Fourier transforms."""

from oudisp._src.fourier import check_aliasing
from oudisp._src.fourier import Engine
from oudisp._src.fourier import fourier_at_scaled
from oudisp._src.fourier import gaussian_fourier
from oudisp._src.fourier import gaussian_spatial
from oudisp._src.gaussian import as_phi
from oudisp._src.gaussian import dispersive_flow
from oudisp._src.gaussian import gaussian_state
from oudisp._src.gaussian import gaussian_state_eval
from oudisp._src.gaussian import GaussianState
from oudisp._src.gaussian import parabolic_flow
from oudisp._src.grid import ComplexField
from oudisp._src.grid import field
from oudisp._src.grid import field_from_function
from oudisp._src.grid import from_psi_gauge
from oudisp._src.grid import Gauge
from oudisp._src.grid import grid_spec
from oudisp._src.grid import GridSpec
from oudisp._src.grid import interior_mask
from oudisp._src.grid import load_field
from oudisp._src.grid import lp_norm
from oudisp._src.grid import norm_gauss
from oudisp._src.grid import norm_l2
from oudisp._src.grid import save_field
from oudisp._src.grid import tail_ratio
from oudisp._src.grid import to_psi_gauge

__all__ = (
    "ComplexField",
    "Engine",
    "Gauge",
    "GaussianState",
    "GridSpec",
    "as_phi",
    "check_aliasing",
    "dispersive_flow",
    "field",
    "field_from_function",
    "fourier_at_scaled",
    "from_psi_gauge",
    "gaussian_fourier",
    "gaussian_spatial",
    "gaussian_state",
    "gaussian_state_eval",
    "grid_spec",
    "interior_mask",
    "load_field",
    "lp_norm",
    "norm_gauss",
    "norm_l2",
    "parabolic_flow",
    "save_field",
    "tail_ratio",
    "to_psi_gauge",
)
