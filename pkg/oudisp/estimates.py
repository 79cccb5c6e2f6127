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
"""Dispersive estimates and uncertainty thresholds."""

from oudisp._src.estimates import conjugate_exponent
from oudisp._src.estimates import dispersive_report
from oudisp._src.estimates import dispersive_rhs_factor
from oudisp._src.estimates import DispersionRecord
from oudisp._src.estimates import extremizer_alpha
from oudisp._src.estimates import friction_bound_curve
from oudisp._src.estimates import gaussian_dispersive_ratio
from oudisp._src.estimates import hausdorff_young_constant
from oudisp._src.uncertainty import hardy_l2_predicate
from oudisp._src.uncertainty import hardy_predicate
from oudisp._src.uncertainty import hardy_reduction
from oudisp._src.uncertainty import uncertainty_product
from oudisp._src.uncertainty import UncertaintyRecord

__all__ = (
    "DispersionRecord",
    "UncertaintyRecord",
    "conjugate_exponent",
    "dispersive_report",
    "dispersive_rhs_factor",
    "extremizer_alpha",
    "friction_bound_curve",
    "gaussian_dispersive_ratio",
    "hardy_l2_predicate",
    "hardy_predicate",
    "hardy_reduction",
    "hausdorff_young_constant",
    "uncertainty_product",
)
