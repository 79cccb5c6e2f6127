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
"""Exceptions and warnings."""

from oudisp._src.errors import ConfigError
from oudisp._src.errors import GaugeMismatch
from oudisp._src.errors import GridAliasing
from oudisp._src.errors import GridTooCoarse
from oudisp._src.errors import NoInvariantMeasure
from oudisp._src.errors import NonFinite
from oudisp._src.errors import NonPSDInput
from oudisp._src.errors import NotHypoelliptic
from oudisp._src.errors import OUDispError
from oudisp._src.errors import OUDispWarning
from oudisp._src.errors import OutOfRange
from oudisp._src.errors import Overflow
from oudisp._src.errors import SingularA
from oudisp._src.errors import SingularTime
from oudisp._src.errors import TailWarning
from oudisp._src.errors import TruncationWarning

__all__ = (
    "ConfigError",
    "GaugeMismatch",
    "GridAliasing",
    "GridTooCoarse",
    "NoInvariantMeasure",
    "NonFinite",
    "NonPSDInput",
    "NotHypoelliptic",
    "OUDispError",
    "OUDispWarning",
    "OutOfRange",
    "Overflow",
    "SingularA",
    "SingularTime",
    "TailWarning",
    "TruncationWarning",
)
