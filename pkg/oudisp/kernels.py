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
"""Closed-form parabolic kernels."""

from oudisp._src.kernels import compose_kernels
from oudisp._src.kernels import heat_evolve
from oudisp._src.kernels import hormander_kernel
from oudisp._src.kernels import kernel_mass
from oudisp._src.kernels import kernel_sample
from oudisp._src.kernels import KernelSample
from oudisp._src.kernels import kolmogorov_kernel
from oudisp._src.kernels import mehler_kernel

__all__ = (
    "KernelSample",
    "compose_kernels",
    "heat_evolve",
    "hormander_kernel",
    "kernel_mass",
    "kernel_sample",
    "kolmogorov_kernel",
    "mehler_kernel",
)
