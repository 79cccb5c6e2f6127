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
"""oudisp types."""

from typing import Any, Callable, Mapping, Sequence, Text, Union
import jax.numpy as jnp
import numpy as np

ArrayLike = Union[jnp.ndarray, np.ndarray, Sequence[float], float]
# A point in R^m, or a batch of points with the coordinate on the last axis.
Point = ArrayLike
Row = Mapping[Text, Any]
FieldFn = Callable[..., jnp.ndarray]
