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
"""Exceptions and warnings raised by oudisp."""


class OUDispError(Exception):
  """Base class for all errors raised by oudisp."""


# Arithmetic failures.


class NonFinite(OUDispError, ArithmeticError):
  """An input or intermediate result contains NaN or Inf."""


class Overflow(OUDispError, ArithmeticError):
  """An exponent would overflow double precision."""


class NoInvariantMeasure(OUDispError, ArithmeticError):
  """The drift has an eigenvalue with non-negative real part."""


class NotHypoelliptic(OUDispError, ArithmeticError):
  """The covariance Gramian is singular at the positivity threshold."""


class GridTooCoarse(OUDispError, ArithmeticError):
  """A kernel is narrower than the grid can resolve."""


class GridAliasing(OUDispError, ArithmeticError):
  """The integrand oscillates faster than the grid can resolve."""


class SingularA(OUDispError, ArithmeticError):
  """A Gaussian exponent matrix is not invertible."""


class SingularTime(OUDispError, ArithmeticError):
  """A time lies too close to an odd multiple of pi."""


# Validation failures.


class NonPSDInput(OUDispError, ValueError):
  """A diffusion matrix is not symmetric positive semidefinite."""


class GaugeMismatch(OUDispError, ValueError):
  """A field is in the wrong gauge for the requested operation."""


class OutOfRange(OUDispError, ValueError):
  """A parameter lies outside its admissible range."""


class ConfigError(OUDispError, ValueError):
  """A run configuration is malformed. The message names the field."""


class OUDispWarning(UserWarning):
  """Base class for non-fatal numerical conditions."""


class TailWarning(OUDispWarning):
  """A field does not decay to negligible values at the grid boundary."""


class TruncationWarning(OUDispWarning):
  """A Hermite expansion carries significant energy in its last band."""
