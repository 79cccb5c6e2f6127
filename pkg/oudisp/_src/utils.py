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
"""Misc utility functions."""

import collections.abc
from typing import Optional, Sequence, Text, Tuple, TypeVar, Union

import jax.numpy as jnp
from oudisp._src import errors
from oudisp._src import typing

T = TypeVar("T")


def replicate(
    element: Union[T, Sequence[T]],
    num_times: int,
    name: Text,
) -> Tuple[T, ...]:
  """Replicates entry in `element` `num_times` if needed."""
  if (isinstance(element, (str, bytes)) or
      not isinstance(element, collections.abc.Sequence)):
    return (element,) * num_times
  elif len(element) == 1:
    return tuple(element * num_times)
  elif len(element) == num_times:
    return tuple(element)
  raise TypeError(
      "{} must be a scalar or sequence of length 1 or sequence of length {}."
      .format(name, num_times))


def is_power_of_two(n: int) -> bool:
  return n > 0 and (n & (n - 1)) == 0


def assert_finite(x: jnp.ndarray, name: Text) -> jnp.ndarray:
  """Raises `NonFinite` if `x` contains NaN or Inf, otherwise returns `x`."""
  x = jnp.asarray(x)
  if not bool(jnp.all(jnp.isfinite(x))):
    raise errors.NonFinite("{} contains NaN or Inf values.".format(name))
  return x


def assert_square(matrix: typing.ArrayLike, name: Text) -> jnp.ndarray:
  """Returns `matrix` as a finite square array, raising otherwise."""
  matrix = jnp.asarray(matrix)
  if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
    raise ValueError("{} must be a square matrix, got shape {!r}.".format(
        name, matrix.shape))
  return assert_finite(matrix, name)


def apply_per_axis(array: jnp.ndarray, matrix: jnp.ndarray) -> jnp.ndarray:
  """Contracts every axis of `array` with the second axis of `matrix`.

  For a rank-`m` array this computes `sum_k matrix[j1, k1] ... matrix[jm, km]
  array[k1, ..., km]`, i.e. applies the same one dimensional linear map along
  each axis in turn.

  Args:
    array: An array of shape `[N] * m`.
    matrix: A matrix of shape `[P, N]`.

  Returns:
    An array of shape `[P] * m`.
  """
  for axis in range(array.ndim):
    array = jnp.tensordot(matrix, array, axes=([1], [axis]))
    array = jnp.moveaxis(array, 0, axis)
  return array


def relative_error(
    actual: jnp.ndarray,
    expected: jnp.ndarray,
    weight: Optional[jnp.ndarray] = None,
) -> float:
  """Returns `||actual - expected|| / ||expected||` in a (weighted) l2 sense."""
  diff = jnp.abs(actual - expected) ** 2
  ref = jnp.abs(expected) ** 2
  if weight is not None:
    diff = diff * weight
    ref = ref * weight
  denom = float(jnp.sqrt(jnp.sum(ref)))
  num = float(jnp.sqrt(jnp.sum(diff)))
  if denom == 0.:
    return num
  return num / denom
