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
"""Tensor-product grids, complex fields and the Gaussian gauge."""

import enum
import math
from typing import NamedTuple, Optional, Text, Tuple

import jax.numpy as jnp
import numpy as np
from oudisp._src import errors
from oudisp._src import typing
from oudisp._src import utils

MIN_POINTS = 16
MAX_DIMENSION = 3

# (extent, n_points) per dimension.
DEFAULT_GRIDS = {1: (16., 1024), 2: (8., 256), 3: (6., 64)}


class Gauge(enum.Enum):
  """`PHI` is the Gaussian weighted picture; `PSI = e^{-|x|^2/4} PHI`."""
  PHI = 0
  PSI = 1


class GridSpec(NamedTuple):
  """The grid `{-L + j h : 0 <= j < N}^m` with `h = 2L/N`."""
  m: int
  extent: float
  n_points: int

  @property
  def spacing(self) -> float:
    return 2. * self.extent / self.n_points

  @property
  def shape(self) -> Tuple[int, ...]:
    return (self.n_points,) * self.m

  @property
  def cell_volume(self) -> float:
    return self.spacing ** self.m

  def axis(self) -> jnp.ndarray:
    return -self.extent + self.spacing * jnp.arange(self.n_points,
                                                    dtype=jnp.float64)

  def mesh(self) -> Tuple[jnp.ndarray, ...]:
    return tuple(jnp.meshgrid(*([self.axis()] * self.m), indexing="ij"))

  def points(self) -> jnp.ndarray:
    """Returns all grid points as an array of shape `shape + (m,)`."""
    return jnp.stack(self.mesh(), axis=-1)

  def radius_squared(self) -> jnp.ndarray:
    return sum(x**2 for x in self.mesh())


def grid_spec(m: int,
              extent: Optional[float] = None,
              n_points: Optional[int] = None) -> GridSpec:
  """Builds a validated :class:`GridSpec`, filling in per-dimension defaults.

  Args:
    m: Dimension, one of 1, 2 or 3.
    extent: Half width `L` of the grid. Defaults depend on `m`.
    n_points: Points per axis, a power of two `>= 16`. Defaults depend on `m`.

  Returns:
    The grid.

  Raises:
    OutOfRange: If any argument is invalid.
  """
  if m not in DEFAULT_GRIDS:
    raise errors.OutOfRange("m must be 1, 2 or 3, got {!r}.".format(m))
  default_extent, default_points = DEFAULT_GRIDS[m]
  extent = default_extent if extent is None else float(extent)
  n_points = default_points if n_points is None else int(n_points)
  if not extent > 0 or not math.isfinite(extent):
    raise errors.OutOfRange("extent must be positive, got {!r}.".format(extent))
  if n_points < MIN_POINTS or not utils.is_power_of_two(n_points):
    raise errors.OutOfRange(
        "n_points must be a power of two >= {}, got {!r}.".format(
            MIN_POINTS, n_points))
  return GridSpec(m=m, extent=extent, n_points=n_points)


class ComplexField(NamedTuple):
  grid: GridSpec
  samples: jnp.ndarray
  gauge: Gauge


def field(grid: GridSpec,
          samples: typing.ArrayLike,
          gauge: Gauge = Gauge.PHI) -> ComplexField:
  """Wraps `samples` as a :class:`ComplexField` after validating them.

  Args:
    grid: The grid the samples live on.
    samples: Array broadcastable to `grid.shape`.
    gauge: Which gauge the samples are in.

  Returns:
    The field with complex128 samples.

  Raises:
    NonFinite: If any sample is NaN or Inf.
  """
  samples = jnp.broadcast_to(jnp.asarray(samples, dtype=jnp.complex128),
                             grid.shape)
  utils.assert_finite(samples, "samples")
  return ComplexField(grid=grid, samples=samples, gauge=gauge)


def field_from_function(grid: GridSpec,
                        fn: typing.FieldFn,
                        gauge: Gauge = Gauge.PHI) -> ComplexField:
  """Samples `fn(x_1, ..., x_m)` on the grid."""
  return field(grid, fn(*grid.mesh()), gauge)


def _check_gauge(f: ComplexField, expected: Gauge):
  if f.gauge is not expected:
    raise errors.GaugeMismatch("Expected a field in gauge {}, got {}.".format(
        expected.name, f.gauge.name))


def to_psi_gauge(phi: ComplexField) -> ComplexField:
  """Returns `psi = e^{-|x|^2/4} phi`.

  Raises:
    GaugeMismatch: If `phi` is not in the `PHI` gauge.
  """
  _check_gauge(phi, Gauge.PHI)
  weight = jnp.exp(-phi.grid.radius_squared() / 4.)
  return ComplexField(phi.grid, phi.samples * weight, Gauge.PSI)


def from_psi_gauge(psi: ComplexField) -> ComplexField:
  """Returns `phi = e^{|x|^2/4} psi`.

  Raises:
    GaugeMismatch: If `psi` is not in the `PSI` gauge.
  """
  _check_gauge(psi, Gauge.PSI)
  weight = jnp.exp(psi.grid.radius_squared() / 4.)
  return ComplexField(psi.grid, psi.samples * weight, Gauge.PHI)


def require_gauge(f: ComplexField, gauge: Gauge) -> ComplexField:
  _check_gauge(f, gauge)
  return f


def gauss_density(grid: GridSpec) -> jnp.ndarray:
  """Standard Gaussian density `(2 pi)^{-m/2} e^{-|x|^2/2}` on the grid."""
  return ((2 * math.pi) ** (-grid.m / 2) *
          jnp.exp(-grid.radius_squared() / 2.))


def norm_l2(f: ComplexField) -> float:
  """Trapezoid `L^2(dx)` norm of the samples, regardless of gauge."""
  return float(jnp.sqrt(f.grid.cell_volume * jnp.sum(jnp.abs(f.samples)**2)))


def norm_gauss(f: ComplexField) -> float:
  """Trapezoid `L^2(d gamma)` norm with the standard Gaussian measure."""
  weight = gauss_density(f.grid)
  return float(jnp.sqrt(
      f.grid.cell_volume * jnp.sum(jnp.abs(f.samples)**2 * weight)))


def lp_norm(f: ComplexField, p: float) -> float:
  """Trapezoid `L^p(dx)` norm of the samples; `p = inf` is the grid maximum."""
  a = jnp.abs(f.samples)
  if math.isinf(p):
    return float(jnp.max(a))
  return float((f.grid.cell_volume * jnp.sum(a**p)) ** (1. / p))


def boundary_mask(grid: GridSpec) -> jnp.ndarray:
  """True on grid points with some coordinate at the first or last index."""
  index = jnp.arange(grid.n_points)
  edge = (index == 0) | (index == grid.n_points - 1)
  mask = jnp.zeros(grid.shape, dtype=bool)
  for axis in range(grid.m):
    shape = [1] * grid.m
    shape[axis] = grid.n_points
    mask = mask | edge.reshape(shape)
  return mask


def tail_ratio(f: ComplexField) -> float:
  """Largest boundary magnitude relative to the largest magnitude."""
  a = jnp.abs(f.samples)
  peak = float(jnp.max(a))
  if peak == 0.:
    return 0.
  return float(jnp.max(jnp.where(boundary_mask(f.grid), a, 0.))) / peak


def interior_mask(grid: GridSpec, radius: float) -> jnp.ndarray:
  """True on grid points with `|x| <= radius`."""
  return grid.radius_squared() <= radius**2


# Field files: a fixed little-endian header followed by N^m complex128 samples
# (interleaved real and imaginary parts) in C order.
_MAGIC = b"OUDFLD01"
_HEADER = np.dtype([
    ("magic", "S8"),
    ("m", "<i4"),
    ("n_points", "<i4"),
    ("extent", "<f8"),
    ("gauge", "<i4"),
])


def save_field(path: Text, f: ComplexField):
  """Writes `f` to `path`; :func:`load_field` reads it back bit for bit."""
  header = np.array([(_MAGIC, f.grid.m, f.grid.n_points, f.grid.extent,
                      f.gauge.value)], dtype=_HEADER)
  with open(path, "wb") as fp:
    fp.write(header.tobytes())
    fp.write(np.asarray(f.samples, dtype="<c16").tobytes(order="C"))


def load_field(path: Text) -> ComplexField:
  """Reads a field written by :func:`save_field`.

  Raises:
    ValueError: If the file is not a field file or is truncated.
  """
  with open(path, "rb") as fp:
    raw = fp.read()
  if len(raw) < _HEADER.itemsize:
    raise ValueError("{!r} is too short to be a field file.".format(path))
  header = np.frombuffer(raw[:_HEADER.itemsize], dtype=_HEADER)[0]
  if header["magic"] != _MAGIC:
    raise ValueError("{!r} is not a field file.".format(path))
  grid = grid_spec(int(header["m"]), float(header["extent"]),
                   int(header["n_points"]))
  samples = np.frombuffer(raw[_HEADER.itemsize:], dtype="<c16")
  if samples.size != grid.n_points ** grid.m:
    raise ValueError("{!r} holds {} samples, expected {}.".format(
        path, samples.size, grid.n_points ** grid.m))
  return field(grid, samples.reshape(grid.shape), Gauge(int(header["gauge"])))
