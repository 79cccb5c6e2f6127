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
"""Spectral propagation in the probabilists' Hermite basis.

`L He_k = -k He_k` for `L = Delta - <x, D>`, so `e^{itL}` multiplies the
coefficient of `He_k` by `e^{-i|k|t}` for every real `t`.
"""

import math
from typing import NamedTuple, Optional, Sequence
import warnings

import jax.numpy as jnp
from jax.scipy import special
from oudisp._src import errors
from oudisp._src import grid as grid_lib
from oudisp._src import typing
from oudisp._src import utils

MAX_ORDER = 128
DEFAULT_ORDERS = {1: 64, 2: 32, 3: 16}
TRUNCATION_TOLERANCE = 1e-10


class HermiteCoeffs(NamedTuple):
  """Coefficients `c_k` of `phi = sum_k c_k He_{k_1}(x_1) ... He_{k_m}(x_m)`.

  `coeffs` has shape `[order + 1] * m`; `grid` is where the expansion was
  sampled and where it is synthesised back.
  """
  grid: grid_lib.GridSpec
  order: int
  coeffs: jnp.ndarray


def hermite_polynomial(k: int, x: typing.ArrayLike) -> jnp.ndarray:
  """Probabilists' `He_k(x)` by `He_{k+1} = x He_k - k He_{k-1}`."""
  x = jnp.asarray(x, dtype=jnp.float64)
  prev, cur = jnp.zeros_like(x), jnp.ones_like(x)
  for j in range(k):
    prev, cur = cur, x * cur - j * prev
  return cur


def hermite_datum(grid: grid_lib.GridSpec,
                  index: Sequence[int]) -> grid_lib.ComplexField:
  """The `PHI` gauge field `He_{k_1}(x_1) ... He_{k_m}(x_m)`."""
  index = utils.replicate(index, grid.m, "index")
  samples = jnp.ones(grid.shape)
  for k, x in zip(index, grid.mesh()):
    samples = samples * hermite_polynomial(int(k), x)
  return grid_lib.field(grid, samples, grid_lib.Gauge.PHI)


def hermite_functions(x: jnp.ndarray, order: int) -> jnp.ndarray:
  """Orthonormal `He_k(x) e^{-x^2/4} / sqrt(k! sqrt(2 pi))`, `k <= order`.

  Args:
    x: Sample points, shape `[N]`.
    order: Largest degree.

  Returns:
    An array of shape `[order + 1, N]`.
  """
  x = jnp.asarray(x, dtype=jnp.float64)
  rows = [(2 * math.pi) ** -0.25 * jnp.exp(-x**2 / 4.)]
  if order >= 1:
    rows.append(x * rows[0])
  for k in range(1, order):
    rows.append((x * rows[k] - math.sqrt(k) * rows[k - 1]) / math.sqrt(k + 1))
  return jnp.stack(rows)


def _norms(order: int, m: int) -> jnp.ndarray:
  """`prod_i sqrt(k_i!) (2 pi)^{1/4}` over multi-indices."""
  k = jnp.arange(order + 1, dtype=jnp.float64)
  one = jnp.exp(0.5 * special.gammaln(k + 1.)) * (2 * math.pi)**0.25
  out = jnp.ones(())
  for _ in range(m):
    out = out[..., None] * one
  return out


def total_degree(order: int, m: int) -> jnp.ndarray:
  k = jnp.arange(order + 1)
  out = jnp.zeros((), dtype=k.dtype)
  for _ in range(m):
    out = out[..., None] + k
  return out


def _last_band(order: int, m: int) -> jnp.ndarray:
  k = jnp.arange(order + 1)
  out = jnp.zeros((), dtype=bool)
  for _ in range(m):
    out = out[..., None] | (k == order)
  return out


def hermite_analyze(phi: grid_lib.ComplexField,
                    order: Optional[int] = None) -> HermiteCoeffs:
  """Projects a `PHI` gauge field onto `He_k`, `|k|_inf <= order`.

  Coefficients are `c_k = <phi, He_k>_gamma / k!`, computed as trapezoid inner
  products of the flat gauge field with orthonormal Hermite functions.

  Args:
    phi: Field in the `PHI` gauge.
    order: Truncation per axis, at most 128. Defaults to 64, 32 or 16 for
      `m = 1, 2, 3`.

  Returns:
    The :class:`HermiteCoeffs`.

  Raises:
    GaugeMismatch: If `phi` is not in the `PHI` gauge.
    OutOfRange: If `order` is out of range.
  """
  grid = phi.grid
  order = DEFAULT_ORDERS[grid.m] if order is None else int(order)
  if not 0 <= order <= MAX_ORDER:
    raise errors.OutOfRange("order must be in [0, {}], got {!r}.".format(
        MAX_ORDER, order))
  psi = grid_lib.to_psi_gauge(phi).samples
  chi = hermite_functions(grid.axis(), order)
  a = utils.apply_per_axis(psi, grid.spacing * chi)

  energy = jnp.abs(a)**2
  total = float(jnp.sum(energy))
  tail = float(jnp.sum(jnp.where(_last_band(order, grid.m), energy, 0.)))
  if tail > TRUNCATION_TOLERANCE * total:
    warnings.warn(
        "Last Hermite band holds {:.3g} of the energy at order {}.".format(
            tail / total, order), errors.TruncationWarning)
  return HermiteCoeffs(grid=grid, order=order,
                       coeffs=a / _norms(order, grid.m))


def hermite_synthesize(c: HermiteCoeffs,
                       t: float = 0.) -> grid_lib.ComplexField:
  """Evaluates `e^{itL} sum_k c_k He_k` on `c.grid` for any real `t`."""
  grid = c.grid
  phase = jnp.exp(-1j * float(t) * total_degree(c.order, grid.m))
  a = c.coeffs * _norms(c.order, grid.m) * phase
  chi = hermite_functions(grid.axis(), c.order)
  psi = utils.apply_per_axis(a, chi.T)
  return grid_lib.from_psi_gauge(
      grid_lib.ComplexField(grid, psi, grid_lib.Gauge.PSI))


def gauss_energy(c: HermiteCoeffs) -> float:
  """`||phi||^2` in `L^2(d gamma)`, i.e. `sum_k |c_k|^2 k!`."""
  return float(jnp.sum(jnp.abs(c.coeffs * _norms(c.order, c.grid.m))**2) /
               (2 * math.pi) ** (c.grid.m / 2))
