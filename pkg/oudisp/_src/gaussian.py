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
"""Isotropic Gaussian states `psi(x) = c e^{-beta |x|^2}` and their flows.

In the flat gauge the Ornstein-Uhlenbeck operator becomes `H + m/2` with
`H = Delta - |x|^2/4`, under which Gaussians stay Gaussian. The heat flow
`e^{tau (H + m/2)}` acts on the exponent by the Moebius map

    beta(tau) = (4 beta cosh tau + sinh tau) / (4 (cosh tau + 4 beta sinh tau))

and the Schroedinger flow is the same map at `tau = i t`.
"""

import cmath
import math
import warnings
from typing import NamedTuple

import jax.numpy as jnp
from oudisp._src import errors
from oudisp._src import grid as grid_lib

MIN_REAL_BETA = 1e-14
TAIL_TOLERANCE = 1e-14


class GaussianState(NamedTuple):
  beta: complex
  c: complex = 1.


def gaussian_state(beta: complex, c: complex = 1.) -> GaussianState:
  """Builds a :class:`GaussianState`, enforcing `Re beta > 1e-14`."""
  beta = complex(beta)
  c = complex(c)
  if not beta.real > MIN_REAL_BETA or not cmath.isfinite(beta):
    raise errors.OutOfRange(
        "Re beta must exceed {}, got beta={!r}.".format(MIN_REAL_BETA, beta))
  if not cmath.isfinite(c):
    raise errors.NonFinite("Amplitude c={!r} is not finite.".format(c))
  return GaussianState(beta=beta, c=c)


def extremizer(alpha: complex) -> GaussianState:
  """The datum `phi(x) = e^{-alpha |x|^2 + |x|^2 / 4}` in the flat gauge."""
  return gaussian_state(alpha)


def gaussian_state_eval(s: GaussianState,
                        grid: grid_lib.GridSpec) -> grid_lib.ComplexField:
  """Samples `s` on `grid` as a `PSI` gauge field.

  Warns with `TailWarning` if `|psi|` at `|x| = L` exceeds `1e-14 |c|`.
  """
  tail = math.exp(-s.beta.real * grid.extent**2)
  if tail > TAIL_TOLERANCE:
    warnings.warn(
        "Gaussian with beta={!r} is {:.3g} of its peak at |x|=L={!r}.".format(
            s.beta, tail, grid.extent), errors.TailWarning)
  samples = s.c * jnp.exp(-s.beta * grid.radius_squared())
  return grid_lib.field(grid, samples, grid_lib.Gauge.PSI)


def as_phi(s: GaussianState, grid: grid_lib.GridSpec) -> grid_lib.ComplexField:
  """Samples `e^{|x|^2/4} psi` directly, without amplifying rounding noise."""
  samples = s.c * jnp.exp((0.25 - s.beta) * grid.radius_squared())
  return grid_lib.field(grid, samples, grid_lib.Gauge.PHI)


def parabolic_flow(s: GaussianState, tau: complex, m: int = 1) -> GaussianState:
  """Image of `s` under `e^{tau L}` in the flat gauge, `tau` real or complex.

  Uses the principal branch of `(cosh tau + 4 beta sinh tau)^{-m/2}`, which is
  the continuous one for real `tau >= 0`.
  """
  ch = cmath.cosh(tau)
  sh = cmath.sinh(tau)
  z = ch + 4. * s.beta * sh
  beta = (4. * s.beta * ch + sh) / (4. * z)
  c = s.c * cmath.exp(m * tau / 2.) * z ** (-m / 2.)
  return GaussianState(beta=beta, c=c)


def dispersive_flow(s: GaussianState, t: float, m: int = 1) -> GaussianState:
  """Image of `s` under `e^{itL}` in the flat gauge.

  The amplitude follows the branch of `(cos t + 4 i beta sin t)^{-m/2}` that is
  continuous in `t` from `t = 0`; since `Im z = 4 Re(beta) sin t`, its argument
  lies in `[0, 2 pi)` after reducing `t` modulo `2 pi`, which makes the flow
  exactly `2 pi` periodic.

  Args:
    s: Initial state.
    t: Any real time.
    m: Dimension.

  Returns:
    The propagated state.
  """
  t = math.fmod(float(t), 2 * math.pi)
  if t < 0:
    t += 2 * math.pi
  cos, sin = math.cos(t), math.sin(t)
  z = cos + 4j * s.beta * sin
  beta = (4. * s.beta * cos + 1j * sin) / (4. * z)
  arg = math.atan2(z.imag, z.real)
  if arg < 0:
    arg += 2 * math.pi
  c = (s.c * cmath.exp(0.5j * m * t) * abs(z) ** (-m / 2.) *
       cmath.exp(-0.5j * m * arg))
  return GaussianState(beta=beta, c=c)


def l2_norm(s: GaussianState, m: int = 1) -> float:
  """Exact `L^2(dx)` norm `|c| (pi / (2 Re beta))^{m/4}`."""
  return abs(s.c) * (math.pi / (2. * s.beta.real)) ** (m / 4.)
