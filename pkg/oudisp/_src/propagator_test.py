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
"""Tests for oudisp._src.propagator."""

import cmath
import itertools
import math

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np
import oudisp  # pylint: disable=unused-import
from oudisp._src import errors
from oudisp._src import fourier
from oudisp._src import gaussian
from oudisp._src import grid as grid_lib
from oudisp._src import hermite
from oudisp._src import propagator
from oudisp._src import test_utils
from oudisp._src import timepoint

METHODS = (("chirp_ft", propagator.Method.CHIRP_FT),
           ("quadrature", propagator.Method.QUADRATURE),
           ("hermite", propagator.Method.HERMITE))
TIMES = test_utils.named_times(0.7, 2.5, 4., 5.9)


class PrefactorTest(parameterized.TestCase):

  def test_upper_branch(self):
    tp = timepoint.time_point(1.)
    expected = ((4 * math.pi) ** -1. * cmath.exp(1j) /
                (cmath.exp(0.5j * math.pi) * math.sin(1.)))
    self.assertAlmostEqual(propagator.branch_prefactor(tp, 2), expected,
                           delta=1e-15)

  def test_lower_branch(self):
    tp = timepoint.time_point(4.)
    expected = ((4 * math.pi) ** -0.5 * cmath.exp(2j) /
                (cmath.exp(0.75j * math.pi) * abs(math.sin(4.)) ** 0.5))
    self.assertAlmostEqual(propagator.branch_prefactor(tp, 1), expected,
                           delta=1e-15)

  def test_reduced_time(self):
    a = propagator.branch_prefactor(timepoint.time_point(1.), 3)
    b = propagator.branch_prefactor(timepoint.time_point(1. + 4 * math.pi), 3)
    self.assertAlmostEqual(a, b, delta=1e-13)

  def test_identity(self):
    with self.assertRaises(ValueError):
      propagator.branch_prefactor(timepoint.time_point(0.), 1)


class PropagateTest(parameterized.TestCase):

  @test_utils.combined_named_parameters(METHODS, TIMES)
  def test_constant_is_invariant(self, method, t):
    grid = grid_lib.grid_spec(1)
    phi = grid_lib.field(grid, 1.)
    out = propagator.propagate(phi, t, method)
    self.assertLess(test_utils.gauss_relative_error(out, phi), 1e-9)

  @test_utils.combined_named_parameters(METHODS, TIMES)
  def test_linear_eigenfunction(self, method, t):
    grid = grid_lib.grid_spec(1)
    x = np.asarray(grid.axis())
    out = propagator.propagate(grid_lib.field(grid, x), t, method)
    expected = grid_lib.field(grid, cmath.exp(-1j * t) * x)
    self.assertLess(test_utils.gauss_relative_error(out, expected), 1e-9)

  @parameterized.named_parameters(*METHODS)
  def test_square_at_quarter_period(self, method):
    grid = grid_lib.grid_spec(1)
    x = np.asarray(grid.axis())
    out = propagator.propagate(grid_lib.field(grid, x**2), math.pi / 2,
                               method)
    expected = grid_lib.field(grid, 2. - x**2)
    self.assertLess(test_utils.gauss_relative_error(out, expected), 1e-9)

  @test_utils.combined_named_parameters(METHODS, TIMES)
  def test_preserves_gauss_norm(self, method, t):
    grid = grid_lib.grid_spec(1)
    phi = gaussian.as_phi(gaussian.gaussian_state(0.4 + 0.1j, 2.), grid)
    out = propagator.propagate(phi, t, method)
    self.assertAlmostEqual(grid_lib.norm_gauss(out), grid_lib.norm_gauss(phi),
                           delta=1e-8)

  @parameterized.named_parameters(*TIMES)
  def test_methods_agree(self, t):
    grid = grid_lib.grid_spec(1)
    x = np.asarray(grid.axis())
    phi = grid_lib.field(grid, (1 + x - 0.2 * x**3) * np.exp(-0.1 * x**2))
    outs = [propagator.propagate(phi, t, method) for _, method in METHODS]
    for i in range(len(outs)):
      for j in range(i):
        self.assertLess(test_utils.gauss_relative_error(outs[i], outs[j]),
                        1e-6)

  def test_engines_agree(self):
    grid = grid_lib.grid_spec(1)
    phi = gaussian.as_phi(gaussian.gaussian_state(0.3 - 0.2j), grid)
    czt = propagator.propagate(phi, 1.3, engine=fourier.Engine.CZT)
    direct = propagator.propagate(phi, 1.3, engine=fourier.Engine.DIRECT)
    self.assertLess(test_utils.gauss_relative_error(czt, direct), 1e-10)

  @parameterized.parameters((0.8, 1.5), (2., 2.2), (5., 2.6))
  def test_group_law(self, t, s):
    grid = grid_lib.grid_spec(1)
    phi = gaussian.as_phi(gaussian.gaussian_state(0.4 + 0.1j), grid)
    once = propagator.propagate(phi, t + s)
    twice = propagator.propagate(propagator.propagate(phi, t), s)
    self.assertLess(test_utils.gauss_relative_error(twice, once), 1e-6)

  def test_periodic(self):
    grid = grid_lib.grid_spec(1)
    phi = gaussian.as_phi(gaussian.gaussian_state(0.5, 1j), grid)
    a = propagator.propagate(phi, 1.1)
    b = propagator.propagate(phi, 1.1 + 2 * math.pi)
    c = propagator.propagate(phi, 1.1 - 4 * math.pi)
    self.assertLess(test_utils.gauss_relative_error(b, a), 1e-8)
    self.assertLess(test_utils.gauss_relative_error(c, a), 1e-8)

  @parameterized.named_parameters(*METHODS)
  def test_identity_returns_copy(self, method):
    grid = grid_lib.grid_spec(1, 8., 64)
    phi = gaussian.as_phi(gaussian.gaussian_state(0.5), grid)
    out = propagator.propagate(phi, 2 * math.pi, method)
    np.testing.assert_array_equal(out.samples, phi.samples)
    self.assertIs(out.gauge, grid_lib.Gauge.PHI)

  def test_singular_time(self):
    phi = grid_lib.field(grid_lib.grid_spec(1), 1.)
    for method in (propagator.Method.CHIRP_FT, propagator.Method.QUADRATURE):
      with self.assertRaises(errors.SingularTime):
        propagator.propagate(phi, math.pi, method)

  def test_hermite_at_pi_reflects(self):
    grid = grid_lib.grid_spec(1)
    x = np.asarray(grid.axis())
    phi = grid_lib.field(grid, (1 + x) * np.exp(-0.1 * x**2))
    out = propagator.propagate(phi, math.pi, propagator.Method.HERMITE)
    expected = grid_lib.field(grid, (1 - x) * np.exp(-0.1 * x**2))
    mask = grid_lib.interior_mask(grid, grid.extent / 2)
    self.assertLess(test_utils.gauss_relative_error(out, expected, mask),
                    1e-9)

  @parameterized.parameters(
      list(itertools.product((1, 2, 5), (math.pi, 3 * math.pi, -math.pi))))
  def test_hermite_eigenphase_at_odd_multiples_of_pi(self, k, t):
    grid = grid_lib.grid_spec(1)
    phi = hermite.hermite_datum(grid, (k,))
    out = propagator.propagate(phi, t, propagator.Method.HERMITE)
    expected = grid_lib.field(grid, (-1)**k * phi.samples)
    self.assertLess(test_utils.gauss_relative_error(out, expected), 1e-9)

  def test_third_eigenphase(self):
    grid = grid_lib.grid_spec(1)
    phi = hermite.hermite_datum(grid, (3,))
    for t in (0.4, 4.4):
      out = propagator.propagate(phi, t)
      expected = grid_lib.field(grid, cmath.exp(-3j * t) * phi.samples)
      self.assertLess(test_utils.gauss_relative_error(out, expected), 1e-9)

  def test_output_stays_localised(self):
    grid = grid_lib.grid_spec(1)
    phi = gaussian.as_phi(gaussian.gaussian_state(0.5), grid)
    out = propagator.propagate(phi, 1.)
    self.assertLess(grid_lib.tail_ratio(grid_lib.to_psi_gauge(out)), 1e-8)

  def test_two_dimensional(self):
    grid = grid_lib.grid_spec(2, 12., 256)
    phi = gaussian.as_phi(gaussian.gaussian_state(0.3 + 0.05j), grid)
    t = 2.
    chirp = propagator.propagate(phi, t)
    closed = gaussian.as_phi(
        propagator.propagate_gaussian(gaussian.gaussian_state(0.3 + 0.05j), t,
                                      m=2), grid)
    self.assertLess(test_utils.gauss_relative_error(chirp, closed), 1e-8)

  def test_gauge_mismatch(self):
    psi = grid_lib.field(grid_lib.grid_spec(1), 1., grid_lib.Gauge.PSI)
    with self.assertRaises(errors.GaugeMismatch):
      propagator.propagate(psi, 1.)

  def test_tail_warning(self):
    phi = grid_lib.field(grid_lib.grid_spec(1, 4., 64), 1.)
    with self.assertWarns(errors.TailWarning):
      propagator.propagate(phi, 1.)

  def test_aliasing(self):
    phi = grid_lib.field(grid_lib.grid_spec(1, 16., 64), 1.)
    with self.assertRaises(errors.GridAliasing):
      propagator.propagate(phi, 1.)


class PropagateGaussianTest(parameterized.TestCase):

  def test_ground_state(self):
    s = gaussian.gaussian_state(0.25)
    for t in (0.3, 2., 4., 6.):
      out = propagator.propagate_gaussian(s, t, m=3)
      self.assertAlmostEqual(out.beta, 0.25, delta=1e-14)
      self.assertAlmostEqual(out.c, 1., delta=1e-13)

  @parameterized.parameters(0.1, 0.5, 3.)
  def test_quarter_period(self, beta0):
    out = propagator.propagate_gaussian(gaussian.gaussian_state(beta0),
                                        math.pi / 2)
    self.assertAlmostEqual(out.beta, 1 / (16 * beta0), delta=1e-14 / beta0)

  @parameterized.parameters(1, 2, 3)
  def test_matches_continuous_flow(self, m):
    rng = np.random.RandomState(m)
    for _ in range(20):
      s = gaussian.gaussian_state(rng.uniform(0.05, 2.) +
                                  1j * rng.uniform(-1., 1.),
                                  rng.randn() + 1j * rng.randn())
      t = rng.uniform(-10., 10.)
      if abs(math.sin(t)) < 1e-3:
        continue
      chirp = propagator.propagate_gaussian(s, t, m)
      flow = gaussian.dispersive_flow(s, t, m)
      self.assertAlmostEqual(chirp.beta, flow.beta,
                             delta=1e-11 * abs(flow.beta))
      self.assertAlmostEqual(chirp.c, flow.c, delta=1e-11 * abs(flow.c))
      self.assertGreater(chirp.beta.real, 0.)

  @parameterized.parameters(math.pi / 4, 1., 3.9)
  def test_matches_grid(self, t):
    grid = grid_lib.grid_spec(1)
    s = gaussian.gaussian_state(0.5)
    grid_out = propagator.propagate(gaussian.as_phi(s, grid), t)
    closed = gaussian.as_phi(propagator.propagate_gaussian(s, t), grid)
    self.assertLess(test_utils.gauss_relative_error(grid_out, closed), 1e-8)

  def test_identity(self):
    s = gaussian.gaussian_state(0.7 + 0.1j)
    self.assertIs(propagator.propagate_gaussian(s, 4 * math.pi), s)

  def test_singular(self):
    with self.assertRaises(errors.SingularTime):
      propagator.propagate_gaussian(gaussian.gaussian_state(0.5), -math.pi)


if __name__ == "__main__":
  absltest.main()
