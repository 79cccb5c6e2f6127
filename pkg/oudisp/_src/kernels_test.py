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
"""Tests for oudisp._src.kernels."""

import math

from absl.testing import absltest
from absl.testing import parameterized
import jax.numpy as jnp
import numpy as np
import oudisp  # pylint: disable=unused-import
from oudisp._src import errors
from oudisp._src import gaussian
from oudisp._src import grid as grid_lib
from oudisp._src import kernels
from oudisp._src import lti
from oudisp._src import test_utils


class ClosedFormTest(parameterized.TestCase):

  @parameterized.parameters(1, 2, 3)
  def test_ornstein_uhlenbeck_peak(self, m):
    t = 0.7
    x = np.linspace(-1., 1., m)
    value = kernels.hormander_kernel(lti.ornstein_uhlenbeck(m), x,
                                     math.exp(-t) * x, t)
    expected = ((4 * math.pi) ** (-m / 2) *
                ((1 - math.exp(-2 * t)) / 2) ** (-m / 2))
    self.assertAlmostEqual(float(value), expected, delta=1e-12 * expected)

  def test_pure_heat(self):
    sys = lti.system([[1.]], [[0.]])
    x, y, t = 0.3, -1.2, 0.8
    expected = (4 * math.pi * t) ** -0.5 * math.exp(-(y - x)**2 / (4 * t))
    self.assertAlmostEqual(float(kernels.hormander_kernel(sys, [x], [y], t)),
                           expected, delta=1e-14)

  def test_mehler_matches_ornstein_uhlenbeck(self):
    rng = np.random.RandomState(0)
    x = rng.uniform(-3., 3., size=(100, 1))
    y = rng.uniform(-3., 3., size=(100, 1))
    for t in (0.2, 1., 3.):
      g = kernels.hormander_kernel(lti.ornstein_uhlenbeck(1), x, y, t)
      w = kernels.mehler_kernel(0.25, x, y, t)
      np.testing.assert_allclose(g, w, atol=1e-12, rtol=0)

  @parameterized.parameters(1e-8, 1e-10, 1e-12)
  def test_mehler_small_omega(self, omega):
    # To first order in r = sqrt(omega) the drift scales the heat kernel by
    # 1 + r (t - (y^2 - x^2) / 2).
    x, y, t = 0.5, -0.25, 0.6
    r = math.sqrt(omega)
    heat = (4 * math.pi * t) ** -0.5 * math.exp(-(y - x)**2 / (4 * t))
    first_order = heat * (1 + r * (t - (y**2 - x**2) / 2))
    value = float(kernels.mehler_kernel(omega, [x], [y], t))
    self.assertAlmostEqual(value, first_order, delta=10 * omega + 1e-13)
    self.assertGreater(abs(value - heat), 0.5 * r * heat)

  def test_kolmogorov_origin(self):
    value = kernels.kolmogorov_kernel(1, [0.], [0.], [0.], [0.], 1.)
    self.assertAlmostEqual(float(value), math.sqrt(3) / (2 * math.pi),
                           delta=1e-15)
    self.assertAlmostEqual(float(value), 0.2756644, delta=1e-7)

  @parameterized.parameters(1, 2)
  def test_kolmogorov_matches_hormander(self, n):
    rng = np.random.RandomState(n)
    sys = lti.kolmogorov(n)
    for t in (0.5, 1.):
      x, y, xbar, ybar = rng.randn(4, 50, n)
      k = kernels.kolmogorov_kernel(n, x, y, xbar, ybar, t)
      g = kernels.hormander_kernel(sys, np.concatenate([x, y], -1),
                                   np.concatenate([xbar, ybar], -1), t)
      np.testing.assert_allclose(k, g, rtol=1e-10)

  def test_kolmogorov_rejects_time(self):
    with self.assertRaises(errors.OutOfRange):
      kernels.kolmogorov_kernel(1, [0.], [0.], [0.], [0.], 0.)

  def test_scalar_points(self):
    sys = lti.ornstein_uhlenbeck(1)
    self.assertEqual(float(kernels.hormander_kernel(sys, 0.3, -0.2, 1.)),
                     float(kernels.hormander_kernel(sys, [0.3], [-0.2], 1.)))
    self.assertEqual(float(kernels.mehler_kernel(0.25, 0.5, 0.2, 1.)),
                     float(kernels.mehler_kernel(0.25, [0.5], [0.2], 1.)))
    self.assertAlmostEqual(float(kernels.kolmogorov_kernel(1, 0., 0., 0., 0.,
                                                           1.)),
                           math.sqrt(3) / (2 * math.pi), delta=1e-15)
    sample = kernels.kernel_sample(sys, 0.3, -0.2, 1.)
    self.assertEqual(sample.x.shape, (1,))
    self.assertEqual(sample.value,
                     float(kernels.hormander_kernel(sys, 0.3, -0.2, 1.)))

  def test_rejects_wrong_dimension(self):
    with self.assertRaises(errors.OutOfRange):
      kernels.hormander_kernel(lti.ornstein_uhlenbeck(2), [0.], [0., 0.], 1.)

  def test_not_hypoelliptic(self):
    sys = lti.system(np.diag([1., 0.]), np.zeros([2, 2]))
    with self.assertRaises(errors.NotHypoelliptic):
      kernels.hormander_kernel(sys, [0., 0.], [0., 0.], 1.)


class MassTest(parameterized.TestCase):

  @parameterized.parameters(0.5, 1., 2.)
  def test_kolmogorov(self, t):
    grid = grid_lib.grid_spec(2, 24., 512)
    points = grid.points()
    values = kernels.kolmogorov_kernel(1, [0.3], [-0.2], points[..., :1],
                                       points[..., 1:], t)
    self.assertAlmostEqual(float(jnp.sum(values)) * grid.cell_volume, 1.,
                           delta=1e-8)

  @parameterized.parameters(0.5, 1., 4.)
  def test_hormander(self, t):
    grid = grid_lib.grid_spec(2, 8., 256)
    mass = kernels.kernel_mass(lti.smoluchowski_kramers(), [0.5, -0.5], t,
                               grid)
    self.assertAlmostEqual(mass, 1., delta=1e-8)

  def test_mehler(self):
    grid = grid_lib.grid_spec(1)
    values = kernels.mehler_kernel(0.25, np.zeros([1]), grid.points(), 1.)
    self.assertAlmostEqual(float(jnp.sum(values)) * grid.cell_volume, 1.,
                           delta=1e-8)

  def test_chapman_kolmogorov(self):
    sys = lti.system([[1.5]], [[-0.7]])
    grid = grid_lib.grid_spec(1, 16., 1024)
    for x, y, t, s in ((0.1, 0.4, 0.3, 0.9), (-1., 2., 1.2, 0.5)):
      composed = kernels.compose_kernels(sys, [x], [y], t, s, grid)
      direct = float(kernels.hormander_kernel(sys, [x], [y], t + s))
      self.assertAlmostEqual(composed / direct, 1., delta=1e-6)


class HeatEvolveTest(parameterized.TestCase):

  def test_constant(self):
    grid = grid_lib.grid_spec(1)
    for t in (0.5, 1., 3.):
      u = kernels.heat_evolve(lti.ornstein_uhlenbeck(1),
                              grid_lib.field(grid, 1.), t)
      np.testing.assert_allclose(u.samples, np.ones(grid.shape), atol=1e-10)

  def test_linear_eigenfunction(self):
    grid = grid_lib.grid_spec(1)
    x = np.asarray(grid.axis())
    u = kernels.heat_evolve(lti.ornstein_uhlenbeck(1), grid_lib.field(grid, x),
                            1.3)
    np.testing.assert_allclose(u.samples, math.exp(-1.3) * x, atol=1e-10)

  @parameterized.parameters(1, 2)
  def test_gaussian_matches_parabolic_flow(self, m):
    grid = grid_lib.grid_spec(m)
    s = gaussian.gaussian_state(0.5 + 0.2j, 1.)
    t = 0.8
    u = kernels.heat_evolve(lti.ornstein_uhlenbeck(m), gaussian.as_phi(s, grid),
                            t)
    expected = gaussian.as_phi(gaussian.parabolic_flow(s, t, m), grid)
    self.assertLessEqual(test_utils.gauss_relative_error(u, expected), 1e-7)

  def test_preserves_gaussian_mean(self):
    grid = grid_lib.grid_spec(1)
    x = grid.axis()
    phi = grid_lib.field(grid, jnp.cos(x) + x**3 - 2j * x**2)
    u = kernels.heat_evolve(lti.ornstein_uhlenbeck(1), phi, 0.9)
    weight = grid_lib.gauss_density(grid) * grid.cell_volume
    self.assertAlmostEqual(complex(jnp.sum(u.samples * weight)),
                           complex(jnp.sum(phi.samples * weight)), delta=1e-10)

  def test_dense_quadrature(self):
    # Rotating Ornstein-Uhlenbeck drift: Q(t) = (1 - e^{-2t})/2 I.
    sys = lti.system(np.eye(2), [[-1., 0.5], [-0.5, -1.]])
    # Six kernel widths fit inside the box.
    grid = grid_lib.grid_spec(2, 6., 32)
    x1 = grid.mesh()[0]
    t = 2.
    mask = np.asarray(grid_lib.interior_mask(grid, 1.))
    u = kernels.heat_evolve(sys, grid_lib.field(grid, 1.), t)
    np.testing.assert_allclose(np.asarray(u.samples)[mask], 1., atol=1e-6)
    u = kernels.heat_evolve(sys, grid_lib.field(grid, x1), t)
    flow = np.asarray(lti.drift_flow(sys, t))
    expected = flow[0, 0] * x1 + flow[0, 1] * grid.mesh()[1]
    np.testing.assert_allclose(np.asarray(u.samples)[mask],
                               np.asarray(expected)[mask], atol=1e-6)

  def test_dense_cap(self):
    sys = lti.system(np.eye(2), [[-1., 0.5], [-0.5, -1.]])
    grid = grid_lib.grid_spec(2, 8., 128)
    with self.assertRaises(errors.OutOfRange):
      kernels.heat_evolve(sys, grid_lib.field(grid, 1.), 1.)

  def test_grid_too_coarse(self):
    grid = grid_lib.grid_spec(1, 16., 64)
    with self.assertRaises(errors.GridTooCoarse):
      kernels.heat_evolve(lti.ornstein_uhlenbeck(1), grid_lib.field(grid, 1.),
                          0.01)

  def test_gauge_mismatch(self):
    grid = grid_lib.grid_spec(1)
    psi = grid_lib.to_psi_gauge(grid_lib.field(grid, 1.))
    with self.assertRaises(errors.GaugeMismatch):
      kernels.heat_evolve(lti.ornstein_uhlenbeck(1), psi, 1.)

  def test_pde_residual_converges(self):
    sys = lti.ornstein_uhlenbeck(1)
    t = 1.
    residuals = []
    for n_points in (128, 256):
      grid = grid_lib.grid_spec(1, 8., n_points)
      h = grid.spacing
      x = np.asarray(grid.axis())
      phi = grid_lib.field(grid, jnp.cos(grid.axis()))
      u0, u1, u2 = (np.asarray(kernels.heat_evolve(sys, phi, s).samples).real
                    for s in (t - h, t, t + h))
      du_dt = (u2 - u0) / (2 * h)
      du_dx = (u1[2:] - u1[:-2]) / (2 * h)
      d2u = (u1[2:] - 2 * u1[1:-1] + u1[:-2]) / h**2
      residual = du_dt[1:-1] - (d2u - x[1:-1] * du_dx)
      interior = np.abs(x[1:-1]) <= 2.
      residuals.append(np.max(np.abs(residual[interior])))
    self.assertGreaterEqual(math.log2(residuals[0] / residuals[1]), 1.8)


if __name__ == "__main__":
  absltest.main()
