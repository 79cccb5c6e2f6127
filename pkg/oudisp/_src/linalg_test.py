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
"""Tests for oudisp._src.linalg."""

import itertools

from absl.testing import absltest
from absl.testing import parameterized
import jax.numpy as jnp
from jax.scipy import linalg as jsp_linalg
import numpy as np
import oudisp  # pylint: disable=unused-import
from oudisp._src import errors
from oudisp._src import linalg
from oudisp._src import test_utils


def series_exp(m, squarings=8, terms=40):
  a = np.asarray(m, dtype=np.float64) / 2. ** squarings
  term = np.eye(a.shape[0])
  out = term.copy()
  for k in range(1, terms):
    term = term @ a / k
    out = out + term
  for _ in range(squarings):
    out = out @ out
  return out


class MatrixExpTest(parameterized.TestCase):

  def test_zero(self):
    np.testing.assert_array_equal(linalg.matrix_exp(np.zeros([3, 3])),
                                  np.eye(3))

  def test_nilpotent(self):
    b = np.array([[0., 0.], [1., 0.]])
    np.testing.assert_allclose(linalg.matrix_exp(2. * b), [[1., 0.], [2., 1.]],
                               atol=1e-15)

  def test_damped_oscillator_spectrum(self):
    b = np.array([[-2., -2.], [1., 0.]])
    e = linalg.matrix_exp(b)
    eigs = np.sort_complex(np.linalg.eigvals(np.asarray(e)))
    expected = np.sort_complex(np.exp(np.array([-1 - 1j, -1 + 1j])))
    np.testing.assert_allclose(eigs, expected, rtol=1e-12)
    np.testing.assert_allclose(e, series_exp(b), rtol=1e-12)

  @parameterized.parameters(0.01, 0.2, 0.9, 2., 5., 10.)
  def test_against_series(self, norm):
    rng = np.random.RandomState(int(norm * 100))
    m = rng.randn(4, 4)
    m *= norm / np.abs(m).sum(axis=0).max()
    actual = np.asarray(linalg.matrix_exp(m))
    expected = series_exp(m)
    self.assertLessEqual(
        np.linalg.norm(actual - expected) / np.linalg.norm(expected), 1e-12)

  @parameterized.parameters(
      list(itertools.product((2, 3, 6), (0.1, 3., 20.), (False, True))))
  def test_against_jax_expm(self, size, norm, complex_entries):
    rng = np.random.RandomState(size)
    m = rng.randn(size, size)
    if complex_entries:
      m = m + 1j * rng.randn(size, size)
    m *= norm / np.abs(m).sum(axis=0).max()
    actual = np.asarray(linalg.matrix_exp(m))
    expected = np.asarray(jsp_linalg.expm(jnp.asarray(m)))
    self.assertLessEqual(
        np.linalg.norm(actual - expected) / np.linalg.norm(expected), 1e-10)

  def test_non_finite(self):
    with self.assertRaises(errors.NonFinite):
      linalg.matrix_exp([[np.nan]])


class SpectralAbscissaTest(parameterized.TestCase):

  @parameterized.named_parameters(
      ("stable", -np.eye(3), -1.),
      ("damped_oscillator", [[-2., -2.], [1., 0.]], -1.),
      ("nilpotent", [[0., 0.], [1., 0.]], 0.),
  )
  def test_values(self, b, expected):
    self.assertAlmostEqual(linalg.spectral_abscissa(b), expected, delta=1e-10)

  def test_non_finite(self):
    with self.assertRaises(errors.NonFinite):
      linalg.spectral_abscissa([[np.inf, 0.], [0., 1.]])


class LyapunovTest(parameterized.TestCase):

  def test_scalar(self):
    np.testing.assert_allclose(linalg.lyapunov_solve([[-1.]], [[2.]]), [[1.]])

  @parameterized.parameters(2, 3, 5)
  def test_residual(self, m):
    rng = np.random.RandomState(m)
    b = rng.randn(m, m) - 3 * m * np.eye(m)
    q = test_utils.random_psd(rng, m, rank=m)
    x = np.asarray(linalg.lyapunov_solve(b, q))
    np.testing.assert_allclose(b @ x + x @ b.T + q, np.zeros([m, m]),
                               atol=1e-10)


class KalmanTest(parameterized.TestCase):

  def test_kolmogorov_full_rank(self):
    b = np.array([[0., 0.], [1., 0.]])
    c = np.array([[1., 0.], [0., 0.]])
    k = linalg.kalman_matrix(b, c)
    self.assertEqual(k.shape, (2, 4))
    self.assertEqual(linalg.numerical_rank(k, 1e-10), 2)

  def test_psd_sqrt_clamps(self):
    q = np.diag([4., 0., -1e-17])
    np.testing.assert_allclose(linalg.psd_sqrt(q), np.diag([2., 0., 0.]),
                               atol=1e-8)

  def test_psd_sqrt_drops_roundoff_eigenvalues(self):
    rng = np.random.RandomState(0)
    for _ in range(50):
      u, _ = np.linalg.qr(rng.randn(3, 3))
      q = u @ np.diag([rng.uniform(0.5, 2.), 0., 0.]) @ u.T
      root = linalg.psd_sqrt(q)
      self.assertEqual(linalg.numerical_rank(root, 1e-10), 1)
      np.testing.assert_allclose(root @ root, q, atol=1e-12)

  def test_zero_rank(self):
    self.assertEqual(linalg.numerical_rank(np.zeros([2, 2]), 1e-10), 0)


if __name__ == "__main__":
  absltest.main()
