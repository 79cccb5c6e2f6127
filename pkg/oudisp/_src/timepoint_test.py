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
"""Tests for oudisp._src.timepoint."""

import math

from absl.testing import absltest
from absl.testing import parameterized
from oudisp._src import errors
from oudisp._src import timepoint

J_PLUS = timepoint.Branch.J_PLUS
J_MINUS = timepoint.Branch.J_MINUS


class TimePointTest(parameterized.TestCase):

  @parameterized.parameters(
      (1., J_PLUS, 0),
      (4., J_MINUS, 0),
      (-1., J_MINUS, -1),
      (2 * math.pi + 1., J_PLUS, 1),
      (-5 * math.pi / 2, J_MINUS, -2),
  )
  def test_branch(self, t, branch, k):
    tp = timepoint.time_point(t)
    self.assertIs(tp.branch, branch)
    self.assertEqual(tp.k_period, k)
    self.assertFalse(tp.is_identity)
    self.assertAlmostEqual(math.sin(tp.reduced), math.sin(t), delta=1e-14)
    self.assertGreater(tp.reduced, 0.)
    self.assertLess(tp.reduced, 2 * math.pi)

  @parameterized.parameters(0., 4 * math.pi, -2 * math.pi, 2 * math.pi - 1e-7,
                            6 * math.pi + 5e-7)
  def test_identity(self, t):
    tp = timepoint.time_point(t)
    self.assertTrue(tp.is_identity)
    self.assertIsNone(tp.branch)
    self.assertLess(abs(tp.reduced), 1e-6)

  @parameterized.parameters(math.pi, 3 * math.pi + 5e-7, -math.pi,
                            math.pi - 9e-7)
  def test_singular(self, t):
    with self.assertRaises(errors.SingularTime):
      timepoint.time_point(t)

  def test_custom_tolerance(self):
    t = math.pi - 1e-3
    self.assertIs(timepoint.time_point(t).branch, J_PLUS)
    with self.assertRaises(errors.SingularTime):
      timepoint.time_point(t, tau_sing=1e-2)

  @parameterized.parameters(float("nan"), float("inf"))
  def test_non_finite(self, t):
    with self.assertRaises(errors.NonFinite):
      timepoint.time_point(t)

  def test_trigonometry(self):
    tp = timepoint.time_point(2 * math.pi + 0.7)
    self.assertAlmostEqual(tp.sin, math.sin(0.7), delta=1e-14)
    self.assertAlmostEqual(tp.cot, 1 / math.tan(0.7), delta=1e-13)

  @parameterized.parameters((0., True), (2 * math.pi - 1e-7, True),
                            (-4 * math.pi, True), (math.pi, False), (1., False))
  def test_is_full_period(self, t, expected):
    self.assertEqual(timepoint.is_full_period(t), expected)

  def test_as_time_point(self):
    tp = timepoint.time_point(2.)
    self.assertIs(timepoint.as_time_point(tp), tp)
    self.assertEqual(timepoint.as_time_point(2.), tp)


if __name__ == "__main__":
  absltest.main()
