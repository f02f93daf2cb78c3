# coding=utf-8
# Copyright 2022 The Carlitz-Periods Authors.
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

"""Tests for linear_algebra."""

import itertools
import random

from absl.testing import absltest
from absl.testing import parameterized
from carlitz import scalars
from carlitz._src import linear_algebra
import numpy as np


class RowReduceTest(parameterized.TestCase):

  def test_identity_pivots(self):
    f = scalars.field_create(3)
    reduced, pivots = linear_algebra.row_reduce(f, np.array([[2, 1], [1, 1]]))
    self.assertEqual(pivots, (0, 1))
    np.testing.assert_array_equal(reduced, np.eye(2, dtype=np.int64))

  def test_drops_dependent_rows(self):
    f = scalars.field_create(5)
    matrix = np.array([[1, 2, 3], [2, 4, 0], [3, 1, 4]])
    reduced, pivots = linear_algebra.row_reduce(f, matrix)
    self.assertEqual(pivots, (0, 2))
    np.testing.assert_array_equal(reduced, [[1, 2, 0], [0, 0, 1]])

  def test_needs_a_matrix(self):
    with self.assertRaises(ValueError):
      linear_algebra.row_reduce(scalars.field_create(2), np.array([1, 0]))


class KernelTest(parameterized.TestCase):

  def test_one_dimensional(self):
    f = scalars.field_create(3)
    basis = linear_algebra.kernel(f, np.array([[1, 1, 0], [0, 1, 1]]))
    # x0 = x2, x1 = -x2.
    np.testing.assert_array_equal(basis, [[1, 2, 1]])

  def test_full_rank(self):
    f = scalars.field_create(2)
    basis = linear_algebra.kernel(f, np.array([[1, 0], [0, 1], [1, 1]]))
    self.assertEqual(basis.shape, (0, 2))

  @parameterized.parameters((2, 1), (3, 1), (2, 2), (3, 2))
  def test_matches_exhaustive_scan(self, p, m):
    f = scalars.field_create(p, m)
    rng = random.Random(p * 10 + m)
    for _ in range(5):
      matrix = np.array([[f.random_element(rng) for _ in range(3)]
                         for _ in range(2)])
      basis = linear_algebra.kernel(f, matrix)
      span = set()
      for coeffs in itertools.product(f.elements(), repeat=len(basis)):
        vector = np.zeros(3, dtype=np.int64)
        for c, row in zip(coeffs, basis):
          vector = f.vadd(vector, f.vscale(row, c))
        span.add(tuple(int(x) for x in vector))
      solutions = {
          x for x in itertools.product(f.elements(), repeat=3)
          if not linear_algebra.apply(f, matrix, np.array(x)).any()
      }
      self.assertEqual(span, solutions)


if __name__ == "__main__":
  absltest.main()
