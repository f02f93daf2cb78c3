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

"""Tests for carlitz.scalars."""

import itertools
import random

from absl.testing import absltest
from absl.testing import parameterized
from carlitz import scalars
import numpy as np

_SMALL_FIELDS = ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2))


def _naive_convolve(field, a, b):
  out = [0] * (len(a) + len(b) - 1)
  for i, x in enumerate(a):
    for j, y in enumerate(b):
      out[i + j] = field.add(out[i + j], field.mul(x, y))
  return out


class FieldCreateTest(parameterized.TestCase):

  def test_gf3(self):
    f = scalars.field_create(3)
    self.assertEqual(f.q, 3)
    self.assertEqual(f.mul(2, 2), 1)
    self.assertEqual(f.inv(2), 2)

  def test_gf4_default_modulus(self):
    f = scalars.field_create(2, 2)
    self.assertEqual(f.modulus, (1, 1, 1))
    g = f.modulus_root
    self.assertEqual(f.mul(g, g), f.add(g, 1))
    self.assertEqual(f.pow(g, 4), g)

  def test_gf9_default_modulus(self):
    self.assertEqual(scalars.field_create(3, 2).modulus, (1, 0, 1))

  def test_gf2_addition(self):
    self.assertEqual(scalars.field_create(2).add(1, 1), 0)

  @parameterized.named_parameters(
      dict(testcase_name="not_prime", p=4, m=1, modulus=None),
      dict(testcase_name="reducible", p=2, m=2, modulus=(1, 0, 1)),
      dict(testcase_name="wrong_degree", p=3, m=2, modulus=(1, 1, 0, 1)),
      dict(testcase_name="too_large", p=2, m=17, modulus=None),
  )
  def test_invalid(self, p, m, modulus):
    with self.assertRaises(scalars.FieldError):
      scalars.field_create(p, m, modulus)

  def test_inverse_of_zero(self):
    with self.assertRaises(ZeroDivisionError):
      scalars.field_create(5).inv(0)

  @parameterized.parameters(4, 8, 9, 27, 49, 3**7)
  def test_prime_power(self, q):
    p, m = scalars.prime_power(q)
    self.assertEqual(p**m, q)
    self.assertTrue(scalars.is_prime(p))

  def test_prime_power_rejects_composites(self):
    with self.assertRaises(scalars.FieldError):
      scalars.prime_power(12)


class FieldAxiomsTest(parameterized.TestCase):

  @parameterized.parameters(*_SMALL_FIELDS)
  def test_exhaustive_axioms(self, p, m):
    f = scalars.field_create(p, m)
    elements = list(f.elements())
    for x, y, z in itertools.product(elements, repeat=3):
      self.assertEqual(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)))
      self.assertEqual(f.add(f.add(x, y), z), f.add(x, f.add(y, z)))
      self.assertEqual(
          f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)))
    for x in elements:
      self.assertEqual(f.add(x, f.neg(x)), 0)
      if x:
        self.assertEqual(f.mul(x, f.inv(x)), 1)

  @parameterized.parameters(*_SMALL_FIELDS)
  def test_frobenius_fixes_and_is_additive(self, p, m):
    f = scalars.field_create(p, m)
    for x, y in itertools.product(f.elements(), repeat=2):
      self.assertEqual(f.pow(x, f.q), x)
      self.assertEqual(
          f.frobenius(f.add(x, y)), f.add(f.frobenius(x), f.frobenius(y)))

  @parameterized.parameters((2, 8), (3, 5), (13, 2), (2, 13))
  def test_frobenius_random_pairs_large_fields(self, p, m):
    f = scalars.field_create(p, m)
    rng = random.Random(7)
    for _ in range(1000):
      x, y = f.random_element(rng), f.random_element(rng)
      self.assertEqual(f.pow(f.add(x, y), f.q),
                       f.add(f.pow(x, f.q), f.pow(y, f.q)))

  def test_negative_power(self):
    f = scalars.field_create(7)
    self.assertEqual(f.pow(3, -1), f.inv(3))
    self.assertEqual(f.mul(f.pow(3, -4), f.pow(3, 4)), 1)

  @parameterized.parameters((2, 2), (3, 2), (2, 5), (5, 3), (2, 13))
  def test_table_and_digit_multiplication_agree(self, p, m):
    f = scalars.field_create(p, m)
    rng = random.Random(11)
    for _ in range(200):
      x, y = f.random_element(rng), f.random_element(rng)
      self.assertEqual(f.mul(x, y), f._slow_mul(x, y) if x and y else 0)

  @parameterized.parameters((2, 2), (3, 2), (2, 3))
  def test_matches_galois(self, p, m):
    try:
      import galois  # pylint: disable=g-import-not-at-top
    except ImportError:
      self.skipTest("galois is not installed")
    f = scalars.field_create(p, m)
    modulus = galois.Poly(list(reversed(f.modulus)), field=galois.GF(p))
    oracle = galois.GF(p**m, irreducible_poly=modulus)
    for x, y in itertools.product(f.elements(), repeat=2):
      self.assertEqual(f.mul(x, y), int(oracle(x) * oracle(y)))
      self.assertEqual(f.add(x, y), int(oracle(x) + oracle(y)))


class KernelTest(parameterized.TestCase):

  @parameterized.parameters(*_SMALL_FIELDS)
  def test_convolve_matches_naive(self, p, m):
    f = scalars.field_create(p, m)
    rng = random.Random(3)
    a = [f.random_element(rng) for _ in range(9)]
    b = [f.random_element(rng) for _ in range(5)]
    self.assertEqual(f.convolve(np.array(a), np.array(b)).tolist(),
                     _naive_convolve(f, a, b))

  @parameterized.parameters(*_SMALL_FIELDS)
  def test_vector_maps(self, p, m):
    f = scalars.field_create(p, m)
    a = np.arange(f.q)
    b = a[::-1].copy()
    self.assertEqual(f.vadd(a, b).tolist(),
                     [f.add(int(x), int(y)) for x, y in zip(a, b)])
    self.assertEqual(f.vneg(a).tolist(), [f.neg(int(x)) for x in a])
    c = f.q - 1
    self.assertEqual(f.vscale(a, c).tolist(), [f.mul(int(x), c) for x in a])

  @parameterized.parameters(*_SMALL_FIELDS)
  def test_vsum_matches_pairwise_sum(self, p, m):
    f = scalars.field_create(p, m)
    rng = random.Random(5)
    block = np.array([[f.random_element(rng) for _ in range(6)]
                      for _ in range(7)])
    expected = np.zeros(6, dtype=np.int64)
    for row in block:
      expected = f.vadd(expected, row)
    self.assertEqual(f.vsum(block).tolist(), expected.tolist())


class PolyThetaTest(parameterized.TestCase):

  def test_freshmans_dream(self):
    f = scalars.field_create(2)
    a = scalars.PolyTheta.of(f, (1, 1))
    self.assertEqual(a * a, scalars.PolyTheta.of(f, (1, 0, 1)))

  def test_addition(self):
    f = scalars.field_create(3)
    a = scalars.PolyTheta.of(f, (1, 1))
    b = scalars.PolyTheta.of(f, (2, 1))
    self.assertEqual(a + b, scalars.PolyTheta.of(f, (0, 2)))

  def test_eval_frobenius_power_fixes_prime_field(self):
    f = scalars.field_create(2)
    a = scalars.PolyTheta.of(f, (1, 1))
    self.assertEqual(scalars.poly_arith(a, 1, "eval_frobenius_power"), a)

  def test_mismatched_fields(self):
    a = scalars.PolyTheta.theta(scalars.field_create(2))
    b = scalars.PolyTheta.theta(scalars.field_create(3))
    with self.assertRaises(scalars.FieldMismatchError):
      _ = a + b

  def test_trailing_zero_rejected(self):
    with self.assertRaises(scalars.FieldError):
      scalars.PolyTheta(scalars.field_create(2), (1, 0))

  @parameterized.parameters(*_SMALL_FIELDS)
  def test_divmod(self, p, m):
    f = scalars.field_create(p, m)
    rng = random.Random(5)
    for _ in range(20):
      a = scalars.random_poly(f, rng, 7)
      b = scalars.random_poly(f, rng, 3)
      quot, rem = a.divmod(b)
      self.assertEqual(quot * b + rem, a)
      self.assertLess(rem.degree, b.degree)

  def test_gcd(self):
    f = scalars.field_create(3)
    theta = scalars.PolyTheta.theta(f)
    one = scalars.PolyTheta.constant(f, 1)
    a = (theta + one) * (theta * theta + one)
    b = (theta + one) * theta
    self.assertEqual(scalars.gcd(a.scale(2), b), theta + one)

  def test_twist_and_qth_root(self):
    f = scalars.field_create(3)
    a = scalars.PolyTheta.of(f, (2, 1, 1))
    twisted = a.twist(1)
    self.assertEqual(twisted, scalars.PolyTheta.of(f, (2, 0, 0, 1, 0, 0, 1)))
    self.assertEqual(twisted, a**3)
    self.assertEqual(twisted.qth_root(), a)
    self.assertIsNone(a.qth_root())

  def test_division_by_zero_polynomial(self):
    f = scalars.field_create(2)
    with self.assertRaises(scalars.FieldError):
      scalars.PolyTheta.theta(f).divmod(scalars.PolyTheta(f))


class EnumerateMonicsTest(parameterized.TestCase):

  def test_order_q2_d2(self):
    f = scalars.field_create(2)
    self.assertEqual([m.coeffs for m in scalars.enumerate_monics(f, 2)],
                     [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])

  def test_degree_one(self):
    f = scalars.field_create(2)
    self.assertEqual([str(m) for m in scalars.enumerate_monics(f, 1)],
                     ["θ", "θ + 1"])

  def test_degree_zero(self):
    f = scalars.field_create(3)
    self.assertEqual(list(scalars.enumerate_monics(f, 0)),
                     [scalars.PolyTheta.constant(f, 1)])

  @parameterized.parameters(2, 3, 4, 5)
  def test_counts(self, q):
    f = scalars.field_for_q(q)
    for d in range(7):
      monics = list(scalars.enumerate_monics(f, d))
      self.assertLen(monics, q**d)
      self.assertLen(set(monics), q**d)
      self.assertTrue(all(m.is_monic and m.degree == d for m in monics))


if __name__ == "__main__":
  absltest.main()
