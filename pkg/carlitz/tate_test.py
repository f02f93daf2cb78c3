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

"""Tests for carlitz.tate."""

import fractions
import random

from absl.testing import absltest
from absl.testing import parameterized
from carlitz import laurent
from carlitz import scalars
from carlitz import tate
from carlitz.testing import test_util

PolyTheta = scalars.PolyTheta
RationalK = laurent.RationalK


def _theta(field):
  return RationalK.of(PolyTheta.theta(field))


def _int(field, c):
  return RationalK.from_int(field, c)


class SeriesArithmeticTest(test_util.TestCase, parameterized.TestCase):

  def test_difference_of_squares(self):
    f = scalars.field_create(3)
    theta = _theta(f)
    a = tate.TPoly.of(f, [_int(f, 1), theta]).to_series(4)
    b = tate.TPoly.of(f, [_int(f, 1), -theta]).to_series(4)
    expected = tate.TPoly.of(
        f, [_int(f, 1), _int(f, 0), -(theta * theta)]).to_series(4)
    self.assertEqual(tate.tseries_arith(a, b, "mul"), expected)
    self.assertEqual(expected.coeffs[2], laurent.theta_monomial(f, 2, 2))

  def test_scalar_mul_by_zero(self):
    f = scalars.field_create(2)
    a = test_util.random_series(f, random.Random(0), 4)
    self.assertTrue(tate.tseries_arith(a, laurent.zero(f), "scalar_mul")
                    .is_zero())

  def test_t_prec_is_minimum(self):
    f = scalars.field_create(2)
    rng = random.Random(1)
    a = test_util.random_series(f, rng, 3)
    b = test_util.random_series(f, rng, 5)
    self.assertEqual((a * b).t_prec, 3)
    self.assertEqual((a + b).t_prec, 3)

  def test_mul_associative(self):
    f = scalars.field_create(2)
    rng = random.Random(2)
    for _ in range(100):
      a, b, c = (test_util.random_series(f, rng, 6) for _ in range(3))
      self.assertSeriesAgree((a * b) * c, a * (b * c))

  def test_inverse(self):
    f = scalars.field_create(3)
    omega = tate.omega_build(f, 5, 20)
    one = tate.constant(f, laurent.one(f), 5)
    self.assertSeriesAgree(omega * tate.inverse(omega), one)


class TwistTest(test_util.TestCase, parameterized.TestCase):

  def test_example(self):
    f = scalars.field_create(3)
    a = tate.TPoly.of(f, [_int(f, 1), _theta(f)]).to_series(3)
    expected = tate.TPoly.of(f, [_int(f, 1), _theta(f)**3]).to_series(3)
    self.assertEqual(tate.twist(a, 1), expected)

  def test_zero_twist_is_identity(self):
    f = scalars.field_create(3)
    a = test_util.random_series(f, random.Random(3), 4)
    self.assertEqual(tate.twist(a, 0), a)

  def test_negative_twist(self):
    f = scalars.field_create(3)
    a = tate.constant(f, laurent.one(f), 2)
    with self.assertRaises(tate.UnsupportedOperationError):
      tate.twist(a, -1)

  @parameterized.parameters(2, 3)
  def test_ring_endomorphism(self, q):
    f = scalars.field_for_q(q)
    rng = random.Random(4)
    for _ in range(100):
      a, b = (test_util.random_series(f, rng, 3) for _ in range(2))
      self.assertSeriesAgree(
          tate.twist(a * b, 1), tate.twist(a, 1) * tate.twist(b, 1))
      self.assertSeriesAgree(
          tate.twist(a + b, 1), tate.twist(a, 1) + tate.twist(b, 1))

  def test_twists_compose(self):
    f = scalars.field_create(2)
    a = test_util.random_series(f, random.Random(5), 3)
    self.assertSeriesAgree(tate.twist(tate.twist(a, 1), 2), tate.twist(a, 3))


class OmegaTest(test_util.TestCase, parameterized.TestCase):

  @parameterized.parameters((2, 8, 40), (3, 8, 40), (4, 10, 60))
  def test_carlitz_equation(self, q, t_prec, n):
    f = scalars.field_for_q(q)
    omega = tate.omega_build(f, t_prec, n)
    self.assertKnownDownTo(omega, laurent.theta_floor(f, n))
    self.assertSeriesZero(tate.omega_residual(omega))

  @parameterized.parameters(2, 3, 4)
  def test_leading_valuations(self, q):
    f = scalars.field_for_q(q)
    omega = tate.omega_build(f, 4, 20)
    leading = fractions.Fraction(q, q - 1)
    self.assertEqual(laurent.valuation(omega.coeffs[0]), leading)
    self.assertEqual(laurent.valuation(omega.coeffs[1]), leading + q)

  @parameterized.parameters(2, 3)
  def test_valuations_increase(self, q):
    f = scalars.field_for_q(q)
    omega = tate.omega_build(f, 6, 60)
    valuations = [
        laurent.valuation(c) for c in omega.coeffs if not c.is_zero()
    ]
    self.assertGreater(len(valuations), 2)
    self.assertTrue(all(v > 0 for v in valuations))
    self.assertEqual(valuations, sorted(set(valuations)))

  @parameterized.parameters(2, 3, 4)
  def test_omega_at_theta_times_pi_is_one(self, q):
    f = scalars.field_for_q(q)
    n, t_prec = 20, 8
    omega = tate.omega_build(f, t_prec, n + t_prec + 2)
    value = tate.eval_at_theta(omega, n)
    pi = tate.pi_build(f, n)
    self.assertSeriesAgree(value * pi, laurent.one(f))
    self.assertLess((value * pi).prec, 0)

  def test_eval_needs_longer_truncation(self):
    f = scalars.field_create(2)
    omega = tate.omega_build(f, 2, 42)
    with self.assertRaises(tate.TruncationError) as cm:
      tate.eval_at_theta(omega, 40)
    self.assertGreater(cm.exception.required_t_prec, 2)

  @parameterized.parameters(2, 3, 4)
  def test_omega_at_theta_grows_truncation(self, q):
    f = scalars.field_for_q(q)
    floor = laurent.theta_floor(f, 40)
    value = tate.omega_at_theta(f, 40, t_prec=2)
    self.assertEqual(value.prec, floor - q)
    product = value * tate.pi_build(f, 40)
    self.assertEqual(product.prec, floor)
    self.assertSeriesAgree(product, laurent.one(f))

  def test_eval_needs_coefficient_precision(self):
    f = scalars.field_create(2)
    omega = tate.omega_build(f, 8, 40)
    with self.assertRaises(laurent.PrecisionError):
      tate.eval_at_theta(omega, 40)

  def test_eval_constant(self):
    f = scalars.field_create(3)
    series = tate.constant(f, laurent.one(f), 4)
    self.assertEqual(
        tate.eval_at_theta(series, 10),
        laurent.truncate(laurent.one(f), laurent.theta_floor(f, 10)))


class PiTest(parameterized.TestCase):

  @parameterized.parameters(2, 3, 4, 5)
  def test_leading_term(self, q):
    f = scalars.field_for_q(q)
    pi = tate.pi_build(f, 15)
    self.assertEqual(pi.v_start, q)
    self.assertEqual(pi.coeffs[0], 1)
    self.assertEqual(laurent.valuation(pi), fractions.Fraction(-q, q - 1))
    unit = laurent.mul(pi, laurent.monomial(f, 1, -q))
    self.assertTrue(laurent.in_k_infinity(unit))

  @parameterized.parameters(2, 3)
  def test_refinement(self, q):
    f = scalars.field_for_q(q)
    coarse = tate.pi_build(f, 12)
    fine = tate.pi_build(f, 30)
    self.assertEqual(laurent.truncate(fine, coarse.prec), coarse)


class TPolyTest(parameterized.TestCase):

  def test_twisted_value(self):
    f = scalars.field_create(3)
    u = tate.TPoly.of(f, [_theta(f), _int(f, 1)])  # θ + t
    self.assertEqual(u.twisted_value(1), _theta(f)**3 + _theta(f))

  def test_qth_root(self):
    f = scalars.field_create(2)
    u = tate.TPoly.of(f, [_theta(f), _int(f, 1)])
    self.assertEqual(u.twist(1).qth_root(), u)
    self.assertIsNone(u.qth_root())

  def test_norm_top(self):
    f = scalars.field_create(3)
    u = tate.TPoly.of(f, [_theta(f)**2, _int(f, 1)])
    self.assertEqual(u.norm_top(), 4)
    self.assertIsNone(tate.TPoly(f).norm_top())

  def test_bump_is_seen_by_the_carlitz_equation(self):
    f = scalars.field_create(2)
    omega = tate.bump(tate.omega_build(f, 4, 20), 1, -1)
    residual = tate.omega_residual(omega)
    self.assertFalse(residual.is_zero())
    self.assertEqual(residual.first_nonzero()[0], 1)

  def test_bump_outside_window(self):
    f = scalars.field_create(3)
    omega = tate.omega_build(f, 2, 10)
    with self.assertRaises(ValueError):
      tate.bump(omega, 3, 0)
    with self.assertRaises(ValueError):
      tate.bump(omega, 0, omega.coeffs[0].prec - 1)

  def test_rational_coefficients_need_floor(self):
    f = scalars.field_create(3)
    u = tate.TPoly.constant(_int(f, 1) / _theta(f))
    series = u.to_series(2, -10)
    self.assertEqual(series.coeffs[0].prec, -10)
    self.assertTrue(series.coeffs[1].is_exact)


if __name__ == "__main__":
  absltest.main()
