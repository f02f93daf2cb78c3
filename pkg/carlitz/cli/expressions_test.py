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


"""Tests for expressions."""

from absl.testing import absltest
from absl.testing import parameterized
from carlitz import laurent
from carlitz import relations
from carlitz import scalars
from carlitz import specials
from carlitz import tate
from carlitz.cli import expressions
from carlitz.testing import test_util

Index = specials.Index
PolyTheta = scalars.PolyTheta
RationalK = laurent.RationalK
TPoly = tate.TPoly


def _theta(field):
  return RationalK.of(PolyTheta.theta(field))


class ParseTest(parameterized.TestCase):

  def test_structure(self):
    f = scalars.field_create(3)
    self.assertEqual(
        expressions.parse_expression("zeta(1,5) / pi^2", f),
        expressions.Binary("/", expressions.Special(Index((1, 5))),
                           expressions.Power(expressions.Named("pi"), 2)))

  def test_left_associative(self):
    f = scalars.field_create(2)
    node = expressions.parse_expression("pi * omega / zeta(1)", f)
    self.assertEqual(node.op, "/")
    self.assertEqual(node.left.op, "*")

  def test_negative_power_and_theta(self):
    f = scalars.field_create(2)
    self.assertEqual(
        expressions.parse_expression("θ^-1", f),
        expressions.Power(expressions.Constant(_theta(f)), -1))

  def test_cmpl(self):
    f = scalars.field_create(3)
    node = expressions.parse_expression("cmpl(1, 2; 1, theta)", f)
    self.assertEqual(node.index, Index((1, 2)))
    self.assertEqual(node.point.entries,
                     (TPoly.constant(RationalK.from_int(f, 1)),
                      TPoly.constant(_theta(f))))

  @parameterized.named_parameters(
      dict(testcase_name="unclosed", text="zeta(1"),
      dict(testcase_name="unknown_symbol", text="pi $ 2"),
      dict(testcase_name="unknown_name", text="gamma(1)"),
      dict(testcase_name="trailing", text="pi pi"),
      dict(testcase_name="empty", text=""),
      dict(testcase_name="zero_part", text="zeta(0,1)"),
      dict(testcase_name="sum_of_values", text="pi + 1"),
  )
  def test_errors(self, text):
    with self.assertRaises(expressions.ExpressionError):
      expressions.parse_expression(text, scalars.field_create(2))


class PolynomialTest(parameterized.TestCase):

  def test_linear_in_t(self):
    f = scalars.field_create(3)
    self.assertEqual(
        expressions.parse_polynomial("theta + t", f),
        TPoly.of(f, [_theta(f), RationalK.from_int(f, 1)]))

  def test_division_by_k(self):
    f = scalars.field_create(2)
    value = expressions.parse_polynomial("(theta^2 + 1)/(theta + 1)", f)
    # θ^2 + 1 = (θ + 1)^2 in characteristic 2.
    self.assertEqual(value, TPoly.from_poly(PolyTheta.of(f, [1, 1])))

  def test_rational_coefficient(self):
    f = scalars.field_create(3)
    value = expressions.parse_polynomial("t/theta", f)
    self.assertEqual(value.coeffs[1],
                     RationalK.from_int(f, 1) / _theta(f))

  def test_negation_and_integers(self):
    f = scalars.field_create(3)
    self.assertEqual(
        expressions.parse_polynomial("-1", f),
        TPoly.constant(RationalK.from_int(f, 2)))
    self.assertEqual(
        expressions.parse_polynomial("4*t^2 - t^2", f),
        TPoly(f))

  def test_generator(self):
    f = scalars.field_create(2, 2)
    value = expressions.parse_polynomial("g", f)
    self.assertEqual(value, TPoly.constant(RationalK.from_int(f, 2)))
    with self.assertRaises(expressions.ExpressionError):
      expressions.parse_polynomial("g", scalars.field_create(2))

  def test_division_by_t(self):
    with self.assertRaises(expressions.ExpressionError):
      expressions.parse_polynomial("1/t", scalars.field_create(2))

  def test_point(self):
    f = scalars.field_create(3)
    point = expressions.parse_point("1, (theta + t)^2", f)
    self.assertLen(point.entries, 2)
    self.assertEqual(point.entries[1].degree, 2)


class SplitTest(absltest.TestCase):

  def test_nested_commas(self):
    self.assertEqual(
        expressions.split_top_level("zeta(1,5), pi^2 ,cmpl(1; 1, theta)"),
        ["zeta(1,5)", "pi^2", "cmpl(1; 1, theta)"])

  def test_unbalanced(self):
    with self.assertRaises(expressions.ExpressionError):
      expressions.split_top_level("zeta(1,5")
    with self.assertRaises(expressions.ExpressionError):
      expressions.split_top_level("pi), pi")
    with self.assertRaises(expressions.ExpressionError):
      expressions.split_top_level("pi,,pi")


class EvaluateTest(test_util.TestCase, parameterized.TestCase):

  def test_pi(self):
    f = scalars.field_create(2)
    self.assertEqual(
        expressions.evaluate_text("pi", f, 20), tate.pi_build(f, 20))

  @parameterized.parameters(2, 3)
  def test_omega_times_pi_is_one(self, q):
    f = scalars.field_for_q(q)
    value = expressions.evaluate_text("omega * pi", f, 20)
    self.assertSeriesAgree(value, laurent.one(f))
    self.assertEqual(value.prec, laurent.theta_floor(f, 20))

  def test_quotient_reaches_precision(self):
    f = scalars.field_create(3)
    value = expressions.evaluate_text("zeta(1)/pi", f, 20, budget=2**12)
    self.assertEqual(value.prec, laurent.theta_floor(f, 20))
    self.assertSeriesAgree(value, relations.even_ratio(f, 1, 20, 2**12))

  def test_exact_inverse(self):
    f = scalars.field_create(2)
    value = expressions.evaluate_text("theta^-1", f, 10)
    self.assertSeriesAgree(
        value,
        laurent.rational_to_laurent(
            RationalK.from_int(f, 1) / _theta(f), laurent.theta_floor(f, 10)))
    self.assertKnownDownTo(value, laurent.theta_floor(f, 10))

  def test_exact_product_stays_exact(self):
    f = scalars.field_create(3)
    value = expressions.evaluate_text("2 * theta^2", f, 10)
    self.assertTrue(value.is_exact)
    self.assertEqual(value, laurent.from_poly(PolyTheta.of(f, [0, 0, 2])))

  def test_cmpl(self):
    f = scalars.field_create(3)
    value = expressions.evaluate_text("cmpl(1; 1)", f, 20)
    self.assertEqual(
        value, specials.cmpl_eval(Index((1,)), specials.TPoint.ones(f, 1), 20))

  def test_list(self):
    f = scalars.field_create(2)
    labels, values = expressions.evaluate_list("pi, pi^2", f, 20)
    self.assertEqual(labels, ("pi", "pi^2"))
    self.assertSeriesAgree(values[1], values[0] * values[0])


if __name__ == "__main__":
  absltest.main()
