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

"""Tests for reraised_exception."""

import pickle

from absl.testing import absltest
from carlitz import laurent
from carlitz import tate
from carlitz._src import reraised_exception


def _short_window():
  raise laurent.PrecisionError("value is known down to s^-4")


def _evaluate():
  with reraised_exception.computing(lambda: "Ω(θ) at N=40"):
    _short_window()


class CannotBeSubclassedError(Exception):

  def __init_subclass__(cls):
    raise ValueError("This class is final.")


class ReraisedExceptionTest(absltest.TestCase):

  def test_keeps_type_and_adds_context(self):
    with self.assertRaises(laurent.PrecisionError) as cm:
      _evaluate()
    self.assertIsInstance(cm.exception, ArithmeticError)
    self.assertEqual(cm.exception.context, "Ω(θ) at N=40")
    self.assertEqual(
        str(cm.exception),
        "value is known down to s^-4 (while computing Ω(θ) at N=40)")

  def test_forwards_attributes(self):
    original = tate.TruncationError("too short", required_t_prec=17)
    proxied = reraised_exception.with_context(original, "Ψ(θ)")
    self.assertEqual(proxied.required_t_prec, 17)

  def test_nested_contexts(self):
    def outer():
      with reraised_exception.computing(lambda: "the period matrix"):
        _evaluate()

    with self.assertRaises(laurent.PrecisionError) as cm:
      outer()
    self.assertIn("Ω(θ) at N=40", str(cm.exception))
    self.assertTrue(str(cm.exception).endswith("the period matrix)"))

  def test_failing_description_reraises_original(self):
    def broken():
      with reraised_exception.computing(lambda: 1 / 0):
        _short_window()

    with self.assertRaises(laurent.PrecisionError) as cm:
      broken()
    self.assertEqual(str(cm.exception), "value is known down to s^-4")

  def test_unsubclassable_exception_is_returned_unchanged(self):
    original = CannotBeSubclassedError()
    self.assertIs(reraised_exception.with_context(original, "unused"), original)

  def test_pickling(self):
    original = ValueError("bad index")
    proxied = reraised_exception.with_context(original, "ζ(1,2)")
    restored = pickle.loads(pickle.dumps(proxied))
    self.assertIs(type(restored), type(proxied))
    self.assertEqual(restored.context, "ζ(1,2)")


if __name__ == "__main__":
  absltest.main()
