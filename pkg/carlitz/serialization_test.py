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

"""Tests for serialization."""

import dataclasses
import json

from absl.testing import absltest
from carlitz import laurent
from carlitz import motives
from carlitz import relations
from carlitz import scalars
from carlitz import serialization
from carlitz import specials
from carlitz import tate
from carlitz.testing import test_util


@dataclasses.dataclass(frozen=True)
class Sample:
  name: str
  weight: int


class SerializationTest(test_util.TestCase):

  def test_laurent_document(self):
    f = scalars.field_create(3)
    value = laurent.normalize(f, 2, [1, 0, 2], 0)
    document = json.loads(serialization.dump_json(value))
    self.assertEqual(document["schema_version"], "1")
    root = document["root"]
    self.assertEqual(root["type"], "laurent")
    self.assertEqual(
        set(root), {
            "type", "q", "p", "m", "modulus", "v_start_s", "prec_s", "coeffs",
            "valuation"
        })
    self.assertEqual((root["q"], root["p"], root["m"]), (3, 3, 1))
    self.assertEqual(root["modulus"], [0, 1])
    self.assertEqual((root["v_start_s"], root["prec_s"]), (2, 0))
    self.assertEqual(root["coeffs"], [1, 0, 2])
    self.assertEqual(root["valuation"], {
        "type": "theta_valuation",
        "num": -2,
        "den": 2
    })
    self.assertEqual(serialization.load_json(serialization.dump_json(value)),
                     value)

  def test_exact_and_zero_values(self):
    f = scalars.field_create(2, 2)
    exact = laurent.from_poly(scalars.PolyTheta.of(f, [1, 0, 3]))
    root = json.loads(serialization.dump_json(exact))["root"]
    self.assertIsNone(root["prec_s"])
    self.assertEqual(root["q"], 4)
    self.assertEqual(root["valuation"]["den"], 3)
    self.assertEqual(serialization.load_json(serialization.dump_json(exact)),
                     exact)
    zero = laurent.zero(f, -7)
    root = json.loads(serialization.dump_json(zero))["root"]
    self.assertEqual((root["prec_s"], root["coeffs"]), (-7, []))
    self.assertIsNone(root["valuation"])
    self.assertEqual(serialization.load_json(serialization.dump_json(zero)),
                     zero)

  def test_mismatched_q(self):
    f = scalars.field_create(3)
    document = json.loads(serialization.dump_json(laurent.one(f)))
    document["root"]["q"] = 9
    with self.assertRaises(serialization.DeserializationError):
      serialization.load_json(json.dumps(document))

  def test_extension_field(self):
    f = scalars.field_create(2, 2)
    poly = scalars.PolyTheta.of(f, [3, 0, 1])
    loaded = serialization.load_json(serialization.dump_json(poly))
    self.assertEqual(loaded, poly)
    self.assertEqual(loaded.field.modulus, f.modulus)

  def test_deterministic(self):
    f = scalars.field_create(2)
    omega = tate.omega_build(f, 3, 10)
    self.assertEqual(
        serialization.dump_json(omega),
        serialization.dump_json(tate.omega_build(f, 3, 10)))

  def test_period_system(self):
    f = scalars.field_create(2)
    system = motives.build_system(
        specials.Index((1,)), specials.TPoint.ones(f, 1), 2, 8)
    loaded = serialization.load_json(serialization.dump_json(system))
    self.assertEqual(loaded.rows, system.rows)
    self.assertEqual(loaded.lseries.keys(), system.lseries.keys())
    self.assertEqual(loaded.psi, system.psi)
    self.assertEqual(loaded.phi, system.phi)
    self.assertResidualsZero(motives.verify_difference_equation(loaded))

  def test_reports(self):
    f = scalars.field_create(3)
    v = laurent.rational_to_laurent(
        laurent.RationalK.of(
            scalars.PolyTheta.constant(f, 1), scalars.PolyTheta.of(f, [1, 1])),
        -60)
    basis = relations.find_linear_relations(
        relations.RelationQuery((laurent.one(f), v), 1, labels=("1", "v")))
    self.assertEqual(
        serialization.load_json(serialization.dump_json(basis)), basis)
    root = json.loads(serialization.dump_json(basis))["root"]
    self.assertEqual(root["type"], "relation_basis")
    self.assertContainsSubset(
        {"query", "basis", "slack", "verified", "precision_pair"}, set(root))
    self.assertNotIn("relations", root)
    self.assertEqual(root["query"]["type"], "relation_query")
    self.assertEqual(root["query"]["labels"], ["1", "v"])
    self.assertLen(root["basis"], len(basis.relations))
    self.assertEqual(root["basis"][0][0]["type"], "poly_theta")
    self.assertTrue(root["verified"])
    report = motives.ResidualReport(
        (motives.EntryResidual((2, 1), "nonzero", -40, 0, -3),))
    self.assertEqual(
        serialization.load_json(serialization.dump_json(report)), report)

  def test_mapping_keys(self):
    value = {(2, 1): "a", (1, 1): "b"}
    text = serialization.dump_json(value)
    self.assertEqual(serialization.load_json(text), value)
    items = json.loads(text)["root"]["items"]
    self.assertEqual([key for key, _ in items], [[1, 1], [2, 1]])

  def test_unserializable(self):
    with self.assertRaises(serialization.UnserializableValueError):
      serialization.dump_json({"x": object()})

  def test_unknown_tag(self):
    text = json.dumps({"schema_version": "1", "root": {"type": "mystery"}})
    with self.assertRaises(serialization.DeserializationError):
      serialization.load_json(text)

  def test_version_mismatch(self):
    text = json.dumps({"schema_version": "0", "root": 1})
    with self.assertRaises(serialization.DeserializationError):
      serialization.load_json(text)

  def test_invalid_json(self):
    with self.assertRaises(serialization.DeserializationError):
      serialization.load_json("{")

  def test_register_dataclass(self):
    with test_util.temporary_serialization_registry():
      serialization.register_dataclass(Sample, "sample")
      text = serialization.dump_json(Sample("x", 3))
      self.assertEqual(serialization.load_json(text), Sample("x", 3))
    with self.assertRaises(serialization.UnserializableValueError):
      serialization.dump_json(Sample("x", 3))

  def test_reserved_tag(self):
    with test_util.temporary_serialization_registry():
      with self.assertRaises(ValueError):
        serialization.register_dataclass(Sample, "mapping")


if __name__ == "__main__":
  absltest.main()
