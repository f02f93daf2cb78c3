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

"""JSON serialization of values, series, period systems and reports.

`dump_json` turns a value into a versioned JSON document with sorted keys, so
that equal values always give byte-identical output; `load_json` recreates the
value. Every registered object is written as a dictionary with a "type" tag:

    {"schema_version": "1", "root": {"type": "laurent", "q": 3, "v_start_s": 0,
                                     "prec_s": null, ...}}

JSON arrays are read back as tuples, and dictionaries with non-string keys are
written as {"type": "mapping", "items": [[key, value], ...]}.
"""

import dataclasses
import json
from typing import Any, Callable, Dict, Optional, Tuple, Type

from carlitz import laurent
from carlitz import motives
from carlitz import relations
from carlitz import scalars
from carlitz import specials
from carlitz import tate
import numpy as np

_VERSION = "1"

_VERSION_KEY = "schema_version"
_ROOT_KEY = "root"
_TYPE_KEY = "type"
_ITEMS_KEY = "items"
_MAPPING_TYPE = "mapping"

Encoder = Callable[[Any], Dict[str, Any]]
Decoder = Callable[[Dict[str, Any]], Any]

# Maps a type to its tag and a function returning its (unencoded) fields.
_encoders_by_type: Dict[Type[Any], Tuple[str, Encoder]] = {}
# Maps a tag to a function building the object from its decoded fields.
_decoders_by_tag: Dict[str, Decoder] = {}


class UnserializableValueError(Exception):
  """Raised when a value has no registered encoding."""


class DeserializationError(Exception):
  """Raised for malformed documents, unknown tags or version mismatches."""


def register(object_type: Type[Any], tag: str, encode: Encoder,
             decode: Decoder):
  """Registers the encoding of `object_type` under `tag`."""
  if tag == _MAPPING_TYPE:
    raise ValueError(f"the tag {tag!r} is reserved")
  _encoders_by_type[object_type] = (tag, encode)
  _decoders_by_tag[tag] = decode


def register_dataclass(object_type: Type[Any], tag: str):
  """Registers a dataclass field by field; only `init` fields are kept."""
  names = [f.name for f in dataclasses.fields(object_type) if f.init]

  def encode(value):
    return {name: getattr(value, name) for name in names}

  def decode(fields):
    return object_type(**fields)

  register(object_type, tag, encode, decode)


class Serialization:
  """Encodes one value; the document is available as `result`."""

  def __init__(self, value: Any):
    self._result = {_VERSION_KEY: _VERSION, _ROOT_KEY: self._encode(value, "")}

  @property
  def result(self) -> Dict[str, Any]:
    return self._result

  def _encode(self, value: Any, path: str) -> Any:
    if value is None or isinstance(value, (bool, str)):
      return value
    if isinstance(value, np.integer):
      return int(value)
    if isinstance(value, (int, float)):
      return value
    if isinstance(value, (list, tuple)):
      return [self._encode(x, f"{path}[{i}]") for i, x in enumerate(value)]
    if isinstance(value, dict):
      items = [[self._encode(k, f"{path}.<key>"),
                self._encode(v, f"{path}[{k!r}]")] for k, v in value.items()]
      items.sort(key=lambda item: json.dumps(item[0], sort_keys=True))
      return {_TYPE_KEY: _MAPPING_TYPE, _ITEMS_KEY: items}
    entry = _encoders_by_type.get(type(value))
    if entry is None:
      raise UnserializableValueError(
          f"no encoding for {type(value).__name__} at {path or '<root>'}")
    tag, encode = entry
    fields = encode(value)
    out = {
        name: self._encode(field, f"{path}.{name}")
        for name, field in fields.items()
    }
    out[_TYPE_KEY] = tag
    return out


class Deserialization:
  """Decodes one document; the value is available as `result`."""

  def __init__(self, document: Any):
    if not isinstance(document, dict) or _ROOT_KEY not in document:
      raise DeserializationError("not a serialized carlitz document")
    version = document.get(_VERSION_KEY)
    if version != _VERSION:
      raise DeserializationError(
          f"schema version {version!r} is not the supported {_VERSION!r}")
    self._result = self._decode(document[_ROOT_KEY])

  @property
  def result(self) -> Any:
    return self._result

  def _decode(self, value: Any) -> Any:
    if isinstance(value, list):
      return tuple(self._decode(x) for x in value)
    if not isinstance(value, dict):
      return value
    tag = value.get(_TYPE_KEY)
    if tag == _MAPPING_TYPE:
      return {self._decode(k): self._decode(v) for k, v in value[_ITEMS_KEY]}
    decode = _decoders_by_tag.get(tag)
    if decode is None:
      raise DeserializationError(f"unknown type tag {tag!r}")
    fields = {k: self._decode(v) for k, v in value.items() if k != _TYPE_KEY}
    try:
      return decode(fields)
    except (TypeError, ValueError, ArithmeticError) as e:
      raise DeserializationError(f"cannot rebuild {tag!r}: {e}") from e


def dump_json(value: Any, indent: Optional[int] = None) -> str:
  """Returns the JSON document of `value`.

  Raises:
    UnserializableValueError: If some part of `value` has no encoding.
  """
  return json.dumps(
      Serialization(value).result,
      indent=indent,
      sort_keys=True,
      ensure_ascii=False)


def load_json(serialized_value: str) -> Any:
  """Returns the value stored in a document written by `dump_json`.

  Raises:
    DeserializationError: For invalid JSON, unknown tags or another version.
  """
  try:
    document = json.loads(serialized_value)
  except json.JSONDecodeError as e:
    raise DeserializationError(f"invalid JSON: {e}") from e
  return Deserialization(document).result


@dataclasses.dataclass(frozen=True)
class ThetaValuation:
  """v_θ of a series as the unreduced fraction num / den, with den = q - 1."""
  num: int
  den: int


def _encode_field(field: scalars.FieldDesc) -> Dict[str, Any]:
  return {"p": field.p, "m": field.m, "modulus": field.modulus}


def _decode_field(fields: Dict[str, Any]) -> scalars.FieldDesc:
  return scalars.field_create(fields["p"], fields["m"], tuple(fields["modulus"]))


def _encode_poly(poly: scalars.PolyTheta) -> Dict[str, Any]:
  return {"field": poly.field, "coeffs": poly.coeffs}


def _decode_poly(fields: Dict[str, Any]) -> scalars.PolyTheta:
  return scalars.PolyTheta.of(fields["field"], fields["coeffs"])


def _encode_laurent(value: laurent.LaurentL) -> Dict[str, Any]:
  """The field is flattened into q, p, m and modulus; prec_s is null if exact."""
  field = value.field
  valuation = None
  if value.coeffs:
    valuation = ThetaValuation(-value.v_start, field.q - 1)
  return {
      "q": field.q,
      "p": field.p,
      "m": field.m,
      "modulus": field.modulus,
      "v_start_s": value.v_start,
      "prec_s": value.prec,
      "coeffs": value.coeffs,
      "valuation": valuation,
  }


def _decode_laurent(fields: Dict[str, Any]) -> laurent.LaurentL:
  field = scalars.field_create(fields["p"], fields["m"],
                               tuple(fields["modulus"]))
  if field.q != fields["q"]:
    raise ValueError(f"q = {fields['q']} does not match the field of {field.q}")
  return laurent.LaurentL(field, fields["v_start_s"], tuple(fields["coeffs"]),
                          fields["prec_s"])


_BASIS_FIELDS = tuple(
    f.name
    for f in dataclasses.fields(relations.RelationBasis)
    if f.init and f.name != "relations")


def _encode_basis(basis: relations.RelationBasis) -> Dict[str, Any]:
  fields = {name: getattr(basis, name) for name in _BASIS_FIELDS}
  fields["basis"] = basis.relations
  return fields


def _decode_basis(fields: Dict[str, Any]) -> relations.RelationBasis:
  fields = dict(fields)
  return relations.RelationBasis(relations=fields.pop("basis"), **fields)


register(scalars.FieldDesc, "field", _encode_field, _decode_field)
register(scalars.PolyTheta, "poly_theta", _encode_poly, _decode_poly)
register(laurent.LaurentL, "laurent", _encode_laurent, _decode_laurent)
register(relations.RelationBasis, "relation_basis", _encode_basis,
         _decode_basis)

for _type, _tag in (
    (ThetaValuation, "theta_valuation"),
    (laurent.RationalK, "rational_k"),
    (tate.TSeries, "tseries"),
    (tate.TPoly, "tpoly"),
    (specials.Index, "index"),
    (specials.TPoint, "tpoint"),
    (motives.IdElement, "id_element"),
    (motives.PeriodSystem, "period_system"),
    (motives.EntryResidual, "entry_residual"),
    (motives.ResidualReport, "residual_report"),
    (relations.RelationQuery, "relation_query"),
    (relations.Reconstruction, "reconstruction"),
    (relations.HypothesisReport, "hypothesis_report"),
    (relations.IndependenceReport, "independence_report"),
    (relations.SuiteCase, "suite_case"),
    (relations.SuiteReport, "suite_report"),
):
  register_dataclass(_type, _tag)
