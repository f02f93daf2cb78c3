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


"""A small language for values and points on the command line.

Values are products, quotients and integer powers of named quantities:

    expr  := term (("*" | "/") term)*
    term  := atom ("^" ["-"] integer)?
    atom  := "pi" | "omega" | "zeta(" parts ")" | "cmpl(" parts ";" coords ")"
           | integer | "theta" | "(" expr ")"

`omega` is Ω(θ). Point coordinates are polynomials in t over K = F_q(θ),
written with `theta` (or `θ`), `t`, integers, `g` for the generator of F_q
over F_p when m > 1, `+ - * ^` and `/` by an element of K:

    1, theta + t, (theta^2 + 1)/(theta + 1), g*t^2
"""

import dataclasses
import math
import re
from typing import List, Optional, Tuple, Union

from absl import logging
from carlitz import laurent
from carlitz import scalars
from carlitz import specials
from carlitz import tate

LaurentL = laurent.LaurentL
RationalK = laurent.RationalK
TPoly = tate.TPoly

_MAX_ATTEMPTS = 4
_OPERATORS = "(),;+-*/^"
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*|θ)|(\S))")


class ExpressionError(ValueError):
  """Raised for expressions and points that cannot be parsed."""


@dataclasses.dataclass(frozen=True)
class Named:
  name: str  # "pi" or "omega".


@dataclasses.dataclass(frozen=True)
class Special:
  """ζ(ν) (point None) or Li_ν(z)."""
  index: specials.Index
  point: Optional[specials.TPoint] = None


@dataclasses.dataclass(frozen=True)
class Constant:
  value: RationalK


@dataclasses.dataclass(frozen=True)
class Binary:
  op: str  # "*" or "/".
  left: "Expression"
  right: "Expression"


@dataclasses.dataclass(frozen=True)
class Power:
  base: "Expression"
  exponent: int


Expression = Union[Named, Special, Constant, Binary, Power]


def _tokenize(text: str) -> List[Tuple[str, str]]:
  tokens = []
  position = 0
  text = text.rstrip()
  while position < len(text):
    match = _TOKEN_RE.match(text, position)
    number, name, symbol = match.groups()
    if symbol is not None and symbol not in _OPERATORS:
      raise ExpressionError(f"unexpected {symbol!r} at {match.start(3)} in "
                            f"{text!r}")
    if number is not None:
      tokens.append(("int", number))
    elif name is not None:
      tokens.append(("name", "theta" if name == "θ" else name))
    else:
      tokens.append(("op", symbol))
    position = match.end()
  return tokens


def split_top_level(text: str) -> List[str]:
  """Splits at commas outside parentheses."""
  parts, depth, start = [], 0, 0
  for k, c in enumerate(text):
    if c == "(":
      depth += 1
    elif c == ")":
      depth -= 1
      if depth < 0:
        raise ExpressionError(f"unbalanced ')' in {text!r}")
    elif c == "," and depth == 0:
      parts.append(text[start:k].strip())
      start = k + 1
  if depth:
    raise ExpressionError(f"unbalanced '(' in {text!r}")
  parts.append(text[start:].strip())
  if any(not part for part in parts):
    raise ExpressionError(f"empty item in {text!r}")
  return parts


class _Parser:
  """Recursive descent over the tokens of one text."""

  def __init__(self, text: str, field: scalars.FieldDesc):
    self._text = text
    self._field = field
    self._tokens = _tokenize(text)
    self._k = 0

  def _peek(self) -> Optional[Tuple[str, str]]:
    return self._tokens[self._k] if self._k < len(self._tokens) else None

  def _accept(self, text: str) -> bool:
    token = self._peek()
    if token is not None and token[1] == text and token[0] != "int":
      self._k += 1
      return True
    return False

  def _expect(self, text: str):
    if not self._accept(text):
      raise self._error(f"expected {text!r}")

  def _integer(self) -> int:
    token = self._peek()
    if token is None or token[0] != "int":
      raise self._error("expected an integer")
    self._k += 1
    return int(token[1])

  def _error(self, message: str) -> ExpressionError:
    token = self._peek()
    where = "the end" if token is None else repr(token[1])
    return ExpressionError(f"{message} at {where} in {self._text!r}")

  def finish(self):
    if self._peek() is not None:
      raise self._error("unexpected trailing input")

  # Values.

  def expression(self) -> Expression:
    node = self._term()
    while True:
      if self._accept("*"):
        node = Binary("*", node, self._term())
      elif self._accept("/"):
        node = Binary("/", node, self._term())
      else:
        return node

  def _term(self) -> Expression:
    node = self._atom()
    if self._accept("^"):
      sign = -1 if self._accept("-") else 1
      node = Power(node, sign * self._integer())
    return node

  def _atom(self) -> Expression:
    token = self._peek()
    if token is None:
      raise self._error("expected a value")
    kind, text = token
    if kind == "int":
      return Constant(RationalK.from_int(self._field,
                                         self._field.from_int(self._integer())))
    if self._accept("("):
      node = self.expression()
      self._expect(")")
      return node
    if kind != "name":
      raise self._error("expected a value")
    self._k += 1
    if text in ("pi", "omega"):
      return Named(text)
    if text == "theta":
      return Constant(RationalK.of(scalars.PolyTheta.theta(self._field)))
    if text == "zeta":
      self._expect("(")
      index = self._parts()
      self._expect(")")
      return Special(index)
    if text == "cmpl":
      self._expect("(")
      index = self._parts()
      self._expect(";")
      coords = [self.polynomial()]
      while self._accept(","):
        coords.append(self.polynomial())
      self._expect(")")
      return Special(index, specials.TPoint.polynomials(self._field, coords))
    self._k -= 1
    raise self._error("unknown name")

  def _parts(self) -> specials.Index:
    parts = [self._integer()]
    while self._accept(","):
      parts.append(self._integer())
    try:
      return specials.Index(tuple(parts))
    except ValueError as e:
      raise ExpressionError(f"{e} in {self._text!r}") from e

  # Polynomials in t over K.

  def polynomial(self) -> TPoly:
    negate = self._accept("-")
    if not negate:
      self._accept("+")
    value = self._product()
    if negate:
      value = -value
    while True:
      if self._accept("+"):
        value = value + self._product()
      elif self._accept("-"):
        value = value - self._product()
      else:
        return value

  def _product(self) -> TPoly:
    value = self._factor()
    while True:
      if self._accept("*"):
        value = value * self._factor()
      elif self._accept("/"):
        divisor = self._factor()
        if not divisor.is_scalar or divisor.is_zero():
          raise self._error(f"cannot divide by {divisor}")
        value = value.scale(RationalK.from_int(self._field, 1) /
                            divisor.scalar())
      else:
        return value

  def _factor(self) -> TPoly:
    value = self._base()
    if self._accept("^"):
      value = value**self._integer()
    return value

  def _base(self) -> TPoly:
    field = self._field
    token = self._peek()
    if token is None:
      raise self._error("expected a polynomial")
    kind, text = token
    if kind == "int":
      c = field.from_int(self._integer())
      return TPoly.constant(RationalK.from_int(field, c))
    if self._accept("("):
      value = self.polynomial()
      self._expect(")")
      return value
    if kind != "name":
      raise self._error("expected a polynomial")
    self._k += 1
    if text == "theta":
      return TPoly.from_poly(scalars.PolyTheta.theta(field))
    if text == "t":
      return TPoly.t(field)
    if text == "g":
      try:
        root = field.modulus_root
      except scalars.FieldError as e:
        raise ExpressionError(f"{e}; 'g' needs m > 1") from e
      return TPoly.constant(RationalK.from_int(field, root))
    self._k -= 1
    raise self._error("unknown name")


def parse_expression(text: str, field: scalars.FieldDesc) -> Expression:
  parser = _Parser(text, field)
  node = parser.expression()
  parser.finish()
  return node


def parse_polynomial(text: str, field: scalars.FieldDesc) -> TPoly:
  parser = _Parser(text, field)
  value = parser.polynomial()
  parser.finish()
  return value


def parse_point(text: str, field: scalars.FieldDesc) -> specials.TPoint:
  """Comma-separated coordinates, e.g. "1, theta + t"."""
  return specials.TPoint.polynomials(
      field, [parse_polynomial(part, field) for part in split_top_level(text)])


class _Evaluator:
  """Evaluates atoms at θ-precision `n`; products track their own windows."""

  def __init__(self, field: scalars.FieldDesc, n: int, t_prec: int,
               budget: int):
    self._field = field
    self._n = n
    self._floor = laurent.theta_floor(field, n)
    self._t_prec = t_prec
    self._budget = budget

  def value(self, node: Expression) -> LaurentL:
    field = self._field
    if isinstance(node, Named):
      if node.name == "pi":
        return tate.pi_build(field, self._n)
      return tate.omega_at_theta(field, self._n, self._t_prec)
    if isinstance(node, Special):
      if node.point is None:
        return specials.zeta(field, node.index, self._n, budget=self._budget)
      return specials.cmpl_eval(node.index, node.point, self._n)
    if isinstance(node, Constant):
      return laurent.rational_to_laurent(
          node.value, None if node.value.is_polynomial else self._floor)
    if isinstance(node, Power):
      base = self.value(node.base)
      floor = self._floor if base.is_exact and node.exponent < 0 else None
      return laurent.power(base, node.exponent, floor)
    left, right = self.value(node.left), self.value(node.right)
    if node.op == "*":
      return laurent.mul(left, right)
    floor = self._floor if left.is_exact and right.is_exact else None
    return laurent.div(left, right, floor)


def evaluate(expression: Expression,
             field: scalars.FieldDesc,
             N: int,
             t_prec: int = 8,
             budget: int = specials.DEFAULT_BUDGET) -> LaurentL:
  """The value of `expression` known down to the θ-precision N.

  Atoms are computed deeper when products and quotients lose precision.

  Raises:
    laurent.PrecisionError: If N is not reached after a few deepenings.
  """
  floor = laurent.theta_floor(field, N)
  n = N
  for _ in range(_MAX_ATTEMPTS):
    value = _Evaluator(field, n, t_prec, budget).value(expression)
    if value.is_exact:
      return value
    if value.prec <= floor:
      return laurent.truncate(value, floor)
    deeper = n + math.ceil((value.prec - floor) / (field.q - 1)) + 1
    logging.info("Expression known down to s^%d only; recomputing at n=%d",
                 value.prec, deeper)
    n = deeper
  raise laurent.PrecisionError(
      f"could not reach θ-precision {N}; last window ended at s^{value.prec}")


def evaluate_text(text: str,
                  field: scalars.FieldDesc,
                  N: int,
                  t_prec: int = 8,
                  budget: int = specials.DEFAULT_BUDGET) -> LaurentL:
  return evaluate(parse_expression(text, field), field, N, t_prec, budget)


def evaluate_list(text: str,
                  field: scalars.FieldDesc,
                  N: int,
                  t_prec: int = 8,
                  budget: int = specials.DEFAULT_BUDGET
                 ) -> Tuple[Tuple[str, ...], Tuple[LaurentL, ...]]:
  """Labels and values of comma-separated expressions."""
  labels = tuple(split_top_level(text))
  return labels, tuple(
      evaluate_text(label, field, N, t_prec, budget) for label in labels)
