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

"""Truncated Laurent series in s^-1, where s^(q-1) = -θ.

The field L = F_q((1/s)) contains K_∞ = F_q((1/θ)) as the series whose nonzero
exponents are divisible by q - 1, together with the fixed root s of -θ that
π̃ and Ω need.

A `LaurentL` stores the coefficients of s^e for e = v_start, v_start - 1, ...
down to its floor `prec`; every coefficient at or above `prec` is the true one
and everything below it is unknown. A `prec` of None marks an exact value: the
stored coefficients are all there is. Arithmetic follows the contamination
rule (the floor of a product is max(prec_a + v_b, prec_b + v_a)), so a result
never claims a coefficient it cannot know.

"θ-precision N" means the floor `theta_floor(field, N) == -N * (q - 1)`, i.e.
the coefficients of θ^0, ..., θ^-N of a K_∞ value.
"""

from __future__ import annotations

import dataclasses
import fractions
from typing import Iterable, Optional, Sequence, Tuple

from absl import logging
from carlitz import scalars
import numpy as np


class PrecisionError(ArithmeticError):
  """Raised when a result would need coefficients that are not known."""


class WindowUnderflowError(PrecisionError):
  """Raised when an operation would leave an empty known window."""


class NotInvertibleError(ZeroDivisionError):
  """Raised when inverting a value that is zero on its whole known window."""


def _max_floor(a: Optional[int], b: Optional[int]) -> Optional[int]:
  if a is None:
    return b
  if b is None:
    return a
  return max(a, b)


@dataclasses.dataclass(frozen=True)
class LaurentL:
  """A truncated Laurent series in s^-1.

  Attributes:
    field: The coefficient field.
    v_start: The exponent of the first stored coefficient, which is nonzero.
      For a value that is zero on its window, `v_start == prec - 1`.
    coeffs: Coefficients of s^v_start, s^(v_start - 1), ...
    prec: The lowest known exponent, or None for an exact value. Floored
      values store exactly `v_start - prec + 1` coefficients; exact values
      store no trailing zeros.
  """
  field: scalars.FieldDesc
  v_start: int
  coeffs: Tuple[int, ...]
  prec: Optional[int] = None

  def __post_init__(self):
    if self.coeffs and self.coeffs[0] == 0:
      raise ValueError("the leading stored coefficient must be nonzero")
    if self.prec is None:
      if self.coeffs and self.coeffs[-1] == 0:
        raise ValueError("exact values store no trailing zeros")
    elif len(self.coeffs) != self.v_start - self.prec + 1:
      raise ValueError(
          f"window [{self.prec}, {self.v_start}] does not match "
          f"{len(self.coeffs)} stored coefficients")

  @property
  def is_exact(self) -> bool:
    return self.prec is None

  @property
  def low(self) -> int:
    """The lowest stored exponent."""
    return self.v_start - len(self.coeffs) + 1

  def is_zero(self) -> bool:
    """True if the value vanishes on its whole known window."""
    return not self.coeffs

  def coeff(self, e: int) -> int:
    """The coefficient of s^e."""
    if self.prec is not None and e < self.prec:
      raise PrecisionError(f"s^{e} lies below the known floor s^{self.prec}")
    k = self.v_start - e
    if 0 <= k < len(self.coeffs):
      return self.coeffs[k]
    return 0

  def dense(self, top: int, floor: int) -> np.ndarray:
    """Coefficients of s^top, ..., s^floor as an int64 array."""
    out = np.zeros(max(0, top - floor + 1), dtype=np.int64)
    if not self.coeffs or out.size == 0:
      return out
    offset = top - self.v_start
    if offset < 0:
      raise ValueError(f"top {top} is below the leading exponent {self.v_start}")
    count = min(len(self.coeffs), out.size - offset)
    if count > 0:
      out[offset:offset + count] = self.coeffs[:count]
    return out

  def __add__(self, other: "LaurentL") -> "LaurentL":
    return add(self, other)

  def __sub__(self, other: "LaurentL") -> "LaurentL":
    return sub(self, other)

  def __neg__(self) -> "LaurentL":
    return neg(self)

  def __mul__(self, other: "LaurentL") -> "LaurentL":
    return mul(self, other)

  def __truediv__(self, other: "LaurentL") -> "LaurentL":
    return div(self, other)

  def __pow__(self, k: int) -> "LaurentL":
    return power(self, k)

  def __str__(self):
    return theta_expansion(self)


def normalize(field: scalars.FieldDesc, top: int, coeffs: Sequence[int],
              prec: Optional[int]) -> LaurentL:
  """Builds a LaurentL from coefficients of s^top, s^(top-1), ...

  Leading zeros are dropped. For floored values `coeffs` must reach exactly
  down to `prec`; exact values lose their trailing zeros.
  """
  coeffs = [int(c) for c in coeffs]
  start = 0
  while start < len(coeffs) and coeffs[start] == 0:
    start += 1
  if start == len(coeffs):
    return zero(field, prec)
  end = len(coeffs)
  if prec is None:
    while coeffs[end - 1] == 0:
      end -= 1
  return LaurentL(field, top - start, tuple(coeffs[start:end]), prec)


def zero(field: scalars.FieldDesc, prec: Optional[int] = None) -> LaurentL:
  """Zero, exact or known down to `prec`."""
  if prec is None:
    return LaurentL(field, 0, (), None)
  return LaurentL(field, prec - 1, (), prec)


def monomial(field: scalars.FieldDesc, c: int, e: int) -> LaurentL:
  """The exact value c * s^e."""
  if c == 0:
    return zero(field)
  return LaurentL(field, e, (c,), None)


def one(field: scalars.FieldDesc) -> LaurentL:
  return monomial(field, 1, 0)


def s_gen(field: scalars.FieldDesc,
          prec: Optional[int] = None) -> LaurentL:
  """The fixed (q-1)-st root s of -θ."""
  value = monomial(field, 1, 1)
  return value if prec is None else truncate(value, prec)


def theta_monomial(field: scalars.FieldDesc, c: int, k: int) -> LaurentL:
  """The exact value c * θ^k = c * (-1)^k * s^(k(q-1)); k may be negative."""
  if k % 2 and field.p != 2:
    c = field.neg(c)
  return monomial(field, c, k * (field.q - 1))


def embed_theta(field: scalars.FieldDesc,
                prec: Optional[int] = None) -> LaurentL:
  """θ = -s^(q-1)."""
  value = theta_monomial(field, 1, 1)
  return value if prec is None else truncate(value, prec)


def theta_floor(field: scalars.FieldDesc, n: int) -> int:
  """The s-exponent floor of θ-precision `n`."""
  return -n * (field.q - 1)


def from_poly(poly: scalars.PolyTheta) -> LaurentL:
  """The exact expansion of a polynomial in θ."""
  field = poly.field
  if poly.is_zero():
    return zero(field)
  step = field.q - 1
  dense = np.zeros(poly.degree * step + 1, dtype=np.int64)
  for i, c in enumerate(poly.coeffs):
    if c:
      dense[(poly.degree - i) * step] = field.neg(c) if i % 2 else c
  return normalize(field, poly.degree * step, dense, None)


def _check_same_field(a: LaurentL, b: LaurentL):
  if a.field != b.field:
    raise scalars.FieldMismatchError(
        f"operands live in {a.field} and {b.field}")


def truncate(a: LaurentL, floor: int) -> LaurentL:
  """Forgets every coefficient below `floor`."""
  if a.prec is not None and floor < a.prec:
    raise PrecisionError(
        f"cannot extend the window of a value known down to s^{a.prec} "
        f"to s^{floor}")
  if not a.coeffs or a.v_start < floor:
    return zero(a.field, floor)
  return normalize(a.field, a.v_start, a.dense(a.v_start, floor), floor)


def require(a: LaurentL, floor: int) -> LaurentL:
  """Returns `a` if it is known down to `floor`, else raises PrecisionError."""
  if a.prec is not None and a.prec > floor:
    raise PrecisionError(
        f"value is known down to s^{a.prec}, but s^{floor}..s^{a.prec - 1} "
        "are required")
  return a


def add(a: LaurentL, b: LaurentL) -> LaurentL:
  _check_same_field(a, b)
  prec = _max_floor(a.prec, b.prec)
  tops = [x.v_start for x in (a, b) if x.coeffs]
  if not tops:
    return zero(a.field, prec)
  top = max(tops)
  floor = prec if prec is not None else min(x.low for x in (a, b) if x.coeffs)
  if top < floor:
    return zero(a.field, prec)
  total = a.field.vadd(a.dense(top, floor), b.dense(top, floor))
  return normalize(a.field, top, total, prec)


def sum_series(field: scalars.FieldDesc,
               values: Iterable[LaurentL],
               top: int,
               floor: int,
               batch: int = 4096) -> LaurentL:
  """Σ values known down to `floor`, summed in int64 blocks.

  Every value must start at or below s^top and be known down to `floor`.
  """
  width = max(0, top - floor + 1)
  total = np.zeros(width, dtype=np.int64)
  rows = []
  for v in values:
    if v.field != field:
      raise scalars.FieldMismatchError(f"summand lives in {v.field}")
    if not v.coeffs or v.v_start < floor:
      require(v, floor)
      continue
    rows.append(truncate(v, floor).dense(top, floor))
    if len(rows) == batch:
      total = field.vsum(np.stack(rows + [total]))
      rows = []
  if rows:
    total = field.vsum(np.stack(rows + [total]))
  return normalize(field, top, total, floor)


def neg(a: LaurentL) -> LaurentL:
  if not a.coeffs:
    return a
  return LaurentL(a.field, a.v_start,
                  tuple(a.field.vneg(np.array(a.coeffs)).tolist()), a.prec)


def sub(a: LaurentL, b: LaurentL) -> LaurentL:
  return add(a, neg(b))


def scale(a: LaurentL, c: int) -> LaurentL:
  """Multiplies by the scalar c in F_q."""
  if c == 0:
    return zero(a.field, a.prec)
  if not a.coeffs:
    return a
  return LaurentL(a.field, a.v_start,
                  tuple(a.field.vscale(np.array(a.coeffs), c).tolist()), a.prec)


def mul(a: LaurentL, b: LaurentL, floor: Optional[int] = None) -> LaurentL:
  """Product of `a` and `b`, optionally discarding exponents below `floor`."""
  _check_same_field(a, b)
  field = a.field
  if (a.is_exact and not a.coeffs) or (b.is_exact and not b.coeffs):
    return zero(field)
  va, vb = a.v_start, b.v_start
  if a.prec is None and b.prec is None:
    prec = None
  elif a.prec is None:
    prec = va + b.prec
  elif b.prec is None:
    prec = vb + a.prec
  else:
    prec = max(a.prec + vb, b.prec + va)
  prec = _max_floor(prec, floor)
  if not a.coeffs or not b.coeffs:
    return zero(field, prec)
  top = va + vb
  if prec is None:
    product = field.convolve(np.array(a.coeffs), np.array(b.coeffs))
    return normalize(field, top, product, None)
  if top < prec:
    return zero(field, prec)
  n = top - prec + 1
  product = field.convolve(np.array(a.coeffs[:n]), np.array(b.coeffs[:n]))
  window = np.zeros(n, dtype=np.int64)
  window[:min(n, product.size)] = product[:n]
  return normalize(field, top, window, prec)


def _series_inverse(field: scalars.FieldDesc, u: np.ndarray,
                    n: int) -> np.ndarray:
  """First n coefficients of 1/u for a power series u with u[0] == 1."""
  two = field.add(1, 1)
  inverse = np.ones(1, dtype=np.int64)
  known = 1
  while known < n:
    known = min(2 * known, n)
    # Newton step b <- b (2 - u b).
    residual = field.vneg(field.convolve(u[:known], inverse)[:known])
    residual[0] = field.add(int(residual[0]), two)
    inverse = field.convolve(inverse, residual)[:known]
  return inverse


def inv(a: LaurentL, floor: Optional[int] = None) -> LaurentL:
  """1/a; the window length of a floored input is preserved.

  Raises:
    NotInvertibleError: If `a` vanishes on its whole window.
    PrecisionError: If `a` is exact and no floor is given.
    WindowUnderflowError: If the resulting window would be empty.
  """
  if not a.coeffs:
    raise NotInvertibleError("cannot invert a value that is zero on its window")
  va = a.v_start
  if a.prec is None:
    if floor is None:
      raise PrecisionError("inverting an exact value needs a floor")
    prec = floor
  else:
    prec = _max_floor(a.prec - 2 * va, floor)
  top = -va
  if prec > top:
    raise WindowUnderflowError(
        f"inverse window [s^{prec}, s^{top}] is empty")
  n = top - prec + 1
  u = np.zeros(n, dtype=np.int64)
  count = min(n, len(a.coeffs))
  u[:count] = a.coeffs[:count]
  lead_inv = a.field.inv(int(u[0]))
  u = a.field.vscale(u, lead_inv)
  result = a.field.vscale(_series_inverse(a.field, u, n), lead_inv)
  return normalize(a.field, top, result, prec)


def div(a: LaurentL, b: LaurentL, floor: Optional[int] = None) -> LaurentL:
  """a / b with the contamination rule applied to a * (1/b)."""
  _check_same_field(a, b)
  if a.is_exact and not a.coeffs:
    return zero(a.field)
  if not b.coeffs:
    raise NotInvertibleError("division by a value that is zero on its window")
  if b.is_exact:
    target = floor
    if target is None:
      if a.prec is None:
        raise PrecisionError("dividing exact values needs a floor")
      target = a.prec - b.v_start
    inverse = inv(b, floor=target - a.v_start)
  else:
    inverse = inv(b)
  return mul(a, inverse, floor)


def quotient(num: scalars.PolyTheta, den: scalars.PolyTheta,
             prec: Optional[int]) -> LaurentL:
  """Expansion of num/den known down to `prec`; exact when den is constant."""
  if den.is_zero():
    raise NotInvertibleError("zero denominator")
  num_l = from_poly(num)
  if den.degree == 0:
    value = scale(num_l, num.field.inv(den.leading))
    return value if prec is None else truncate(value, prec)
  if prec is None:
    raise PrecisionError("expanding a non-polynomial rational needs a floor")
  den_l = from_poly(den)
  if num.is_zero() or num_l.v_start - den_l.v_start < prec:
    return zero(num.field, prec)
  den_inv = inv(den_l, floor=prec - num_l.v_start)
  return truncate(mul(num_l, den_inv, floor=prec), prec)


def frobenius_power(a: LaurentL,
                    n: int,
                    floor: Optional[int] = None) -> LaurentL:
  """a^(q^n) by exponent dilation and coefficient Frobenius."""
  if n < 0:
    raise ValueError(f"Frobenius power {n} must be non-negative")
  field = a.field
  dilation = field.q**n
  prec = None if a.prec is None else dilation * (a.prec - 1) + 1
  prec = _max_floor(prec, floor)
  if not a.coeffs:
    return zero(field, prec)
  top = dilation * a.v_start
  low = prec if prec is not None else dilation * a.low
  if top < low:
    return zero(field, prec)
  dense = np.zeros(top - low + 1, dtype=np.int64)
  count = min(len(a.coeffs), (top - low) // dilation + 1)
  dense[0:count * dilation:dilation] = [
      field.frobenius(c, n) for c in a.coeffs[:count]
  ]
  return normalize(field, top, dense, prec)


def power(a: LaurentL, k: int, floor: Optional[int] = None) -> LaurentL:
  """a^k by binary exponentiation; negative k inverts first."""
  if k < 0:
    return power(inv(a, floor=floor), -k, floor)
  result = one(a.field)
  base = a
  while k:
    if k & 1:
      result = mul(result, base, floor)
    k >>= 1
    if k:
      base = mul(base, base, floor)
  if floor is not None and result.is_exact:
    result = truncate(result, floor)
  return result


def laurent_arith(a: LaurentL,
                  b: Optional[LaurentL],
                  op: str,
                  floor: Optional[int] = None) -> LaurentL:
  """Dispatches `add`, `sub`, `mul`, `inv` or `div`."""
  if op == "add":
    return add(a, b)
  if op == "sub":
    return sub(a, b)
  if op == "mul":
    return mul(a, b, floor)
  if op == "inv":
    return inv(a, floor)
  if op == "div":
    return div(a, b, floor)
  raise ValueError(f"unknown Laurent operation {op!r}")


def first_nonzero(a: LaurentL) -> Optional[int]:
  """The exponent of the leading nonzero coefficient, if any."""
  return a.v_start if a.coeffs else None


def agrees(a: LaurentL, b: LaurentL, floor: Optional[int] = None) -> bool:
  """True if a and b agree on their common window (and down to `floor`)."""
  difference = sub(a, b)
  if floor is not None:
    require(difference, floor)
  return difference.is_zero()


def valuation(a: LaurentL) -> fractions.Fraction:
  """v_θ(a) = v_s(a) / (q - 1)."""
  if not a.coeffs:
    raise PrecisionError("valuation of a value that is zero on its window")
  return fractions.Fraction(-a.v_start, a.field.q - 1)


def norm_exponent(a: LaurentL) -> fractions.Fraction:
  """-v_θ(a), so that |a| = |θ|^norm_exponent."""
  return -valuation(a)


def in_k_infinity(a: LaurentL) -> bool:
  step = a.field.q - 1
  return all(c == 0 or (a.v_start - k) % step == 0
             for k, c in enumerate(a.coeffs))


def theta_expansion(a: LaurentL, max_terms: int = 12) -> str:
  """Renders a value as s^r times a series in θ."""
  field = a.field
  step = field.q - 1
  terms = []
  residue = None
  for k, c in enumerate(a.coeffs):
    if not c:
      continue
    e = a.v_start - k
    if residue is None:
      residue = e % step
    elif e % step != residue:
      return _s_expansion(a, max_terms)
    power_of_theta = (e - residue) // step
    if power_of_theta % 2 and field.p != 2:
      c = field.neg(c)
    if power_of_theta == 0:
      monomial_str = "1"
    elif power_of_theta == 1:
      monomial_str = "θ"
    else:
      monomial_str = f"θ^{power_of_theta}"
    terms.append(monomial_str if c == 1 else f"{c}·{monomial_str}")
    if len(terms) == max_terms:
      break
  body = " + ".join(terms) if terms else "0"
  if a.prec is not None:
    body += f" + O(s^{a.prec - 1})"
  if residue:
    return f"s^{residue}·({body})"
  return body


def _s_expansion(a: LaurentL, max_terms: int) -> str:
  terms = [f"{c}·s^{a.v_start - k}"
           for k, c in enumerate(a.coeffs) if c][:max_terms]
  body = " + ".join(terms) if terms else "0"
  if a.prec is not None:
    body += f" + O(s^{a.prec - 1})"
  return body


@dataclasses.dataclass(frozen=True)
class RationalK:
  """An element num/den of K = F_q(θ) with gcd(num, den) = 1 and den monic."""
  num: scalars.PolyTheta
  den: scalars.PolyTheta

  def __post_init__(self):
    if self.den.is_zero():
      raise NotInvertibleError("RationalK with zero denominator")

  @classmethod
  def of(cls, num: scalars.PolyTheta,
         den: Optional[scalars.PolyTheta] = None) -> "RationalK":
    """Normalized num/den."""
    field = num.field
    if den is None:
      den = scalars.PolyTheta.constant(field, 1)
    if den.is_zero():
      raise NotInvertibleError("RationalK with zero denominator")
    if num.is_zero():
      return cls(num, scalars.PolyTheta.constant(field, 1))
    g = scalars.gcd(num, den)
    if g.degree > 0:
      num, den = num // g, den // g
    lead_inv = field.inv(den.leading)
    return cls(num.scale(lead_inv), den.scale(lead_inv))

  @classmethod
  def from_int(cls, field: scalars.FieldDesc, c: int) -> "RationalK":
    return cls.of(scalars.PolyTheta.constant(field, c))

  @property
  def field(self) -> scalars.FieldDesc:
    return self.num.field

  def is_zero(self) -> bool:
    return self.num.is_zero()

  @property
  def is_polynomial(self) -> bool:
    return self.den.degree == 0

  def top(self) -> Optional[int]:
    """The leading s-exponent of the expansion, or None for zero."""
    if self.is_zero():
      return None
    return (self.num.degree - self.den.degree) * (self.field.q - 1)

  def __add__(self, other: "RationalK") -> "RationalK":
    if self.den == other.den:
      return RationalK.of(self.num + other.num, self.den)
    return RationalK.of(self.num * other.den + other.num * self.den,
                        self.den * other.den)

  def __neg__(self) -> "RationalK":
    return RationalK(-self.num, self.den)

  def __sub__(self, other: "RationalK") -> "RationalK":
    return self + (-other)

  def __mul__(self, other: "RationalK") -> "RationalK":
    return RationalK.of(self.num * other.num, self.den * other.den)

  def __truediv__(self, other: "RationalK") -> "RationalK":
    if other.is_zero():
      raise NotInvertibleError("division by zero in K")
    return RationalK.of(self.num * other.den, self.den * other.num)

  def __pow__(self, k: int) -> "RationalK":
    if k < 0:
      return RationalK.of(self.den, self.num)**(-k)
    return RationalK(self.num**k, self.den**k)

  def twist(self, n: int) -> "RationalK":
    """The n-fold twist; twisting keeps numerator and denominator coprime."""
    return RationalK(self.num.twist(n), self.den.twist(n))

  def qth_root(self) -> Optional["RationalK"]:
    num, den = self.num.qth_root(), self.den.qth_root()
    if num is None or den is None:
      return None
    return RationalK(num, den)

  def __str__(self):
    if self.is_polynomial:
      return str(self.num)
    return f"({self.num})/({self.den})"


def rational_k(num: scalars.PolyTheta,
               den: Optional[scalars.PolyTheta] = None) -> RationalK:
  return RationalK.of(num, den)


def rational_to_laurent(r: RationalK, prec: Optional[int] = None) -> LaurentL:
  """The expansion of r at infinity, exact on the window down to `prec`.

  Polynomials expand exactly when `prec` is None.
  """
  value = quotient(r.num, r.den, prec)
  logging.debug("Expanded %s down to s^%s", r, prec)
  return value
