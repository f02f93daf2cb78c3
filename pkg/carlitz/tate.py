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

"""Power series in t over `LaurentL`, the twist, Ω and π̃.

A `TSeries` knows its t-coefficients up to degree `t_prec`. The n-fold twist
raises every coefficient to the q^n-th power and fixes t. Only forward twists
exist: every difference equation in this package is checked after applying
one twist to both sides.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from typing import List, Optional, Sequence, Tuple

from absl import logging
from carlitz import laurent
from carlitz import scalars

LaurentL = laurent.LaurentL
RationalK = laurent.RationalK


class UnsupportedOperationError(NotImplementedError):
  """Raised for operations outside the forward-twist calculus."""


class TruncationError(laurent.PrecisionError):
  """Raised when a series is not truncated deep enough in t.

  Attributes:
    required_t_prec: An estimate of the t-degree that would suffice.
  """

  def __init__(self, message: str, required_t_prec: int):
    super().__init__(message)
    self.required_t_prec = required_t_prec


@dataclasses.dataclass(frozen=True)
class TSeries:
  """Σ_{k <= t_prec} coeffs[k] t^k with `LaurentL` coefficients."""
  field: scalars.FieldDesc
  coeffs: Tuple[LaurentL, ...]

  def __post_init__(self):
    if not self.coeffs:
      raise ValueError("a TSeries needs at least the coefficient of t^0")
    if any(c.field != self.field for c in self.coeffs):
      raise scalars.FieldMismatchError("coefficients live in another field")

  @property
  def t_prec(self) -> int:
    return len(self.coeffs) - 1

  @property
  def prec(self) -> Optional[int]:
    """The shared floor: the highest coefficient floor, None if all exact."""
    floors = [c.prec for c in self.coeffs if c.prec is not None]
    return max(floors) if floors else None

  def is_zero(self) -> bool:
    return all(c.is_zero() for c in self.coeffs)

  def first_nonzero(self) -> Optional[Tuple[int, int]]:
    """(t-degree, s-exponent) of the first nonzero coefficient, if any."""
    for k, c in enumerate(self.coeffs):
      if not c.is_zero():
        return k, c.v_start
    return None

  def __add__(self, other: "TSeries") -> "TSeries":
    return add(self, other)

  def __sub__(self, other: "TSeries") -> "TSeries":
    return sub(self, other)

  def __neg__(self) -> "TSeries":
    return neg(self)

  def __mul__(self, other: "TSeries") -> "TSeries":
    return mul(self, other)


def from_coefficients(field: scalars.FieldDesc, coeffs: Sequence[LaurentL],
                      t_prec: int) -> TSeries:
  """A series from its leading coefficients, padded with exact zeros."""
  coeffs = list(coeffs)[:t_prec + 1]
  coeffs += [laurent.zero(field)] * (t_prec + 1 - len(coeffs))
  return TSeries(field, tuple(coeffs))


def constant(field: scalars.FieldDesc, value: LaurentL, t_prec: int) -> TSeries:
  return from_coefficients(field, [value], t_prec)


def linear_factor(field: scalars.FieldDesc, c: LaurentL, t_prec: int) -> TSeries:
  """The polynomial t - c."""
  return from_coefficients(field, [laurent.neg(c), laurent.one(field)], t_prec)


def truncate_t(a: TSeries, t_prec: int) -> TSeries:
  return TSeries(a.field, a.coeffs[:t_prec + 1])


def with_floor(a: TSeries, floor: int) -> TSeries:
  """Every coefficient truncated to `floor` (exact ones included)."""
  return TSeries(a.field, tuple(laurent.truncate(c, floor) for c in a.coeffs))


def bump(a: TSeries, t_degree: int, exponent: int) -> TSeries:
  """`a` with one added to its s^exponent t^t_degree coefficient.

  Raises:
    ValueError: If the position lies outside the known window.
  """
  if not 0 <= t_degree <= a.t_prec:
    raise ValueError(f"t^{t_degree} is beyond the t-degree {a.t_prec}")
  value = a.coeffs[t_degree]
  if value.prec is not None and exponent < value.prec:
    raise ValueError(
        f"s^{exponent} lies below the window of the t^{t_degree} coefficient")
  coeffs = list(a.coeffs)
  coeffs[t_degree] = laurent.add(value, laurent.monomial(a.field, 1, exponent))
  return TSeries(a.field, tuple(coeffs))


def require(a: TSeries, floor: int) -> TSeries:
  for k, c in enumerate(a.coeffs):
    try:
      laurent.require(c, floor)
    except laurent.PrecisionError as e:
      raise laurent.PrecisionError(f"coefficient of t^{k}: {e}") from e
  return a


def add(a: TSeries, b: TSeries) -> TSeries:
  t_prec = min(a.t_prec, b.t_prec)
  return TSeries(
      a.field,
      tuple(laurent.add(x, y) for x, y in zip(a.coeffs, b.coeffs))[:t_prec + 1])


def neg(a: TSeries) -> TSeries:
  return TSeries(a.field, tuple(laurent.neg(c) for c in a.coeffs))


def sub(a: TSeries, b: TSeries) -> TSeries:
  return add(a, neg(b))


def mul(a: TSeries, b: TSeries, floor: Optional[int] = None) -> TSeries:
  """Product truncated to min(t_prec); coefficients below `floor` dropped."""
  t_prec = min(a.t_prec, b.t_prec)
  coeffs = []
  for k in range(t_prec + 1):
    total = laurent.zero(a.field)
    for i in range(k + 1):
      x, y = a.coeffs[i], b.coeffs[k - i]
      if (x.is_exact and x.is_zero()) or (y.is_exact and y.is_zero()):
        continue
      total = laurent.add(total, laurent.mul(x, y, floor))
    if floor is not None and total.is_exact:
      total = laurent.truncate(total, floor)
    coeffs.append(total)
  return TSeries(a.field, tuple(coeffs))


def scalar_mul(a: TSeries, c: LaurentL, floor: Optional[int] = None) -> TSeries:
  return TSeries(a.field, tuple(laurent.mul(c, x, floor) for x in a.coeffs))


def tseries_arith(a: TSeries, b, op: str,
                  floor: Optional[int] = None) -> TSeries:
  """Dispatches `add`, `sub`, `mul` or `scalar_mul` (b is then a LaurentL)."""
  if op == "add":
    return add(a, b)
  if op == "sub":
    return sub(a, b)
  if op == "mul":
    return mul(a, b, floor)
  if op == "scalar_mul":
    return scalar_mul(a, b, floor)
  raise ValueError(f"unknown series operation {op!r}")


def inverse(a: TSeries, floor: Optional[int] = None) -> TSeries:
  """1/a for a series with invertible constant term."""
  b0 = laurent.inv(a.coeffs[0], floor)
  coeffs = [b0]
  for k in range(1, a.t_prec + 1):
    acc = laurent.zero(a.field)
    for j in range(1, k + 1):
      acc = laurent.add(acc, laurent.mul(a.coeffs[j], coeffs[k - j], floor))
    coeffs.append(laurent.neg(laurent.mul(b0, acc, floor)))
  return TSeries(a.field, tuple(coeffs))


def power(a: TSeries, k: int, floor: Optional[int] = None) -> TSeries:
  if k < 0:
    return power(inverse(a, floor), -k, floor)
  result = constant(a.field, laurent.one(a.field), a.t_prec)
  base = a
  while k:
    if k & 1:
      result = mul(result, base, floor)
    k >>= 1
    if k:
      base = mul(base, base, floor)
  return result


def twist(a: TSeries, n: int, floor: Optional[int] = None) -> TSeries:
  """The n-fold twist Σ a_k^(q^n) t^k, n >= 0."""
  if n < 0:
    raise UnsupportedOperationError(
        f"inverse twists (n={n}) leave the series field; state the equation "
        "in forward-twisted form")
  return TSeries(a.field,
                 tuple(laurent.frobenius_power(c, n, floor) for c in a.coeffs))


def eval_at_theta(a: TSeries, n: int, tail: int = 2) -> LaurentL:
  """Σ_k a_k θ^k to θ-precision `n`.

  The last `tail` terms must vanish on the target window and the leading
  exponents of the nonzero terms must still be falling; otherwise the series
  is judged too short.

  Raises:
    laurent.PrecisionError: If some coefficient is not known deep enough.
    TruncationError: If the t-truncation is too short for `n`.
  """
  field = a.field
  floor = laurent.theta_floor(field, n)
  step = field.q - 1
  terms = [
      laurent.mul(c, laurent.theta_monomial(field, 1, k))
      for k, c in enumerate(a.coeffs)
  ]
  for k, term in enumerate(terms):
    if term.prec is not None and term.prec > floor:
      raise laurent.PrecisionError(
          f"coefficient of t^{k} is known down to s^{a.coeffs[k].prec}; "
          f"θ-precision {n} needs s^{floor - k * step}")
  if not _tail_certified(terms, floor, tail):
    required = _required_t_prec(terms, floor, tail)
    raise TruncationError(
        f"t-truncation {a.t_prec} is too short for θ-precision {n}; "
        f"about {required} is needed", required)
  total = laurent.zero(field, floor)
  for term in terms:
    total = laurent.add(total, term)
  return laurent.truncate(laurent.require(total, floor), floor)


def _tail_certified(terms: List[LaurentL], floor: int, tail: int) -> bool:
  if len(terms) <= tail:
    return False
  for term in terms[-tail:]:
    if term.coeffs and term.v_start >= floor:
      return False
  tops = [term.v_start for term in terms if term.coeffs]
  return len(tops) < 2 or tops[-1] < tops[-2]


def _required_t_prec(terms: List[LaurentL], floor: int, tail: int) -> int:
  t_prec = len(terms) - 1
  nonzero = [(k, term.v_start) for k, term in enumerate(terms) if term.coeffs]
  if len(nonzero) >= 2:
    (k1, h1), (k2, h2) = nonzero[-2], nonzero[-1]
    if h2 < h1:
      slope = (h1 - h2) / (k2 - k1)
      last = k2 + math.ceil((h2 - floor + 1) / slope)
      return max(t_prec + 1, last + tail)
  return max(tail, 2 * t_prec + tail)


def _least_depth(q: int, bound: int) -> int:
  """The least M >= 0 with q^(M+1) > bound."""
  depth = 0
  while q**(depth + 1) <= bound:
    depth += 1
  return depth


def omega_build(field: scalars.FieldDesc, t_prec: int, n: int) -> TSeries:
  """Ω = s^-q Π_{i>=1} (1 - t θ^(-q^i)) to t-degree `t_prec`, θ-precision `n`.

  Factor i only touches t-coefficients of θ-valuation at least q^i, so the
  product stops at the least M with q^(M+1) > n.
  """
  if t_prec < 0 or n < 1:
    raise ValueError(f"need t_prec >= 0 and n >= 1, got {t_prec}, {n}")
  return _omega(field, t_prec, laurent.theta_floor(field, n))


def _omega(field: scalars.FieldDesc, t_prec: int, floor: int) -> TSeries:
  q = field.q
  depth = _least_depth(q, -floor // (q - 1))
  logging.info("Building Ω over %s: %d factors, t-degree %d, floor s^%d",
               field, depth, t_prec, floor)
  series = constant(field, laurent.monomial(field, 1, -q), t_prec)
  for i in range(1, depth + 1):
    factor = from_coefficients(
        field,
        [laurent.one(field),
         laurent.theta_monomial(field, field.minus_one, -q**i)], t_prec)
    series = mul(series, factor, floor)
  return with_floor(series, floor)


_EVAL_ATTEMPTS = 4


def omega_at_theta(field: scalars.FieldDesc, n: int,
                   t_prec: int = 8) -> LaurentL:
  """Ω(θ) to θ-precision `n`, lengthening the t-truncation as needed.

  The result is known q exponents below the floor of `n`, since Ω(θ) starts
  at s^-q: products with values of θ-precision `n` that start at or below
  s^q, π̃ among them, keep the whole window of `n`.
  """
  q = field.q
  t_prec = max(t_prec, 2)
  floor = laurent.theta_floor(field, n) - q
  n_work = n - (-q // (q - 1))
  for _ in range(_EVAL_ATTEMPTS):
    # The t^k coefficient enters with θ^k and must reach k steps deeper.
    omega = omega_build(field, t_prec, n_work + t_prec + 2)
    try:
      return laurent.truncate(eval_at_theta(omega, n_work), floor)
    except TruncationError as e:
      logging.info("Ω(θ) at n=%d: t-degree %d is short, retrying with %d", n,
                   t_prec, e.required_t_prec)
      t_prec = e.required_t_prec
  raise TruncationError(
      f"Ω(θ) at n={n} is not certified at t-degree {t_prec}", t_prec)


def omega_residual(omega: TSeries) -> TSeries:
  """Ω - (t - θ^q) Ω^(1), the forward-twisted Carlitz equation."""
  field = omega.field
  q = field.q
  theta_q = laurent.theta_monomial(field, 1, q)
  floor = omega.prec
  twist_floor = None if floor is None else floor - q * (q - 1)
  twisted = twist(omega, 1, twist_floor)
  rhs = mul(linear_factor(field, theta_q, omega.t_prec), twisted)
  return sub(omega, rhs)


def pi_build(field: scalars.FieldDesc, n: int) -> LaurentL:
  """π̃ = s^q Π_{i>=1} (1 - θ^(1-q^i))^-1 to θ-precision `n`."""
  if n < 1:
    raise ValueError(f"need n >= 1, got {n}")
  return _pi(field, laurent.theta_floor(field, n))


@functools.lru_cache(maxsize=64)
def _pi(field: scalars.FieldDesc, floor: int) -> LaurentL:
  q = field.q
  work_floor = floor - q
  depth = _least_depth(q, -floor // (q - 1) + 3)
  logging.info("Building π̃ over %s: %d factors, floor s^%d", field, depth,
               floor)
  unit = laurent.one(field)
  for i in range(1, depth + 1):
    factor = laurent.add(
        laurent.one(field),
        laurent.theta_monomial(field, field.minus_one, 1 - q**i))
    unit = laurent.mul(unit, factor, work_floor)
  unit = laurent.truncate(unit, work_floor)
  pi = laurent.mul(laurent.monomial(field, 1, q), laurent.inv(unit, work_floor))
  return laurent.truncate(pi, floor)


@dataclasses.dataclass(frozen=True)
class TPoly:
  """An exact polynomial in t with coefficients in K = F_q(θ)."""
  field: scalars.FieldDesc
  coeffs: Tuple[RationalK, ...] = ()

  def __post_init__(self):
    if self.coeffs and self.coeffs[-1].is_zero():
      raise ValueError("TPoly coefficients must not end in zero; use TPoly.of")

  @classmethod
  def of(cls, field: scalars.FieldDesc,
         coeffs: Sequence[RationalK]) -> "TPoly":
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
      coeffs.pop()
    return cls(field, tuple(coeffs))

  @classmethod
  def constant(cls, value: RationalK) -> "TPoly":
    return cls.of(value.field, [value])

  @classmethod
  def from_poly(cls, poly: scalars.PolyTheta) -> "TPoly":
    return cls.constant(RationalK.of(poly))

  @classmethod
  def t(cls, field: scalars.FieldDesc) -> "TPoly":
    return cls.of(field, [_rational_int(field, 0), _rational_int(field, 1)])

  @classmethod
  def linear(cls, c: RationalK) -> "TPoly":
    """t - c."""
    return cls.of(c.field, [-c, _rational_int(c.field, 1)])

  @property
  def degree(self) -> int:
    return len(self.coeffs) - 1

  def is_zero(self) -> bool:
    return not self.coeffs

  @property
  def is_scalar(self) -> bool:
    return self.degree <= 0

  def scalar(self) -> RationalK:
    if not self.is_scalar:
      raise ValueError(f"{self} is not constant in t")
    return self.coeffs[0] if self.coeffs else _rational_int(self.field, 0)

  def norm_top(self) -> Optional[int]:
    """The largest leading s-exponent among the coefficients."""
    tops = [c.top() for c in self.coeffs if not c.is_zero()]
    return max(tops) if tops else None

  def __add__(self, other: "TPoly") -> "TPoly":
    zero = _rational_int(self.field, 0)
    n = max(len(self.coeffs), len(other.coeffs))
    a = self.coeffs + (zero,) * (n - len(self.coeffs))
    b = other.coeffs + (zero,) * (n - len(other.coeffs))
    return TPoly.of(self.field, [x + y for x, y in zip(a, b)])

  def __neg__(self) -> "TPoly":
    return TPoly(self.field, tuple(-c for c in self.coeffs))

  def __sub__(self, other: "TPoly") -> "TPoly":
    return self + (-other)

  def __mul__(self, other: "TPoly") -> "TPoly":
    if self.is_zero() or other.is_zero():
      return TPoly(self.field)
    out = [_rational_int(self.field, 0)] * (self.degree + other.degree + 1)
    for i, x in enumerate(self.coeffs):
      if x.is_zero():
        continue
      for j, y in enumerate(other.coeffs):
        if not y.is_zero():
          out[i + j] = out[i + j] + x * y
    return TPoly.of(self.field, out)

  def __pow__(self, k: int) -> "TPoly":
    result = TPoly.constant(_rational_int(self.field, 1))
    for _ in range(k):
      result = result * self
    return result

  def scale(self, c: RationalK) -> "TPoly":
    return TPoly.of(self.field, [x * c for x in self.coeffs])

  def twist(self, n: int) -> "TPoly":
    if n < 0:
      raise UnsupportedOperationError(f"inverse twist n={n}")
    return TPoly(self.field, tuple(c.twist(n) for c in self.coeffs))

  def qth_root(self) -> Optional["TPoly"]:
    roots = [c.qth_root() for c in self.coeffs]
    if any(r is None for r in roots):
      return None
    return TPoly(self.field, tuple(roots))

  def twisted_value(self, n: int) -> RationalK:
    """u^(n)(θ) = Σ_j α_j^(n) θ^j as an element of K."""
    theta = RationalK.of(scalars.PolyTheta.theta(self.field))
    total = _rational_int(self.field, 0)
    for j, c in enumerate(self.coeffs):
      if not c.is_zero():
        total = total + c.twist(n) * theta**j
    return total

  def to_series(self, t_prec: int, floor: Optional[int] = None) -> TSeries:
    """Polynomial coefficients expand exactly, rational ones down to `floor`."""
    coeffs = []
    for c in self.coeffs[:t_prec + 1]:
      coeffs.append(
          laurent.rational_to_laurent(c, None if c.is_polynomial else floor))
    return from_coefficients(self.field, coeffs, t_prec)

  def __str__(self):
    if self.is_zero():
      return "0"
    terms = []
    for j, c in enumerate(self.coeffs):
      if c.is_zero():
        continue
      power = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
      value = f"({c})" if power else str(c)
      terms.append(value + ("·" + power if power else ""))
    return " + ".join(terms)


def _rational_int(field: scalars.FieldDesc, c: int) -> RationalK:
  return RationalK.from_int(field, c)
