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

"""Multizeta values, Carlitz multiple polylogarithms and the series L_{u,ν}.

For an index ν = (n_1, ..., n_d) and u = (u_1, ..., u_d) with u_k in K[t],

  L_{u,ν}(t) = Σ_{i_1 > ... > i_d >= 0} Π_k u_k^(i_k) / ℓ_{i_k}(t)^(n_k),

where ℓ_i(t) = Π_{j=1}^{i} (t - θ^(q^j)). At t = θ and constant u = z this is
the polylogarithm Li_ν(z); with u = (H_(n_1 - 1), ..., H_(n_d - 1)) it is
Γ_(n_1) ... Γ_(n_d) ζ(ν).

Precision arguments named `n` or `N` are θ-precisions: the result is exact on
every s-exponent at or above `laurent.theta_floor(field, N)`.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from absl import logging
from carlitz import laurent
from carlitz import scalars
from carlitz import tate
from carlitz._src import anderson_thakur
from carlitz._src import factorials
from carlitz._src import nested_sums
from carlitz._src import reraised_exception

LaurentL = laurent.LaurentL
PolyTheta = scalars.PolyTheta
RationalK = laurent.RationalK
TPoly = tate.TPoly
TSeries = tate.TSeries

# Largest number of monic polynomials a single computation may enumerate.
DEFAULT_BUDGET = 2**22

# θ-precision (beyond deg Γ_n) of the identity check on H_(n-1).
AT_CHECK_PRECISION = 20
# Enumeration allowance of that check; the precision is lowered to fit.
AT_CHECK_BUDGET = 2**12

# Above this many monic polynomials "auto" evaluates ζ through H_(n-1).
FAST_ENUMERATION_LIMIT = 2**14

carlitz_factorial = factorials.carlitz_factorial
carlitz_d = factorials.carlitz_d
ell = factorials.ell


class DomainError(ValueError):
  """Raised when a point lies outside the convergence domain.

  Attributes:
    coordinate: The 1-based coordinate that violates the bound.
  """

  def __init__(self, message: str, coordinate: int):
    super().__init__(message)
    self.coordinate = coordinate


class BudgetExceededError(RuntimeError):
  """Raised when an enumeration would exceed the configured budget.

  Attributes:
    budget: The budget that was exceeded.
  """

  def __init__(self, message: str, budget: int):
    super().__init__(message)
    self.budget = budget


class ConstructionError(RuntimeError):
  """Raised when an Anderson-Thakur polynomial fails its checks."""


@dataclasses.dataclass(frozen=True)
class Index:
  """An index ν = (n_1, ..., n_d) of positive integers."""
  parts: Tuple[int, ...]

  def __post_init__(self):
    object.__setattr__(self, "parts", tuple(int(n) for n in self.parts))
    if any(n < 1 for n in self.parts):
      raise ValueError(f"index parts must be >= 1, got {self.parts}")

  @property
  def wt(self) -> int:
    return sum(self.parts)

  @property
  def dep(self) -> int:
    return len(self.parts)

  def slice(self, j: int, i: int) -> "Index":
    """ν_{ij} = (n_j, ..., n_(i-1)) for 1 <= j <= i <= d + 1."""
    if not 1 <= j <= i <= self.dep + 1:
      raise ValueError(f"slice ({i},{j}) is out of range for depth {self.dep}")
    return Index(self.parts[j - 1:i - 1])

  @classmethod
  def parse(cls, text: str) -> "Index":
    """Parses "1,5" or "(1, 5)"."""
    text = text.strip().strip("()")
    if not text:
      return cls(())
    try:
      return cls(tuple(int(part) for part in text.split(",")))
    except ValueError as e:
      raise ValueError(f"cannot parse index {text!r}: {e}") from e

  def __str__(self):
    return "(" + ",".join(str(n) for n in self.parts) + ")"


def _domain_bound(n: int, q: int) -> int:
  """u_k converges with n_k when its leading s-exponent is below this."""
  return n * q


@dataclasses.dataclass(frozen=True)
class TPoint:
  """A point u = (u_1, ..., u_d) of polynomials in t over K."""
  field: scalars.FieldDesc
  entries: Tuple[TPoly, ...]

  @classmethod
  def scalars(cls, field: scalars.FieldDesc,
              values: Sequence[RationalK]) -> "TPoint":
    return cls(field, tuple(TPoly.constant(v) for v in values))

  @classmethod
  def polynomials(cls, field: scalars.FieldDesc,
                  polys: Sequence[TPoly]) -> "TPoint":
    return cls(field, tuple(polys))

  @classmethod
  def ones(cls, field: scalars.FieldDesc, d: int) -> "TPoint":
    return cls.scalars(field, [RationalK.from_int(field, 1)] * d)

  @property
  def is_scalar(self) -> bool:
    return all(e.is_scalar for e in self.entries)

  def slice(self, j: int, i: int) -> "TPoint":
    """u_{ij} = (u_j, ..., u_(i-1))."""
    return TPoint(self.field, self.entries[j - 1:i - 1])

  def check_domain(self, index: Index):
    """Raises DomainError unless every u_k satisfies ‖u_k‖ < |θ|^(n_k q/(q-1)).

    Zero coordinates are allowed.
    """
    if len(self.entries) != index.dep:
      raise ValueError(
          f"point has {len(self.entries)} coordinates, index {index} needs "
          f"{index.dep}")
    for k, (u, n) in enumerate(zip(self.entries, index.parts), start=1):
      top = u.norm_top()
      bound = _domain_bound(n, self.field.q)
      if top is not None and top >= bound:
        raise DomainError(
            f"coordinate {k} ({u}) has leading exponent s^{top}; n={n} "
            f"needs it below s^{bound}", coordinate=k)

  def __str__(self):
    return "(" + ", ".join(str(e) for e in self.entries) + ")"


@dataclasses.dataclass(frozen=True)
class CarlitzConstants:
  """D_i and ℓ_i for q^i <= up_to, and Γ_n for 1 <= n <= up_to."""
  D: Tuple[PolyTheta, ...]
  gamma: Dict[int, PolyTheta]
  ell: Tuple[PolyTheta, ...]


def carlitz_constants(field: scalars.FieldDesc, up_to: int) -> CarlitzConstants:
  if up_to < 1:
    raise ValueError(f"up_to must be >= 1, got {up_to}")
  count = 0
  while field.q**(count + 1) <= up_to:
    count += 1
  return CarlitzConstants(
      D=tuple(carlitz_d(field, i) for i in range(count + 1)),
      gamma={n: carlitz_factorial(field, n) for n in range(1, up_to + 1)},
      ell=tuple(ell(field, i) for i in range(count + 1)))


def is_even(q: int, n: int) -> bool:
  """"Even" in the Carlitz sense: q - 1 divides n."""
  return n % (q - 1) == 0


def is_odd(q: int, n: int) -> bool:
  return not is_even(q, n)


def _check_budget(count: int, budget: int, what: str):
  if count > budget:
    raise BudgetExceededError(
        f"{what} needs {count} monic polynomials; the budget is {budget}",
        budget=budget)


def power_sum(field: scalars.FieldDesc,
              d: int,
              n: int,
              N: int,
              budget: int = DEFAULT_BUDGET) -> LaurentL:
  """S_d(n) = Σ a^(-n) over monic a of degree d, to θ-precision N."""
  if d < 0 or n < 1:
    raise ValueError(f"power sums need d >= 0 and n >= 1, got d={d}, n={n}")
  _check_budget(field.q**d, budget, f"S_{d}({n})")
  return _power_sum(field, d, n, laurent.theta_floor(field, N))


@functools.lru_cache(maxsize=4096)
def _power_sum(field: scalars.FieldDesc, d: int, n: int,
               floor: int) -> LaurentL:
  if n * d * (field.q - 1) > -floor:
    return laurent.zero(field, floor)
  total = laurent.sum_series(field, _monic_powers(field, d, n, floor),
                             _leading_exponent(field, d, n), floor)
  logging.debug("S_%d(%d) over %s enumerated %d polynomials", d, n, field,
                field.q**d)
  return total


def _degree_tuples(parts: Sequence[int], N: int,
                   above: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
  """Strictly decreasing degree tuples with Σ n_k D_k <= N."""
  if not parts:
    yield ()
    return
  depth = len(parts)
  rest_min = sum(n * (depth - 1 - k) for k, n in enumerate(parts[1:], start=1))
  top = N if above is None else above - 1
  for D in range(depth - 1, top + 1):
    if parts[0] * D + rest_min > N:
      break
    for tail in _degree_tuples(parts[1:], N - parts[0] * D, D):
      yield (D,) + tail


def _leading_exponent(field: scalars.FieldDesc, D: int, n: int) -> int:
  """The s-exponent of a^(-n) for a of degree D."""
  return -n * D * (field.q - 1)


def _monic_powers(field: scalars.FieldDesc, D: int, n: int,
                  floor: int) -> Iterator[LaurentL]:
  for a in scalars.enumerate_monics(field, D):
    yield laurent.inv(laurent.from_poly(a**n), floor)


def mzv_bruteforce(field: scalars.FieldDesc,
                   index: Index,
                   N: int,
                   budget: int = DEFAULT_BUDGET) -> LaurentL:
  """ζ(ν) by summing over every admissible tuple of monic polynomials.

  The outermost level of a degree tuple has the most polynomials; its terms
  are summed as one coefficient block, and the inner levels term by term.
  """
  _check_index(index)
  floor = laurent.theta_floor(field, N)
  tuples = list(_degree_tuples(index.parts, N))
  count = sum(field.q**sum(degrees) for degrees in tuples)
  _check_budget(count, budget, f"ζ{index} by enumeration")
  logging.info("ζ%s over %s by enumeration: %d degree tuples, %d terms",
               index, field, len(tuples), count)
  terms = {}
  outer = {}
  total = laurent.zero(field, floor)
  for degrees in tuples:
    D, n = degrees[0], index.parts[0]
    if (D, n) not in outer:
      outer[D, n] = laurent.sum_series(field, _monic_powers(field, D, n, floor),
                                       _leading_exponent(field, D, n), floor)
    lists = [[outer[D, n]]]
    for D, n in zip(degrees[1:], index.parts[1:]):
      if (D, n) not in terms:
        terms[D, n] = list(_monic_powers(field, D, n, floor))
      lists.append(terms[D, n])
    total = laurent.add(total, _sum_of_products(lists, None, floor))
  return laurent.truncate(total, floor)


def _sum_of_products(lists: Sequence[List[LaurentL]],
                     prefix: Optional[LaurentL], floor: int) -> LaurentL:
  """Σ over one element per list of prefix * Π elements, term by term."""
  field = lists[0][0].field
  total = laurent.zero(field, floor)
  for value in lists[0]:
    product = value if prefix is None else laurent.mul(prefix, value, floor)
    if len(lists) > 1:
      product = _sum_of_products(lists[1:], product, floor)
    total = laurent.add(total, product)
  return total


def _check_index(index: Index):
  if index.dep < 1:
    raise ValueError("multizeta values need an index of depth >= 1")


def _level_degree_bounds(parts: Sequence[int], N: int) -> List[Optional[int]]:
  """The largest degree each level can take in a term that reaches N."""
  depth = len(parts)
  bounds = []
  for k, n in enumerate(parts):

    def minimal(D, k=k, n=n):
      outer = sum(parts[j] * (D + k - j) for j in range(k))
      inner = sum(parts[j] * (depth - 1 - j) for j in range(k + 1, depth))
      return n * D + outer + inner

    D = depth - 1 - k
    if minimal(D) > N:
      bounds.append(None)
      continue
    while minimal(D + 1) <= N:
      D += 1
    bounds.append(D)
  return bounds


def enumeration_count(field: scalars.FieldDesc, index: Index, N: int) -> int:
  """How many monic polynomials `mzv_fast` enumerates for ζ(ν) at N."""
  bounds = _level_degree_bounds(index.parts, N)
  return sum(
      sum(field.q**D for D in range(bound + 1))
      for bound in bounds
      if bound is not None)


def mzv_fast(field: scalars.FieldDesc,
             index: Index,
             N: int,
             budget: int = DEFAULT_BUDGET) -> LaurentL:
  """ζ(ν) as a nested sum of power sums S_D(n_k) over decreasing D."""
  _check_index(index)
  floor = laurent.theta_floor(field, N)
  bounds = _level_degree_bounds(index.parts, N)
  if any(bound is None for bound in bounds):
    return laurent.zero(field, floor)
  logging.info("ζ%s over %s by power sums: degree bounds %s", index, field,
               bounds)
  levels = [[power_sum(field, D, n, N, budget)
             for D in range(bound + 1)]
            for n, bound in zip(index.parts, bounds)]
  total = nested_sums.nested_sum(
      levels, laurent.add, lambda a, b: laurent.mul(a, b, floor),
      laurent.zero(field))
  return laurent.truncate(total, floor)


def _lseries_value(index: Index, point: TPoint, floor: int) -> LaurentL:
  """L_{u,ν}(θ) known down to the s-exponent `floor`."""
  field = point.field
  q = field.q
  if index.dep == 0:
    return laurent.truncate(laurent.one(field), floor)
  if any(u.is_zero() for u in point.entries):
    return laurent.zero(field, floor)
  tops = [u.norm_top() for u in point.entries]
  offsets = [
      n * q + max(0, u.degree) * (q - 1)
      for n, u in zip(index.parts, point.entries)
  ]
  deltas = [n * q - top for n, top in zip(index.parts, tops)]
  guard = sum(max(0, offset - delta) for offset, delta in zip(offsets, deltas))
  work = floor - guard
  last = nested_sums.last_outer_index(deltas, offsets, q, floor)
  if last is None:
    return laurent.zero(field, floor)
  logging.debug("L%s(θ): outer index up to %d, working floor s^%d", index,
                last, work)
  levels = []
  for k, (u, n) in enumerate(zip(point.entries, index.parts)):
    row = []
    for i in range(last + 1 - k):
      value = u.twisted_value(i)
      row.append(laurent.quotient(value.num, value.den * ell(field, i)**n,
                                  work))
    levels.append(row)
  total = nested_sums.nested_sum(
      levels, laurent.add, lambda a, b: laurent.mul(a, b, work),
      laurent.zero(field))
  return laurent.truncate(total, floor)


def lseries_value(index: Index, point: TPoint, N: int) -> LaurentL:
  """L_{u,ν}(θ) to θ-precision N, summed directly at t = θ."""
  point.check_domain(index)
  with reraised_exception.computing(lambda: f"L{index} at u={point}, N={N}"):
    return _lseries_value(index, point, laurent.theta_floor(point.field, N))


def cmpl_eval(index: Index, z: TPoint, N: int) -> LaurentL:
  """Li_ν(z) to θ-precision N for a point z of constants."""
  if not z.is_scalar:
    raise ValueError(f"polylogarithms take constant points, got {z}")
  return lseries_value(index, z, N)


def _inverse_linear(field: scalars.FieldDesc, j: int, t_prec: int) -> TSeries:
  """1/(t - θ^(q^j)) = -Σ_m θ^(-q^j (m+1)) t^m."""
  q = field.q
  return tate.from_coefficients(field, [
      laurent.theta_monomial(field, field.minus_one, -q**j * (m + 1))
      for m in range(t_prec + 1)
  ], t_prec)


def _lseries(index: Index, point: TPoint, t_prec: int, floor: int) -> TSeries:
  """L_{u,ν}(t) with coefficients known down to `floor`."""
  field = point.field
  q = field.q
  if index.dep == 0:
    return tate.with_floor(tate.constant(field, laurent.one(field), t_prec),
                           floor)
  if any(u.is_zero() for u in point.entries):
    return tate.with_floor(tate.constant(field, laurent.zero(field), t_prec),
                           floor)
  tops = [u.norm_top() for u in point.entries]
  offsets = [n * q for n in index.parts]
  deltas = [n * q - top for n, top in zip(index.parts, tops)]
  work = floor - sum(max(0, top) for top in tops)
  last = nested_sums.last_outer_index(deltas, offsets, q, floor)
  if last is None:
    return tate.with_floor(tate.constant(field, laurent.zero(field), t_prec),
                           floor)
  low = work - max(0, q**last * max(tops))
  logging.debug("L%s(t): outer index up to %d, t-degree %d, floor s^%d",
                index, last, t_prec, low)
  inverse_ells = [tate.constant(field, laurent.one(field), t_prec)]
  for i in range(1, last + 1):
    inverse_ells.append(
        tate.mul(inverse_ells[-1], _inverse_linear(field, i, t_prec), low))
  powers = {}
  levels = []
  for k, (u, n) in enumerate(zip(point.entries, index.parts)):
    row = []
    for i in range(last + 1 - k):
      if (i, n) not in powers:
        powers[i, n] = tate.power(inverse_ells[i], n, low)
      numerator = u.twist(i).to_series(t_prec, low)
      row.append(tate.mul(numerator, powers[i, n], work))
    levels.append(row)
  zero = tate.constant(field, laurent.zero(field), t_prec)
  total = nested_sums.nested_sum(
      levels, tate.add, lambda a, b: tate.mul(a, b, work), zero)
  return tate.with_floor(total, floor)


def lseries_build(index: Index, point: TPoint, T: int, N: int) -> TSeries:
  """L_{u,ν}(t) to t-degree T with θ-precision N in every coefficient."""
  point.check_domain(index)
  with reraised_exception.computing(
      lambda: f"L{index}(t) at u={point}, T={T}, N={N}"):
    return _lseries(index, point, T, laurent.theta_floor(point.field, N))


def lseries_recursion_residual(
    index: Index,
    point: TPoint,
    T: int,
    N: int,
    perturb: Optional[Callable[[TSeries], TSeries]] = None) -> TSeries:
  """(t-θ^q)^wt L - u_d (t-θ^q)^(n_d) L_(d-1)^(1) - L^(1); zero on the window.

  L_(d-1) drops the last coordinate of ν and u. `perturb`, when given, is
  applied to L before the comparison.
  """
  if index.dep < 1:
    raise ValueError("the recursion needs an index of depth >= 1")
  point.check_domain(index)
  field = point.field
  q = field.q
  floor = laurent.theta_floor(field, N)
  tops = [max(0, u.norm_top() or 0) for u in point.entries]
  work = floor - q * (index.wt * (q - 1) + sum(tops))
  shorter, shorter_point = index.slice(1, index.dep), point.slice(1, index.dep)
  full = _lseries(index, point, T, work)
  head = _lseries(shorter, shorter_point, T, work)
  if perturb is not None:
    full = perturb(full)

  theta_q = RationalK.of(PolyTheta.monomial(field, 1, q))
  linear = TPoly.linear(theta_q)
  n_d = index.parts[-1]
  lhs = tate.mul((linear**index.wt).to_series(T), full)
  u_d = point.entries[-1]
  head_cap = floor - n_d * q * (q - 1) - tops[-1]
  middle = tate.mul((u_d * linear**n_d).to_series(T, work),
                    tate.twist(head, 1, head_cap))
  rhs = tate.add(middle, tate.twist(full, 1, floor))
  return tate.with_floor(tate.sub(lhs, rhs), floor)


@dataclasses.dataclass(frozen=True)
class IdentityCheck:
  """The θ-precision at which H_(n-1) passed its identity check.

  Attributes:
    n: The weight; the polynomial checked is H_(n-1).
    requested_precision: deg Γ_n + AT_CHECK_PRECISION.
    checked_precision: The precision actually compared, lowered until the
      enumeration fits the check budget.
    monic_count: Monic polynomials the enumeration side summed over.
    check_budget: The enumeration allowance of the check.
  """
  n: int
  requested_precision: int
  checked_precision: int
  monic_count: int
  check_budget: int

  @property
  def shortened(self) -> bool:
    return self.checked_precision < self.requested_precision


def _check_count(field: scalars.FieldDesc, n: int, n_check: int) -> int:
  return sum(field.q**D for D in range(n_check // n + 1))


@functools.lru_cache(maxsize=None)
def _checked_at_polynomial(field: scalars.FieldDesc, n: int,
                           check_budget: int) -> Tuple[TPoly, IdentityCheck]:
  bipoly = anderson_thakur.anderson_thakur(field, n - 1)
  h = TPoly.of(field, [RationalK.of(c) for c in bipoly])
  top = h.norm_top()
  if top is not None and top >= _domain_bound(n, field.q):
    raise ConstructionError(
        f"H_{n - 1} = {h} violates the norm bound: leading exponent s^{top}")
  gamma = carlitz_factorial(field, n)
  requested = AT_CHECK_PRECISION + gamma.degree
  n_check = requested
  while n_check > 1 and _check_count(field, n, n_check) > check_budget:
    n_check -= 1
  check = IdentityCheck(n, requested, n_check,
                        _check_count(field, n, n_check), check_budget)
  if check.shortened:
    logging.warning(
        "Checking H_%d over %s at θ-precision %d instead of %d to stay within "
        "%d monic polynomials", n - 1, field, n_check, requested, check_budget)
  index = Index((n,))
  lhs = lseries_value(index, TPoint.polynomials(field, [h]), n_check)
  rhs = laurent.mul(laurent.from_poly(gamma),
                    mzv_bruteforce(field, index, n_check, check_budget))
  if not laurent.agrees(lhs, rhs):
    raise ConstructionError(
        f"H_{n - 1} = {h} fails L_(H,{n})(θ) = Γ_{n} ζ({n}) at θ-precision "
        f"{n_check}")
  logging.info("H_%d over %s passed the identity check at θ-precision %d",
               n - 1, field, n_check)
  return h, check


def _check_allowance(budget: int, check_budget: Optional[int]) -> int:
  return min(budget, AT_CHECK_BUDGET if check_budget is None else check_budget)


def at_identity_check(field: scalars.FieldDesc,
                      n: int,
                      budget: int = DEFAULT_BUDGET,
                      check_budget: Optional[int] = None) -> IdentityCheck:
  """How far H_(n-1) was checked against enumeration."""
  if n < 1:
    raise ValueError(f"H_(n-1) needs n >= 1, got {n}")
  return _checked_at_polynomial(field, n,
                                _check_allowance(budget, check_budget))[1]


def at_polynomial(field: scalars.FieldDesc,
                  n: int,
                  budget: int = DEFAULT_BUDGET,
                  check_budget: Optional[int] = None) -> TPoly:
  """The Anderson-Thakur polynomial H_(n-1), checked against enumeration.

  The check enumerates at most `check_budget` monic polynomials (default
  AT_CHECK_BUDGET), and never more than `budget`.
  """
  if n < 1:
    raise ValueError(f"H_(n-1) needs n >= 1, got {n}")
  return _checked_at_polynomial(field, n,
                                _check_allowance(budget, check_budget))[0]


def mzv_at(field: scalars.FieldDesc,
           index: Index,
           N: int,
           budget: int = DEFAULT_BUDGET,
           check_budget: Optional[int] = None) -> LaurentL:
  """ζ(ν) = L_{H,ν}(θ) / (Γ_(n_1) ... Γ_(n_d))."""
  _check_index(index)
  floor = laurent.theta_floor(field, N)
  polys = [at_polynomial(field, n, budget, check_budget) for n in index.parts]
  gamma = PolyTheta.constant(field, 1)
  for n in index.parts:
    gamma = gamma * carlitz_factorial(field, n)
  with reraised_exception.computing(lambda: f"ζ{index} at N={N}"):
    value = _lseries_value(index, TPoint.polynomials(field, polys), floor)
    if value.is_zero():
      return laurent.zero(field, floor)
    inverse = laurent.quotient(
        PolyTheta.constant(field, 1), gamma, floor - max(0, value.v_start))
    return laurent.truncate(laurent.mul(value, inverse, floor), floor)


def zeta(field: scalars.FieldDesc,
         index: Index,
         N: int,
         method: str = "auto",
         budget: int = DEFAULT_BUDGET) -> LaurentL:
  """ζ(ν) to θ-precision N.

  Args:
    field: The field F_q.
    index: The index ν, of depth >= 1.
    N: θ-precision of the result.
    method: "fast", "bruteforce", "at", or "auto" for "fast" when its
      enumeration stays within FAST_ENUMERATION_LIMIT and the budget, and
      "at" otherwise.
    budget: Enumeration budget.

  Returns:
    ζ(ν) known down to s^(-N(q-1)).
  """
  if method == "auto":
    count = enumeration_count(field, index, N)
    method = "fast" if count <= min(budget, FAST_ENUMERATION_LIMIT) else "at"
    logging.info("ζ%s at N=%d: %d monic polynomials to enumerate, using %r",
                 index, N, count, method)
  if method == "fast":
    return mzv_fast(field, index, N, budget)
  if method == "bruteforce":
    return mzv_bruteforce(field, index, N, budget)
  if method == "at":
    return mzv_at(field, index, N, budget)
  raise ValueError(f"unknown method {method!r}")
