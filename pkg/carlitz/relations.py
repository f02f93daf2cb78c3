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

"""K-linear relations among values known to finite precision.

A relation of degree B among v_1, ..., v_m is a tuple of polynomials c_i(θ) of
degree at most B with Σ c_i(θ) v_i = 0. Writing c_i = Σ_k c_ik θ^k, the
unknowns c_ik lie in F_q and every known s-coefficient of Σ c_ik θ^k v_i gives
one F_q-linear equation, so the relations found on a window are the kernel of
an explicit matrix. Whatever is found is evidence at the stated precision,
never a proof; every report carries its slack (equations beyond unknowns).
"""

import dataclasses
import itertools
from typing import Callable, List, Optional, Sequence, Tuple

from absl import logging
from carlitz import laurent
from carlitz import motives
from carlitz import scalars
from carlitz import specials
from carlitz import tate
from carlitz._src import linear_algebra
from carlitz._src import reraised_exception
import numpy as np

LaurentL = laurent.LaurentL
PolyTheta = scalars.PolyTheta
RationalK = laurent.RationalK

DEFAULT_SLACK = 20
DEFAULT_MONOMIAL_CAP = 30
# Precisions a scan tries before giving up on a short window.
DEEPEN_ATTEMPTS = 4

Relation = Tuple[PolyTheta, ...]


class WindowTooShortError(ValueError):
  """Raised when a window holds too few equations for the unknowns.

  Attributes:
    required: Equations the short block needs, its unknowns plus the slack.
    missing: How many more equations that block needs; every step of
      θ-precision adds about one.
  """

  def __init__(self, message: str, required: int, missing: int = 0):
    super().__init__(message)
    self.required = required
    self.missing = missing


@dataclasses.dataclass(frozen=True)
class RelationQuery:
  """Values to scan for relations with coefficients of degree <= B.

  Attributes:
    values: The values, in one field; at least one is known to finite precision.
    degree_bound: B, the largest θ-degree of a coefficient.
    slack_min: Equations each block of the window needs beyond its unknowns.
    labels: Optional names of the values, for reports.
  """
  values: Tuple[LaurentL, ...]
  degree_bound: int
  slack_min: int = DEFAULT_SLACK
  labels: Tuple[str, ...] = ()

  def __post_init__(self):
    object.__setattr__(self, "values", tuple(self.values))
    object.__setattr__(self, "labels", tuple(self.labels))
    if not self.values:
      raise ValueError("a relation query needs at least one value")
    if self.degree_bound < 0 or self.slack_min < 0:
      raise ValueError(
          f"degree bound {self.degree_bound} and slack {self.slack_min} must "
          "be non-negative")
    field = self.values[0].field
    if any(v.field != field for v in self.values):
      raise scalars.FieldMismatchError("relation values live in several fields")
    if all(v.is_exact for v in self.values):
      raise ValueError("every value is exact; there is no window to scan")
    if self.labels and len(self.labels) != len(self.values):
      raise ValueError(
          f"{len(self.labels)} labels for {len(self.values)} values")

  @property
  def field(self) -> scalars.FieldDesc:
    return self.values[0].field

  @property
  def unknowns(self) -> int:
    return len(self.values) * (self.degree_bound + 1)


@dataclasses.dataclass(frozen=True)
class RelationBasis:
  """The relations found on a window.

  Attributes:
    relations: Coefficient tuples (c_1(θ), ..., c_m(θ)), in reduced echelon
      form of their F_q-coefficient vectors. With a recheck, only the
      relations of the deeper window.
    slack: The smallest slack (equations minus unknowns) of a gated block.
    verified: Every relation re-substitutes to zero on every window scanned.
    floor: The lowest s-exponent of the window.
    equations: Rows with a nonzero entry.
    unknowns: The number of unknowns.
    labels: The value names of the query.
    stable: Whether every relation of the window survived the recheck; None
      when no second precision was given.
    precision_pair: The floors of the two precisions when `stable` is set.
    dropped: Relations of the window that the recheck did not confirm.
    query: The query that was scanned.
  """
  relations: Tuple[Relation, ...]
  slack: int
  verified: bool
  floor: int
  equations: int
  unknowns: int
  labels: Tuple[str, ...] = ()
  stable: Optional[bool] = None
  precision_pair: Optional[Tuple[int, int]] = None
  dropped: int = 0
  query: Optional[RelationQuery] = None

  @property
  def is_empty(self) -> bool:
    return not self.relations


def relation_window(query: RelationQuery) -> Tuple[int, int]:
  """(top, floor) of the exponents that give equations."""
  field = query.field
  shift = query.degree_bound * (field.q - 1)
  floor = max(v.prec for v in query.values if v.prec is not None) + shift
  tops = [v.v_start for v in query.values if v.coeffs]
  top = (max(tops) if tops else floor - 1) + shift
  return top, floor


def _theta_multiple(v: LaurentL, k: int) -> LaurentL:
  return laurent.mul(laurent.theta_monomial(v.field, 1, k), v)


def relation_matrix(query: RelationQuery) -> np.ndarray:
  """Row e, column i(B+1)+k: the s^(top-e) coefficient of θ^k v_i."""
  top, floor = relation_window(query)
  columns = []
  for v in query.values:
    for k in range(query.degree_bound + 1):
      shifted = _theta_multiple(v, k)
      if not shifted.coeffs or shifted.v_start < floor:
        columns.append(np.zeros(max(0, top - floor + 1), dtype=np.int64))
      else:
        columns.append(shifted.dense(top, floor))
  return np.stack(columns, axis=1)


def substitute(values: Sequence[LaurentL], relation: Relation,
               floor: int) -> LaurentL:
  """Σ c_i(θ) v_i known down to `floor`."""
  field = values[0].field
  total = laurent.zero(field)
  for c, v in zip(relation, values):
    if not c.is_zero():
      total = laurent.add(total, laurent.mul(laurent.from_poly(c), v))
  return laurent.truncate(total, floor)


@dataclasses.dataclass(frozen=True)
class EquationBlock:
  """Columns whose rows share residue classes of the s-exponent mod q - 1.

  The relation matrix is block diagonal along these classes, so every block
  needs its own slack.

  Attributes:
    classes: The residue classes mod q - 1 of the block's rows.
    columns: The matrix columns in the block.
    equations: Rows of these classes with some nonzero entry.
    exact: Every column comes from an exact value.
  """
  classes: Tuple[int, ...]
  columns: Tuple[int, ...]
  equations: int
  exact: bool

  @property
  def unknowns(self) -> int:
    return len(self.columns)

  @property
  def slack(self) -> int:
    return self.equations - self.unknowns


def equation_blocks(query: RelationQuery,
                    matrix: np.ndarray) -> Tuple[EquationBlock, ...]:
  """Splits the relation matrix into its independent blocks."""
  period = query.field.q - 1
  top, _ = relation_window(query)
  width = query.degree_bound + 1
  row_classes = (top - np.arange(matrix.shape[0])) % period
  nonzero = matrix != 0
  parent = list(range(period))

  def find(c: int) -> int:
    while parent[c] != c:
      parent[c] = parent[parent[c]]
      c = parent[c]
    return c

  column_class = []
  for col in range(matrix.shape[1]):
    classes = sorted(set(row_classes[nonzero[:, col]].tolist()))
    if not classes:
      v = query.values[col // width]
      classes = [v.v_start % period if v.coeffs else 0]
    for c in classes[1:]:
      parent[find(c)] = find(classes[0])
    column_class.append(classes[0])

  live_rows = nonzero.any(axis=1)
  blocks = []
  for root in sorted({find(c) for c in column_class}):
    classes = tuple(c for c in range(period) if find(c) == root)
    columns = tuple(
        col for col, c in enumerate(column_class) if find(c) == root)
    in_block = np.isin(row_classes, classes)
    blocks.append(
        EquationBlock(
            classes=classes,
            columns=columns,
            equations=int(np.count_nonzero(live_rows & in_block)),
            exact=all(query.values[col // width].is_exact for col in columns)))
  return tuple(blocks)


def _to_relation(field: scalars.FieldDesc, vector: np.ndarray,
                 degree_bound: int) -> Relation:
  width = degree_bound + 1
  return tuple(
      PolyTheta.of(field, [int(x) for x in vector[i:i + width]])
      for i in range(0, len(vector), width))


@dataclasses.dataclass(frozen=True)
class _Kernel:
  relations: Tuple[Relation, ...]
  floor: int
  equations: int
  slack: int


def _window_kernel(query: RelationQuery) -> _Kernel:
  """The kernel of the relation matrix after the slack gate."""
  field = query.field
  top, floor = relation_window(query)
  rows = max(0, top - floor + 1)
  if rows == 0:
    required = query.unknowns + query.slack_min
    raise WindowTooShortError(
        f"the window [s^{floor}, s^{top}] is empty; {required} equations are "
        "required", required, required)
  matrix = relation_matrix(query)
  blocks = equation_blocks(query, matrix)
  counted = [b for b in blocks if not b.exact]
  for block in counted:
    if block.slack < query.slack_min:
      required = block.unknowns + query.slack_min
      raise WindowTooShortError(
          f"{block.equations} equations in the s-exponent classes "
          f"{block.classes} mod {field.q - 1} for {block.unknowns} unknowns; "
          f"{required} are required (slack {query.slack_min})", required,
          required - block.equations)
  basis = linear_algebra.kernel(field, matrix)
  relations = tuple(
      _to_relation(field, row, query.degree_bound) for row in basis)
  equations = sum(b.equations for b in blocks)
  logging.info(
      "Relation scan: %d values, B=%d, %d equations in %d blocks, "
      "%d relations", len(query.values), query.degree_bound, equations,
      len(blocks), len(relations))
  return _Kernel(relations, floor, equations, min(b.slack for b in counted))


def find_linear_relations(
    query: RelationQuery,
    recheck: Optional[Sequence[LaurentL]] = None) -> RelationBasis:
  """The relations of degree <= B among `query.values` on their window.

  Only rows with a nonzero entry count as equations, and each block of
  s-exponent classes mod q - 1 (see `equation_blocks`) must have `slack_min`
  equations beyond its own unknowns. Blocks of exact values are not gated.

  Args:
    query: The values and bounds.
    recheck: The same values to a strictly larger precision. When given, the
      kernel is computed again on that window and only relations found there
      are reported; `dropped` counts those that did not survive.

  Returns:
    The kernel as a RelationBasis.

  Raises:
    WindowTooShortError: If a block of either window is short of equations.
    AssertionError: If a reported relation does not re-substitute to zero.
  """
  kernel = _window_kernel(query)
  relations = kernel.relations
  stable = None
  precision_pair = None
  dropped = 0
  check_floors = [kernel.floor]
  values_at = [query.values]
  if recheck is not None:
    recheck_query = dataclasses.replace(query, values=tuple(recheck))
    recheck_floor = relation_window(recheck_query)[1]
    if recheck_floor >= kernel.floor:
      raise ValueError(
          f"the recheck window ends at s^{recheck_floor}, not below "
          f"s^{kernel.floor}")
    deeper = _window_kernel(recheck_query)
    dropped = max(0, len(relations) - len(deeper.relations))
    if dropped:
      logging.warning(
          "%d of %d relations found down to s^%d fail down to s^%d",
          dropped, len(relations), kernel.floor, recheck_floor)
    relations = deeper.relations
    stable = dropped == 0
    precision_pair = (kernel.floor, recheck_floor)
    check_floors.append(recheck_floor)
    values_at.append(recheck_query.values)
  verified = all(
      substitute(values, r, floor).is_zero()
      for values, floor in zip(values_at, check_floors)
      for r in relations)
  if not verified:
    raise AssertionError("a kernel vector does not re-substitute to zero")
  return RelationBasis(
      relations=relations,
      slack=kernel.slack,
      verified=verified,
      floor=kernel.floor,
      equations=kernel.equations,
      unknowns=query.unknowns,
      labels=query.labels,
      stable=stable,
      precision_pair=precision_pair,
      dropped=dropped,
      query=query)


@dataclasses.dataclass(frozen=True)
class Reconstruction:
  """The outcome of recognizing a value as an element of K."""
  value: Optional[RationalK]
  degree_bound: int
  slack: int
  stable: Optional[bool] = None
  precision_pair: Optional[Tuple[int, int]] = None

  @property
  def succeeded(self) -> bool:
    return self.value is not None


def rational_reconstruct(v: LaurentL,
                         degree_bound: int,
                         slack_min: int = DEFAULT_SLACK,
                         recheck: Optional[LaurentL] = None) -> Reconstruction:
  """Finds a/b with deg a, deg b <= B and b v = a on the window of v.

  Args:
    v: The value, known to finite precision.
    degree_bound: B.
    slack_min: Equations required beyond the 2(B + 1) unknowns.
    recheck: v to a strictly larger precision; a success is reported stable
      only if a/b agrees with it too.

  Returns:
    A Reconstruction whose value is None when no fraction of degree <= B fits.
  """
  field = v.field
  one = laurent.one(field)
  basis = find_linear_relations(
      RelationQuery((v, one), degree_bound, slack_min),
      None if recheck is None else (recheck, one))
  candidates = [r for r in basis.relations if not r[0].is_zero()]
  if not candidates:
    logging.info("No fraction of degree <= %d matches the value", degree_bound)
    return Reconstruction(None, degree_bound, basis.slack, basis.stable,
                          basis.precision_pair)
  den, num = candidates[0]
  value = RationalK.of(-num, den)
  stable = None
  if recheck is not None:
    stable = laurent.agrees(
        laurent.rational_to_laurent(value, recheck.prec), recheck)
  return Reconstruction(value, degree_bound, basis.slack, stable,
                        basis.precision_pair)


def even_ratio(field: scalars.FieldDesc,
               n: int,
               N: int,
               budget: int = specials.DEFAULT_BUDGET) -> LaurentL:
  """ζ(n)/π̃^n to θ-precision N."""
  floor = laurent.theta_floor(field, N)
  with reraised_exception.computing(lambda: f"ζ({n})/π̃^{n} at N={N}"):
    inverse_pi = laurent.inv(tate.pi_build(field, N))
    zeta = specials.zeta(field, specials.Index((n,)), N, budget=budget)
    ratio = laurent.mul(zeta, laurent.power(inverse_pi, n))
    return laurent.truncate(ratio, floor)


def monomials(
    values: Sequence[LaurentL],
    degree: int,
    cap: int = DEFAULT_MONOMIAL_CAP) -> List[Tuple[Tuple[int, ...], LaurentL]]:
  """Monomials of total degree <= `degree`, graded then lexicographic.

  The constant monomial comes first; at most `cap` monomials are returned.
  """
  field = values[0].field
  out = []
  for total in range(degree + 1):
    for combo in itertools.combinations_with_replacement(
        range(len(values)), total):
      exponents = [0] * len(values)
      product = laurent.one(field)
      for i in combo:
        exponents[i] += 1
        product = laurent.mul(product, values[i])
      out.append((tuple(exponents), product))
  if len(out) > cap:
    logging.warning("Keeping %d of %d monomials of degree <= %d", cap,
                    len(out), degree)
    out = out[:cap]
  return out


def _monomial_label(labels: Sequence[str], exponents: Sequence[int]) -> str:
  factors = []
  for label, e in zip(labels, exponents):
    if e:
      factors.append(label if e == 1 else f"{label}^{e}")
  return "*".join(factors) or "1"


@dataclasses.dataclass(frozen=True)
class HypothesisReport:
  """Which hypotheses of the independence theorems an index meets.

  Attributes:
    q: The field size.
    index: The index.
    odd_parts: For each part, whether q - 1 does not divide it.
    p_power_pairs: 1-based pairs (j, k), j < k, whose parts have a ratio that
      is an integral power of p (p^0 included).
    distinct: Whether the parts are pairwise distinct.
  """
  q: int
  index: specials.Index
  odd_parts: Tuple[bool, ...]
  p_power_pairs: Tuple[Tuple[int, int], ...]
  distinct: bool

  @property
  def met(self) -> bool:
    return all(self.odd_parts) and not self.p_power_pairs


def _is_power_of(p: int, n: int) -> bool:
  while n % p == 0:
    n //= p
  return n == 1


def hypothesis_check(q: int, index: specials.Index) -> HypothesisReport:
  p, _ = scalars.prime_power(q)
  parts = index.parts
  pairs = []
  for j, k in itertools.combinations(range(len(parts)), 2):
    small, large = sorted((parts[j], parts[k]))
    if large % small == 0 and _is_power_of(p, large // small):
      pairs.append((j + 1, k + 1))
  return HypothesisReport(
      q=q,
      index=index,
      odd_parts=tuple(specials.is_odd(q, n) for n in parts),
      p_power_pairs=tuple(pairs),
      distinct=len(set(parts)) == len(parts))


@dataclasses.dataclass(frozen=True)
class IndependenceReport:
  """A relation scan among π̃ and the values L_{u_ij, ν_ij}(θ).

  Attributes:
    precision: The θ-precision the scan settled on; the relations were then
      rechecked at `recheck_precision(precision)`.
  """
  index: specials.Index
  point: specials.TPoint
  hypotheses: HypothesisReport
  labels: Tuple[str, ...]
  linear: RelationBasis
  monomial: Optional[RelationBasis]
  monomial_degree: int
  precision: int

  @property
  def relation_count(self) -> int:
    count = len(self.linear.relations)
    if self.monomial is not None:
      count += len(self.monomial.relations)
    return count


def recheck_precision(N: int) -> int:
  """The larger θ-precision at which relations found at N are confirmed."""
  return N + N // 2


def deepening_scan(build: Callable[[int], Sequence[RelationQuery]],
                   N: int) -> Tuple[List[RelationBasis], int]:
  """Scans the queries `build(N)`, raising N while some window is short.

  Every relation is then confirmed on `build(recheck_precision(N))`.

  Returns:
    One basis per query, and the precision N that was used.

  Raises:
    WindowTooShortError: If the window is still short after
      DEEPEN_ATTEMPTS precisions.
  """
  attempt = 1
  while True:
    queries = build(N)
    try:
      for query in queries:
        _window_kernel(query)
      break
    except WindowTooShortError as e:
      if attempt == DEEPEN_ATTEMPTS:
        raise
      step = max(e.missing, N // 4, 1)
      logging.info("Raising the scan precision from N=%d to N=%d: %s", N,
                   N + step, e)
      N += step
      attempt += 1
  deeper = build(recheck_precision(N))
  return [
      find_linear_relations(query, again.values)
      for query, again in zip(queries, deeper)
  ], N


def period_values(index: specials.Index, point: specials.TPoint,
                  N: int) -> Tuple[Tuple[str, ...], Tuple[LaurentL, ...]]:
  """π̃ and L_{u_ij, ν_ij}(θ) for (i, j) in I_d, with their labels."""
  field = point.field
  labels = ["pi"]
  values = [tate.pi_build(field, N)]
  for element in motives.index_set(index.dep):
    labels.append(f"L{element}")
    values.append(
        specials.lseries_value(
            index.slice(element.j, element.i),
            point.slice(element.j, element.i), N))
  return tuple(labels), tuple(values)


def independence_report(index: specials.Index,
                        point: specials.TPoint,
                        degree_bound: int,
                        N: int,
                        monomial_degree: int = 2,
                        monomial_cap: int = DEFAULT_MONOMIAL_CAP,
                        slack_min: int = DEFAULT_SLACK) -> IndependenceReport:
  """Scans the 1 + d(d+1)/2 period values and their monomials for relations.

  Hypothesis violations are reported, and the scan runs regardless. N is
  raised until every block has `slack_min` spare equations, and relations
  are kept only if they hold at the recheck precision too.
  """
  field = point.field
  hypotheses = hypothesis_check(field.q, index)
  if not hypotheses.met:
    logging.warning("%s does not meet the independence hypotheses over %s",
                    index, field)

  def build(n: int) -> List[RelationQuery]:
    labels, values = period_values(index, point, n)
    queries = [RelationQuery(values, degree_bound, slack_min, labels)]
    if monomial_degree >= 2:
      terms = monomials(values, monomial_degree, monomial_cap)
      queries.append(
          RelationQuery(
              tuple(v for _, v in terms), degree_bound, slack_min,
              tuple(_monomial_label(labels, e) for e, _ in terms)))
    return queries

  bases, used = deepening_scan(build, N)
  return IndependenceReport(
      index=index,
      point=point,
      hypotheses=hypotheses,
      labels=bases[0].labels,
      linear=bases[0],
      monomial=bases[1] if len(bases) > 1 else None,
      monomial_degree=monomial_degree,
      precision=used)


def depth_one_hypothesis(field: scalars.FieldDesc,
                         n: int,
                         alphas: Sequence[RationalK],
                         degree_bound: int,
                         N: int,
                         slack_min: int = DEFAULT_SLACK) -> RelationBasis:
  """Scans π̃^n, Li_n(α_1), ..., Li_n(α_r) for K-linear relations.

  N is raised while the window is short; relations are rechecked as in
  `deepening_scan`.
  """
  index = specials.Index((n,))
  labels = [f"pi^{n}"] + [f"Li_{n}({alpha})" for alpha in alphas]

  def build(precision: int) -> List[RelationQuery]:
    values = [laurent.power(tate.pi_build(field, precision), n)]
    for alpha in alphas:
      values.append(
          specials.cmpl_eval(index, specials.TPoint.scalars(field, [alpha]),
                             precision))
    return [
        RelationQuery(tuple(values), degree_bound, slack_min, tuple(labels))
    ]

  bases, _ = deepening_scan(build, N)
  return bases[0]


@dataclasses.dataclass(frozen=True)
class SuiteCase:
  name: str
  kind: str
  passed: bool
  detail: str


@dataclasses.dataclass(frozen=True)
class SuiteReport:
  field: scalars.FieldDesc
  cases: Tuple[SuiteCase, ...]

  @property
  def ok(self) -> bool:
    return all(c.passed for c in self.cases)


def _even_case(field: scalars.FieldDesc, n: int, N: int, N_check: int,
               degree_bound: int, slack_min: int, budget: int) -> SuiteCase:
  name = f"zeta({n})/pi^{n}"
  try:
    reconstruction = rational_reconstruct(
        even_ratio(field, n, N, budget), degree_bound, slack_min,
        recheck=even_ratio(field, n, N_check, budget))
  except (ArithmeticError, ValueError, RuntimeError) as e:
    return SuiteCase(name, "even_ratio", False, f"{type(e).__name__}: {e}")
  if not reconstruction.succeeded:
    return SuiteCase(name, "even_ratio", False,
                     f"no fraction of degree <= {degree_bound}")
  return SuiteCase(name, "even_ratio", bool(reconstruction.stable),
                   str(reconstruction.value))


def _frobenius_case(field: scalars.FieldDesc, parts: Sequence[int], N: int,
                    budget: int) -> SuiteCase:
  p = field.p
  index = specials.Index(parts)
  lifted = specials.Index(tuple(p * n for n in parts))
  name = f"zeta{lifted} = zeta{index}^{p}"
  try:
    lhs = specials.zeta(field, lifted, N, budget=budget)
    rhs = laurent.power(specials.zeta(field, index, N, budget=budget), p)
  except (ArithmeticError, ValueError, RuntimeError) as e:
    return SuiteCase(name, "frobenius", False, f"{type(e).__name__}: {e}")
  difference = laurent.sub(lhs, rhs)
  if difference.is_zero():
    return SuiteCase(name, "frobenius", True,
                     f"agree down to s^{difference.prec}")
  return SuiteCase(name, "frobenius", False,
                   f"first difference at s^{difference.v_start}")


def known_relation_suite(
    field: scalars.FieldDesc,
    n_max: int,
    N: int,
    N_check: Optional[int] = None,
    degree_bound: int = 8,
    frobenius_indices: Sequence[Sequence[int]] = ((1,), (1, 2)),
    slack_min: int = DEFAULT_SLACK,
    budget: int = specials.DEFAULT_BUDGET) -> SuiteReport:
  """Checks ζ(n)/π̃^n ∈ K for "even" n <= n_max and ζ(pν) = ζ(ν)^p.

  Failures are report entries, not exceptions.
  """
  N_check = N_check if N_check is not None else recheck_precision(N)
  cases = []
  for n in range(1, n_max + 1):
    if specials.is_even(field.q, n):
      cases.append(
          _even_case(field, n, N, N_check, degree_bound, slack_min, budget))
  for parts in frobenius_indices:
    cases.append(_frobenius_case(field, parts, N, budget))
  report = SuiteReport(field, tuple(cases))
  logging.info("Known relations over %s: %d of %d cases pass", field,
               sum(c.passed for c in cases), len(cases))
  return report
