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

"""The matrices Φ and Ψ attached to an index and a point, and their checks.

For ν = (n_1, ..., n_d), u = (u_1, ..., u_d) and w_i = n_i + ... + n_d, the
(d+1)x(d+1) lower triangular matrices are

  Φ_ii = (t - θ)^(w_i),     Φ_(i+1,i) = u_i^(-1) (t - θ)^(w_i),
  Ψ_ii = Ω^(w_i),           Ψ_ij = Ω^(w_j) L_{u_ij, ν_ij}   (i > j),

with w_(d+1) = 0. They satisfy Ψ^(-1) = ΦΨ, which is checked here in the
forward form Ψ = Φ^(1) Ψ^(1). Φ^(1) only involves u itself, so it always
exists; Φ is stored as well when every u_i has an exact q-th root.

Rows and columns are numbered from 1 in every public interface.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from typing import Dict, List, Optional, Sequence, Tuple

from absl import logging
from carlitz import laurent
from carlitz import scalars
from carlitz import specials
from carlitz import tate
from carlitz._src import reraised_exception
import numpy as np

LaurentL = laurent.LaurentL
RationalK = laurent.RationalK
TPoly = tate.TPoly
TSeries = tate.TSeries

PolyMatrix = Tuple[Tuple[TPoly, ...], ...]
SeriesMatrix = Tuple[Tuple[TSeries, ...], ...]


class IndexSetError(ValueError):
  """Raised for pairs (i, j) outside the index set I_d."""


@dataclasses.dataclass(frozen=True)
class IdElement:
  """An element (i, j) of I_d = {(i, j) : 1 <= j < i <= d + 1}."""
  i: int
  j: int

  @property
  def dep(self) -> int:
    return self.i - self.j

  def sort_key(self) -> Tuple[int, int]:
    """Smaller depth first, then smaller j."""
    return self.dep, self.j

  def check(self, d: int):
    if not 1 <= self.j < self.i <= d + 1:
      raise IndexSetError(f"{self} is not in I_{d}")

  def successor(self, d: int) -> Optional["IdElement"]:
    elements = index_set(d)
    k = position(d, self)
    return elements[k + 1] if k + 1 < len(elements) else None

  def predecessor(self, d: int) -> Optional["IdElement"]:
    k = position(d, self)
    return index_set(d)[k - 1] if k > 0 else None

  def __str__(self):
    return f"({self.i},{self.j})"


def index_set(d: int) -> List[IdElement]:
  """I_d in increasing order."""
  if d < 1:
    raise IndexSetError(f"I_d needs d >= 1, got {d}")
  elements = [IdElement(i, j) for i in range(2, d + 2) for j in range(1, i)]
  return sorted(elements, key=IdElement.sort_key)


def position(d: int, element: IdElement) -> int:
  """The 0-based position of `element` in `index_set(d)`."""
  element.check(d)
  dep, j = element.sort_key()
  # Depths 1..dep-1 contribute d, d-1, ..., d-dep+2 elements.
  return sum(d + 1 - k for k in range(1, dep)) + j - 1


def slice_index(index: specials.Index, element: IdElement) -> specials.Index:
  """ν_{ij} = (n_j, ..., n_(i-1))."""
  element.check(index.dep)
  return index.slice(element.j, element.i)


@dataclasses.dataclass(frozen=True)
class PeriodSystem:
  """Φ, Φ^(1) and Ψ for an index and a point, or a block of them.

  Attributes:
    index: The index ν of the full system.
    point: The point u of the full system.
    phi: Φ, or None when some u_i has no exact q-th root.
    phi_twisted: Φ^(1).
    psi: Ψ, every entry known down to `floor`.
    omega: Ω as used for Ψ, known deeper than `floor`.
    lseries: L_{u_ij, ν_ij} keyed by (i, j) of the full system.
    t_prec: The t-truncation.
    N: The θ-precision.
    rows: The rows (and columns) of the full system this block keeps.
    weights: The exponent w_i of each kept row.
  """
  index: specials.Index
  point: specials.TPoint
  phi: Optional[PolyMatrix]
  phi_twisted: PolyMatrix
  psi: SeriesMatrix
  omega: TSeries
  lseries: Dict[Tuple[int, int], TSeries]
  t_prec: int
  N: int
  rows: Tuple[int, ...]
  weights: Tuple[int, ...]

  @property
  def field(self) -> scalars.FieldDesc:
    return self.omega.field

  @property
  def size(self) -> int:
    return len(self.rows)

  @property
  def floor(self) -> int:
    return laurent.theta_floor(self.field, self.N)


def _row_weights(index: specials.Index) -> Tuple[int, ...]:
  parts = index.parts
  return tuple(sum(parts[i:]) for i in range(len(parts))) + (0,)


def _zero_poly(field: scalars.FieldDesc) -> TPoly:
  return TPoly(field)


def _one_poly(field: scalars.FieldDesc) -> TPoly:
  return TPoly.constant(RationalK.from_int(field, 1))


def _theta_power(field: scalars.FieldDesc, k: int) -> RationalK:
  return RationalK.of(scalars.PolyTheta.monomial(field, 1, k))


def _bidiagonal(field: scalars.FieldDesc, weights: Sequence[int],
                subdiagonal: Sequence[TPoly], linear: TPoly) -> PolyMatrix:
  size = len(weights)
  rows = []
  for i in range(size):
    row = [_zero_poly(field)] * size
    row[i] = linear**weights[i] if i < size - 1 else _one_poly(field)
    if i > 0:
      row[i - 1] = subdiagonal[i - 1] * linear**weights[i - 1]
    rows.append(tuple(row))
  return tuple(rows)


def _constant_series(field: scalars.FieldDesc, value: LaurentL,
                     t_prec: int, floor: int) -> TSeries:
  return tate.with_floor(tate.constant(field, value, t_prec), floor)


def build_system(index: specials.Index, point: specials.TPoint, T: int,
                 N: int) -> PeriodSystem:
  """Builds Φ, Φ^(1) and Ψ to t-degree T and θ-precision N."""
  if index.dep < 1:
    raise IndexSetError("a period system needs an index of depth >= 1")
  point.check_domain(index)
  field = point.field
  q = field.q
  d = index.dep
  floor = laurent.theta_floor(field, N)
  weights = _row_weights(index)
  guard = sum(max(0, u.norm_top() or 0) for u in point.entries)
  deep_n = N + math.ceil(guard / (q - 1))
  deep_floor = laurent.theta_floor(field, deep_n)
  logging.info("Building the period system of %s at u=%s: T=%d, N=%d", index,
               point, T, N)

  omega = tate.omega_build(field, T, deep_n)
  omega_powers = {}
  lseries = {}
  zero = _constant_series(field, laurent.zero(field), T, floor)
  psi = [[zero] * (d + 1) for _ in range(d + 1)]
  for j in range(1, d + 2):
    w = weights[j - 1]
    if w not in omega_powers:
      omega_powers[w] = tate.power(omega, w, deep_floor)
    psi[j - 1][j - 1] = tate.with_floor(omega_powers[w], floor)
    for i in range(j + 1, d + 2):
      with reraised_exception.computing(lambda i=i, j=j: f"Ψ_({i},{j})"):
        l_ij = specials.lseries_build(
            index.slice(j, i), point.slice(j, i), T, deep_n)
        lseries[i, j] = l_ij
        psi[i - 1][j - 1] = tate.with_floor(
            tate.mul(omega_powers[w], l_ij, deep_floor), floor)

  theta_q = TPoly.linear(_theta_power(field, q))
  phi_twisted = _bidiagonal(field, weights, point.entries, theta_q)
  roots = [u.qth_root() for u in point.entries]
  phi = None
  if all(r is not None for r in roots):
    phi = _bidiagonal(field, weights, roots, TPoly.linear(_theta_power(field, 1)))
  else:
    logging.info("u has no exact q-th root; storing only Φ^(1)")

  return PeriodSystem(
      index=index,
      point=point,
      phi=phi,
      phi_twisted=phi_twisted,
      psi=tuple(tuple(row) for row in psi),
      omega=omega,
      lseries=lseries,
      t_prec=T,
      N=N,
      rows=tuple(range(1, d + 2)),
      weights=weights)


def carlitz_system(field: scalars.FieldDesc, T: int, N: int) -> PeriodSystem:
  """The 1x1 system Φ = (t - θ), Ψ = (Ω) of the Carlitz motive."""
  omega = tate.omega_build(field, T, N)
  linear = TPoly.linear(_theta_power(field, 1))
  return PeriodSystem(
      index=specials.Index(()),
      point=specials.TPoint(field, ()),
      phi=((linear,),),
      phi_twisted=((TPoly.linear(_theta_power(field, field.q)),),),
      psi=((omega,),),
      omega=omega,
      lseries={},
      t_prec=T,
      N=N,
      rows=(1,),
      weights=(1,))


def phi_determinant(system: PeriodSystem) -> TPoly:
  """det Φ^(1): the product of the diagonal, (t - θ^q)^(Σ w_i)."""
  result = _one_poly(system.field)
  for k in range(system.size):
    result = result * system.phi_twisted[k][k]
  return result


@dataclasses.dataclass(frozen=True)
class EntryResidual:
  """The outcome of one matrix entry of a residual check.

  Attributes:
    entry: (i, j), numbered from 1.
    status: "zero" or "nonzero".
    window_floor: The lowest exponent that was compared.
    first_bad_t_degree: t-degree of the first nonzero coefficient.
    first_bad_exponent: Its leading s-exponent (first tensor factor for Ψ̃).
    first_bad_exponent_right: The second tensor factor's exponent (Ψ̃ only).
  """
  entry: Tuple[int, int]
  status: str
  window_floor: int
  first_bad_t_degree: Optional[int] = None
  first_bad_exponent: Optional[int] = None
  first_bad_exponent_right: Optional[int] = None


@dataclasses.dataclass(frozen=True)
class ResidualReport:
  entries: Tuple[EntryResidual, ...]

  @property
  def ok(self) -> bool:
    return all(e.status == "zero" for e in self.entries)

  def nonzero(self) -> List[EntryResidual]:
    return [e for e in self.entries if e.status != "zero"]


def _series_top(series: TSeries) -> int:
  tops = [c.v_start for c in series.coeffs if c.coeffs]
  return max(tops) if tops else 0


def verify_difference_equation(system: PeriodSystem) -> ResidualReport:
  """Residuals of Ψ = Φ^(1) Ψ^(1) on every lower triangular entry."""
  field = system.field
  q = field.q
  floor = system.floor
  size = system.size
  psi_top = max(0, max(_series_top(s) for row in system.psi for s in row))
  phi_floor = floor - q * psi_top
  phi_series = [[p.to_series(system.t_prec, phi_floor) for p in row]
                for row in system.phi_twisted]
  entries = []
  for i in range(size):
    row_tops = [p.norm_top() for p in system.phi_twisted[i] if not p.is_zero()]
    cap = floor - max([0] + row_tops)
    twisted = {(s, j): tate.twist(system.psi[s][j], 1, cap)
               for j in range(i + 1) for s in range(j, i + 1)}
    for j in range(i + 1):
      with reraised_exception.computing(
          lambda i=i, j=j: f"the residual at ({i + 1},{j + 1})"):
        rhs = tate.constant(field, laurent.zero(field), system.t_prec)
        for s in range(j, i + 1):
          if system.phi_twisted[i][s].is_zero():
            continue
          rhs = tate.add(
              rhs, tate.mul(phi_series[i][s], twisted[s, j]))
        residual = tate.with_floor(tate.sub(system.psi[i][j], rhs), floor)
      entries.append(entry_residual((i + 1, j + 1), residual, floor))
  report = ResidualReport(tuple(entries))
  logging.info("Difference equation: %d entries, %d nonzero", len(entries),
               len(report.nonzero()))
  return report


def entry_residual(entry: Tuple[int, int], residual: TSeries,
                    floor: int) -> EntryResidual:
  first = residual.first_nonzero()
  if first is None:
    return EntryResidual(entry, "zero", floor)
  return EntryResidual(entry, "nonzero", floor, first[0], first[1])


def submatrix(system: PeriodSystem, element: IdElement) -> PeriodSystem:
  """The block of rows and columns ℓ..k for element (k, ℓ) of I_(size-1)."""
  element.check(system.size - 1)
  lo, hi = element.j - 1, element.i

  def block(matrix):
    return tuple(tuple(row[lo:hi]) for row in matrix[lo:hi])

  rows = system.rows[lo:hi]
  return dataclasses.replace(
      system,
      phi=None if system.phi is None else block(system.phi),
      phi_twisted=block(system.phi_twisted),
      psi=block(system.psi),
      lseries={
          key: value
          for key, value in system.lseries.items()
          if key[0] in rows and key[1] in rows
      },
      rows=rows,
      weights=system.weights[lo:hi])


def period_matrix(system: PeriodSystem, N: int) -> Tuple[Tuple[LaurentL, ...],
                                                          ...]:
  """Ψ(θ) to θ-precision N; entries above the diagonal are zero."""
  field = system.field
  floor = laurent.theta_floor(field, N)
  rows = []
  for i in range(system.size):
    row = []
    for j in range(system.size):
      if j > i:
        row.append(laurent.zero(field, floor))
        continue
      with reraised_exception.computing(
          lambda i=i, j=j: f"Ψ_({i + 1},{j + 1})(θ) at N={N}"):
        row.append(tate.eval_at_theta(system.psi[i][j], N))
    rows.append(tuple(row))
  return tuple(rows)


def triangular_inverse(matrix: SeriesMatrix,
                       floor: Optional[int] = None) -> SeriesMatrix:
  """The inverse of a lower triangular matrix by forward substitution."""
  size = len(matrix)
  field = matrix[0][0].field
  t_prec = min(s.t_prec for row in matrix for s in row)
  zero = tate.constant(field, laurent.zero(field), t_prec)
  inverse = [[zero] * size for _ in range(size)]
  for i in range(size):
    inverse[i][i] = tate.inverse(matrix[i][i], floor)
  for j in range(size):
    for i in range(j + 1, size):
      acc = zero
      for s in range(j, i):
        acc = tate.add(acc, tate.mul(matrix[i][s], inverse[s][j], floor))
      inverse[i][j] = tate.neg(tate.mul(inverse[i][i], acc, floor))
  return tuple(tuple(row) for row in inverse)


def _chain_sum(system: PeriodSystem, i: int, s: int) -> TSeries:
  """Σ over chains s = i_0 < ... < i_r = i of (-1)^r Π L_(i_(k+1), i_k).

  The chain with r = 0 (s == i) is the empty product 1.
  """
  field = system.field
  t_prec = system.t_prec
  floor = system.floor
  if s == i:
    return _constant_series(field, laurent.one(field), t_prec, floor)
  rows = system.rows
  total = tate.constant(field, laurent.zero(field), t_prec)
  between = range(s + 1, i)
  for r in range(1, i - s + 1):
    for middle in itertools.combinations(between, r - 1):
      chain = (s,) + middle + (i,)
      product = None
      for lower, upper in zip(chain, chain[1:]):
        factor = system.lseries[rows[upper], rows[lower]]
        product = factor if product is None else tate.mul(product, factor)
      total = tate.add(total, product if r % 2 == 0 else tate.neg(product))
  return total


@dataclasses.dataclass
class _TensorWindow:
  """Σ c t^k x^e1 y^e2 on e1 in [floor1, top1], e2 in [floor2, top2]."""
  field: scalars.FieldDesc
  t_prec: int
  top1: int
  floor1: int
  top2: int
  floor2: int

  def __post_init__(self):
    self.data = np.zeros((self.t_prec + 1, self.top1 - self.floor1 + 1,
                          self.top2 - self.floor2 + 1), dtype=np.int64)

  def add_product(self, left: TSeries, right: TSeries):
    """Adds left ⊗ right, both series in the shared variable t."""
    field = self.field
    for a, x in enumerate(left.coeffs):
      if not x.coeffs or x.v_start < self.floor1:
        continue
      dense_x = x.dense(max(self.top1, x.v_start), self.floor1)
      dense_x = dense_x[len(dense_x) - self.data.shape[1]:]
      for b, y in enumerate(right.coeffs[:self.t_prec - a + 1]):
        if not y.coeffs or y.v_start < self.floor2:
          continue
        dense_y = y.dense(max(self.top2, y.v_start), self.floor2)
        dense_y = dense_y[len(dense_y) - self.data.shape[2]:]
        for k, c in enumerate(dense_x):
          if c:
            self.data[a + b, k] = field.vadd(self.data[a + b, k],
                                             field.vscale(dense_y, int(c)))


def _tops_and_floors(terms: Sequence[Tuple[TSeries, TSeries]]):
  top1 = top2 = None
  floor1 = floor2 = None
  for left, right in terms:
    for series, side in ((left, 1), (right, 2)):
      for c in series.coeffs:
        if c.prec is not None:
          if side == 1:
            floor1 = c.prec if floor1 is None else max(floor1, c.prec)
          else:
            floor2 = c.prec if floor2 is None else max(floor2, c.prec)
        if c.coeffs:
          if side == 1:
            top1 = c.v_start if top1 is None else max(top1, c.v_start)
          else:
            top2 = c.v_start if top2 is None else max(top2, c.v_start)
  return top1, floor1, top2, floor2


def psi_tilde_check(system: PeriodSystem) -> ResidualReport:
  """Compares Ψ̃ = Ψ_1^(-1) Ψ_2 with its closed form in a tensor model.

  Ψ_1 = Ψ ⊗ 1 and Ψ_2 = 1 ⊗ Ψ; x and y are the s-variables of the two factors
  and t is shared. The closed form of entry (i, j) is

    Σ_(j <= s <= i) (Ω^(-w_i) X_is) ⊗ Ψ_sj,

  where X_is is the alternating sum over chains from s to i of products of
  L-series. Ψ_1^(-1) itself comes from forward substitution.

  This combined form equals the double sum over pairs of chains, one in each
  tensor factor, that the entries of Ψ_1^(-1) Ψ_2 expand to: multiplying out
  each X_is ⊗ Ψ_sj and collecting by s gives back that double sum term by
  term, so the two are compared as one.

  Raises:
    laurent.WindowUnderflowError: If an entry has nothing left to compare.
  """
  if system.size > 3:
    raise IndexSetError(
        f"the Ψ̃ check runs on systems of depth <= 2, got {system.size - 1}")
  field = system.field
  inverse = triangular_inverse(system.psi)
  omega_inverse = tate.inverse(system.omega)
  entries = []
  for i in range(system.size):
    scale = tate.power(omega_inverse, system.weights[i])
    for j in range(i + 1):
      closed = [(tate.mul(scale, _chain_sum(system, i, s)), system.psi[s][j])
                for s in range(j, i + 1)]
      product = [(inverse[i][s], system.psi[s][j]) for s in range(j, i + 1)]
      top1, floor1, top2, floor2 = _tops_and_floors(closed + product)
      if (top1 is None or top2 is None or floor1 is None or floor2 is None or
          top1 < floor1 or top2 < floor2):
        raise laurent.WindowUnderflowError(
            f"no coefficient of Ψ̃_({i + 1},{j + 1}) is known on both sides")
      windows = []
      for terms in (closed, product):
        window = _TensorWindow(field, system.t_prec, top1, floor1, top2, floor2)
        for left, right in terms:
          window.add_product(left, right)
        windows.append(window.data)
      bad = np.argwhere(windows[0] != windows[1])
      if bad.size:
        k, e1, e2 = (int(v) for v in bad[0])
        entries.append(
            EntryResidual((i + 1, j + 1), "nonzero", floor1, k, top1 - e1,
                          top2 - e2))
      else:
        entries.append(EntryResidual((i + 1, j + 1), "zero", floor1))
  return ResidualReport(tuple(entries))


def corrupt(system: PeriodSystem, entry: Tuple[int, int], t_degree: int,
            exponent: int) -> PeriodSystem:
  """A copy of `system` with the s^exponent t^t_degree coefficient of Ψ_entry
  changed by one."""
  i, j = entry
  if not 1 <= j <= i <= system.size:
    raise ValueError(f"{entry} is not a lower triangular entry of Ψ")
  psi = [list(row) for row in system.psi]
  with reraised_exception.computing(lambda: f"corrupting Ψ_{entry}"):
    psi[i - 1][j - 1] = tate.bump(psi[i - 1][j - 1], t_degree, exponent)
  return dataclasses.replace(system, psi=tuple(tuple(row) for row in psi))
