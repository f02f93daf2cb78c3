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

"""Strictly decreasing nested sums and their index bounds.

Every series in this package has the shape

  Σ_{i_1 > i_2 > ... > i_d >= 0} A_1(i_1) A_2(i_2) ... A_d(i_d),

with power sums, CMPL terms or L-series terms as the factors. The sum is
computed right to left with prefix sums, so the cost is linear in the number
of factors instead of polynomial in the number of index tuples.
"""

from typing import Callable, Optional, Sequence, TypeVar

V = TypeVar("V")


def nested_sum(levels: Sequence[Sequence[V]], add: Callable[[V, V], V],
               mul: Callable[[V, V], V], zero: V) -> V:
  """Σ over strictly decreasing index tuples of Π_k levels[k][i_k].

  Args:
    levels: levels[k][i] is the factor A_(k+1)(i). Indices missing from a
      row contribute nothing.
    add: Addition of two values.
    mul: Multiplication of two values.
    zero: The additive identity; it is never multiplied.

  Returns:
    The nested sum.
  """
  if not levels:
    raise ValueError("a nested sum needs at least one level")
  inner = list(levels[-1])
  for row in reversed(levels[:-1]):
    prefix = None
    outer = []
    for i, value in enumerate(row):
      outer.append(zero if prefix is None else mul(value, prefix))
      if i < len(inner):
        prefix = inner[i] if prefix is None else add(prefix, inner[i])
    inner = outer
  total = zero
  for value in inner:
    total = add(total, value)
  return total


def last_outer_index(deltas: Sequence[int], offsets: Sequence[int], q: int,
                     floor: int) -> Optional[int]:
  """The largest i_1 whose terms can still reach the exponent `floor`.

  Factor k at index i has leading s-exponent at most
  offsets[k] - q^i * deltas[k], with every deltas[k] >= 1. A term is largest
  when the inner indices are minimal (i_k = d - k), so i_1 is admissible as
  long as that bound stays at or above `floor`.

  Returns:
    The last admissible i_1, or None if even i_1 = d - 1 falls short.
  """
  depth = len(deltas)
  if any(delta < 1 for delta in deltas):
    raise ValueError(f"factor bounds {deltas} do not decay")
  rest = sum(offsets[k] - q**(depth - 1 - k) * deltas[k]
             for k in range(1, depth))

  def bound(i):
    return offsets[0] - q**i * deltas[0] + rest

  i = depth - 1
  if bound(i) < floor:
    return None
  while bound(i + 1) >= floor:
    i += 1
  return i
