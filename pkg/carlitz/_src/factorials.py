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

"""The polynomials D_i, ℓ_i and the Carlitz factorial Γ_n in F_q[θ]."""

import functools
from typing import List

from carlitz import scalars

PolyTheta = scalars.PolyTheta


def _theta_power_minus(field: scalars.FieldDesc, a: int,
                       b: int) -> PolyTheta:
  """θ^a - θ^b."""
  return (PolyTheta.monomial(field, 1, a) -
          PolyTheta.monomial(field, 1, b))


@functools.lru_cache(maxsize=None)
def carlitz_d(field: scalars.FieldDesc, i: int) -> PolyTheta:
  """D_0 = 1, D_i = Π_{j<i} (θ^(q^i) - θ^(q^j))."""
  q = field.q
  result = PolyTheta.constant(field, 1)
  for j in range(i):
    result = result * _theta_power_minus(field, q**i, q**j)
  return result


@functools.lru_cache(maxsize=None)
def ell(field: scalars.FieldDesc, i: int) -> PolyTheta:
  """ℓ_0 = 1, ℓ_i = Π_{j=1}^{i} (θ - θ^(q^j))."""
  if i == 0:
    return PolyTheta.constant(field, 1)
  return ell(field, i - 1) * _theta_power_minus(field, 1, field.q**i)


def base_q_digits(q: int, n: int) -> List[int]:
  digits = []
  while n:
    n, r = divmod(n, q)
    digits.append(r)
  return digits


@functools.lru_cache(maxsize=None)
def carlitz_factorial(field: scalars.FieldDesc, n: int) -> PolyTheta:
  """Γ_n for n >= 1: Γ_(m+1) = Π_i D_i^(m_i) over the base-q digits of m."""
  if n < 1:
    raise ValueError(f"Γ_n needs n >= 1, got {n}")
  result = PolyTheta.constant(field, 1)
  for i, digit in enumerate(base_q_digits(field.q, n - 1)):
    if digit:
      result = result * carlitz_d(field, i)**digit
  return result
