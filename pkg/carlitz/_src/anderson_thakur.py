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

"""Anderson-Thakur polynomials from their generating function.

The polynomials H_n in F_q[θ, t] satisfy

  (1 - Σ_{i>=0} N_i / D_i(t) x^(q^i))^(-1) = Σ_{n>=0} H_n / Γ_(n+1)(t) x^n,

with N_i = Π_{j=1}^{i} (t^(q^i) - θ^(q^j)). Comparing coefficients of x^n gives

  H_n = Γ_(n+1)(t) Σ_{q^i <= n} N_i H_(n-q^i) / (D_i(t) Γ_(n-q^i+1)(t)),

which is evaluated over a common denominator and one exact division in t.

A bivariate polynomial is a tuple of `PolyTheta` indexed by t-degree, without
trailing zeros. Univariate polynomials in t with F_q coefficients are
`PolyTheta` values read in the variable t.
"""

import functools
from typing import Tuple

from absl import logging
from carlitz import scalars
from carlitz._src import factorials

PolyTheta = scalars.PolyTheta
BiPoly = Tuple[PolyTheta, ...]


def _trim(field: scalars.FieldDesc, coeffs) -> BiPoly:
  coeffs = list(coeffs)
  while coeffs and coeffs[-1].is_zero():
    coeffs.pop()
  return tuple(coeffs)


def _zero_poly(field: scalars.FieldDesc) -> PolyTheta:
  return PolyTheta.constant(field, 0)


def bi_one(field: scalars.FieldDesc) -> BiPoly:
  return (PolyTheta.constant(field, 1),)


def bi_add(field: scalars.FieldDesc, a: BiPoly, b: BiPoly) -> BiPoly:
  n = max(len(a), len(b))
  zero = _zero_poly(field)
  a = a + (zero,) * (n - len(a))
  b = b + (zero,) * (n - len(b))
  return _trim(field, (x + y for x, y in zip(a, b)))


def bi_mul(field: scalars.FieldDesc, a: BiPoly, b: BiPoly) -> BiPoly:
  if not a or not b:
    return ()
  out = [_zero_poly(field)] * (len(a) + len(b) - 1)
  for i, x in enumerate(a):
    if x.is_zero():
      continue
    for j, y in enumerate(b):
      if not y.is_zero():
        out[i + j] = out[i + j] + x * y
  return _trim(field, out)


def bi_mul_t(field: scalars.FieldDesc, a: BiPoly, poly_t: PolyTheta) -> BiPoly:
  """a * poly_t for a univariate poly_t in t with F_q coefficients."""
  if not a or poly_t.is_zero():
    return ()
  out = [_zero_poly(field)] * (len(a) + poly_t.degree)
  for i, x in enumerate(a):
    for j, c in enumerate(poly_t.coeffs):
      if c:
        out[i + j] = out[i + j] + x.scale(c)
  return _trim(field, out)


def bi_div_t(field: scalars.FieldDesc, a: BiPoly, poly_t: PolyTheta) -> BiPoly:
  """The exact quotient a / poly_t.

  Raises:
    ArithmeticError: If poly_t does not divide a.
  """
  if poly_t.is_zero():
    raise ZeroDivisionError("division by the zero polynomial in t")
  remainder = list(a)
  d = poly_t.degree
  lead_inv = field.inv(poly_t.leading)
  quotient = [_zero_poly(field)] * max(0, len(remainder) - d)
  for k in range(len(remainder) - 1, d - 1, -1):
    c = remainder[k].scale(lead_inv)
    if c.is_zero():
      continue
    quotient[k - d] = c
    for j, pc in enumerate(poly_t.coeffs):
      if pc:
        remainder[k - d + j] = remainder[k - d + j] - c.scale(pc)
  if any(not r.is_zero() for r in remainder):
    raise ArithmeticError(f"{poly_t} does not divide the numerator in t")
  return _trim(field, quotient)


def _numerator_factor(field: scalars.FieldDesc, i: int) -> BiPoly:
  """N_i = Π_{j=1}^{i} (t^(q^i) - θ^(q^j))."""
  q = field.q
  result = bi_one(field)
  for j in range(1, i + 1):
    factor = [_zero_poly(field)] * (q**i + 1)
    factor[0] = PolyTheta.monomial(field, field.minus_one, q**j)
    factor[q**i] = PolyTheta.constant(field, 1)
    result = bi_mul(field, result, tuple(factor))
  return result


def _lcm(a: PolyTheta, b: PolyTheta) -> PolyTheta:
  return (a * b // scalars.gcd(a, b)).monic()


@functools.lru_cache(maxsize=None)
def anderson_thakur(field: scalars.FieldDesc, n: int) -> BiPoly:
  """H_n as a bivariate polynomial; H_0 = 1."""
  if n < 0:
    raise ValueError(f"H_n needs n >= 0, got {n}")
  if n == 0:
    return bi_one(field)
  q = field.q
  terms = []
  i = 0
  while q**i <= n:
    m = n - q**i
    denominator = (factorials.carlitz_d(field, i) *
                   factorials.carlitz_factorial(field, m + 1))
    terms.append((bi_mul(field, _numerator_factor(field, i),
                         anderson_thakur(field, m)), denominator))
    i += 1
  common = terms[0][1].monic()
  for _, denominator in terms[1:]:
    common = _lcm(common, denominator)
  gamma = factorials.carlitz_factorial(field, n + 1)
  numerator = ()
  for product, denominator in terms:
    numerator = bi_add(field, numerator,
                       bi_mul_t(field, product, gamma * (common // denominator)))
  result = bi_div_t(field, numerator, common)
  logging.debug("H_%d over %s has t-degree %d", n, field, len(result) - 1)
  return result
