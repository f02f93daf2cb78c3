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

"""Finite fields F_q and the polynomial ring F_q[θ].

An element of F_q, q = p^m, is an integer in [0, q) whose base-p digits are its
coordinates in the power basis 1, g, ..., g^(m-1), where g is a root of the
field's modulus. Polynomials in θ store their coefficients lowest degree first.

  gf4 = scalars.field_create(2, 2)   # modulus g^2 + g + 1
  gf4.mul(2, 2)                      # g * g = g + 1, encoded as 3

Multiplication uses log/antilog tables for q <= 2^12 and digit arithmetic
above. Coefficient arrays are handled by the numpy kernels `vadd`, `vneg`,
`vscale` and `convolve`.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import random
from typing import Iterator, List, Optional, Sequence, Tuple

from absl import logging
import numpy as np

MAX_Q = 2**16
LOG_TABLE_MAX_Q = 2**12


class FieldError(ValueError):
  """Raised for invalid field descriptions or invalid polynomial operations."""


class FieldMismatchError(FieldError):
  """Raised when the operands of an operation live in different fields."""


def is_prime(n: int) -> bool:
  if n < 2:
    return False
  if n % 2 == 0:
    return n == 2
  k = 3
  while k * k <= n:
    if n % k == 0:
      return False
    k += 2
  return True


def prime_power(q: int) -> Tuple[int, int]:
  """Returns `(p, m)` with `q == p**m`.

  Raises:
    FieldError: If `q` is not a prime power.
  """
  if q < 2:
    raise FieldError(f"q={q} is not a prime power")
  p = next(k for k in range(2, q + 1) if q % k == 0)
  m, rest = 0, q
  while rest % p == 0:
    rest //= p
    m += 1
  if rest != 1:
    raise FieldError(f"q={q} is not a prime power")
  return p, m


def _fp_trim(coeffs: List[int]) -> List[int]:
  while coeffs and coeffs[-1] == 0:
    coeffs.pop()
  return coeffs


def _fp_rem(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
  """Remainder of `a` by `b` over F_p (coefficients lowest degree first)."""
  rem = _fp_trim([c % p for c in a])
  b = _fp_trim([c % p for c in b])
  inv_lead = pow(b[-1], p - 2, p)
  while len(rem) >= len(b):
    shift = len(rem) - len(b)
    factor = rem[-1] * inv_lead % p
    for i, c in enumerate(b):
      rem[shift + i] = (rem[shift + i] - factor * c) % p
    _fp_trim(rem)
  return rem


def _monic_tails(base: int, degree: int) -> Iterator[Tuple[int, ...]]:
  """Monic coefficient tuples of `degree`, lowest first, in lexicographic order.

  The order is lexicographic on (c_{d-1}, ..., c_0), so for base 2 and degree 2
  the sequence is x^2, x^2 + 1, x^2 + x, x^2 + x + 1.
  """
  for tail in itertools.product(range(base), repeat=degree):
    yield tuple(reversed(tail)) + (1,)


def is_irreducible(p: int, coeffs: Sequence[int]) -> bool:
  """Trial division by every monic polynomial of degree <= deg/2 over F_p."""
  coeffs = _fp_trim([c % p for c in coeffs])
  degree = len(coeffs) - 1
  if degree < 1:
    return False
  if degree == 1:
    return True
  for d in range(1, degree // 2 + 1):
    for divisor in _monic_tails(p, d):
      if not _fp_rem(coeffs, divisor, p):
        return False
  return True


def default_modulus(p: int, m: int) -> Tuple[int, ...]:
  """The first monic irreducible of degree `m` in lexicographic order."""
  if m == 1:
    return (0, 1)
  for candidate in _monic_tails(p, m):
    if is_irreducible(p, candidate):
      return candidate
  raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")


@dataclasses.dataclass(frozen=True)
class _Tables:
  exp: Tuple[int, ...]
  log: Tuple[int, ...]
  exp_np: np.ndarray
  log_np: np.ndarray


@dataclasses.dataclass(frozen=True)
class FieldDesc:
  """Description of the finite field F_q, q = p^m.

  Attributes:
    p: The characteristic.
    m: The degree over F_p.
    modulus: Monic irreducible polynomial of degree m over F_p, lowest degree
      first. For m == 1 it is the placeholder (0, 1) and plays no role.
  """
  p: int
  m: int
  modulus: Tuple[int, ...]
  _tables: Optional[_Tables] = dataclasses.field(
      default=None, init=False, repr=False, compare=False)

  def __post_init__(self):
    if not is_prime(self.p):
      raise FieldError(f"p={self.p} is not prime")
    if self.m < 1:
      raise FieldError(f"m={self.m} must be at least 1")
    if self.p**self.m > MAX_Q:
      raise FieldError(
          f"q={self.p}^{self.m} exceeds the supported maximum {MAX_Q}")
    modulus = tuple(int(c) % self.p for c in self.modulus)
    object.__setattr__(self, "modulus", modulus)
    if self.m > 1:
      if len(modulus) != self.m + 1 or modulus[-1] != 1:
        raise FieldError(
            f"modulus {modulus} is not a monic polynomial of degree {self.m}")
      if not is_irreducible(self.p, modulus):
        raise FieldError(f"modulus {modulus} is reducible over F_{self.p}")
      if self.q <= LOG_TABLE_MAX_Q:
        object.__setattr__(self, "_tables", self._build_tables())

  @property
  def q(self) -> int:
    return self.p**self.m

  @property
  def minus_one(self) -> int:
    return self.p - 1

  @property
  def modulus_root(self) -> int:
    """The root g of the modulus, encoded as `p`."""
    if self.m == 1:
      raise FieldError("GF(p) has no modulus root")
    return self.p

  def __str__(self):
    return f"GF({self.q})"

  # Digit helpers.

  def _digits(self, x: int) -> List[int]:
    out = []
    for _ in range(self.m):
      x, r = divmod(x, self.p)
      out.append(r)
    return out

  def _undigits(self, digits: Sequence[int]) -> int:
    value = 0
    for d in reversed(digits):
      value = value * self.p + d
    return value

  def _slow_mul(self, x: int, y: int) -> int:
    p, m = self.p, self.m
    xd, yd = self._digits(x), self._digits(y)
    prod = [0] * (2 * m - 1)
    for i, a in enumerate(xd):
      if a:
        for j, b in enumerate(yd):
          if b:
            prod[i + j] = (prod[i + j] + a * b) % p
    for k in range(2 * m - 2, m - 1, -1):
      c = prod[k]
      if c:
        for i in range(m):
          prod[k - m + i] = (prod[k - m + i] - c * self.modulus[i]) % p
    return self._undigits(prod[:m])

  def _slow_pow(self, x: int, k: int) -> int:
    result = 1
    while k:
      if k & 1:
        result = self._slow_mul(result, x)
      x = self._slow_mul(x, x)
      k >>= 1
    return result

  def _primitive_element(self) -> int:
    order = self.q - 1
    factors = [r for r in range(2, order + 1) if order % r == 0 and is_prime(r)]
    for candidate in range(2, self.q):
      if all(self._slow_pow(candidate, order // r) != 1 for r in factors):
        return candidate
    raise FieldError(f"no primitive element found in {self}")

  def _build_tables(self) -> _Tables:
    order = self.q - 1
    generator = self._primitive_element()
    exp = [0] * (2 * order)
    log = [0] * self.q
    x = 1
    for i in range(order):
      exp[i] = exp[i + order] = x
      log[x] = i
      x = self._slow_mul(x, generator)
    logging.debug("Built log tables for %s with primitive element %d", self,
                  generator)
    return _Tables(
        exp=tuple(exp),
        log=tuple(log),
        exp_np=np.array(exp, dtype=np.int64),
        log_np=np.array(log, dtype=np.int64))

  # Scalar arithmetic.

  def add(self, x: int, y: int) -> int:
    if self.m == 1:
      return (x + y) % self.p
    if self.p == 2:
      return x ^ y
    return self._undigits([(a + b) % self.p
                           for a, b in zip(self._digits(x), self._digits(y))])

  def neg(self, x: int) -> int:
    if self.m == 1:
      return -x % self.p
    if self.p == 2:
      return x
    return self._undigits([-a % self.p for a in self._digits(x)])

  def sub(self, x: int, y: int) -> int:
    return self.add(x, self.neg(y))

  def mul(self, x: int, y: int) -> int:
    if x == 0 or y == 0:
      return 0
    if self.m == 1:
      return x * y % self.p
    if self._tables is not None:
      return self._tables.exp[self._tables.log[x] + self._tables.log[y]]
    return self._slow_mul(x, y)

  def inv(self, x: int) -> int:
    if x == 0:
      raise ZeroDivisionError(f"0 has no inverse in {self}")
    if self.m == 1:
      return pow(x, self.p - 2, self.p)
    if self._tables is not None:
      return self._tables.exp[(self.q - 1 - self._tables.log[x]) % (self.q - 1)]
    return self._slow_pow(x, self.q - 2)

  def div(self, x: int, y: int) -> int:
    return self.mul(x, self.inv(y))

  def pow(self, x: int, k: int) -> int:
    """`x**k`; negative exponents require a nonzero base."""
    if k < 0:
      x, k = self.inv(x), -k
    if k == 0:
      return 1
    if x == 0:
      return 0
    if self.m == 1:
      return pow(x, k, self.p)
    k %= self.q - 1
    if self._tables is not None:
      return self._tables.exp[self._tables.log[x] * k % (self.q - 1)]
    return self._slow_pow(x, k)

  def frobenius(self, x: int, n: int = 1) -> int:
    """`x**(q**n)`, with the exponent reduced modulo q - 1."""
    if n < 0:
      raise FieldError(f"Frobenius power {n} must be non-negative")
    return self.pow(x, pow(self.q, n, self.q - 1) + self.q - 1)

  def from_int(self, n: int) -> int:
    """The image of the integer `n` in the prime field."""
    return n % self.p

  def elements(self) -> range:
    return range(self.q)

  def random_element(self, rng: random.Random, nonzero: bool = False) -> int:
    return rng.randrange(1 if nonzero else 0, self.q)

  # Vectorized kernels on int64 coefficient arrays.

  def vdigits(self, a: np.ndarray) -> np.ndarray:
    weights = self.p**np.arange(self.m, dtype=np.int64)
    return (np.asarray(a, dtype=np.int64)[:, None] // weights[None, :]) % self.p

  def vundigits(self, digits: np.ndarray) -> np.ndarray:
    weights = self.p**np.arange(self.m, dtype=np.int64)
    return digits @ weights

  def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if self.m == 1:
      return (a + b) % self.p
    if self.p == 2:
      return a ^ b
    return self.vundigits((self.vdigits(a) + self.vdigits(b)) % self.p)

  def vsum(self, block: np.ndarray) -> np.ndarray:
    """The sum of the rows of a 2-D block."""
    block = np.asarray(block, dtype=np.int64)
    if self.m == 1:
      return block.sum(axis=0) % self.p
    if self.p == 2:
      return np.bitwise_xor.reduce(block, axis=0)
    digits = self.vdigits(block.ravel()).reshape(block.shape + (self.m,))
    return self.vundigits(digits.sum(axis=0) % self.p)

  def vneg(self, a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    if self.m == 1:
      return -a % self.p
    if self.p == 2:
      return a.copy()
    return self.vundigits(-self.vdigits(a) % self.p)

  def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return self.vadd(a, self.vneg(b))

  def vscale(self, a: np.ndarray, c: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    if c == 0:
      return np.zeros_like(a)
    if self.m == 1:
      return a * c % self.p
    if self._tables is not None:
      out = np.zeros_like(a)
      nonzero = a != 0
      out[nonzero] = self._tables.exp_np[self._tables.log_np[a[nonzero]] +
                                         self._tables.log[c]]
      return out
    return np.array([self.mul(int(x), c) for x in a], dtype=np.int64)

  def convolve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Coefficients of the product of two coefficient arrays."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.size == 0 or b.size == 0:
      return np.zeros(0, dtype=np.int64)
    if self.m == 1:
      return np.convolve(a, b) % self.p
    # Kronecker packing: each element becomes a block of 2m - 1 digit slots,
    # wide enough that digit products never spill into the next block.
    m, p = self.m, self.p
    width = 2 * m - 1
    packed_a = np.zeros((a.size, width), dtype=np.int64)
    packed_a[:, :m] = self.vdigits(a)
    packed_b = np.zeros((b.size, width), dtype=np.int64)
    packed_b[:, :m] = self.vdigits(b)
    n_out = a.size + b.size - 1
    product = np.convolve(packed_a.ravel(), packed_b.ravel())[:n_out * width]
    blocks = product.reshape(n_out, width) % p
    modulus = np.array(self.modulus[:m], dtype=np.int64)
    for k in range(width - 1, m - 1, -1):
      top = blocks[:, k].copy()
      blocks[:, k - m:k] = (blocks[:, k - m:k] -
                            top[:, None] * modulus[None, :]) % p
    return self.vundigits(blocks[:, :m])


@functools.lru_cache(maxsize=None)
def field_create(p: int,
                 m: int = 1,
                 modulus: Optional[Tuple[int, ...]] = None) -> FieldDesc:
  """Returns the descriptor of GF(p^m).

  Args:
    p: The characteristic; must be prime.
    m: The degree over F_p.
    modulus: Optional monic irreducible of degree m, lowest degree first. When
      omitted, the first irreducible in lexicographic order is used.

  Raises:
    FieldError: For a non-prime `p`, an unusable modulus or q > 2^16.
  """
  if not is_prime(p):
    raise FieldError(f"p={p} is not prime")
  if m < 1:
    raise FieldError(f"m={m} must be at least 1")
  if p**m > MAX_Q:
    raise FieldError(f"q={p}^{m} exceeds the supported maximum {MAX_Q}")
  if modulus is None or m == 1:
    modulus = default_modulus(p, m)
  field = FieldDesc(p, m, tuple(modulus))
  logging.info("Created %s with modulus %s", field, field.modulus)
  return field


def field_for_q(q: int, modulus: Optional[Tuple[int, ...]] = None) -> FieldDesc:
  p, m = prime_power(q)
  return field_create(p, m, modulus)


def fq_arith(field: FieldDesc, x: int, y: Optional[int], op: str) -> int:
  """Dispatches one of `add`, `sub`, `mul`, `div`, `inv`, `neg`, `pow`."""
  if op == "inv":
    return field.inv(x)
  if op == "neg":
    return field.neg(x)
  if op in ("add", "sub", "mul", "div", "pow"):
    return getattr(field, op)(x, y)
  raise FieldError(f"unknown field operation {op!r}")


def _check_same_field(a: "PolyTheta", b: "PolyTheta"):
  if a.field != b.field:
    raise FieldMismatchError(f"operands live in {a.field} and {b.field}")


@dataclasses.dataclass(frozen=True)
class PolyTheta:
  """A polynomial in θ over F_q.

  `coeffs[i]` is the coefficient of θ^i. The zero polynomial has no
  coefficients and every other polynomial ends in a nonzero coefficient; use
  `PolyTheta.of` to normalize arbitrary coefficient lists.
  """
  field: FieldDesc
  coeffs: Tuple[int, ...] = ()

  def __post_init__(self):
    if self.coeffs and self.coeffs[-1] == 0:
      raise FieldError(
          f"coefficients {self.coeffs} end in zero; use PolyTheta.of()")

  @classmethod
  def of(cls, field: FieldDesc, coeffs: Sequence[int]) -> "PolyTheta":
    coeffs = [int(c) for c in coeffs]
    return cls(field, tuple(_fp_trim(coeffs)))

  @classmethod
  def constant(cls, field: FieldDesc, c: int) -> "PolyTheta":
    return cls.of(field, (c,))

  @classmethod
  def monomial(cls, field: FieldDesc, c: int, degree: int) -> "PolyTheta":
    return cls.of(field, (0,) * degree + (c,))

  @classmethod
  def theta(cls, field: FieldDesc) -> "PolyTheta":
    return cls.monomial(field, 1, 1)

  @property
  def degree(self) -> int:
    """Degree in θ; -1 for the zero polynomial."""
    return len(self.coeffs) - 1

  @property
  def leading(self) -> int:
    return self.coeffs[-1] if self.coeffs else 0

  @property
  def is_monic(self) -> bool:
    return self.leading == 1

  def is_zero(self) -> bool:
    return not self.coeffs

  def _array(self) -> np.ndarray:
    return np.array(self.coeffs, dtype=np.int64)

  def __add__(self, other: "PolyTheta") -> "PolyTheta":
    _check_same_field(self, other)
    n = max(len(self.coeffs), len(other.coeffs))
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a[:len(self.coeffs)] = self.coeffs
    b[:len(other.coeffs)] = other.coeffs
    return PolyTheta.of(self.field, self.field.vadd(a, b).tolist())

  def __neg__(self) -> "PolyTheta":
    return PolyTheta(self.field, tuple(self.field.vneg(self._array()).tolist()))

  def __sub__(self, other: "PolyTheta") -> "PolyTheta":
    return self + (-other)

  def __mul__(self, other: "PolyTheta") -> "PolyTheta":
    _check_same_field(self, other)
    if self.is_zero() or other.is_zero():
      return PolyTheta(self.field)
    product = self.field.convolve(self._array(), other._array())
    return PolyTheta.of(self.field, product.tolist())

  def __pow__(self, k: int) -> "PolyTheta":
    if k < 0:
      raise FieldError(f"negative power {k} of a polynomial")
    result = PolyTheta.constant(self.field, 1)
    base = self
    while k:
      if k & 1:
        result = result * base
      base = base * base
      k >>= 1
    return result

  def scale(self, c: int) -> "PolyTheta":
    return PolyTheta.of(self.field, self.field.vscale(self._array(), c).tolist())

  def shift(self, k: int) -> "PolyTheta":
    """Multiplies by θ^k, k >= 0."""
    if self.is_zero():
      return self
    return PolyTheta(self.field, (0,) * k + self.coeffs)

  def monic(self) -> "PolyTheta":
    if self.is_zero():
      return self
    return self.scale(self.field.inv(self.leading))

  def divmod(self, other: "PolyTheta") -> Tuple["PolyTheta", "PolyTheta"]:
    """Euclidean division: returns (quotient, remainder)."""
    _check_same_field(self, other)
    if other.is_zero():
      raise FieldError("division by the zero polynomial")
    f = self.field
    rem = list(self.coeffs)
    dq = other.degree
    inv_lead = f.inv(other.leading)
    quot = [0] * max(0, len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
      c = rem[k]
      if c == 0:
        continue
      factor = f.mul(c, inv_lead)
      quot[k - dq] = factor
      for i, b in enumerate(other.coeffs):
        if b:
          rem[k - dq + i] = f.sub(rem[k - dq + i], f.mul(factor, b))
    return PolyTheta.of(f, quot), PolyTheta.of(f, rem[:dq])

  def __floordiv__(self, other: "PolyTheta") -> "PolyTheta":
    return self.divmod(other)[0]

  def __mod__(self, other: "PolyTheta") -> "PolyTheta":
    return self.divmod(other)[1]

  def eval_frobenius_power(self, n: int) -> "PolyTheta":
    """Raises every coefficient to the power q^n."""
    return PolyTheta.of(self.field,
                        [self.field.frobenius(c, n) for c in self.coeffs])

  def compose_power(self, exponent: int) -> "PolyTheta":
    """Substitutes θ^exponent for θ."""
    if self.is_zero() or exponent == 1:
      return self
    out = [0] * (self.degree * exponent + 1)
    for i, c in enumerate(self.coeffs):
      out[i * exponent] = c
    return PolyTheta(self.field, tuple(out))

  def twist(self, n: int) -> "PolyTheta":
    """The n-fold twist a(θ)^{q^n} of the scalar a(θ), n >= 0."""
    if n < 0:
      raise FieldError(f"negative twist {n} of a polynomial in θ")
    return self.eval_frobenius_power(n).compose_power(self.field.q**n)

  def qth_root(self) -> Optional["PolyTheta"]:
    """Inverse of `twist(1)`, or None if some exponent is not divisible by q."""
    q = self.field.q
    if any(c and i % q for i, c in enumerate(self.coeffs)):
      return None
    # x -> x^q is the identity on F_q, so coefficients are kept.
    return PolyTheta.of(self.field, self.coeffs[::q])

  def __call__(self, x: int) -> int:
    """Evaluates at an element of F_q."""
    result = 0
    for c in reversed(self.coeffs):
      result = self.field.add(self.field.mul(result, x), c)
    return result

  def __str__(self):
    if self.is_zero():
      return "0"
    terms = []
    for i in range(self.degree, -1, -1):
      c = self.coeffs[i]
      if not c:
        continue
      if i == 0:
        terms.append(str(c))
      else:
        power = "θ" if i == 1 else f"θ^{i}"
        terms.append(power if c == 1 else f"{c}{power}")
    return " + ".join(terms)


def gcd(a: PolyTheta, b: PolyTheta) -> PolyTheta:
  """Monic greatest common divisor; gcd(0, 0) is 0."""
  _check_same_field(a, b)
  while not b.is_zero():
    a, b = b, a % b
  return a.monic()


def poly_arith(a: PolyTheta, b, op: str) -> PolyTheta:
  """Dispatches `add`, `sub`, `mul` or `eval_frobenius_power` (b is then n)."""
  if op == "add":
    return a + b
  if op == "sub":
    return a - b
  if op == "mul":
    return a * b
  if op == "eval_frobenius_power":
    return a.eval_frobenius_power(b)
  raise FieldError(f"unknown polynomial operation {op!r}")


def enumerate_monics(field: FieldDesc, degree: int) -> Iterator[PolyTheta]:
  """Yields the q^degree monic polynomials of `degree` in lexicographic order."""
  if degree < 0:
    raise FieldError(f"degree {degree} must be non-negative")
  for coeffs in _monic_tails(field.q, degree):
    yield PolyTheta(field, coeffs)


def random_poly(field: FieldDesc,
                rng: random.Random,
                degree: int,
                monic: bool = False) -> PolyTheta:
  coeffs = [field.random_element(rng) for _ in range(degree)]
  coeffs.append(1 if monic else field.random_element(rng, nonzero=True))
  return PolyTheta.of(field, coeffs)
