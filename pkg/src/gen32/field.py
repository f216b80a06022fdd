"""Exact arithmetic in small finite fields GF(p^m).

An element of GF(p^m) is a polynomial of degree < m over GF(p), stored as
a coefficient tuple with the low-degree coefficient first, reduced modulo
a fixed monic irreducible modulus.  The modulus is canonical: the
lexicographically smallest monic irreducible polynomial of degree m,
comparing coefficient sequences low degree first.  Prime fields (m = 1)
carry no modulus and reduce to arithmetic mod p.

Every element has an integer code ``sum(coeffs[i] * p**i)``; codes run
through 0 .. p^m - 1 and are the serialization form used everywhere in
this package (vectors, matrices, data files).  The canonical primitive
element is the one of smallest code >= 2 generating the multiplicative
group (GF(2) degenerately uses its identity, code 1).

Fields here stay small (p^m <= 2^31) and all algorithms are the direct
deterministic ones; there is no randomized factoring or primality
testing anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .errors import PreconditionError

ORDER_LIMIT = 2**31


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test for small n."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Sorted distinct prime divisors of n >= 1, by trial division."""
    if n < 1:
        raise PreconditionError(f"prime_factors expects n >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Write q as p^m with p prime, or raise if q is not a prime power."""
    if q < 2:
        raise PreconditionError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise PreconditionError(f"{q} is not a prime power")
    p = ps[0]
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    if q != 1:
        raise PreconditionError("internal factoring error")
    return p, m


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient lists, low degree first

def _ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo a monic polynomial mod."""
    r = list(a)
    dm = len(mod) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - dm
            for i in range(dm + 1):
                r[shift + i] = (r[shift + i] - lead * mod[i]) % p
        r.pop()
    return _ptrim(r)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] = ai
    for i, bi in enumerate(b):
        out[i] = (out[i] - bi) % p
    return _ptrim(out)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Monic gcd over GF(p)."""
    a, b = list(a), list(b)
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        monic_b = [(c * inv_lead) % p for c in b]
        a, b = monic_b, _pmod(a, monic_b, p)
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = [(c * inv_lead) % p for c in a]
    return a


def _ppowmod_x(e: int, mod: Sequence[int], p: int) -> list[int]:
    """x^e reduced modulo the monic polynomial mod, by binary powering."""
    result = [1]
    base = _pmod([0, 1], mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _poly_is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p).

    Degree <= 3 uses the root test (complete there); higher degrees use
    the standard criterion x^(p^m) = x mod f together with
    gcd(x^(p^(m/l)) - x, f) = 1 for every prime l dividing m.
    """
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        return False
    if m == 1:
        return True
    if m <= 3:
        for a in range(p):
            acc = 0
            for c in reversed(coeffs):
                acc = (acc * a + c) % p
            if acc == 0:
                return False
        return True
    xq = _ppowmod_x(p**m, coeffs, p)
    if _ptrim(list(xq)) != [0, 1]:
        return False
    for ell in prime_factors(m):
        g = _pgcd(_psub(_ppowmod_x(p ** (m // ell), coeffs, p), [0, 1], p), coeffs, p)
        if len(g) - 1 != 0:
            return False
    return True


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(p^m) with its canonical modulus.

    ``modulus`` is the full coefficient tuple (length m + 1, low degree
    first, leading coefficient 1); it is None exactly when m = 1.
    """

    p: int
    m: int
    modulus: tuple[int, ...] | None

    @property
    def q(self) -> int:
        return self.p**self.m

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.m)

    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def element(self, code: int) -> FieldElement:
        """The element with the given integer code (base-p digits)."""
        if not 0 <= code < self.q:
            raise PreconditionError(f"element code {code} out of range for GF({self.q})")
        digits = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            digits.append(r)
        return FieldElement(self, tuple(digits))

    def elements(self) -> Iterator[FieldElement]:
        """All field elements in ascending code order."""
        for code in range(self.q):
            yield self.element(code)

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field_make(p: int, m: int = 1) -> FieldSpec:
    """Construct GF(p^m).

    The modulus for m >= 2 is found by scanning monic degree-m
    polynomials in lexicographic order of their coefficient sequences
    (low degree first) and taking the first irreducible one.
    """
    if not is_prime(p):
        raise PreconditionError(f"field characteristic must be prime, got {p}")
    if m < 1:
        raise PreconditionError(f"field degree must be >= 1, got {m}")
    if p**m > ORDER_LIMIT:
        raise PreconditionError(f"field order {p}^{m} exceeds limit {ORDER_LIMIT}")
    if m == 1:
        return FieldSpec(p, 1, None)
    for low in product(range(p), repeat=m):
        coeffs = low + (1,)
        if _poly_is_irreducible(coeffs, p):
            return FieldSpec(p, m, coeffs)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class FieldElement:
    """An element of a FieldSpec; immutable and hashable."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    @property
    def code(self) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * self.field.p + c
        return acc

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: FieldElement) -> None:
        if self.field != other.field:
            raise PreconditionError("mixed-field arithmetic")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        f = self.field
        if f.m == 1:
            return FieldElement(f, ((self.coeffs[0] * other.coeffs[0]) % f.p,))
        prod = _pmod(_pmul(self.coeffs, other.coeffs, f.p), f.modulus, f.p)
        prod = prod + [0] * (f.m - len(prod))
        return FieldElement(f, tuple(prod))

    def inv(self) -> FieldElement:
        """Multiplicative inverse; errors on zero."""
        if self.is_zero():
            raise PreconditionError("zero has no multiplicative inverse")
        return self ** (self.field.q - 2)

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __lt__(self, other: FieldElement) -> bool:
        self._check(other)
        return self.code < other.code

    def __repr__(self) -> str:
        return f"{self.code}@GF({self.field.q})"


def multiplicative_order(a: FieldElement) -> int:
    """Order of a in the multiplicative group; errors on zero."""
    if a.is_zero():
        raise PreconditionError("zero has no multiplicative order")
    n = a.field.q - 1
    order = n
    for ell in prime_factors(n) if n > 1 else []:
        while order % ell == 0 and (a ** (order // ell)).code == a.field.one().code:
            order //= ell
    return order


def primitive_element(field: FieldSpec) -> FieldElement:
    """The canonical generator of the multiplicative group.

    Scans element codes in ascending order starting from 2 (code 1 is the
    identity, never a generator unless q = 2) and returns the first
    element of multiplicative order q - 1.
    """
    q = field.q
    if q == 2:
        return field.one()
    n = q - 1
    checks = [n // ell for ell in prime_factors(n)]
    one_code = field.one().code
    for code in range(2, q):
        a = field.element(code)
        if all((a**e).code != one_code for e in checks):
            return a
    raise RuntimeError("no primitive element found")  # unreachable
