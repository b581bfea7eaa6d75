"""Exact arithmetic in cyclotomic integer rings Z[zeta_N].

Values are polynomials in zeta_N with rational coefficients, reduced modulo
the N-th cyclotomic polynomial (power basis 1, zeta, ..., zeta^(phi(N)-1)).
The representation is canonical at a fixed conductor, so equality and the
zero test are decided by comparing coefficient vectors; operands at different
conductors are embedded into the lcm conductor first.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Cyclotomic",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "add",
    "mul",
    "neg",
    "conj",
    "is_zero",
    "approx_complex",
    "cyc_to_json",
    "cyc_from_json",
]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials (low-to-high coefficients),
    # denominator monic.  Remainder must come out zero.
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, dc in enumerate(den):
            num[i - dd + j] -= c * dc
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low-to-high degree, computed by exact division
    of x^n - 1 by Phi_d over the proper divisors d of n."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d < n:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # rows[e - phi(n)] = coefficients of x^e mod Phi_n, for phi(n) <= e < n.
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    base = [-c for c in poly[:phi]]
    rows = [tuple(base)]
    cur = list(base)
    for _ in range(phi + 1, n):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c + top * b for c, b in zip(cur, base)]
        rows.append(tuple(cur))
    return tuple(rows)


_ZERO = Fraction(0)


def _normalize(n: int, sparse: dict[int, Fraction]) -> tuple[Fraction, ...]:
    # sparse maps exponents in [0, n) to coefficients; reduce mod Phi_n.
    phi = euler_phi(n)
    coeffs = [_ZERO] * phi
    rows = None
    for e, c in sparse.items():
        if not c:
            continue
        if e < phi:
            coeffs[e] += c
        else:
            if rows is None:
                rows = _reduction_rows(n)
            for i, r in enumerate(rows[e - phi]):
                if r:
                    coeffs[i] += c * r
    return tuple(coeffs)


class Cyclotomic:
    """An element of Q(zeta_N) in canonical reduced form.

    Immutable; all operations are pure and return new values.  Equality works
    across conductors by embedding into the lcm conductor.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        vec = tuple(Fraction(c) for c in coeffs)
        if len(vec) != euler_phi(conductor):
            raise ValueError(
                f"expected {euler_phi(conductor)} coefficients for conductor "
                f"{conductor}, got {len(vec)}"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", vec)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def _make(cls, conductor: int, vec: tuple[Fraction, ...]) -> "Cyclotomic":
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", vec)
        return obj

    @classmethod
    def from_rational(cls, q) -> "Cyclotomic":
        return cls._make(1, (Fraction(q),))

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls._make(1, (_ZERO,))

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls._make(1, (Fraction(1),))

    def _sparse(self) -> dict[int, Fraction]:
        return {e: c for e, c in enumerate(self.coeffs) if c}

    def embed(self, target: int) -> "Cyclotomic":
        """Re-express at conductor `target` via zeta_N = zeta_target^(target/N)."""
        n = self.conductor
        if target == n:
            return self
        if target % n != 0:
            raise ValueError("target conductor must be a multiple")
        step = target // n
        sparse = {e * step: c for e, c in self._sparse().items()}
        return Cyclotomic._make(target, _normalize(target, sparse))

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        return NotImplemented

    def _common(self, other: "Cyclotomic"):
        if self.conductor == other.conductor:
            return self, other
        lcm = math.lcm(self.conductor, other.conductor)
        return self.embed(lcm), other.embed(lcm)

    def __add__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        vec = tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
        return Cyclotomic._make(a.conductor, vec)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._make(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        n = a.conductor
        if n == 1:
            return Cyclotomic._make(1, (a.coeffs[0] * b.coeffs[0],))
        sparse: dict[int, Fraction] = {}
        bs = b._sparse()
        for i, ci in a._sparse().items():
            for j, cj in bs.items():
                e = i + j
                if e >= n:
                    e -= n
                if e in sparse:
                    sparse[e] += ci * cj
                else:
                    sparse[e] = ci * cj
        return Cyclotomic._make(n, _normalize(n, sparse))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported")
        result = Cyclotomic.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Cyclotomic":
        """Complex conjugation: zeta_N -> zeta_N^(N-1)."""
        n = self.conductor
        sparse = {(-e) % n: c for e, c in self._sparse().items()}
        return Cyclotomic._make(n, _normalize(n, sparse))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def rational_value(self) -> Fraction | None:
        """The value as a Fraction if it lies in Q, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def as_integer(self) -> int | None:
        q = self.rational_value()
        if q is None or q.denominator != 1:
            return None
        return int(q)

    def approx(self) -> complex:
        n = self.conductor
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * e / n) for e, c in self._sparse().items()),
            complex(0.0),
        )

    def __eq__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equality crosses conductors; values are not hashable

    def __repr__(self):
        q = self.rational_value()
        if q is not None:
            return f"Cyclotomic({q})"
        terms = " + ".join(f"{c}*z{self.conductor}^{e}" for e, c in self._sparse().items())
        return f"Cyclotomic[{terms}]"


def root_of_unity(n: int, k: int) -> Cyclotomic:
    """zeta_n^k in canonical reduced form at conductor n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Cyclotomic._make(n, _normalize(n, {k % n: Fraction(1)}))


def add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def neg(a: Cyclotomic) -> Cyclotomic:
    return -a


def conj(a: Cyclotomic) -> Cyclotomic:
    return a.conj()


def is_zero(a: Cyclotomic) -> bool:
    return a.is_zero()


def approx_complex(a: Cyclotomic) -> tuple[float, float]:
    z = a.approx()
    return (z.real, z.imag)


def cyc_to_json(v: Cyclotomic):
    """JSON encoding: bare int for rational integers, else the full record."""
    n = v.as_integer()
    if n is not None:
        return n
    return {
        "conductor": v.conductor,
        "coeffs": [[c.numerator, c.denominator] for c in v.coeffs],
    }


def cyc_from_json(obj) -> Cyclotomic:
    if isinstance(obj, bool):
        raise ValueError("booleans are not cyclotomic values")
    if isinstance(obj, int):
        return Cyclotomic.from_rational(obj)
    if isinstance(obj, dict):
        n = obj["conductor"]
        coeffs = [Fraction(num, den) for num, den in obj["coeffs"]]
        return Cyclotomic(n, coeffs)
    raise ValueError(f"cannot decode cyclotomic value from {obj!r}")
