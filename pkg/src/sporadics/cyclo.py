"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored in canonical form: the conductor is the smallest n such
that the value lies in Q(zeta_n), and the coefficients are taken with respect
to the power basis 1, zeta, ..., zeta^(phi(n)-1) after reduction modulo the
n-th cyclotomic polynomial.  Canonical form is unique per value, so equality
and hashing are structural.

All coefficient arithmetic uses fractions.Fraction; nothing here ever touches
floating point except the explicit embed() sanity helper.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


class NotRationalError(ValueError):
    """Raised when a strictly irrational value is used where Q is required."""


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree."""
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact polynomial division.
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d:
            continue
        phi_d = _cyclotomic_poly(d)
        num = _polydiv_exact(num, list(phi_d))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        coef = num[shift + len(den) - 1]
        if coef % den[-1]:
            raise ArithmeticError("non-exact cyclotomic division")
        q = coef // den[-1]
        out[shift] = q
        if q:
            for i, c in enumerate(den):
                num[shift + i] -= q * c
    if any(num):
        raise ArithmeticError("non-exact cyclotomic division")
    return out


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def _reduce_power_basis(n: int, coeffs: dict[int, Fraction]) -> dict[int, Fraction]:
    """Reduce exponents mod n, then mod Phi_n, to degree < phi(n)."""
    deg = _phi(n)
    vec = [Fraction(0)] * n
    for k, c in coeffs.items():
        vec[k % n] += c
    phi_n = _cyclotomic_poly(n)
    # Divide out Phi_n from the top; remainder has degree < phi(n).
    for shift in range(n - 1 - deg, -1, -1):
        lead = vec[shift + deg]
        if lead:
            for i in range(deg + 1):
                vec[shift + i] -= lead * phi_n[i]
    return {k: c for k, c in enumerate(vec[:deg]) if c}


def _subfield_rewrite(n: int, coeffs: dict[int, Fraction], m: int) -> dict[int, Fraction] | None:
    """Express a reduced Q(zeta_n) value in the power basis of Q(zeta_m), m | n.

    Returns None when the value does not lie in the subfield.  Uses an exact
    linear solve over Q against the images of the zeta_m power basis.
    """
    deg_n, deg_m = _phi(n), _phi(m)
    step = n // m
    # Column j: zeta_n^(j*step) reduced into the zeta_n power basis.
    cols = [_reduce_power_basis(n, {j * step: Fraction(1)}) for j in range(deg_m)]
    # Solve sum_j x_j * cols[j] = coeffs by Gaussian elimination on the
    # (deg_n x deg_m) system; inconsistency means "not in subfield".
    rows = [[cols[j].get(i, Fraction(0)) for j in range(deg_m)] + [coeffs.get(i, Fraction(0))]
            for i in range(deg_n)]
    pivot_row = 0
    pivots: list[int] = []
    for col in range(deg_m):
        src = next((r for r in range(pivot_row, deg_n) if rows[r][col]), None)
        if src is None:
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        inv = rows[pivot_row][col]
        rows[pivot_row] = [x / inv for x in rows[pivot_row]]
        for r in range(deg_n):
            if r != pivot_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    for r in range(pivot_row, deg_n):
        if rows[r][deg_m]:
            return None
    sol = [Fraction(0)] * deg_m
    for r, col in enumerate(pivots):
        sol[col] = rows[r][deg_m]
    return {j: c for j, c in enumerate(sol) if c}


class Cyclotomic:
    """An exact element of some Q(zeta_n), canonicalized on construction."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int = 1, coeffs: dict[int, Fraction] | None = None):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        n = conductor
        cmap = _reduce_power_basis(n, coeffs or {})
        # Conductor minimization: first strip common exponent factors (cheap),
        # then descend through maximal subfields via exact solves.
        changed = True
        while changed and n > 1:
            changed = False
            if not cmap or set(cmap) == {0}:
                n = 1
                break
            g = n
            for k in cmap:
                g = gcd(g, k)
            if g > 1:
                n //= g
                cmap = _reduce_power_basis(n, {k // g: c for k, c in cmap.items()})
                changed = True
                continue
            for p in _prime_factors(n):
                m = n // p
                sub = _subfield_rewrite(n, cmap, m)
                if sub is not None:
                    n, cmap = m, sub
                    changed = True
                    break
        object.__setattr__(self, "conductor", n)
        object.__setattr__(self, "coeffs", cmap)
        object.__setattr__(self, "_hash", hash((n, tuple(sorted(cmap.items())))))

    def __setattr__(self, *args):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rational(q: Fraction | int) -> Cyclotomic:
        q = Fraction(q)
        return Cyclotomic(1, {0: q} if q else {})

    @staticmethod
    def zeta(n: int, k: int = 1) -> Cyclotomic:
        return Cyclotomic(n, {k % n: Fraction(1)})

    # -- ring operations ----------------------------------------------------

    def _lift(self, n: int) -> dict[int, Fraction]:
        step = n // self.conductor
        return {k * step: c for k, c in self.coeffs.items()}

    def __add__(self, other: Cyclotomic | int | Fraction) -> Cyclotomic:
        other = _coerce(other)
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        a, b = self._lift(n), other._lift(n)
        for k, c in b.items():
            a[k] = a.get(k, Fraction(0)) + c
        return Cyclotomic(n, a)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.conductor, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: Cyclotomic | int | Fraction) -> Cyclotomic:
        return self + (-_coerce(other))

    def __rsub__(self, other: Cyclotomic | int | Fraction) -> Cyclotomic:
        return _coerce(other) + (-self)

    def __mul__(self, other: Cyclotomic | int | Fraction) -> Cyclotomic:
        other = _coerce(other)
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        a, b = self._lift(n), other._lift(n)
        prod: dict[int, Fraction] = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = (ka + kb) % n
                prod[k] = prod.get(k, Fraction(0)) + ca * cb
        return Cyclotomic(n, prod)

    __rmul__ = __mul__

    def __truediv__(self, scalar: int | Fraction) -> Cyclotomic:
        scalar = Fraction(scalar)
        return Cyclotomic(self.conductor, {k: c / scalar for k, c in self.coeffs.items()})

    def conjugate(self) -> Cyclotomic:
        """Complex conjugation: the Galois map zeta_n -> zeta_n^(n-1)."""
        n = self.conductor
        return Cyclotomic(n, {(-k) % n: c for k, c in self.coeffs.items()})

    def galois(self, s: int) -> Cyclotomic:
        """The automorphism zeta_n -> zeta_n^s; s must be coprime to n."""
        n = self.conductor
        if gcd(s, n) != 1:
            raise ValueError(f"galois exponent {s} not coprime to conductor {n}")
        return Cyclotomic(n, {(k * s) % n: c for k, c in self.coeffs.items()})

    # -- predicates and conversions -----------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return self.conductor == 1

    def as_rational(self) -> Fraction:
        if self.conductor != 1:
            raise NotRationalError(f"value with conductor {self.conductor} is not rational")
        return self.coeffs.get(0, Fraction(0))

    def embed(self) -> complex:
        """Numeric embedding sending zeta_n to exp(2*pi*i/n).  Sanity use only."""
        z = 0j
        for k, c in self.coeffs.items():
            z += float(c) * cmath.exp(2j * cmath.pi * k / self.conductor)
        return z

    # -- structural protocol -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if self.is_rational():
            return f"Cyc({self.coeffs.get(0, Fraction(0))})"
        terms = " + ".join(f"{c}*z{self.conductor}^{k}" for k, c in sorted(self.coeffs.items()))
        return f"Cyc({terms})"

    # -- serialization -------------------------------------------------------

    def to_obj(self):
        """JSON form: [num, den] for rationals, else {"n": .., "coeffs": ..}."""
        if self.is_rational():
            q = self.as_rational()
            return [q.numerator, q.denominator]
        return {
            "n": self.conductor,
            "coeffs": {str(k): [c.numerator, c.denominator]
                       for k, c in sorted(self.coeffs.items())},
        }

    @staticmethod
    def from_obj(obj) -> Cyclotomic:
        if isinstance(obj, (int, str)):
            return Cyclotomic.from_rational(Fraction(obj))
        if isinstance(obj, list):
            if len(obj) != 2:
                raise ValueError(f"rational serialization must be [num, den], got {obj!r}")
            return Cyclotomic.from_rational(Fraction(int(obj[0]), int(obj[1])))
        if isinstance(obj, dict):
            n = int(obj["n"])
            coeffs = {}
            for key, pair in obj["coeffs"].items():
                coeffs[int(key)] = Fraction(int(pair[0]), int(pair[1]))
            return Cyclotomic(n, coeffs)
        raise ValueError(f"cannot parse cyclotomic value from {obj!r}")


def _coerce(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.from_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")


ZERO = Cyclotomic.from_rational(0)
ONE = Cyclotomic.from_rational(1)
