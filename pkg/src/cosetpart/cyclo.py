"""Exact arithmetic in the cyclotomic fields Q(zeta_h) and residues of
rational functions at the scaled roots of unity z0 = zeta_h^m / n.

The point z0 is always handled symbolically through the triple
(h, m, n); numbers in Q(zeta_h) are rational-coefficient polynomials in
zeta_h reduced modulo the h-th cyclotomic polynomial.  residue_numeric
is a floating-point cross-check for debugging only; every acceptance
check runs on the exact path.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

from .poly import IntPolynomial
from .ratfunc import RationalFunction


class NotAPole(ValueError):
    """The denominator does not vanish at the requested point."""


class NotSimple(ValueError):
    """The requested pole has multiplicity greater than one."""


@lru_cache(maxsize=None)
def cyclotomic(h: int) -> IntPolynomial:
    """The h-th cyclotomic polynomial: divide x^h - 1 by the cyclotomic
    polynomials of the proper divisors of h."""
    if h < 1:
        raise ValueError("order must be >= 1")
    p = IntPolynomial([-1] + [0] * (h - 1) + [1])
    for d in range(1, h):
        if h % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


def _qdivmod(num: list[Fraction], den: list[Fraction]):
    r = list(num)
    dn = len(den)
    lead = den[-1]
    quo = [Fraction(0)] * max(len(r) - dn + 1, 0)
    for k in range(len(quo) - 1, -1, -1):
        t = r[k + dn - 1] / lead
        quo[k] = t
        if t:
            for j in range(dn):
                r[k + j] -= t * den[j]
    while r and not r[-1]:
        r.pop()
    return quo, r


def _qtrim(c: list[Fraction]) -> list[Fraction]:
    while c and not c[-1]:
        c.pop()
    return c


def _qmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    res = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return res


def _qsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _qtrim(out)


class CycloNumber:
    """An element of Q(zeta_h): coefficients of a polynomial in zeta_h
    of degree below phi(h), the canonical representative mod Phi_h."""

    __slots__ = ("h", "coeffs")

    def __init__(self, h: int, coeffs=()):
        phi = cyclotomic(h).degree
        c = [Fraction(x) for x in coeffs]
        if len(c) >= phi + 1:
            mod = [Fraction(x) for x in cyclotomic(h).coeffs]
            _, c = _qdivmod(c, mod)
        c += [Fraction(0)] * (phi - len(c))
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("CycloNumber is immutable")

    @classmethod
    def zero(cls, h: int) -> "CycloNumber":
        return cls(h)

    @classmethod
    def from_rational(cls, h: int, value) -> "CycloNumber":
        return cls(h, [Fraction(value)])

    @classmethod
    def zeta_power(cls, h: int, e: int) -> "CycloNumber":
        e %= h
        return cls(h, [0] * e + [1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.h != self.h:
                raise ValueError(f"mixed cyclotomic orders {self.h} and {other.h}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(self.h, other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.h, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNumber(self.h, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.h, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNumber(self.h, _qmul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        """Extended Euclid against Phi_h, which is irreducible over Q, so
        every nonzero element is a unit."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        mod = [Fraction(x) for x in cyclotomic(self.h).coeffs]
        r0, r1 = mod, _qtrim(list(self.coeffs))
        u0, u1 = [], [Fraction(1)]
        while r1:
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, _qsub(u0, _qmul(q, u1))
        # invariant r_i == u_i * self (mod Phi); r0 is a nonzero constant
        # gcd because Phi_h is irreducible over Q
        assert len(r0) == 1, "cyclotomic polynomial must be irreducible"
        scale = 1 / r0[0]
        return CycloNumber(self.h, [scale * c for c in u0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __repr__(self):
        return f"CycloNumber(h={self.h}, coeffs={[str(c) for c in self.coeffs]})"


def root_point(h: int, m: int, n: int) -> CycloNumber:
    """z0 = zeta_h^m / n as an exact element of Q(zeta_h)."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    return CycloNumber.zeta_power(h, m) * Fraction(1, n)


def eval_at_root(p: IntPolynomial, h: int, m: int, n: int) -> CycloNumber:
    """p(zeta_h^m / n), exactly."""
    acc = p(root_point(h, m, n))
    if isinstance(acc, int):
        acc = CycloNumber.from_rational(h, acc)
    return acc


def pole_order(f: RationalFunction, h: int, m: int, n: int) -> int:
    """Multiplicity of z0 = zeta_h^m / n as a root of the denominator
    (0 if z0 is not a pole)."""
    den = f.den
    order = 0
    while eval_at_root(den, h, m, n).is_zero():
        order += 1
        den = den.derivative()
    return order


def residue_simple(f: RationalFunction, h: int, m: int, n: int) -> CycloNumber:
    """Residue N(z0)/D'(z0) at the simple pole z0 = zeta_h^m / n.

    Raises NotAPole if D(z0) != 0 and NotSimple if D'(z0) = 0 as well.
    """
    if not eval_at_root(f.den, h, m, n).is_zero():
        raise NotAPole(f"zeta_{h}^{m}/{n} is not a pole")
    dprime = eval_at_root(f.den.derivative(), h, m, n)
    if dprime.is_zero():
        raise NotSimple(f"zeta_{h}^{m}/{n} is a multiple pole")
    return eval_at_root(f.num, h, m, n) / dprime


def residue_numeric(f: RationalFunction, h: int, m: int, n: int) -> complex:
    """Floating-point residue for debugging cross-checks only."""
    z0 = cmath.exp(2j * cmath.pi * m / h) / n
    return f.num(z0) / f.den.derivative()(z0)
