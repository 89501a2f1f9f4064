"""Exact rational functions and generating functions of Schreier automata.

A generating function p(z) = sum a_k z^k counts accepted positive words
by length.  For start vertex i and end vertex f it equals

    (-1)^(i+f) det(I - zA : f, i) / det(I - zA)

where (B : f, i) removes row f and column i.  The minor determinant is
computed exactly by evaluating at integer points (fraction-free Bareiss)
and interpolating; the denominator comes from the Faddeev-LeVerrier
characteristic data.  series_from_matrix provides the independent route
through exact matrix powers, a_k = (A^k)_{if}; the two must agree, which
also pins the cofactor sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .poly import IntPolynomial, lagrange_interpolate, poly_gcd
from .schreier import SchreierGraph
from .spectral import char_data, transition_matrix


@dataclass(frozen=True)
class RationalFunction:
    """Quotient of integer polynomials in normal form: numerator and
    denominator coprime, denominator constant term +1.  Equality is
    structural on the normal form."""

    num: IntPolynomial
    den: IntPolynomial

    def __post_init__(self):
        num, den = self.num, self.den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = IntPolynomial(), IntPolynomial([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0 or g.coeffs[0] != 1:
                num = num.exact_div(g)
                den = den.exact_div(g)
        if not den.coeffs or den.coeffs[0] == 0:
            raise ValueError("denominator must not vanish at 0")
        if den.coeffs[0] < 0:
            num, den = -num, -den
        if den.coeffs[0] != 1:
            raise ValueError(
                f"cannot normalise denominator constant term {den.coeffs[0]} to 1 "
                "with integer coefficients"
            )
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def series(self, depth: int) -> list[int]:
        """Maclaurin coefficients a_0..a_depth via the linear recurrence
        a_k = N_k - sum_{j>=1} D_j a_{k-j} (valid since D(0) = 1)."""
        if depth < 0:
            raise ValueError("depth must be >= 0")
        n, d = self.num.coeffs, self.den.coeffs
        out: list[int] = []
        for k in range(depth + 1):
            a = n[k] if k < len(n) else 0
            for j in range(1, min(k, len(d) - 1) + 1):
                a -= d[j] * out[k - j]
            out.append(a)
        return out

    def __str__(self):
        if self.den == IntPolynomial([1]):
            return str(self.num)
        return f"({self.num})/({self.den})"


ZERO = RationalFunction(IntPolynomial(), IntPolynomial([1]))


def rational(num_coeffs, den_coeffs) -> RationalFunction:
    return RationalFunction(IntPolynomial(num_coeffs), IntPolynomial(den_coeffs))


def geometric(n: int) -> RationalFunction:
    """1/(1 - nz), the generating function of the whole rank-n group."""
    return rational([1], [1, -n])


def _det_int(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    m = [row[:] for row in rows]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[size - 1][size - 1]


def _minor_poly(matrix, drop_row: int, drop_col: int) -> IntPolynomial:
    # det(I - zA : drop_row, drop_col) via evaluation at z = 0..d-1 and
    # Lagrange interpolation (degree <= d-1)
    d = len(matrix)
    rows = [i for i in range(d) if i != drop_row]
    cols = [j for j in range(d) if j != drop_col]
    values = []
    for t in range(d):
        m = [
            [(1 if i == j else 0) - t * matrix[i][j] for j in cols]
            for i in rows
        ]
        values.append(_det_int(m))
    return lagrange_interpolate(values)


@lru_cache(maxsize=None)
def genfunc(graph: SchreierGraph, start: int, end: int) -> RationalFunction:
    """Generating function of the automaton with the given start and end
    vertices, in normal form.  Coefficient k counts the positive words of
    length k leading from start to end."""
    d = graph.d
    if not (1 <= start <= d and 1 <= end <= d):
        raise ValueError(f"start/end must lie in 1..{d}")
    matrix = transition_matrix(graph)
    den = char_data(matrix).reciprocal_charpoly
    minor = _minor_poly(matrix, end - 1, start - 1)
    sign = -1 if (start + end) % 2 else 1
    return RationalFunction(minor * sign, den)


def series_from_matrix(
    graph: SchreierGraph, start: int, end: int, depth: int
) -> list[int]:
    """a_k = (A^k)_{start,end} for k = 0..depth, by exact matrix powers."""
    d = graph.d
    if not (1 <= start <= d and 1 <= end <= d):
        raise ValueError(f"start/end must lie in 1..{d}")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    matrix = transition_matrix(graph)
    vec = [0] * d
    vec[start - 1] = 1
    out = [vec[end - 1]]
    for _ in range(depth):
        vec = [
            sum(vec[i] * matrix[i][j] for i in range(d) if vec[i])
            for j in range(d)
        ]
        out.append(vec[end - 1])
    return out
