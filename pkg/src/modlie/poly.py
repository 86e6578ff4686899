"""Exact univariate polynomials over the rationals, and homogeneous binary forms.

Polynomials are immutable coefficient tuples in ascending degree order with no
trailing zeros; the zero polynomial is the empty tuple and has degree -1.
Binary forms carry an explicit degree so the zero form stays well typed.

Irreducible factorization over the rationals is delegated to sympy; everything
else (arithmetic, gcd chains, squarefree parts, evaluation, arithmetic modulo
an irreducible factor) is implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over Q, coefficients ascending, no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def make(coeffs: Iterable) -> "Poly":
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((Fraction(1),))

    @staticmethod
    def x() -> "Poly":
        return Poly((Fraction(0), Fraction(1)))

    @staticmethod
    def constant(c) -> "Poly":
        return Poly.make([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly.make(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly.make(out)

    def scale(self, c) -> "Poly":
        c = _frac(c)
        if c == 0:
            return Poly.zero()
        return Poly(tuple(a * c for a in self.coeffs))

    def shift_up(self, k: int) -> "Poly":
        """Multiply by t**k."""
        if self.is_zero or k == 0:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c == 0:
                continue
            q = c / lead
            quot[k] = q
            for i, b in enumerate(other.coeffs):
                rem[k + i] -= q * b
        return Poly.make(quot), Poly.make(rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def derivative(self) -> "Poly":
        return Poly.make([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, t) -> Fraction:
        t = _frac(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def eval_matrix(self, m):
        """Evaluate at a square matrix, returning a matrix of the same shape."""
        from .linalg import RatMatrix

        n = m.rows
        acc = RatMatrix.zeros(n, n)
        for c in reversed(self.coeffs):
            acc = acc @ m
            if c:
                acc = acc + RatMatrix.identity(n).scale(c)
        return acc

    def primitive_int(self) -> tuple["Poly", Fraction]:
        """Scale to integer coefficients with gcd 1 and positive leading term.

        Returns (primitive, factor) with self = primitive.scale(factor).
        """
        if self.is_zero:
            return self, Fraction(1)
        from math import gcd, lcm

        denom = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * denom) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        sign = -1 if ints[-1] < 0 else 1
        prim = Poly(tuple(Fraction(v // (sign * g)) for v in ints))
        return prim, Fraction(sign * g, denom)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm (zero if both inputs are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly.one(), Poly.zero()
    t0, t1 = Poly.zero(), Poly.one()
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lead = r0.leading
    return r0.monic(), s0.scale(1 / lead), t0.scale(1 / lead)


def squarefree_part(p: Poly) -> Poly:
    """Product of the distinct irreducible factors, monic."""
    if p.is_zero or p.is_constant:
        return Poly.one() if not p.is_zero else Poly.zero()
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g.scale(p.leading / g.leading)).monic() if not g.is_constant else p.monic()


def factor_monic(p: Poly) -> list[tuple[Poly, int]]:
    """Irreducible factorization over Q of a nonzero polynomial.

    Returns monic factors with multiplicities, sorted by (degree, coefficients)
    so the output is deterministic. The constant content is dropped.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if p.is_constant:
        return []
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(p.coeffs))
    _, factors = sympy.factor_list(expr, t)
    out = []
    for f, mult in factors:
        coeffs = sympy.Poly(f, t).all_coeffs()  # descending
        fr = [Fraction(int(c.p), int(c.q)) for c in [sympy.Rational(c) for c in coeffs]]
        out.append((Poly.make(list(reversed(fr))).monic(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots (without multiplicity), sorted."""
    roots = [-f.coeffs[0] for f, _ in factor_monic(p) if f.degree == 1]
    return sorted(roots)


# --- arithmetic in Q[t]/(g) for g irreducible -------------------------------


def _nf_inv(a: Poly, g: Poly) -> Poly:
    d, u, _ = poly_xgcd(a, g)
    if d.degree != 0:
        raise ValueError("element is not invertible modulo the given polynomial")
    return u.scale(1 / d.coeffs[0]) % g


def rank_mod_irreducible(entries: Sequence[Sequence[Poly]], g: Poly) -> int:
    """Rank of a matrix with entries in the field Q[t]/(g), g irreducible.

    Plain Gaussian elimination; every nonzero pivot is invertible because g is
    irreducible.
    """
    rows = [[e % g for e in row] for row in entries]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if not rows[r][col].is_zero:
                piv = r
                break
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        inv = _nf_inv(rows[row][col], g)
        rows[row] = [(c * inv) % g for c in rows[row]]
        for r in range(row + 1, nrows):
            f = rows[r][col]
            if not f.is_zero:
                rows[r] = [(a - f * b) % g for a, b in zip(rows[r], rows[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


# --- homogeneous binary forms ------------------------------------------------


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form c0*a^d + c1*a^(d-1)*b + ... + cd*b^d in two variables.

    The degree is stored explicitly so that the zero form of any degree is
    representable. coefficients has length degree + 1.
    """

    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("coefficient count must equal degree + 1")

    @staticmethod
    def make(degree: int, coeffs: Iterable) -> "BinaryForm":
        return BinaryForm(degree, tuple(_frac(c) for c in coeffs))

    @staticmethod
    def from_univariate(p: Poly, degree: int) -> "BinaryForm":
        """Homogenize p(t) with t = b/a to the given total degree."""
        if p.degree > degree:
            raise ValueError("target degree too small")
        cs = [Fraction(0)] * (degree + 1)
        for i, c in enumerate(p.coeffs):
            cs[i] = c
        return BinaryForm(degree, tuple(cs))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def to_univariate(self) -> Poly:
        """Dehomogenize on the chart a = 1 (so the variable is t = b/a)."""
        return Poly.make(self.coefficients)

    def alpha_valuation(self) -> int:
        """Multiplicity of the first variable as a factor (degree+1 for zero)."""
        if self.is_zero:
            return self.degree + 1
        top = max(i for i, c in enumerate(self.coefficients) if c != 0)
        return self.degree - top

    def beta_valuation(self) -> int:
        if self.is_zero:
            return self.degree + 1
        return min(i for i, c in enumerate(self.coefficients) if c != 0)

    def eval(self, a, b) -> Fraction:
        a, b = _frac(a), _frac(b)
        acc = Fraction(0)
        for i, c in enumerate(self.coefficients):
            if c:
                acc += c * a ** (self.degree - i) * b**i
        return acc

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        d = self.degree + other.degree
        cs = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    cs[i + j] += a * b
        return BinaryForm(d, tuple(cs))


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic gcd of two binary forms (zero forms are absorbing identities)."""
    if f.is_zero:
        return _monic_form(g)
    if g.is_zero:
        return _monic_form(f)
    af, ag = f.alpha_valuation(), g.alpha_valuation()
    u = poly_gcd(f.to_univariate(), g.to_univariate())
    a = min(af, ag)
    return BinaryForm.from_univariate(u, u.degree + a)


def _monic_form(f: BinaryForm) -> BinaryForm:
    if f.is_zero:
        return f
    top = max(i for i, c in enumerate(f.coefficients) if c != 0)
    lead = f.coefficients[top]
    return BinaryForm(f.degree, tuple(c / lead for c in f.coefficients))
