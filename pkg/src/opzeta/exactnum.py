"""Exact arithmetic: rationals, Bernoulli/Euler numbers, and polynomials
over Q and Q[pi].

All values are immutable after construction and all operations are pure.
The Bernoulli convention is fixed to B_1 = -1/2 (the generating function
x/(e^x - 1)); the alternate B_1 = +1/2 convention is deliberately rejected
because every identity in this package is derived with the -1/2 sign.
Euler numbers use the sech generating function 2/(e^t + e^-t), under which
all odd-index values vanish.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Union

import mpmath

Rational = Fraction

_ScalarLike = Union[int, Fraction]


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


class PiPolynomial:
    """Polynomial in pi with rational coefficients; coeffs[k] multiplies pi**k.

    Trailing zero coefficients are trimmed; the empty tuple is the zero
    polynomial.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[_ScalarLike] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("PiPolynomial is immutable")

    @classmethod
    def rational(cls, q: _ScalarLike) -> "PiPolynomial":
        return cls((q,))

    @classmethod
    def pi_power(cls, q: _ScalarLike, k: int) -> "PiPolynomial":
        """q * pi**k as a PiPolynomial."""
        if k < 0:
            raise ValueError("negative pi power")
        return cls((0,) * k + (q,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def as_rational(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise ValueError("polynomial has pi-dependent terms")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, PiPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == PiPolynomial((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("PiPolynomial", self.coeffs))

    def __add__(self, other) -> "PiPolynomial":
        o = other if isinstance(other, PiPolynomial) else PiPolynomial((_as_fraction(other),))
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for i, c in enumerate(o.coeffs):
            a[i] += c
        return PiPolynomial(a)

    __radd__ = __add__

    def __neg__(self) -> "PiPolynomial":
        return PiPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "PiPolynomial":
        return self + (-other if isinstance(other, PiPolynomial) else PiPolynomial((-_as_fraction(other),)))

    def __rsub__(self, other) -> "PiPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "PiPolynomial":
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return PiPolynomial(tuple(c * q for c in self.coeffs))
        if isinstance(other, PiPolynomial):
            if not self.coeffs or not other.coeffs:
                return PiPolynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return PiPolynomial(out)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PiPolynomial":
        q = _as_fraction(other)
        if q == 0:
            raise ZeroDivisionError("division by zero rational")
        return self * (1 / q)

    def evaluate(self, pi_value) -> "mpmath.mpf":
        """Evaluate with the supplied numeric value of pi (Horner)."""
        acc = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * pi_value + mpmath.mpf(c.numerator) / c.denominator
        return acc

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*pi")
            else:
                parts.append(f"{c}*pi^{k}")
        return " + ".join(parts).replace("+ -", "- ")


PI = PiPolynomial((0, 1))


class PiXPolynomial:
    """Polynomial in x whose coefficients are PiPolynomials; coeffs[j]
    multiplies x**j. Trailing zeros trimmed; degree = len(coeffs) - 1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, PiPolynomial):
                cs.append(c)
            else:
                cs.append(PiPolynomial((_as_fraction(c),)))
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("PiXPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff) -> "PiXPolynomial":
        c = coeff if isinstance(coeff, PiPolynomial) else PiPolynomial((_as_fraction(coeff),))
        return cls((PiPolynomial(),) * degree + (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> PiPolynomial:
        """Coefficient of x**j (zero beyond the stored degree)."""
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return PiPolynomial()

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, PiXPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("PiXPolynomial", self.coeffs))

    def __add__(self, other: "PiXPolynomial") -> "PiXPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for j in range(n):
            out.append(self.coeff(j) + other.coeff(j))
        return PiXPolynomial(out)

    def __neg__(self) -> "PiXPolynomial":
        return PiXPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PiXPolynomial") -> "PiXPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "PiXPolynomial":
        if isinstance(other, (int, Fraction, PiPolynomial)):
            return PiXPolynomial(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def truncate(self, max_degree: int) -> "PiXPolynomial":
        return PiXPolynomial(self.coeffs[: max_degree + 1])

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = repr(c)
            if " " in cs:
                cs = f"({cs})"
            if j == 0:
                parts.append(cs)
            elif j == 1:
                parts.append(f"{cs}*x")
            else:
                parts.append(f"{cs}*x^{j}")
        return " + ".join(parts).replace("+ -", "- ")


def pipoly_eval(p: PiXPolynomial, x, pi_digits: int = 30) -> float:
    """Evaluate `p` at real x with pi carried to `pi_digits` decimal digits.

    The error of the returned double is bounded by degree * ulp scale.
    `x` may be a float, Fraction, or mpmath value.
    """
    if pi_digits < 15:
        raise ValueError("pi_digits must be >= 15")
    with mpmath.workdps(pi_digits + 5):
        pi_val = +mpmath.pi
        if isinstance(x, Fraction):
            xv = mpmath.mpf(x.numerator) / x.denominator
        else:
            xv = mpmath.mpf(x)
        acc = mpmath.mpf(0)
        for c in reversed(p.coeffs):
            acc = acc * xv + c.evaluate(pi_val)
        return float(acc)


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n, convention B_1 = -1/2.

    Exact rational recurrence sum_{j<m} C(m+1, j) B_j = -(m+1) B_m, which is
    the coefficient identity of x/(e^x - 1). Memoized; odd n >= 3 shortcut
    to zero.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    s = Fraction(0)
    for j in range(n):
        bj = bernoulli_number(j)
        if bj:
            s += comb(n + 1, j) * bj
    return -s / (n + 1)


def bernoulli_polynomial(m: int) -> PiXPolynomial:
    """Bernoulli polynomial B_m(x) = sum_k C(m,k) B_k x^(m-k), exact, monic."""
    if m < 0:
        raise ValueError("m must be >= 0")
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        bk = bernoulli_number(k)
        if bk:
            coeffs[m - k] += comb(m, k) * bk
    return PiXPolynomial(coeffs)


@lru_cache(maxsize=None)
def euler_number(n: int) -> int:
    """Euler number E_n from 2/(e^t + e^-t); odd indices vanish.

    Integer recurrence from sech(t) * cosh(t) = 1:
    E_{2m} = -sum_{j<m} C(2m, 2j) E_{2j}.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2 == 1:
        return 0
    if n == 0:
        return 1
    m = n // 2
    return -sum(comb(n, 2 * j) * euler_number(2 * j) for j in range(m))


# --- exact Taylor expansions of the registry closed forms ---------------------
#
# These are the right sides of the singularity-removed identities, expanded in
# exact rational arithmetic straight from the generating functions. They serve
# as the independent route against which the operator engine's term-by-term
# results are matched.

def cot_half_regular(terms: int) -> PiXPolynomial:
    """Taylor polynomial of sin x / (2(1 - cos x)) - 1/x, `terms` nonzero terms.

    Equals (1/2)cot(x/2) - 1/x = sum_{k>=1} (-1)^k B_{2k} x^(2k-1) / (2k)!.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    coeffs = [Fraction(0)] * (2 * terms)
    for k in range(1, terms + 1):
        coeffs[2 * k - 1] = Fraction((-1) ** k) * bernoulli_number(2 * k) / factorial(2 * k)
    return PiXPolynomial(coeffs)


def inv_one_minus_cos_regular(terms: int) -> PiXPolynomial:
    """Taylor polynomial of -1/(2(1 - cos x)) + 1/x^2, `terms` nonzero terms.

    Derivative of `cot_half_regular`; coefficient of x^(2k-2) is
    (-1)^k B_{2k} (2k-1) / (2k)!.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    coeffs = [Fraction(0)] * (2 * terms - 1)
    for k in range(1, terms + 1):
        coeffs[2 * k - 2] = Fraction((-1) ** k) * bernoulli_number(2 * k) * (2 * k - 1) / factorial(2 * k)
    return PiXPolynomial(coeffs)


def half_sec_series(terms: int) -> PiXPolynomial:
    """Taylor polynomial of 1/(2 cos x): coefficient of x^(2n) is |E_{2n}| / (2 (2n)!)."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    coeffs = [Fraction(0)] * (2 * terms - 1)
    for n in range(terms):
        coeffs[2 * n] = Fraction(abs(euler_number(2 * n)), 2 * factorial(2 * n))
    return PiXPolynomial(coeffs)


def log_sec_plus_tan_half_series(terms: int) -> PiXPolynomial:
    """Taylor polynomial of (1/2) log(sec x + tan x), the antiderivative of
    1/(2 cos x): coefficient of x^(2n+1) is |E_{2n}| / (2 (2n+1)!)."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    coeffs = [Fraction(0)] * (2 * terms)
    for n in range(terms):
        coeffs[2 * n + 1] = Fraction(abs(euler_number(2 * n)), 2 * factorial(2 * n + 1))
    return PiXPolynomial(coeffs)


TAYLOR_GENERATORS = {
    "cot_half_regular": cot_half_regular,
    "inv_one_minus_cos_regular": inv_one_minus_cos_regular,
    "half_sec_series": half_sec_series,
    "log_sec_plus_tan_half_series": log_sec_plus_tan_half_series,
}
