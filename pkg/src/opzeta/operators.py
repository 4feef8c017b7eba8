"""Symbolic dilation-operator engine.

The generator is D = x p with p = -i d/dx, so exp(i*lambda*D) rescales the
argument: f(x) -> f(e^lambda x), and i*D has eigenvalue alpha on x^alpha.
Operators act only on the eigenbasis: monomials (including negative powers)
pick up the scalar zeta(shift - n), beta(shift - n), or 1/Gamma(shift + n);
unit-coefficient trig atoms map to symbolic series. The engine never expands
an operator function in powers of D about a point - every monomial degree is
handled independently, which is what makes the pole at argument 1 an explicit,
typed event (PoleHit) instead of a divergent expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional, Union

from .errors import (
    InconsistentSystem,
    MultipleAnomalies,
    NonIntegerFrequency,
    PoleHit,
    UnsupportedExpression,
)
from .exactnum import PiPolynomial, PiXPolynomial
from .series import TrigSeries
from . import specfun

_KINDS = ("zeta", "beta", "recip_gamma")


@dataclass(frozen=True)
class DilationShift:
    """Operator kind(shift - iD) for zeta/beta, kind(shift + iD) for
    recip_gamma; the shift is exact.

    Only the shift is stored. The symmetrized generator x p + p x equals
    2D - i, so kind((1/2)((2*shift + 1) - i(x p + p x))) denotes the same
    operator; callers wanting that form derive it from the shift.
    """

    kind: str
    shift: Fraction

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}")
        object.__setattr__(self, "shift", Fraction(self.shift))


@dataclass(frozen=True)
class TrigAtom:
    coeff: Fraction
    parity: str
    frequency: int

    def __post_init__(self):
        if self.parity not in ("sin", "cos"):
            raise ValueError("parity must be 'sin' or 'cos'")
        if self.frequency < 1:
            raise ValueError("frequency must be a positive integer")
        object.__setattr__(self, "coeff", Fraction(self.coeff))


@dataclass(frozen=True)
class SingularTerm:
    """coeff * x^power with power <= -1."""

    coeff: PiPolynomial
    power: int

    def __post_init__(self):
        if self.power > -1:
            raise ValueError("singular powers must be <= -1")


@dataclass(frozen=True)
class Expression:
    """Exact polynomial part + trig atoms + singular powers; empty = 0."""

    poly: PiXPolynomial = field(default_factory=PiXPolynomial)
    trig_atoms: tuple[TrigAtom, ...] = ()
    singular_terms: tuple[SingularTerm, ...] = ()

    @classmethod
    def from_poly(cls, poly: PiXPolynomial) -> "Expression":
        return cls(poly=poly)

    @classmethod
    def from_trig(cls, parity: str, coeff=1, frequency: int = 1) -> "Expression":
        return cls(trig_atoms=(TrigAtom(Fraction(coeff), parity, frequency),))

    def is_zero(self) -> bool:
        return self.poly.is_zero() and not self.trig_atoms and not self.singular_terms


@dataclass(frozen=True)
class SeriesTerm:
    """coeff * series evaluated at (arg_scale * x)."""

    coeff: Fraction
    arg_scale: int
    series: TrigSeries


@dataclass(frozen=True)
class PoleTerm:
    degree: int
    coeff: PiPolynomial


@dataclass(frozen=True)
class NumericTerm:
    """Operator value without an exact form (kept out of the exact poly)."""

    degree: int
    value: complex
    abs_error_estimate: float


@dataclass(frozen=True)
class OpResult:
    expr: Expression
    pole_terms: tuple[PoleTerm, ...] = ()
    series_result: tuple[SeriesTerm, ...] = ()
    numeric_terms: tuple[NumericTerm, ...] = ()


@dataclass(frozen=True)
class TaylorFlowResult:
    """Truncated term-by-term operator action on a trig Taylor expansion.

    `anomaly_missing` is set when the parity analysis says the matching
    closed form carries a pole (anomaly) term that term-by-term application
    silently loses.
    """

    poly: PiXPolynomial
    anomaly_missing: bool


def dilate(expr: Expression, lam: float) -> Expression:
    """Substitute x -> e^lambda x.

    Coefficients are exact, so e^lambda is snapped to a rational (within
    1e-9); trig atoms additionally require the scaled frequency to be a
    positive integer, otherwise NonIntegerFrequency is raised.
    """
    scale_f = math.exp(lam)
    scale = Fraction(scale_f).limit_denominator(10 ** 6)
    if abs(float(scale) - scale_f) > 1e-9 * max(1.0, scale_f):
        raise NonIntegerFrequency(f"e^lambda = {scale_f!r} is not an exact rational scale")
    new_poly = PiXPolynomial(
        tuple(expr.poly.coeff(j) * scale ** j for j in range(expr.poly.degree + 1))
    )
    atoms = []
    for atom in expr.trig_atoms:
        freq = scale * atom.frequency
        if freq.denominator != 1 or freq <= 0:
            raise NonIntegerFrequency(
                f"frequency {atom.frequency} scales to non-integer {freq} under e^lambda = {scale_f!r}"
            )
        atoms.append(TrigAtom(atom.coeff, atom.parity, int(freq)))
    singular = tuple(
        SingularTerm(t.coeff * scale ** t.power, t.power) for t in expr.singular_terms
    )
    return Expression(new_poly, tuple(atoms), singular)


ExactValue = Union[Fraction, PiPolynomial]


def _exact_value(kind: str, arg: Fraction):
    """Route an operator argument to its exact value.

    Returns ('exact', Fraction | PiPolynomial), ('pole', None), or
    ('numeric', None) when only a numeric evaluation exists.
    """
    if arg.denominator != 1:
        return "numeric", None
    k = int(arg)
    if kind == "zeta":
        if k == 1:
            return "pole", None
        if k == 0:
            return "exact", Fraction(-1, 2)
        if k < 0:
            return "exact", specfun.zeta_neg_int(-k)
        if k % 2 == 0:
            return "exact", specfun.zeta_even_pi_form(k)
        return "numeric", None  # odd zeta values >= 3 have no closed form
    if kind == "beta":
        if k <= 0:
            return "exact", specfun.beta_nonpos_int(-k)
        if k % 2 == 1:
            return "exact", specfun.beta_odd_pi_form(k)
        return "numeric", None  # beta at even arguments >= 2 (Catalan etc.)
    # recip_gamma
    if k <= 0:
        return "exact", Fraction(0)  # annihilated at the Gamma poles
    return "exact", Fraction(1, factorial(k - 1))


def _numeric_value(kind: str, arg: Fraction):
    if kind == "zeta":
        r = specfun.zeta_em(float(arg))
        return r.value, r.abs_error_estimate
    if kind == "beta":
        r = specfun.dirichlet_beta(float(arg))
        return r.value, r.abs_error_estimate
    return specfun.recip_gamma(float(arg)), 1e-12


def apply_operator(op: DilationShift, expr: Expression, allow_pole: bool = False) -> OpResult:
    """Apply kind(shift -+ iD) to the expression in its eigenbasis.

    Monomial x^n picks up the value at shift - n (shift + n for recip_gamma),
    exact whenever one exists; singular x^-k behaves as degree -k. A trig atom
    maps to the symbolic series sum_n chi(n) trig(n * freq * x) / n^shift. An
    argument equal to 1 for the zeta kind raises PoleHit unless `allow_pole`,
    in which case the term is moved to `pole_terms` unevaluated.
    """
    sign = 1 if op.kind == "recip_gamma" else -1

    out_coeffs: list[PiPolynomial] = [PiPolynomial()] * (expr.poly.degree + 1 if expr.poly else 0)
    poles: list[PoleTerm] = []
    numeric: list[NumericTerm] = []

    def handle(degree: int, coeff: PiPolynomial):
        arg = op.shift + sign * degree
        tag, value = _exact_value(op.kind, arg)
        if tag == "pole":
            if not allow_pole:
                raise PoleHit(degree)
            poles.append(PoleTerm(degree, coeff))
            return None
        if tag == "numeric":
            num, err = _numeric_value(op.kind, arg)
            cnum = complex(float(coeff.evaluate(math.pi)))
            numeric.append(NumericTerm(degree, cnum * num, abs(cnum) * err + 1e-16))
            return None
        return coeff * value

    for n in range(expr.poly.degree + 1 if expr.poly else 0):
        c = expr.poly.coeff(n)
        if c.is_zero():
            continue
        res = handle(n, c)
        if res is not None:
            out_coeffs[n] = res

    singular_out: list[SingularTerm] = []
    for term in expr.singular_terms:
        res = handle(term.power, term.coeff)
        if res is not None and not res.is_zero():
            singular_out.append(SingularTerm(res, term.power))

    series_terms: list[SeriesTerm] = []
    for atom in expr.trig_atoms:
        if op.kind == "recip_gamma":
            raise UnsupportedExpression("1/Gamma of the dilation generator has no series action on trig atoms")
        if op.shift.denominator != 1:
            raise UnsupportedExpression("trig atoms need an integer shift (series weight is n^-shift)")
        character = "trivial" if op.kind == "zeta" else "beta"
        series_terms.append(
            SeriesTerm(atom.coeff, atom.frequency, TrigSeries(atom.parity, int(op.shift), character))
        )

    return OpResult(
        expr=Expression(PiXPolynomial(out_coeffs), (), tuple(singular_out)),
        pole_terms=tuple(poles),
        series_result=tuple(series_terms),
        numeric_terms=tuple(numeric),
    )


def apply_recip_gamma_op(b, expr: Expression) -> Expression:
    """Apply 1/Gamma(b + iD) exactly: x^n -> x^n / Gamma(b + n).

    Terms with b + n a nonpositive integer are annihilated (coefficient set
    to exact zero); positive integers use 1/(b+n-1)!. Requires integer b so
    every coefficient stays exact.
    """
    b = Fraction(b)
    if b.denominator != 1:
        raise UnsupportedExpression("non-integer offsets leave Q[pi]; use apply_operator's numeric path")
    if expr.trig_atoms:
        raise UnsupportedExpression("1/Gamma of the dilation generator acts on polynomial parts only")
    k = int(b)
    coeffs = []
    for n in range(expr.poly.degree + 1 if expr.poly else 0):
        arg = k + n
        if arg <= 0:
            coeffs.append(PiPolynomial())  # annihilated by the Gamma pole
        else:
            coeffs.append(expr.poly.coeff(n) * Fraction(1, factorial(arg - 1)))
    singular = []
    for term in expr.singular_terms:
        arg = k + term.power
        if arg <= 0:
            continue
        singular.append(SingularTerm(term.coeff * Fraction(1, factorial(arg - 1)), term.power))
    return Expression(PiXPolynomial(coeffs), (), tuple(singular))


def _trig_degrees(trig: str, terms: int) -> list[int]:
    start = 1 if trig == "sin" else 0
    return [start + 2 * j for j in range(terms)]


def taylor_flow(op: DilationShift, trig: str, K: int) -> TaylorFlowResult:
    """Term-by-term operator action on the first K Taylor terms of sin or cos,
    using exact values only; returns the exact truncated polynomial.

    If the pole degree shift - 1 has the same parity as the expansion, the
    flow genuinely hits the pole and PoleHit is raised (independently of K:
    the statement concerns the full series). If it has the opposite parity,
    term-by-term application silently loses the pole's contribution; the
    result then carries anomaly_missing=True and the matching closed form's
    parity-violating term is exactly what is missing.
    """
    if K < 4:
        raise ValueError("K must be >= 4")
    if trig not in ("sin", "cos"):
        raise ValueError("trig must be 'sin' or 'cos'")
    if op.kind not in ("zeta", "beta"):
        raise UnsupportedExpression("taylor_flow drives zeta/beta kinds")
    if op.shift.denominator != 1:
        raise UnsupportedExpression("taylor_flow needs an integer shift for exact values")
    shift = int(op.shift)

    anomaly_missing = False
    if op.kind == "zeta":
        pole_degree = shift - 1
        if pole_degree >= 0:
            pole_parity_odd = pole_degree % 2 == 1
            if (trig == "sin") == pole_parity_odd:
                raise PoleHit(pole_degree)
            anomaly_missing = True

    degrees = _trig_degrees(trig, K)
    coeffs = [PiPolynomial()] * (degrees[-1] + 1)
    for j, d in enumerate(degrees):
        tag, value = _exact_value(op.kind, Fraction(shift - d))
        if tag == "numeric":
            raise UnsupportedExpression(
                f"no exact value at argument {shift - d}; taylor_flow stays in Q[pi]"
            )
        if tag == "pole":  # defensive; parity analysis above already raised
            raise PoleHit(d)
        c = Fraction((-1) ** j, factorial(d))
        coeffs[d] = value * c if isinstance(value, PiPolynomial) else PiPolynomial((value * c,))
    return TaylorFlowResult(PiXPolynomial(coeffs), anomaly_missing)


def parity_anomaly(poly: PiXPolynomial, expected_parity: str) -> Optional[PiXPolynomial]:
    """The unique monomial of `poly` whose x-parity contradicts
    `expected_parity`, or None. Raises MultipleAnomalies if uniqueness fails
    (that indicates a registry bug)."""
    if expected_parity not in ("odd", "even"):
        raise ValueError("expected_parity must be 'odd' or 'even'")
    want_odd = expected_parity == "odd"
    violating = [
        (j, c)
        for j in range(poly.degree + 1)
        if not (c := poly.coeff(j)).is_zero() and (j % 2 == 1) != want_odd
    ]
    if not violating:
        return None
    if len(violating) > 1:
        raise MultipleAnomalies(
            f"{len(violating)} parity-violating terms at degrees {[j for j, _ in violating]}"
        )
    j, c = violating[0]
    return PiXPolynomial.monomial(j, c)


@dataclass(frozen=True)
class ExtractedValue:
    """One special value inferred by coefficient matching.

    `argument` is the integer point, `value` the solved exact value
    (Fraction, or PiPolynomial when a power of pi is involved), `matched`
    whether it agrees with the module's independent exact value.
    """

    argument: int
    value: ExactValue
    matched: bool


def extract_special_values(identity_id: str, terms: int = 8) -> list[ExtractedValue]:
    """Equate term-by-term operator coefficients against the exact closed-form
    coefficients of a registry identity (anomaly term removed first) and solve
    for the operator's special values.

    Each unknown kind(shift - degree) appears at exactly one degree; the
    solved value is marked `matched` when it equals the independent exact
    value. Raises InconsistentSystem if one argument is solved twice with
    different values, ValueError if the identity has no exact right side.
    """
    from . import registry  # local import: registry declares records using engine types

    rec = registry.get_identity(identity_id)
    rhs = rec.exact_rhs(max_degree=2 * terms + 2)
    if rhs is None:
        raise ValueError(f"identity {identity_id!r} has no exact polynomial right side")
    if rec.op is None or rec.trig is None:
        raise ValueError(f"identity {identity_id!r} is not an operator-on-trig identity")
    if rec.anomaly_parity != "none":
        anom = parity_anomaly(rhs, rec.anomaly_parity)
        if anom is not None:
            rhs = rhs - anom

    shift = int(rec.op.shift)
    solved: dict[int, ExactValue] = {}
    out: list[ExtractedValue] = []
    for j, d in enumerate(_trig_degrees(rec.trig, terms)):
        factor = Fraction((-1) ** j, factorial(d))
        if rec.gamma_shift is not None:
            g = int(rec.gamma_shift) + d
            if g <= 0:
                continue  # degree annihilated by 1/Gamma: carries no equation
            factor *= Fraction(1, factorial(g - 1))
        arg = shift - d
        value = rhs.coeff(d) / factor
        if value.is_rational():
            value = value.as_rational()
        if arg in solved and solved[arg] != value:
            raise InconsistentSystem(f"argument {arg} solved twice: {solved[arg]} vs {value}")
        solved[arg] = value
        tag, independent = _exact_value(rec.op.kind, Fraction(arg))
        # PiPolynomial.__eq__ accepts rationals, so mixed comparisons stay exact
        matched = tag == "exact" and independent == value
        out.append(ExtractedValue(arg, value, bool(matched)))
    return out
