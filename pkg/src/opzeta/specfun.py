"""Numeric and exact evaluation of zeta, Hurwitz zeta, Dirichlet beta, and
1/Gamma, plus the Hankel-contour integral representations used as an
independent cross-check route.

Numeric kernels run in mpmath working precision sized to the cancellation
headroom of the argument, then round once to a complex double. A module lock
serializes the (process-global) precision context, so the public functions
stay safe for concurrent use.
"""

from __future__ import annotations

import math
import threading
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from .errors import ContourClipped, PoleAtOne, PrecisionLoss
from .exactnum import (
    PiPolynomial,
    PiXPolynomial,
    bernoulli_number,
    bernoulli_polynomial,
    euler_number,
)

_MP_LOCK = threading.Lock()

_TWO_PI = 2 * math.pi

# Validated accuracy domain of the Euler-Maclaurin evaluator.
_EM_RE_MIN = -25.0
_EM_IM_MAX = 50.0


@dataclass(frozen=True)
class EvalResult:
    """Numeric value with the producing algorithm's claimed error bound."""

    value: complex
    abs_error_estimate: float
    is_pole: bool = False


def _mpc_of(s) -> "mpmath.mpc":
    if isinstance(s, Fraction):
        return mpmath.mpc(mpmath.mpf(s.numerator) / s.denominator)
    return mpmath.mpc(s)


def _bern_mpf(n: int) -> "mpmath.mpf":
    b = bernoulli_number(n)
    return mpmath.mpf(b.numerator) / b.denominator


def _em_params(sig: float, tau: float) -> tuple[int, int]:
    """(N, dps): cutoff and working digits for Euler-Maclaurin at s."""
    n = max(40, int(1.3 * tau) + 20)
    if sig < 0:
        n = max(n, int(1.5 * (-sig)) + 20)
    dps = 25 + int(max(0.0, -sig) * math.log10(n + 2)) + int(0.12 * tau)
    return n, dps


def _hurwitz_em_core(s, a: float, target: float = 1e-12, k_max: int = 40):
    """Euler-Maclaurin value of zeta(s, a), inside an mp precision context.

    Returns (mpc value, float error bound). Correction terms are added
    adaptively (defaults N=40, K=15) until the standard remainder bound
    |B_{2K+2}/(2K+2)! (s)_{2K+1} (N+a)^{-s-2K-1} (s+2K+1)/(sigma+2K+1)|
    drops below `target` or K is exhausted.
    """
    s = _mpc_of(s)
    sig = float(mpmath.re(s))
    tau = abs(float(mpmath.im(s)))
    n_cut, _ = _em_params(sig, tau)
    a_mp = mpmath.mpf(a)
    part = mpmath.fsum((n + a_mp) ** (-s) for n in range(n_cut))
    base = n_cut + a_mp
    val = part + base ** (1 - s) / (s - 1) + base ** (-s) / 2
    rising = s
    err = math.inf
    for k in range(1, k_max + 1):
        term = _bern_mpf(2 * k) / mpmath.factorial(2 * k) * rising * base ** (-s - 2 * k + 1)
        val += term
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        if sig + 2 * k + 1 <= 0:
            continue
        nxt = abs(_bern_mpf(2 * k + 2) / mpmath.factorial(2 * k + 2) * rising * base ** (-s - 2 * k - 1))
        err = float(nxt * abs((s + 2 * k + 1) / (sig + 2 * k + 1)))
        if k >= 15 and err < target:
            break
    return val, err


def _check_validated_domain(s, caller: str) -> None:
    sig, tau = s.real, abs(s.imag)
    if sig < _EM_RE_MIN or tau > _EM_IM_MAX:
        warnings.warn(
            f"{caller}: s={s} outside the validated domain "
            f"(Re s >= {_EM_RE_MIN}, |Im s| <= {_EM_IM_MAX}); "
            "returning best-effort value",
            PrecisionLoss,
            stacklevel=3,
        )


def zeta_em(s) -> EvalResult:
    """Riemann zeta via Euler-Maclaurin continuation of sum n^-s.

    Accuracy <= 1e-10 (typically ~1e-13) for Re s >= -25, |Im s| <= 50,
    up to the double-rounding floor |value|*1e-15 where the value is huge.
    Raises PoleAtOne within 1e-13 of s = 1.
    """
    return hurwitz_zeta(s, 1.0)


def hurwitz_zeta(s, a) -> EvalResult:
    """Hurwitz zeta(s, a) for 0 < a <= 1 by the same Euler-Maclaurin route."""
    a = float(a)
    if not 0 < a <= 1:
        raise ValueError("a must lie in (0, 1]")
    sc = complex(_mpc_of(s))
    if abs(sc - 1) < 1e-13:
        raise PoleAtOne(f"s={sc} is within 1e-13 of the pole at s=1")
    _check_validated_domain(sc, "hurwitz_zeta")
    sig = sc.real
    tau = abs(sc.imag)
    _, dps = _em_params(sig, tau)
    with _MP_LOCK, mpmath.workdps(dps):
        val, err = _hurwitz_em_core(s, a)
        out = complex(val)
    err = max(err, abs(out) * 1e-15 + 1e-16)
    return EvalResult(out, err)


def zeta_neg_int(n: int) -> Fraction:
    """Exact zeta(-n) = (-1)^n B_{n+1}/(n+1) for positive integer n.

    Zero exactly for even n (the trivial zeros, since B_{odd>=3} = 0).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction((-1) ** n) * bernoulli_number(n + 1) / (n + 1)


def zeta_even_pi_form(n: int) -> PiPolynomial:
    """Exact zeta(n) for even n >= 2 as a rational multiple of pi^n:
    zeta(2m) = (-1)^(m+1) B_{2m} (2 pi)^(2m) / (2 (2m)!)."""
    if n < 2 or n % 2:
        raise ValueError("n must be an even integer >= 2")
    m = n // 2
    q = Fraction((-1) ** (m + 1)) * bernoulli_number(n) * (2 ** n) / (2 * factorial(n))
    return PiPolynomial.pi_power(q, n)


def beta_nonpos_int(n: int) -> Fraction:
    """Exact beta(-n) for n >= 0: E_n / 2 for even n, 0 for odd n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2:
        return Fraction(0)
    return Fraction(euler_number(n), 2)


def beta_odd_pi_form(n: int) -> PiPolynomial:
    """Exact beta(n) for odd n >= 1 as a rational multiple of pi^n:
    beta(2m+1) = (-1)^m E_{2m} pi^(2m+1) / (4^(m+1) (2m)!)."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd integer >= 1")
    m = (n - 1) // 2
    q = Fraction((-1) ** m * euler_number(2 * m), 4 ** (m + 1) * factorial(2 * m))
    return PiPolynomial.pi_power(q, n)


def dirichlet_beta(s) -> EvalResult:
    """Dirichlet beta (the L-function of the nontrivial character mod 4),
    entire, via 4^-s [zeta(s, 1/4) - zeta(s, 3/4)].

    The two Hurwitz pole terms cancel analytically; the difference of the
    Euler-Maclaurin pole parts is combined through expm1 so s = 1 needs no
    special casing beyond the 0/0 limit.
    """
    sc = complex(_mpc_of(s))
    _check_validated_domain(sc, "dirichlet_beta")
    sig = sc.real
    tau = abs(sc.imag)
    n_cut, dps = _em_params(sig, tau)
    with _MP_LOCK, mpmath.workdps(dps):
        smp = _mpc_of(s)
        a1 = mpmath.mpf(1) / 4
        a2 = mpmath.mpf(3) / 4
        part = mpmath.fsum((n + a1) ** (-smp) - (n + a2) ** (-smp) for n in range(n_cut))
        b1 = n_cut + a1
        b2 = n_cut + a2
        # [b1^(1-s) - b2^(1-s)]/(s-1) = -b1^(1-s) expm1((1-s) log(b2/b1))/(s-1)
        w = (1 - smp) * mpmath.log(b2 / b1)
        if abs(smp - 1) < 1e-13:
            pole = b1 ** (1 - smp) * mpmath.log(b2 / b1)
        else:
            pole = -(b1 ** (1 - smp)) * mpmath.expm1(w) / (smp - 1)
        val = part + pole + (b1 ** (-smp) - b2 ** (-smp)) / 2
        err_total = 0.0
        for base, sign in ((b1, 1), (b2, -1)):
            rising = smp
            err = math.inf
            for k in range(1, 41):
                term = _bern_mpf(2 * k) / mpmath.factorial(2 * k) * rising * base ** (-smp - 2 * k + 1)
                val += sign * term
                rising *= (smp + 2 * k - 1) * (smp + 2 * k)
                if sig + 2 * k + 1 <= 0:
                    continue
                nxt = abs(_bern_mpf(2 * k + 2) / mpmath.factorial(2 * k + 2) * rising * base ** (-smp - 2 * k - 1))
                err = float(nxt * abs((smp + 2 * k + 1) / (sig + 2 * k + 1)))
                if k >= 15 and err < 1e-12:
                    break
            err_total += err
        out = complex(mpmath.mpf(4) ** (-smp) * val)
        scale = float(abs(mpmath.mpf(4) ** (-smp)))
    err_total = scale * err_total + abs(out) * 1e-15 + 1e-16
    return EvalResult(out, err_total)


def recip_gamma(s) -> complex:
    """1/Gamma(s), evaluated as an entire function (never as 1/Gamma-value).

    Exactly zero at nonpositive real integers; this is the annihilation
    mechanism the operator engine relies on. Absolute accuracy 1e-12 where
    the value has order <= 1, relative 1e-12 elsewhere (|s| <= 30).
    """
    sc = complex(_mpc_of(s))
    if sc.imag == 0.0 and sc.real <= 0 and sc.real == int(sc.real):
        return complex(0.0)
    with _MP_LOCK, mpmath.workdps(50):
        return complex(mpmath.rgamma(_mpc_of(s)))


def _ray_cutoff(sig: float, tau: float, delta: float) -> float:
    # |t^(s-1)| e^(-r cos delta) < 1e-18 along the rays
    r = 60.0
    for _ in range(4):
        r = (45.0 + max(0.0, sig - 1.0) * math.log(r) + tau * math.pi + 5.0) / math.cos(delta)
    return r


def _hankel_integral(kernel, rho: float, delta: float, r_max: float):
    """Integrate kernel over the Hankel contour: in along the ray at angle
    -(pi - delta), around the circle |t| = rho, out along +(pi - delta).
    Returns (mpc integral, mpf quadrature error, float segment magnitude)."""
    theta = math.pi - delta
    e_up = mpmath.exp(1j * theta)
    e_lo = mpmath.exp(-1j * theta)
    up, e1 = mpmath.quad(lambda u: kernel(u * e_up) * e_up, [rho, r_max], error=True)
    lo, e2 = mpmath.quad(lambda u: kernel(u * e_lo) * e_lo, [rho, r_max], error=True)
    circ, e3 = mpmath.quad(
        lambda ph: kernel(rho * mpmath.exp(1j * ph)) * 1j * rho * mpmath.exp(1j * ph),
        [-theta, theta],
        error=True,
    )
    magnitude = float(abs(up) + abs(lo) + abs(circ))
    return up - lo + circ, e1 + e2 + e3, magnitude


def hankel_zeta(s, rho: float = math.pi, delta: float = 0.15) -> EvalResult:
    """zeta(s) for Re s < 1 from the loop integral of t^(s-1)/(e^-t - 1)
    times Gamma(1-s)/(2 pi i).

    t^(s-1) uses the principal branch (cut along the negative real axis);
    the rays hug the cut at angle +/-(pi - delta). rho must stay below 2*pi
    or the kernel poles at +/-2*pi*i would be enclosed (ContourClipped).
    """
    sc = complex(_mpc_of(s))
    if sc.real >= 1:
        raise ValueError("hankel_zeta requires Re s < 1")
    if not 0 < rho < _TWO_PI:
        raise ContourClipped(f"rho={rho} must lie in (0, 2*pi) to exclude the kernel poles at +/-2*pi*i")
    if not 0 < delta < math.pi / 2:
        raise ValueError("delta must lie in (0, pi/2)")
    r_max = _ray_cutoff(sc.real, abs(sc.imag), delta)
    with _MP_LOCK, mpmath.workdps(30):
        smp = _mpc_of(s)

        def kernel(t):
            return mpmath.power(t, smp - 1) / mpmath.expm1(-t)

        integral, qerr, magnitude = _hankel_integral(kernel, rho, delta, r_max)
        pref = mpmath.gamma(1 - smp) / (2j * mpmath.pi)
        val = complex(pref * integral)
        err = float(abs(pref) * qerr) + abs(val) * 1e-14 + 1e-14
        # branch terms nearly cancel close to (but not at) integer s
        near_int = abs(sc.real - round(sc.real)) < 1e-9 and abs(sc.imag) < 1e-9
        cancel = float(abs(integral)) < 1e-12 * magnitude
        if cancel and not near_int:
            warnings.warn("hankel_zeta: severe cancellation between contour segments", PrecisionLoss, stacklevel=2)
            err = max(err, float(abs(pref)) * magnitude * 1e-24)
    return EvalResult(val, err)


def lerch_hankel(s, x: float, delta: float = 0.15, rho: float | None = None) -> EvalResult:
    """Abel-regularized sum of e^(i n x) / n^s over n >= 1 for 0 < x < 2*pi,
    Re s < 1, by a Hankel loop of t^(s-1)/(e^(-t-ix) - 1) times
    Gamma(1-s)/(2 pi i).

    At s = 0 the loop reduces to the t = 0 residue, 1/(e^-ix - 1). The kernel
    poles sit at t = i(2*pi*k - x); the default rho = min(x, 2*pi - x)/2 keeps
    them strictly outside the circle.
    """
    if not 0 < x < _TWO_PI:
        raise ValueError("x must lie in (0, 2*pi)")
    sc = complex(_mpc_of(s))
    if sc.real >= 1:
        raise ValueError("lerch_hankel requires Re s < 1")
    pole_dist = min(x, _TWO_PI - x)
    if rho is None:
        rho = pole_dist / 2
    if rho >= pole_dist:
        raise ContourClipped(
            f"rho={rho} would enclose the kernel pole at distance {pole_dist:.6g} from the origin"
        )
    r_max = _ray_cutoff(sc.real, abs(sc.imag), delta)
    with _MP_LOCK, mpmath.workdps(30):
        smp = _mpc_of(s)
        xm = mpmath.mpf(x)

        def kernel(t):
            return mpmath.power(t, smp - 1) / mpmath.expm1(-t - 1j * xm)

        integral, qerr, _ = _hankel_integral(kernel, rho, delta, r_max)
        pref = mpmath.gamma(1 - smp) / (2j * mpmath.pi)
        val = complex(pref * integral)
        err = float(abs(pref) * qerr) + abs(val) * 1e-13 + 1e-13
        if pole_dist < 0.05:
            warnings.warn("lerch_hankel: kernel pole close to the contour", PrecisionLoss, stacklevel=2)
            err = max(err, 1e-8)
    return EvalResult(val, err)


def clausen_closed_form(parity: str, m: int) -> PiXPolynomial:
    """Exact closed form of the trigonometric series with polynomial sum:

      cos, weight n^-2m      ->  (-1)^(m-1) (2 pi)^(2m) / (2 (2m)!)   B_2m(x / 2 pi)
      sin, weight n^-(2m-1)  ->  (-1)^m     (2 pi)^(2m-1) / (2 (2m-1)!) B_(2m-1)(x / 2 pi)

    valid for x in [0, 2*pi]. Built by rescaling `bernoulli_polynomial`;
    coefficient of x^j is a single rational multiple of pi^(M - j).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if parity == "cos":
        order = 2 * m
        sign = Fraction((-1) ** (m - 1))
    elif parity == "sin":
        order = 2 * m - 1
        sign = Fraction((-1) ** m)
    else:
        raise ValueError("parity must be 'sin' or 'cos'")
    bp = bernoulli_polynomial(order)
    coeffs = []
    for j in range(order + 1):
        cj = bp.coeff(j).as_rational()
        q = sign * cj * (2 ** (order - j)) / (2 * factorial(order))
        coeffs.append(PiPolynomial.pi_power(q, order - j))
    return PiXPolynomial(coeffs)


def functional_equation_residual(s) -> float:
    """|zeta(s) - 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)|, all factors
    numeric. A validation-only cross-check; never used as a definition."""
    zs = zeta_em(s).value
    z1s = zeta_em(1 - complex(s)).value
    sc = complex(s)
    with _MP_LOCK, mpmath.workdps(40):
        pref = complex(
            mpmath.mpf(2) ** sc
            * mpmath.pi ** (sc - 1)
            * mpmath.sin(mpmath.pi * sc / 2)
            * mpmath.gamma(1 - mpmath.mpc(sc))
        )
    return abs(zs - pref * z1s)
