"""Real special functions: log-gamma, gamma, digamma, Gauss 2F1 and the
incomplete beta integral.

Every function either returns a finite float or raises ``DomainError``;
nothing here returns NaN silently.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

EULER_GAMMA = 0.57721566490153286061

_SERIES_RTOL = 1e-16
_SERIES_MAXTERMS = 20000


class DomainError(ValueError):
    """Argument outside the supported domain of a special function."""


@dataclass(frozen=True)
class SpecialValue:
    value: float
    abs_error_estimate: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise DomainError(f"non-finite special function value {self.value}")
        if not (math.isfinite(self.abs_error_estimate) and self.abs_error_estimate >= 0):
            raise ValueError("abs_error_estimate must be finite and >= 0")

    def __float__(self):
        return self.value


def _is_nonpos_int(v: float) -> bool:
    return v <= 0 and v == math.floor(v)


def _near_int(v: float, tol: float = 1e-9) -> bool:
    return abs(v - round(v)) <= tol * max(1.0, abs(v))


def _sinpi(z: float) -> float:
    """sin(pi z) with exact reduction, accurate near the integers."""
    n = round(z)
    r = z - n
    s = math.sin(math.pi * r)
    return -s if n % 2 else s


def ln_gamma(z: float) -> float:
    """ln Gamma(z) for z > 0."""
    if not z > 0 or not math.isfinite(z):
        raise DomainError(f"ln_gamma requires z > 0, got {z}")
    return math.lgamma(z)


def reflect_gamma(z: float) -> float:
    """Gamma(z) for any real non-integer z (and positive integers).

    Negative arguments go through the reflection formula
    Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    """
    if _is_nonpos_int(z):
        raise DomainError(f"Gamma has a pole at {z}")
    if z > 0:
        return math.exp(ln_gamma(z))
    return math.pi / (_sinpi(z) * math.exp(ln_gamma(1.0 - z)))


def rgamma(z: float) -> float:
    """1/Gamma(z), zero at the poles."""
    if _is_nonpos_int(z):
        return 0.0
    if z > 0:
        return math.exp(-ln_gamma(z))  # no overflow for tiny z
    return _sinpi(z) * math.exp(ln_gamma(1.0 - z)) / math.pi


_BERNOULLI_TERMS = (
    1.0 / 12,
    -1.0 / 120,
    1.0 / 252,
    -1.0 / 240,
    1.0 / 132,
    -691.0 / 32760,
    1.0 / 12,
)


def digamma(z: float) -> float:
    """Psi(z) = Gamma'(z)/Gamma(z) for z > 0.

    Recurrence Psi(z) = Psi(z+1) - 1/z shifts the argument to z >= 8, where
    the asymptotic expansion is accurate to ~1e-15.
    """
    if not z > 0 or not math.isfinite(z):
        raise DomainError(f"digamma requires z > 0, got {z}")
    shift = 0.0
    while z < 8.0:
        shift -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    series = 0.0
    p = inv2
    for coef in _BERNOULLI_TERMS:
        series += coef * p
        p *= inv2
    return shift + math.log(z) - 0.5 / z - series


# ---------------------------------------------------------------------------
# Gauss hypergeometric function


def _series_2f1(a, b, c, z):
    """Direct power series; returns (value, abs error estimate)."""
    term = 1.0
    total = 1.0
    mag = 1.0
    small = 0
    for n in range(_SERIES_MAXTERMS):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        mag = max(mag, abs(term))
        if term == 0.0:
            break
        if abs(term) <= _SERIES_RTOL * abs(total):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
    else:
        raise DomainError(f"2F1 series did not converge for z={z}")
    # rounding grows with the largest partial term
    return total, 4e-16 * (mag + abs(total)) * (1 + math.sqrt(n + 1))


def _conn_one_minus_z(a, b, c, z):
    """Connection to 1 - z (Abramowitz & Stegun 15.3.6), c - a - b not integer."""
    s = c - a - b
    w = 1.0 - z
    f1, e1 = _hyp(a, b, 1.0 - s, w)
    f2, e2 = _hyp(c - a, c - b, 1.0 + s, w)
    gc = reflect_gamma(c)
    c1 = gc * reflect_gamma(s) * rgamma(c - a) * rgamma(c - b)
    c2 = gc * reflect_gamma(-s) * rgamma(a) * rgamma(b) * w**s
    val = c1 * f1 + c2 * f2
    err = abs(c1) * e1 + abs(c2) * e2 + 1e-15 * (abs(c1 * f1) + abs(c2 * f2))
    return val, err


def _conn_inverse_z(a, b, c, z):
    """Connection to 1/z for z < 0, b - a not integer."""
    gc = reflect_gamma(c)
    mz = -z
    f1, e1 = _hyp(a, 1.0 - c + a, 1.0 - b + a, 1.0 / z)
    f2, e2 = _hyp(b, 1.0 - c + b, 1.0 - a + b, 1.0 / z)
    c1 = gc * reflect_gamma(b - a) * rgamma(b) * rgamma(c - a) * mz ** (-a)
    c2 = gc * reflect_gamma(a - b) * rgamma(a) * rgamma(c - b) * mz ** (-b)
    val = c1 * f1 + c2 * f2
    err = abs(c1) * e1 + abs(c2) * e2 + 1e-15 * (abs(c1 * f1) + abs(c2 * f2))
    return val, err


def _psi_any(x):
    """Digamma on the whole real line minus the poles."""
    if x > 0:
        return digamma(x)
    if _is_nonpos_int(x):
        raise DomainError(f"digamma pole at {x}")
    n = round(x)
    r = x - n
    return digamma(1.0 - x) - math.pi * math.cos(math.pi * r) / math.sin(math.pi * r)


def _rgamma_psi(x):
    """psi(x) / Gamma(x), finite through x = 0."""
    if abs(x) < 0.5:
        return (x * _psi_any(1.0 + x) - 1.0) * rgamma(1.0 + x)
    if _is_nonpos_int(x):
        return (-1.0) ** (-x + 1) * math.factorial(int(-x))
    return _psi_any(x) * rgamma(x)


def _rgamma_ratio(a, ap):
    """Gamma(ap) / Gamma(a) for ap = a + m, integer m >= 0 (a rising factorial)."""
    r = 1.0
    x = a
    while x < ap - 0.5:
        r *= x
        x += 1.0
    return r


def _conn_one_minus_z_log(a, b, m, z):
    """Logarithmic connection to 1 - z for c = a + b + m, integer m >= 0
    (Abramowitz & Stegun 15.3.10 / 15.3.11)."""
    w = 1.0 - z
    lnw = math.log(w)
    c = a + b + m
    gc = reflect_gamma(c)
    total = 0.0
    if m > 0:
        pref = reflect_gamma(m) * gc * rgamma(a + m) * rgamma(b + m)
        term = 1.0
        finite = term
        for n in range(1, m):
            term *= (a + n - 1) * (b + n - 1) / (n * (1 - m + n - 1)) * w
            finite += term
        total += pref * finite
    pref2 = gc * rgamma(a) * rgamma(b)
    if not (_is_nonpos_int(a) or _is_nonpos_int(b)):
        # n = 0 term, with rgamma(x) psi(x) kept finite for x near 0
        ap, bp = a + m, b + m
        coef = 1.0 / math.factorial(m)
        head = pref2 * (lnw + EULER_GAMMA - _psi_any(m + 1.0))
        head += gc * (_rgamma_psi(ap) * rgamma(b) * _rgamma_ratio(a, ap) + _rgamma_psi(bp) * rgamma(a) * _rgamma_ratio(b, bp))
        head *= coef
        # n >= 1; digammas start at n = 1 to avoid cancelling psi(x) + 1/x
        psi_1 = 1.0 - EULER_GAMMA
        psi_m = _psi_any(m + 2.0)
        psi_a = _psi_any(ap + 1.0)
        psi_b = _psi_any(bp + 1.0)
        coef *= ap * bp / (m + 1) * w
        acc = 0.0
        mag = 0.0
        small = 0
        for n in range(1, _SERIES_MAXTERMS):
            t = coef * (lnw - psi_1 - psi_m + psi_a + psi_b)
            acc += t
            mag = max(mag, abs(t))
            if abs(pref2 * t) <= _SERIES_RTOL * abs(head + pref2 * acc) and n > 2:
                small += 1
                if small >= 2:
                    break
            else:
                small = 0
            coef *= (ap + n) * (bp + n) / ((n + 1) * (n + m + 1)) * w
            psi_1 += 1.0 / (n + 1)
            psi_m += 1.0 / (n + m + 1)
            psi_a += 1.0 / (ap + n)
            psi_b += 1.0 / (bp + n)
        else:
            raise DomainError(f"2F1 logarithmic series did not converge for z={z}")
        total -= (-w) ** m * (head + pref2 * acc)
        err = 1e-15 * (abs(total) + abs(head) + abs(pref2) * mag * (1 + abs(lnw)))
    else:
        err = 1e-15 * abs(total)
    return total, err


def _conn_one_minus_z_int(a, b, c, z):
    """1 - z connection when c - a - b is (numerically) an integer."""
    m = round(c - a - b)
    # snap b so that c - a - b is exactly m
    b = c - a - m
    if m >= 0:
        return _conn_one_minus_z_log(a, b, m, z)
    f, e = _conn_one_minus_z_log(c - a, c - b, -m, z)
    p = (1.0 - z) ** m
    return p * f, p * e


def _hyp(a, b, c, z):
    if a == 0.0 or b == 0.0 or z == 0.0:
        return 1.0, 0.0
    if _is_nonpos_int(c):
        raise DomainError(f"2F1 undefined: c={c} is a non-positive integer")
    if z > 1.0:
        raise DomainError(f"2F1 evaluated only for real z <= 1, got {z}")
    if z == 1.0:
        s = c - a - b
        if s <= 0:
            raise DomainError(f"2F1(a,b,c;1) diverges when c-a-b={s} <= 0")
        val = reflect_gamma(c) * reflect_gamma(s) * rgamma(c - a) * rgamma(c - b)
        return val, 4e-15 * abs(val)
    if abs(z) <= 0.5:
        return _series_2f1(a, b, c, z)
    if z > 0.5:
        # Euler transform when it turns the series into a polynomial
        if _is_nonpos_int(c - a) or _is_nonpos_int(c - b):
            f, e = _series_2f1(c - a, c - b, c, z)
            p = (1.0 - z) ** (c - a - b)
            return p * f, p * e
        if _is_nonpos_int(a) or _is_nonpos_int(b):
            return _series_2f1(a, b, c, z)
        if _near_int(c - a - b):
            return _conn_one_minus_z_int(a, b, c, z)
        return _conn_one_minus_z(a, b, c, z)
    # z < -0.5
    if z < -2.0:
        if _is_nonpos_int(a) or _is_nonpos_int(b):
            return _series_pfaff(a, b, c, z)
        if _near_int(b - a):
            # the Pfaff image lands in the 1 - z zone with integer c - a - b
            return _series_pfaff(a, b, c, z)
        return _conn_inverse_z(a, b, c, z)
    return _series_pfaff(a, b, c, z)


def _series_pfaff(a, b, c, z):
    """Pfaff transform 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1))."""
    w = z / (z - 1.0)
    f, e = _hyp(a, c - b, c, w)
    p = (1.0 - z) ** (-a)
    return p * f, abs(p) * e


def hyp2f1(a: float, b: float, c: float, z: float) -> SpecialValue:
    """Gauss hypergeometric 2F1(a, b; c; z) for real z <= 1, with error estimate."""
    val, err = _hyp(float(a), float(b), float(c), float(z))
    return SpecialValue(val, err)


def gauss_2f1(a: float, b: float, c: float, z: float) -> float:
    """Gauss hypergeometric 2F1(a, b; c; z) for real z <= 1."""
    return hyp2f1(a, b, c, z).value


# ---------------------------------------------------------------------------
# Beta functions


def beta(z: float, w: float) -> float:
    if not (z > 0 and w > 0):
        raise DomainError(f"beta requires z, w > 0, got {z}, {w}")
    return math.exp(ln_gamma(z) + ln_gamma(w) - ln_gamma(z + w))


def _betacf(x, a, b):
    """Continued fraction for the incomplete beta (modified Lentz)."""
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 10000):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h
    raise DomainError(f"incomplete beta continued fraction failed at x={x}, a={a}, b={b}")


def _front(x, a, b):
    return math.exp(a * math.log(x) + b * math.log1p(-x)) / a


def incomplete_beta(x: float, z: float, w: float) -> float:
    """B(x; z, w) = int_0^x t^(z-1) (1-t)^(w-1) dt (not regularized)."""
    if not (0.0 <= x <= 1.0) or not (z > 0 and w > 0):
        raise DomainError(f"incomplete_beta domain: x={x}, z={z}, w={w}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return beta(z, w)
    if x < (z + 1.0) / (z + w + 2.0):
        return _front(x, z, w) * _betacf(x, z, w)
    y = 1.0 - x
    return beta(z, w) - _front(y, w, z) * _betacf(y, w, z)
