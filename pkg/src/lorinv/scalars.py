"""Exact scalar arithmetic: rationals and Laurent polynomials in the boost unit.

The unit ``s`` stands for e^(beta/2), so t = s**2 = e^beta.  Hyperbolic
entries of boost matrices and the half-parameter entries of conjugators
all live in one Laurent ring:

    cosh(beta)   = (s**2 + s**-2) / 2        sinh(beta)   = (s**2 - s**-2) / 2
    cosh(beta/2) = (s + s**-1) / 2           sinh(beta/2) = (s - s**-1) / 2

Rationals embed as the power-0 part.  Values are immutable.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import EvaluationOverflow, NotAUnit

Rational = Fraction

_COEFF_TYPES = (int, Fraction)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


class BoostScalar:
    """Laurent polynomial in the boost unit s with rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for power, c in coeffs.items():
                c = _as_fraction(c)
                if c != 0:
                    clean[int(power)] = c
        self._coeffs = clean

    # -- construction -------------------------------------------------

    @classmethod
    def from_rational(cls, value) -> "BoostScalar":
        return cls({0: _as_fraction(value)})

    @classmethod
    def unit(cls, power: int, coeff=1) -> "BoostScalar":
        """The monomial coeff * s**power."""
        return cls({power: _as_fraction(coeff)})

    @classmethod
    def coerce(cls, value) -> "BoostScalar":
        if isinstance(value, BoostScalar):
            return value
        return cls.from_rational(value)

    # -- inspection ---------------------------------------------------

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def coeff(self, power: int) -> Fraction:
        return self._coeffs.get(power, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_rational(self) -> bool:
        return all(p == 0 for p in self._coeffs)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} has nonzero boost powers")
        return self._coeffs.get(0, Fraction(0))

    def is_unit(self) -> bool:
        return len(self._coeffs) == 1

    def min_power(self) -> int:
        return min(self._coeffs) if self._coeffs else 0

    def max_power(self) -> int:
        return max(self._coeffs) if self._coeffs else 0

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "BoostScalar":
        other = BoostScalar.coerce(other)
        out = dict(self._coeffs)
        for p, c in other._coeffs.items():
            out[p] = out.get(p, Fraction(0)) + c
        return BoostScalar(out)

    __radd__ = __add__

    def __neg__(self) -> "BoostScalar":
        return BoostScalar({p: -c for p, c in self._coeffs.items()})

    def __sub__(self, other) -> "BoostScalar":
        return self + (-BoostScalar.coerce(other))

    def __rsub__(self, other) -> "BoostScalar":
        return BoostScalar.coerce(other) + (-self)

    def __mul__(self, other) -> "BoostScalar":
        other = BoostScalar.coerce(other)
        out: dict[int, Fraction] = {}
        for p1, c1 in self._coeffs.items():
            for p2, c2 in other._coeffs.items():
                p = p1 + p2
                out[p] = out.get(p, Fraction(0)) + c1 * c2
        return BoostScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BoostScalar":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "BoostScalar":
        """Inverse of a unit c * s**k; raises NotAUnit otherwise."""
        if len(self._coeffs) != 1:
            raise NotAUnit(f"{self} is not a single nonzero term")
        (power, c), = self._coeffs.items()
        return BoostScalar({-power: 1 / c})

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, _COEFF_TYPES):
            other = BoostScalar.from_rational(other)
        if not isinstance(other, BoostScalar):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    # -- evaluation -----------------------------------------------------

    def eval_numeric(self, beta: float) -> float:
        """Substitute s = e^(beta/2) and return a float."""
        if not math.isfinite(beta):
            raise ValueError("beta must be finite")
        total = 0.0
        try:
            for p, c in self._coeffs.items():
                total += float(c) * math.exp(p * beta / 2.0)
        except OverflowError as exc:
            raise EvaluationOverflow(f"s^{p} at beta={beta}") from exc
        if math.isinf(total):
            raise EvaluationOverflow(f"{self} at beta={beta}")
        return total

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"BoostScalar({self._coeffs!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for p in sorted(self._coeffs, reverse=True):
            c = self._coeffs[p]
            if p == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"s^{p}")
            else:
                parts.append(f"{c}*s^{p}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = BoostScalar()
ONE = BoostScalar.from_rational(1)
MINUS_ONE = BoostScalar.from_rational(-1)
HALF = BoostScalar.from_rational(Fraction(1, 2))


def cosh_beta(multiple: int = 1) -> BoostScalar:
    """cosh(multiple * beta) = (s^(2m) + s^(-2m)) / 2."""
    if multiple == 0:
        return ONE
    m = 2 * multiple
    return BoostScalar({m: Fraction(1, 2), -m: Fraction(1, 2)})


def sinh_beta(multiple: int = 1) -> BoostScalar:
    """sinh(multiple * beta) = (s^(2m) - s^(-2m)) / 2."""
    if multiple == 0:
        return ZERO
    m = 2 * multiple
    return BoostScalar({m: Fraction(1, 2), -m: Fraction(-1, 2)})


def cosh_half_beta(multiple: int = 1) -> BoostScalar:
    """cosh(multiple * beta / 2) = (s^m + s^-m) / 2."""
    if multiple == 0:
        return ONE
    return BoostScalar({multiple: Fraction(1, 2), -multiple: Fraction(1, 2)})


def sinh_half_beta(multiple: int = 1) -> BoostScalar:
    """sinh(multiple * beta / 2) = (s^m - s^-m) / 2."""
    if multiple == 0:
        return ZERO
    return BoostScalar({multiple: Fraction(1, 2), -multiple: Fraction(-1, 2)})


def _fraction_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def boost_sqrt(value: BoostScalar) -> BoostScalar | None:
    """Square root in the Laurent ring, or None when no exact root exists.

    The root is normalized to have a positive leading coefficient.
    """
    if value.is_zero():
        return ZERO
    lo, hi = value.min_power(), value.max_power()
    if (hi - lo) % 2 or lo % 2:
        return None
    # shift to an ordinary polynomial c[0..m] with c[0] != 0
    m = hi - lo
    c = [value.coeff(lo + i) for i in range(m + 1)]
    g0 = _fraction_sqrt(c[0])
    if g0 is None or g0 == 0:
        return None
    half = m // 2
    g = [Fraction(0)] * (half + 1)
    g[0] = g0
    for i in range(1, half + 1):
        acc = sum(g[j] * g[i - j] for j in range(1, i))
        g[i] = (c[i] - acc) / (2 * g0)
    root = BoostScalar({lo // 2 + i: g[i] for i in range(half + 1)})
    if root * root != value:
        return None
    if root.coeff(root.max_power()) < 0:
        root = -root
    return root


def dominant_sign(value: BoostScalar) -> int:
    """Sign of a scalar whose numeric sign is beta-independent.

    The sign is read off the extreme powers (which dominate for large
    |beta|) or the power-0 coefficient for plain rationals, then verified
    numerically at beta in {-1, 0.5, 2}.  Raises ValueError when the
    scalar changes sign, which cannot happen for the time-time entry of
    a Lorentz matrix.
    """
    if value.is_zero():
        return 0
    hi, lo = value.max_power(), value.min_power()
    if hi > 0:
        sign = 1 if value.coeff(hi) > 0 else -1
    elif lo < 0:
        sign = 1 if value.coeff(lo) > 0 else -1
    else:
        sign = 1 if value.coeff(0) > 0 else -1
    for beta in (-1.0, 0.5, 2.0):
        v = value.eval_numeric(beta)
        if v * sign <= 0:
            raise ValueError(f"{value} does not have constant sign over beta")
    return sign
