"""Real positive definite binary quadratic forms Q(m, n) = a m^2 + b m n + c n^2.

A form is valid iff a > 0 and its discriminant D = 4ac - b^2 is positive;
its sublevel sets {Q <= x} are then ellipse discs of area (2 pi / sqrt(D)) x.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .errors import FormError, ParseError

__all__ = [
    "QuadraticForm",
    "FormConstants",
    "parse_form",
    "kappa",
    "lambda1",
    "form_constants",
]


@dataclass(frozen=True)
class QuadraticForm:
    """Coefficients (a, b, c) with the discriminant cached at construction."""

    a: float
    b: float
    c: float
    disc: float = field(init=False)

    def __post_init__(self):
        a, b, c = float(self.a), float(self.b), float(self.c)
        if not (math.isfinite(a) and math.isfinite(b) and math.isfinite(c)):
            raise FormError(f"coefficients must be finite, got ({a}, {b}, {c})")
        if not a > 0:
            raise FormError(f"a must be positive for a definite form, got a = {a}")
        d = 4.0 * a * c - b * b
        if not d > 0:
            raise FormError(
                f"discriminant 4ac - b^2 must be positive for a definite form, got D = {d}"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "disc", d)

    def evaluate(self, m, n):
        """Q(m, n), computed as a*m^2 + (b*m)*n + c*n^2 in binary64.

        Accepts scalars or numpy arrays (elementwise).
        """
        return self.a * m * m + (self.b * m) * n + self.c * n * n

    __call__ = evaluate

    def scaled(self, t: float) -> "QuadraticForm":
        """The form t*Q for t > 0."""
        if not t > 0:
            raise FormError(f"scale factor must be positive, got {t}")
        return QuadraticForm(t * self.a, t * self.b, t * self.c)

    def __str__(self):
        return f"({self.a:.17g}, {self.b:.17g}, {self.c:.17g})"


@dataclass(frozen=True)
class FormConstants:
    """Derived geometric constants of a form.

    kappa     -- min of Q(u, v)/(u^2 + v^2) over nonzero real pairs
    lambda1   -- smallest nonzero value Q(m, n) at integer pairs
    main_all  -- 2 pi / sqrt(D), density of all lattice points per unit x
    main_prim -- 12 / (pi sqrt(D)), density of primitive lattice points
    """

    kappa: float
    lambda1: float
    main_all: float
    main_prim: float


_COEFF_RE = re.compile(r"^([+-]?)\s*(?:sqrt\(\s*(\d+)\s*\)|(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?))$")


def _parse_coeff(token: str) -> float:
    m = _COEFF_RE.match(token.strip())
    if m is None:
        raise ParseError(f"cannot parse coefficient {token!r}; expected a decimal or sqrt(k)")
    sign = -1.0 if m.group(1) == "-" else 1.0
    if m.group(2) is not None:
        return sign * math.sqrt(int(m.group(2)))
    return sign * float(m.group(3))


def parse_form(text: str) -> QuadraticForm:
    """Parse a form literal "a,b,c" where each entry is a decimal or sqrt(k).

    Examples: "1,0,1", "1,sqrt(2),sqrt(3)", "1,-sqrt(2),2".
    Raises ParseError on malformed input, FormError if the parsed
    coefficients are not positive definite.
    """
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"form literal must have three comma-separated entries, got {text!r}")
    a, b, c = (_parse_coeff(p) for p in parts)
    return QuadraticForm(a, b, c)


def kappa(form: QuadraticForm) -> float:
    """Smallest value of Q(u, v)/(u^2 + v^2) over nonzero real (u, v).

    For b = 0 the ratio is extremal along the axes, so kappa = min(a, c).
    Otherwise the two critical directions of the ratio have slopes
    tau = ((a - c) +/- sqrt((a - c)^2 + b^2)) / b and the minimum is
    attained at one of them.
    """
    a, b, c = form.a, form.b, form.c
    if b == 0.0:
        return min(a, c)
    root = math.sqrt((a - c) * (a - c) + b * b)
    tau_plus = ((a - c) + root) / b
    tau_minus = ((a - c) - root) / b

    def ratio(t: float) -> float:
        return form.evaluate(t, 1.0) / (t * t + 1.0)

    return min(ratio(tau_plus), ratio(tau_minus))


def lambda1(form: QuadraticForm) -> float:
    """Smallest nonzero value of Q over integer pairs.

    Candidates are enumerated under the bound Q <= min(a, c), which is
    nonempty because Q(1, 0) = a and Q(0, 1) = c; ties at the bound are
    kept.
    """
    a, b, c, d = form.a, form.b, form.c, form.disc
    cap = min(a, c)
    best = math.inf
    n_max = int(math.sqrt(4.0 * a * cap / d)) + 1
    for n in range(-n_max, n_max + 1):
        disc = 4.0 * a * cap - d * float(n * n)
        if disc < 0.0:
            continue
        sq = math.sqrt(disc)
        m_lo = math.ceil((-b * n - sq) / (2.0 * a)) - 1
        m_hi = math.floor((-b * n + sq) / (2.0 * a)) + 1
        for m in range(m_lo, m_hi + 1):
            if m == 0 and n == 0:
                continue
            v = form.evaluate(float(m), float(n))
            if v <= cap and v < best:
                best = v
    return best


def form_constants(form: QuadraticForm) -> FormConstants:
    """All derived constants of the form in one record."""
    root_d = math.sqrt(form.disc)
    return FormConstants(
        kappa=kappa(form),
        lambda1=lambda1(form),
        main_all=2.0 * math.pi / root_d,
        main_prim=12.0 / (math.pi * root_d),
    )
