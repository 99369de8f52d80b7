"""Evaluable section spaces built from a closed catalog of basis tokens.

Each token is a scalar function with closed-form derivatives of every
order, so collocation rows at arbitrary derivative orders are exact (no
finite differences anywhere in the pipeline).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateInterval,
    EmptyBasis,
    MissingConstant,
    OutOfInterval,
    SpecError,
)

TWO_PI = 2.0 * math.pi


def _arr(x):
    """Array view keeping an extended-precision dtype when given one."""
    a = np.asarray(x)
    if not np.issubdtype(a.dtype, np.floating):
        a = a.astype(float)
    return a


@dataclass(frozen=True)
class BasisToken:
    """One generator of a section space.

    kind is one of: constant, monomial, cos, sin, cosh, sinh, x_cos,
    x_sin, exp.  ``power`` is used by monomial, ``rate`` by exp.
    """

    kind: str
    power: int = 0
    rate: float = 0.0

    def __post_init__(self):
        if self.kind not in _EVALUATORS:
            raise SpecError(f"unknown basis token kind {self.kind!r}")
        if self.kind == "monomial" and self.power < 1:
            raise SpecError("monomial power must be a positive integer")

    def deriv(self, order: int, x):
        """order-th derivative at x (scalar or ndarray)."""
        return _EVALUATORS[self.kind](self, order, x)

    def label(self) -> str:
        """The spec-file spelling of this token."""
        if self.kind == "constant":
            return "1"
        if self.kind == "monomial":
            return "x" if self.power == 1 else f"x^{self.power}"
        if self.kind == "exp":
            return f"exp({self.rate:g})"
        return {"x_cos": "x*cos", "x_sin": "x*sin"}.get(self.kind, self.kind)


def _ev_constant(tok, order, x):
    x = _arr(x)
    return np.ones_like(x) if order == 0 else np.zeros_like(x)


def _ev_monomial(tok, order, x):
    x = _arr(x)
    p = tok.power
    if order > p:
        return np.zeros_like(x)
    coef = math.factorial(p) / math.factorial(p - order)
    return coef * x ** (p - order)


def _ev_cos(tok, order, x):
    x = _arr(x)
    return [np.cos, lambda t: -np.sin(t), lambda t: -np.cos(t), np.sin][order % 4](x)


def _ev_sin(tok, order, x):
    x = _arr(x)
    return [np.sin, np.cos, lambda t: -np.sin(t), lambda t: -np.cos(t)][order % 4](x)


def _ev_cosh(tok, order, x):
    x = _arr(x)
    return np.cosh(x) if order % 2 == 0 else np.sinh(x)


def _ev_sinh(tok, order, x):
    x = _arr(x)
    return np.sinh(x) if order % 2 == 0 else np.cosh(x)


def _ev_x_cos(tok, order, x):
    # Leibniz: D^r (x cos x) = x D^r cos x + r D^(r-1) cos x
    x = _arr(x)
    out = x * _ev_cos(tok, order, x)
    if order >= 1:
        out = out + order * _ev_cos(tok, order - 1, x)
    return out


def _ev_x_sin(tok, order, x):
    x = _arr(x)
    out = x * _ev_sin(tok, order, x)
    if order >= 1:
        out = out + order * _ev_sin(tok, order - 1, x)
    return out


def _ev_exp(tok, order, x):
    x = _arr(x)
    return tok.rate**order * np.exp(tok.rate * x)


_EVALUATORS = {
    "constant": _ev_constant,
    "monomial": _ev_monomial,
    "cos": _ev_cos,
    "sin": _ev_sin,
    "cosh": _ev_cosh,
    "sinh": _ev_sinh,
    "x_cos": _ev_x_cos,
    "x_sin": _ev_x_sin,
    "exp": _ev_exp,
}


def parse_token(text: str) -> BasisToken:
    """Parse the spec-file token syntax into a BasisToken."""
    t = text.strip()
    if t == "1":
        return BasisToken("constant")
    if t == "x":
        return BasisToken("monomial", power=1)
    if t.startswith("x^"):
        try:
            p = int(t[2:])
        except ValueError:
            raise SpecError(f"bad monomial token {text!r}") from None
        if p < 2:
            raise SpecError(f"monomial power in {text!r} must be >= 2")
        return BasisToken("monomial", power=p)
    simple = {"cos": "cos", "sin": "sin", "cosh": "cosh", "sinh": "sinh",
              "x*cos": "x_cos", "x*sin": "x_sin"}
    if t in simple:
        return BasisToken(simple[t])
    if t.startswith("exp(") and t.endswith(")"):
        try:
            a = float(t[4:-1])
        except ValueError:
            raise SpecError(f"bad exp token {text!r}") from None
        return BasisToken("exp", rate=a)
    raise SpecError(f"unknown basis token {text!r}")


@dataclass(frozen=True)
class SectionSpace:
    """An m-dimensional section space on one knot interval."""

    tokens: tuple[BasisToken, ...]
    lo: float
    hi: float

    @property
    def dimension(self) -> int:
        return len(self.tokens)

    @property
    def interval(self) -> tuple[float, float]:
        return (self.lo, self.hi)

    def labels(self) -> list[str]:
        return [t.label() for t in self.tokens]


def make_section_space(tokens, interval) -> SectionSpace:
    """Build a section space, validating the standing assumptions."""
    tokens = tuple(
        parse_token(t) if isinstance(t, str) else t for t in tokens
    )
    if not tokens:
        raise EmptyBasis("a section space needs at least one basis token")
    if tokens[0].kind != "constant":
        raise MissingConstant("the first basis token must be the constant 1")
    lo, hi = float(interval[0]), float(interval[1])
    if not lo < hi:
        raise DegenerateInterval(f"interval [{lo}, {hi}] is not increasing")
    return SectionSpace(tokens=tokens, lo=lo, hi=hi)


def eval_basis(space: SectionSpace, deriv_order: int, x) -> np.ndarray:
    """Values of the deriv_order-th derivative of every token at x.

    x may be a scalar (returns shape (m,)) or an array of points
    (returns shape (npts, m)).  Points must lie in the closed interval,
    up to a small rounding slack.
    """
    if deriv_order < 0:
        raise SpecError("derivative order must be nonnegative")
    xs = _arr(x)
    slack = 1e-12 * max(1.0, abs(space.lo), abs(space.hi))
    if np.any(xs < space.lo - slack) or np.any(xs > space.hi + slack):
        raise OutOfInterval(
            f"point outside section interval [{space.lo}, {space.hi}]"
        )
    cols = [tok.deriv(deriv_order, xs) for tok in space.tokens]
    return np.stack(cols, axis=-1)


def collocation_matrix(space: SectionSpace, x: float, orders) -> np.ndarray:
    """Rows D^r u_h(x) for the requested derivative orders."""
    return np.array([eval_basis(space, r, x) for r in orders])


# Known necessary bounds on the interval length for the differentiated
# span to remain an EC-space.  Keyed by the sorted token labels.
_CRITICAL_LENGTHS = {
    frozenset(["1", "x", "cos", "sin"]): TWO_PI,
    frozenset(["1", "x", "cos", "sin", "x*cos", "x*sin"]): TWO_PI,
    frozenset(["1", "x", "x^2", "cos", "sin"]): 8.9868189,
}


def critical_length_table() -> list[dict]:
    """The warning table in a JSON-friendly form."""
    return [
        {"tokens": sorted(key), "max_length": bound}
        for key, bound in _CRITICAL_LENGTHS.items()
    ]


def critical_length_warning(space: SectionSpace) -> str | None:
    """Warn when the interval is too long for a known catalog span."""
    key = frozenset(space.labels())
    bound = _CRITICAL_LENGTHS.get(key)
    if bound is None:
        return None
    length = space.hi - space.lo
    if length >= bound:
        return (
            f"interval [{space.lo:g}, {space.hi:g}] has length {length:g} "
            f">= {bound:g}, the critical length of span "
            f"{{{', '.join(space.labels())}}}: the differentiated span "
            "is no longer an EC-space"
        )
    return None
