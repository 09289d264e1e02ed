"""Growth-rate algebra for symbolic series verdicts.

A :class:`SequenceRule` is the closed catalog of scalar sequences the tool can
reason about without numerics: ``value(k) = coeff * k**degree * ratio**k``,
plus explicit finite lists. Products of catalog rules stay in the catalog,
which is what makes convergence/divergence of squared series decidable by
table lookup instead of fake numeric "limits".
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import SchemaError

CONVERGES = "converges"
DIVERGES = "diverges"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class GrowthRate:
    """Asymptotic order k**degree * ratio**k of a positive sequence."""

    degree: float = 0.0
    ratio: float = 1.0

    def __post_init__(self):
        if not (self.ratio > 0):
            raise SchemaError("ratio", "growth ratio must be positive")

    def times(self, other: "GrowthRate") -> "GrowthRate":
        return GrowthRate(self.degree + other.degree, self.ratio * other.ratio)

    def power(self, m: int) -> "GrowthRate":
        return GrowthRate(self.degree * m, self.ratio**m)

    @property
    def bounded(self) -> bool:
        return self.ratio < 1.0 or (self.ratio == 1.0 and self.degree <= 0)

    @property
    def vanishing(self) -> bool:
        """Whether the sequence tends to zero."""
        return self.ratio < 1.0 or (self.ratio == 1.0 and self.degree < 0)

    @property
    def bounded_below(self) -> bool:
        """Whether the sequence stays away from zero."""
        return not self.vanishing

    def square_series_verdict(self) -> str:
        """Verdict for the series of squared values."""
        if self.ratio < 1.0:
            return CONVERGES
        if self.ratio > 1.0:
            return DIVERGES
        return CONVERGES if 2.0 * self.degree < -1.0 else DIVERGES


@dataclass(frozen=True)
class SequenceRule:
    """One member of the rule catalog: coeff * k**degree * ratio**k.

    ``values`` replaces the law with an explicit finite list ("custom finite"),
    in which case no symbolic verdicts are available.
    """

    coeff: complex = 1.0
    degree: float = 0.0
    ratio: float = 1.0
    values: tuple[complex, ...] | None = None

    def __post_init__(self):
        if self.values is None and not (self.ratio > 0):
            raise SchemaError("ratio", "rule ratio must be positive")

    @property
    def symbolic(self) -> bool:
        return self.values is None

    @property
    def reach(self) -> float:
        return math.inf if self.symbolic else len(self.values)

    def value(self, k: int):
        """Evaluate at k >= 1."""
        if self.values is not None:
            if not 1 <= k <= len(self.values):
                raise IndexError(f"custom rule has no value at k={k}")
            return self.values[k - 1]
        return self.coeff * float(k) ** self.degree * self.ratio**k

    @property
    def rate(self) -> GrowthRate:
        if not self.symbolic:
            raise ValueError("custom finite rule has no growth rate")
        return GrowthRate(self.degree, self.ratio)

    @property
    def nonzero_everywhere(self) -> bool:
        if self.values is not None:
            return all(v != 0 for v in self.values)
        return self.coeff != 0

    def modulus_key(self) -> tuple:
        """Key under which two rules produce equal moduli at every k."""
        if self.values is not None:
            return ("custom", tuple(abs(v) for v in self.values))
        return ("law", abs(self.coeff), self.degree, self.ratio)

    def times(self, other: "SequenceRule") -> "SequenceRule":
        if not (self.symbolic and other.symbolic):
            raise ValueError("can only multiply symbolic rules")
        return SequenceRule(
            self.coeff * other.coeff,
            self.degree + other.degree,
            self.ratio * other.ratio,
        )

    def square_series_verdict(self) -> str:
        """Verdict for the series of |value(k)|**2 over k."""
        if not self.symbolic:
            return INCONCLUSIVE
        if self.coeff == 0:
            return CONVERGES
        return self.rate.square_series_verdict()

    def describe(self) -> str:
        if self.values is not None:
            return f"custom({len(self.values)} values)"
        parts = []
        if self.coeff != 1.0 or (self.degree == 0 and self.ratio == 1.0):
            c = self.coeff
            parts.append(f"{c.real:g}" if c.imag == 0 else f"({c.real:g}{c.imag:+g}i)")
        if self.degree != 0:
            parts.append("k" if self.degree == 1 else f"k^{self.degree:g}")
        if self.ratio != 1.0:
            parts.append(f"{self.ratio:g}^k")
        return "*".join(parts)


_ATOM = re.compile(
    r"""^(?:
        (?P<one_over_k>1/k) |
        (?P<kpow>k(?:\^(?P<deg>-?\d+(?:\.\d+)?))?) |
        (?P<geo>(?P<base>\d+(?:\.\d+)?)\^(?P<sign>-?)k) |
        (?P<const>-?\d+(?:\.\d+)?)
    )$""",
    re.VERBOSE,
)


def parse_rule(text: str) -> SequenceRule:
    """Parse a catalog rule string: products of 'c', 'k', 'k^d', 'r^k', '1/k'.

    Examples: "k", "1/k", "k^2", "2^k", "2^-k", "0.5^k*k", "3".
    """
    rule = SequenceRule()
    cleaned = text.strip().replace(" ", "")
    # allow "a/k" style division by splitting on '/' when the tail is 'k'
    for piece in cleaned.split("*"):
        if not piece:
            raise SchemaError("rule", f"empty factor in {text!r}")
        m = _ATOM.match(piece)
        if m is None:
            raise SchemaError("rule", f"unrecognized rule factor {piece!r}")
        if m.group("one_over_k"):
            rule = rule.times(SequenceRule(degree=-1.0))
        elif m.group("kpow"):
            deg = float(m.group("deg")) if m.group("deg") else 1.0
            rule = rule.times(SequenceRule(degree=deg))
        elif m.group("geo"):
            base = float(m.group("base"))
            if base <= 0:
                raise SchemaError("rule", "geometric base must be positive")
            ratio = 1.0 / base if m.group("sign") == "-" else base
            rule = rule.times(SequenceRule(ratio=ratio))
        else:
            rule = rule.times(SequenceRule(coeff=float(m.group("const"))))
    return rule
