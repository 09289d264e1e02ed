"""Weight-sequence model: explicit windows plus declared extension patterns.

A sequence is always an explicit complex window; anything claimed beyond the
window must come from a declared pattern. Symbolic verdicts (convergence,
zero-set certainty) are derived from the pattern class only, never from
numeric evidence, so the library cannot fake analysis of an infinite object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import IndexOutOfSupport, SchemaError, UnsupportedTermRule
from .rates import CONVERGES, DIVERGES, INCONCLUSIVE, SequenceRule, parse_rule

FINITE = "finite"
UNILATERAL = "unilateral"
BILATERAL = "bilateral"

DEFAULT_WINDOW = 256
MAX_HORIZON = 10**6

FINITE_CERTAIN = "finite-certain"
INFINITE_CERTAIN = "infinite-certain"
UNKNOWN = "unknown"

BASIS_SYMBOLIC = "symbolic-from-growth-class"
BASIS_NUMERIC = "numeric-window-only"


# ---------------------------------------------------------------------------
# patterns


@dataclass(frozen=True)
class Periodic:
    """Verbatim repetition of a fixed block, anchored at the first index."""

    block: tuple[complex, ...]

    def __post_init__(self):
        if len(self.block) < 1:
            raise SchemaError("pattern.block", "periodic block must be nonempty")

    @property
    def period(self) -> int:
        return len(self.block)

    @property
    def has_zero(self) -> bool:
        return any(v == 0 for v in self.block)


@dataclass(frozen=True)
class BlockWithZeros:
    """Periodic zero/rule template; rule slots follow named sequence laws.

    ``template`` entries are 0 (structural zero, every period) or a rule name.
    Slot s of period k evaluates to ``rules[name].value(k)``, so two slots
    sharing a name carry equal values in every period. Unilateral shapes only.
    """

    template: tuple
    rules: dict[str, SequenceRule] = field(hash=False)

    def __post_init__(self):
        if len(self.template) < 1:
            raise SchemaError("pattern.template", "template must be nonempty")
        if not any(slot == 0 for slot in self.template):
            raise SchemaError("pattern.template", "template must contain a zero")
        for slot in self.template:
            if slot != 0 and slot not in self.rules:
                raise SchemaError("pattern.rules", f"no rule named {slot!r}")

    @property
    def period(self) -> int:
        return len(self.template)

    @property
    def symbolic(self) -> bool:
        return all(r.symbolic for r in self.rules.values())

    def slot_of(self, n: int) -> int:
        return (n - 1) % self.period

    def period_of(self, n: int) -> int:
        return (n - 1) // self.period + 1

    def value(self, n: int) -> complex:
        slot = self.template[self.slot_of(n)]
        if slot == 0:
            return 0.0
        return self.rules[slot].value(self.period_of(n))


BOUNDED = "bounded"
POLYNOMIAL = "polynomial"
GEOMETRIC = "geometric"


@dataclass(frozen=True)
class Growth:
    """Declared modulus envelope for the nonzero weights.

    bounded:    |w_n| <= bound
    polynomial: lo * max(1,|n|)**degree <= |w_n| <= hi * max(1,|n|)**degree
    geometric:  lo * ratio**|n|        <= |w_n| <= hi * ratio**|n|

    Structural zeros in the window are exempt from the lower bound; a positive
    ``lo`` certifies that no further zeros occur outside the window.
    """

    klass: str
    bound: float = 0.0
    degree: float = 0.0
    ratio: float = 1.0
    lo: float = 0.0
    hi: float = 0.0

    def __post_init__(self):
        if self.klass not in (BOUNDED, POLYNOMIAL, GEOMETRIC):
            raise SchemaError("pattern.class", f"unknown growth class {self.klass!r}")
        if self.klass == BOUNDED and self.bound <= 0:
            raise SchemaError("pattern.bound", "bound must be positive")
        if self.klass != BOUNDED and (self.lo < 0 or self.hi < self.lo or self.hi <= 0):
            raise SchemaError("pattern", "need 0 <= lo <= hi, hi > 0")
        if self.klass == GEOMETRIC and self.ratio <= 0:
            raise SchemaError("pattern.ratio", "ratio must be positive")

    def envelope(self, n: int) -> tuple[float, float]:
        if self.klass == BOUNDED:
            return 0.0, self.bound
        base = max(1, abs(n))
        g = float(base) ** self.degree if self.klass == POLYNOMIAL else self.ratio ** abs(n)
        return self.lo * g, self.hi * g

    @property
    def zero_free_outside_window(self) -> bool:
        return self.klass != BOUNDED and self.lo > 0


Pattern = Periodic | BlockWithZeros | Growth | None


# ---------------------------------------------------------------------------
# the sequence itself


class WeightSequence:
    """A unilateral/bilateral/finite family of complex weights.

    The window holds explicit values for indices ``first_index ..
    first_index + len(window) - 1`` (1-based for unilateral/finite shapes).
    Exact zeros are structural: values are never snapped to zero on load.
    """

    def __init__(
        self,
        shape: str,
        window,
        pattern: Pattern = None,
        first_index: int | None = None,
        dim: int | None = None,
    ):
        if shape not in (FINITE, UNILATERAL, BILATERAL):
            raise SchemaError("shape", f"unknown shape {shape!r}")
        self.shape = shape
        self.window = np.asarray(window, dtype=complex)
        if self.window.ndim != 1 or len(self.window) < 1:
            raise SchemaError("window", "window must be a nonempty vector")
        if not np.all(np.isfinite(self.window.view(float))):
            raise SchemaError("window", "weights must be finite")
        if shape == BILATERAL:
            if first_index is None:
                raise SchemaError("offset", "bilateral sequence needs an offset")
            self.first_index = int(first_index)
        else:
            if first_index not in (None, 1):
                raise SchemaError("offset", f"{shape} sequences start at index 1")
            self.first_index = 1
        if shape == FINITE:
            if dim is None:
                dim = len(self.window) + 1
            if dim != len(self.window) + 1:
                raise SchemaError("dim", "finite(k) needs window length k-1 exactly")
            if pattern is not None:
                raise SchemaError("pattern", "finite sequences take no pattern")
        self.dim = dim
        self.pattern = pattern
        self._validate_pattern()

    # -- support bookkeeping ------------------------------------------------

    @property
    def last_index(self) -> int:
        return self.first_index + len(self.window) - 1

    @property
    def window_extent(self) -> int:
        """Largest |index| covered by the window."""
        if self.shape == BILATERAL:
            return min(-self.first_index, self.last_index)
        return self.last_index

    def window_indices(self) -> np.ndarray:
        return np.arange(self.first_index, self.last_index + 1)

    def in_support(self, n: int) -> bool:
        if self.shape == FINITE:
            return 1 <= n <= self.dim - 1
        if self.shape == UNILATERAL:
            return n >= 1
        return True

    @property
    def value_reach(self) -> float:
        """Largest index at which a value can be produced (unilateral side)."""
        if isinstance(self.pattern, Periodic):
            return math.inf
        if isinstance(self.pattern, BlockWithZeros):
            if self.pattern.symbolic:
                return math.inf
            reach = min(r.reach for r in self.pattern.rules.values())
            return max(self.last_index, reach * self.pattern.period)
        return self.last_index

    @property
    def zero_reach(self) -> float:
        """Largest index up to which the zero set is known."""
        if isinstance(self.pattern, (Periodic, BlockWithZeros)):
            return math.inf
        if isinstance(self.pattern, Growth) and self.pattern.zero_free_outside_window:
            return math.inf
        return self.window_extent

    @property
    def structural_period(self) -> int | None:
        if isinstance(self.pattern, Periodic):
            return self.pattern.period
        if isinstance(self.pattern, BlockWithZeros):
            return self.pattern.period
        return None

    # -- evaluation -----------------------------------------------------------

    def weight(self, n: int) -> complex:
        """The weight at index n, extending by the pattern where declared."""
        if not self.in_support(n):
            raise IndexOutOfSupport(f"index {n} outside the {self.shape} index set")
        if self.first_index <= n <= self.last_index:
            return complex(self.window[n - self.first_index])
        if isinstance(self.pattern, Periodic):
            return complex(self.pattern.block[(n - self.first_index) % self.pattern.period])
        if isinstance(self.pattern, BlockWithZeros):
            slot = self.pattern.template[self.pattern.slot_of(n)]
            if slot == 0:
                return 0.0
            try:
                return complex(self.pattern.value(n))
            except IndexError:
                raise IndexOutOfSupport(
                    f"index {n} beyond the reach of rule {slot!r}"
                ) from None
        raise IndexOutOfSupport(f"index {n} outside the window and the pattern "
                                "does not supply values")

    def values(self, indices) -> np.ndarray:
        return np.array([self.weight(int(n)) for n in indices], dtype=complex)

    def values_up_to(self, horizon: int) -> np.ndarray:
        """Vectorized weights for indices 1..min(horizon, reach)."""
        if self.shape == BILATERAL:
            raise ValueError("values_up_to is for unilateral/finite sequences")
        stop = int(min(horizon, self.value_reach))
        if self.shape == FINITE:
            stop = min(stop, self.dim - 1)
        out = np.zeros(stop, dtype=complex)
        take = min(stop, len(self.window))
        out[:take] = self.window[:take]
        if stop > len(self.window):
            n = np.arange(len(self.window) + 1, stop + 1)
            if isinstance(self.pattern, Periodic):
                block = np.asarray(self.pattern.block, dtype=complex)
                out[len(self.window):] = block[(n - 1) % self.pattern.period]
            elif isinstance(self.pattern, BlockWithZeros):
                pat = self.pattern
                vals = np.zeros(len(n), dtype=complex)
                ks = (n - 1) // pat.period + 1
                slots = (n - 1) % pat.period
                for s, slot in enumerate(pat.template):
                    mask = slots == s
                    if slot != 0 and np.any(mask):
                        rule = pat.rules[slot]
                        if rule.values is not None:
                            vals[mask] = [rule.values[int(k) - 1] for k in ks[mask]]
                        else:
                            kk = ks[mask].astype(float)
                            vals[mask] = rule.coeff * kk**rule.degree * rule.ratio**kk
                out[len(self.window):] = vals
            else:
                raise IndexOutOfSupport("horizon exceeds the window and the pattern "
                                        "does not supply values")
        return out

    # -- validation -----------------------------------------------------------

    def _validate_pattern(self) -> None:
        pat = self.pattern
        if pat is None:
            return
        if isinstance(pat, Periodic):
            block = np.asarray(pat.block, dtype=complex)
            idx = (self.window_indices() - self.first_index) % pat.period
            if not np.array_equal(self.window, block[idx]):
                raise SchemaError("pattern.block",
                                  "window disagrees with the periodic extension")
        elif isinstance(pat, BlockWithZeros):
            if self.shape != UNILATERAL:
                raise SchemaError("pattern", "block-with-zeros requires a "
                                             "unilateral sequence")
            for n in self.window_indices():
                slot = pat.template[pat.slot_of(int(n))]
                w = self.window[n - 1]
                if slot == 0:
                    if w != 0:
                        raise SchemaError(f"window[{n - 1}]",
                                          "template requires an exact zero here")
                    continue
                try:
                    expected = pat.value(int(n))
                except IndexError:
                    raise SchemaError(f"window[{n - 1}]",
                                      f"rule {slot!r} has no value at this index")
                if not np.isclose(w, expected, rtol=1e-12, atol=0.0):
                    raise SchemaError(f"window[{n - 1}]",
                                      f"value disagrees with rule {slot!r}")
        elif isinstance(pat, Growth):
            for n in self.window_indices():
                w = self.window[n - self.first_index]
                if w == 0:
                    continue
                lo, hi = pat.envelope(int(n))
                m = abs(w)
                if m > hi * (1 + 1e-12) or m < lo * (1 - 1e-12):
                    raise SchemaError(f"window[{n - self.first_index}]",
                                      f"|weight|={m:g} outside the declared "
                                      f"envelope [{lo:g}, {hi:g}] at index {n}")


# ---------------------------------------------------------------------------
# zero sets


@dataclass
class ZeroSetReport:
    indices: list[int]
    flag: str
    horizon: int


def zero_set(seq: WeightSequence, horizon: int) -> ZeroSetReport:
    """Indices of zero weights up to the horizon, with a certainty flag.

    ``infinite-certain`` needs a repeating pattern containing a zero;
    ``finite-certain`` needs a pattern excluding zeros outside the window
    (or a finite/complete sequence). Everything else is ``unknown``.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    horizon = min(int(horizon), MAX_HORIZON)

    if seq.shape == BILATERAL:
        lo_n, hi_n = -horizon, horizon
    else:
        lo_n, hi_n = 1, horizon
        if seq.shape == FINITE:
            hi_n = min(hi_n, seq.dim - 1)

    if seq.shape != FINITE and horizon > seq.zero_reach:
        raise IndexOutOfSupport(
            f"horizon {horizon} exceeds the window and the pattern does not "
            "determine the zero set beyond it")

    pat = seq.pattern
    indices: list[int] = []
    for n in range(max(lo_n, seq.first_index), min(hi_n, seq.last_index) + 1):
        if seq.window[n - seq.first_index] == 0:
            indices.append(n)
    if isinstance(pat, Periodic) and pat.has_zero:
        zero_slots = {i for i, v in enumerate(pat.block) if v == 0}
        for n in range(lo_n, hi_n + 1):
            if seq.first_index <= n <= seq.last_index:
                continue
            if (n - seq.first_index) % pat.period in zero_slots:
                indices.append(n)
    elif isinstance(pat, BlockWithZeros):
        zero_slots = {i for i, v in enumerate(pat.template) if v == 0}
        for n in range(max(lo_n, seq.last_index + 1), hi_n + 1):
            if pat.slot_of(n) in zero_slots:
                indices.append(n)
    indices.sort()

    if seq.shape == FINITE:
        flag = FINITE_CERTAIN
    elif isinstance(pat, Periodic):
        flag = INFINITE_CERTAIN if pat.has_zero else FINITE_CERTAIN
    elif isinstance(pat, BlockWithZeros):
        flag = INFINITE_CERTAIN
    elif isinstance(pat, Growth) and pat.zero_free_outside_window:
        flag = FINITE_CERTAIN
    else:
        flag = UNKNOWN
    return ZeroSetReport(indices=indices, flag=flag, horizon=horizon)


# ---------------------------------------------------------------------------
# series probes


@dataclass(frozen=True)
class TermRule:
    """Term map from the fixed catalog.

    kind "weight-sq":        |w_n|^2
    kind "coeff-weight-sq":  |c_n w_n|^2 with coefficients supplied either as
                             an explicit vector (aligned to index 1) or as a
                             catalog rule in n.
    """

    kind: str
    coeffs: tuple[complex, ...] | None = None
    coeff_rule: SequenceRule | None = None

    def __post_init__(self):
        if self.kind not in ("weight-sq", "coeff-weight-sq"):
            raise UnsupportedTermRule(f"unknown term rule {self.kind!r}")
        if self.kind == "coeff-weight-sq":
            if (self.coeffs is None) == (self.coeff_rule is None):
                raise UnsupportedTermRule(
                    "coeff-weight-sq needs exactly one of coeffs / coeff_rule")


@dataclass
class SeriesProbe:
    partial_sums: np.ndarray
    verdict: str
    basis: str
    terms_evaluated: int
    horizon: int


def _symbolic_weight_sq(seq: WeightSequence) -> str | None:
    pat = seq.pattern
    if isinstance(pat, Periodic):
        return DIVERGES if any(v != 0 for v in pat.block) else CONVERGES
    if isinstance(pat, BlockWithZeros):
        verdicts = []
        for name in sorted({s for s in pat.template if s != 0}):
            rule = pat.rules[name]
            if not rule.symbolic:
                return None
            verdicts.append(rule.square_series_verdict())
        if DIVERGES in verdicts:
            return DIVERGES
        if all(v == CONVERGES for v in verdicts):
            return CONVERGES
        return None
    if isinstance(pat, Growth) and pat.klass in (POLYNOMIAL, GEOMETRIC):
        from .rates import GrowthRate

        rate = GrowthRate(pat.degree, pat.ratio if pat.klass == GEOMETRIC else 1.0)
        verdict = rate.square_series_verdict()
        if verdict == DIVERGES and pat.lo <= 0:
            return None
        return verdict
    return None


def _symbolic_coeff_weight_sq(seq: WeightSequence, rule: SequenceRule) -> str | None:
    if not rule.symbolic:
        return None
    pat = seq.pattern
    if rule.coeff == 0:
        return CONVERGES
    if isinstance(pat, Growth) and pat.klass in (POLYNOMIAL, GEOMETRIC):
        from .rates import GrowthRate

        lam = GrowthRate(pat.degree, pat.ratio if pat.klass == GEOMETRIC else 1.0)
        verdict = rule.rate.times(lam).square_series_verdict()
        if verdict == DIVERGES and pat.lo <= 0:
            return None
        return verdict
    if isinstance(pat, (Periodic, BlockWithZeros)):
        from .rates import GrowthRate

        p = pat.period
        coeff_rate_in_k = GrowthRate(rule.degree, rule.ratio**p)
        verdicts = []
        if isinstance(pat, Periodic):
            slot_values = list(pat.block)
        else:
            slot_values = [pat.rules[s] if s != 0 else 0 for s in pat.template]
        for slot in slot_values:
            if slot == 0:
                continue
            if isinstance(slot, SequenceRule):
                if not slot.symbolic:
                    return None
                slot_rate = slot.rate
            else:
                slot_rate = GrowthRate(0.0, 1.0)  # fixed nonzero value
            verdicts.append(coeff_rate_in_k.times(slot_rate).square_series_verdict())
        if not verdicts:
            return CONVERGES
        if DIVERGES in verdicts:
            return DIVERGES
        if all(v == CONVERGES for v in verdicts):
            return CONVERGES
    return None


def series_probe(seq: WeightSequence, term_rule: TermRule, horizon: int) -> SeriesProbe:
    """Partial sums of a declared nonnegative series over the weights.

    A converges/diverges verdict is only ever issued symbolically; numeric
    partial sums alone always yield "inconclusive".
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    horizon = min(int(horizon), MAX_HORIZON)

    if seq.shape == BILATERAL:
        ext = min(horizon, seq.window_extent if not isinstance(seq.pattern, Periodic)
                  else horizon)
        ns = np.arange(-ext, ext + 1)
        vals = seq.values(ns)
    else:
        vals = seq.values_up_to(horizon)
        ns = np.arange(1, len(vals) + 1)

    terms = vals.real**2 + vals.imag**2
    if term_rule.kind == "coeff-weight-sq":
        if term_rule.coeffs is not None:
            c = np.zeros(len(ns), dtype=complex)
            for i, n in enumerate(ns):
                if 1 <= n <= len(term_rule.coeffs):
                    c[i] = term_rule.coeffs[n - 1]
        else:
            c = np.array([term_rule.coeff_rule.value(int(n)) if n >= 1 else 0.0
                          for n in ns], dtype=complex)
        terms = terms * (c.real**2 + c.imag**2)

    partial = np.cumsum(terms)

    verdict: str | None = None
    if seq.shape != FINITE:
        if term_rule.kind == "weight-sq":
            verdict = _symbolic_weight_sq(seq)
        elif term_rule.coeff_rule is not None:
            verdict = _symbolic_coeff_weight_sq(seq, term_rule.coeff_rule)
    if verdict is not None:
        basis = BASIS_SYMBOLIC
    else:
        verdict, basis = INCONCLUSIVE, BASIS_NUMERIC
    return SeriesProbe(partial_sums=partial, verdict=verdict, basis=basis,
                       terms_evaluated=len(terms), horizon=horizon)


# ---------------------------------------------------------------------------
# file format

_PAIR_ERR = "expected a [re, im] pair of finite numbers"


def _parse_pair(value, where: str) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                       for x in value)):
        raise SchemaError(where, _PAIR_ERR)
    z = complex(float(value[0]), float(value[1]))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise SchemaError(where, _PAIR_ERR)
    return z


def _parse_rule_obj(obj, where: str) -> SequenceRule:
    if isinstance(obj, str):
        return parse_rule(obj)
    if not isinstance(obj, dict):
        raise SchemaError(where, "rule must be a string or an object")
    if "values" in obj:
        vals = [_parse_pair(v, f"{where}.values[{i}]")
                for i, v in enumerate(obj["values"])]
        return SequenceRule(values=tuple(vals))
    coeff = obj.get("coeff", [1.0, 0.0])
    if isinstance(coeff, (int, float)):
        coeff = [float(coeff), 0.0]
    return SequenceRule(
        coeff=_parse_pair(coeff, f"{where}.coeff"),
        degree=float(obj.get("degree", 0.0)),
        ratio=float(obj.get("ratio", 1.0)),
    )


def _parse_pattern(obj) -> Pattern:
    if obj is None:
        return None
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError("pattern", "pattern must be null or an object with a kind")
    kind = obj["kind"]
    if kind == "periodic":
        block = [_parse_pair(v, f"pattern.block[{i}]")
                 for i, v in enumerate(obj.get("block", []))]
        return Periodic(block=tuple(block))
    if kind == "block-with-zeros":
        template = []
        for i, slot in enumerate(obj.get("template", [])):
            if slot == 0:
                template.append(0)
            elif isinstance(slot, str):
                template.append(slot)
            else:
                raise SchemaError(f"pattern.template[{i}]",
                                  "slot must be 0 or a rule name")
        rules = {name: _parse_rule_obj(r, f"pattern.rules.{name}")
                 for name, r in obj.get("rules", {}).items()}
        return BlockWithZeros(template=tuple(template), rules=rules)
    if kind == "growth":
        klass = obj.get("class")
        if klass == BOUNDED:
            return Growth(BOUNDED, bound=float(obj.get("bound", 0.0)))
        if klass in (POLYNOMIAL, GEOMETRIC):
            return Growth(klass,
                          degree=float(obj.get("degree", 0.0)),
                          ratio=float(obj.get("ratio", 1.0)),
                          lo=float(obj.get("lo", 0.0)),
                          hi=float(obj.get("hi", 0.0)))
        raise SchemaError("pattern.class", f"unknown growth class {klass!r}")
    raise SchemaError("pattern.kind", f"unknown pattern kind {kind!r}")


def sequence_from_dict(data: dict) -> WeightSequence:
    """Parse the weight-sequence file format (already JSON-decoded)."""
    if not isinstance(data, dict):
        raise SchemaError("$", "top level must be an object")
    shape = data.get("shape")
    if shape not in (FINITE, UNILATERAL, BILATERAL):
        raise SchemaError("shape", "must be finite, unilateral, or bilateral")
    raw = data.get("window")
    if not isinstance(raw, list) or not raw:
        raise SchemaError("window", "must be a nonempty list of [re, im] pairs")
    window = [_parse_pair(v, f"window[{i}]") for i, v in enumerate(raw)]
    first = None
    if shape == BILATERAL:
        if "offset" not in data:
            raise SchemaError("offset", "bilateral sequence needs an offset")
        first = int(data["offset"])
    elif "offset" in data and data["offset"] != 1:
        raise SchemaError("offset", "only bilateral sequences take an offset")
    dim = None
    if shape == FINITE:
        dim = int(data.get("dim", len(window) + 1))
    pattern = _parse_pattern(data.get("pattern"))
    return WeightSequence(shape, window, pattern=pattern, first_index=first, dim=dim)


def _rule_to_dict(rule: SequenceRule):
    if rule.values is not None:
        return {"values": [[v.real, v.imag] for v in rule.values]}
    return {"coeff": [rule.coeff.real, rule.coeff.imag],
            "degree": rule.degree, "ratio": rule.ratio}


def sequence_to_dict(seq: WeightSequence) -> dict:
    out: dict = {"shape": seq.shape}
    if seq.shape == FINITE:
        out["dim"] = seq.dim
    out["window"] = [[w.real, w.imag] for w in seq.window]
    if seq.shape == BILATERAL:
        out["offset"] = seq.first_index
    pat = seq.pattern
    if pat is None:
        out["pattern"] = None
    elif isinstance(pat, Periodic):
        out["pattern"] = {"kind": "periodic",
                          "block": [[v.real, v.imag] for v in pat.block]}
    elif isinstance(pat, BlockWithZeros):
        out["pattern"] = {
            "kind": "block-with-zeros",
            "template": list(pat.template),
            "rules": {k: _rule_to_dict(r) for k, r in sorted(pat.rules.items())},
        }
    else:
        if pat.klass == BOUNDED:
            out["pattern"] = {"kind": "growth", "class": BOUNDED, "bound": pat.bound}
        else:
            out["pattern"] = {"kind": "growth", "class": pat.klass,
                              "degree": pat.degree, "ratio": pat.ratio,
                              "lo": pat.lo, "hi": pat.hi}
    return out
