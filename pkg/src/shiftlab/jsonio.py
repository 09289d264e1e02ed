"""Deterministic JSON emission.

Reports must be byte-identical across reruns with the same seed, so floats are
printed with a fixed 17-significant-digit format and dict insertion order is
preserved verbatim. The stdlib encoder is bypassed for floats only.
"""

from __future__ import annotations

import math
import numpy as np


def _format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError("non-finite value in report")
    return f"{x:.17g}"


def _emit(obj, out: list, indent: int, level: int) -> None:
    pad = " " * (indent * level)
    pad_in = " " * (indent * (level + 1))
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, (int, np.integer)) and not isinstance(obj, bool):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_format_float(float(obj)))
    elif isinstance(obj, str):
        import json

        out.append(json.dumps(obj))
    elif isinstance(obj, complex):
        _emit([obj.real, obj.imag], out, indent, level)
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            if not isinstance(key, str):
                raise TypeError(f"non-string key {key!r}")
            import json

            out.append(pad_in + json.dumps(key) + ": ")
            _emit(value, out, indent, level + 1)
            out.append(",\n" if i + 1 < len(obj) else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            out.append("[]")
            return
        out.append("[\n")
        for i, value in enumerate(seq):
            out.append(pad_in)
            _emit(value, out, indent, level + 1)
            out.append(",\n" if i + 1 < len(seq) else "\n")
        out.append(pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    """Serialize a report to deterministic JSON text."""
    out: list[str] = []
    _emit(obj, out, indent, 0)
    return "".join(out)


def complex_pair(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


def matrix_dump(entries: np.ndarray) -> dict:
    """Row-major [re, im] pair dump with a dim header."""
    a = np.asarray(entries)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix dump requires a square matrix")
    flat = a.reshape(-1)
    return {
        "dim": int(a.shape[0]),
        "entries": [complex_pair(z) for z in flat],
    }


def matrix_load(dump: dict) -> np.ndarray:
    dim = int(dump["dim"])
    entries = dump["entries"]
    if len(entries) != dim * dim:
        raise ValueError("matrix dump entry count does not match dim")
    flat = np.array([complex(re, im) for re, im in entries])
    return flat.reshape(dim, dim)
