"""Finite matrix realizations of weighted shifts.

Truncation is compression: couplings that cross the window edge are dropped,
so identities that hold for the infinite operator are compared on the
interior of the truncation, never on the boundary band.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import IndexOutOfSupport, NumericalFailure
from .sequences import BILATERAL, FINITE, UNILATERAL, WeightSequence

PROV_UNILATERAL = "unilateral"
PROV_BILATERAL = "bilateral"
PROV_BLOCK = "truncated-block"
PROV_DIRECT_SUM = "direct-sum"
PROV_GENERAL = "general"

_SHIFT_KINDS = (PROV_UNILATERAL, PROV_BILATERAL, PROV_BLOCK, PROV_DIRECT_SUM)


@dataclass(frozen=True)
class Provenance:
    kind: str
    start_index: int | None = None
    part_dims: tuple[int, ...] | None = None

    @property
    def is_shift(self) -> bool:
        return self.kind in _SHIFT_KINDS

    @property
    def is_window_truncation(self) -> bool:
        """True when the matrix is a window into an infinite operator."""
        return self.kind in (PROV_UNILATERAL, PROV_BILATERAL)


@dataclass(frozen=True)
class TruncatedShift:
    """Nilpotent shift on C^dim with the given subdiagonal weights."""

    weights: tuple[complex, ...]
    dim: int = 0

    def __post_init__(self):
        d = self.dim if self.dim else len(self.weights) + 1
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "weights", tuple(complex(w) for w in self.weights))
        if d != len(self.weights) + 1 or d < 1:
            raise ValueError("dim must equal len(weights) + 1")

    @property
    def order(self) -> int:
        return len(self.weights)

    def modulus_tuple(self) -> tuple[float, ...]:
        return tuple(abs(w) for w in self.weights)

    def matrix(self) -> "MatrixTruncation":
        m = np.zeros((self.dim, self.dim), dtype=complex)
        for i, w in enumerate(self.weights):
            m[i + 1, i] = w
        return MatrixTruncation(m, Provenance(PROV_BLOCK))


@dataclass
class MatrixTruncation:
    entries: np.ndarray
    provenance: Provenance = field(default_factory=lambda: Provenance(PROV_GENERAL))

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=complex)
        if self.entries.ndim != 2 or self.entries.shape[0] != self.entries.shape[1]:
            raise ValueError("matrix truncation must be square")

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def subdiagonal(self) -> np.ndarray:
        return np.diag(self.entries, -1)

    def is_subdiagonal_only(self) -> bool:
        probe = self.entries.copy()
        np.fill_diagonal(probe[1:, :], 0.0)
        return not np.any(probe)


def truncate_to_matrix(seq: WeightSequence, n: int) -> MatrixTruncation:
    """Compression of the shift to an n-dimensional coordinate subspace.

    Unilateral and finite shapes truncate to span{e_1..e_n}; bilateral shapes
    to the centered span{e_s..e_{s+n-1}} with s = -((n-1)//2). Couplings that
    leave the span are dropped.
    """
    if n < 1:
        raise ValueError("dim must be >= 1")
    m = np.zeros((n, n), dtype=complex)
    if seq.shape == BILATERAL:
        start = -((n - 1) // 2)
        for p in range(n - 1):
            m[p + 1, p] = seq.weight(start + p)
        return MatrixTruncation(m, Provenance(PROV_BILATERAL, start_index=start))
    if seq.shape == FINITE and n > seq.dim:
        raise IndexOutOfSupport(f"finite sequence has dim {seq.dim} < {n}")
    for p in range(n - 1):
        m[p + 1, p] = seq.weight(p + 1)
    kind = PROV_BLOCK if seq.shape == FINITE else PROV_UNILATERAL
    return MatrixTruncation(m, Provenance(kind, start_index=1))


def adjoint_action(m: MatrixTruncation) -> MatrixTruncation:
    """Conjugate transpose; an isometric involution on truncations."""
    return MatrixTruncation(m.entries.conj().T, Provenance(PROV_GENERAL))


def direct_sum(parts: list[MatrixTruncation]) -> MatrixTruncation:
    if not parts:
        raise ValueError("direct_sum needs at least one part")
    dims = tuple(p.dim for p in parts)
    total = sum(dims)
    out = np.zeros((total, total), dtype=complex)
    at = 0
    for p in parts:
        out[at:at + p.dim, at:at + p.dim] = p.entries
        at += p.dim
    return MatrixTruncation(out, Provenance(PROV_DIRECT_SUM, part_dims=dims))


# ---------------------------------------------------------------------------
# polar decomposition


@dataclass
class PolarParts:
    modulus: np.ndarray
    isometry: np.ndarray
    initial_space_dim: int
    final_space_dim: int


def polar_decompose(m: MatrixTruncation, rank_tol: float = 1e-12) -> PolarParts:
    """T = U |T| with U a partial isometry vanishing on ker|T|.

    Shift-structured matrices use the closed form: |T| is the diagonal of
    subdiagonal moduli and U shifts with unimodular phases. General matrices
    go through an SVD.
    """
    a = m.entries
    n = m.dim
    if m.provenance.is_shift and m.is_subdiagonal_only():
        sub = m.subdiagonal()
        mods = np.abs(sub)
        modulus = np.zeros((n, n), dtype=complex)
        isometry = np.zeros((n, n), dtype=complex)
        rank = 0
        for i, w in enumerate(sub):
            modulus[i, i] = mods[i]
            if w != 0:
                isometry[i + 1, i] = w / mods[i]
                rank += 1
        return PolarParts(modulus=modulus, isometry=isometry,
                          initial_space_dim=rank, final_space_dim=rank)
    try:
        w, s, vh = np.linalg.svd(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"SVD did not converge: {exc}") from exc
    cutoff = max(rank_tol, s[0] * n * np.finfo(float).eps) if len(s) else rank_tol
    rank = int(np.sum(s > cutoff))
    v = vh.conj().T
    modulus = (v * s) @ vh
    isometry = w[:, :rank] @ vh[:rank, :]
    return PolarParts(modulus=modulus, isometry=isometry,
                      initial_space_dim=rank, final_space_dim=rank)


# ---------------------------------------------------------------------------
# power interleave


@dataclass
class PowerInterleave:
    """Residue-class split of the k-th power of a unilateral shift.

    ``parts[l]`` collects every k-th original weight starting at l+1; the
    class-l summand of the k-th power itself is the shift with the
    consecutive-product weights in ``power_parts[l]``. ``permutation`` maps
    each interleaved basis position to its direct-sum position (0-based).
    """

    parts: list[WeightSequence]
    power_parts: list[TruncatedShift]
    permutation: np.ndarray
    check_residual: float


def power_interleave(seq: WeightSequence, k: int, n: int) -> PowerInterleave:
    """Split W^k along residue classes mod k and check it on a truncation.

    The residual compares the permuted k-th power of the nk-truncation with
    the direct sum of the class summands, on the interior (the last k rows
    and columns of the power are excluded as truncation boundary).
    """
    if seq.shape != UNILATERAL:
        raise ValueError("power_interleave expects a unilateral sequence")
    if k < 2:
        raise ValueError("power must be >= 2")
    if n < 2:
        raise ValueError("need dim >= 2 per class")
    nk = n * k
    lam = np.array([seq.weight(i) for i in range(1, nk + 1)], dtype=complex)

    parts = [WeightSequence(UNILATERAL, lam[l::k]) for l in range(k)]

    power_parts = []
    for l in range(k):
        ws = [complex(np.prod(lam[p * k + l: p * k + l + k])) for p in range(n - 1)]
        power_parts.append(TruncatedShift(tuple(ws)))

    # interleaved index j (0-based): class j % k, depth j // k
    perm = np.array([(j % k) * n + j // k for j in range(nk)])
    inv = np.argsort(perm)

    big = truncate_to_matrix(seq, nk).entries
    powered = np.linalg.matrix_power(big, k)
    permuted = powered[np.ix_(inv, inv)]

    ds = direct_sum([p.matrix() for p in power_parts]).entries

    keep = np.ones(nk, dtype=bool)
    keep[perm[nk - k:]] = False  # last k interleaved rows/cols are boundary
    diff = (permuted - ds)[np.ix_(keep, keep)]
    residual = float(np.linalg.norm(diff))
    return PowerInterleave(parts=parts, power_parts=power_parts,
                           permutation=perm, check_residual=residual)
