"""The full Z_k Read-Rezayi modular data and its charge lattice.

Sectors carry a u(1) charge label l mod k+2 and a parafermion label
rho mod k tied together by the Z_k pairing rule. The full S matrix is
assembled two ways: as k * S^{u(1)} * S^{coset} on the induced labels,
and from a single-term closed form; both must agree entrywise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import coset as co
from . import lie
from .errors import ConsistencyError, InvalidRankError, LabelError, LatticeError
from .smatrix import CosetWeight, SMatrix, unit_phase, DEFAULT_TOLERANCE


@dataclass(frozen=True)
class FullSector:
    """Read-Rezayi sector (l mod k+2, rho mod k) obeying the pairing rule."""

    l: int
    rho: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidRankError(f"need k >= 1, got {self.k}")
        l, rho = self.l % (self.k * (self.k + 2)), self.rho % self.k
        object.__setattr__(self, "l", l % (self.k + 2))
        object.__setattr__(self, "rho", rho)
        if not self.allowed():
            raise LabelError(
                f"(l, rho) = ({self.l}, {self.rho}) violates the Z_k pairing "
                f"rule at k={self.k}"
            )

    def allowed(self) -> bool:
        mu = (self.l - self.rho) % self.k
        return mu <= self.rho

    @property
    def neutral(self) -> CosetWeight:
        """Induced parafermion label Lam_{(l-rho) mod k} + Lam_{rho}."""
        return CosetWeight((self.l - self.rho) % self.k, self.rho, self.k)

    def __str__(self):
        return f"{self.l},{self.rho}"


def enumerate_sectors(k: int):
    """All allowed (l, rho), lexicographic; count is (k+1)(k+2)/2."""
    if k < 1:
        raise InvalidRankError(f"need k >= 1, got {k}")
    out = []
    for l in range(k + 2):
        for rho in range(k):
            if (l - rho) % k <= rho:
                out.append(FullSector(l, rho, k))
    if len(out) != (k + 1) * (k + 2) // 2:
        raise ConsistencyError(f"sector count mismatch at k={k}: {len(out)}")
    return tuple(out)


def s_u1(k: int, tolerance: float = DEFAULT_TOLERANCE) -> SMatrix:
    """u(1)_{k(k+2)} S matrix: (1/sqrt(k(k+2))) exp(-2 pi i l l'/(k(k+2)))."""
    if k < 1:
        raise InvalidRankError(f"need k >= 1, got {k}")
    n = k * (k + 2)
    m = np.arange(n)
    entries = np.exp(-2j * np.pi * np.outer(m, m) / n) / math.sqrt(n)
    return SMatrix(tuple(range(n)), entries, tolerance=tolerance)


def full_s_product(k: int, tolerance: float = DEFAULT_TOLERANCE) -> SMatrix:
    """k * S^{u(1)}_{l,l'} * S^{coset} on the induced neutral labels.

    The u(1) label of sector (l, rho) inside u(1)_{k(k+2)} is l itself;
    periodicity l -> l + k+2 is absorbed by the parafermion label through
    the pairing rule.
    """
    if k < 2:
        raise InvalidRankError(f"need k >= 2, got {k}")
    sectors = enumerate_sectors(k)
    charged = s_u1(k, tolerance=tolerance)
    neutral = co.coset_s_compact(k, tolerance=tolerance).s
    n = len(sectors)
    entries = np.empty((n, n), dtype=complex)
    for i, a in enumerate(sectors):
        for j, b in enumerate(sectors):
            entries[i, j] = (k * charged.entry(a.l, b.l)
                             * neutral.entry(a.neutral, b.neutral))
    out = SMatrix(sectors, entries, tolerance=tolerance)
    if not out.is_unitary():
        raise ConsistencyError(
            f"full S product form not unitary at k={k}: "
            f"defect {out.unitarity_defect():g}"
        )
    return out


def _compact_entry(a: FullSector, b: FullSector, k: int) -> complex:
    # Shift l by k+2 whenever reducing 2 rho - l into [0, k) wrapped it,
    # so the phase exp(i pi L L'/(k+2)) stays single valued on sectors.
    def lifted(s: FullSector):
        d = (2 * s.rho - s.l) % k
        t = ((s.l - s.rho) % k - (s.l - s.rho)) // k
        return s.l + (k + 2) * t, d

    la, da = lifted(a)
    lb, db = lifted(b)
    phase = unit_phase(Fraction(la * lb, 2 * (k + 2)))
    sine = math.sin(math.pi * (da + 1) * (db + 1) / (k + 2))
    return (2.0 / (k + 2)) * phase * sine


def full_s_compact(k: int, tolerance: float = DEFAULT_TOLERANCE) -> SMatrix:
    """Single-term closed form of the full S matrix.

    Entry = (2/(k+2)) exp(i pi L L'/(k+2)) sin(pi (d+1)(d'+1)/(k+2)) with
    d = (2 rho - l) mod k and L the representative of l mod k(k+2) for
    which (l - rho)/k rounds the induced mu into 0..k-1.
    """
    if k < 2:
        raise InvalidRankError(f"need k >= 2, got {k}")
    sectors = enumerate_sectors(k)
    n = len(sectors)
    entries = np.empty((n, n), dtype=complex)
    for i, a in enumerate(sectors):
        for j, b in enumerate(sectors):
            entries[i, j] = _compact_entry(a, b, k)
    return SMatrix(sectors, entries, tolerance=tolerance)


def full_dims(k: int) -> dict:
    """Sector dimensions l^2/(2k(k+2)) + coset dimension, consumed only
    through T phases (well defined mod 1 at best for the fermionic
    extension, mod 1/2 along simple-current orbits)."""
    if k < 2:
        raise InvalidRankError(f"need k >= 2, got {k}")
    out = {}
    for s in enumerate_sectors(k):
        charged = Fraction(s.l * s.l, 2 * k * (k + 2))
        out[s] = charged + co.coset_dimension(s.neutral)
    return out


def full_central_charge(k: int) -> Fraction:
    return 1 + co.central_charge(k)


@dataclass(frozen=True)
class ChargeLattice:
    """Integer Gram matrix of the (2k-1)-dimensional charge lattice."""

    k: int
    gram: tuple  # of tuples of int
    charge_vector: tuple

    @property
    def dim(self):
        return len(self.gram)


def gram_matrix(k: int) -> ChargeLattice:
    """Corner 3 coupled to two A_{k-1} Cartan blocks through single 1s."""
    if k < 1:
        raise InvalidRankError(f"need k >= 1, got {k}")
    n = 2 * k - 1
    g = [[0] * n for _ in range(n)]
    g[0][0] = 3
    if k >= 2:
        cartan = lie.cartan_data(k).cartan
        for blk in range(2):
            off = 1 + blk * (k - 1)
            g[0][off] = g[off][0] = 1
            for i in range(k - 1):
                for j in range(k - 1):
                    g[off + i][off + j] = cartan[i][j]
    lattice = ChargeLattice(k=k, gram=tuple(tuple(row) for row in g),
                            charge_vector=(1,) + (0,) * (n - 1))
    _check_positive_definite(lattice)
    return lattice


def _check_positive_definite(cl: ChargeLattice) -> None:
    # Leading principal minors via exact elimination determinants
    for m in range(1, cl.dim + 1):
        sub = [row[:m] for row in cl.gram[:m]]
        _, det = lie.rational_inverse(sub)
        if det <= 0:
            raise LatticeError(
                f"Gram matrix not positive definite at k={cl.k} (minor {m})"
            )


def filling_factor(cl: ChargeLattice) -> Fraction:
    """Exact Q^T G^{-1} Q; must equal k/(k+2)."""
    x = lie.rational_solve([list(r) for r in cl.gram], list(cl.charge_vector))
    nu = sum(Fraction(q) * xi for q, xi in zip(cl.charge_vector, x))
    if nu != Fraction(cl.k, cl.k + 2):
        raise LatticeError(
            f"filling factor {nu} != {cl.k}/{cl.k + 2} at k={cl.k}"
        )
    return nu
