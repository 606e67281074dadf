"""Fusion rings and modular-group verification.

Fusion coefficients come from three independent sources: the Verlinde
formula applied to any unitary S matrix, the su(2)_k truncated
Clebsch-Gordan closed form, and the diagonal-coset closed form. The
acceptance suite pins all three against each other.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coset import LmLabel, from_lm
from .errors import (
    ConsistencyError,
    ContractViolationError,
    LabelError,
    NegativeFusionError,
    NonIntegerFusionError,
    VacuumError,
)
from .smatrix import CosetWeight, SMatrix

INTEGRALITY_TOLERANCE = 1e-8


def find_vacuum(s: SMatrix) -> int:
    """Index of the unique row that is entrywise real and strictly positive."""
    rows = []
    for i in range(s.dim):
        row = s.entries[i]
        if np.max(np.abs(row.imag)) < s.tolerance and np.min(row.real) > s.tolerance:
            rows.append(i)
    if len(rows) != 1:
        raise VacuumError(
            f"expected exactly one real-positive row, found {len(rows)}"
        )
    return rows[0]


@dataclass
class FusionRing:
    """N[a][b][c] tensor over an ordered label basis."""

    labels: tuple
    tensor: np.ndarray  # integer, shape (n, n, n)
    vacuum_index: int

    def coefficient(self, a, b, c) -> int:
        idx = {lab: i for i, lab in enumerate(self.labels)}
        return int(self.tensor[idx[a], idx[b], idx[c]])

    def product(self, a, b) -> Counter:
        """Multiset of fusion outcomes of a x b."""
        idx = {lab: i for i, lab in enumerate(self.labels)}
        row = self.tensor[idx[a], idx[b]]
        return Counter({self.labels[c]: int(n) for c, n in enumerate(row) if n})

    def check_axioms(self) -> None:
        n = self.tensor
        if np.any(n != np.swapaxes(n, 0, 1)):
            raise ConsistencyError("fusion tensor is not commutative")
        vac = n[self.vacuum_index]
        if np.any(vac != np.eye(len(self.labels), dtype=n.dtype)):
            raise ConsistencyError("vacuum does not act as the identity")
        lhs = np.einsum("abe,ecd->abcd", n, n)
        rhs = np.einsum("bcf,afd->abcd", n, n)
        if np.any(lhs != rhs):
            raise ConsistencyError("fusion tensor is not associative")


def verlinde(s: SMatrix,
             integrality_tolerance: float = INTEGRALITY_TOLERANCE) -> FusionRing:
    """N_ab^c = sum_x S_ax S_bx conj(S_cx) / S_vac,x, rounded to integers."""
    vac = find_vacuum(s)
    weighted = s.entries / s.entries[vac]  # divide inside the x-sum
    raw = np.einsum("ax,bx,cx->abc", s.entries, weighted, s.entries.conj())
    residual = float(np.max(np.abs(raw - np.round(raw.real))))
    if residual >= integrality_tolerance:
        raise NonIntegerFusionError(
            f"Verlinde residual {residual:g} >= {integrality_tolerance:g}"
        )
    tensor = np.round(raw.real).astype(np.int64)
    if np.any(tensor < 0):
        raise NegativeFusionError("negative Verlinde coefficient")
    ring = FusionRing(labels=s.labels, tensor=tensor, vacuum_index=vac)
    ring.check_axioms()
    return ring


def fusion_su2k_closed(l: int, l2: int, k: int) -> set:
    """Truncated su(2)_k rule: |l-l2| .. min(l+l2, 2k-l-l2) in steps of 2."""
    if not (0 <= l <= k and 0 <= l2 <= k):
        raise LabelError(f"labels must lie in 0..{k}, got {l}, {l2}")
    return set(range(abs(l - l2), min(l + l2, 2 * k - l - l2) + 1, 2))


def fusion_coset_closed(a: CosetWeight, b: CosetWeight) -> Counter:
    """Closed-form coset fusion of Lam_mu+Lam_nu with Lam_mu'+Lam_nu'.

    Routed through the su(2)_k / u(1)_{2k} correspondence: the l = nu - mu
    labels fuse by the truncated su(2)_k rule, the m = mu + nu labels add,
    and each outcome maps back through the inverse correspondence with
    mod-k canonicalization. Distinct su(2)_k channels can land on the same
    canonical weight; each field enters the product once (all coset fusion
    multiplicities are 0 or 1).
    """
    if a.k != b.k:
        raise ContractViolationError("weights must share k")
    k = a.k
    m_total = (a.mu + a.nu) + (b.mu + b.nu)
    fields = {from_lm(LmLabel(l2, m_total, k))
              for l2 in fusion_su2k_closed(a.diff, b.diff, k)}
    return Counter({w: 1 for w in fields})


def quantum_dimensions(s: SMatrix) -> dict:
    """d_a = S_{vac,a}/S_{vac,vac}; raises if any d_a dips below 1."""
    vac = find_vacuum(s)
    row = s.entries[vac].real
    dims = {lab: float(row[i] / row[vac]) for i, lab in enumerate(s.labels)}
    bad = [lab for lab, d in dims.items() if d < 1 - s.tolerance]
    if bad:
        raise VacuumError(f"quantum dimensions below 1 for {bad}; wrong vacuum?")
    return dims


def total_quantum_dimension(s: SMatrix) -> float:
    vac = find_vacuum(s)
    return float(1.0 / s.entries[vac, vac].real)


@dataclass(frozen=True)
class TData:
    """Diagonal T matrix data: exact dimensions and central charge."""

    dims: dict  # label -> Fraction
    central_charge: Fraction

    def phase(self, label) -> complex:
        q = Fraction(self.dims[label]) - self.central_charge / 24
        return cmath.exp(2j * math.pi * float(q % 1))

    def matrix(self, labels) -> np.ndarray:
        return np.diag([self.phase(lab) for lab in labels])


@dataclass(frozen=True)
class ModularReport:
    """Max residuals of the modular-group relations on (S, T)."""

    s2_defect: float
    st3_defect: float
    c2_defect: float
    unitarity_defect: float
    conjugation_is_permutation: bool
    tolerance: float

    @property
    def passed(self) -> bool:
        return (self.conjugation_is_permutation
                and self.s2_defect < self.tolerance
                and self.st3_defect < self.tolerance
                and self.c2_defect < self.tolerance
                and self.unitarity_defect < self.tolerance)

    def residuals(self) -> dict:
        return {
            "unitarity": self.unitarity_defect,
            "s_squared": self.s2_defect,
            "st_cubed": self.st3_defect,
            "conjugation_squared": self.c2_defect,
        }


def charge_conjugation(s: SMatrix) -> np.ndarray:
    """S^2 snapped to a matrix with entries in {0, +-1}; raises if it is
    not a genuine signed permutation within tolerance."""
    s2 = s.entries @ s.entries
    snapped = np.round(s2.real).astype(np.int64)
    defect = float(np.max(np.abs(s2 - snapped)))
    ok = (defect < s.tolerance
          and set(np.unique(snapped)) <= {-1, 0, 1}
          and np.all(np.abs(snapped).sum(axis=0) == 1)
          and np.all(np.abs(snapped).sum(axis=1) == 1))
    if not ok:
        raise ConsistencyError(
            f"S^2 is not a permutation matrix (snap defect {defect:g})"
        )
    return snapped


def verify_modular_relations(s: SMatrix, t: TData) -> ModularReport:
    """Check S S^dag = I, S^2 = C (a permutation), (ST)^3 = C, C^2 = I."""
    s2 = s.entries @ s.entries
    snapped = np.round(s2.real).astype(np.int64)
    is_perm = (float(np.max(np.abs(s2 - snapped))) < s.tolerance
               and set(np.unique(snapped)) <= {-1, 0, 1}
               and bool(np.all(np.abs(snapped).sum(axis=0) == 1))
               and bool(np.all(np.abs(snapped).sum(axis=1) == 1)))
    c = snapped.astype(float)
    st = s.entries @ t.matrix(s.labels)
    st3 = st @ st @ st
    return ModularReport(
        s2_defect=float(np.max(np.abs(s2 - c))),
        st3_defect=float(np.max(np.abs(st3 - c))),
        c2_defect=float(np.max(np.abs(c @ c - np.eye(s.dim)))),
        unitarity_defect=s.unitarity_defect(),
        conjugation_is_permutation=is_perm,
        tolerance=s.tolerance,
    )
