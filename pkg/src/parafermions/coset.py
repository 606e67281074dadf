"""The Z_k parafermion diagonal coset (su(k)_1 + su(k)_1) / su(k)_2.

The coset S matrix is built four independent ways: the phase-conjugate
form acting on the su(k)_2 matrix, the compact closed form, the identity
with su(k)_2 itself, and the su(2)_k x u(1)_{2k} product construction on
(l, m) labels. The acceptance suite checks all four agree entrywise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import smatrix as sm
from .errors import (
    BranchingParityError,
    ConsistencyError,
    IdentificationError,
    InvalidRankError,
)
from .smatrix import CosetWeight, SMatrix, canonical_weights, unit_phase


@dataclass(frozen=True)
class LmLabel:
    """su(2)_k / u(1)_{2k} coset label: l twice the spin, m twice the projection."""

    l: int
    m: int
    k: int


@dataclass(frozen=True)
class CosetModularData:
    """Coset S matrix plus the diagonal T data that goes with it."""

    s: SMatrix
    dims: dict
    central_charge: Fraction


def central_charge(k: int) -> Fraction:
    """2(k-1)/(k+2): two su(k)_1 copies minus the diagonal su(k)_2."""
    if k < 2:
        raise InvalidRankError(f"need k >= 2, got {k}")
    return Fraction(2 * (k - 1), k + 2)


def to_lm(w: CosetWeight) -> LmLabel:
    """(mu, nu) -> (l, m) = (nu - mu, mu + nu), before field identification."""
    return LmLabel(l=w.nu - w.mu, m=w.mu + w.nu, k=w.k)


def from_lm(lbl: LmLabel) -> CosetWeight:
    """(l, m) -> (mu, nu) = ((m-l)/2, (m+l)/2), canonicalized mod k."""
    if (lbl.l - lbl.m) % 2 != 0:
        raise BranchingParityError(
            f"(l, m) = ({lbl.l}, {lbl.m}) violates l = m mod 2"
        )
    return CosetWeight((lbl.m - lbl.l) // 2, (lbl.m + lbl.l) // 2, lbl.k)


def field_identify(lbl: LmLabel) -> LmLabel:
    """Unique representative with |m| <= l under the coset identifications.

    Uses Phi^l_{m+2k} = Phi^l_m, Phi^l_{-m} = Phi^l_m and
    Phi^l_m = Phi^{k-l}_{m-k}.
    """
    k, l, m = lbl.k, lbl.l, lbl.m
    m = ((m + k - 1) % (2 * k)) - k + 1  # reduce into (-k, k]
    m = abs(m)
    if m > l:
        l, m = k - l, k - m
    if not (0 <= m <= l <= k) or (l - m) % 2 != 0:
        raise IdentificationError(
            f"no valid representative for (l, m) = ({lbl.l}, {lbl.m}) at k={k}"
        )
    return LmLabel(l=l, m=m, k=k)


def lm_dimension(lbl: LmLabel) -> Fraction:
    """Delta^l_m = l(l+2)/(4(k+2)) - m^2/(4k) on an identified label."""
    k = lbl.k
    return Fraction(lbl.l * (lbl.l + 2), 4 * (k + 2)) - Fraction(lbl.m ** 2, 4 * k)


def coset_dimension(w: CosetWeight) -> Fraction:
    """Conformal dimension of the coset primary labeled by w."""
    return lm_dimension(field_identify(to_lm(w)))


def count_primaries(k: int) -> int:
    """k(k+1)/2, cross-checked against the canonical weight enumeration."""
    if k < 1:
        raise InvalidRankError(f"need k >= 1, got {k}")
    n = k * (k + 1) // 2
    if k >= 2 and len(canonical_weights(k)) != n:
        raise ConsistencyError(f"primary count mismatch at k={k}")
    return n


def coset_s_compact(k: int, basis=None,
                    tolerance: float = sm.DEFAULT_TOLERANCE) -> CosetModularData:
    """Coset modular data from the closed form (identical to su(k)_2)."""
    s = sm.s_suk2_compact(k, basis=basis, tolerance=tolerance)
    dims = {w: coset_dimension(w) for w in s.labels}
    return CosetModularData(s=s, dims=dims, central_charge=central_charge(k))


def coset_s_phase_form(k: int, basis=None,
                       tolerance: float = sm.DEFAULT_TOLERANCE) -> SMatrix:
    """Entry = exp(2 pi i (mu+nu)(rho+sigma)/k) conj(su(k)_2 entry)."""
    base = sm.s_suk2_compact(k, basis=basis, tolerance=tolerance)
    n = base.dim
    entries = np.empty((n, n), dtype=complex)
    for i, a in enumerate(base.labels):
        for j, b in enumerate(base.labels):
            phase = unit_phase(Fraction((a.mu + a.nu) * (b.mu + b.nu), k))
            entries[i, j] = phase * np.conj(base.entries[i, j])
    out = SMatrix(base.labels, entries, tolerance=tolerance)
    defect = out.max_abs_diff(base)
    if defect > tolerance:
        raise ConsistencyError(
            f"phase form disagrees with the compact form at k={k}: {defect:g}"
        )
    return out


def s_u1_2k(k: int, tolerance: float = sm.DEFAULT_TOLERANCE) -> SMatrix:
    """u(1)_{2k} S matrix: (1/sqrt(2k)) exp(-2 pi i m m'/(2k)), m = 0..2k-1."""
    if k < 1:
        raise InvalidRankError(f"need k >= 1, got {k}")
    m = np.arange(2 * k)
    entries = np.exp(-2j * np.pi * np.outer(m, m) / (2 * k)) / math.sqrt(2 * k)
    return SMatrix(tuple(range(2 * k)), entries, tolerance=tolerance)


def coset_s_via_su2k_u1(k: int, basis=None,
                        tolerance: float = sm.DEFAULT_TOLERANCE) -> SMatrix:
    """Coset S as 2 S^{su(2)_k}_{l,l'} conj(S^{u(1)_{2k}}_{m,m'}).

    Built on the (l, m) labels of the canonical weights via to_lm, then
    reindexed to the CosetWeight basis.
    """
    labels = tuple(basis) if basis is not None else canonical_weights(k)
    s2 = sm.s_su2k(k, tolerance=tolerance)
    su1 = s_u1_2k(k, tolerance=tolerance)
    lm = [to_lm(w) for w in labels]
    if len({(x.l, x.m) for x in lm}) != len(lm):
        raise IdentificationError(f"(l, m) labels collide at k={k}")
    n = len(labels)
    entries = np.empty((n, n), dtype=complex)
    for i, a in enumerate(lm):
        for j, b in enumerate(lm):
            entries[i, j] = 2 * s2.entry(a.l, b.l) * np.conj(su1.entry(a.m % (2 * k), b.m % (2 * k)))
    return SMatrix(labels, entries, tolerance=tolerance)
