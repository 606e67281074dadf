"""Modular S matrices of su(2)_k and su(k)_2.

Three independent routes to the su(k)_2 matrix live here:

* the brute-force Weyl-Kac sum over the full Weyl group (the oracle),
* the single-term closed form obtained through level-rank duality with
  su(2)_k,
* reconstruction from the orbit representatives via simple-current phases.

All phases and conformal dimensions are exact rationals until the final
exp/sin evaluation in double precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import lie
from .errors import (
    ConsistencyError,
    ContractViolationError,
    InvalidLevelError,
    InvalidRankError,
    LabelError,
)

DEFAULT_TOLERANCE = 1e-10


def unit_phase(q) -> complex:
    """exp(2 pi i q) for an exact rational q, reduced mod 1 first."""
    return cmath.exp(2j * math.pi * float(Fraction(q) % 1))


@dataclass(frozen=True)
class CosetWeight:
    """Label Lam_mu + Lam_nu of an su(k)_2 / diagonal-coset primary.

    Construction canonicalizes: indices reduced mod k (Lam_{k+s} = Lam_s),
    then sorted so mu <= nu.
    """

    mu: int
    nu: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidRankError(f"need k >= 1, got {self.k}")
        mu, nu = self.mu % self.k, self.nu % self.k
        if mu > nu:
            mu, nu = nu, mu
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    def __str__(self):
        return f"{self.mu},{self.nu}"

    @property
    def diff(self):
        return self.nu - self.mu


def canonical_weights(k: int):
    """All k(k+1)/2 canonical coset weights, sorted by (nu - mu, mu)."""
    ws = [CosetWeight(mu, nu, k) for mu in range(k) for nu in range(mu, k)]
    return tuple(sorted(ws, key=lambda w: (w.diff, w.mu)))


@dataclass
class SMatrix:
    """Square complex matrix with an ordered label basis."""

    labels: tuple
    entries: np.ndarray
    tolerance: float = DEFAULT_TOLERANCE
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.labels = tuple(self.labels)
        self.entries = np.asarray(self.entries, dtype=complex)
        n = len(self.labels)
        if self.entries.shape != (n, n):
            raise ConsistencyError(
                f"matrix shape {self.entries.shape} does not match {n} labels"
            )
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def dim(self):
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise LabelError(f"label {label!r} not in basis") from None

    def entry(self, a, b) -> complex:
        return self.entries[self.index(a), self.index(b)]

    def unitarity_defect(self) -> float:
        eye = np.eye(self.dim)
        return float(np.max(np.abs(self.entries @ self.entries.conj().T - eye)))

    def symmetry_defect(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.T)))

    def is_unitary(self) -> bool:
        return self.unitarity_defect() < self.tolerance

    def reindexed(self, new_labels) -> "SMatrix":
        """Same matrix in a different basis order (labels must coincide as sets)."""
        perm = [self.index(lab) for lab in new_labels]
        return SMatrix(tuple(new_labels), self.entries[np.ix_(perm, perm)],
                       tolerance=self.tolerance)

    def max_abs_diff(self, other: "SMatrix") -> float:
        aligned = other if other.labels == self.labels else other.reindexed(self.labels)
        return float(np.max(np.abs(self.entries - aligned.entries)))


def s_su2k(k: int, tolerance: float = DEFAULT_TOLERANCE) -> SMatrix:
    """su(2)_k S matrix: sqrt(2/(k+2)) sin(pi (l+1)(l'+1)/(k+2))."""
    if k < 1:
        raise InvalidLevelError(f"su(2)_k needs level k >= 1, got {k}")
    h = k + 2
    pref = math.sqrt(2.0 / h)
    m = np.arange(1, k + 2)
    entries = pref * np.sin(np.pi * np.outer(m, m) / h)
    return SMatrix(tuple(range(k + 1)), entries.astype(complex), tolerance=tolerance)


def _weight_dynkin(w: CosetWeight):
    """Finite Dynkin labels of Lam_mu + Lam_nu (Lam_0 is the zero weight)."""
    a = [0] * (w.k - 1)
    if w.mu > 0:
        a[w.mu - 1] += 1
    if w.nu > 0:
        a[w.nu - 1] += 1
    return a


def s_suk2_weylkac(k: int, basis=None, cap: int = lie.DEFAULT_WEYL_CAP,
                   tolerance: float = DEFAULT_TOLERANCE) -> SMatrix:
    """su(k)_2 S matrix by the Weyl-Kac sum over all k! Weyl elements.

    Entry = i^{k(k-1)/2} / sqrt(k (k+2)^{k-1}) *
            sum_w eps(w) exp(-2 pi i (Lam+rho | w(Lam'+rho)) / (k+2)),
    with rho the Weyl vector. The lattice index k(k+2)^{k-1} is
    det C * h^{rank} for A_{k-1} at h = k+2.
    """
    if k < 2:
        raise InvalidRankError(f"su(k)_2 needs k >= 2, got {k}")
    group = lie.weyl_group(k, cap=cap)  # raises WeylCapError above cap
    h = k + 2
    labels = tuple(basis) if basis is not None else canonical_weights(k)
    n = len(labels)

    # Scale orthogonal coordinates by k so everything is integer.
    shifted = []
    for w in labels:
        dyn = [a + 1 for a in _weight_dynkin(w)]  # Lam + rho
        coords = lie.to_orthogonal(dyn, k)
        shifted.append([int(c * k) for c in coords])
    shifted = np.array(shifted, dtype=np.int64)  # (n, k)

    perms = np.array([el.perm for el in group.elements], dtype=np.int64)
    signs = np.array([el.sign for el in group.elements], dtype=np.int64)

    npos = k * (k - 1) // 2
    pref = (1j ** (npos % 4)) / math.sqrt(k * float(h) ** (k - 1))
    denom = k * k * h  # angle = -2 pi numerator / denom

    entries = np.empty((n, n), dtype=complex)
    for j in range(n):
        permuted = shifted[j][perms]  # (|W|, k)
        nums = permuted @ shifted.T  # (|W|, n) integer inner products * k^2
        phases = np.exp(-2j * np.pi * (np.mod(nums, denom) / denom))
        entries[:, j] = pref * (signs @ phases)
    return SMatrix(labels, entries, tolerance=tolerance)


def s_suk2_compact(k: int, basis=None, tolerance: float = DEFAULT_TOLERANCE) -> SMatrix:
    """su(k)_2 S matrix in the level-rank closed form.

    Entry ((mu,nu),(rho,sigma)) =
      2/sqrt(k(k+2)) exp(2 pi i (mu+nu)(rho+sigma)/(2k))
                     sin(pi (nu-mu+1)(sigma-rho+1)/(k+2)).
    """
    if k < 2:
        raise InvalidRankError(f"su(k)_2 needs k >= 2, got {k}")
    labels = tuple(basis) if basis is not None else canonical_weights(k)
    n = len(labels)
    entries = np.empty((n, n), dtype=complex)
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            entries[i, j] = _suk2_compact_entry(a, b, k)
    return SMatrix(labels, entries, tolerance=tolerance)


def _suk2_compact_entry(a: CosetWeight, b: CosetWeight, k: int) -> complex:
    pref = 2.0 / math.sqrt(k * (k + 2))
    phase = unit_phase(Fraction((a.mu + a.nu) * (b.mu + b.nu), 2 * k))
    sine = math.sin(math.pi * (a.diff + 1) * (b.diff + 1) / (k + 2))
    return pref * phase * sine


def level_rank_entry(a: CosetWeight, b: CosetWeight, k: int) -> complex:
    """su(k)_2 entry for two orbit representatives (0, l), (0, l').

    Level-rank duality: sqrt(2/k) exp(2 pi i l l'/(2k)) S^{su(2)_k}_{l,l'};
    the Young-tableau box counts |Lam_0 + Lam_l| = l and the one-column to
    one-row transposition are baked in.
    """
    if a.k != k or b.k != k:
        raise ContractViolationError("weights must share k")
    if a.mu != 0 or b.mu != 0:
        raise ContractViolationError(
            f"level_rank_entry needs orbit representatives (0, l); got {a}, {b}"
        )
    l, lp = a.nu, b.nu
    s2 = math.sqrt(2.0 / (k + 2)) * math.sin(math.pi * (l + 1) * (lp + 1) / (k + 2))
    return math.sqrt(2.0 / k) * unit_phase(Fraction(l * lp, 2 * k)) * s2


def simple_current_step(w: CosetWeight) -> CosetWeight:
    """Fusion with J = Lam_1 + Lam_1: shifts both indices by one mod k."""
    return CosetWeight(w.mu + 1, w.nu + 1, w.k)


@dataclass(frozen=True)
class OrbitDecomposition:
    """Simple-current orbits of the canonical su(k)_2 weights."""

    orbits: tuple  # of (representative CosetWeight, tuple of members)
    r: int

    def orbit_of(self, w: CosetWeight):
        """(representative nu-index, power p) with w = J^p * (0, rep)."""
        for rep, members in self.orbits:
            if w in members:
                return rep.nu, members.index(w)
        raise LabelError(f"{w} not found in any orbit")


def orbit_count(k: int) -> int:
    return k // 2 + 1 if k % 2 == 0 else (k + 1) // 2


def orbit_decomposition_suk2(k: int) -> OrbitDecomposition:
    """Partition of the canonical weights into J-orbits, reps (0, l)."""
    if k < 2:
        raise InvalidRankError(f"need k >= 2, got {k}")
    orbits = []
    seen = set()
    for l in range(orbit_count(k)):
        rep = CosetWeight(0, l, k)
        members = []
        w = rep
        while w not in members:
            members.append(w)
            w = simple_current_step(w)
        orbits.append((rep, tuple(members)))
        seen.update(members)
    if len(seen) != k * (k + 1) // 2 or sum(len(m) for _, m in orbits) != len(seen):
        raise ConsistencyError(f"orbits do not partition the weights at k={k}")
    return OrbitDecomposition(orbits=tuple(orbits), r=len(orbits))


def orbit_decomposition_su2k(k: int):
    """su(2)_k orbits {l, k-l} under J = phi_k."""
    if k < 1:
        raise InvalidLevelError(f"need k >= 1, got {k}")
    orbits = []
    for l in range(k // 2 + 1):
        orbits.append((l,) if l == k - l else (l, k - l))
    return orbits


def dim_su2k(l: int, k: int) -> Fraction:
    """Conformal dimension of the su(2)_k primary phi_l: l(l+2)/(4(k+2))."""
    if not 0 <= l <= k:
        raise LabelError(f"su(2)_k label needs 0 <= l <= {k}, got {l}")
    return Fraction(l * (l + 2), 4 * (k + 2))


def dim_suk2(w: CosetWeight) -> Fraction:
    """Conformal dimension of the su(k)_2 primary Lam_mu + Lam_nu."""
    k, mu, nu = w.k, w.mu, w.nu
    num = 2 * mu * (k - nu) + (k + 1) * (mu * (k - mu) + nu * (k - nu))
    return Fraction(num, 2 * k * (k + 2))


def monodromy_charge(power_mu: int, w: CosetWeight) -> Fraction:
    """Monodromy charge of w under J^power_mu, reduced to (-1, 0].

    Computed as -mu(rho+sigma)/k and cross-checked against the
    dimension-difference definition; a mismatch is a programming error.
    """
    k = w.k
    q = _reduce_charge(Fraction(-power_mu * (w.mu + w.nu), k))
    via_dims = _monodromy_via_dims(power_mu, w)
    if q != via_dims:
        raise ConsistencyError(
            f"monodromy charge mismatch for J^{power_mu} on {w}: {q} vs {via_dims}"
        )
    return q


def _monodromy_via_dims(power_mu: int, w: CosetWeight) -> Fraction:
    k = w.k
    target = CosetWeight(w.mu + power_mu, w.nu + power_mu, k)
    current = CosetWeight(power_mu, power_mu, k)
    return _reduce_charge(dim_suk2(target) - dim_suk2(w) - dim_suk2(current))


def _reduce_charge(q: Fraction) -> Fraction:
    r = q % 1
    return r - 1 if r > 0 else r


def simple_current_extend(representative_row, k: int, basis=None,
                          tolerance: float = DEFAULT_TOLERANCE) -> SMatrix:
    """Full su(k)_2 matrix from its orbit-representative block.

    representative_row maps (l, l') pairs of representative nu-indices to
    the complex entries S_{(0,l),(0,l')}. Rows and columns are filled with
    the simple-current phases exp(-2 pi i Q_{J^p}); the result is checked
    against the closed form.
    """
    dec = orbit_decomposition_suk2(k)
    labels = tuple(basis) if basis is not None else canonical_weights(k)
    n = len(labels)
    entries = np.empty((n, n), dtype=complex)
    for i, a in enumerate(labels):
        rep_a, p = dec.orbit_of(a)
        for j, b in enumerate(labels):
            rep_b, q = dec.orbit_of(b)
            # S_{J^p(0,ra), J^q(0,rb)} picks up e^{-2 pi i Q} per action
            phase = unit_phase(Fraction(p * (b.mu + b.nu), k) + Fraction(q * rep_a, k))
            entries[i, j] = phase * representative_row[(rep_a, rep_b)]
    out = SMatrix(labels, entries, tolerance=tolerance)
    defect = out.max_abs_diff(s_suk2_compact(k, basis=labels, tolerance=tolerance))
    if defect > tolerance:
        raise ConsistencyError(
            f"simple-current extension inconsistent at k={k}: defect {defect:g}"
        )
    return out


def orbit_basis(k: int):
    """Canonical weights grouped orbit by orbit, (mu, nu)-sorted inside.

    For k=3 this is the ordering [00, 11, 22, 01, 02, 12] of the 6x6
    reference matrix.
    """
    dec = orbit_decomposition_suk2(k)
    out = []
    for _, members in dec.orbits:
        out.extend(sorted(members, key=lambda w: (w.mu, w.nu)))
    return tuple(out)
