"""Fabry-Perot interferometer observables.

The backscattered conductivity of a two-point-contact device oscillates
in the Abelian phase alpha with an amplitude set by the monodromy of the
probe quasiparticle around the bulk one; |monodromy| < 1 is the
signature of a non-Abelian bulk.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, SamplingError
from .fusion import find_vacuum
from .smatrix import SMatrix


@dataclass(frozen=True)
class Monodromy:
    """Expectation value of one anyon encircling another."""

    bulk: object
    probe: object
    value: complex

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def phase(self) -> float:
        return cmath.phase(self.value)


def monodromy(s: SMatrix, a, b) -> Monodromy:
    """S_ab S_00 / (S_0a S_0b) with 0 the vacuum row."""
    vac = find_vacuum(s)
    ia, ib = s.index(a), s.index(b)
    denom = s.entries[vac, ia] * s.entries[vac, ib]
    if abs(denom) < s.tolerance:
        raise ConsistencyError(
            f"vanishing vacuum entries for {a!r}, {b!r}; S matrix is not "
            "valid modular data"
        )
    value = s.entries[ia, ib] * s.entries[vac, vac] / denom
    if abs(value) > 1 + s.tolerance:
        raise ConsistencyError(
            f"monodromy magnitude {abs(value):g} exceeds 1 for {a!r}, {b!r}"
        )
    return Monodromy(bulk=b, probe=a, value=complex(value))


@dataclass(frozen=True)
class InterferencePattern:
    """Sampled sigma_xx sweep over one period of the Abelian phase."""

    alpha_samples: tuple
    sigma_xx: tuple
    t1: complex
    t2: complex
    monodromy: Monodromy

    @property
    def contrast(self) -> float:
        """Relative modulation amplitude |t1||t2||M| of the cosine term."""
        return abs(self.t1) * abs(self.t2) * self.monodromy.magnitude

    @property
    def mean(self) -> float:
        return float(np.mean(self.sigma_xx))


def sigma_xx_curve(s: SMatrix, a, b, t1: complex, t2: complex,
                   n_samples: int) -> InterferencePattern:
    """sigma_xx(alpha) = |t1|^2 + |t2|^2 + 2 Re(t1* t2 e^{i alpha} M_ab),
    sampled uniformly on [0, 2 pi)."""
    if n_samples < 2:
        raise SamplingError(f"need at least 2 samples, got {n_samples}")
    mono = monodromy(s, a, b)
    alphas = 2 * np.pi * np.arange(n_samples) / n_samples
    base = abs(t1) ** 2 + abs(t2) ** 2
    cross = np.conj(t1) * t2 * np.exp(1j * alphas) * mono.value
    sigma = base + 2 * cross.real
    return InterferencePattern(
        alpha_samples=tuple(float(x) for x in alphas),
        sigma_xx=tuple(float(x) for x in sigma),
        t1=complex(t1), t2=complex(t2), monodromy=mono,
    )


@dataclass(frozen=True)
class DetectionRow:
    """One bulk candidate in a detection scan."""

    bulk: object
    magnitude: float
    phase: float
    visibility: float  # relative to a vacuum bulk with the same t1, t2
    non_abelian: bool


def detection_report(s: SMatrix, probe, bulk_candidates) -> tuple:
    """Monodromy magnitude, phase and vacuum-relative visibility for each
    bulk candidate; flags non-Abelian whenever |M| < 1."""
    rows = []
    for bulk in bulk_candidates:
        m = monodromy(s, probe, bulk)
        rows.append(DetectionRow(
            bulk=bulk,
            magnitude=m.magnitude,
            phase=m.phase,
            visibility=m.magnitude,  # vacuum bulk has |M| = 1 exactly
            non_abelian=not math.isclose(m.magnitude, 1.0,
                                         abs_tol=s.tolerance),
        ))
    return tuple(rows)
