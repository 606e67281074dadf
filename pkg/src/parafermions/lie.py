"""Finite Lie-algebra data for su(k) = A_{k-1}.

Everything here is exact rational arithmetic (fractions.Fraction); floating
point never enters. Weights live in the Dynkin-label basis; the Weyl group
acts through the orthogonal (epsilon-coordinate) embedding, where it is a
literal permutation of k coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidRankError, ShapeError, WeylCapError

DEFAULT_WEYL_CAP = 8


def rational_inverse(matrix):
    """Invert a square matrix of Fractions by Gauss-Jordan elimination.

    Returns (inverse, determinant), both exact.
    """
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ShapeError("matrix is singular")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
            det = -det
        det *= aug[col][col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    inverse = tuple(tuple(row[n:]) for row in aug)
    return inverse, det


def rational_solve(matrix, rhs):
    """Solve matrix @ x = rhs exactly."""
    inverse, _ = rational_inverse(matrix)
    return tuple(sum(a * b for a, b in zip(row, rhs)) for row in inverse)


@dataclass(frozen=True)
class CartanData:
    """Cartan matrix of su(k), its exact inverse and determinant."""

    k: int
    cartan: tuple
    inverse_cartan: tuple
    det: int

    @property
    def rank(self):
        return self.k - 1


def cartan_data(k: int) -> CartanData:
    """A_{k-1} Cartan matrix with exact rational inverse; det = k."""
    if k < 2:
        raise InvalidRankError(f"su(k) needs k >= 2, got k={k}")
    n = k - 1
    cartan = tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )
    inverse, det = rational_inverse(cartan)
    return CartanData(k=k, cartan=cartan, inverse_cartan=inverse, det=int(det))


def weight_inner_product(a: Sequence, b: Sequence, cd: CartanData) -> Fraction:
    """(a|b) = a^T C^{-1} b in the normalization with root length^2 = 2."""
    n = cd.rank
    if len(a) != n or len(b) != n:
        raise ShapeError(f"expected weights of length {n}, got {len(a)} and {len(b)}")
    total = Fraction(0)
    for i in range(n):
        if a[i] == 0:
            continue
        total += Fraction(a[i]) * sum(cd.inverse_cartan[i][j] * Fraction(b[j]) for j in range(n))
    return total


def to_orthogonal(weight: Sequence, k: int) -> tuple:
    """Embed a Dynkin-label weight into traceless epsilon coordinates."""
    if len(weight) != k - 1:
        raise ShapeError(f"expected length {k - 1}, got {len(weight)}")
    partial = []
    acc = Fraction(0)
    for a in reversed(weight):
        acc += Fraction(a)
        partial.append(acc)
    coords = list(reversed(partial)) + [Fraction(0)]
    mean = sum(coords) / k
    return tuple(c - mean for c in coords)


def from_orthogonal(coords: Sequence) -> tuple:
    """Dynkin labels from epsilon coordinates (consecutive differences)."""
    return tuple(coords[i] - coords[i + 1] for i in range(len(coords) - 1))


def orthogonal_inner_product(ea: Sequence, eb: Sequence) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(ea, eb)), Fraction(0))


def _parity(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element of A_{k-1}: permutation of k symbols plus parity."""

    perm: tuple
    sign: int

    def apply(self, weight: Sequence, k: int) -> tuple:
        """Act on a Dynkin-label weight, returning Dynkin labels."""
        coords = to_orthogonal(weight, k)
        permuted = tuple(coords[self.perm[i]] for i in range(k))
        return from_orthogonal(permuted)

    def apply_orthogonal(self, coords: Sequence) -> tuple:
        return tuple(coords[self.perm[i]] for i in range(len(self.perm)))


def compose(w1: WeylElement, w2: WeylElement) -> WeylElement:
    """Element acting as w1 after w2: apply(compose(w1,w2)) = apply(w1, apply(w2, .))."""
    perm = tuple(w2.perm[w1.perm[i]] for i in range(len(w1.perm)))
    return WeylElement(perm=perm, sign=w1.sign * w2.sign)


@dataclass(frozen=True)
class WeylGroup:
    k: int
    elements: tuple

    @property
    def size(self):
        return len(self.elements)


def weyl_group(k: int, cap: int = DEFAULT_WEYL_CAP) -> WeylGroup:
    """All k! signed permutations of the epsilon coordinates of A_{k-1}."""
    if k < 2:
        raise InvalidRankError(f"su(k) needs k >= 2, got k={k}")
    if k > cap:
        raise WeylCapError(k, cap)
    elements = tuple(
        WeylElement(perm=perm, sign=_parity(perm))
        for perm in itertools.permutations(range(k))
    )
    return WeylGroup(k=k, elements=elements)
