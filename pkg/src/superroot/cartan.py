"""Cartan data: normalization, admissibility, regularity, symmetrizers.

A ``CartanData`` is an n x n matrix of exact rationals together with a parity
vector in {0,1}^n.  Normalized means every diagonal entry is 0 or 2.  The
admissibility test implements the three local-nilpotency conditions; the
regularity test checks that vanishing is symmetric.  All indices are 0-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DimensionMismatchError, ZeroMatrixError
from .linalg import Mat, frac, mat


class RankOneType(enum.Enum):
    """Isomorphism type of the rank-one subalgebra attached to one index."""

    HEISENBERG3 = "heisenberg3"
    SL11 = "sl(1,1)"
    SL2 = "sl2"
    OSP12 = "osp(1,2)"


@dataclass(frozen=True)
class CartanData:
    matrix: Mat
    parity: tuple[int, ...]

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise DimensionMismatchError("matrix is not square")
        if len(self.parity) != n:
            raise DimensionMismatchError("parity vector length differs from matrix size")
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("parity entries must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.matrix)

    def entry(self, i: int, j: int) -> Fraction:
        return self.matrix[i][j]

    def is_normalized(self) -> bool:
        return all(self.matrix[i][i] in (0, 2) for i in range(self.n))

    def indecomposable(self) -> bool:
        """Connectivity of the graph with an edge whenever a_ij or a_ji is nonzero."""
        n = self.n
        if n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in seen and (self.matrix[i][j] != 0 or self.matrix[j][i] != 0):
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    def root_parity(self, coords: Iterable[int]) -> int:
        """Parity of a root-lattice vector, additive over the simple roots."""
        return sum(c * p for c, p in zip(coords, self.parity)) % 2


@dataclass(frozen=True)
class ValidationReport:
    admissible: bool
    admissibility_violations: tuple[tuple[int, int, int], ...]  # (condition, i, j)
    regular: bool
    irregular_pairs: tuple[tuple[int, int], ...]
    symmetrizable: bool
    indecomposable: bool

    def ok(self) -> bool:
        return self.admissible and self.regular


def normalize(matrix: Iterable[Iterable], parity: Iterable[int]) -> CartanData:
    """Rescale each row with a nonzero diagonal so the diagonal entry is 2."""
    m = mat(matrix)
    if all(x == 0 for row in m for x in row):
        raise ZeroMatrixError("Cartan matrix is zero")
    rows = []
    for i, row in enumerate(m):
        d = row[i]
        rows.append(row if d == 0 else tuple(x * Fraction(2) / d for x in row))
    return CartanData(tuple(rows), tuple(int(p) for p in parity))


def validate(cd: CartanData) -> ValidationReport:
    """Check admissibility (three conditions), regularity and symmetrizability."""
    n = cd.n
    a = cd.matrix
    violations: list[tuple[int, int, int]] = []
    for i in range(n):
        if a[i][i] == 0 and cd.parity[i] == 0:
            for j in range(n):
                if j != i and a[i][j] != 0:
                    violations.append((1, i, j))
        elif a[i][i] == 2:
            unit = 2 if cd.parity[i] == 1 else 1
            for j in range(n):
                if j == i:
                    continue
                x = a[i][j]
                if not (x <= 0 and x.denominator == 1 and x.numerator % unit == 0):
                    violations.append((2, i, j))
                if x == 0 and a[j][i] != 0:
                    violations.append((3, i, j))
    irregular = tuple(
        (i, j)
        for i in range(n)
        for j in range(n)
        if a[i][j] == 0 and a[j][i] != 0
    )
    return ValidationReport(
        admissible=not violations,
        admissibility_violations=tuple(violations),
        regular=not irregular,
        irregular_pairs=irregular,
        symmetrizable=symmetrizer(cd) is not None,
        indecomposable=cd.indecomposable(),
    )


def symmetrizer(cd: CartanData) -> Optional[tuple[Fraction, ...]]:
    """Diagonal d with d_i a_ij = d_j a_ji, anchored at d_0 = 1 per component.

    Returns None when no invertible diagonal symmetrizer exists.  The entries
    are nonzero rationals; in the super setting they routinely carry mixed
    signs.
    """
    n = cd.n
    a = cd.matrix
    d: list[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j:
                    continue
                if a[i][j] == 0 and a[j][i] == 0:
                    continue
                if a[i][j] == 0 or a[j][i] == 0:
                    return None
                ratio = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = ratio
                    stack.append(j)
    for i in range(n):
        for j in range(n):
            if d[i] * a[i][j] != d[j] * a[j][i]:
                return None
    return tuple(d)  # type: ignore[arg-type]


def rank_one_type(cd: CartanData, i: int) -> RankOneType:
    """Type of the subalgebra generated by the i-th Chevalley pair (0-based)."""
    if not 0 <= i < cd.n:
        raise IndexError(f"index {i} out of range for rank {cd.n}")
    diag = cd.matrix[i][i]
    p = cd.parity[i]
    if diag == 0:
        return RankOneType.SL11 if p else RankOneType.HEISENBERG3
    if diag == 2:
        return RankOneType.OSP12 if p else RankOneType.SL2
    raise ValueError("Cartan data is not normalized")


def cartan_from_json(obj: dict) -> CartanData:
    """Parse {"matrix": [[...]], "parity": [...]} with rationals as "p/q"."""
    if "matrix" not in obj or "parity" not in obj:
        raise ValueError('expected keys "matrix" and "parity"')
    return normalize(
        [[frac(x) for x in row] for row in obj["matrix"]],
        [int(p) for p in obj["parity"]],
    )


def cartan_to_json(cd: CartanData) -> dict:
    def enc(x: Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    return {
        "matrix": [[enc(x) for x in row] for row in cd.matrix],
        "parity": list(cd.parity),
    }
