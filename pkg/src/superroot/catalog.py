"""Closed-form root-system handles in epsilon/delta coordinates.

Each handle answers exact membership, reality, parity and isotropy queries
for one catalog type, exposes a distinguished base in both coordinate systems
and converts between epsilon/delta and simple-root coordinates.

Families shipped: A(m,n) with m != n, B(m,n), C(n), D(m,n), D(2,1;a), their
untwisted affinizations, and the twisted family A(2k,2l)^(4).  F(4) and G(3)
are staged out of this release.  The null root of an affine type is written
``null`` in code to keep it apart from the odd coordinates delta_p.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from . import cartan as cartan_mod
from .cartan import CartanData
from .errors import (
    DimensionMismatchError,
    IsotropicReflectorError,
    NotInLatticeError,
    UnsupportedTypeError,
)
from .linalg import rank, rref
from .rootspace import Root, height

FINITE = "finite"
AFFINE = "affine"
TWISTED4 = "twisted4"


@dataclass(frozen=True)
class CatalogType:
    family: str  # "A" | "B" | "C" | "D" | "D21"
    m: int = 0
    n: int = 0
    twist: str = FINITE
    param: Optional[Fraction] = None  # the parameter of D(2,1;a)

    @property
    def label(self) -> str:
        if self.family == "C":
            core = f"C({self.n})"
        elif self.family == "D21":
            core = f"D(2,1;{self.param})"
        else:
            core = f"{self.family}({self.m},{self.n})"
        if self.twist == AFFINE:
            return core + "^(1)"
        if self.twist == TWISTED4:
            return core + "^(4)"
        return core


_TYPE_RE = re.compile(r"^([ABCD])\(([^()]*)\)(?:\^\((\d)\))?$")


def parse_type(spec: str) -> CatalogType:
    """Parse a type label such as "B(1,1)^(1)", "A(2,2)^(4)" or "D(2,1;1/2)"."""
    m = _TYPE_RE.match(spec.strip())
    if not m:
        raise UnsupportedTypeError(f"cannot parse type spec {spec!r}")
    fam, args, twist_digit = m.group(1), m.group(2), m.group(3)
    twist = {None: FINITE, "1": AFFINE, "4": TWISTED4}.get(twist_digit)
    if twist is None:
        raise UnsupportedTypeError(f"unknown twist in {spec!r}")
    parts = [p.strip() for p in args.split(";")]
    ranks = [p.strip() for p in parts[0].split(",")]
    if fam == "D" and len(parts) == 2:
        if ranks != ["2", "1"]:
            raise UnsupportedTypeError(f"parametric family requires D(2,1;a), got {spec!r}")
        return CatalogType("D21", 2, 1, twist, Fraction(parts[1]))
    if len(parts) != 1:
        raise UnsupportedTypeError(f"unexpected parameter in {spec!r}")
    if fam == "C":
        if len(ranks) != 1:
            raise UnsupportedTypeError(f"C takes one rank, got {spec!r}")
        return CatalogType("C", 0, int(ranks[0]), twist)
    if len(ranks) != 2:
        raise UnsupportedTypeError(f"{fam} takes two ranks, got {spec!r}")
    return CatalogType(fam, int(ranks[0]), int(ranks[1]), twist)


@dataclass(frozen=True)
class EpsDeltaVector:
    """Integer vector over eps_1..eps_m, delta_1..delta_n and the null root."""

    eps: tuple[int, ...] = ()
    delta: tuple[int, ...] = ()
    null: int = 0

    def __add__(self, other: "EpsDeltaVector") -> "EpsDeltaVector":
        return EpsDeltaVector(
            tuple(a + b for a, b in zip(self.eps, other.eps)),
            tuple(a + b for a, b in zip(self.delta, other.delta)),
            self.null + other.null,
        )

    def __sub__(self, other: "EpsDeltaVector") -> "EpsDeltaVector":
        return self + (-other)

    def __neg__(self) -> "EpsDeltaVector":
        return EpsDeltaVector(
            tuple(-a for a in self.eps), tuple(-a for a in self.delta), -self.null
        )

    def scaled(self, k: int) -> "EpsDeltaVector":
        return EpsDeltaVector(
            tuple(k * a for a in self.eps), tuple(k * a for a in self.delta), k * self.null
        )

    def is_zero(self) -> bool:
        return self.null == 0 and not any(self.eps) and not any(self.delta)

    def finite_part(self) -> "EpsDeltaVector":
        return EpsDeltaVector(self.eps, self.delta, 0)

    def coords(self) -> tuple[int, ...]:
        return self.eps + self.delta + (self.null,)


@dataclass(frozen=True)
class MembershipReport:
    in_delta: bool
    real: bool
    imaginary: bool
    parity: Optional[int]
    isotropic: Optional[bool]


def _unit(dim: int, i: int, val: int = 1) -> tuple[int, ...]:
    v = [0] * dim
    v[i] = val
    return tuple(v)


def _support(xs: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, x) for i, x in enumerate(xs) if x != 0]


class RootSystemHandle:
    """Membership and classification oracle for one catalog type.

    Immutable after construction; a handle may be shared freely.
    """

    def __init__(
        self,
        ctype: CatalogType,
        eps_dim: int,
        delta_dim: int,
        eps_norms: Sequence[Fraction],
        parity_coeffs: Sequence[int],
        simple_ed: Sequence[EpsDeltaVector],
        simple_parities: Sequence[int],
        iso_gauges: Sequence[Fraction],
        has_null: bool,
    ):
        self.ctype = ctype
        self.label = ctype.label
        self.eps_dim = eps_dim
        self.delta_dim = delta_dim
        self.has_null = has_null
        self.eps_norms = tuple(eps_norms)
        self.parity_coeffs = tuple(parity_coeffs)
        self.simple_ed = tuple(simple_ed)
        self.simple_parities = tuple(simple_parities)
        self.rank = len(self.simple_ed)
        self._iso_gauges = tuple(iso_gauges)
        self._coord_dim = eps_dim + delta_dim + 1
        self._simple_coords = [v.coords() for v in self.simple_ed]
        if rank(self._simple_coords) != self.rank:
            raise AssertionError("distinguished base is not linearly independent")
        self._ed_cache: dict[tuple[int, ...], EpsDeltaVector] = {}
        self._build_alpha_solver()
        self.cartan = self._build_cartan()
        self.symmetrizer = cartan_mod.symmetrizer(self.cartan)
        report = cartan_mod.validate(self.cartan)
        if not report.ok():
            raise AssertionError(f"catalog base for {self.label} failed validation: {report}")

    # -- family-specific ---------------------------------------------------

    def contains_ed(self, v: EpsDeltaVector) -> bool:
        raise NotImplementedError

    def is_imaginary_ed(self, v: EpsDeltaVector) -> bool:
        """Imaginary roots are the nonzero multiples of the null root."""
        return self.contains_ed(v) and v.finite_part().is_zero()

    def real_roots_ed(self, max_degree: Optional[int] = None) -> Iterator[EpsDeltaVector]:
        raise NotImplementedError

    # -- form, parity, isotropy --------------------------------------------

    def _check_dims(self, v: EpsDeltaVector):
        if len(v.eps) != self.eps_dim or len(v.delta) != self.delta_dim:
            raise DimensionMismatchError(
                f"vector ({len(v.eps)}|{len(v.delta)}) does not match {self.label}"
            )
        if v.null and not self.has_null:
            raise DimensionMismatchError(f"{self.label} has no null direction")

    def bilinear_ed(self, v: EpsDeltaVector, w: EpsDeltaVector) -> Fraction:
        """(eps_i,eps_j) = s_i delta_ij, (delta_p,delta_q) = -delta_pq, null isotropic."""
        total = sum((s * a * b for s, a, b in zip(self.eps_norms, v.eps, w.eps)), Fraction(0))
        total -= sum(a * b for a, b in zip(v.delta, w.delta))
        return total

    def parity_ed(self, v: EpsDeltaVector) -> int:
        return sum(c * x for c, x in zip(self.parity_coeffs, v.coords())) % 2

    def is_isotropic_ed(self, v: EpsDeltaVector) -> bool:
        return self.bilinear_ed(v, v) == 0

    def is_real_ed(self, v: EpsDeltaVector) -> bool:
        return self.contains_ed(v) and not v.finite_part().is_zero()

    def membership_classify(self, v: EpsDeltaVector) -> "MembershipReport":
        """Bundle membership, reality, parity and isotropy for one query vector."""
        self._check_dims(v)
        in_delta = self.contains_ed(v)
        return MembershipReport(
            in_delta=in_delta,
            real=in_delta and self.is_real_ed(v),
            imaginary=in_delta and self.is_imaginary_ed(v),
            parity=self.parity_ed(v) if in_delta else None,
            isotropic=self.is_isotropic_ed(v) if in_delta else None,
        )

    # -- coordinate conversion ----------------------------------------------

    def _build_alpha_solver(self) -> None:
        # One RREF of [M | I] up front; afterwards every to_alpha query is a
        # handful of dot products plus consistency checks.
        n, d = self.rank, self._coord_dim
        aug = [
            [Fraction(self._simple_coords[i][k]) for i in range(n)]
            + [Fraction(1) if j == k else Fraction(0) for j in range(d)]
            for k in range(d)
        ]
        red, pivots = rref(aug)
        self._alpha_solution_rows: list[tuple[int, list[Fraction]]] = []
        self._alpha_consistency_rows: list[list[Fraction]] = []
        for row_idx, pivot in enumerate(pivots):
            tail = red[row_idx][n:]
            if pivot < n:
                self._alpha_solution_rows.append((pivot, tail))
            else:
                self._alpha_consistency_rows.append(tail)

    def to_ed(self, root: Sequence[int]) -> EpsDeltaVector:
        key = tuple(root)
        cached = self._ed_cache.get(key)
        if cached is not None:
            return cached
        if len(key) != self.rank:
            raise DimensionMismatchError("root length differs from rank")
        acc = [0] * self._coord_dim
        for c, sv in zip(key, self._simple_coords):
            if c:
                for k, x in enumerate(sv):
                    acc[k] += c * x
        e, d = self.eps_dim, self.delta_dim
        out = EpsDeltaVector(tuple(acc[:e]), tuple(acc[e : e + d]), acc[-1])
        self._ed_cache[key] = out
        return out

    def to_alpha(self, v: EpsDeltaVector) -> Root:
        """Simple-root coordinates of a lattice vector; exact and unique."""
        self._check_dims(v)
        coords = v.coords()
        for tail in self._alpha_consistency_rows:
            if sum(t * x for t, x in zip(tail, coords) if x) != 0:
                raise NotInLatticeError(f"{v} is not in the root lattice of {self.label}")
        sol = [0] * self.rank
        for pivot, tail in self._alpha_solution_rows:
            val = sum((t * x for t, x in zip(tail, coords) if x), Fraction(0))
            if val.denominator != 1:
                raise NotInLatticeError(f"{v} has non-integer simple-root coordinates")
            sol[pivot] = int(val)
        return tuple(sol)

    # -- alpha-coordinate interface ------------------------------------------

    def contains(self, root: Sequence[int]) -> bool:
        return self.contains_ed(self.to_ed(root))

    def is_real(self, root: Sequence[int]) -> bool:
        return self.is_real_ed(self.to_ed(root))

    def is_imaginary(self, root: Sequence[int]) -> bool:
        return self.is_imaginary_ed(self.to_ed(root))

    def parity(self, root: Sequence[int]) -> int:
        return self.parity_ed(self.to_ed(root))

    def is_isotropic(self, root: Sequence[int]) -> bool:
        return self.is_isotropic_ed(self.to_ed(root))

    def is_positive(self, root: Sequence[int]) -> bool:
        return any(c != 0 for c in root) and all(c >= 0 for c in root)

    def bilinear(self, beta: Sequence[int], gamma: Sequence[int]) -> Fraction:
        return self.bilinear_ed(self.to_ed(beta), self.to_ed(gamma))

    def pairing(self, beta: Sequence[int], alpha: Sequence[int]) -> Fraction:
        """beta(h_alpha) = 2(beta,alpha)/(alpha,alpha) for non-isotropic alpha."""
        aa = self.bilinear(alpha, alpha)
        if aa == 0:
            raise IsotropicReflectorError(f"{alpha} is isotropic; no canonical coroot pairing")
        return 2 * self.bilinear(beta, alpha) / aa

    def simple_roots_alpha(self) -> tuple[Root, ...]:
        return tuple(_unit(self.rank, i) for i in range(self.rank))

    def null_root(self) -> Optional[Root]:
        if not self.has_null:
            return None
        return self.to_alpha(EpsDeltaVector((0,) * self.eps_dim, (0,) * self.delta_dim, 1))

    def degree_of(self, root: Sequence[int]) -> int:
        return self.to_ed(root).null

    def finite_part(self, root: Sequence[int]) -> EpsDeltaVector:
        return self.to_ed(root).finite_part()

    @property
    def is_finite(self) -> bool:
        return not self.has_null

    def real_roots(
        self, max_height: Optional[int] = None, max_degree: Optional[int] = None
    ) -> list[Root]:
        """Real roots in alpha-coordinates, sorted, within the given bounds."""
        if self.has_null and max_degree is None:
            if max_height is None:
                raise ValueError("affine enumeration needs max_height or max_degree")
            max_degree = max_height
        out = []
        for v in self.real_roots_ed(max_degree):
            r = self.to_alpha(v)
            if max_height is None or height(r) <= max_height:
                out.append(r)
        return sorted(out)

    def positive_real_roots(
        self, max_height: Optional[int] = None, max_degree: Optional[int] = None
    ) -> list[Root]:
        return [r for r in self.real_roots(max_height, max_degree) if self.is_positive(r)]

    def imaginary_roots(self, max_degree: int) -> list[Root]:
        if not self.has_null:
            return []
        base = EpsDeltaVector((0,) * self.eps_dim, (0,) * self.delta_dim, 1)
        return sorted(
            self.to_alpha(base.scaled(k))
            for k in range(-max_degree, max_degree + 1)
            if k != 0 and self.contains_ed(base.scaled(k))
        )

    def all_roots(
        self, max_height: Optional[int] = None, max_degree: Optional[int] = None
    ) -> list[Root]:
        out = list(self.real_roots(max_height, max_degree))
        if self.has_null:
            d = max_degree if max_degree is not None else max_height
            for r in self.imaginary_roots(d):
                if max_height is None or height(r) <= max_height:
                    out.append(r)
        return sorted(out)

    # -- Cartan data ----------------------------------------------------------

    def _build_cartan(self) -> CartanData:
        n = self.rank
        rows = []
        for i in range(n):
            ai = self.simple_ed[i]
            norm = self.bilinear_ed(ai, ai)
            row = []
            for j in range(n):
                val = self.bilinear_ed(ai, self.simple_ed[j])
                row.append(2 * val / norm if norm != 0 else self._iso_gauges[i] * val)
            rows.append(tuple(row))
        cd = CartanData(tuple(rows), tuple(self.simple_parities))
        for i in range(n):
            if cd.root_parity(_unit(n, i)) != self.simple_parities[i]:
                raise AssertionError("parity functional disagrees with simple parities")
        return cd


# ---------------------------------------------------------------------------
# finite families


class FiniteHandle(RootSystemHandle):
    def __init__(self, ctype, eps_dim, delta_dim, eps_norms, parity_coeffs,
                 simple_ed, simple_parities, iso_gauges, highest_root: EpsDeltaVector):
        self.highest_root = highest_root
        super().__init__(
            ctype, eps_dim, delta_dim, eps_norms, parity_coeffs,
            simple_ed, simple_parities, iso_gauges, has_null=False,
        )
        if not self.contains_ed(highest_root):
            raise AssertionError("highest root is not a root")

    def all_roots_ed(self) -> list[EpsDeltaVector]:
        return list(self.real_roots_ed(None))

    def real_roots(self, max_height=None, max_degree=None) -> list[Root]:
        out = [self.to_alpha(v) for v in self.real_roots_ed(None)]
        if max_height is not None:
            out = [r for r in out if height(r) <= max_height]
        return sorted(out)


def _pattern_pairs(dim: int, val_i: int, val_j: int) -> Iterator[tuple[int, ...]]:
    for i in range(dim):
        for j in range(dim):
            if i == j:
                continue
            v = [0] * dim
            v[i], v[j] = val_i, val_j
            yield tuple(v)


def _pattern_singles(dim: int, val: int) -> Iterator[tuple[int, ...]]:
    for i in range(dim):
        yield _unit(dim, i, val)


class _TypeAHandle(FiniteHandle):
    """A(m,n) = sl(m+1|n+1) with m != n; eps_1..eps_{m+1}, delta_1..delta_{n+1}."""

    def contains_ed(self, v: EpsDeltaVector) -> bool:
        self._check_dims(v)
        if v.null != 0:
            return False
        se, sd = _support(v.eps), _support(v.delta)
        if len(se) == 2 and not sd:
            return sorted(x for _, x in se) == [-1, 1]
        if len(sd) == 2 and not se:
            return sorted(x for _, x in sd) == [-1, 1]
        if len(se) == 1 and len(sd) == 1:
            return abs(se[0][1]) == 1 and sd[0][1] == -se[0][1]
        return False

    def real_roots_ed(self, max_degree=None) -> Iterator[EpsDeltaVector]:
        e, d = self.eps_dim, self.delta_dim
        zd, ze = (0,) * d, (0,) * e
        for ev in _pattern_pairs(e, 1, -1):
            yield EpsDeltaVector(ev, zd)
        for dv in _pattern_pairs(d, 1, -1):
            yield EpsDeltaVector(ze, dv)
        for i in range(e):
            for p in range(d):
                for s in (1, -1):
                    yield EpsDeltaVector(_unit(e, i, s), _unit(d, p, -s))


class _TypeBHandle(FiniteHandle):
    """B(m,n) = osp(2m+1|2n); includes B(0,n) = osp(1|2n)."""

    def contains_ed(self, v: EpsDeltaVector) -> bool:
        self._check_dims(v)
        if v.null != 0:
            return False
        se, sd = _support(v.eps), _support(v.delta)
        if not sd:
            if len(se) == 2:
                return all(abs(x) == 1 for _, x in se)
            return len(se) == 1 and abs(se[0][1]) == 1
        if not se:
            if len(sd) == 2:
                return all(abs(x) == 1 for _, x in sd)
            return len(sd) == 1 and abs(sd[0][1]) in (1, 2)
        if len(se) == 1 and len(sd) == 1:
            return abs(se[0][1]) == 1 and abs(sd[0][1]) == 1
        return False

    def real_roots_ed(self, max_degree=None) -> Iterator[EpsDeltaVector]:
        e, d = self.eps_dim, self.delta_dim
        zd, ze = (0,) * d, (0,) * e
        seen = set()
        for ev in _pattern_pairs(e, 1, 1):
            seen.add(ev)
        for ev in _pattern_pairs(e, 1, -1):
            seen.add(ev)
        for ev in _pattern_pairs(e, -1, -1):
            seen.add(ev)
        for ev in sorted(seen):
            yield EpsDeltaVector(ev, zd)
        for s in (1, -1):
            for ev in _pattern_singles(e, s):
                yield EpsDeltaVector(ev, zd)
        seen = set()
        for a in (1, -1):
            for b in (1, -1):
                for dv in _pattern_pairs(d, a, b):
                    seen.add(dv)
        for dv in sorted(seen):
            yield EpsDeltaVector(ze, dv)
        for s in (1, -1, 2, -2):
            for dv in _pattern_singles(d, s):
                yield EpsDeltaVector(ze, dv)
        for i in range(e):
            for p in range(d):
                for a in (1, -1):
                    for b in (1, -1):
                        yield EpsDeltaVector(_unit(e, i, a), _unit(d, p, b))


class _TypeCHandle(FiniteHandle):
    """C(n) = osp(2|2n-2); one eps, delta_1..delta_{n-1}."""

    def contains_ed(self, v: EpsDeltaVector) -> bool:
        self._check_dims(v)
        if v.null != 0:
            return False
        se, sd = _support(v.eps), _support(v.delta)
        if not se:
            if len(sd) == 2:
                return all(abs(x) == 1 for _, x in sd)
            return len(sd) == 1 and abs(sd[0][1]) == 2
        if len(se) == 1 and len(sd) == 1:
            return abs(se[0][1]) == 1 and abs(sd[0][1]) == 1
        return False

    def real_roots_ed(self, max_degree=None) -> Iterator[EpsDeltaVector]:
        e, d = self.eps_dim, self.delta_dim
        zd, ze = (0,) * d, (0,) * e
        seen = set()
        for a in (1, -1):
            for b in (1, -1):
                for dv in _pattern_pairs(d, a, b):
                    seen.add(dv)
        for dv in sorted(seen):
            yield EpsDeltaVector(ze, dv)
        for s in (2, -2):
            for dv in _pattern_singles(d, s):
                yield EpsDeltaVector(ze, dv)
        for p in range(d):
            for a in (1, -1):
                for b in (1, -1):
                    yield EpsDeltaVector(_unit(e, 0, a), _unit(d, p, b))


class _TypeDHandle(FiniteHandle):
    """D(m,n) = osp(2m|2n), m >= 2."""

    def contains_ed(self, v: EpsDeltaVector) -> bool:
        self._check_dims(v)
        if v.null != 0:
            return False
        se, sd = _support(v.eps), _support(v.delta)
        if not sd:
            return len(se) == 2 and all(abs(x) == 1 for _, x in se)
        if not se:
            if len(sd) == 2:
                return all(abs(x) == 1 for _, x in sd)
            return len(sd) == 1 and abs(sd[0][1]) == 2
        if len(se) == 1 and len(sd) == 1:
            return abs(se[0][1]) == 1 and abs(sd[0][1]) == 1
        return False

    def real_roots_ed(self, max_degree=None) -> Iterator[EpsDeltaVector]:
        e, d = self.eps_dim, self.delta_dim
        zd, ze = (0,) * d, (0,) * e
        seen = set()
        for a in (1, -1):
            for b in (1, -1):
                for ev in _pattern_pairs(e, a, b):
                    seen.add(ev)
        for ev in sorted(seen):
            yield EpsDeltaVector(ev, zd)
        seen = set()
        for a in (1, -1):
            for b in (1, -1):
                for dv in _pattern_pairs(d, a, b):
                    seen.add(dv)
        for dv in sorted(seen):
            yield EpsDeltaVector(ze, dv)
        for s in (2, -2):
            for dv in _pattern_singles(d, s):
                yield EpsDeltaVector(ze, dv)
        for i in range(e):
            for p in range(d):
                for a in (1, -1):
                    for b in (1, -1):
                        yield EpsDeltaVector(_unit(e, i, a), _unit(d, p, b))


class _TypeD21Handle(FiniteHandle):
    """D(2,1;a): three eps coordinates, norms (-(1+a), 1, a)."""

    def contains_ed(self, v: EpsDeltaVector) -> bool:
        self._check_dims(v)
        if v.null != 0:
            return False
        se = _support(v.eps)
        if len(se) == 1:
            return abs(se[0][1]) == 2
        return len(se) == 3 and all(abs(x) == 1 for _, x in se)

    def real_roots_ed(self, max_degree=None) -> Iterator[EpsDeltaVector]:
        for i in range(3):
            for s in (2, -2):
                yield EpsDeltaVector(_unit(3, i, s), ())
        for a in (1, -1):
            for b in (1, -1):
                for c in (1, -1):
                    yield EpsDeltaVector((a, b, c), ())


def _build_finite(ctype: CatalogType) -> FiniteHandle:
    ones = Fraction(1)
    if ctype.family == "A":
        m, n = ctype.m, ctype.n
        if m == n:
            raise UnsupportedTypeError(
                f"A({m},{n}) has degenerate Cartan data and is not quasisimple; unsupported"
            )
        if m < 0 or n < 0:
            raise UnsupportedTypeError("negative rank")
        e, d = m + 1, n + 1
        simples, parities = [], []
        for i in range(m):
            simples.append(EpsDeltaVector(
                tuple(x - y for x, y in zip(_unit(e, i), _unit(e, i + 1))), (0,) * d))
            parities.append(0)
        simples.append(EpsDeltaVector(_unit(e, m), _unit(d, 0, -1)))
        parities.append(1)
        for p in range(n):
            simples.append(EpsDeltaVector(
                (0,) * e, tuple(x - y for x, y in zip(_unit(d, p), _unit(d, p + 1)))))
            parities.append(0)
        theta = EpsDeltaVector(_unit(e, 0), _unit(d, d - 1, -1))
        return _TypeAHandle(
            ctype, e, d, (ones,) * e, (0,) * e + (1,) * d + (0,),
            simples, parities, (ones,) * len(simples), theta,
        )
    if ctype.family == "B":
        m, n = ctype.m, ctype.n
        if n < 1 or m < 0:
            raise UnsupportedTypeError("B(m,n) requires n >= 1")
        simples, parities = [], []
        for p in range(n - 1):
            simples.append(EpsDeltaVector(
                (0,) * m, tuple(x - y for x, y in zip(_unit(n, p), _unit(n, p + 1)))))
            parities.append(0)
        if m >= 1:
            simples.append(EpsDeltaVector(_unit(m, 0, -1), _unit(n, n - 1)))
            parities.append(1)
            for i in range(m - 1):
                simples.append(EpsDeltaVector(
                    tuple(x - y for x, y in zip(_unit(m, i), _unit(m, i + 1))), (0,) * n))
                parities.append(0)
            simples.append(EpsDeltaVector(_unit(m, m - 1), (0,) * n))
            parities.append(0)
        else:
            simples.append(EpsDeltaVector((), _unit(n, n - 1)))
            parities.append(1)
        theta = EpsDeltaVector((0,) * m, _unit(n, 0, 2))
        return _TypeBHandle(
            ctype, m, n, (ones,) * m, (0,) * m + (1,) * n + (0,),
            simples, parities, (ones,) * len(simples), theta,
        )
    if ctype.family == "C":
        n = ctype.n
        if n < 2:
            raise UnsupportedTypeError("C(n) requires n >= 2")
        d = n - 1
        simples = [EpsDeltaVector((1,), _unit(d, 0, -1))]
        parities = [1]
        for p in range(d - 1):
            simples.append(EpsDeltaVector(
                (0,), tuple(x - y for x, y in zip(_unit(d, p), _unit(d, p + 1)))))
            parities.append(0)
        simples.append(EpsDeltaVector((0,), _unit(d, d - 1, 2)))
        parities.append(0)
        theta = EpsDeltaVector((1,), _unit(d, 0))
        return _TypeCHandle(
            ctype, 1, d, (ones,), (0,) + (1,) * d + (0,),
            simples, parities, (ones,) * len(simples), theta,
        )
    if ctype.family == "D":
        m, n = ctype.m, ctype.n
        if m < 2 or n < 1:
            raise UnsupportedTypeError("D(m,n) requires m >= 2, n >= 1")
        simples, parities = [], []
        for p in range(n - 1):
            simples.append(EpsDeltaVector(
                (0,) * m, tuple(x - y for x, y in zip(_unit(n, p), _unit(n, p + 1)))))
            parities.append(0)
        simples.append(EpsDeltaVector(_unit(m, 0, -1), _unit(n, n - 1)))
        parities.append(1)
        for i in range(m - 1):
            simples.append(EpsDeltaVector(
                tuple(x - y for x, y in zip(_unit(m, i), _unit(m, i + 1))), (0,) * n))
            parities.append(0)
        last = [0] * m
        last[m - 2], last[m - 1] = 1, 1
        simples.append(EpsDeltaVector(tuple(last), (0,) * n))
        parities.append(0)
        theta = EpsDeltaVector((0,) * m, _unit(n, 0, 2))
        return _TypeDHandle(
            ctype, m, n, (ones,) * m, (0,) * m + (1,) * n + (0,),
            simples, parities, (ones,) * len(simples), theta,
        )
    if ctype.family == "D21":
        a = ctype.param
        if a is None or a == 0 or a == -1:
            raise UnsupportedTypeError("D(2,1;a) requires a rational a outside {0,-1}")
        simples = [
            EpsDeltaVector((1, -1, -1), ()),
            EpsDeltaVector((0, 2, 0), ()),
            EpsDeltaVector((0, 0, 2), ()),
        ]
        theta = EpsDeltaVector((2, 0, 0), ())
        return _TypeD21Handle(
            ctype, 3, 0, (-(1 + a), Fraction(1), a), (0, 0, 1, 0),
            simples, (1, 0, 0), (Fraction(-1, 2), ones, ones), theta,
        )
    raise UnsupportedTypeError(f"family {ctype.family!r} is not in the catalog")


# ---------------------------------------------------------------------------
# untwisted affinization


class UntwistedAffineHandle(RootSystemHandle):
    """Loop-type root system over a finite handle: real roots gamma + r*null."""

    def __init__(self, ctype: CatalogType, finite: FiniteHandle):
        self.finite = finite
        theta = finite.highest_root
        alpha0 = EpsDeltaVector(
            tuple(-x for x in theta.eps), tuple(-x for x in theta.delta), 1
        )
        simples = [alpha0] + [
            EpsDeltaVector(s.eps, s.delta, 0) for s in finite.simple_ed
        ]
        parities = [finite.parity_ed(theta)] + list(finite.simple_parities)
        gauges = [Fraction(1)] + list(finite._iso_gauges)
        super().__init__(
            ctype, finite.eps_dim, finite.delta_dim, finite.eps_norms,
            finite.parity_coeffs[:-1] + (0,), simples, parities, gauges, has_null=True,
        )

    def contains_ed(self, v: EpsDeltaVector) -> bool:
        self._check_dims(v)
        fin = v.finite_part()
        if fin.is_zero():
            return v.null != 0
        return self.finite.contains_ed(EpsDeltaVector(fin.eps, fin.delta))

    def real_roots_ed(self, max_degree: Optional[int] = None) -> Iterator[EpsDeltaVector]:
        if max_degree is None:
            raise ValueError("affine enumeration needs a degree bound")
        for gamma in self.finite.real_roots_ed(None):
            for r in range(-max_degree, max_degree + 1):
                yield EpsDeltaVector(gamma.eps, gamma.delta, r)


# ---------------------------------------------------------------------------
# the twisted family A(2k,2l)^(4)


class TwistedA4Handle(RootSystemHandle):
    """A(2k,2l)^(4): eps_1..eps_k, delta_1..delta_l, null root of parity 1.

    Membership is clause-by-clause: two-entry eps or delta vectors at even
    null degree, single eps/delta entries at any degree, doubled eps entries
    at degrees 2 mod 4, doubled delta entries at degrees 0 mod 4, mixed
    eps+delta pairs (the isotropic roots) at even degrees, and the nonzero
    multiples of the null root as imaginary roots.
    """

    def __init__(self, ctype: CatalogType):
        if ctype.m < 2 or ctype.n < 2 or ctype.m % 2 or ctype.n % 2:
            raise UnsupportedTypeError("the order-4 twist needs even superranks >= 2")
        k, l = ctype.m // 2, ctype.n // 2
        simples = [EpsDeltaVector((0,) * k, _unit(l, 0, -1), 1)]
        parities = [0]
        for p in range(l - 1):
            simples.append(EpsDeltaVector(
                (0,) * k, tuple(x - y for x, y in zip(_unit(l, p), _unit(l, p + 1))), 0))
            parities.append(0)
        simples.append(EpsDeltaVector(_unit(k, 0, -1), _unit(l, l - 1), 0))
        parities.append(1)
        for i in range(k - 1):
            simples.append(EpsDeltaVector(
                tuple(x - y for x, y in zip(_unit(k, i), _unit(k, i + 1))), (0,) * l, 0))
            parities.append(0)
        simples.append(EpsDeltaVector(_unit(k, k - 1), (0,) * l, 0))
        parities.append(0)
        super().__init__(
            ctype, k, l, (Fraction(1),) * k, (0,) * k + (1,) * l + (1,),
            simples, parities, (Fraction(1),) * len(simples), has_null=True,
        )

    def contains_ed(self, v: EpsDeltaVector) -> bool:
        self._check_dims(v)
        se, sd = _support(v.eps), _support(v.delta)
        r = v.null
        if not se and not sd:
            return r != 0
        if not sd:
            if len(se) == 2:
                return all(abs(x) == 1 for _, x in se) and r % 2 == 0
            if len(se) == 1:
                if abs(se[0][1]) == 1:
                    return True
                return abs(se[0][1]) == 2 and r % 4 == 2
            return False
        if not se:
            if len(sd) == 2:
                return all(abs(x) == 1 for _, x in sd) and r % 2 == 0
            if len(sd) == 1:
                if abs(sd[0][1]) == 1:
                    return True
                return abs(sd[0][1]) == 2 and r % 4 == 0
            return False
        if len(se) == 1 and len(sd) == 1:
            return abs(se[0][1]) == 1 and abs(sd[0][1]) == 1 and r % 2 == 0
        return False

    def real_roots_ed(self, max_degree: Optional[int] = None) -> Iterator[EpsDeltaVector]:
        if max_degree is None:
            raise ValueError("affine enumeration needs a degree bound")
        k, l = self.eps_dim, self.delta_dim
        zd, ze = (0,) * l, (0,) * k
        degrees = range(-max_degree, max_degree + 1)
        pair_eps = set()
        for a in (1, -1):
            for b in (1, -1):
                pair_eps.update(_pattern_pairs(k, a, b))
        pair_del = set()
        for a in (1, -1):
            for b in (1, -1):
                pair_del.update(_pattern_pairs(l, a, b))
        for r in degrees:
            even = r % 2 == 0
            if even:
                for ev in sorted(pair_eps):
                    yield EpsDeltaVector(ev, zd, r)
                for dv in sorted(pair_del):
                    yield EpsDeltaVector(ze, dv, r)
                for i in range(k):
                    for p in range(l):
                        for a in (1, -1):
                            for b in (1, -1):
                                yield EpsDeltaVector(_unit(k, i, a), _unit(l, p, b), r)
            for s in (1, -1):
                for ev in _pattern_singles(k, s):
                    yield EpsDeltaVector(ev, zd, r)
                for dv in _pattern_singles(l, s):
                    yield EpsDeltaVector(ze, dv, r)
            if r % 4 == 2:
                for s in (2, -2):
                    for ev in _pattern_singles(k, s):
                        yield EpsDeltaVector(ev, zd, r)
            if r % 4 == 0:
                for s in (2, -2):
                    for dv in _pattern_singles(l, s):
                        yield EpsDeltaVector(ze, dv, r)


def build(ctype: CatalogType) -> RootSystemHandle:
    """Construct the root-system handle for a catalog type."""
    if isinstance(ctype, str):
        ctype = parse_type(ctype)
    if ctype.twist == TWISTED4:
        if ctype.family != "A":
            raise UnsupportedTypeError("the order-4 twist exists only for family A")
        return TwistedA4Handle(ctype)
    finite = _build_finite(CatalogType(ctype.family, ctype.m, ctype.n, FINITE, ctype.param))
    if ctype.twist == FINITE:
        return finite
    if ctype.twist == AFFINE:
        return UntwistedAffineHandle(ctype, finite)
    raise UnsupportedTypeError(f"unknown twist {ctype.twist!r}")
