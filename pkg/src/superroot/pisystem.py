"""pi-systems, reflection closures, closed subroot systems and Pi(Psi).

A ``RootSet`` is a finite set of real roots in simple-root coordinates bound
to a catalog handle.  The reflection s_alpha acts by the isotropic case split
when alpha is isotropic and as the even reflection beta - beta(h_alpha) alpha
otherwise.  The closure S_infinity iterates S_k = +-{s_alpha(beta)} starting
from (S u 2S) n Delta^re; iterations that had to discard a root above the
height bound can only report "truncated" and every downstream consumer of a
truncated closure answers "inconclusive" rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import rootspace as rs
from .catalog import RootSystemHandle
from .errors import (
    InconclusiveError,
    NotARealRootError,
    NotClosedError,
    PairingNotIntegralError,
)
from .lp import feasible_nonneg
from .rootspace import Root, height

STABILIZED = "stabilized"
TRUNCATED = "truncated"


@dataclass(frozen=True)
class RootSet:
    elements: frozenset[Root]
    handle: RootSystemHandle

    def __post_init__(self):
        for r in self.elements:
            if not self.handle.is_real(r):
                raise NotARealRootError(f"{r} is not a real root of {self.handle.label}")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, r) -> bool:
        return tuple(r) in self.elements

    def sorted(self) -> list[Root]:
        return sorted(self.elements)

    def positive(self) -> list[Root]:
        return sorted(r for r in self.elements if self.handle.is_positive(r))


def root_set(handle: RootSystemHandle, roots: Iterable[Iterable[int]]) -> RootSet:
    return RootSet(frozenset(tuple(int(c) for c in r) for r in roots), handle)


def reflect(handle: RootSystemHandle, alpha: Root, beta: Root) -> Root:
    """s_alpha(beta) on real roots: odd case split or even reflection."""
    if handle.is_isotropic(alpha):
        if beta == alpha or beta == rs.neg(alpha):
            return rs.neg(beta)
        if handle.is_real(rs.add(alpha, beta)):
            return rs.add(beta, alpha)
        return beta
    c = handle.pairing(beta, alpha)
    if c.denominator != 1:
        raise PairingNotIntegralError(
            f"pairing of {beta} against {alpha} is {c}, not an integer"
        )
    return rs.sub(beta, rs.scale(int(c), alpha))


@dataclass(frozen=True)
class PiSystemReport:
    ok: bool
    difference_violations: tuple[tuple[Root, Root, Root], ...]
    cone_violations: tuple[Root, ...]


def is_pi_system(sigma: RootSet) -> PiSystemReport:
    """Check both defining conditions, listing every violation found.

    Condition one: no pairwise difference is a root.  Condition two: no
    element lies in the nonnegative rational cone of the others, decided by
    exact feasibility.
    """
    handle = sigma.handle
    elems = sigma.sorted()
    diffs = []
    for a in elems:
        for b in elems:
            if a != b:
                d = rs.sub(a, b)
                if handle.contains(d):
                    diffs.append((a, b, d))
    cone = []
    for a in elems:
        others = [list(b) for b in elems if b != a]
        if others:
            dim = len(a)
            rows = [[Fraction(o[i]) for o in others] for i in range(dim)]
            if feasible_nonneg(rows, [Fraction(c) for c in a]) is not None:
                cone.append(a)
        elif all(c == 0 for c in a):
            cone.append(a)
    return PiSystemReport(
        ok=not diffs and not cone and len(elems) > 0,
        difference_violations=tuple(diffs),
        cone_violations=tuple(cone),
    )


@dataclass(frozen=True)
class ClosureResult:
    roots: RootSet
    status: str  # STABILIZED or TRUNCATED
    rounds: int

    @property
    def stabilized(self) -> bool:
        return self.status == STABILIZED


def closure_S_infinity(
    seed: RootSet, height_bound: Optional[int] = None, max_rounds: int = 64
) -> ClosureResult:
    """Iterate the reflection-and-negation closure of a set of real roots."""
    handle = seed.handle
    if height_bound is None and not handle.is_finite:
        raise ValueError("affine closures need a height bound")
    s0 = set(seed.elements)
    for r in seed.elements:
        twice = rs.scale(2, r)
        if handle.is_real(twice):
            s0.add(twice)
    current = frozenset(s0)
    discarded = False
    rounds = 0
    while rounds < max_rounds:
        rounds += 1
        nxt = set()
        for a in current:
            for b in current:
                r = reflect(handle, a, b)
                nxt.add(r)
                nxt.add(rs.neg(r))
        if height_bound is not None:
            kept = {r for r in nxt if height(r) <= height_bound}
            if len(kept) != len(nxt):
                discarded = True
            nxt = kept
        nxt = frozenset(nxt)
        if nxt == current:
            status = TRUNCATED if discarded else STABILIZED
            return ClosureResult(RootSet(current, handle), status, rounds)
        current = nxt
    return ClosureResult(RootSet(current, handle), TRUNCATED, rounds)


@dataclass(frozen=True)
class SubsetClassification:
    symmetric: bool
    closed: bool
    subroot_system: bool


def classify_subset(psi: RootSet) -> SubsetClassification:
    """Symmetry, closedness and reflection stability by exhaustive pair checks."""
    handle = psi.handle
    elems = psi.sorted()
    symmetric = all(rs.neg(r) in psi.elements for r in elems)
    closed = True
    for a in elems:
        for b in elems:
            s = rs.add(a, b)
            if any(s) and handle.is_real(s) and s not in psi.elements:
                closed = False
                break
        if not closed:
            break
    subroot = True
    for a in elems:
        for b in elems:
            if reflect(handle, a, b) not in psi.elements:
                subroot = False
                break
        if not subroot:
            break
    return SubsetClassification(symmetric, closed, subroot)


def _precedes(gamma: Root, alpha: Root, positives: list[Root]) -> bool:
    # gamma <= alpha iff alpha = a*gamma + sum of nonnegative multiples of the
    # other positives with a > 0.  Homogenized: t*alpha = gamma + nonneg combo,
    # t >= 0.  t = 0 would express 0 as gamma plus a nonnegative combination
    # of positive roots, impossible, so feasibility already forces t > 0.
    others = [o for o in positives if o != gamma and o != alpha]
    dim = len(alpha)
    cols = [list(alpha)] + [[-x for x in o] for o in others]
    rows = [[Fraction(c[i]) for c in cols] for i in range(dim)]
    return feasible_nonneg(rows, [Fraction(x) for x in gamma]) is not None


def _is_positive_multiple(gamma: Root, alpha: Root) -> bool:
    # gamma in N * alpha with alpha nonzero
    ks = {g // a for g, a in zip(gamma, alpha) if a != 0}
    if len(ks) != 1:
        return False
    k = ks.pop()
    return k >= 1 and gamma == rs.scale(k, alpha)


def minimal_positive_elements(psi: RootSet) -> RootSet:
    """Preorder-minimal positive elements, with no closedness gate.

    This is also meaningful on a window-restricted closure: the witnesses
    that exclude a non-minimal element are same-sign combinations of the
    generating set, which any window containing that set retains.
    """
    positives = psi.positive()
    out = []
    for alpha in positives:
        minimal = True
        for gamma in positives:
            if gamma == alpha:
                continue
            if _precedes(gamma, alpha, positives) and not _is_positive_multiple(gamma, alpha):
                minimal = False
                break
        if minimal:
            out.append(alpha)
    return RootSet(frozenset(out), psi.handle)


def pi_of_psi(psi: RootSet) -> RootSet:
    """The preorder-minimal positive part Pi(Psi) of a closed subroot system."""
    cls = classify_subset(psi)
    if not cls.closed:
        raise NotClosedError("Pi(Psi) is defined for closed subsets only")
    return minimal_positive_elements(psi)


def admits_pi_system(
    psi: RootSet, height_bound: Optional[int] = None, max_rounds: int = 64
) -> Optional[RootSet]:
    """The unique candidate pi-system of Psi, or None when Psi admits none.

    Any pi-system admitted by Psi must equal Pi(Psi), so it suffices to test
    that single candidate: it must be a pi-system and its closure must
    stabilize to exactly Psi.
    """
    cls = classify_subset(psi)
    if not (cls.closed and cls.subroot_system):
        raise NotClosedError("admits_pi_system requires a closed subroot system")
    sigma = pi_of_psi(psi)
    if not is_pi_system(sigma).ok:
        return None
    closure = closure_S_infinity(sigma, height_bound, max_rounds)
    if not closure.stabilized:
        raise InconclusiveError("closure of Pi(Psi) did not stabilize within bounds")
    return sigma if closure.roots.elements == psi.elements else None


@dataclass(frozen=True)
class DynkinCertificate:
    closure_closed_subroot: bool
    pi_roundtrip: bool
    oracle_match: Optional[bool]
    closure: RootSet
    status: str

    def ok(self) -> bool:
        return (
            self.closure_closed_subroot
            and self.pi_roundtrip
            and self.oracle_match is not False
        )


def verify_dynkin_maps(
    sigma: RootSet,
    height_bound: Optional[int] = None,
    max_rounds: int = 64,
    with_oracle: bool = True,
    loop_degree: Optional[int] = None,
) -> DynkinCertificate:
    """Certify the bijection data for one pi-system inside the positive roots."""
    report = is_pi_system(sigma)
    if not report.ok:
        raise ValueError(f"input is not a pi-system: {report}")
    if any(not sigma.handle.is_positive(r) for r in sigma):
        raise ValueError("the pi-system must lie in the positive roots")
    closure = closure_S_infinity(sigma, height_bound, max_rounds)
    if not closure.stabilized:
        raise InconclusiveError("closure did not stabilize; cannot certify")
    cls = classify_subset(closure.roots)
    roundtrip = pi_of_psi(closure.roots).elements == sigma.elements
    oracle_match: Optional[bool] = None
    if with_oracle:
        from . import oracle  # deferred to avoid an import cycle
        from .errors import TruncationHitError, UnsupportedTypeError

        try:
            verdict = oracle.verify_theorem_main(sigma, loop_degree=loop_degree)
            oracle_match = verdict.ok
        except (UnsupportedTypeError, InconclusiveError, TruncationHitError):
            oracle_match = None
    return DynkinCertificate(
        closure_closed_subroot=cls.closed and cls.subroot_system and cls.symmetric,
        pi_roundtrip=roundtrip,
        oracle_match=oracle_match,
        closure=closure.roots,
        status=closure.status,
    )
