"""Root strings through a root in a real direction, and the string laws.

The string through beta in direction alpha is {beta + k alpha} intersected
with the root set.  For non-isotropic alpha the string is unbroken once the
zero vector is allowed to fill its slot: beta + k alpha lies in the roots or
is zero exactly for -p <= k <= q with p - q equal to the coroot pairing, and
s_alpha reverses the string.  Strings in isotropic directions are finite and
carry at most two real roots.  Violations of any of these laws raise; they
would signal a defect in the membership oracle, never a tolerable state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import rootspace as rs
from .catalog import RootSystemHandle
from .errors import (
    BrokenStringError,
    NotARootError,
    PatternViolationError,
    WindowExhaustedError,
)
from .rootspace import Root, height


@dataclass(frozen=True)
class StringEntry:
    k: int
    root: Root
    real: bool


@dataclass(frozen=True)
class RootString:
    base_root: Root
    direction: Root
    entries: tuple[StringEntry, ...]  # sorted by k
    zero_slot: Optional[int]  # k with beta + k alpha = 0, if any
    direction_isotropic: bool
    pairing: Optional[Fraction]  # beta(h_alpha) for non-isotropic directions

    def ks(self) -> list[int]:
        return [e.k for e in self.entries]

    def real_count(self) -> int:
        return sum(1 for e in self.entries if e.real)


def _scan(handle, beta, alpha, w):
    entries = []
    zero_slot = None
    for k in range(-w, w + 1):
        v = rs.add(beta, rs.scale(k, alpha))
        if all(c == 0 for c in v):
            zero_slot = k
        elif handle.contains(v):
            entries.append(StringEntry(k, v, handle.is_real(v)))
    return entries, zero_slot


def root_string(
    handle: RootSystemHandle, beta: Root, alpha: Root, window: Optional[int] = None
) -> RootString:
    """Scan the alpha-string through beta and tag each member real/imaginary."""
    if not handle.is_real(alpha):
        raise NotARootError(f"direction {alpha} is not a real root")
    if not handle.contains(beta):
        raise NotARootError(f"{beta} is not a root")
    isotropic = handle.is_isotropic(alpha)
    if isotropic:
        w = window if window is not None else height(beta) + 2
        entries, zero_slot = _scan(handle, beta, alpha, w)
        if entries and (entries[0].k == -w or entries[-1].k == w):
            raise WindowExhaustedError(
                f"isotropic-direction string still has members at |k| = {w}"
            )
        pairing = None
    else:
        pairing = handle.pairing(beta, alpha)
        w = window if window is not None else max(6, abs(int(pairing)) + 4)
        while True:
            entries, zero_slot = _scan(handle, beta, alpha, w)
            occupied = [e.k for e in entries]
            if zero_slot is not None:
                occupied.append(zero_slot)
            # Two consecutive misses must flank the string on both sides.
            if occupied and (min(occupied) <= -w + 1 or max(occupied) >= w - 1):
                w *= 2
                if w > 4096:
                    raise WindowExhaustedError("non-isotropic string did not close")
                continue
            break
    return RootString(
        base_root=beta,
        direction=alpha,
        entries=tuple(entries),
        zero_slot=zero_slot,
        direction_isotropic=isotropic,
        pairing=pairing,
    )


@dataclass(frozen=True)
class UnbrokenReport:
    p: int
    q: int


def check_unbroken(s: RootString) -> UnbrokenReport:
    """Verify contiguity, p - q = pairing, and reversal by s_alpha.

    p and q count the extent below and above the base root, with the zero
    vector allowed to occupy its slot inside the string.
    """
    if s.direction_isotropic:
        raise ValueError("unbrokenness applies to non-isotropic directions")
    occupied = set(s.ks())
    if s.zero_slot is not None:
        occupied.add(s.zero_slot)
    if 0 not in occupied:
        raise BrokenStringError("the base root is missing from its own string")
    q = 0
    while q + 1 in occupied:
        q += 1
    p = 0
    while -(p + 1) in occupied:
        p += 1
    if any(k > q or k < -p for k in occupied):
        raise BrokenStringError(
            f"string through {s.base_root} along {s.direction} has a gap: {sorted(occupied)}"
        )
    if Fraction(p - q) != s.pairing:
        raise BrokenStringError(
            f"p - q = {p - q} differs from the pairing {s.pairing}"
        )
    shift = p - q
    tags = {e.k: e.real for e in s.entries}
    for e in s.entries:
        mirror = -e.k - shift
        if tags.get(mirror) != e.real:
            raise BrokenStringError(
                f"s_alpha does not reverse the string at k = {e.k}"
            )
    return UnbrokenReport(p=p, q=q)


@dataclass(frozen=True)
class PatternReport:
    p_real: int
    q_imag: int
    r_real: int


def string_pattern(s: RootString) -> PatternReport:
    """Decompose tags into real prefix, imaginary middle, real suffix."""
    if s.direction_isotropic:
        raise ValueError("the pattern law applies to non-isotropic directions")
    tags = [e.real for e in s.entries]
    if not any(tags):
        raise ValueError("the pattern law needs at least one real root in the string")
    i = 0
    while i < len(tags) and tags[i]:
        i += 1
    j = len(tags)
    while j > i and tags[j - 1]:
        j -= 1
    if any(tags[i:j]):
        raise PatternViolationError(
            f"real root between imaginary ones in the string through {s.base_root}"
        )
    p, q, r = i, j - i, len(tags) - j
    if q != 0 and p != r:
        raise PatternViolationError(
            f"imaginary middle with unequal real wings p={p}, r={r}"
        )
    if q == 0:
        p, r = len(tags), 0
    return PatternReport(p_real=p, q_imag=q, r_real=r)


@dataclass(frozen=True)
class LawVerdict:
    law: str
    applicable: bool
    passed: bool
    detail: str = ""


def pairing_laws(
    handle: RootSystemHandle, alpha: Root, beta: Root, k: Optional[int] = None
) -> list[LawVerdict]:
    """Evaluate the applicable pairing laws for one (alpha, beta) pair.

    Covered: the sum of two strongly negative non-isotropic roots is never
    real; at most four real roots per non-isotropic string; the pairing value
    sets for isotropic beta against non-isotropic alpha; the exclusion
    alpha+beta real => alpha-beta not a root for isotropic alpha; and the
    two-real-roots bound for isotropic directions.
    """
    out: list[LawVerdict] = []
    alpha_iso = handle.is_isotropic(alpha)
    beta_iso = handle.is_isotropic(beta)
    both_real = handle.is_real(alpha) and handle.is_real(beta)

    if both_real and not alpha_iso and not beta_iso:
        pa = handle.pairing(alpha, beta)
        pb = handle.pairing(beta, alpha)
        if pa < -1 and pb < -1:
            s = rs.add(alpha, beta)
            out.append(
                LawVerdict(
                    "sum-not-real", True, not handle.is_real(s),
                    f"alpha(h_beta)={pa}, beta(h_alpha)={pb}",
                )
            )
        else:
            out.append(LawVerdict("sum-not-real", False, True))

    if not alpha_iso and handle.is_real(alpha) and handle.contains(beta):
        s = root_string(handle, beta, alpha)
        out.append(
            LawVerdict(
                "four-real-roots", True, s.real_count() <= 4,
                f"{s.real_count()} real roots",
            )
        )

    if both_real and beta_iso and not alpha_iso:
        if k is not None:
            ks = [k]
        else:
            s = root_string(handle, beta, alpha)
            ks = [e.k for e in s.entries if e.k != 0 and e.real]
        ok = True
        details = []
        pb = handle.pairing(beta, alpha)
        for kk in ks:
            v = rs.add(beta, rs.scale(kk, alpha))
            if not handle.is_real(v):
                continue
            allowed = {Fraction(-kk)} if handle.is_isotropic(v) else {Fraction(0), Fraction(-2 * kk)}
            if pb not in allowed:
                ok = False
                details.append(f"k={kk}: pairing {pb} outside {sorted(allowed)}")
        out.append(LawVerdict("isotropic-pairing-values", True, ok, "; ".join(details)))

    if both_real and alpha_iso:
        checks = []
        if handle.is_real(rs.add(alpha, beta)):
            checks.append(not handle.contains(rs.sub(alpha, beta)))
        if handle.is_real(rs.sub(alpha, beta)):
            checks.append(not handle.contains(rs.add(alpha, beta)))
        out.append(
            LawVerdict("isotropic-sum-difference-exclusion", bool(checks), all(checks))
        )
        s = root_string(handle, beta, alpha)
        bound_ok = s.real_count() <= 2
        window_ok = True
        if handle.has_null:
            fa = handle.finite_part(alpha).coords()
            fb = handle.finite_part(beta).coords()
            if not _proportional(fa, fb):
                window_ok = all(-1 <= e.k <= 1 for e in s.entries)
        out.append(
            LawVerdict(
                "isotropic-string-bound", True, bound_ok and window_ok,
                f"{s.real_count()} real roots, ks={s.ks()}",
            )
        )

    return out


def _proportional(x, y) -> bool:
    # Is y a rational multiple of x (or either zero)?
    if all(c == 0 for c in x) or all(c == 0 for c in y):
        return True
    ratio = None
    for a, b in zip(x, y):
        if a == 0 and b == 0:
            continue
        if a == 0 or b == 0:
            return False
        r = Fraction(b, a)
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return True


@dataclass
class SweepReport:
    pairs: int = 0
    law_counts: dict = None
    failures: list = None

    def __post_init__(self):
        if self.law_counts is None:
            self.law_counts = {}
        if self.failures is None:
            self.failures = []

    def ok(self) -> bool:
        return not self.failures

    def record(self, law: str, passed: bool, witness: str = ""):
        self.law_counts[law] = self.law_counts.get(law, 0) + 1
        if not passed:
            self.failures.append((law, witness))


def sweep_strings(
    handle: RootSystemHandle,
    max_height: Optional[int] = None,
    max_degree: Optional[int] = None,
) -> SweepReport:
    """Run every string law over a grid of (beta, alpha) pairs.

    beta ranges over all roots and alpha over all real roots inside the
    height (finite) or null-degree (affine) window.  Non-isotropic directions
    are checked for unbrokenness, the pairing identity, reversal, the
    real/imaginary block pattern and the four-real-roots bound; isotropic
    directions for the two-real-roots bound and the exclusion laws.
    """
    report = SweepReport()
    if handle.is_finite:
        betas = handle.all_roots(max_height=max_height)
        alphas = handle.real_roots(max_height=max_height)
    else:
        betas = handle.all_roots(max_degree=max_degree)
        alphas = handle.real_roots(max_degree=max_degree)
    for alpha in alphas:
        iso = handle.is_isotropic(alpha)
        for beta in betas:
            report.pairs += 1
            tag = f"beta={beta} alpha={alpha}"
            if not iso:
                try:
                    s = root_string(handle, beta, alpha)
                    check_unbroken(s)
                    report.record("unbroken", True)
                except BrokenStringError as exc:
                    report.record("unbroken", False, f"{tag}: {exc}")
                    continue
                if any(e.real for e in s.entries):
                    try:
                        string_pattern(s)
                        report.record("pattern", True)
                    except PatternViolationError as exc:
                        report.record("pattern", False, f"{tag}: {exc}")
            for verdict in pairing_laws(handle, alpha, beta):
                if verdict.applicable:
                    report.record(verdict.law, verdict.passed, f"{tag}: {verdict.detail}")
    return report
