from fractions import Fraction as Q

import pytest

from superroot.catalog import CatalogType, EpsDeltaVector as ED, build, parse_type
from superroot.errors import NotInLatticeError, UnsupportedTypeError


def test_parse_type_grammar():
    assert parse_type("A(0,1)") == CatalogType("A", 0, 1)
    assert parse_type("B(1,1)^(1)") == CatalogType("B", 1, 1, "affine")
    assert parse_type("A(2,2)^(4)") == CatalogType("A", 2, 2, "twisted4")
    assert parse_type("C(3)") == CatalogType("C", 0, 3)
    assert parse_type("D(2,1;1/2)") == CatalogType("D21", 2, 1, "finite", Q(1, 2))
    assert parse_type("D(2,1;-3)^(1)").param == Q(-3)
    with pytest.raises(UnsupportedTypeError):
        parse_type("E(8)")
    with pytest.raises(UnsupportedTypeError):
        parse_type("B(1,1)^(2)")


def test_unsupported_types():
    for bad in ("A(1,1)", "A(2,2)", "B(2,0)", "C(1)", "D(1,1)", "D(2,1;0)",
                "B(2,2)^(4)", "A(1,2)^(4)", "A(2,1)^(4)"):
        with pytest.raises(UnsupportedTypeError):
            build(bad)


def test_a01_distinguished_base():
    h = build("A(0,1)")
    assert h.cartan.matrix == ((Q(0), Q(1)), (Q(-1), Q(2)))
    assert h.cartan.parity == (1, 0)
    assert len(h.real_roots()) == 6


def test_root_counts():
    # |roots| from the standard tables: A(m,n): (m+n+1)(m+n+2) minus even overlap
    assert len(build("A(0,1)").real_roots()) == 6
    assert len(build("A(0,2)").real_roots()) == 12
    assert len(build("B(0,1)").real_roots()) == 4
    assert len(build("B(1,1)").real_roots()) == 10
    # B(2,1): 4 (eps pairs) + 4 (eps) + 2 (2delta) + 2 (delta) + 8 (mixed) = 20
    assert len(build("B(2,1)").real_roots()) == 20
    assert len(build("D(2,1;1/2)").real_roots()) == 14


def test_twisted_membership_paper_cases():
    t = build("A(2,2)^(4)")
    assert t.contains_ed(ED((2,), (0,), 2))        # doubled eps at degree 2 mod 4
    assert not t.contains_ed(ED((2,), (0,), 4))    # 4 is not 2 mod 4
    v = ED((1,), (1,), 2)
    assert t.contains_ed(v) and t.is_isotropic_ed(v) and t.parity_ed(v) == 1
    assert t.is_imaginary_ed(ED((0,), (0,), 3))
    assert not t.contains_ed(ED((0,), (0,), 0))


def test_membership_classify_bundle():
    t = build("A(2,2)^(4)")
    rep = t.membership_classify(ED((1,), (1,), 2))
    assert rep.in_delta and rep.real and not rep.imaginary
    assert rep.parity == 1 and rep.isotropic
    rep2 = t.membership_classify(ED((0,), (0,), 3))
    assert rep2.in_delta and rep2.imaginary and not rep2.real
    rep3 = t.membership_classify(ED((2,), (0,), 4))
    assert not rep3.in_delta and rep3.parity is None
    b = build("B(1,1)")
    rep4 = b.membership_classify(ED((1,), (0,)))
    assert rep4.real and rep4.parity == 0 and rep4.isotropic is False


def test_twisted_clause_periodicity():
    t = build("A(4,2)^(4)")
    # each clause repeats along its own null-degree congruence class
    cases = [
        (ED((1, -1), (0,), 0), 2),   # eps pair: even degrees
        (ED((0, 0), (2,), 0), 4),    # doubled delta: 0 mod 4
        (ED((2, 0), (0,), 2), 4),    # doubled eps: 2 mod 4
        (ED((1, 0), (-1,), 0), 2),   # mixed isotropic: even degrees
        (ED((1, 0), (0,), 0), 1),    # single eps: all degrees
        (ED((0, 0), (1,), 0), 1),    # single delta: all degrees
    ]
    for base, period in cases:
        assert t.contains_ed(base)
        for k in range(-8, 9):
            shifted = ED(base.eps, base.delta, base.null + k)
            assert t.contains_ed(shifted) == (k % period == 0), (base, k)


def test_twisted_doubling_rule():
    # 2*alpha is a root exactly for odd non-isotropic real alpha
    t = build("A(2,2)^(4)")
    for r in t.real_roots(max_degree=4):
        ed = t.to_ed(r)
        doubled = ed.scaled(2)
        if t.parity_ed(ed) == 1 and not t.is_isotropic_ed(ed):
            assert t.contains_ed(doubled), r
        else:
            assert not t.contains_ed(doubled), r


def test_even_real_and_zero_vector():
    h = build("A(2,1)")
    rep = h.membership_classify(ED((1, -1, 0), (0, 0)))
    assert rep.in_delta and rep.real and rep.parity == 0 and rep.isotropic is False
    zero = ED((0, 0, 0), (0, 0))
    assert not h.contains_ed(zero)
    ha = build("B(1,1)^(1)")
    assert not ha.contains_ed(ED((0,), (0,), 0))


def test_root_multiple_rule():
    # k*alpha is a root only for k in {+-1} (isotropic), {+-1,+-2} (odd
    # non-isotropic), {+-1,+-1/2} (even)
    for spec in ("B(2,1)", "A(0,2)", "B(1,1)^(1)", "A(2,2)^(4)"):
        h = build(spec)
        degree = 3 if h.has_null else None
        roots = h.real_roots(max_height=10, max_degree=degree)
        root_set = set(roots)
        for r in roots:
            ed = h.to_ed(r)
            doubled = ed.scaled(2)
            if h.is_isotropic_ed(ed):
                assert not h.contains_ed(doubled), (spec, r)
            elif h.parity_ed(ed) == 1:
                assert h.contains_ed(doubled), (spec, r)
            else:
                assert not h.contains_ed(doubled), (spec, r)
            for k in (3, 4, 5):
                assert not h.contains_ed(ed.scaled(k)), (spec, r, k)


def test_convert_round_trip():
    for spec in ("A(0,2)", "B(2,1)", "B(1,1)^(1)", "A(2,2)^(4)", "D(2,2)", "C(3)",
                 "C(2)^(1)", "D(2,1)^(1)", "D(2,1;-2)^(1)", "A(1,0)^(1)"):
        h = build(spec)
        degree = 3 if h.has_null else None
        for r in h.real_roots(max_height=7, max_degree=degree):
            assert h.to_alpha(h.to_ed(r)) == r


def test_convert_simple_roots_are_units():
    h = build("B(1,1)")
    assert h.to_alpha(ED((-1,), (1,))) == (1, 0)
    assert h.to_alpha(ED((1,), (0,))) == (0, 1)


def test_convert_rejects_non_lattice():
    h = build("A(0,1)")
    # eps_1 alone is not in the root lattice of sl(1|2)
    with pytest.raises(NotInLatticeError):
        h.to_alpha(ED((1,), (0, 0)))


def test_null_root_is_positive_combination():
    for spec in ("A(0,1)^(1)", "B(1,1)^(1)", "B(2,2)^(1)", "A(2,2)^(4)", "C(2)^(1)"):
        h = build(spec)
        null = h.null_root()
        assert all(c >= 0 for c in null) and any(c > 0 for c in null)
        assert h.is_imaginary(null)
        assert h.degree_of(null) == 1


def test_roots_have_uniform_sign():
    for spec in ("B(2,1)", "A(2,2)^(4)"):
        h = build(spec)
        for r in h.real_roots(max_height=8, max_degree=3 if h.has_null else None):
            assert all(c >= 0 for c in r) or all(c <= 0 for c in r), (spec, r)


def test_affine_membership_from_finite_part():
    h = build("B(1,1)^(1)")
    for k in (-2, 0, 5):
        assert h.contains_ed(ED((1,), (1,), k))     # finite root, any degree
        assert not h.contains_ed(ED((2,), (0,), k))  # 2eps is not a B(1,1) root
    assert h.contains_ed(ED((0,), (0,), -4))
    assert not h.contains_ed(ED((0,), (0,), 0))


def test_finite_part_and_degree():
    h = build("B(2,2)^(1)")
    r = h.to_alpha(ED((1, 0), (0, -1), 6))
    assert h.degree_of(r) == 6
    assert h.finite_part(r) == ED((1, 0), (0, -1), 0)


def test_positive_real_roots_split():
    h = build("B(1,1)")
    pos = h.positive_real_roots()
    assert len(pos) * 2 == len(h.real_roots())
    for r in pos:
        assert h.is_positive(r)
        assert not h.is_positive(tuple(-c for c in r))
