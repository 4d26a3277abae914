from fractions import Fraction as Q

import pytest

from superroot.catalog import EpsDeltaVector as ED, build
from superroot.errors import NotARootError
from superroot.rootspace import bilinear, classify, height, pair
from superroot.cartan import normalize, symmetrizer


def _sl12():
    return normalize([[0, 1], [-1, 2]], (1, 0))


def test_pair_reads_matrix_entry():
    cd = normalize([[2, -1], [-1, 2]], (0, 0))
    assert pair((0, 1), (Q(1), Q(0)), cd) == Q(-1)  # a_12
    assert pair((1, 0), (Q(1), Q(0)), cd) == Q(2)


def test_pair_double_sum():
    # (alpha_1 + alpha_2)(h_1 + h_2) = a_11 + a_12 + a_21 + a_22 = 2
    cd = normalize([[2, -1], [-1, 2]], (0, 0))
    assert pair((1, 1), (Q(1), Q(1)), cd) == Q(2)


def test_pair_bilinearity():
    cd = _sl12()
    x, y = (2, -1), (0, 3)
    h1, h2 = (Q(1), Q(2)), (Q(-1, 2), Q(0))
    lhs = pair(tuple(a + b for a, b in zip(x, y)), h1, cd)
    assert lhs == pair(x, h1, cd) + pair(y, h1, cd)
    lhs2 = pair(x, tuple(a + b for a, b in zip(h1, h2)), cd)
    assert lhs2 == pair(x, h1, cd) + pair(x, h2, cd)


def test_bilinear_isotropy_of_odd_simple():
    cd = _sl12()
    d = symmetrizer(cd)
    assert bilinear((1, 0), (1, 0), cd, d) == 0
    assert bilinear((1, 0), (0, 1), cd, d) == bilinear((0, 1), (1, 0), cd, d)


def test_bilinear_matches_catalog_form_up_to_scalar():
    handle = build("B(1,1)")
    cd, d = handle.cartan, handle.symmetrizer
    # both are invariant forms of an indecomposable type, hence proportional
    ratios = set()
    simples = handle.simple_roots_alpha()
    for i, a in enumerate(simples):
        for b in simples:
            lhs = bilinear(a, b, cd, d)
            rhs = handle.bilinear(a, b)
            if rhs != 0:
                ratios.add(lhs / rhs)
            else:
                assert lhs == 0
    assert len(ratios) == 1


def test_classify_isotropic_odd_real():
    handle = build("B(1,1)")
    beta = handle.to_alpha(ED((1,), (-1,)))
    c = classify(beta, handle)
    assert c.parity == 1 and c.isotropic and c.real


def test_classify_null_root_imaginary():
    handle = build("B(1,1)^(1)")
    c = classify(handle.null_root(), handle)
    assert not c.real
    assert c.parity == 0


def test_classify_even_real_roots_nonisotropic():
    # every even real root is non-isotropic
    for spec in ("A(0,2)", "B(1,1)", "B(2,1)", "B(1,1)^(1)", "A(2,2)^(4)"):
        handle = build(spec)
        for r in handle.real_roots(max_height=8, max_degree=2 if handle.has_null else None):
            c = classify(r, handle)
            if c.parity == 0:
                assert not c.isotropic, (spec, r)


def test_classify_rejects_non_roots():
    handle = build("A(0,1)")
    with pytest.raises(NotARootError):
        classify((5, 0), handle)


def test_parity_symmetric_under_negation():
    handle = build("B(2,1)")
    for r in handle.real_roots():
        assert handle.parity(r) == handle.parity(tuple(-x for x in r))


def test_height():
    assert height((1, -2, 3)) == 6
    assert height(()) == 0


def test_real_nonisotropic_pairing_matches_coroot():
    # 2(beta,alpha)/(alpha,alpha) agrees with the Cartan pairing on simples
    handle = build("B(2,1)")
    cd = handle.cartan
    simples = handle.simple_roots_alpha()
    for i, alpha in enumerate(simples):
        if handle.is_isotropic(alpha):
            continue
        for j, beta in enumerate(simples):
            assert handle.pairing(beta, alpha) == cd.matrix[i][j]
