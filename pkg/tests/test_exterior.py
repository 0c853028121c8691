"""Multivector arithmetic: wedges, boundaries, pairings, quotient maps.

Written labels 1..N+1 of the small examples map to internal 0-based
indices (label i -> i-1); e.g. the boundary of the written monomial F_123
is computed here as the boundary of the internal monomial (0, 1, 2).
"""

import doctest
from random import Random

import pytest

import bergman_os.exterior as exterior_module
from bergman_os.errors import AmbientMismatch, DegreeMismatch
from bergman_os.exterior import (
    Multivector,
    embed_mod_first,
    in_difference_subalgebra,
    monomials,
    pairing,
    project_mod_top,
    restrict_mod_first,
    span,
    top_vector,
    wedge_top,
)


def e(m, i):
    return Multivector.basis_vector(m, i)


def mono(m, idx):
    return Multivector.basis_monomial(m, idx)


def rand_mv(rng, m, k, density=0.4):
    terms = {}
    for key in monomials(m, k):
        if rng.random() < density:
            c = rng.randint(-3, 3)
            if c:
                terms[key] = c
    return Multivector(m, k, terms)


def test_doctests():
    failures, _ = doctest.testmod(exterior_module)
    assert failures == 0


def test_wedge_basis_and_alternation():
    assert e(4, 0).wedge(e(4, 3)) == mono(4, (0, 3))
    assert e(4, 3).wedge(e(4, 0)) == -1 * mono(4, (0, 3))
    rng = Random(21)
    for _ in range(30):
        a = rand_mv(rng, 5, 1)
        assert a.wedge(a).is_zero()


def test_wedge_bilinearity_example():
    # (e1 + e2 + e3) ^ e1 = -E_12 - E_13 (written labels)
    lhs = Multivector.indicator_vector(4, (0, 1, 2)).wedge(e(4, 0))
    assert lhs == Multivector(4, 2, {(0, 1): -1, (0, 2): -1})


def test_wedge_graded_commutativity():
    rng = Random(22)
    m = 6
    for _ in range(40):
        p, q = rng.randint(0, 3), rng.randint(0, 3)
        a, b = rand_mv(rng, m, p), rand_mv(rng, m, q)
        sign = -1 if (p * q) % 2 else 1
        assert a.wedge(b) == sign * b.wedge(a)


def test_wedge_associativity():
    rng = Random(23)
    m = 6
    for _ in range(30):
        a = rand_mv(rng, m, rng.randint(0, 2))
        b = rand_mv(rng, m, rng.randint(0, 2))
        c = rand_mv(rng, m, rng.randint(0, 2))
        assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))


def test_boundary_written_examples():
    # dF_123 = F_12 + F_23 + F_31 i.e. F_12 - F_13 + F_23
    got = mono(4, (0, 1, 2)).boundary()
    assert got == Multivector(4, 2, {(0, 1): 1, (0, 2): -1, (1, 2): 1})
    # dF_125 in the 6-element example, internal (0, 1, 4)
    got = mono(6, (0, 1, 4)).boundary()
    assert got == Multivector(6, 2, {(0, 1): 1, (0, 4): -1, (1, 4): 1})
    # degree-1 boundary is the integer 1; degree-0 is 0
    assert e(3, 2).boundary() == Multivector.scalar(3, 1)
    assert Multivector.scalar(3, 7).boundary().is_zero()


def test_boundary_squared_zero():
    assert mono(4, (0, 1, 2, 3)).boundary().boundary().is_zero()
    rng = Random(24)
    for _ in range(100):
        m = rng.randint(1, 8)
        k = rng.randint(0, min(m, 5))
        assert rand_mv(rng, m, k).boundary().boundary().is_zero()


def test_leibnitz_rule_random():
    rng = Random(25)
    m = 7
    for _ in range(80):
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        a, b = rand_mv(rng, m, p), rand_mv(rng, m, q)
        sign = -1 if p % 2 else 1
        assert a.wedge(b).boundary() == a.boundary().wedge(b) + sign * a.wedge(b.boundary())


def test_pairing_dual_bases():
    assert pairing(mono(4, (0, 3)), mono(4, (0, 3))) == 1
    assert pairing(mono(4, (0, 3)), mono(4, (0, 2))) == 0
    d = mono(4, (0, 1, 2)).boundary()
    assert pairing(mono(4, (0, 3)), d) == 0
    assert pairing(mono(4, (0, 1)), d) == 1
    with pytest.raises(DegreeMismatch):
        pairing(mono(4, (0,)), mono(4, (0, 1)))
    with pytest.raises(AmbientMismatch):
        pairing(mono(4, (0,)), mono(5, (0,)))


def test_wedge_top_and_adjointness():
    m = 5
    assert wedge_top(Multivector.scalar(m, 1)) == top_vector(m)
    assert wedge_top(top_vector(m)).is_zero()
    # exhaustive adjointness at small rank: <e_M ^ x, y> = <x, dy>
    for mm in range(1, 6):
        for k in range(mm):
            for x_idx in monomials(mm, k):
                for y_idx in monomials(mm, k + 1):
                    x, y = mono(mm, x_idx), mono(mm, y_idx)
                    assert pairing(wedge_top(x), y) == pairing(x, y.boundary())


def test_acyclicity_small_ranks():
    # image of d from degree k+1 equals kernel of d on degree k, exactly
    from bergman_os.intlinalg import left_kernel
    from bergman_os.lattices import LatticeSubgroup

    for m in range(1, 7):
        for k in range(m + 1):
            image = span(
                [mono(m, idx).boundary() for idx in monomials(m, k + 1)], m, k
            )
            width = len(monomials(m, k))
            if k == 0:
                kernel = LatticeSubgroup.full(width)
            else:
                rows = [mono(m, idx).boundary().coordinates() for idx in monomials(m, k)]
                kernel = LatticeSubgroup(width, left_kernel(rows, len(monomials(m, k - 1))))
            assert image == kernel
            rank_dk = width - kernel.rank
            assert image.rank + rank_dk == width


def test_project_mod_top():
    assert project_mod_top(top_vector(4)).is_zero()
    assert project_mod_top(e(4, 1)) == e(3, 0)
    # e0 ^ e1 -> -(sum of others) ^ e1-bar
    got = project_mod_top(mono(4, (0, 1)))
    rest = Multivector(3, 1, {(1,): -1, (2,): -1})
    assert got == rest.wedge(e(3, 0))
    # projection kills exactly the multiples of the top vector in degree 1
    rng = Random(26)
    for _ in range(40):
        a = rand_mv(rng, 5, 1)
        shifted = a + rng.randint(-3, 3) * top_vector(5)
        assert project_mod_top(shifted) == project_mod_top(a)


def test_project_is_algebra_map():
    rng = Random(27)
    m = 5
    for _ in range(40):
        a = rand_mv(rng, m, rng.randint(0, 2))
        b = rand_mv(rng, m, rng.randint(0, 2))
        assert project_mod_top(a.wedge(b)) == project_mod_top(a).wedge(project_mod_top(b))


def test_difference_subalgebra_roundtrip():
    m = 5
    rng = Random(28)
    # embedded elements restrict back to themselves
    for _ in range(40):
        k = rng.randint(0, 3)
        a = rand_mv(rng, m - 1, k)
        emb = embed_mod_first(a)
        assert in_difference_subalgebra(emb)
        assert restrict_mod_first(emb) == a
    # boundaries land in the difference subalgebra (ker d = im d)
    for _ in range(40):
        k = rng.randint(1, 4)
        b = rand_mv(rng, m, k).boundary()
        assert in_difference_subalgebra(b)
    # a raw monomial containing f_0 does not
    assert not in_difference_subalgebra(mono(m, (0, 1)))


def test_projection_embedding_duality():
    # <project(v), w>_difference-basis = <v, embed(w)>_full
    rng = Random(29)
    m = 5
    for _ in range(60):
        k = rng.randint(0, 3)
        v = rand_mv(rng, m, k)
        w = rand_mv(rng, m - 1, k)
        assert pairing(project_mod_top(v), w) == pairing(v, embed_mod_first(w))


def test_span_rank_example():
    # E_14, E_24, E_34 written = (0,3), (1,3), (2,3) internal: rank 3
    gens = [mono(4, (0, 3)), mono(4, (1, 3)), mono(4, (2, 3))]
    sub = span(gens)
    assert sub.rank == 3
    ann = sub.annihilator()
    assert ann.rank == 3
    assert ann.contains_vector(mono(4, (0, 1, 2)).boundary().coordinates())


def test_span_empty_and_parallel():
    assert span([], 4, 2).rank == 0
    a = Multivector(3, 1, {(0,): 2, (1,): 4})
    b = Multivector(3, 1, {(0,): 1, (1,): 2})
    assert span([a, b]).hnf_basis == ((1, 2, 0),)


def test_text_format():
    d = mono(4, (0, 1, 2)).boundary()
    assert d.to_text("f") == "+1*f0^f1 -1*f0^f2 +1*f1^f2"
    assert Multivector.zero(4, 2).to_text() == "0"
    assert Multivector.scalar(4, -2).to_text() == "-2*1"
    mixed = Multivector(4, 2, {(1, 3): -7, (0, 1): 2})
    assert mixed.to_text("f") == "+2*f0^f1 -7*f1^f3"


def test_coordinates_roundtrip():
    rng = Random(30)
    for _ in range(40):
        m = rng.randint(1, 6)
        k = rng.randint(0, m)
        a = rand_mv(rng, m, k)
        assert Multivector.from_coordinates(m, k, a.coordinates()) == a
