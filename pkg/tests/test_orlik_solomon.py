"""Orlik-Solomon ideals: generator policies, the brute-force ideal oracle,
flat restrictions, and the projective variant."""

from math import comb
from random import Random

import pytest

from bergman_os.errors import NotAFlat, SizeLimitExceeded
from bergman_os.exterior import (
    Multivector,
    monomials,
    restrict_mod_first,
    span,
)
from bergman_os.fixtures import get_fixture, m1, m2, random_linear_matroid, uniform
from bergman_os.lattices import LatticeSubgroup
from bergman_os.matroids import Matroid
from bergman_os.orlik_solomon import (
    dependent_subsets,
    os0_ideal_degree,
    os_ideal_degree,
    os_ideal_oracle,
    os_restricted_ideal,
    os_summary,
    report_fragments,
)


def test_degree2_generators_of_m2():
    # the four written boundary generators dF_125, dF_146, dF_236, dF_345
    deg = os_ideal_degree(m2(), 2)
    boundary_gens = {g.to_text("f") for g in deg.generators}
    for circuit in ((0, 1, 4), (0, 3, 5), (1, 2, 5), (2, 3, 4)):
        text = Multivector.basis_monomial(6, circuit).boundary().to_text("f")
        assert text in boundary_gens


def test_m1_ideal_degree2():
    deg = os_ideal_degree(m1(), 2)
    expected = span([Multivector.basis_monomial(4, (0, 1, 2)).boundary()])
    assert deg.subgroup == expected
    assert deg.subgroup.rank == 1


def test_simple_matroid_low_degrees_vanish():
    for M in (m2(), uniform(2, 4), get_fixture("fano")):
        assert os_ideal_degree(M, 0).subgroup.rank == 0
        assert os_ideal_degree(M, 1).subgroup.rank == 0


def test_ideal_full_beyond_rank():
    # every k-set is dependent above the rank, so the quotient vanishes
    for M in (m1(), m2()):
        n, m = M.rank(), M.ground_size
        for k in range(n + 1, m + 2):
            assert os_ideal_degree(M, k).subgroup.rank == comb(m, k)


def test_oracle_equals_leibnitz_generators():
    rng = Random(51)
    matroids = [m1(), m2(), uniform(2, 3), uniform(3, 4), get_fixture("fano"),
                random_linear_matroid(rng, 6)]
    for M in matroids:
        for k in range(M.ground_size + 2):
            assert os_ideal_oracle(M, k) == os_ideal_degree(M, k).subgroup


def test_oracle_zero_for_free_matroid():
    free = Matroid.from_circuits(3, [])
    for k in range(5):
        assert os_ideal_oracle(free, k).rank == 0


def test_oracle_size_limit():
    with pytest.raises(SizeLimitExceeded):
        os_ideal_oracle(m2(), 2, max_size=4)


def test_boundary_rank_policy_equivalence():
    for M in (m1(), m2(), uniform(2, 4), get_fixture("nonfano")):
        for k in range(M.ground_size + 2):
            assert (
                os_ideal_degree(M, k).subgroup
                == os_ideal_degree(M, k, boundary_policy="rank_k").subgroup
            )


def test_restricted_ideal_full_flat():
    M = m2()
    full = tuple(range(6))
    for k in range(4):
        assert os_restricted_ideal(M, full, k) == os_ideal_degree(M, k).subgroup


def test_restricted_ideal_two_element_flat():
    # J = written 56 = internal (4, 5): degree 1 piece is span{f0..f3}
    got = os_restricted_ideal(m2(), (4, 5), 1)
    expected = span([Multivector.basis_vector(6, i) for i in range(4)])
    assert got == expected


def test_restricted_ideal_rejects_nonflats():
    with pytest.raises(NotAFlat):
        os_restricted_ideal(m1(), (0, 1), 1)  # closure adds 2


def test_intersection_over_flats():
    for M in (m1(), m2(), uniform(2, 4), uniform(3, 4)):
        mwidth = M.ground_size
        for k in range(M.rank() + 1):
            inter = LatticeSubgroup.full(len(monomials(mwidth, k)))
            for flat in M.flats(k):
                inter = inter.intersect(os_restricted_ideal(M, flat.elements, k))
            assert inter == os_ideal_degree(M, k).subgroup


def test_os0_m1_is_single_boundary():
    deg = os0_ideal_degree(m1(), 2)
    bnd = restrict_mod_first(Multivector.basis_monomial(4, (0, 1, 2)).boundary())
    assert deg.subgroup == span([bnd])
    assert deg.subgroup.rank == 1


def test_os0_m2_rank4():
    # the four written boundary generators are linearly independent
    deg = os0_ideal_degree(m2(), 2)
    assert deg.subgroup.rank == 4
    gens = [
        restrict_mod_first(Multivector.basis_monomial(6, c).boundary())
        for c in ((0, 1, 4), (0, 3, 5), (1, 2, 5), (2, 3, 4))
    ]
    assert span(gens) == deg.subgroup


def test_os0_routes_agree():
    rng = Random(52)
    for M in (m1(), m2(), uniform(2, 4), random_linear_matroid(rng, 6)):
        for k in range(M.rank() + 1):
            a = os0_ideal_degree(M, k, method="boundary").subgroup
            b = os0_ideal_degree(M, k, method="intersection").subgroup
            assert a == b
            assert os0_ideal_degree(M, k).subgroup == a


def test_os0_simple_degree1_zero():
    assert os0_ideal_degree(m2(), 1).subgroup.rank == 0


def test_summary_values():
    summary = os_summary(m2())
    assert summary.projective_ranks[2] == 6
    assert summary.projective_ranks[1] == 5
    assert summary.projective_ranks[0] == 1
    assert summary.graded_ranks[0] == 1
    assert not any(summary.torsion_note)
    # rank identities against the ambient binomials
    M = m2()
    for k, r in enumerate(summary.graded_ranks):
        assert r == comb(6, k) - os_ideal_degree(M, k).subgroup.rank
    for k, r in enumerate(summary.projective_ranks):
        assert r == comb(5, k) - os0_ideal_degree(M, k).subgroup.rank


def test_report_fragments_schema():
    rows = report_fragments(m1())
    assert [row["degree"] for row in rows] == [0, 1, 2, 3]
    for row in rows:
        assert set(row) == {"degree", "os_rank", "os0_rank", "ideal_rank", "torsion"}
        assert row["torsion"] == []
    assert rows[2]["os0_rank"] == 2
    assert rows[2]["ideal_rank"] == 1


def test_top_degree_presentation():
    # in the top degree the ideal is the dependent monomials plus the
    # boundary image, which equals the boundary kernel
    for M in (m1(), m2(), uniform(2, 4)):
        m, n = M.ground_size, M.rank()
        direct = os_ideal_degree(M, n).subgroup
        dep_span = span(
            [Multivector.basis_monomial(m, d) for d in dependent_subsets(M, n)], m, n
        )
        image = span(
            [Multivector.basis_monomial(m, idx).boundary() for idx in monomials(m, n + 1)],
            m, n,
        )
        assert direct == dep_span + image
