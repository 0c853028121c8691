"""Fans of flats, Bergman fans, homology lattices, balancing."""

from random import Random

import pytest

from bergman_os.errors import NotPure
from bergman_os.exterior import Multivector, monomials, project_mod_top
from bergman_os.fans import (
    all_flag_wedges,
    build_affine_fan,
    build_bergman_fan,
    check_balanced,
    check_ideal_property,
    distinct_wedges_up_to_sign,
    fan_from_json,
    fan_statistics,
    fk_cohomology,
    fk_flag_generators,
    fk_lattice,
)
from bergman_os.fixtures import get_fixture, m1, m2, random_linear_matroid, uniform
from bergman_os.intlinalg import determinant
from bergman_os.lattices import LatticeSubgroup
from bergman_os.matroids import Matroid


def test_affine_fan_shapes():
    fan = build_affine_fan(m1())
    stats = fan_statistics(fan)
    assert stats["rays"] == 9  # 8 proper flats plus the full set
    assert fan.max_dim() == 3
    u22 = build_affine_fan(uniform(2, 2))
    assert fan_statistics(u22)["rays"] == 3  # {0}, {1}, {0,1}
    u12 = build_affine_fan(Matroid.from_circuits(2, [(0, 1)]))
    assert fan_statistics(u12)["rays"] == 1  # single ray along the all-ones vector
    assert u12.cones_of_dim(1)[0].ray_generators == ((1, 1),)


def test_bergman_fan_shapes():
    b1 = build_bergman_fan(m1())
    stats = fan_statistics(b1)
    assert b1.ambient_rank == 3
    assert stats["rays"] == 8
    assert b1.max_dim() == 2
    assert stats["cones_per_dim"] == {"0": 1, "1": 8, "2": 9}

    b2 = build_bergman_fan(m2())
    stats = fan_statistics(b2)
    assert stats["rays"] == 13  # 6 singletons + 7 rank-2 flats
    assert stats["cones_per_dim"]["2"] == 18
    assert distinct_wedges_up_to_sign(b2, 2) == 15

    zero = build_bergman_fan(get_fixture("u_1_1"))
    assert zero.max_dim() == 0 and len(zero.cones) == 1


def test_bergman_span_basis_is_saturated():
    for M in (m1(), m2()):
        for fan in (build_affine_fan(M), build_bergman_fan(M)):
            for cone in fan.cones:
                direct = LatticeSubgroup.span(cone.span_basis, fan.ambient_rank)
                assert direct.saturate() == direct
                assert len(cone.span_basis) == direct.rank


def test_fk_lattice_single_cone():
    fan = fan_from_json({"ambient_rank": 2, "cones": [{"rays": [[1, 0], [0, 1]]}]})
    assert fk_lattice(fan, 2) == LatticeSubgroup.span([(1,)], 1)
    assert fk_lattice(fan, 0) == LatticeSubgroup.full(1)


def test_fk_ranks_of_fixture_fans():
    assert fk_lattice(build_bergman_fan(m1()), 2).rank == 2
    assert fk_lattice(build_bergman_fan(m2()), 2).rank == 6


def test_fk_vanishes_beyond_dimension():
    fan = build_bergman_fan(m2())
    top = fan.max_dim()
    for k in range(top + 1, top + 4):
        assert fk_lattice(fan, k).rank == 0


def test_f2_of_m1_is_generated_by_written_bivectors():
    # F_2(Bergman fan of the 4-point example) is spanned by the images of
    # E_14, E_24, E_34 (written), i.e. projections of (0,3), (1,3), (2,3)
    fan = build_bergman_fan(m1())
    gens = [
        project_mod_top(Multivector.basis_monomial(4, idx)).coordinates()
        for idx in ((0, 3), (1, 3), (2, 3))
    ]
    expected = LatticeSubgroup.span(gens, len(monomials(3, 2)))
    assert fk_lattice(fan, 2) == expected


def test_flag_generator_reduction_three_way():
    rng = Random(41)
    matroids = [m1(), m2(), uniform(2, 4), uniform(3, 4), random_linear_matroid(rng, 6)]
    for M in matroids:
        affine = build_affine_fan(M)
        projective = build_bergman_fan(M)
        for k in range(M.rank() + 1):
            via_fan = fk_lattice(affine, k)
            assert via_fan == fk_flag_generators(M, k, projective=False)
            assert via_fan == all_flag_wedges(M, k, projective=False)
        for k in range(M.rank()):
            via_fan = fk_lattice(projective, k)
            assert via_fan == fk_flag_generators(M, k, projective=True)
            assert via_fan == all_flag_wedges(M, k, projective=True)


def test_projective_lattice_is_projection_of_affine():
    for M in (m1(), m2(), uniform(3, 4)):
        m = M.ground_size
        projective = build_bergman_fan(M)
        for k in range(M.rank()):
            gens = []
            for flag in M.flags(k, proper=True, consecutive=False):
                wedge = Multivector.scalar(m, 1)
                for flat in flag.chain:
                    wedge = wedge.wedge(Multivector.indicator_vector(m, flat.elements))
                gens.append(project_mod_top(wedge).coordinates())
            width = len(monomials(m - 1, k))
            assert fk_lattice(projective, k) == LatticeSubgroup.span(gens, width)


def test_flag_monomials_expand_to_independent_transversals():
    for M in (m1(), m2()):
        m = M.ground_size
        for k in range(1, M.rank() + 1):
            for flag in M.flags(k, proper=False, consecutive=False):
                wedge = Multivector.scalar(m, 1)
                for flat in flag.chain:
                    wedge = wedge.wedge(Multivector.indicator_vector(m, flat.elements))
                layers = []
                prev = set()
                for flat in flag.chain:
                    layers.append(set(flat.elements) - prev)
                    prev = set(flat.elements)
                for idx, coeff in wedge.terms.items():
                    assert coeff in (1, -1)
                    assert M.is_independent(idx)
                    remaining = set(idx)
                    for layer in layers:
                        hit = remaining & layer
                        assert len(hit) == 1
                        remaining -= hit


def test_cohomology_ranks_and_perfect_pairing():
    data = fk_cohomology(build_bergman_fan(m2()), 2)
    assert data.rank == 6
    assert determinant(data.pairing_matrix) in (1, -1)
    data = fk_cohomology(build_bergman_fan(m1()), 2)
    assert data.rank == 2
    assert determinant(data.pairing_matrix) in (1, -1)
    assert fk_cohomology(build_affine_fan(m1()), 0).rank == 1
    assert fk_cohomology(build_bergman_fan(get_fixture("u_1_1")), 0).rank == 1


def test_ideal_property_on_fixture_fans():
    for name in ("m1", "m2", "u_2_3", "u_3_4"):
        M = get_fixture(name)
        assert check_ideal_property(build_affine_fan(M))
        assert check_ideal_property(build_bergman_fan(M))
    zero_fan = build_bergman_fan(get_fixture("u_1_1"))
    assert check_ideal_property(zero_fan)


def test_balanced_fixture_fans():
    for name in ("u_1_1", "u_2_3", "m1", "m2", "u_3_4"):
        assert check_balanced(build_bergman_fan(get_fixture(name)))


def test_unbalanced_single_ray():
    fan = fan_from_json({"ambient_rank": 2, "cones": [{"rays": [[1, 0]]}]})
    assert not check_balanced(fan)
    crossing = fan_from_json(
        {"ambient_rank": 2, "cones": [{"rays": [[1, 0]]}, {"rays": [[-1, 0]]}]}
    )
    assert check_balanced(crossing)


def test_balanced_requires_purity():
    fan = fan_from_json(
        {"ambient_rank": 2, "cones": [{"rays": [[1, 0], [0, 1]]}, {"rays": [[-1, -1]]}]}
    )
    with pytest.raises(NotPure):
        check_balanced(fan)


def test_balancing_sees_lattice_not_just_directions():
    # two opposite rays of different primitive multiples still balance
    # (primitive generators are used, not the listed ray vectors)
    fan = fan_from_json(
        {"ambient_rank": 2, "cones": [{"rays": [[2, 0]]}, {"rays": [[-3, 0]]}]}
    )
    assert check_balanced(fan)
    # three rays summing to zero only after saturation-aware normalization
    fan = fan_from_json(
        {"ambient_rank": 2,
         "cones": [{"rays": [[1, 0]]}, {"rays": [[0, 1]]}, {"rays": [[-1, -1]]}]}
    )
    assert check_balanced(fan)


def test_general_fan_json_errors():
    with pytest.raises(ValueError):
        fan_from_json({"cones": []})
    with pytest.raises(ValueError):
        fan_from_json({"ambient_rank": 2, "cones": [{"rays": [[1]]}]})
    with pytest.raises(ValueError):
        fan_from_json({"ambient_rank": 2, "cones": [{"rays": [[0, 0]]}]})


def test_general_fan_face_closure_and_fk():
    fan = fan_from_json(
        {"ambient_rank": 3,
         "cones": [{"rays": [[1, 0, 0], [0, 1, 0]]}, {"rays": [[0, 1, 0], [0, 0, 2]]}]}
    )
    dims = sorted(c.dim for c in fan.cones)
    assert dims == [0, 1, 1, 1, 2, 2]
    assert fk_lattice(fan, 1).rank == 3
    # the span lattice of the second cone is saturated: contains (0,0,1)
    assert fk_lattice(fan, 1).contains_vector((0, 0, 1))
    assert fk_lattice(fan, 2).rank == 2


def test_distinct_wedges_vs_fine_count_on_m1():
    # opposite rays make the coarse ray count 7 although the fan has 8
    b1 = build_bergman_fan(m1())
    assert distinct_wedges_up_to_sign(b1, 1) == 7
    assert fan_statistics(b1)["rays"] == 8
