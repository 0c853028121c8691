"""Orlik-Solomon ideals and algebras of a matroid, over the integers.

The ideal lives in the exterior algebra of the dual group W (basis
f_0..f_N) and is generated by the boundaries of the dependent-set
monomials.  Degreewise it is spanned, as an abelian group, by the
dependent monomials F_I' of size k together with the boundaries of
dependent monomials of size k+1; the brute-force oracle below recomputes
each degree directly from the two-sided ideal definition instead, so the
two routes check each other.

The projective variant restricts to the subalgebra on the differences
f_i - f_0 (coordinates g_1..g_N, written with 0-based indices g_i <-> i-1).
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import NamedTuple

from .errors import NotAFlat, SizeLimitExceeded
from .exterior import (
    Multivector,
    embed_mod_first,
    in_difference_subalgebra,
    monomials,
    restrict_mod_first,
    span,
)
from .lattices import LatticeSubgroup
from .matroids import Matroid

ORACLE_SIZE_DEFAULT = 8


class OSIdealDegree(NamedTuple):
    matroid: Matroid
    degree: int
    generators: tuple[Multivector, ...]
    subgroup: LatticeSubgroup


class OSAlgebraSummary(NamedTuple):
    graded_ranks: list[int]
    projective_ranks: list[int]
    torsion_note: list[bool]
    os_divisors: list[list[int]]
    os0_divisors: list[list[int]]


def dependent_subsets(matroid: Matroid, size: int) -> list[tuple[int, ...]]:
    """All dependent subsets of the given size, lexicographic order."""
    return [
        s for s in combinations(range(matroid.ground_size), size)
        if matroid.is_dependent(s)
    ]


def os_ideal_degree(
    matroid: Matroid, k: int, boundary_policy: str = "all"
) -> OSIdealDegree:
    """Degree-k piece of the Orlik-Solomon ideal inside the k-th exterior
    power of W.

    Generators are the dependent monomials F_I' (|I'| = k) and the
    boundaries of dependent monomials (|I''| = k+1); with
    ``boundary_policy="rank_k"`` the boundaries are restricted to I'' of
    rank exactly k, which spans the same subgroup (lower-rank boundaries
    are sums of dependent monomials).
    """
    m = matroid.ground_size
    gens: list[Multivector] = []
    for dep in dependent_subsets(matroid, k):
        gens.append(Multivector.basis_monomial(m, dep))
    for dep in dependent_subsets(matroid, k + 1):
        if boundary_policy == "rank_k" and matroid.rank(dep) != k:
            continue
        gens.append(Multivector.basis_monomial(m, dep).boundary())
    return OSIdealDegree(matroid, k, tuple(gens), span(gens, m, k))


def os_ideal_oracle(
    matroid: Matroid, k: int, max_size: int = ORACLE_SIZE_DEFAULT
) -> LatticeSubgroup:
    """Brute-force degree-k piece of the two-sided graded ideal generated
    by all boundaries of dependent monomials: spans every
    (monomial ^ boundary(F_I)) of total degree k, over all dependent I.

    Deliberately independent of ``os_ideal_degree`` so the two can be
    cross-checked; exponential, hence the size bound.
    """
    m = matroid.ground_size
    if m > max_size:
        raise SizeLimitExceeded(f"ground size {m} exceeds oracle bound {max_size}")
    gens: list[Multivector] = []
    for size in range(2, m + 1):
        codegree = k + 1 - size
        if codegree < 0:
            continue
        for dep in dependent_subsets(matroid, size):
            bnd = Multivector.basis_monomial(m, dep).boundary()
            for mono in monomials(m, codegree):
                gens.append(Multivector.basis_monomial(m, mono).wedge(bnd))
    return span(gens, m, k)


def os_restricted_ideal(matroid: Matroid, flat_elements, k: int) -> LatticeSubgroup:
    """Degree-k piece of the ideal attached to a flat J: generated by the
    boundaries of dependent monomials inside J and by the f_i outside J."""
    elems = tuple(sorted(flat_elements))
    if matroid.closure(elems).elements != elems:
        raise NotAFlat(f"{elems} is not closed")
    m = matroid.ground_size
    inside = set(elems)
    gens: list[Multivector] = []
    for size in (k, k + 1):
        for dep in dependent_subsets(matroid, size):
            if all(e in inside for e in dep):
                mv = Multivector.basis_monomial(m, dep)
                gens.append(mv if size == k else mv.boundary())
    for mono in monomials(m, k):
        if any(e not in inside for e in mono):
            gens.append(Multivector.basis_monomial(m, mono))
    return span(gens, m, k)


def _os0_boundary_route(matroid: Matroid, k: int) -> tuple[tuple[Multivector, ...], LatticeSubgroup]:
    m = matroid.ground_size
    gens: list[Multivector] = []
    for dep in dependent_subsets(matroid, k + 1):
        bnd = Multivector.basis_monomial(m, dep).boundary()
        if not in_difference_subalgebra(bnd):
            raise RuntimeError(f"boundary of {dep} escaped the difference subalgebra")
        gens.append(restrict_mod_first(bnd))
    return tuple(gens), span(gens, m - 1, k)


def _os0_intersection_route(matroid: Matroid, k: int) -> LatticeSubgroup:
    m = matroid.ground_size
    ideal = os_ideal_degree(matroid, k).subgroup
    embedded = [
        embed_mod_first(Multivector.basis_monomial(m - 1, mono)).coordinates()
        for mono in monomials(m - 1, k)
    ]
    width = len(monomials(m, k))
    sub = ideal.intersect(LatticeSubgroup.span(embedded, width))
    restricted = []
    for row in sub.hnf_basis:
        mv = Multivector.from_coordinates(m, k, row)
        if not in_difference_subalgebra(mv):
            raise RuntimeError("intersection left the difference subalgebra")
        restricted.append(restrict_mod_first(mv))
    return span(restricted, m - 1, k)


def os0_ideal_degree(matroid: Matroid, k: int, method: str = "both") -> OSIdealDegree:
    """Degree-k piece of the projective Orlik-Solomon ideal, in the
    difference-basis coordinates g_1..g_N.

    ``method`` selects the computation: "boundary" spans the boundaries of
    dependent monomials alone, "intersection" intersects the full ideal
    with the difference subalgebra, and "both" (default) computes the two
    and insists they agree.
    """
    if method not in ("both", "boundary", "intersection"):
        raise ValueError(f"unknown method {method!r}")
    if method == "intersection":
        sub = _os0_intersection_route(matroid, k)
        return OSIdealDegree(matroid, k, (), sub)
    gens, sub = _os0_boundary_route(matroid, k)
    if method == "both":
        other = _os0_intersection_route(matroid, k)
        if sub != other:
            raise RuntimeError(
                f"projective ideal mismatch in degree {k}: boundary route rank "
                f"{sub.rank}, intersection route rank {other.rank}"
            )
    return OSIdealDegree(matroid, k, gens, sub)


def os_summary(matroid: Matroid) -> OSAlgebraSummary:
    """Graded ranks of the Orlik-Solomon algebra and its projective
    variant, with torsion diagnostics from the quotient presentations."""
    m = matroid.ground_size
    n = matroid.rank()
    graded, projective, note = [], [], []
    os_div, os0_div = [], []
    for k in range(n + 1):
        ideal = os_ideal_degree(matroid, k).subgroup
        ideal0 = os0_ideal_degree(matroid, k).subgroup
        graded.append(comb(m, k) - ideal.rank)
        projective.append(comb(m - 1, k) - ideal0.rank)
        t, _ = ideal.quotient_data()
        t0, _ = ideal0.quotient_data()
        os_div.append(t)
        os0_div.append(t0)
        note.append(bool(t or t0))
    return OSAlgebraSummary(graded, projective, note, os_div, os0_div)


def report_fragments(matroid: Matroid) -> list[dict]:
    """Per-degree report rows: {"degree", "os_rank", "os0_rank",
    "ideal_rank", "torsion"} with the projective ideal rank and the
    projective quotient's nontrivial elementary divisors."""
    summary = os_summary(matroid)
    rows = []
    for k, (r, r0) in enumerate(zip(summary.graded_ranks, summary.projective_ranks)):
        ideal0_rank = comb(matroid.ground_size - 1, k) - r0
        rows.append(
            {
                "degree": k,
                "os_rank": r,
                "os0_rank": r0,
                "ideal_rank": ideal0_rank,
                "torsion": summary.os0_divisors[k],
            }
        )
    return rows
