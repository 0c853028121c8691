"""Rational polyhedral fans, Bergman fans of matroids, and their
tropical homology/cohomology lattices.

A fan stores the fine (order-complex) structure: for a matroid, one cone
per flag of flats.  This fine subdivision does not change F_k, which only
depends on the supporting span lattices.  General fans loaded from JSON
list maximal cones by rays and are treated as simplicial (faces are ray
subsets).
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import NamedTuple, Sequence

from .errors import NotPure
from .exterior import Multivector, monomials, project_mod_top
from .intlinalg import dot, hermite_normal_form, xgcd
from .lattices import LatticeSubgroup
from .matroids import FlagOfFlats, Matroid


class Cone:
    """A cone with an integral basis of its saturated span lattice.

    For Bergman cones the basis is the flat indicator vectors of the flag
    itself (these are primitive and extend to a basis of the ambient
    lattice); for general cones it is computed by saturating the ray span.
    """

    __slots__ = ("ray_generators", "span_basis", "label")

    def __init__(
        self,
        ray_generators: tuple[tuple[int, ...], ...],
        span_basis: tuple[tuple[int, ...], ...],
        label: FlagOfFlats | None = None,
    ):
        self.ray_generators = ray_generators
        self.span_basis = span_basis
        self.label = label

    @property
    def dim(self) -> int:
        return len(self.span_basis)

    def ray_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.ray_generators)

    def __repr__(self) -> str:
        return f"Cone(dim={self.dim}, rays={list(self.ray_generators)})"


class Fan:
    """A finite fan, closed under taking faces."""

    __slots__ = ("ambient_rank", "cones", "kind")

    def __init__(self, ambient_rank: int, cones: tuple[Cone, ...], kind: str):
        self.ambient_rank = ambient_rank
        self.cones = cones
        self.kind = kind

    def cones_of_dim(self, d: int) -> list[Cone]:
        return [c for c in self.cones if c.dim == d]

    def max_dim(self) -> int:
        return max((c.dim for c in self.cones), default=0)

    def maximal_cones(self) -> list[Cone]:
        """Cones that are not a proper face of another cone."""
        ray_sets = [c.ray_set() for c in self.cones]
        out = []
        for i, c in enumerate(self.cones):
            ri = ray_sets[i]
            if not any(j != i and ri < rj for j, rj in enumerate(ray_sets)):
                out.append(c)
        return out

    def __repr__(self) -> str:
        per_dim = {}
        for c in self.cones:
            per_dim[c.dim] = per_dim.get(c.dim, 0) + 1
        return f"Fan({self.kind}, Z^{self.ambient_rank}, cones per dim {per_dim})"


def _flag_vectors(m: int, flag: FlagOfFlats, projective: bool) -> list[tuple[int, ...]]:
    vecs = []
    for flat in flag.chain:
        v = Multivector.indicator_vector(m, flat.elements)
        if projective:
            v = project_mod_top(v)
        vecs.append(v.coordinates())
    return vecs


def build_affine_fan(matroid: Matroid) -> Fan:
    """Fan in Z^(N+1) with one k-cone per length-k flag of nonempty flats
    (the full ground set is allowed); rays point along flat indicators."""
    m = matroid.ground_size
    cones = []
    for k in range(matroid.rank() + 1):
        for flag in matroid.flags(k, proper=False, consecutive=False):
            vecs = tuple(_flag_vectors(m, flag, projective=False))
            cones.append(Cone(vecs, vecs, flag))
    return Fan(m, tuple(cones), "bergman_affine")


def build_bergman_fan(matroid: Matroid) -> Fan:
    """Quotient fan in Z^N: flags of proper nonempty flats, with each flat
    vector projected modulo the all-ones vector."""
    m = matroid.ground_size
    cones = []
    top = matroid.rank() - 1
    for k in range(top + 1):
        for flag in matroid.flags(k, proper=True, consecutive=False):
            vecs = tuple(_flag_vectors(m, flag, projective=True))
            cones.append(Cone(vecs, vecs, flag))
    return Fan(m - 1, tuple(cones), "bergman_projective")


def fan_from_json(doc: dict) -> Fan:
    """General fan from {"ambient_rank": int, "cones": [{"rays": [[int]]}]}
    listing maximal cones; faces are generated as ray subsets."""
    if not isinstance(doc, dict):
        raise ValueError("fan document must be a JSON object")
    if "ambient_rank" not in doc or "cones" not in doc:
        raise ValueError("fan document needs 'ambient_rank' and 'cones'")
    m = doc["ambient_rank"]
    if not isinstance(m, int) or m < 0:
        raise ValueError("'ambient_rank' must be a non-negative integer")
    entries = doc["cones"]
    if not isinstance(entries, list):
        raise ValueError("'cones' must be a list")
    seen: dict[frozenset[tuple[int, ...]], Cone] = {}
    for pos, entry in enumerate(entries):
        if not isinstance(entry, dict) or "rays" not in entry:
            raise ValueError(f"cones[{pos}] must be an object with a 'rays' field")
        rays = entry["rays"]
        if not isinstance(rays, list) or not all(
            isinstance(r, list) and len(r) == m and all(isinstance(x, int) for x in r)
            for r in rays
        ):
            raise ValueError(f"cones[{pos}].rays must be length-{m} integer vectors")
        rays = [tuple(r) for r in rays]
        if any(not any(r) for r in rays):
            raise ValueError(f"cones[{pos}] lists a zero ray")
        for size in range(len(rays) + 1):
            for face in combinations(rays, size):
                key = frozenset(face)
                if key not in seen:
                    basis = _saturated_span_basis(face, m)
                    seen[key] = Cone(tuple(face), basis)
    cones = sorted(seen.values(), key=lambda c: (c.dim, c.ray_generators))
    return Fan(m, tuple(cones), "general")


def load_fan_file(path: str) -> Fan:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    try:
        return fan_from_json(doc)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _saturated_span_basis(rays: Sequence[Sequence[int]], m: int) -> tuple[tuple[int, ...], ...]:
    sub = LatticeSubgroup.span(rays, m).saturate()
    return sub.hnf_basis


def _wedge_of_rows(m: int, rows: Sequence[Sequence[int]]) -> Multivector:
    out = Multivector.scalar(m, 1)
    for row in rows:
        out = out.wedge(Multivector(m, 1, {(i,): v for i, v in enumerate(row) if v}))
    return out


def fk_lattice(fan: Fan, k: int) -> LatticeSubgroup:
    """Tropical homology lattice F_k: the subgroup of the k-th exterior
    power generated, over all cones, by wedges of k lattice vectors lying
    in one cone's span lattice."""
    m = fan.ambient_rank
    width = len(monomials(m, k))
    if k == 0:
        return LatticeSubgroup.full(1)
    gens = []
    for cone in fan.maximal_cones():
        if cone.dim < k:
            continue
        for rows in combinations(cone.span_basis, k):
            gens.append(_wedge_of_rows(m, rows).coordinates())
    return LatticeSubgroup.span(gens, width)


def fk_flag_generators(matroid: Matroid, k: int, projective: bool) -> LatticeSubgroup:
    """F_k generated only by the wedge of each consecutive-rank flag
    (flats of ranks 1..k); equals ``fk_lattice`` of the matching fan."""
    m = matroid.ground_size
    amb = m - 1 if projective else m
    if k == 0:
        return LatticeSubgroup.full(1)
    width = len(monomials(amb, k))
    gens = []
    for flag in matroid.flags(k, proper=projective, consecutive=True):
        vecs = _flag_vectors(m, flag, projective)
        gens.append(_wedge_of_rows(amb, vecs).coordinates())
    return LatticeSubgroup.span(gens, width)


def all_flag_wedges(matroid: Matroid, k: int, projective: bool) -> LatticeSubgroup:
    """Span of the wedge monomials of ALL length-k flags (any ranks); the
    flag-reduction lemma says this agrees with the consecutive-rank span."""
    m = matroid.ground_size
    amb = m - 1 if projective else m
    if k == 0:
        return LatticeSubgroup.full(1)
    width = len(monomials(amb, k))
    gens = []
    for flag in matroid.flags(k, proper=projective, consecutive=False):
        vecs = _flag_vectors(m, flag, projective)
        gens.append(_wedge_of_rows(amb, vecs).coordinates())
    return LatticeSubgroup.span(gens, width)


class CohomologyData(NamedTuple):
    rank: int
    pairing_matrix: tuple[tuple[int, ...], ...]


def fk_cohomology(fan: Fan, k: int) -> CohomologyData:
    """Rank of the cohomology group F^k (the dual-exterior quotient by the
    annihilator of F_k) and the pairing matrix between the canonical basis
    of F_k and a lift of a basis of the quotient.

    The annihilator is saturated, so the quotient is torsion-free and the
    rank describes it completely; the pairing matrix has determinant +-1
    exactly when the pairing between F_k and F^k is perfect.
    """
    fk = fk_lattice(fan, k)
    _, lift = fk.annihilator().quotient_data()
    matrix = tuple(
        tuple(dot(row, q) for q in lift) for row in fk.hnf_basis
    )
    return CohomologyData(fk.rank, matrix)


def check_ideal_property(fan: Fan) -> bool:
    """Whether wedging the annihilator of F_k with any degree-1 dual basis
    functional lands in the annihilator of F_{k+1}; this is what makes the
    cohomology a quotient ring of the dual exterior algebra."""
    m = fan.ambient_rank
    top = fan.max_dim()
    ann_next = fk_lattice(fan, 0).annihilator()
    for k in range(top + 1):
        ann = ann_next
        ann_next = fk_lattice(fan, k + 1).annihilator()
        for row in ann.hnf_basis:
            a = Multivector.from_coordinates(m, k, row)
            for i in range(m):
                wedged = Multivector.basis_vector(m, i).wedge(a)
                if not ann_next.contains_vector(wedged.coordinates()):
                    return False
    return True


def _primitive_quotient_generator(
    sigma: Cone, tau: Cone, extra_ray: Sequence[int], m: int
) -> tuple[int, ...]:
    """A vector of <sigma>_Z generating <sigma>_Z / <tau>_Z =~ Z, with sign
    chosen so the image of ``extra_ray`` is a positive multiple of it.
    Any representative of the generator modulo <tau>_Z works for balancing.
    """
    functionals = LatticeSubgroup.span(tau.span_basis, m).annihilator().hnf_basis
    images = [tuple(dot(f, s) for f in functionals) for s in sigma.span_basis]
    reduced = hermite_normal_form(images, len(functionals))
    if len(reduced) != 1:
        raise ValueError("cone/facet pair does not have a rank-1 quotient")
    gen = reduced[0]
    j0 = next(j for j, v in enumerate(gen) if v)
    coeffs = [img[j0] // gen[j0] for img in images]
    # multi-xgcd: integer combination of the basis rows hitting the generator
    g, combo = coeffs[0], [1] + [0] * (len(coeffs) - 1)
    for i in range(1, len(coeffs)):
        g2, x, y = xgcd(g, coeffs[i])
        combo = [x * c for c in combo]
        combo[i] = y
        g = g2
    if abs(g) != 1:
        raise ValueError("span basis does not surject onto the quotient")
    combo = [c * g for c in combo]  # absorb a possible sign of the gcd
    u = [0] * m
    for c, row in zip(combo, sigma.span_basis):
        if c:
            for j, v in enumerate(row):
                u[j] += c * v
    extra_image = tuple(dot(f, extra_ray) for f in functionals)
    t = extra_image[j0] // gen[j0]
    if t == 0:
        raise ValueError("extra ray lies in the facet span")
    if t < 0:
        u = [-v for v in u]
    return tuple(u)


def check_balanced(fan: Fan) -> bool:
    """Degree-1 balancing: around every codimension-1 cone, the primitive
    normal generators of the adjacent top cones sum into the cone's span
    lattice (all weights 1).  Requires a pure fan."""
    maximal = fan.maximal_cones()
    if not maximal:
        return True
    d = maximal[0].dim
    if any(c.dim != d for c in maximal):
        raise NotPure(f"maximal cones of dimensions {{ {sorted({c.dim for c in maximal})} }}")
    if d == 0:
        return True
    m = fan.ambient_rank
    for tau in fan.cones_of_dim(d - 1):
        tau_rays = tau.ray_set()
        tau_lattice = LatticeSubgroup.span(tau.span_basis, m)
        total = [0] * m
        for sigma in fan.cones_of_dim(d):
            if not tau_rays < sigma.ray_set():
                continue
            extras = sigma.ray_set() - tau_rays
            extra_ray = sorted(extras)[0]
            u = _primitive_quotient_generator(sigma, tau, extra_ray, m)
            total = [a + b for a, b in zip(total, u)]
        if any(total) and not tau_lattice.contains_vector(total):
            return False
    return True


def distinct_wedges_up_to_sign(fan: Fan, k: int) -> int:
    """Number of distinct sign-normalized wedge monomials of k-cones; this
    is the coarse count of k-dimensional directions (e.g. the classical
    bivector count of a Bergman fan), versus the fine flag count."""
    m = fan.ambient_rank
    seen = set()
    for cone in fan.cones_of_dim(k):
        coords = list(_wedge_of_rows(m, cone.span_basis).coordinates())
        lead = next((v for v in coords if v), None)
        if lead is None:
            continue
        if lead < 0:
            coords = [-v for v in coords]
        seen.add(tuple(coords))
    return len(seen)


def fan_statistics(fan: Fan) -> dict:
    """Fine cone counts per dimension, ray count, and the coarse
    distinct-wedge counts, for reports."""
    per_dim: dict[int, int] = {}
    for c in fan.cones:
        per_dim[c.dim] = per_dim.get(c.dim, 0) + 1
    return {
        "kind": fan.kind,
        "ambient_rank": fan.ambient_rank,
        "rays": per_dim.get(1, 0),
        "cones_per_dim": {str(d): per_dim[d] for d in sorted(per_dim)},
        "distinct_wedges_per_dim": {
            str(d): distinct_wedges_up_to_sign(fan, d) for d in sorted(per_dim) if d > 0
        },
    }
