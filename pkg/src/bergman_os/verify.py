"""Machine verification battery.

Each check compares two independently computed objects with exact
arithmetic: subgroup equalities are identities of canonical Hermite bases,
never rank comparisons.  A failing check carries a concrete witness (a
multivector lying in one subgroup but not the other, or the offending
ranks); a check whose brute-force oracle would exceed the size bound is
reported as skipped, which never affects the exit status.

Reports are deterministic for a fixed input and seed, up to the timing
fields.
"""

from __future__ import annotations

import time
from itertools import combinations
from math import comb
from random import Random
from typing import Callable

from .errors import SizeLimitExceeded
from .exterior import (
    Multivector,
    monomials,
    pairing,
    span,
    wedge_top,
)
from .fans import (
    all_flag_wedges,
    build_affine_fan,
    build_bergman_fan,
    check_balanced,
    check_ideal_property,
    fan_statistics,
    fk_cohomology,
    fk_flag_generators,
    fk_lattice,
)
from .intlinalg import determinant, left_kernel
from .lattices import LatticeSubgroup
from .matroids import Matroid
from .orlik_solomon import (
    ORACLE_SIZE_DEFAULT,
    dependent_subsets,
    os0_ideal_degree,
    os_ideal_degree,
    os_ideal_oracle,
    os_restricted_ideal,
)
from .version import SCHEMA_VERSION, __version__

BASE_CHECKS = (
    "theorem-affine",
    "theorem-projective",
    "fan-balanced",
    "fan-ideal-property",
)
ORACLE_CHECKS = ("theorem-affine-oracle",)
LEMMA_CHECKS = (
    "lemma-flag-reduction",
    "lemma-leibnitz-generation",
    "lemma-boundary-rank-policy",
    "lemma-intersection-flats",
    "lemma-top-degree",
    "lemma-projective-generation",
    "boundary-squared",
    "leibnitz-rule",
    "complex-acyclicity",
    "operator-adjointness",
    "flag-independence",
    "flat-partition",
    "rank-consistency",
    "closure-properties",
    "annihilator-saturation",
)
ALL_CHECKS = BASE_CHECKS + ORACLE_CHECKS + LEMMA_CHECKS


class CheckResult:
    __slots__ = ("check_id", "status", "details", "seconds")

    def __init__(self, check_id: str, status: str, details: dict, seconds: float):
        self.check_id = check_id
        self.status = status
        self.details = details
        self.seconds = seconds

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "status": self.status,
            "details": self.details,
            "seconds": self.seconds,
        }


class VerificationReport:
    __slots__ = ("matroid_name", "checks", "seed", "max_oracle_size")

    def __init__(self, matroid_name: str, checks: list[CheckResult], seed: int,
                 max_oracle_size: int):
        self.matroid_name = matroid_name
        self.checks = checks
        self.seed = seed
        self.max_oracle_size = max_oracle_size

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "artifact_version": __version__,
            "matroid": self.matroid_name,
            "seed": self.seed,
            "max_oracle_size": self.max_oracle_size,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_dict() for c in self.checks],
            "total_seconds": sum(c.seconds for c in self.checks),
        }


REPORT_JSON_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": [
        "schema_version", "artifact_version", "matroid", "seed",
        "max_oracle_size", "status", "checks", "total_seconds",
    ],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "artifact_version": {"type": "string"},
        "matroid": {"type": "string"},
        "seed": {"type": "integer"},
        "max_oracle_size": {"type": "integer"},
        "status": {"enum": ["pass", "fail"]},
        "total_seconds": {"type": "number"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["check_id", "status", "details", "seconds"],
                "properties": {
                    "check_id": {"enum": list(ALL_CHECKS)},
                    "status": {"enum": ["pass", "fail", "skipped"]},
                    "details": {"type": "object"},
                    "seconds": {"type": "number"},
                },
            },
        },
    },
}


def _subgroup_witness(a: LatticeSubgroup, b: LatticeSubgroup, ambient: int,
                      degree: int, symbol: str) -> str | None:
    """A multivector in exactly one of two subgroups, in text form."""
    for left, right in ((a, b), (b, a)):
        for row in left.hnf_basis:
            if not right.contains_vector(row):
                return Multivector.from_coordinates(ambient, degree, row).to_text(symbol)
    return None


def _timed(check_id: str, fn: Callable[[], tuple[str, dict]]) -> CheckResult:
    start = time.perf_counter()
    try:
        status, details = fn()
    except SizeLimitExceeded as exc:
        return CheckResult(check_id, "skipped", {"reason": str(exc)},
                           time.perf_counter() - start)
    return CheckResult(check_id, status, details, time.perf_counter() - start)


def _skipped(check_id: str, reason: str) -> CheckResult:
    return CheckResult(check_id, "skipped", {"reason": reason}, 0.0)


# -- the two theorems ------------------------------------------------------


def verify_theorem_affine(matroid: Matroid, ideal_of_degree=None) -> CheckResult:
    """In every degree, the annihilator of the homology lattice of the
    affine fan equals the Orlik-Solomon ideal piece, as exact subgroups."""

    def run():
        m = matroid.ground_size
        fan = build_affine_fan(matroid)
        degrees = []
        status = "pass"
        witness = None
        for k in range(m + 2):
            ann = fk_lattice(fan, k).annihilator()
            ideal = (ideal_of_degree or (lambda mk: os_ideal_degree(matroid, mk).subgroup))(k)
            equal = ann == ideal
            degrees.append(
                {
                    "degree": k,
                    "fk_rank": comb(m, k) - ann.rank if k <= m else 0,
                    "annihilator_rank": ann.rank,
                    "ideal_rank": ideal.rank,
                    "equal": equal,
                }
            )
            if not equal and witness is None:
                status = "fail"
                witness = _subgroup_witness(ann, ideal, m, k, "f")
        details = {"degrees": degrees}
        if witness is not None:
            details["witness"] = witness
        return status, details

    return _timed("theorem-affine", run)


def verify_theorem_projective(matroid: Matroid) -> CheckResult:
    """The cohomology of the Bergman fan against the projective
    Orlik-Solomon algebra: annihilator = ideal in every degree, equal
    ranks, torsion-free quotients on both sides, and a perfect pairing
    (determinant +-1) between homology and the algebra."""

    def run():
        m = matroid.ground_size
        n = matroid.rank()
        fan = build_bergman_fan(matroid)
        degrees = []
        status = "pass"
        witness = None
        for k in range(n):
            fk = fk_lattice(fan, k)
            ann = fk.annihilator()
            ideal0 = os0_ideal_degree(matroid, k).subgroup
            equal = ann == ideal0
            rank_f = fk.rank
            rank_os0 = comb(m - 1, k) - ideal0.rank
            ann_torsion, _ = ann.quotient_data()
            os0_torsion, _ = ideal0.quotient_data()
            det = determinant(fk_cohomology(fan, k).pairing_matrix)
            ok = (
                equal
                and rank_f == rank_os0
                and not ann_torsion
                and not os0_torsion
                and det in (1, -1)
            )
            degrees.append(
                {
                    "degree": k,
                    "fk_rank": rank_f,
                    "os0_rank": rank_os0,
                    "ideal_rank": ideal0.rank,
                    "equal": equal,
                    "cohomology_torsion": ann_torsion,
                    "os0_torsion": os0_torsion,
                    "pairing_det": det,
                }
            )
            if not ok and witness is None:
                status = "fail"
                witness = _subgroup_witness(ann, ideal0, m - 1, k, "g") or (
                    f"rank/torsion mismatch in degree {k}"
                )
        details = {"degrees": degrees, "fan": fan_statistics(fan)}
        if witness is not None:
            details["witness"] = witness
        return status, details

    return _timed("theorem-projective", run)


def _check_fan_balanced(matroid: Matroid) -> CheckResult:
    def run():
        fan = build_bergman_fan(matroid)
        ok = check_balanced(fan)
        return ("pass" if ok else "fail"), {"fan": fan.kind, "balanced": ok}

    return _timed("fan-balanced", run)


def _check_fan_ideal_property(matroid: Matroid) -> CheckResult:
    def run():
        results = {
            fan.kind: check_ideal_property(fan)
            for fan in (build_affine_fan(matroid), build_bergman_fan(matroid))
        }
        ok = all(results.values())
        return ("pass" if ok else "fail"), results

    return _timed("fan-ideal-property", run)


def _check_theorem_affine_oracle(matroid: Matroid, max_oracle_size: int) -> CheckResult:
    result = verify_theorem_affine(
        matroid, ideal_of_degree=lambda k: os_ideal_oracle(matroid, k, max_oracle_size)
    )
    return CheckResult("theorem-affine-oracle", result.status, result.details,
                       result.seconds)


# -- lemma batteries --------------------------------------------------------


def _check_flag_reduction(matroid: Matroid) -> CheckResult:
    """Consecutive-rank flags, all flags, and the fan definition generate
    the same homology lattice, affinely and projectively."""

    def run():
        n = matroid.rank()
        rows = []
        ok = True
        for projective, fan in (
            (False, build_affine_fan(matroid)),
            (True, build_bergman_fan(matroid)),
        ):
            top = n - 1 if projective else n
            for k in range(top + 1):
                via_fan = fk_lattice(fan, k)
                via_consecutive = fk_flag_generators(matroid, k, projective)
                via_all = all_flag_wedges(matroid, k, projective)
                equal = via_fan == via_consecutive == via_all
                ok = ok and equal
                rows.append(
                    {
                        "projective": projective,
                        "degree": k,
                        "rank": via_fan.rank,
                        "equal": equal,
                    }
                )
        return ("pass" if ok else "fail"), {"cases": rows}

    return _timed("lemma-flag-reduction", run)


def _check_leibnitz_generation(matroid: Matroid, max_oracle_size: int) -> CheckResult:
    def run():
        m = matroid.ground_size
        rows = []
        ok = True
        witness = None
        for k in range(m + 2):
            oracle = os_ideal_oracle(matroid, k, max_oracle_size)
            direct = os_ideal_degree(matroid, k).subgroup
            equal = oracle == direct
            ok = ok and equal
            rows.append({"degree": k, "rank": direct.rank, "equal": equal})
            if not equal and witness is None:
                witness = _subgroup_witness(oracle, direct, m, k, "f")
        details = {"degrees": rows}
        if witness is not None:
            details["witness"] = witness
        return ("pass" if ok else "fail"), details

    return _timed("lemma-leibnitz-generation", run)


def _check_boundary_rank_policy(matroid: Matroid) -> CheckResult:
    def run():
        m = matroid.ground_size
        ok = True
        for k in range(m + 2):
            a = os_ideal_degree(matroid, k).subgroup
            b = os_ideal_degree(matroid, k, boundary_policy="rank_k").subgroup
            ok = ok and a == b
        return ("pass" if ok else "fail"), {"max_degree": m + 1}

    return _timed("lemma-boundary-rank-policy", run)


def _check_intersection_flats(matroid: Matroid) -> CheckResult:
    """The degree-k ideal equals the intersection of the flat-restricted
    ideals over all rank-k flats."""

    def run():
        m = matroid.ground_size
        rows = []
        ok = True
        for k in range(matroid.rank() + 1):
            flats = matroid.flats(k)
            width = len(monomials(m, k))
            inter = LatticeSubgroup.full(width)
            for flat in flats:
                inter = inter.intersect(os_restricted_ideal(matroid, flat.elements, k))
            direct = os_ideal_degree(matroid, k).subgroup
            equal = inter == direct
            ok = ok and equal
            rows.append({"degree": k, "flats": len(flats), "equal": equal})
        return ("pass" if ok else "fail"), {"degrees": rows}

    return _timed("lemma-intersection-flats", run)


def _boundary_image_kernel(m: int, k: int) -> tuple[LatticeSubgroup, LatticeSubgroup]:
    """(image of boundary from degree k+1, kernel of boundary on degree k)
    as subgroups of the degree-k exterior power."""
    image_gens = [
        Multivector.basis_monomial(m, mono).boundary()
        for mono in monomials(m, k + 1)
    ]
    image = span(image_gens, m, k)
    width = len(monomials(m, k))
    if k == 0:
        return image, LatticeSubgroup.full(width)  # boundary is 0 on degree 0
    rows = [
        Multivector.basis_monomial(m, mono).boundary().coordinates()
        for mono in monomials(m, k)
    ]
    kernel = LatticeSubgroup(width, left_kernel(rows, len(monomials(m, k - 1))))
    return image, kernel


def _check_top_degree(matroid: Matroid) -> CheckResult:
    """Top-degree presentation: the ideal is spanned by the dependent
    monomials plus the image of the boundary, which equals its kernel."""

    def run():
        m = matroid.ground_size
        n = matroid.rank()
        direct = os_ideal_degree(matroid, n).subgroup
        image, kernel = _boundary_image_kernel(m, n)
        dep_span = span(
            [Multivector.basis_monomial(m, dep) for dep in dependent_subsets(matroid, n)],
            m, n,
        )
        via_image = dep_span + image
        via_kernel = dep_span + kernel
        ok = image == kernel and direct == via_image and direct == via_kernel
        return ("pass" if ok else "fail"), {
            "degree": n,
            "image_rank": image.rank,
            "kernel_rank": kernel.rank,
            "ideal_rank": direct.rank,
        }

    return _timed("lemma-top-degree", run)


def _check_projective_generation(matroid: Matroid) -> CheckResult:
    """The projective ideal is generated by the boundary elements alone:
    boundary route == intersection route in every degree."""

    def run():
        rows = []
        ok = True
        for k in range(matroid.rank() + 1):
            a = os0_ideal_degree(matroid, k, method="boundary").subgroup
            b = os0_ideal_degree(matroid, k, method="intersection").subgroup
            equal = a == b
            ok = ok and equal
            rows.append({"degree": k, "rank": a.rank, "equal": equal})
        return ("pass" if ok else "fail"), {"degrees": rows}

    return _timed("lemma-projective-generation", run)


def _random_multivector(rng: Random, m: int, k: int) -> Multivector:
    terms = {}
    for mono in monomials(m, k):
        if rng.random() < 0.4:
            c = rng.randint(-3, 3)
            if c:
                terms[mono] = c
    return Multivector(m, k, terms)


def _check_boundary_squared(matroid: Matroid, rng: Random) -> CheckResult:
    def run():
        m = matroid.ground_size
        ok = True
        for mono in monomials(m, min(m, 3)):
            mv = Multivector.basis_monomial(m, mono)
            ok = ok and mv.boundary().boundary().is_zero()
        for _ in range(50):
            k = rng.randint(1, min(m, 5))
            mv = _random_multivector(rng, m, k)
            ok = ok and mv.boundary().boundary().is_zero()
        return ("pass" if ok else "fail"), {"samples": 50}

    return _timed("boundary-squared", run)


def _check_leibnitz_rule(matroid: Matroid, rng: Random) -> CheckResult:
    def run():
        m = matroid.ground_size
        ok = True
        for _ in range(50):
            p = rng.randint(1, min(m, 3))
            q = rng.randint(1, min(m, 3))
            if p + q > m:
                continue
            a = _random_multivector(rng, m, p)
            b = _random_multivector(rng, m, q)
            lhs = a.wedge(b).boundary()
            sign = 1 if p % 2 == 0 else -1
            rhs = a.boundary().wedge(b) + sign * a.wedge(b.boundary())
            ok = ok and lhs == rhs
        return ("pass" if ok else "fail"), {"samples": 50}

    return _timed("leibnitz-rule", run)


def _check_acyclicity(matroid: Matroid) -> CheckResult:
    """The boundary complex on the dual exterior algebra is exact:
    image = kernel in every degree, with the complementary rank count."""

    def run():
        m = matroid.ground_size
        ok = True
        rows = []
        for k in range(m + 1):
            image, kernel = _boundary_image_kernel(m, k)
            prev_image_rank = len(monomials(m, k)) - kernel.rank  # rank of d_k
            equal = image == kernel
            complementary = image.rank + prev_image_rank == comb(m, k)
            ok = ok and equal and complementary
            rows.append({"degree": k, "rank": image.rank, "equal": equal})
        return ("pass" if ok else "fail"), {"degrees": rows}

    return _timed("complex-acyclicity", run)


def _check_adjointness(matroid: Matroid, rng: Random) -> CheckResult:
    """pairing(top ^ x, y) == pairing(x, boundary y): exhaustive over basis
    monomials for small ground sets, sampled otherwise."""

    def run():
        m = matroid.ground_size
        ok = True
        exhaustive = m <= 6
        if exhaustive:
            pairs = [
                (x, y)
                for k in range(m)
                for x in monomials(m, k)
                for y in monomials(m, k + 1)
            ]
        else:
            pairs = []
            for _ in range(300):
                k = rng.randint(0, m - 1)
                xs = monomials(m, k)
                ys = monomials(m, k + 1)
                pairs.append((xs[rng.randrange(len(xs))], ys[rng.randrange(len(ys))]))
        for x_mono, y_mono in pairs:
            x = Multivector.basis_monomial(m, x_mono)
            y = Multivector.basis_monomial(m, y_mono)
            if pairing(wedge_top(x), y) != pairing(x, y.boundary()):
                ok = False
                break
        return ("pass" if ok else "fail"), {
            "mode": "exhaustive" if exhaustive else "sampled",
            "pairs": len(pairs),
        }

    return _timed("operator-adjointness", run)


def _check_flag_independence(matroid: Matroid) -> CheckResult:
    """Every flag monomial of the affine fan expands into +-1 multiples of
    monomials E_I with I an independent transversal of the flag layers."""

    def run():
        m = matroid.ground_size
        ok = True
        checked = 0
        for k in range(1, matroid.rank() + 1):
            for flag in matroid.flags(k, proper=False, consecutive=False):
                mv = Multivector.scalar(m, 1)
                for flat in flag.chain:
                    mv = mv.wedge(Multivector.indicator_vector(m, flat.elements))
                layers = []
                prev: set[int] = set()
                for flat in flag.chain:
                    cur = set(flat.elements)
                    layers.append(cur - prev)
                    prev = cur
                for mono, coeff in mv.terms.items():
                    checked += 1
                    if abs(coeff) != 1 or matroid.is_dependent(mono):
                        ok = False
                    remaining = set(mono)
                    for layer in layers:
                        hits = remaining & layer
                        if len(hits) != 1:
                            ok = False
                            break
                        remaining -= hits
        return ("pass" if ok else "fail"), {"terms_checked": checked}

    return _timed("flag-independence", run)


def _check_flat_partition(matroid: Matroid) -> CheckResult:
    """For nested flats with rank gap >= 2, the intermediate flats one rank
    up partition the difference."""

    def run():
        n = matroid.rank()
        ok = True
        cases = 0
        all_flats = [f for r in range(n + 1) for f in matroid.flats(r)]
        for low in all_flats:
            low_set = set(low.elements)
            for high in all_flats:
                if high.rank < low.rank + 2:
                    continue
                high_set = set(high.elements)
                if not low_set < high_set:
                    continue
                cases += 1
                between = [
                    set(f.elements)
                    for f in matroid.flats(low.rank + 1)
                    if low_set < set(f.elements) <= high_set
                ]
                diff = high_set - low_set
                pieces = [b - low_set for b in between]
                union: set[int] = set()
                disjoint = True
                for piece in pieces:
                    if union & piece:
                        disjoint = False
                    union |= piece
                ok = ok and disjoint and union == diff
        return ("pass" if ok else "fail"), {"nested_pairs": cases}

    return _timed("flat-partition", run)


def _check_rank_consistency(matroid: Matroid) -> CheckResult:
    """Rank oracle vs brute force: rank(S) is the size of a largest subset
    of S containing no circuit (exhaustive for small ground sets)."""

    def run():
        m = matroid.ground_size
        if m > 8:
            raise SizeLimitExceeded(f"ground size {m} too large for exhaustive rank check")
        ok = True
        elements = range(m)
        for size in range(m + 1):
            for subset in combinations(elements, size):
                best = 0
                for r in range(len(subset), -1, -1):
                    if any(
                        matroid.is_independent(t) for t in combinations(subset, r)
                    ):
                        best = r
                        break
                if matroid.rank(subset) != best:
                    ok = False
        return ("pass" if ok else "fail"), {"subsets": 2 ** m}

    return _timed("rank-consistency", run)


def _check_closure_properties(matroid: Matroid) -> CheckResult:
    """Closure is idempotent, extensive, monotone, and rank-preserving."""

    def run():
        m = matroid.ground_size
        if m > 8:
            raise SizeLimitExceeded(f"ground size {m} too large for exhaustive closure check")
        ok = True
        subsets = [
            s for size in range(m + 1) for s in combinations(range(m), size)
        ]
        for s in subsets:
            c = matroid.closure(s)
            ok = ok and set(s) <= set(c.elements)
            ok = ok and matroid.closure(c.elements).elements == c.elements
            ok = ok and matroid.rank(s) == c.rank
        for s in subsets[: 2 ** min(m, 6)]:
            cs = set(matroid.closure(s).elements)
            for e in range(m):
                if e not in s:
                    bigger = matroid.closure(tuple(sorted(set(s) | {e}))).elements
                    ok = ok and cs <= set(bigger)
        return ("pass" if ok else "fail"), {"subsets": len(subsets)}

    return _timed("closure-properties", run)


def _check_annihilator_saturation(matroid: Matroid, rng: Random) -> CheckResult:
    """annihilator(annihilator(L)) == saturate(L), on random subgroups and
    on the homology lattices of the matroid's fans."""

    def run():
        ok = True
        for _ in range(40):
            width = rng.randint(1, 6)
            nvecs = rng.randint(0, width + 1)
            vecs = [
                tuple(rng.randint(-4, 4) for _ in range(width)) for _ in range(nvecs)
            ]
            sub = LatticeSubgroup.span(vecs, width)
            ok = ok and sub.annihilator().annihilator() == sub.saturate()
        fan = build_bergman_fan(matroid)
        for k in range(matroid.rank()):
            fk = fk_lattice(fan, k)
            ok = ok and fk.annihilator().annihilator() == fk.saturate()
        return ("pass" if ok else "fail"), {"random_samples": 40}

    return _timed("annihilator-saturation", run)


def verify_lemmas(matroid: Matroid, max_oracle_size: int = ORACLE_SIZE_DEFAULT,
                  seed: int = 0) -> list[CheckResult]:
    """Run every lemma/property battery against one matroid, in the fixed
    battery order."""
    rng = Random(seed)
    return [
        _check_flag_reduction(matroid),
        _check_leibnitz_generation(matroid, max_oracle_size),
        _check_boundary_rank_policy(matroid),
        _check_intersection_flats(matroid),
        _check_top_degree(matroid),
        _check_projective_generation(matroid),
        _check_boundary_squared(matroid, rng),
        _check_leibnitz_rule(matroid, rng),
        _check_acyclicity(matroid),
        _check_adjointness(matroid, rng),
        _check_flag_independence(matroid),
        _check_flat_partition(matroid),
        _check_rank_consistency(matroid),
        _check_closure_properties(matroid),
        _check_annihilator_saturation(matroid, rng),
    ]


def verify_matroid(
    matroid: Matroid,
    name: str,
    lemmas: bool = False,
    oracle: bool = False,
    max_oracle_size: int = ORACLE_SIZE_DEFAULT,
    seed: int = 0,
) -> VerificationReport:
    """Full battery; every check id appears exactly once, with checks not
    requested reported as skipped."""
    checks = [
        verify_theorem_affine(matroid),
        verify_theorem_projective(matroid),
        _check_fan_balanced(matroid),
        _check_fan_ideal_property(matroid),
    ]
    if oracle:
        checks.append(_check_theorem_affine_oracle(matroid, max_oracle_size))
    else:
        checks.append(_skipped("theorem-affine-oracle", "not requested (use --oracle)"))
    if lemmas:
        checks.extend(verify_lemmas(matroid, max_oracle_size, seed))
    else:
        checks.extend(
            _skipped(check_id, "not requested (use --lemmas)")
            for check_id in LEMMA_CHECKS
        )
    assert [c.check_id for c in checks] == list(ALL_CHECKS)
    return VerificationReport(name, checks, seed, max_oracle_size)
