"""Finite matroids with an exact rank oracle.

Elements are labeled 0..N.  A matroid is stored by its circuits (minimal
dependent sets); the rank of a subset is the size of a maximal subset
containing no circuit.  For small ground sets (the intended regime) the
rank function is precomputed over the whole bitmask lattice at
construction, so instances are immutable and safe to share across threads.

Subsets are canonically sorted ascending everywhere; this is the global
convention behind every sign computation downstream.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import CircuitAxiomViolation, LoopDetected
from .intlinalg import matrix_rank

# bounds small enough for exhaustive bitmask work
RANK_TABLE_BOUND = 16
VALIDATE_BOUND = 16


def _mask(subset: Iterable[int]) -> int:
    m = 0
    for e in subset:
        m |= 1 << e
    return m


def _unmask(mask: int) -> tuple[int, ...]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


class Flat:
    """A closed subset together with its rank."""

    __slots__ = ("elements", "rank")

    def __init__(self, elements: tuple[int, ...], rank: int):
        self.elements = elements
        self.rank = rank

    def __eq__(self, other):
        if not isinstance(other, Flat):
            return NotImplemented
        return self.elements == other.elements and self.rank == other.rank

    def __hash__(self):
        return hash((self.elements, self.rank))

    def __repr__(self):
        return f"Flat({self.elements}, rank={self.rank})"


class FlagOfFlats:
    """A strictly increasing chain of nonempty flats J_1 < ... < J_k."""

    __slots__ = ("chain", "proper", "consecutive")

    def __init__(self, chain: tuple[Flat, ...], proper: bool, consecutive: bool):
        self.chain = chain
        self.proper = proper
        self.consecutive = consecutive

    def __len__(self):
        return len(self.chain)

    def __eq__(self, other):
        if not isinstance(other, FlagOfFlats):
            return NotImplemented
        return self.chain == other.chain

    def __hash__(self):
        return hash(self.chain)

    def __repr__(self):
        return "Flag(" + " < ".join(str(f.elements) for f in self.chain) + ")"


class Matroid:
    """Immutable matroid on {0..ground_size-1}, determined by circuits."""

    __slots__ = ("ground_size", "_circuits", "source", "validated", "_circuit_masks",
                 "_rank_table")

    def __init__(self, ground_size: int, circuits: tuple[tuple[int, ...], ...],
                 source: str, validated: bool):
        self.ground_size = ground_size
        self._circuits = circuits
        self.source = source
        self.validated = validated
        self._circuit_masks = tuple(_mask(c) for c in circuits)
        self._rank_table = (
            self._build_rank_table() if ground_size <= RANK_TABLE_BOUND else None
        )

    # -- construction --------------------------------------------------

    @classmethod
    def from_circuits(cls, ground_size: int, circuits: Iterable[Iterable[int]],
                      source: str = "circuits",
                      validate_bound: int = VALIDATE_BOUND) -> "Matroid":
        """Matroid whose minimal dependent sets are exactly ``circuits``.

        Raises LoopDetected on a singleton circuit and
        CircuitAxiomViolation (with a witness pair) when incomparability or
        circuit elimination fails; the axiom check is exhaustive only for
        ground sets up to ``validate_bound``, beyond which the input is
        trusted and the instance is marked unvalidated.
        """
        if ground_size < 1:
            raise ValueError("ground_size must be at least 1")
        canon = sorted({tuple(sorted(set(c))) for c in circuits}, key=lambda c: (len(c), c))
        for c in canon:
            if not c:
                raise CircuitAxiomViolation("empty circuit", c)
            if len(c) == 1:
                raise LoopDetected(f"element {c[0]} is a loop (singleton circuit)")
            if c[0] < 0 or c[-1] >= ground_size:
                raise ValueError(f"circuit {c} out of range for ground size {ground_size}")
        validated = ground_size <= validate_bound
        if validated:
            cls._validate_circuit_axioms(canon)
        return cls(ground_size, tuple(canon), source, validated)

    @staticmethod
    def _validate_circuit_axioms(circuits: Sequence[tuple[int, ...]]) -> None:
        masks = [_mask(c) for c in circuits]
        for i, mi in enumerate(masks):
            for j, mj in enumerate(masks):
                if i != j and mi & mj == mi:
                    raise CircuitAxiomViolation(
                        "circuit contains another circuit", circuits[i], circuits[j]
                    )
        for i, mi in enumerate(masks):
            for j in range(i + 1, len(masks)):
                mj = masks[j]
                common = mi & mj
                if not common:
                    continue
                union = mi | mj
                e = common
                while e:
                    bit = e & -e
                    target = union & ~bit
                    if not any(cm & target == cm for cm in masks):
                        raise CircuitAxiomViolation(
                            "circuit elimination fails", circuits[i], circuits[j]
                        )
                    e ^= bit

    @classmethod
    def from_graph(cls, vertex_count: int, edges: Sequence[Sequence[int]]) -> "Matroid":
        """Graphic matroid: elements are edges in input order, circuits are
        the edge sets of simple cycles (enumerated exhaustively)."""
        for k, (u, v) in enumerate(edges):
            if u == v:
                raise LoopDetected(f"edge {k} = ({u}, {v}) is a self-loop")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {k} = ({u}, {v}) out of range")

        def graph_rank(mask: int) -> int:
            parent = list(range(vertex_count))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            r = 0
            for k, (u, v) in enumerate(edges):
                if mask >> k & 1:
                    ru, rv = find(u), find(v)
                    if ru != rv:
                        parent[ru] = rv
                        r += 1
            return r

        circuits = _circuits_from_rank(len(edges), graph_rank)
        return cls.from_circuits(len(edges), circuits, source="graph")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "Matroid":
        """Linear matroid of the columns of an integer matrix, with ranks
        computed exactly over the rationals."""
        if not rows:
            raise ValueError("matrix needs at least one row")
        ncols = len(rows[0])
        cols = [tuple(row[j] for row in rows) for j in range(ncols)]
        for j, col in enumerate(cols):
            if not any(col):
                raise LoopDetected(f"column {j} is zero")

        height = len(rows)

        def col_rank(mask: int) -> int:
            chosen = [cols[j] for j in range(ncols) if mask >> j & 1]
            return matrix_rank(chosen, height)

        circuits = _circuits_from_rank(ncols, col_rank)
        return cls.from_circuits(ncols, circuits, source="matrix")

    # -- rank oracle -----------------------------------------------------

    def _build_rank_table(self) -> list[int]:
        size = 1 << self.ground_size
        circuit_set = set(self._circuit_masks)
        dep = bytearray(size)
        for mask in range(1, size):
            if mask in circuit_set:
                dep[mask] = 1
                continue
            m = mask
            while m:
                bit = m & -m
                if dep[mask ^ bit]:
                    dep[mask] = 1
                    break
                m ^= bit
        table = [0] * size
        for mask in range(1, size):
            if not dep[mask]:
                table[mask] = mask.bit_count()
            else:
                best = 0
                m = mask
                while m:
                    bit = m & -m
                    r = table[mask ^ bit]
                    if r > best:
                        best = r
                    m ^= bit
                table[mask] = best
        return table

    def _dependent_mask(self, mask: int) -> bool:
        return any(cm & mask == cm for cm in self._circuit_masks)

    def _rank_mask(self, mask: int) -> int:
        if self._rank_table is not None:
            return self._rank_table[mask]
        grown = 0
        m = mask
        while m:
            bit = m & -m
            if not self._dependent_mask(grown | bit):
                grown |= bit
            m ^= bit
        return grown.bit_count()

    def rank(self, subset: Iterable[int] | None = None) -> int:
        """Matroid rank of a subset; with no argument, of the whole ground
        set (= size of every maximal independent set)."""
        if subset is None:
            return self._rank_mask((1 << self.ground_size) - 1)
        return self._rank_mask(_mask(subset))

    def is_dependent(self, subset: Iterable[int]) -> bool:
        return self._dependent_mask(_mask(subset))

    def is_independent(self, subset: Iterable[int]) -> bool:
        return not self.is_dependent(subset)

    def circuits(self) -> tuple[tuple[int, ...], ...]:
        """All minimal dependent sets, sorted by size then lexicographically."""
        return self._circuits

    # -- flats and flags ---------------------------------------------------

    def _closure_mask(self, mask: int) -> int:
        r = self._rank_mask(mask)
        closed = mask
        for e in range(self.ground_size):
            bit = 1 << e
            if not mask & bit and self._rank_mask(mask | bit) == r:
                closed |= bit
        return closed

    def closure(self, subset: Iterable[int]) -> Flat:
        """The unique smallest flat containing the subset (same rank)."""
        mask = _mask(subset)
        closed = self._closure_mask(mask)
        return Flat(_unmask(closed), self._rank_mask(closed))

    def flats(self, k: int) -> list[Flat]:
        """All flats of rank exactly k, lexicographically sorted."""
        if not 0 <= k <= self.rank():
            return []
        seen = set()
        for indep in combinations(range(self.ground_size), k):
            mask = _mask(indep)
            if self._dependent_mask(mask):
                continue
            seen.add(self._closure_mask(mask))
        return [Flat(support, k) for support in sorted(_unmask(m) for m in seen)]

    def flags(self, k: int, proper: bool = True, consecutive: bool = True) -> list[FlagOfFlats]:
        """All length-k chains of nonempty flats, excluding the full ground
        set when ``proper``; ``consecutive`` restricts to rank(J_i) = i.
        Deterministic order (lexicographic in the chain of flat supports)."""
        full_mask = (1 << self.ground_size) - 1
        n = self.rank()
        by_rank: dict[int, list[Flat]] = {}
        for r in range(1, n + 1):
            level = [
                f for f in self.flats(r)
                if not (proper and _mask(f.elements) == full_mask)
            ]
            by_rank[r] = level
        results: list[FlagOfFlats] = []

        def extend(chain: list[Flat], last_mask: int) -> None:
            if len(chain) == k:
                results.append(FlagOfFlats(tuple(chain), proper, consecutive))
                return
            depth = len(chain)
            if consecutive:
                candidate_ranks = [depth + 1]
            else:
                lo = chain[-1].rank + 1 if chain else 1
                candidate_ranks = range(lo, n + 1)
            for r in candidate_ranks:
                for f in by_rank.get(r, ()):
                    fm = _mask(f.elements)
                    if last_mask & fm == last_mask and fm != last_mask:
                        chain.append(f)
                        extend(chain, fm)
                        chain.pop()

        extend([], 0)
        return results

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return (
            self.ground_size == other.ground_size and self._circuits == other._circuits
        )

    def __hash__(self):
        return hash((self.ground_size, self._circuits))

    def __repr__(self):
        return (
            f"Matroid(ground_size={self.ground_size}, rank={self.rank()}, "
            f"circuits={len(self._circuits)}, source={self.source!r})"
        )


def _circuits_from_rank(n: int, rank_of_mask) -> list[tuple[int, ...]]:
    """Minimal dependent sets of the matroid defined by an exact rank
    oracle on bitmasks (exhaustive; exponential in n)."""
    circuits: list[int] = []
    for mask in sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), m)):
        if any(c & mask == c for c in circuits):
            continue
        if rank_of_mask(mask) < mask.bit_count():
            circuits.append(mask)
    return [_unmask(c) for c in circuits]
