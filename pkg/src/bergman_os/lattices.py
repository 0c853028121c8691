"""Finitely generated subgroups of Z^n in canonical Hermite normal form.

Two subgroups are equal iff their ``hnf_basis`` tuples are identical, so
``==`` on LatticeSubgroup is exact subgroup equality, never mere rank
equality.  All values are immutable.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import AmbientMismatch
from .intlinalg import (
    _Echelon,
    hermite_normal_form,
    left_kernel,
    right_kernel,
    smith_normal_form,
)


class LatticeSubgroup:
    """A subgroup of the free abelian group Z^ambient_rank.

    >>> LatticeSubgroup.span([(2, 4), (1, 2)], 2).hnf_basis
    ((1, 2),)
    >>> LatticeSubgroup.span([(2, 0)], 2) == LatticeSubgroup.span([(1, 0)], 2)
    False
    """

    __slots__ = ("ambient_rank", "hnf_basis")

    def __init__(self, ambient_rank: int, hnf_basis: tuple[tuple[int, ...], ...]):
        # callers normally go through span(); this trusts its argument
        self.ambient_rank = ambient_rank
        self.hnf_basis = hnf_basis

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient_rank: int) -> "LatticeSubgroup":
        return cls(ambient_rank, hermite_normal_form(vectors, ambient_rank))

    @classmethod
    def zero(cls, ambient_rank: int) -> "LatticeSubgroup":
        return cls(ambient_rank, ())

    @classmethod
    def full(cls, ambient_rank: int) -> "LatticeSubgroup":
        eye = tuple(
            tuple(1 if i == j else 0 for j in range(ambient_rank))
            for i in range(ambient_rank)
        )
        return cls(ambient_rank, eye)

    @property
    def rank(self) -> int:
        return len(self.hnf_basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeSubgroup):
            return NotImplemented
        return (
            self.ambient_rank == other.ambient_rank
            and self.hnf_basis == other.hnf_basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.hnf_basis))

    def __repr__(self) -> str:
        return f"LatticeSubgroup(rank {self.rank} in Z^{self.ambient_rank})"

    def _check_ambient(self, other: "LatticeSubgroup") -> None:
        if self.ambient_rank != other.ambient_rank:
            raise AmbientMismatch(
                f"ambient ranks differ: {self.ambient_rank} vs {other.ambient_rank}"
            )

    def contains_vector(self, vec: Sequence[int]) -> bool:
        if len(vec) != self.ambient_rank:
            raise AmbientMismatch(
                f"vector length {len(vec)} vs ambient rank {self.ambient_rank}"
            )
        ech = _Echelon(self.ambient_rank)
        ech.rows = [list(r) for r in self.hnf_basis]
        ech.pivots = [next(j for j, v in enumerate(r) if v) for r in self.hnf_basis]
        return not any(ech.reduce(vec))

    def contains(self, other: "LatticeSubgroup") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(row) for row in other.hnf_basis)

    def __add__(self, other: "LatticeSubgroup") -> "LatticeSubgroup":
        self._check_ambient(other)
        return LatticeSubgroup.span(
            list(self.hnf_basis) + list(other.hnf_basis), self.ambient_rank
        )

    def intersect(self, other: "LatticeSubgroup") -> "LatticeSubgroup":
        """x in both spans iff x = u*A = v*B; solve (u, v) via a kernel."""
        self._check_ambient(other)
        a, b = self.hnf_basis, other.hnf_basis
        if not a or not b:
            return LatticeSubgroup.zero(self.ambient_rank)
        stacked = [list(row) for row in a] + [[-x for x in row] for row in b]
        relations = left_kernel(stacked, self.ambient_rank)
        vectors = []
        for rel in relations:
            coeffs = rel[: len(a)]
            vec = [0] * self.ambient_rank
            for c, row in zip(coeffs, a):
                if c:
                    for j, x in enumerate(row):
                        vec[j] += c * x
            vectors.append(vec)
        return LatticeSubgroup.span(vectors, self.ambient_rank)

    def annihilator(self) -> "LatticeSubgroup":
        """All integer functionals (in the dual basis) vanishing on self.

        Always saturated; rank = ambient_rank - rank(self).
        """
        return LatticeSubgroup(
            self.ambient_rank, right_kernel(self.hnf_basis, self.ambient_rank)
        )

    def saturate(self) -> "LatticeSubgroup":
        """Largest same-rank supergroup with torsion-free quotient."""
        if not self.hnf_basis:
            return self
        divisors, coords = smith_normal_form(self.hnf_basis, self.ambient_rank)
        return LatticeSubgroup.span(coords[: len(divisors)], self.ambient_rank)

    def quotient_data(self) -> tuple[list[int], list[tuple[int, ...]]]:
        """Structure of Z^ambient / self.

        Returns (torsion, lift_basis): the elementary divisors > 1 of the
        quotient, and ambient vectors projecting to a basis of its free part.
        """
        if not self.hnf_basis:
            return [], list(LatticeSubgroup.full(self.ambient_rank).hnf_basis)
        divisors, coords = smith_normal_form(self.hnf_basis, self.ambient_rank)
        torsion = [d for d in divisors if d != 1]
        lift = [tuple(row) for row in coords[len(divisors) :]]
        return torsion, lift

    def is_saturated(self) -> bool:
        torsion, _ = self.quotient_data()
        return not torsion
