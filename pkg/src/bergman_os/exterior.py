"""Exterior algebra of a free abelian group, with exact integer coefficients.

A degree-k multivector is a sparse integer combination of basis monomials
indexed by sorted k-subsets of {0..m-1}.  The same structure serves both a
lattice V (vectors, basis e_0..e_{m-1}) and its dual W (functionals, basis
f_0..f_{m-1}); the pairing below treats coordinates of equal degree as dual
bases of each other.

Basis monomials of degree k are ordered lexicographically by index set;
this fixes the coordinates used by every subgroup computation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import AmbientMismatch, DegreeMismatch
from .lattices import LatticeSubgroup


@lru_cache(maxsize=None)
def monomials(ambient_rank: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All sorted degree-subsets of {0..ambient_rank-1}, lex order."""
    return tuple(combinations(range(ambient_rank), degree))


@lru_cache(maxsize=None)
def monomial_index(ambient_rank: int, degree: int) -> dict[tuple[int, ...], int]:
    return {mono: i for i, mono in enumerate(monomials(ambient_rank, degree))}


def merge_sign(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Merge two disjoint sorted index tuples; sign counts transpositions.

    Returns (merged, 0) when the tuples share an index.
    """
    merged: list[int] = []
    sign = 1
    i = j = 0
    while i < len(left) and j < len(right):
        a, b = left[i], right[j]
        if a == b:
            return (), 0
        if a < b:
            merged.append(a)
            i += 1
        else:
            # b jumps over the remaining len(left) - i entries of left
            if (len(left) - i) % 2:
                sign = -sign
            merged.append(b)
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return tuple(merged), sign


class Multivector:
    """Element of the k-th exterior power of Z^m, sparse form.

    ``terms`` maps sorted k-tuples to nonzero integers; degree 0 lives on
    the empty tuple.

    >>> a = Multivector.basis_vector(4, 0)
    >>> b = Multivector.basis_vector(4, 3)
    >>> a.wedge(b).terms
    {(0, 3): 1}
    >>> a.wedge(a).is_zero()
    True
    """

    __slots__ = ("ambient_rank", "degree", "terms")

    def __init__(self, ambient_rank: int, degree: int, terms: Mapping[tuple[int, ...], int]):
        self.ambient_rank = ambient_rank
        self.degree = degree
        self.terms = {k: v for k, v in terms.items() if v}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ambient_rank: int, degree: int) -> "Multivector":
        return cls(ambient_rank, degree, {})

    @classmethod
    def scalar(cls, ambient_rank: int, value: int) -> "Multivector":
        return cls(ambient_rank, 0, {(): value})

    @classmethod
    def basis_monomial(cls, ambient_rank: int, indices: Iterable[int]) -> "Multivector":
        idx = tuple(sorted(indices))
        if len(set(idx)) != len(idx):
            raise ValueError(f"repeated index in monomial {idx}")
        if idx and (idx[0] < 0 or idx[-1] >= ambient_rank):
            raise ValueError(f"monomial {idx} out of range for rank {ambient_rank}")
        return cls(ambient_rank, len(idx), {idx: 1})

    @classmethod
    def basis_vector(cls, ambient_rank: int, i: int) -> "Multivector":
        return cls.basis_monomial(ambient_rank, (i,))

    @classmethod
    def indicator_vector(cls, ambient_rank: int, indices: Iterable[int]) -> "Multivector":
        """The degree-1 vector summing the basis vectors of ``indices``
        (the vector attached to a flat)."""
        return cls(ambient_rank, 1, {(i,): 1 for i in indices})

    @classmethod
    def from_coordinates(
        cls, ambient_rank: int, degree: int, coords: Sequence[int]
    ) -> "Multivector":
        monos = monomials(ambient_rank, degree)
        return cls(ambient_rank, degree, dict(zip(monos, coords)))

    # -- ring / module structure --------------------------------------

    def _check_compatible(self, other: "Multivector", need_degree: bool = False) -> None:
        if self.ambient_rank != other.ambient_rank:
            raise AmbientMismatch(
                f"ambient ranks differ: {self.ambient_rank} vs {other.ambient_rank}"
            )
        if need_degree and self.degree != other.degree:
            raise DegreeMismatch(f"degrees differ: {self.degree} vs {other.degree}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_compatible(other, need_degree=True)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return Multivector(self.ambient_rank, self.degree, terms)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(
            self.ambient_rank, self.degree, {k: -v for k, v in self.terms.items()}
        )

    def __rmul__(self, scalar: int) -> "Multivector":
        return Multivector(
            self.ambient_rank, self.degree, {k: scalar * v for k, v in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return (
            self.ambient_rank == other.ambient_rank
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.degree, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def wedge(self, other: "Multivector") -> "Multivector":
        """Graded-commutative product: a^b = (-1)^(deg a * deg b) b^a.

        >>> e = lambda i: Multivector.basis_vector(4, i)
        >>> (e(1) + e(2)).wedge(e(1)).terms
        {(1, 2): -1}
        """
        self._check_compatible(other)
        terms: dict[tuple[int, ...], int] = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                merged, sign = merge_sign(ka, kb)
                if sign:
                    terms[merged] = terms.get(merged, 0) + sign * va * vb
        return Multivector(self.ambient_rank, self.degree + other.degree, terms)

    def boundary(self) -> "Multivector":
        """Alternating contraction: sends each monomial x_{i_0}^...^x_{i_k}
        to sum_s (-1)^s x_{i_0}^...(drop i_s)...^x_{i_k}; degree-1 basis
        elements go to the integer 1, degree 0 goes to 0.

        >>> f123 = Multivector.basis_monomial(4, (1, 2, 3))
        >>> sorted(f123.boundary().terms.items())
        [((1, 2), 1), ((1, 3), -1), ((2, 3), 1)]
        """
        if self.degree == 0:
            return Multivector.zero(self.ambient_rank, 0)
        terms: dict[tuple[int, ...], int] = {}
        for key, val in self.terms.items():
            for s in range(len(key)):
                sub = key[:s] + key[s + 1 :]
                c = val if s % 2 == 0 else -val
                terms[sub] = terms.get(sub, 0) + c
        return Multivector(self.ambient_rank, self.degree - 1, terms)

    # -- coordinates ---------------------------------------------------

    def coordinates(self) -> tuple[int, ...]:
        """Coefficients against the lex-ordered monomial basis."""
        index = monomial_index(self.ambient_rank, self.degree)
        coords = [0] * len(index)
        for key, val in self.terms.items():
            coords[index[key]] = val
        return tuple(coords)

    def to_text(self, symbol: str = "f") -> str:
        """Deterministic human-readable form, lex term order, e.g.
        ``+1*f0^f1 -1*f0^f2 +1*f1^f2``; the empty monomial prints as 1."""
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            val = self.terms[key]
            mono = "^".join(f"{symbol}{i}" for i in key) if key else "1"
            parts.append(f"{'+' if val >= 0 else '-'}{abs(val)}*{mono}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Multivector({self.to_text('x')!r}, rank {self.ambient_rank})"


def wedge(a: Multivector, b: Multivector) -> Multivector:
    return a.wedge(b)


def boundary(a: Multivector) -> Multivector:
    return a.boundary()


def pairing(v: Multivector, w: Multivector) -> int:
    """Determinant pairing of equal-degree multivectors over dual bases:
    basis monomials pair to 1 exactly when their index sets agree.

    >>> e14 = Multivector.basis_monomial(4, (0, 3))
    >>> pairing(e14, Multivector.basis_monomial(4, (0, 3)))
    1
    """
    v._check_compatible(w, need_degree=True)
    return sum(val * w.terms.get(key, 0) for key, val in v.terms.items())


def top_vector(ambient_rank: int) -> Multivector:
    """The all-ones degree-1 vector e_0 + ... + e_{m-1}."""
    return Multivector.indicator_vector(ambient_rank, range(ambient_rank))


def wedge_top(a: Multivector) -> Multivector:
    """Wedge with the all-ones vector; adjoint to ``boundary`` under the
    pairing."""
    return top_vector(a.ambient_rank).wedge(a)


def project_mod_top(a: Multivector) -> Multivector:
    """Image in the quotient by the all-ones vector, coordinatized by
    dropping index 0: substitutes e_0 -> -(e_1 + ... + e_{N}) and shifts
    the remaining indices down by one.

    >>> project_mod_top(top_vector(3)).is_zero()
    True
    >>> project_mod_top(Multivector.basis_vector(3, 1)).terms
    {(0,): 1}
    """
    m = a.ambient_rank
    out = Multivector.zero(m - 1, a.degree)
    image_of_0 = Multivector(m - 1, 1, {(i,): -1 for i in range(m - 1)})
    for key, val in a.terms.items():
        if key and key[0] == 0:
            rest = tuple(i - 1 for i in key[1:])
            term = image_of_0.wedge(Multivector.basis_monomial(m - 1, rest))
        else:
            term = Multivector.basis_monomial(m - 1, tuple(i - 1 for i in key))
        out = out + val * term
    return out


def embed_mod_first(a: Multivector) -> Multivector:
    """Inclusion of the difference sublattice: sends the degree-1 basis
    vector g_i (index i, ambient N) to f_{i+1} - f_0 (ambient N+1), and
    extends multiplicatively."""
    m = a.ambient_rank + 1
    out = Multivector.zero(m, a.degree)
    for key, val in a.terms.items():
        term = Multivector.scalar(m, val)
        for i in key:
            gen = Multivector(m, 1, {(i + 1,): 1, (0,): -1})
            term = term.wedge(gen)
        out = out + term
    return out


def restrict_mod_first(a: Multivector) -> Multivector:
    """One-sided inverse of ``embed_mod_first``: drops every term touching
    index 0 and shifts the rest down.  Only meaningful on multivectors that
    lie in the difference sublattice; see ``in_difference_subalgebra``."""
    terms = {
        tuple(i - 1 for i in key): val
        for key, val in a.terms.items()
        if not (key and key[0] == 0)
    }
    return Multivector(a.ambient_rank - 1, a.degree, terms)


def in_difference_subalgebra(a: Multivector) -> bool:
    """Whether ``a`` lies in the exterior algebra of the sublattice spanned
    by the pairwise differences f_i - f_j."""
    return embed_mod_first(restrict_mod_first(a)) == a


def span(generators: Sequence[Multivector], ambient_rank: int | None = None,
         degree: int | None = None) -> LatticeSubgroup:
    """Canonical subgroup of the appropriate exterior power spanned by the
    generators (all of one ambient rank and degree)."""
    if generators:
        ambient_rank = generators[0].ambient_rank
        degree = generators[0].degree
        for g in generators[1:]:
            generators[0]._check_compatible(g, need_degree=True)
    elif ambient_rank is None or degree is None:
        raise ValueError("empty span needs explicit ambient_rank and degree")
    width = len(monomials(ambient_rank, degree))
    return LatticeSubgroup.span([g.coordinates() for g in generators], width)
