"""Simplicial complements: describing a complex by a collection of its non-faces.

A complement is a multiset of simplices over an explicit vertex set. It
recovers the complex of all subsets that contain none of its members, so the
same complex has many complements; the canonical one is its set of missing
(minimal) faces.
"""
from __future__ import annotations

from collections import Counter
from typing import AbstractSet, Iterable

from .complex import (
    EMPTY,
    Complex,
    ComplexError,
    as_simplex,
    format_simplex,
    sized_key,
)


class Complement:
    """A finite multiset of non-faces over ``vertices``.

    Member order is kept as given (so printed forms follow the input), but
    equality ignores order and respects multiplicity.
    """

    __slots__ = ("vertices", "members")

    def __init__(self, members: Iterable[Iterable[int]], vertices: Iterable[int] | None = None):
        mem = tuple(as_simplex(m) for m in members)
        support = frozenset().union(*mem) if mem else frozenset()
        if vertices is None:
            verts = support
        else:
            verts = as_simplex(vertices)
            if not support <= verts:
                raise ComplexError(
                    f"complement members use labels {sorted(support - verts)} outside the vertex set"
                )
        self.vertices: frozenset = verts
        self.members: tuple[frozenset, ...] = mem

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complement):
            return NotImplemented
        return self.vertices == other.vertices and Counter(self.members) == Counter(other.members)

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(Counter(self.members).items())))

    def __reduce__(self):
        return (Complement, (list(self.members), list(self.vertices)))

    def __repr__(self) -> str:
        body = ", ".join(format_simplex(m) if m else "∅" for m in self.members)
        return f"Complement({{{body}}}; vertices={sorted(self.vertices)})"

    def as_set(self) -> frozenset:
        return frozenset(self.members)

    def sorted_members(self) -> list[frozenset]:
        return sorted(self.members, key=sized_key)

    def on(self, vertices: Iterable[int]) -> "Complement":
        """The same members reinterpreted on another vertex set."""
        return Complement(self.members, vertices)

    def complex(self) -> Complex:
        return complex_from_complement(self, self.vertices)

    def relabel(self, mapping: dict[int, int]) -> "Complement":
        return Complement(
            [frozenset(mapping[v] for v in m) for m in self.members],
            [mapping[v] for v in self.vertices],
        )


def missing_faces(K: Complex) -> Complement:
    """The inclusion-minimal non-faces of ``K``, duplicate free.

    The void complex yields ``{∅}``; ``{∅}`` yields every singleton.
    """
    if K.is_void:
        return Complement([EMPTY], K.vertices)
    face_set = K.faces()
    found = set()
    for tau in face_set:
        for v in K.vertices - tau:
            cand = tau | {v}
            if cand in face_set or cand in found:
                continue
            if all(cand - {u} in face_set for u in tau):
                found.add(cand)
    return Complement(sorted(found, key=sized_key), K.vertices)


def _minimal_members(members: Iterable[frozenset]) -> list[frozenset]:
    seen: dict[frozenset, None] = dict.fromkeys(members)
    uniq = list(seen)
    by_size = sorted(uniq, key=len)
    minimal = []
    for m in by_size:
        if not any(k <= m for k in minimal):
            minimal.append(m)
    keep = set(minimal)
    return [m for m in uniq if m in keep]


def complex_from_complement(P: Complement, I: Iterable[int]) -> Complex:
    """``K_P(I)``: the subsets of ``I`` containing no member of ``P``."""
    I = as_simplex(I)
    members = [m for m in _minimal_members(P.members) if m <= I]
    if EMPTY in members:
        return Complex.void(I)
    facets: set[frozenset] = {I}
    for sigma in sorted(members, key=sized_key):
        hit = [F for F in facets if sigma <= F]
        if not hit:
            continue
        keep = facets.difference(hit)
        fresh = {F - {v} for F in hit for v in sigma}
        survivors = set()
        for N in fresh:
            if any(N <= G for G in keep):
                continue
            if any(N < M for M in fresh):
                continue
            survivors.add(N)
        facets = keep | survivors
    return Complex(facets, I)


def reduce(P: Complement) -> Complement:
    """Drop duplicates and every member containing another member."""
    return Complement(_minimal_members(P.members), P.vertices)


def equivalent(P: Complement, Q: Complement) -> bool:
    """Whether ``P`` and ``Q`` recover the same complex on their vertex set."""
    if P.vertices != Q.vertices:
        raise ComplexError(
            f"complements live on different vertex sets {sorted(P.vertices)} and {sorted(Q.vertices)}"
        )
    return reduce(P).as_set() == reduce(Q).as_set()


def complement_minus(P: Complement, s: AbstractSet[int]) -> Complement:
    """Member-wise difference ``P − σ``, on the vertex set ``V ∖ σ``.

    Use ``.on(P.vertices)`` to read the result as a complement of the star.
    """
    s = frozenset(s)
    return Complement([m - s for m in P.members], P.vertices - s)


def complement_join(P: Complement, Q: Complement) -> Complement:
    """``P * Q``: all pairwise unions of members, over the union of vertex sets."""
    return Complement(
        [a | b for a in P.members for b in Q.members], P.vertices | Q.vertices
    )


def restrict(P: Complement, I: Iterable[int]) -> Complement:
    """``P|_I``: the members lying inside ``I``; a complement of the full subcomplex."""
    I = as_simplex(I)
    if not I <= P.vertices:
        raise ComplexError(f"labels {sorted(I - P.vertices)} are not in the complement's vertex set")
    return Complement([m for m in P.members if m <= I], I)


def is_complement_of(P: Complement, K: Complex) -> bool:
    if P.vertices != K.vertices:
        return False
    return reduce(P).as_set() == missing_faces(K).as_set()
