"""Abstract simplicial complexes stored by facets over an explicit vertex set.

A simplex is a ``frozenset`` of positive integer labels. A :class:`Complex`
keeps its vertex set separately from its facets so that ghost vertices
(labels lying in no face) survive every operation.

Two degenerate complexes are kept apart:

* the *void* complex has no faces at all (``facets == frozenset()``);
* the *empty-simplex* complex ``{∅}`` has the single face ``∅``
  (``facets == {frozenset()}``).
"""
from __future__ import annotations

from itertools import combinations
from typing import AbstractSet, Iterable, Iterator

Simplex = frozenset

EMPTY = frozenset()


class ComplexError(ValueError):
    """Raised for invalid complexes or operations on them."""


def as_simplex(labels: Iterable[int]) -> frozenset:
    """Validate an iterable of labels and return it as a simplex."""
    s = frozenset(labels)
    for v in s:
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ComplexError(f"vertex labels must be positive integers, got {v!r}")
    return s


def simplex(*labels: int) -> frozenset:
    return as_simplex(labels)


def sorted_simplex(s: AbstractSet[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


def simplex_key(s: AbstractSet[int]) -> tuple[int, ...]:
    """Lexicographic key on the sorted vertex tuple."""
    return tuple(sorted(s))


def sized_key(s: AbstractSet[int]) -> tuple:
    """Key ordering by size first, then lexicographically."""
    return (len(s), tuple(sorted(s)))


def format_simplex(s: AbstractSet[int]) -> str:
    return "(" + ",".join(map(str, sorted(s))) + ")"


def maximal(simplices: Iterable[AbstractSet[int]]) -> frozenset:
    """Inclusion-maximal members of a family of sets."""
    ordered = sorted({frozenset(s) for s in simplices}, key=len, reverse=True)
    kept: list[frozenset] = []
    for s in ordered:
        if not any(s <= k for k in kept):
            kept.append(s)
    return frozenset(kept)


class Complex:
    """A finite abstract simplicial complex.

    ``facets`` may be any generating family of simplices; only the maximal
    ones are stored. ``vertices`` defaults to the union of the facets.
    """

    __slots__ = ("vertices", "facets", "_faces")

    def __init__(self, facets: Iterable[Iterable[int]], vertices: Iterable[int] | None = None):
        facets_ = maximal(as_simplex(f) for f in facets)
        support = frozenset().union(*facets_) if facets_ else frozenset()
        if vertices is None:
            verts = support
        else:
            verts = as_simplex(vertices)
            if not support <= verts:
                raise ComplexError(
                    f"facets use labels {sorted(support - verts)} outside the vertex set"
                )
        self.vertices: frozenset = verts
        self.facets: frozenset = facets_
        self._faces: dict[int, frozenset] | None = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def void(cls, vertices: Iterable[int] = ()) -> "Complex":
        """The complex with no faces, not even ``∅``."""
        return cls([], vertices)

    @classmethod
    def empty_simplex(cls, vertices: Iterable[int] = ()) -> "Complex":
        """The complex ``{∅}``; every listed vertex is a ghost."""
        return cls([EMPTY], vertices)

    @classmethod
    def full_simplex(cls, vertices: Iterable[int]) -> "Complex":
        v = as_simplex(vertices)
        return cls([v], v)

    # -- basic predicates -------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_simplex(self) -> bool:
        return self.facets == frozenset([EMPTY])

    @property
    def dim(self) -> int:
        """Dimension; -1 for ``{∅}`` and, by convention, -2 for the void complex."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    @property
    def ghost_vertices(self) -> frozenset:
        used = frozenset().union(*self.facets) if self.facets else frozenset()
        return self.vertices - used

    def is_face(self, s: AbstractSet[int]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    __contains__ = is_face

    def _all_faces(self) -> dict[int, frozenset]:
        if self._faces is None:
            by_dim: dict[int, set] = {}
            for f in self.facets:
                fs = sorted(f)
                for k in range(len(fs) + 1):
                    for c in combinations(fs, k):
                        by_dim.setdefault(k - 1, set()).add(frozenset(c))
            self._faces = {d: frozenset(v) for d, v in by_dim.items()}
        return self._faces

    def faces(self, d: int | None = None) -> frozenset:
        """Faces of dimension ``d``, or every face when ``d`` is None."""
        table = self._all_faces()
        if d is None:
            return frozenset().union(*table.values()) if table else frozenset()
        return table.get(d, frozenset())

    def iter_faces(self) -> Iterator[frozenset]:
        table = self._all_faces()
        for d in sorted(table):
            yield from sorted(table[d], key=simplex_key)

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted(sorted_simplex(f) for f in self.facets)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts ``(f_0, f_1, ..., f_dim)``; ``()`` for ``{∅}``."""
        if self.is_void:
            raise ComplexError("f-vector of the void complex is undefined")
        table = self._all_faces()
        return tuple(len(table.get(d, ())) for d in range(self.dim + 1))

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self.vertices == other.vertices and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.vertices, self.facets))

    def __reduce__(self):
        return (Complex, (list(self.facets), list(self.vertices)))

    def __repr__(self) -> str:
        if self.is_void:
            body = "void"
        elif self.is_empty_simplex:
            body = "{∅}"
        else:
            body = " ".join(format_simplex(f) for f in sorted(self.facets, key=simplex_key))
        return f"Complex({body}; vertices={sorted(self.vertices)})"

    def relabel(self, mapping: dict[int, int]) -> "Complex":
        return Complex(
            [frozenset(mapping[v] for v in f) for f in self.facets],
            [mapping[v] for v in self.vertices],
        )


def faces(K: Complex, d: int) -> frozenset:
    return K.faces(d)


def is_face(K: Complex, s: AbstractSet[int]) -> bool:
    return K.is_face(s)


def f_vector(K: Complex) -> tuple[int, ...]:
    return K.f_vector()


def _require_face(K: Complex, s: frozenset) -> None:
    if not K.is_face(s):
        raise ComplexError(f"not-a-face: {format_simplex(s)}")


def link(K: Complex, s: AbstractSet[int]) -> Complex:
    """``link_K σ = {τ ∈ K : σ ∪ τ ∈ K, σ ∩ τ = ∅}`` on the vertex set ``V ∖ σ``."""
    s = frozenset(s)
    _require_face(K, s)
    return Complex([f - s for f in K.facets if s <= f], K.vertices - s)


def star(K: Complex, s: AbstractSet[int]) -> Complex:
    """Closed star ``{τ ∈ K : σ ∪ τ ∈ K}`` on the full vertex set."""
    s = frozenset(s)
    _require_face(K, s)
    return Complex([f for f in K.facets if s <= f], K.vertices)


def int_star(K: Complex, s: AbstractSet[int]) -> frozenset:
    """Open star: the faces containing ``σ``. Not a complex, so a raw face set."""
    s = frozenset(s)
    _require_face(K, s)
    return frozenset(t for t in star(K, s).faces() if s <= t)


def boundary_star(K: Complex, s: AbstractSet[int]) -> Complex:
    """``∂star_K σ = star_K σ ∖ Intstar_K σ``, i.e. ``∂σ * link_K σ``."""
    s = frozenset(s)
    _require_face(K, s)
    # for σ = ∅ there are no generators: ∂∅ is void, hence so is the result
    return Complex([f - {v} for f in K.facets if s <= f for v in s], K.vertices)


def join_complex(K1: Complex, K2: Complex) -> Complex:
    """Simplicial join over disjoint vertex sets."""
    if K1.vertices & K2.vertices:
        raise ComplexError(
            f"join needs disjoint vertex sets; shared {sorted(K1.vertices & K2.vertices)}"
        )
    return Complex(
        [a | b for a in K1.facets for b in K2.facets], K1.vertices | K2.vertices
    )


def full_subcomplex(K: Complex, I: Iterable[int]) -> Complex:
    """``K|_I``: every face of ``K`` contained in ``I``, on vertex set ``I``."""
    I = frozenset(I)
    if not I <= K.vertices:
        raise ComplexError(f"labels {sorted(I - K.vertices)} are not vertices of the complex")
    return Complex([f & I for f in K.facets], I)


def is_subcomplex(K: Complex, L: Complex) -> bool:
    if K.is_void:
        return True
    return all(L.is_face(f) for f in K.facets)


def is_full_subcomplex(K: Complex, L: Complex, I: Iterable[int]) -> bool:
    I = frozenset(I)
    if not I <= L.vertices:
        return False
    return full_subcomplex(L, I) == K
