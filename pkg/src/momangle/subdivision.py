"""Stellar subdivision on faces and on complements, and the full-subcomplex
embedding pipeline that subdivides an ambient sphere at every missing face
of a subcomplex.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import AbstractSet, Iterable, Sequence

from .complement import (
    Complement,
    complement_join,
    complement_minus,
    is_complement_of,
    missing_faces,
    reduce,
)
from .complex import (
    Complex,
    ComplexError,
    as_simplex,
    format_simplex,
    full_subcomplex,
    is_full_subcomplex,
    is_subcomplex,
    simplex_key,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubdivisionStep:
    target: frozenset
    new_vertex: int
    was_ghost: bool = False

    def __str__(self) -> str:
        kind = "ghost" if self.was_ghost else "subdivide"
        return f"{kind} {format_simplex(self.target)} -> {self.new_vertex}"


@dataclass
class ConstructionTrace:
    initial: Complex
    steps: list[SubdivisionStep] = field(default_factory=list)
    final: Complex | None = None
    final_complement: Complement | None = None
    skipped: list[frozenset] = field(default_factory=list)

    @property
    def added_vertices(self) -> list[int]:
        return [s.new_vertex for s in self.steps]


def next_label(K: Complex) -> int:
    return max(K.vertices, default=0) + 1


def stellar_subdivide(K: Complex, sigma: AbstractSet[int], v: int | None = None) -> Complex:
    """``ss_σ K``: replace the open star of ``σ`` by the cone from ``v`` over its boundary.

    When ``σ`` is not a face, ``K`` comes back unchanged apart from ``v``
    joining the vertex set as a ghost.
    """
    sigma = as_simplex(sigma)
    if not sigma:
        raise ComplexError("cannot subdivide at the empty simplex")
    if v is None:
        v = next_label(K)
    if v in K.vertices:
        raise ComplexError(f"new vertex {v} is already a vertex")
    verts = K.vertices | {v}
    if not K.is_face(sigma):
        return Complex(K.facets, verts)
    kept = [F for F in K.facets if not sigma <= F]
    # cone over ∂σ * link σ
    coned = [(F - {s}) | {v} for F in K.facets if sigma <= F for s in sigma]
    return Complex(kept + coned, verts)


def stellar_complement(P: Complement, sigma: AbstractSet[int], v: int) -> Complement:
    """``{P, σ, (P − σ) * (v)}``: a complement of the subdivided complex."""
    sigma = as_simplex(sigma)
    if v in P.vertices:
        raise ComplexError(f"new vertex {v} is already a vertex")
    apex = Complement([[v]], [v])
    coned = complement_join(complement_minus(P, sigma), apex)
    return Complement(
        list(P.members) + [sigma] + list(coned.members), P.vertices | {v}
    )


def cross_validate_step(K: Complex, P: Complement, sigma: AbstractSet[int], v: int) -> bool:
    """Compare the complement-level and face-level subdivisions of one step."""
    if not is_complement_of(P, K):
        raise ComplexError("the given complement does not describe the complex")
    lhs = reduce(stellar_complement(P, sigma, v)).as_set()
    rhs = missing_faces(stellar_subdivide(K, sigma, v)).as_set()
    return lhs == rhs


def construct_full_embedding(
    K: Complex,
    L0: Complex,
    order: Sequence[Iterable[int]] | None = None,
    skip_nonfaces: bool = True,
) -> ConstructionTrace:
    """Subdivide ``L0`` at each missing face of ``K`` so that ``K`` becomes full.

    New vertices are numbered ``max + 1`` in turn. With ``skip_nonfaces``
    the missing faces of ``K`` that are already non-faces of ``L0`` are
    passed over; otherwise each of them adds a ghost vertex.
    """
    if K.vertices != L0.vertices:
        raise ComplexError("subcomplex and ambient complex must share a vertex set")
    if not is_subcomplex(K, L0):
        raise ComplexError("K is not a subcomplex of L0")
    mf = missing_faces(K)
    targets = mf.as_set()
    if order is None:
        seq = sorted(targets, key=simplex_key)
    else:
        seq = [as_simplex(s) for s in order]
        if len(seq) != len(targets) or set(seq) != targets:
            raise ComplexError("order must be a permutation of the missing faces of K")

    trace = ConstructionTrace(initial=L0)
    L = L0
    P = missing_faces(L0)
    for sigma in seq:
        in_l0 = L0.is_face(sigma)
        now = L.is_face(sigma)
        # earlier targets never lie inside a later one, so face status is inherited from L0
        if now != in_l0:
            raise AssertionError(
                f"missing face {format_simplex(sigma)} changed face status before its step"
            )
        if not now and skip_nonfaces:
            trace.skipped.append(sigma)
            continue
        v = next_label(L)
        L = stellar_subdivide(L, sigma, v)
        P = reduce(stellar_complement(P, sigma, v))
        trace.steps.append(SubdivisionStep(sigma, v, was_ghost=not now))
        log.debug("step %d: %s", len(trace.steps), trace.steps[-1])
    trace.final = L
    trace.final_complement = P
    if full_subcomplex(L, K.vertices) != K:
        raise AssertionError("construction finished but K is not a full subcomplex")
    return trace


def verify_embedding(trace: ConstructionTrace, K: Complex) -> bool:
    return trace.final is not None and is_full_subcomplex(K, trace.final, K.vertices)
