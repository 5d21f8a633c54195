"""Built-in complexes: the worked examples and a few standard families."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .complement import Complement, complex_from_complement
from .complex import Complex, ComplexError, join_complex
from .subdivision import stellar_subdivide

MOORE_MISSING_FACES = [
    (1, 2, 3), (1, 2, 6), (1, 2, 8), (1, 3, 4),
    (1, 4, 5), (1, 4, 6), (1, 4, 7), (1, 5, 6), (1, 7, 8),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (2, 4, 7), (2, 4, 8), (2, 6, 7),
    (3, 4, 6), (3, 4, 8), (3, 5, 6),
    (3, 7), (5, 8), (5, 7), (6, 8),
]

# facets of the recovered mod-3 Moore complex, frozen after first derivation
MOORE_FACETS = [
    (1, 2, 4), (1, 2, 5), (1, 2, 7), (1, 3, 5), (1, 3, 6), (1, 3, 8),
    (1, 4, 8), (1, 6, 7), (2, 3, 4), (2, 3, 6), (2, 3, 8), (2, 5, 6),
    (2, 7, 8), (3, 4, 5), (4, 5, 6), (4, 6, 7), (4, 7, 8),
]

L0_MISSING_FACES = [(1, 2, 3, 4), (5, 7), (6, 8)]

EXAMPLE1_FACETS = [(1, 3), (2, 3), (1, 2, 4), (1, 2, 5), (1, 4, 5), (2, 4, 5)]
EXAMPLE1_COMPLEMENT = [(1, 2, 4, 5), (1, 2, 3), (3, 4), (3, 5), (1, 3, 4), (3, 4)]

# the missing faces subdivided in the order they are listed in the worked example
LISTED_MOORE_ORDER = MOORE_MISSING_FACES


@dataclass(frozen=True)
class NamedComplex:
    name: str
    complex: Complex
    provenance: str


def moore_mod3() -> Complex:
    """8-vertex triangulation of the mod 3 Moore space, from its 22 missing faces."""
    K = complex_from_complement(Complement(MOORE_MISSING_FACES, range(1, 9)), range(1, 9))
    if len(K.faces(2)) != 17 or K.dim != 2:
        raise AssertionError(
            f"recovered Moore complex has {len(K.faces(2))} triangles, expected 17"
        )
    return K


def l_zero() -> Complex:
    """``∂(1,2,3,4) * ∂(5,7) * ∂(6,8)``, a 4-sphere on 8 vertices."""
    return join_complex(
        join_complex(simplex_boundary(3), Complex([[5], [7]])), Complex([[6], [8]])
    )


def l_two(first=(1, 2, 3), second=(1, 2, 6)) -> Complex:
    """``L_0`` subdivided at ``first`` (new vertex 9), then at ``second`` (vertex 10)."""
    return stellar_subdivide(stellar_subdivide(l_zero(), first, 9), second, 10)


def example1() -> Complex:
    return Complex(EXAMPLE1_FACETS, range(1, 6))


def example1_complement() -> Complement:
    return Complement(EXAMPLE1_COMPLEMENT, range(1, 6))


def simplex_boundary(n: int) -> Complex:
    """``∂Δ^n`` on ``[n+1]``."""
    if n < 1:
        raise ComplexError("simplex_boundary needs n >= 1")
    verts = range(1, n + 2)
    return Complex([[u for u in verts if u != v] for v in verts], verts)


def polygon(m: int) -> Complex:
    if m < 3:
        raise ComplexError("polygon needs m >= 3")
    return Complex([[i, i % m + 1] for i in range(1, m + 1)], range(1, m + 1))


def disjoint_points(m: int) -> Complex:
    if m < 1:
        raise ComplexError("disjoint_points needs m >= 1")
    return Complex([[i] for i in range(1, m + 1)], range(1, m + 1))


def cross_polytope(n: int) -> Complex:
    """Boundary of the n-dimensional cross-polytope; antipodal pairs ``(2i-1, 2i)``."""
    if n < 1:
        raise ComplexError("cross_polytope needs n >= 1")
    return complex_from_complement(
        Complement([(2 * i - 1, 2 * i) for i in range(1, n + 1)], range(1, 2 * n + 1)),
        range(1, 2 * n + 1),
    )


def suspension(K: Complex) -> Complex:
    """``K * S^0`` with the two apexes labelled after the largest vertex."""
    top = max(K.vertices, default=0)
    return join_complex(K, Complex([[top + 1], [top + 2]]))


_FIXED: dict[str, tuple[Callable[[], Complex], str]] = {
    "moore-mod3": (moore_mod3, "mod 3 Moore space on 8 vertices, from its 22 missing faces"),
    "l0": (l_zero, "double suspension of the tetrahedron boundary, missing faces (1,2,3,4),(5,7),(6,8)"),
    "l2": (l_two, "l0 subdivided at (1,2,3) then (1,2,6)"),
    "l2-prime": (lambda: l_two((1, 2, 6), (1, 2, 3)), "l0 subdivided at (1,2,6) then (1,2,3)"),
    "example1": (example1, "5-vertex complex of the missing-face worked example"),
}

_FAMILIES: dict[str, Callable[[int], Complex]] = {
    "simplex-boundary": simplex_boundary,
    "polygon": polygon,
    "cross-polytope": cross_polytope,
    "points": disjoint_points,
}


def builtin_names() -> list[str]:
    return sorted(_FIXED) + [f"{k}:N" for k in sorted(_FAMILIES)]


def get_builtin(name: str) -> NamedComplex:
    """Look up ``moore-mod3``, ``l0``, ``example1`` or a family like ``polygon:5``."""
    if name in _FIXED:
        make, prov = _FIXED[name]
        return NamedComplex(name, make(), prov)
    fam, _, arg = name.partition(":")
    if fam in _FAMILIES and arg:
        try:
            n = int(arg)
        except ValueError:
            raise KeyError(name) from None
        return NamedComplex(name, _FAMILIES[fam](n), f"standard family {fam}({n})")
    raise KeyError(name)
