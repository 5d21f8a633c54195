"""Certificates: simplicial-sphere necessary conditions, fullness, and
combinatorial isomorphism through missing-face sets.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .complement import missing_faces
from .complex import Complex, ComplexError, format_simplex, is_full_subcomplex, link
from .homology import AbelianGroup, HomologyProfile, reduced_homology

DEFAULT_LINK_DEPTH = 2


def sphere_profile(d: int) -> HomologyProfile:
    return HomologyProfile({d: AbelianGroup(1)})


@dataclass
class SphereCertificate:
    dimension: int
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def verdict(self) -> str:
        if self.passed:
            return "pass"
        name = next(k for k, ok in self.checks.items() if not ok)
        return f"fail ({name}: {self.witnesses[name]})"

    def lines(self) -> list[str]:
        out = [f"dimension {self.dimension}"]
        for name, ok in self.checks.items():
            extra = f"  [{self.witnesses[name]}]" if not ok else ""
            out.append(f"{name}: {'ok' if ok else 'FAIL'}{extra}")
        out.append(f"verdict: {self.verdict}")
        return out


def verify_sphere(K: Complex, link_depth: int = DEFAULT_LINK_DEPTH) -> SphereCertificate:
    """Run purity, pseudomanifold, connectivity, homology and link checks.

    Links are checked for every face with at most ``link_depth`` vertices.
    Passing is necessary, not sufficient, for ``K`` to be a sphere.
    """
    if K.is_void or K.is_empty_simplex:
        raise ComplexError("sphere verification needs a complex with at least one vertex")
    d = K.dim
    cert = SphereCertificate(dimension=d)

    impure = sorted((f for f in K.facets if len(f) != d + 1), key=lambda f: (len(f), sorted(f)))
    cert.checks["pure"] = not impure
    if impure:
        f = impure[0]
        cert.witnesses["pure"] = f"facet {format_simplex(f)} has dimension {len(f) - 1}, expected {d}"

    ridges: dict[frozenset, int] = defaultdict(int)
    for f in K.facets:
        for v in f:
            ridges[f - {v}] += 1
    bad = sorted((r for r, n in ridges.items() if n != 2), key=lambda r: sorted(r))
    cert.checks["pseudomanifold"] = not bad
    if bad:
        r = bad[0]
        cert.witnesses["pseudomanifold"] = f"ridge {format_simplex(r)} lies in {ridges[r]} facets"

    comp = _facet_components(K)
    cert.checks["connected"] = comp == 1 or d == 0
    if not cert.checks["connected"]:
        cert.witnesses["connected"] = f"facet-ridge graph has {comp} components"

    h = reduced_homology(K)
    cert.checks["homology"] = h == sphere_profile(d)
    if not cert.checks["homology"]:
        cert.witnesses["homology"] = f"reduced homology is {h}"

    ok = True
    for k in range(1, min(link_depth, d + 1) + 1):
        for face in sorted(K.faces(k - 1), key=lambda s: sorted(s)):
            lk = reduced_homology(link(K, face))
            if lk != sphere_profile(d - k):
                ok = False
                cert.witnesses["links"] = f"link of {format_simplex(face)} has homology {lk}"
                break
        if not ok:
            break
    cert.checks["links"] = ok
    return cert


def _facet_components(K: Complex) -> int:
    facets = list(K.facets)
    parent = list(range(len(facets)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_ridge: dict[frozenset, int] = {}
    for n, f in enumerate(facets):
        for v in f:
            r = f - {v}
            if r in by_ridge:
                parent[find(n)] = find(by_ridge[r])
            else:
                by_ridge[r] = n
    return len({find(n) for n in range(len(facets))})


def dimension_report(L: Complex) -> tuple[int, int, int]:
    """``(sphere dim, dim of the real moment-angle manifold, dim of the complex one)``."""
    cert = verify_sphere(L)
    if not cert.passed:
        raise ComplexError(f"not a sphere: {cert.verdict}")
    d = cert.dimension
    return d, d + 1, len(L.vertices) + d + 1


def verify_full(K: Complex, L: Complex, I) -> bool:
    return is_full_subcomplex(K, L, I)


# -- isomorphism ---------------------------------------------------------------


def non_isomorphism_certificate(K1: Complex, K2: Complex) -> str | None:
    """A cheap reason the two complexes cannot be isomorphic, if one exists."""
    if len(K1.vertices) != len(K2.vertices):
        return f"{len(K1.vertices)} vs {len(K2.vertices)} vertices"
    m1, m2 = missing_faces(K1), missing_faces(K2)
    if len(m1) != len(m2):
        return f"{len(m1)} vs {len(m2)} missing faces"
    s1 = sorted(len(m) for m in m1)
    s2 = sorted(len(m) for m in m2)
    if s1 != s2:
        return f"missing-face sizes {s1} vs {s2}"
    if K1.is_void != K2.is_void:
        return "void vs non-void"
    if not K1.is_void and K1.f_vector() != K2.f_vector():
        return f"f-vectors {K1.f_vector()} vs {K2.f_vector()}"
    return None


def _signature(K: Complex, mf) -> dict[int, tuple]:
    sig = {}
    for v in K.vertices:
        sizes = tuple(sorted(len(m) for m in mf if v in m))
        deg = sum(1 for f in K.facets if v in f)
        sig[v] = (sizes, deg)
    return sig


def iso_search(K1: Complex, K2: Complex) -> dict[int, int] | None:
    """A vertex bijection carrying the missing faces of ``K1`` onto those of ``K2``."""
    if non_isomorphism_certificate(K1, K2) is not None:
        return None
    m1 = missing_faces(K1).as_set()
    m2 = missing_faces(K2).as_set()
    sig1, sig2 = _signature(K1, m1), _signature(K2, m2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    # most constrained vertices first
    classes = Counter(sig2.values())
    order = sorted(K1.vertices, key=lambda v: (classes[sig1[v]], -len(sig1[v][0]), v))
    if (frozenset() in m1) != (frozenset() in m2):
        return None
    by_vertex: dict[int, list[frozenset]] = defaultdict(list)
    for m in m1:
        if not m:
            continue
        by_vertex[max(m, key=order.index)].append(m)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in sorted(K2.vertices - used):
            if sig2[w] != sig1[v]:
                continue
            mapping[v] = w
            if all(frozenset(mapping[u] for u in m) in m2 for m in by_vertex[v]):
                used.add(w)
                if extend(k + 1):
                    return True
                used.discard(w)
            del mapping[v]
        return False

    if extend(0):
        return dict(sorted(mapping.items()))
    return None


def brute_force_isomorphic(K1: Complex, K2: Complex) -> bool:
    """Exhaustive check over all bijections; only for tiny vertex sets."""
    from itertools import permutations

    if len(K1.vertices) != len(K2.vertices):
        return False
    v1 = sorted(K1.vertices)
    target = K2.facets
    for perm in permutations(sorted(K2.vertices)):
        phi = dict(zip(v1, perm))
        if frozenset(frozenset(phi[u] for u in f) for f in K1.facets) == target:
            return True
    return False
