"""End-to-end reproduction of the mod-3 torsion example."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .complement import missing_faces, reduce
from .complex import full_subcomplex, is_full_subcomplex, is_subcomplex
from .corpus import LISTED_MOORE_ORDER, l_two, l_zero, moore_mod3
from .hochster import hochster_summand
from .homology import AbelianGroup, HomologyProfile, reduced_cohomology
from .subdivision import construct_full_embedding, stellar_complement
from .verify import dimension_report, iso_search, non_isomorphism_certificate, verify_sphere

Z3 = AbelianGroup(0, (3,))


@dataclass
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def _as_set(members):
    return {frozenset(m) for m in members}


def moore_torsion() -> list[Check]:
    t0 = time.perf_counter()
    checks: list[Check] = []

    def add(name, ok, detail):
        checks.append(Check(name, bool(ok), detail))

    K = moore_mod3()
    L0 = l_zero()
    add("moore complex", K.f_vector() == (8, 24, 17) and len(missing_faces(K)) == 22,
        f"f-vector {K.f_vector()}, {len(missing_faces(K))} missing faces")
    coh = reduced_cohomology(K)
    add("moore cohomology", coh == HomologyProfile({2: Z3}), f"reduced cohomology {coh}")
    add("K inside L0, not full", is_subcomplex(K, L0) and not is_full_subcomplex(K, L0, K.vertices),
        "subcomplex of L0, not a full one")

    P0 = missing_faces(L0)
    M1 = reduce(stellar_complement(P0, (1, 2, 3), 9))
    M2 = reduce(stellar_complement(M1, (1, 2, 6), 10))
    M2p = reduce(stellar_complement(reduce(stellar_complement(P0, (1, 2, 6), 9)), (1, 2, 3), 10))
    add("M1", M1.as_set() == _as_set([(1, 2, 3), (5, 7), (6, 8), (4, 9)]), f"{len(M1)} members")
    add("M2", M2.as_set() == _as_set([(1, 2, 3), (1, 2, 6), (5, 7), (6, 8), (4, 9), (3, 10), (8, 10)]),
        f"{len(M2)} members")
    add("M2'", M2p.as_set() == _as_set([(1, 2, 3), (1, 2, 6), (5, 7), (6, 8), (3, 4, 9), (8, 9), (4, 10), (6, 10)]),
        f"{len(M2p)} members")
    L2, L2p = l_two(), l_two((1, 2, 6), (1, 2, 3))
    cert = non_isomorphism_certificate(L2, L2p)
    add("order matters", iso_search(L2, L2p) is None and cert == "7 vs 8 missing faces",
        f"L2 vs L2': not isomorphic ({cert})")

    trace = construct_full_embedding(K, L0, LISTED_MOORE_ORDER, skip_nonfaces=True)
    L = trace.final
    add("subdivisions", len(trace.steps) == 20, f"{len(trace.steps)} steps, skipped {len(trace.skipped)}")
    add("vertices", len(L.vertices) == 28, f"{len(L.vertices)} vertices")
    sphere = verify_sphere(L)
    add("sphere", sphere.passed and sphere.dimension == 4, f"{sphere.verdict}, dimension {sphere.dimension}")
    add("full subcomplex", is_full_subcomplex(K, L, range(1, 9)) and full_subcomplex(L, range(1, 9)) == K,
        "K = L|_[8]")
    add("complement bookkeeping", trace.final_complement.as_set() == missing_faces(L).as_set(),
        f"{len(trace.final_complement)} missing faces")
    real = hochster_summand(L, range(1, 9), "real")
    cplx = hochster_summand(L, range(1, 9), "complex")
    add("real summand", real == HomologyProfile({3: Z3}), f"I=[8] contributes {real}")
    add("complex summand", cplx == HomologyProfile({11: Z3}), f"I=[8] contributes {cplx}")
    dims = dimension_report(L)
    add("dimensions", dims == (4, 5, 33), f"sphere {dims[0]}, real manifold {dims[1]}, complex manifold {dims[2]}")
    elapsed = time.perf_counter() - t0
    add("runtime", elapsed < 60, f"{elapsed:.2f} s")
    return checks
