"""Hochster decompositions of the (co)homology of real and complex
moment-angle complexes, plus a direct cubical cell model of the real one
used as an independent oracle.

Summands are indexed by vertex subsets ``I``: the real flavour places
``H̃^k(L|_I)`` in degree ``k + 1``, the complex flavour in ``k + |I| + 1``.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .complement import missing_faces
from .complex import Complex, ComplexError, as_simplex, full_subcomplex
from .homology import (
    ZERO,
    AbelianGroup,
    HomologyProfile,
    IntegerMatrix,
    _homology_from_chain,
    dualize,
    reduced_cohomology,
    smith_normal_form,
)

DEFAULT_FULL_CAP = 22
DEFAULT_ORACLE_CAP = 14
FLAVORS = ("real", "complex")


class CapExceeded(ComplexError):
    pass


def full_cap() -> int:
    return int(os.environ.get("MOMANGLE_HOCHSTER_CAP", DEFAULT_FULL_CAP))


def oracle_cap() -> int:
    return int(os.environ.get("MOMANGLE_ORACLE_CAP", DEFAULT_ORACLE_CAP))


def degree_shift(flavor: str, size: int) -> int:
    if flavor == "real":
        return 1
    if flavor == "complex":
        return size + 1
    raise ValueError(f"unknown flavor {flavor!r}; expected 'real' or 'complex'")


def hochster_summand(L: Complex, I: Iterable[int], flavor: str) -> HomologyProfile:
    """The contribution of ``I``: reduced cohomology of ``L|_I``, shifted."""
    I = as_simplex(I)
    return reduced_cohomology(full_subcomplex(L, I)).shift(degree_shift(flavor, len(I)))


@dataclass
class HochsterReport:
    flavor: str
    mode: str
    per_subset: dict[tuple[tuple[int, ...], int], AbelianGroup] = field(default_factory=dict)
    totals: HomologyProfile = field(default_factory=HomologyProfile)
    subsets_evaluated: int = 0
    degree_window: tuple[int, int] | None = None

    def subset_summands(self, I: Iterable[int]) -> HomologyProfile:
        key = tuple(sorted(I))
        return HomologyProfile({d: g for (s, d), g in self.per_subset.items() if s == key})


def ordered_subsets(vertices: Iterable[int]) -> list[tuple[int, ...]]:
    """All subsets, by size and then lexicographically."""
    vs = sorted(vertices)
    return [c for k in range(len(vs) + 1) for c in combinations(vs, k)]


def _restriction_key(L: Complex, I: tuple[int, ...]) -> tuple:
    relabel = {v: n for n, v in enumerate(I, start=1)}
    mf = missing_faces(full_subcomplex(L, I))
    return (len(I), tuple(sorted(tuple(sorted(relabel[v] for v in m)) for m in mf.members)))


def _evaluate(args) -> list[tuple[tuple[int, ...], dict[int, AbelianGroup]]]:
    L, chunk, flavor, memoize = args
    cache: dict[tuple, HomologyProfile] = {}
    out = []
    for I in chunk:
        if memoize:
            key = _restriction_key(L, I)
            coh = cache.get(key)
            if coh is None:
                coh = cache[key] = reduced_cohomology(full_subcomplex(L, I))
        else:
            coh = reduced_cohomology(full_subcomplex(L, I))
        shift = degree_shift(flavor, len(I))
        out.append((I, {d + shift: g for d, g in coh.groups.items()}))
    return out


def hochster(
    L: Complex,
    flavor: str,
    subsets: Iterable[Iterable[int]] | None = None,
    degrees: tuple[int, int] | None = None,
    jobs: int = 1,
    cap: int | None = None,
    memoize: bool = False,
) -> HochsterReport:
    """Evaluate the Hochster sum over all subsets, a given list, or a degree window."""
    degree_shift(flavor, 0)
    if subsets is not None:
        mode = "subsets"
        chosen = []
        for I in subsets:
            I = as_simplex(I)
            if not I <= L.vertices:
                raise ComplexError(f"subset {sorted(I)} is not inside the vertex set")
            chosen.append(tuple(sorted(I)))
        chosen = sorted(set(chosen), key=lambda t: (len(t), t))
    else:
        mode = "full" if degrees is None else "degree-window"
        limit = full_cap() if cap is None else cap
        if len(L.vertices) > limit:
            raise CapExceeded(
                f"{len(L.vertices)} vertices exceeds the full-enumeration cap of {limit}; "
                "use subsets mode or raise MOMANGLE_HOCHSTER_CAP"
            )
        chosen = ordered_subsets(L.vertices)

    jobs = max(1, int(jobs))
    if jobs == 1 or len(chosen) < 2:
        results = _evaluate((L, chosen, flavor, memoize))
    else:
        size = max(1, len(chosen) // (jobs * 4))
        chunks = [chosen[i:i + size] for i in range(0, len(chosen), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for part in pool.map(_evaluate, [(L, c, flavor, memoize) for c in chunks]) for r in part]

    report = HochsterReport(flavor=flavor, mode=mode, degree_window=degrees)
    report.subsets_evaluated = len(results)
    totals: dict[int, AbelianGroup] = {}
    for I, groups in sorted(results, key=lambda r: (len(r[0]), r[0])):
        for d, g in sorted(groups.items()):
            if degrees is not None and not degrees[0] <= d <= degrees[1]:
                continue
            report.per_subset[(I, d)] = g
            totals[d] = totals.get(d, ZERO) + g
    report.totals = HomologyProfile(totals)
    return report


def hochster_real(L: Complex, **kwargs) -> HochsterReport:
    return hochster(L, "real", **kwargs)


def hochster_complex(L: Complex, **kwargs) -> HochsterReport:
    return hochster(L, "complex", **kwargs)


# -- cubical oracle ------------------------------------------------------------


def _bits(vs: Sequence[int], index: dict[int, int]) -> int:
    b = 0
    for v in vs:
        b |= 1 << index[v]
    return b


def cubical_cells(L: Complex) -> dict[int, list[tuple[int, int]]]:
    """Cells ``(σ, ε)`` of the real moment-angle complex, by dimension.

    A cell is encoded as two bitmasks over the sorted vertex list: the
    interval coordinates ``σ`` and the coordinates outside ``σ`` sitting at
    endpoint 1 (the rest sit at endpoint 0).
    """
    verts = sorted(L.vertices)
    index = {v: n for n, v in enumerate(verts)}
    full = (1 << len(verts)) - 1
    cells: dict[int, list[tuple[int, int]]] = {}
    for face in L.iter_faces():
        s = _bits(face, index)
        free = full & ~s
        # enumerate every submask of the free coordinates
        sub = free
        while True:
            cells.setdefault(len(face), []).append((s, sub))
            if sub == 0:
                break
            sub = (sub - 1) & free
    for d in cells:
        cells[d].sort()
    return cells


def cubical_boundary(cells: dict[int, list[tuple[int, int]]], d: int) -> IntegerMatrix:
    """``∂_d``: collapsing the j-th interval coordinate to its two ends, sign ``(-1)^j``."""
    src = cells.get(d, [])
    dst = cells.get(d - 1, [])
    index = {c: n for n, c in enumerate(dst)}
    entries = {}
    for col, (s, e) in enumerate(src):
        j = 0
        bit = 1
        rest = s
        while rest:
            if rest & bit:
                sign = -1 if j % 2 else 1
                face = s & ~bit
                entries[(index[(face, e | bit)], col)] = sign
                entries[(index[(face, e)], col)] = -sign
                rest &= ~bit
                j += 1
            bit <<= 1
    return IntegerMatrix(len(dst), len(src), entries)


def cubical_oracle_rz(L: Complex, cap: int | None = None) -> HomologyProfile:
    """Unreduced integral homology of the real moment-angle complex, cell by cell."""
    limit = oracle_cap() if cap is None else cap
    if len(L.vertices) > limit:
        raise CapExceeded(
            f"{len(L.vertices)} vertices exceeds the cubical oracle cap of {limit} "
            "(raise MOMANGLE_ORACLE_CAP)"
        )
    if L.is_void:
        return HomologyProfile()
    cells = cubical_cells(L)
    dims = {d: len(c) for d, c in cells.items()}
    snf = {d: smith_normal_form(cubical_boundary(cells, d)) for d in dims if d >= 1}
    return _homology_from_chain(dims, snf)


def oracle_cohomology(L: Complex, cap: int | None = None) -> HomologyProfile:
    """Oracle homology turned into cohomology, comparable with Hochster totals."""
    return dualize(cubical_oracle_rz(L, cap))
