"""Exact integral (co)homology through Smith normal form.

Boundary matrices are kept sparse with Python integers, so no entry can
overflow however much elimination grows it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .complex import Complex, ComplexError, simplex_key


class AbelianGroup(NamedTuple):
    """``Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`` with ``t_1 | t_2 | ... | t_k``."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    @classmethod
    def make(cls, rank: int = 0, torsion: Iterable[int] = ()) -> "AbelianGroup":
        return cls(rank, tuple(invariant_factors(torsion)))

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __add__(self, other):  # direct sum
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return AbelianGroup.make(self.rank + other.rank, self.torsion + other.torsion)

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


ZERO = AbelianGroup()


def invariant_factors(values: Iterable[int]) -> list[int]:
    """Invariant-factor form of ``⊕ Z/d``; units are dropped, zeros rejected."""
    ds = [abs(int(v)) for v in values]
    if any(d == 0 for d in ds):
        raise ValueError("torsion coefficients must be nonzero")
    ds = sorted(d for d in ds if d != 1)
    n = len(ds)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = ds[i], ds[j]
            g = math.gcd(a, b)
            ds[i], ds[j] = g, a // g * b
    return [d for d in ds if d != 1]


@dataclass(frozen=True)
class HomologyProfile:
    """Groups by degree; absent degrees are zero."""

    groups: Mapping[int, AbelianGroup] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {d: g for d, g in sorted(self.groups.items()) if not g.is_zero}
        object.__setattr__(self, "groups", cleaned)

    def __getitem__(self, degree: int) -> AbelianGroup:
        return self.groups.get(degree, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return dict(self.groups) == dict(other.groups)

    def __hash__(self) -> int:
        return hash(tuple(self.groups.items()))

    def betti(self, degree: int) -> int:
        return self[degree].rank

    def torsion(self, degree: int) -> tuple[int, ...]:
        return self[degree].torsion

    @property
    def degrees(self) -> list[int]:
        return list(self.groups)

    @property
    def is_torsion_free(self) -> bool:
        return all(not g.torsion for g in self.groups.values())

    def shift(self, by: int) -> "HomologyProfile":
        return HomologyProfile({d + by: g for d, g in self.groups.items()})

    def __add__(self, other: "HomologyProfile") -> "HomologyProfile":
        out = dict(self.groups)
        for d, g in other.groups.items():
            out[d] = out.get(d, ZERO) + g
        return HomologyProfile(out)

    def __str__(self) -> str:
        if not self.groups:
            return "0"
        return ", ".join(f"{d}: {g}" for d, g in self.groups.items())

    def to_dict(self) -> dict:
        return {str(d): {"rank": g.rank, "torsion": list(g.torsion)} for d, g in self.groups.items()}


def dualize(homology: HomologyProfile) -> HomologyProfile:
    """Cohomology from homology: ``H^n = free(H_n) ⊕ tors(H_{n-1})``."""
    out: dict[int, AbelianGroup] = {}
    for d, g in homology.groups.items():
        if g.rank:
            out[d] = out.get(d, ZERO) + AbelianGroup(g.rank)
        if g.torsion:
            out[d + 1] = out.get(d + 1, ZERO) + AbelianGroup.make(0, g.torsion)
    return HomologyProfile(out)


# -- matrices ---------------------------------------------------------------


@dataclass
class IntegerMatrix:
    """Sparse integer matrix: ``entries[(i, j)]`` for the nonzero cells."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]]) -> "IntegerMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        ent = {(i, j): int(v) for i, r in enumerate(data) for j, v in enumerate(r) if v}
        return cls(rows, cols, ent)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, dict[int, int]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, {})[j] = v
        out: dict[tuple[int, int], int] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, {}).items():
                out[(i, j)] = out.get((i, j), 0) + a * b
        return IntegerMatrix(self.rows, other.cols, {p: v for p, v in out.items() if v})

    def is_zero(self) -> bool:
        return not any(self.entries.values())


def smith_normal_form(M: IntegerMatrix) -> tuple[int, list[int]]:
    """Rank and invariant factors ``d_1 | d_2 | ... | d_r`` of ``M``.

    Unimodular row/column elimination; each pivot is a smallest-magnitude
    entry, preferring sparse rows. Units are pivoted in place without
    touching other columns' structure beyond the eliminated rows.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in M.entries.items():
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)

    def put(i: int, j: int, v: int) -> None:
        if v:
            rows[i][j] = v
            cols.setdefault(j, set()).add(i)
        else:
            rows[i].pop(j, None)
            s = cols.get(j)
            if s is not None:
                s.discard(i)
                if not s:
                    del cols[j]

    def row_op(target: int, src: int, q: int) -> None:
        # row[target] -= q * row[src]
        rt = rows[target]
        for j, v in list(rows[src].items()):
            put(target, j, rt.get(j, 0) - q * v)

    def col_op(target: int, src: int, q: int) -> None:
        # col[target] -= q * col[src]
        for i in list(cols.get(src, ())):
            put(i, target, rows[i].get(target, 0) - q * rows[i][src])

    def pick(j: int) -> int:
        return min(cols[j], key=lambda i: (abs(rows[i][j]), len(rows[i])))

    diagonal: list[int] = []
    while cols:
        # sparsest column first keeps fill low
        j = min(cols, key=lambda c: len(cols[c]))
        i = pick(j)
        if abs(rows[i][j]) != 1:
            unit = next(
                ((r, c) for c, rs in cols.items() for r in rs if abs(rows[r][c]) == 1), None
            )
            if unit is not None:
                i, j = unit
        while True:
            p = rows[i][j]
            for r in [r for r in cols[j] if r != i]:
                q = _nearest_quotient(rows[r][j], p)
                row_op(r, i, q)
            others = [r for r in cols.get(j, ()) if r != i]
            if others:
                i = pick(j)
                continue
            for c in [c for c in rows[i] if c != j]:
                q = _nearest_quotient(rows[i][c], p)
                col_op(c, j, q)
            rest = [c for c in rows[i] if c != j]
            if rest:
                j = min(rest, key=lambda c: abs(rows[i][c]))
                continue
            break
        diagonal.append(abs(rows[i][j]))
        put(i, j, 0)
        del rows[i]
    rank = len(diagonal)
    factors = invariant_factors(diagonal)
    return rank, [1] * (rank - len(factors)) + factors


def _nearest_quotient(a: int, b: int) -> int:
    q, r = divmod(a, b)
    # r shares the sign of b, so stepping q up shrinks |r| when it exceeds |b|/2
    if 2 * abs(r) > abs(b):
        q += 1
    return q


# -- chain complexes ---------------------------------------------------------


def _ordered_faces(K: Complex, d: int, order=None) -> list[frozenset]:
    fs = list(K.faces(d))
    if order is None:
        fs.sort(key=simplex_key)
    else:
        order(fs)
    return fs


def boundary_matrix(K: Complex, d: int, order=None) -> IntegerMatrix:
    """Matrix of ``∂_d`` from d-faces (columns) to (d-1)-faces (rows).

    ``∂_0`` is the augmentation onto the empty face. Removing the i-th vertex
    of a sorted simplex carries sign ``(-1)^i``. ``order`` may shuffle the
    face lists in place (used to test basis independence).
    """
    if K.is_void:
        raise ComplexError("boundary matrix of the void complex is undefined")
    if d < 0:
        raise ValueError("boundary degree must be >= 0")
    src = _ordered_faces(K, d, order)
    dst = _ordered_faces(K, d - 1, order)
    index = {f: n for n, f in enumerate(dst)}
    entries = {}
    for col, face in enumerate(src):
        verts = sorted(face)
        for pos, v in enumerate(verts):
            entries[(index[face - {v}], col)] = -1 if pos % 2 else 1
    return IntegerMatrix(len(dst), len(src), entries)


def _homology_from_chain(dims: Mapping[int, int], snf: Mapping[int, tuple[int, list[int]]]) -> HomologyProfile:
    # dims[n] = rank of C_n; snf[n] = (rank, factors) of the map C_n -> C_{n-1}
    groups = {}
    for n, cn in dims.items():
        rank_out = snf.get(n, (0, []))[0]
        rank_in, factors_in = snf.get(n + 1, (0, []))
        betti = cn - rank_out - rank_in
        groups[n] = AbelianGroup.make(betti, [f for f in factors_in if f > 1])
    return HomologyProfile(groups)


def reduced_homology(K: Complex, order=None) -> HomologyProfile:
    """Reduced integral homology ``H̃_n`` for ``n >= -1``.

    Void complex: zero everywhere. ``{∅}``: ``H̃_{-1} = Z``.
    """
    if K.is_void:
        return HomologyProfile()
    top = K.dim
    dims = {n: len(K.faces(n)) for n in range(-1, top + 1)}
    snf = {n: smith_normal_form(boundary_matrix(K, n, order)) for n in range(0, top + 1)}
    return _homology_from_chain(dims, snf)


def reduced_cohomology(K: Complex) -> HomologyProfile:
    return dualize(reduced_homology(K))


def euler_characteristic(K: Complex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(K.f_vector()))
