"""Truncated simplicial sets with explicit face/degeneracy tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..errors import InsufficientTruncation
from ..fincat import FinCategory, FunctorData, ValidationReport
from ..reedy import SimplexMor, monotone_maps


@dataclass(frozen=True)
class TruncatedSSet:
    """Levels 0..dim; cells are dense ids per level.

    faces[n][c][i] is the i-th face of cell c at level n (1 <= n <= dim);
    degeneracies[n][c][i] the i-th degeneracy (0 <= n < dim).
    Labels carry construction provenance for reporting and stable sorting.
    """

    dim: int
    cells: tuple[tuple[object, ...], ...]  # per level, cell labels
    faces: tuple[tuple[tuple[int, ...], ...], ...]
    degeneracies: tuple[tuple[tuple[int, ...], ...], ...]
    name: str = "X"

    def n_cells(self, level: int) -> int:
        if not (0 <= level <= self.dim):
            raise InsufficientTruncation(
                f"{self.name} is truncated at {self.dim}, level {level} requested"
            )
        return len(self.cells[level])

    def cell_id(self, level: int, label) -> int:
        """Dense id of a cell label (index built lazily per level)."""
        if not hasattr(self, "_label_index"):
            object.__setattr__(self, "_label_index", {})
        table = self._label_index.get(level)
        if table is None:
            table = {lab: i for i, lab in enumerate(self.cells[level])}
            self._label_index[level] = table
        return table[label]

    def face(self, level: int, cell: int, i: int) -> int:
        return self.faces[level][cell][i]

    def degeneracy(self, level: int, cell: int, i: int) -> int:
        return self.degeneracies[level][cell][i]

    def act(self, psi: SimplexMor, level: int, cell: int) -> int:
        """Contravariant action X(psi): X_level -> X_{psi.m} for psi: [m]->[level].

        Uses the normal form psi = delta_{i_1}...delta_{i_s} sigma_{j_1}...sigma_{j_r}
        (i decreasing, j increasing): faces for the missing indices applied
        largest-first, then degeneracies for the repeat positions smallest-first.
        """
        assert psi.n == level
        lv, cur = level, cell
        missing = sorted(set(range(level + 1)) - set(psi.values), reverse=True)
        for idx in missing:
            cur = self.face(lv, cur, idx)
            lv -= 1
        repeats = [j for j in range(psi.m) if psi.values[j] == psi.values[j + 1]]
        for j in repeats:
            cur = self.degeneracy(lv, cur, j)
            lv += 1
        assert lv == psi.m
        return cur

    def is_degenerate(self, level: int, cell: int) -> bool:
        if level == 0:
            return False
        for i in range(level):
            below = self.face(level, cell, i + 1)
            if self.degeneracy(level - 1, below, i) == cell:
                return True
        return False

    def nondegenerate(self, level: int) -> list[int]:
        return [c for c in range(self.n_cells(level)) if not self.is_degenerate(level, c)]

    def ez_core(self, level: int, cell: int) -> tuple[int, int, SimplexMor]:
        """Eilenberg-Zilber decomposition: (core level, core cell, surjection)
        with X(surjection)(core) == cell and the core non-degenerate."""
        k, c = level, cell
        surj_vals = list(range(level + 1))
        changed = True
        while changed and k > 0:
            changed = False
            for i in range(k):
                below = self.face(k, c, i + 1)
                if self.degeneracy(k - 1, below, i) == c:
                    # c = s_i(below): strip
                    c = below
                    # precompose current surjection with sigma_i at this level
                    surj_vals = [v if v <= i else v - 1 for v in surj_vals]
                    k -= 1
                    changed = True
                    break
        return k, c, SimplexMor(level, k, tuple(surj_vals))


def validate_simplicial(x: TruncatedSSet) -> ValidationReport:
    """Full scan of the simplicial identities on all stored levels."""
    report = ValidationReport(f"simplicial set {x.name}")
    for n in range(2, x.dim + 1):
        for c in range(x.n_cells(n)):
            for j in range(n + 1):
                for i in range(j):
                    lhs = x.face(n - 1, x.face(n, c, j), i)
                    rhs = x.face(n - 1, x.face(n, c, i), j - 1)
                    if lhs != rhs:
                        report.add(f"d{i} d{j} fails at level {n} cell {c}")
    for n in range(0, x.dim - 1):
        for c in range(x.n_cells(n)):
            for j in range(n + 1):
                for i in range(j + 1):
                    lhs = x.degeneracy(n + 1, x.degeneracy(n, c, j), i)
                    rhs = x.degeneracy(n + 1, x.degeneracy(n, c, i), j + 1)
                    if lhs != rhs:
                        report.add(f"s{i} s{j} fails at level {n} cell {c}")
    for n in range(1, x.dim):
        for c in range(x.n_cells(n)):
            for j in range(n):
                sc = x.degeneracy(n, c, j)
                for i in range(n + 2):
                    got = x.face(n + 1, sc, i)
                    if i == j or i == j + 1:
                        if got != c:
                            report.add(f"d{i} s{j} != id at level {n} cell {c}")
                    elif i < j:
                        if got != x.degeneracy(n - 1, x.face(n, c, i), j - 1):
                            report.add(f"d{i} s{j} fails at level {n} cell {c}")
                    else:
                        if got != x.degeneracy(n - 1, x.face(n, c, i - 1), j):
                            report.add(f"d{i} s{j} fails at level {n} cell {c}")
    return report


@dataclass(frozen=True)
class SimplicialMap:
    src: TruncatedSSet
    dst: TruncatedSSet
    mapping: tuple[tuple[int, ...], ...]  # per level
    name: str = "f"

    def __call__(self, level: int, cell: int) -> int:
        return self.mapping[level][cell]

    def validate(self) -> ValidationReport:
        report = ValidationReport(f"simplicial map {self.name}")
        d = min(self.src.dim, self.dst.dim)
        for n in range(1, d + 1):
            for c in range(self.src.n_cells(n)):
                for i in range(n + 1):
                    lhs = self.dst.face(n, self.mapping[n][c], i)
                    rhs = self.mapping[n - 1][self.src.face(n, c, i)]
                    if lhs != rhs:
                        report.add(f"face square fails at level {n} cell {c} d{i}")
        for n in range(0, d):
            for c in range(self.src.n_cells(n)):
                for i in range(n + 1):
                    lhs = self.dst.degeneracy(n, self.mapping[n][c], i)
                    rhs = self.mapping[n + 1][self.src.degeneracy(n, c, i)]
                    if lhs != rhs:
                        report.add(f"degeneracy square fails at level {n} cell {c} s{i}")
        return report

    def is_injective(self) -> bool:
        return all(
            len(set(level_map)) == len(level_map) for level_map in self.mapping
        )

    def is_surjective(self) -> bool:
        return all(
            set(self.mapping[n]) == set(range(self.dst.n_cells(n)))
            for n in range(min(self.src.dim, self.dst.dim) + 1)
        )

    def then(self, other: "SimplicialMap") -> "SimplicialMap":
        d = min(self.src.dim, other.dst.dim, self.dst.dim)
        return SimplicialMap(
            src=self.src,
            dst=other.dst,
            mapping=tuple(
                tuple(other.mapping[n][c] for c in self.mapping[n])
                for n in range(d + 1)
            ),
            name=f"{other.name}∘{self.name}",
        )


def _build_from_label_tables(
    dim: int,
    level_cells: Sequence[Sequence[object]],
    face_fn: Callable[[int, object, int], object],
    degeneracy_fn: Callable[[int, object, int], object],
    name: str,
) -> TruncatedSSet:
    """Assemble tables from label-level face/degeneracy functions."""
    index = [
        {label: i for i, label in enumerate(level)} for level in level_cells
    ]
    faces = [()]
    for n in range(1, dim + 1):
        faces.append(
            tuple(
                tuple(index[n - 1][face_fn(n, label, i)] for i in range(n + 1))
                for label in level_cells[n]
            )
        )
    degeneracies = []
    for n in range(dim):
        degeneracies.append(
            tuple(
                tuple(index[n + 1][degeneracy_fn(n, label, i)] for i in range(n + 1))
                for label in level_cells[n]
            )
        )
    degeneracies.append(())
    return TruncatedSSet(
        dim=dim,
        cells=tuple(tuple(level) for level in level_cells),
        faces=tuple(faces),
        degeneracies=tuple(degeneracies),
        name=name,
    )


def nerve_truncated(cat: FinCategory, d: int) -> TruncatedSSet:
    """n-cells are composable n-chains of morphisms; level 0 is objects."""
    level_chains: list[list[tuple]] = [[("o", x) for x in cat.objects()]]
    for n in range(1, d + 1):
        cells = []
        if n == 1:
            cells = [("c", (m,)) for m in cat.morphisms()]
        else:
            for (_, prev) in level_chains[n - 1]:
                last = prev[-1]
                for m in cat.morphisms():
                    if cat.mor_src[m] == cat.mor_dst[last]:
                        cells.append(("c", prev + (m,)))
        level_chains.append(cells)

    def face_fn(n: int, label, i: int):
        _, chain = label
        if n == 1:
            (m,) = chain
            return ("o", cat.mor_src[m] if i == 1 else cat.mor_dst[m])
        if i == 0:
            return ("c", chain[1:])
        if i == n:
            return ("c", chain[:-1])
        merged = cat.compose(chain[i], chain[i - 1])
        return ("c", chain[: i - 1] + (merged,) + chain[i + 1 :])

    def degeneracy_fn(n: int, label, i: int):
        tag, payload = label
        if n == 0:
            return ("c", (cat.identity[payload],))
        chain = payload
        if i == 0:
            src = cat.mor_src[chain[0]]
            return ("c", (cat.identity[src],) + chain)
        return ("c", chain[:i] + (cat.identity[cat.mor_dst[chain[i - 1]]],) + chain[i:])

    return _build_from_label_tables(
        d, level_chains, face_fn, degeneracy_fn, name=f"N({cat.name})"
    )


def standard_simplex(n: int, d: int) -> TruncatedSSet:
    """Delta^n truncated at d; n = -1 gives the empty simplicial set."""
    if n < 0:
        return TruncatedSSet(
            dim=d,
            cells=tuple(() for _ in range(d + 1)),
            faces=tuple(() for _ in range(d + 1)),
            degeneracies=tuple(() for _ in range(d + 1)),
            name="∅",
        )
    levels = [list(monotone_maps(k, n)) for k in range(d + 1)]

    def face_fn(k, label, i):
        return label[:i] + label[i + 1 :]

    def degeneracy_fn(k, label, i):
        return label[: i + 1] + label[i:]

    return _build_from_label_tables(d, levels, face_fn, degeneracy_fn, name=f"Δ{n}")


def boundary_simplex(n: int, d: int) -> TruncatedSSet:
    """∂Δ^n truncated at d: the non-surjective monotone maps."""
    if n < 0:
        return standard_simplex(-1, d)
    levels = [
        [v for v in monotone_maps(k, n) if set(v) != set(range(n + 1))]
        for k in range(d + 1)
    ]

    def face_fn(k, label, i):
        return label[:i] + label[i + 1 :]

    def degeneracy_fn(k, label, i):
        return label[: i + 1] + label[i:]

    return _build_from_label_tables(d, levels, face_fn, degeneracy_fn, name=f"∂Δ{n}")


def boundary_inclusion(n: int, d: int) -> SimplicialMap:
    bd = boundary_simplex(n, d)
    full = standard_simplex(n, d)
    full_index = [
        {label: i for i, label in enumerate(full.cells[k])} for k in range(d + 1)
    ]
    mapping = tuple(
        tuple(full_index[k][label] for label in bd.cells[k]) for k in range(d + 1)
    )
    return SimplicialMap(src=bd, dst=full, mapping=mapping, name=f"∂Δ{n}⊆Δ{n}")


def product(x: TruncatedSSet, y: TruncatedSSet) -> TruncatedSSet:
    """Levelwise product with componentwise structure maps."""
    d = min(x.dim, y.dim)
    levels = [
        [(a, b) for a in range(x.n_cells(k)) for b in range(y.n_cells(k))]
        for k in range(d + 1)
    ]

    def face_fn(k, label, i):
        a, b = label
        return (x.face(k, a, i), y.face(k, b, i))

    def degeneracy_fn(k, label, i):
        a, b = label
        return (x.degeneracy(k, a, i), y.degeneracy(k, b, i))

    return _build_from_label_tables(
        d, levels, face_fn, degeneracy_fn, name=f"{x.name}×{y.name}"
    )


def nerve_functor_map(
    f: FunctorData, x: TruncatedSSet, y: TruncatedSSet
) -> SimplicialMap:
    """The simplicial map N(f): N(src) -> N(dst) on given truncated nerves."""
    d = min(x.dim, y.dim)
    y_index = [
        {label: i for i, label in enumerate(y.cells[k])} for k in range(d + 1)
    ]
    mapping = []
    for k in range(d + 1):
        row = []
        for label in x.cells[k]:
            tag, payload = label
            if tag == "o":
                row.append(y_index[0][("o", f.on_objects[payload])])
            else:
                row.append(
                    y_index[k][("c", tuple(f.on_morphisms[m] for m in payload))]
                )
        mapping.append(tuple(row))
    return SimplicialMap(src=x, dst=y, mapping=tuple(mapping), name=f"N({f.name})")
