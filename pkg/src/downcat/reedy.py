"""Reedy structures on finite categories.

Validation, unique (minus, plus) factorization, longest-path degree functions,
idempotent splitting, and generators for truncated simplex categories.
Membership in the minus/plus parts is explicit data, never inferred.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    CycleDetected,
    NotFactorizable,
    NotIdempotent,
    NotSurjective,
    SizeLimitExceeded,
)
from .fincat import FinCategory, ValidationReport, validate_category


# -- monotone maps between finite ordinals ----------------------------------


@dataclass(frozen=True)
class SimplexMor:
    """A monotone map [m] -> [n], stored as its value tuple of length m+1."""

    m: int
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        assert len(self.values) == self.m + 1
        assert all(0 <= v <= self.n for v in self.values)
        assert all(a <= b for a, b in zip(self.values, self.values[1:]))

    def __call__(self, i: int) -> int:
        return self.values[i]

    def compose(self, other: "SimplexMor") -> "SimplexMor":
        """self after other."""
        assert other.n == self.m
        return SimplexMor(other.m, self.n, tuple(self.values[v] for v in other.values))

    @property
    def is_identity(self) -> bool:
        return self.m == self.n and self.values == tuple(range(self.m + 1))

    @property
    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.n + 1))

    def leq(self, other: "SimplexMor") -> bool:
        """Pointwise order on parallel maps."""
        assert (self.m, self.n) == (other.m, other.n)
        return all(a <= b for a, b in zip(self.values, other.values))


def simplex_identity(n: int) -> SimplexMor:
    return SimplexMor(n, n, tuple(range(n + 1)))


def delta(n: int, k: int) -> SimplexMor:
    """Coface [n-1] -> [n] skipping k."""
    return SimplexMor(n - 1, n, tuple(i if i < k else i + 1 for i in range(n)))


def sigma(n: int, k: int) -> SimplexMor:
    """Codegeneracy [n+1] -> [n] repeating k."""
    return SimplexMor(n + 1, n, tuple(i if i <= k else i - 1 for i in range(n + 2)))


def iota(n: int, subset: Sequence[int]) -> SimplexMor:
    """Injection [k-1] -> [n] selecting the given increasing subset."""
    values = tuple(sorted(subset))
    return SimplexMor(len(values) - 1, n, values)


def monotone_maps(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """All monotone value tuples [m] -> [n], lexicographically ordered."""
    if m < 0 or n < 0:
        return
    yield from itertools.combinations_with_replacement(range(n + 1), m + 1)


def image_factorization(f: SimplexMor) -> tuple[SimplexMor, SimplexMor]:
    """f = injection ∘ surjection through the image; the Delta Reedy factorization."""
    image = sorted(set(f.values))
    index = {v: i for i, v in enumerate(image)}
    surj = SimplexMor(f.m, len(image) - 1, tuple(index[v] for v in f.values))
    inj = SimplexMor(len(image) - 1, f.n, tuple(image))
    return surj, inj


def largest_section(sig: SimplexMor) -> SimplexMor:
    """The pointwise-maximal section of a surjection: i -> max preimage of i."""
    if not sig.is_surjective:
        raise NotSurjective(f"{sig.values} is not surjective onto [{sig.n}]")
    values = tuple(
        max(j for j, v in enumerate(sig.values) if v == i) for i in range(sig.n + 1)
    )
    return SimplexMor(sig.n, sig.m, values)


# -- Reedy categories --------------------------------------------------------


@dataclass(frozen=True)
class ReedyCategory:
    cat: FinCategory
    minus: frozenset[int]
    plus: frozenset[int]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @staticmethod
    def build(cat: FinCategory, minus, plus) -> "ReedyCategory":
        return ReedyCategory(cat=cat, minus=frozenset(minus), plus=frozenset(plus))

    def in_minus(self, m: int) -> bool:
        return m in self.minus

    def in_plus(self, m: int) -> bool:
        return m in self.plus

    def degree(self, x: int) -> int:
        return self.degrees()[x]

    def degrees(self) -> tuple[int, ...]:
        if "deg" not in self._cache:
            self._cache["deg"] = compute_degree_function(self)
        return self._cache["deg"]


def _lt_edges(rc: ReedyCategory) -> set[tuple[int, int]]:
    """The <' relation: x <' y via non-identity x->y in plus or y->x in minus."""
    cat = rc.cat
    edges = set()
    for m in cat.morphisms():
        if cat.is_identity(m):
            continue
        if m in rc.plus:
            edges.add((cat.mor_src[m], cat.mor_dst[m]))
        if m in rc.minus:
            edges.add((cat.mor_dst[m], cat.mor_src[m]))
    return edges


def _find_cycle(n: int, edges: set[tuple[int, int]]) -> list[int] | None:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
    color = [0] * n
    stack: list[int] = []

    def dfs(v: int) -> list[int] | None:
        color[v] = 1
        stack.append(v)
        for w in adj.get(v, ()):
            if color[w] == 1:
                return stack[stack.index(w):] + [w]
            if color[w] == 0:
                hit = dfs(w)
                if hit is not None:
                    return hit
        stack.pop()
        color[v] = 2
        return None

    for v in range(n):
        if color[v] == 0:
            hit = dfs(v)
            if hit is not None:
                return hit
    return None


def compute_degree_function(rc: ReedyCategory) -> tuple[int, ...]:
    """Longest-path rank along <'; raises CycleDetected with a witness cycle."""
    n = rc.cat.n_objects
    edges = _lt_edges(rc)
    cycle = _find_cycle(n, edges)
    if cycle is not None:
        raise CycleDetected([rc.cat.obj_labels[v] for v in cycle])
    preds: dict[int, list[int]] = {}
    for a, b in edges:
        preds.setdefault(b, []).append(a)
    rank: dict[int, int] = {}

    def height(v: int) -> int:
        if v not in rank:
            rank[v] = 1 + max((height(p) for p in preds.get(v, ())), default=-1)
        return rank[v]

    return tuple(height(v) for v in range(n))


def factorizations(rc: ReedyCategory, f: int) -> list[tuple[int, int]]:
    """Every (s in minus, d in plus) with d∘s = f; oracle for uniqueness scans."""
    cat = rc.cat
    found = []
    for s in rc.minus:
        if cat.mor_src[s] != cat.mor_src[f]:
            continue
        for d in rc.plus:
            if cat.mor_src[d] != cat.mor_dst[s] or cat.mor_dst[d] != cat.mor_dst[f]:
                continue
            if cat.try_compose(d, s) == f:
                found.append((s, d))
    return found


def validate_reedy(rc: ReedyCategory) -> ValidationReport:
    """Wide-subcategory closure, unique factorization, and <' acyclicity."""
    cat = rc.cat
    report = ValidationReport(f"reedy structure on {cat.name}")
    base = validate_category(cat)
    for v in base:
        report.add(f"(category) {v}")
    for x in cat.objects():
        i = cat.identity[x]
        if i not in rc.minus:
            report.add(f"minus is not wide: missing identity of {cat.obj_labels[x]}")
        if i not in rc.plus:
            report.add(f"plus is not wide: missing identity of {cat.obj_labels[x]}")
    for part, name in ((rc.minus, "minus"), (rc.plus, "plus")):
        for g in part:
            for f in part:
                h = cat.try_compose(g, f)
                if h is not None and h not in part:
                    report.add(
                        f"{name} not closed: {cat.mor_labels[g]} ∘ {cat.mor_labels[f]}"
                    )
    for f in cat.morphisms():
        found = factorizations(rc, f)
        if len(found) != 1:
            report.add(
                f"morphism {cat.mor_labels[f]} has {len(found)} (minus,plus) factorizations"
            )
    try:
        compute_degree_function(rc)
    except CycleDetected as exc:
        report.add(f"<' relation has a cycle: {' <- '.join(map(str, exc.cycle))}")
    return report


def reedy_factorize(rc: ReedyCategory, f: int) -> tuple[int, int]:
    """The unique (s in minus, d in plus) pair with d∘s = f."""
    found = factorizations(rc, f)
    if len(found) != 1:
        raise NotFactorizable(
            f"{rc.cat.mor_labels[f]} has {len(found)} factorizations; structure invalid"
        )
    return found[0]


def split_idempotent(rc: ReedyCategory, e: int) -> tuple[int, int]:
    """The unique (s, d) with d∘s = e and s∘d = id; e must be idempotent."""
    cat = rc.cat
    if cat.try_compose(e, e) != e:
        raise NotIdempotent(f"{cat.mor_labels[e]} is not idempotent")
    s, d = reedy_factorize(rc, e)
    mid = cat.mor_dst[s]
    if cat.try_compose(s, d) != cat.identity[mid]:
        raise NotFactorizable(
            f"splitting of {cat.mor_labels[e]} fails the section equation"
        )
    return s, d


# -- truncated simplex categories -------------------------------------------


@lru_cache(maxsize=8)
def truncated_simplex_category(N: int, cap: int = 100_000) -> ReedyCategory:
    """Objects [0..N], all monotone maps, surjections as minus, injections as plus.

    Morphism ids are lexicographic ranks of value tuples within (m, n) blocks,
    blocks ordered by (m, n); stable across runs for golden tests.
    """
    if N < 0:
        raise SizeLimitExceeded("N must be >= 0")
    obj_labels = tuple(f"[{n}]" for n in range(N + 1))
    morphisms: list[tuple[int, int, str]] = []
    mor_values: list[SimplexMor] = []
    index: dict[tuple[int, int, tuple[int, ...]], int] = {}
    for m in range(N + 1):
        for n in range(N + 1):
            for values in monotone_maps(m, n):
                if len(morphisms) > cap:
                    raise SizeLimitExceeded(f"TS({N}) exceeds {cap} morphisms")
                index[(m, n, values)] = len(morphisms)
                morphisms.append((m, n, f"{values}:{m}->{n}"))
                mor_values.append(SimplexMor(m, n, values))
    identity = tuple(index[(n, n, tuple(range(n + 1)))] for n in range(N + 1))
    compose: dict[tuple[int, int], int] = {}
    for gi, g in enumerate(mor_values):
        for fi, f in enumerate(mor_values):
            if f.n != g.m:
                continue
            h = g.compose(f)
            compose[(gi, fi)] = index[(h.m, h.n, h.values)]
    cat = FinCategory.build(obj_labels, morphisms, identity, compose, name=f"TS({N})")
    minus = frozenset(i for i, v in enumerate(mor_values) if v.is_surjective)
    plus = frozenset(i for i, v in enumerate(mor_values) if v.is_injective)
    rc = ReedyCategory.build(cat, minus, plus)
    rc._cache["simplex_values"] = tuple(mor_values)
    return rc


def simplex_mor_of(rc: ReedyCategory, m: int) -> SimplexMor:
    """Recover the SimplexMor for a truncated-simplex-category morphism id."""
    return rc._cache["simplex_values"][m]
