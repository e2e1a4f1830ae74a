"""Finite categories, functors, and natural transformations as integer-id tables.

Everything is exhaustively checkable: composition is stored as a full table,
morphism equality is id equality, and hom-sets have a canonical (src, dst, id)
order so enumerations are byte-identical across runs.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import NotACongruence, NotComposable, ParseError, SizeLimitExceeded

# dense numpy table below this many morphisms, dict above
_DENSE_LIMIT = 1024


class ValidationReport:
    """A list of axiom violations; empty means the structure is valid."""

    def __init__(self, subject: str):
        self.subject = subject
        self.violations: list[str] = []

    def add(self, message: str) -> None:
        self.violations.append(message)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:  # truthy iff clean, so `assert report` reads well
        return self.ok

    def __iter__(self) -> Iterator[str]:
        return iter(self.violations)

    def __repr__(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"<ValidationReport {self.subject}: {status}>"

    def render(self) -> str:
        if self.ok:
            return f"{self.subject}: ok"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  - {v}" for v in self.violations]
        return "\n".join(lines)


class _ComposeTable:
    """Total-on-composable-pairs composition table, dense or hashed by size."""

    def __init__(self, n_morphisms: int, entries: Mapping[tuple[int, int], int]):
        self._n = n_morphisms
        if n_morphisms <= _DENSE_LIMIT:
            table = np.full((n_morphisms, n_morphisms), -1, dtype=np.int32)
            for (g, f), h in entries.items():
                table[g, f] = h
            self._dense = table
            self._dict = None
        else:
            self._dense = None
            self._dict = dict(entries)

    def get(self, g: int, f: int) -> int | None:
        if self._dense is not None:
            v = int(self._dense[g, f])
            return None if v < 0 else v
        return self._dict.get((g, f))

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        if self._dense is not None:
            gs, fs = np.nonzero(self._dense >= 0)
            for g, f in zip(gs.tolist(), fs.tolist()):
                yield (g, f), int(self._dense[g, f])
        else:
            yield from self._dict.items()

    def __len__(self) -> int:
        if self._dense is not None:
            return int((self._dense >= 0).sum())
        return len(self._dict)


@dataclass(frozen=True)
class FinCategory:
    """A finite category: objects 0..n-1, morphisms 0..m-1, full compose table.

    Immutable after construction; safe to share read-only.
    """

    obj_labels: tuple[str, ...]
    mor_src: tuple[int, ...]
    mor_dst: tuple[int, ...]
    mor_labels: tuple[str, ...]
    identity: tuple[int, ...]  # object id -> identity mor id
    _compose: _ComposeTable = field(repr=False, compare=False)
    name: str = "C"

    # -- construction -----------------------------------------------------

    @staticmethod
    def build(
        obj_labels: Sequence[str],
        morphisms: Sequence[tuple[int, int, str]],
        identity: Sequence[int],
        compose: Mapping[tuple[int, int], int],
        name: str = "C",
    ) -> "FinCategory":
        src = tuple(s for s, _, _ in morphisms)
        dst = tuple(d for _, d, _ in morphisms)
        labels = tuple(l for _, _, l in morphisms)
        return FinCategory(
            obj_labels=tuple(obj_labels),
            mor_src=src,
            mor_dst=dst,
            mor_labels=labels,
            identity=tuple(identity),
            _compose=_ComposeTable(len(morphisms), compose),
            name=name,
        )

    # -- basic structure ---------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.obj_labels)

    @property
    def n_morphisms(self) -> int:
        return len(self.mor_src)

    def objects(self) -> range:
        return range(self.n_objects)

    def morphisms(self) -> range:
        return range(self.n_morphisms)

    def src(self, m: int) -> int:
        return self.mor_src[m]

    def dst(self, m: int) -> int:
        return self.mor_dst[m]

    def is_identity(self, m: int) -> bool:
        return self.identity[self.mor_src[m]] == m

    def compose(self, g: int, f: int) -> int:
        """g after f; raises NotComposable for a mismatched pair."""
        h = self._compose.get(g, f)
        if h is None:
            raise NotComposable(
                f"{self.name}: compose({self.mor_labels[g]}, {self.mor_labels[f]}) undefined"
            )
        return h

    def try_compose(self, g: int, f: int) -> int | None:
        return self._compose.get(g, f)

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return tuple(
            m for m in self.morphisms() if self.mor_src[m] == x and self.mor_dst[m] == y
        )

    def endomorphisms(self, x: int) -> tuple[int, ...]:
        return self.hom(x, x)

    def inverse(self, m: int) -> int | None:
        """Two-sided inverse morphism id, or None."""
        x, y = self.mor_src[m], self.mor_dst[m]
        for w in self.hom(y, x):
            if (
                self.try_compose(w, m) == self.identity[x]
                and self.try_compose(m, w) == self.identity[y]
            ):
                return w
        return None

    def is_iso(self, m: int) -> bool:
        return self.inverse(m) is not None

    def compose_pairs(self) -> Iterator[tuple[int, int]]:
        """All composable (g, f) pairs, f first then g."""
        by_src: dict[int, list[int]] = {}
        for g in self.morphisms():
            by_src.setdefault(self.mor_src[g], []).append(g)
        for f in self.morphisms():
            for g in by_src.get(self.mor_dst[f], ()):
                yield g, f


def validate_category(cat: FinCategory) -> ValidationReport:
    """Scan every axiom; violations are report entries, never exceptions."""
    report = ValidationReport(f"category {cat.name}")
    n = cat.n_morphisms
    if len(cat.identity) != cat.n_objects:
        report.add("identity table length differs from object count")
        return report
    for x in cat.objects():
        i = cat.identity[x]
        if not (0 <= i < n) or cat.mor_src[i] != x or cat.mor_dst[i] != x:
            report.add(f"identity of object {cat.obj_labels[x]} has wrong endpoints")
    for (g, f), h in cat._compose.items():
        if cat.mor_dst[f] != cat.mor_src[g]:
            report.add(
                f"compose({cat.mor_labels[g]}, {cat.mor_labels[f]}) listed for a non-composable pair"
            )
            continue
        if cat.mor_src[h] != cat.mor_src[f] or cat.mor_dst[h] != cat.mor_dst[g]:
            report.add(
                f"compose({cat.mor_labels[g]}, {cat.mor_labels[f]}) endpoint mismatch"
            )
    for g, f in cat.compose_pairs():
        if cat.try_compose(g, f) is None:
            report.add(
                f"composable pair ({cat.mor_labels[g]}, {cat.mor_labels[f]}) missing from table"
            )
    for f in cat.morphisms():
        idl = cat.identity[cat.mor_dst[f]]
        idr = cat.identity[cat.mor_src[f]]
        if cat.try_compose(idl, f) != f:
            report.add(f"left unit law fails at {cat.mor_labels[f]}")
        if cat.try_compose(f, idr) != f:
            report.add(f"right unit law fails at {cat.mor_labels[f]}")
    # associativity over all composable triples
    for g, f in cat.compose_pairs():
        gf = cat.try_compose(g, f)
        if gf is None:
            continue
        for h in cat.morphisms():
            if cat.mor_src[h] != cat.mor_dst[g]:
                continue
            hg = cat.try_compose(h, g)
            left = cat.try_compose(h, gf)
            right = cat.try_compose(hg, f) if hg is not None else None
            if left != right:
                report.add(
                    "associativity fails at "
                    f"({cat.mor_labels[h]}, {cat.mor_labels[g]}, {cat.mor_labels[f]})"
                )
    return report


# -- functors and natural transformations ---------------------------------


@dataclass(frozen=True)
class FunctorData:
    src: FinCategory
    dst: FinCategory
    on_objects: tuple[int, ...]
    on_morphisms: tuple[int, ...]
    name: str = "F"

    def obj(self, x: int) -> int:
        return self.on_objects[x]

    def mor(self, m: int) -> int:
        return self.on_morphisms[m]

    def validate(self) -> ValidationReport:
        report = ValidationReport(f"functor {self.name}")
        s, d = self.src, self.dst
        for m in s.morphisms():
            fm = self.on_morphisms[m]
            if d.mor_src[fm] != self.on_objects[s.mor_src[m]] or d.mor_dst[
                fm
            ] != self.on_objects[s.mor_dst[m]]:
                report.add(f"endpoint mismatch at {s.mor_labels[m]}")
        for x in s.objects():
            if self.on_morphisms[s.identity[x]] != d.identity[self.on_objects[x]]:
                report.add(f"identity not preserved at {s.obj_labels[x]}")
        for g, f in s.compose_pairs():
            lhs = self.on_morphisms[s.compose(g, f)]
            rhs = d.try_compose(self.on_morphisms[g], self.on_morphisms[f])
            if lhs != rhs:
                report.add(
                    f"composite not preserved at ({s.mor_labels[g]}, {s.mor_labels[f]})"
                )
        return report

    def then(self, other: "FunctorData") -> "FunctorData":
        """other after self."""
        if other.src is not self.dst and other.src != self.dst:
            raise NotComposable("functor composition endpoint mismatch")
        return FunctorData(
            src=self.src,
            dst=other.dst,
            on_objects=tuple(other.on_objects[o] for o in self.on_objects),
            on_morphisms=tuple(other.on_morphisms[m] for m in self.on_morphisms),
            name=f"{other.name}∘{self.name}",
        )


def identity_functor(cat: FinCategory) -> FunctorData:
    return FunctorData(
        src=cat,
        dst=cat,
        on_objects=tuple(cat.objects()),
        on_morphisms=tuple(cat.morphisms()),
        name="id",
    )


@dataclass(frozen=True)
class NatTransData:
    source: FunctorData
    target: FunctorData
    components: tuple[int, ...]  # object of source.src -> mor of source.dst

    def validate(self) -> ValidationReport:
        report = ValidationReport("natural transformation")
        f, g = self.source, self.target
        base, tgt = f.src, f.dst
        for x in base.objects():
            c = self.components[x]
            if tgt.mor_src[c] != f.on_objects[x] or tgt.mor_dst[c] != g.on_objects[x]:
                report.add(f"component at {base.obj_labels[x]} has wrong endpoints")
                return report
        for m in base.morphisms():
            x, y = base.mor_src[m], base.mor_dst[m]
            lhs = tgt.try_compose(self.components[y], f.on_morphisms[m])
            rhs = tgt.try_compose(g.on_morphisms[m], self.components[x])
            if lhs != rhs or lhs is None:
                report.add(f"naturality square fails at {base.mor_labels[m]}")
        return report

    def is_iso(self) -> bool:
        tgt = self.source.dst
        return all(tgt.is_iso(c) for c in self.components)


# -- operations -----------------------------------------------------------


def opposite(cat: FinCategory) -> FinCategory:
    """Swap src/dst and transpose composition."""
    entries = {(f, g): h for (g, f), h in cat._compose.items()}
    return FinCategory(
        obj_labels=cat.obj_labels,
        mor_src=cat.mor_dst,
        mor_dst=cat.mor_src,
        mor_labels=cat.mor_labels,
        identity=cat.identity,
        _compose=_ComposeTable(cat.n_morphisms, entries),
        name=f"{cat.name}^op",
    )


def structurally_equal(a: FinCategory, b: FinCategory) -> bool:
    if (
        a.obj_labels != b.obj_labels
        or a.mor_src != b.mor_src
        or a.mor_dst != b.mor_dst
        or a.identity != b.identity
    ):
        return False
    return sorted(a._compose.items()) == sorted(b._compose.items())


def join_categories(a: FinCategory, b: FinCategory) -> FinCategory:
    """The join: a and b side by side plus one morphism per (a-object, b-object)."""
    obj_labels = tuple(f"0.{l}" for l in a.obj_labels) + tuple(
        f"1.{l}" for l in b.obj_labels
    )
    n_a_obj = a.n_objects
    n_a, n_b = a.n_morphisms, b.n_morphisms
    morphisms: list[tuple[int, int, str]] = []
    for m in a.morphisms():
        morphisms.append((a.mor_src[m], a.mor_dst[m], f"0.{a.mor_labels[m]}"))
    for m in b.morphisms():
        morphisms.append(
            (n_a_obj + b.mor_src[m], n_a_obj + b.mor_dst[m], f"1.{b.mor_labels[m]}")
        )
    # join arrows, one per (x in a, y in b)
    join_id: dict[tuple[int, int], int] = {}
    for x in a.objects():
        for y in b.objects():
            join_id[(x, y)] = len(morphisms)
            morphisms.append(
                (x, n_a_obj + y, f"!({a.obj_labels[x]}->{b.obj_labels[y]})")
            )
    identity = tuple(a.identity) + tuple(n_a + i for i in b.identity)
    compose: dict[tuple[int, int], int] = {}
    for (g, f), h in a._compose.items():
        compose[(g, f)] = h
    for (g, f), h in b._compose.items():
        compose[(n_a + g, n_a + f)] = n_a + h
    for (x, y), j in join_id.items():
        for f in a.morphisms():  # j ∘ f for f: x' -> x in a
            if a.mor_dst[f] == x:
                compose[(j, f)] = join_id[(a.mor_src[f], y)]
        for g in b.morphisms():  # g ∘ j for g: y -> y' in b
            if b.mor_src[g] == y:
                compose[(n_a + g, j)] = join_id[(x, b.mor_dst[g])]
    return FinCategory.build(
        obj_labels, morphisms, identity, compose, name=f"{a.name}*{b.name}"
    )


def enumerate_functors(
    src: FinCategory, dst: FinCategory, cap: int = 2_000_000
) -> list[FunctorData]:
    """All functors src -> dst, canonically ordered, by pruned backtracking."""
    results: list[FunctorData] = []
    non_ids = [m for m in src.morphisms() if not src.is_identity(m)]
    steps = 0

    def assign_arrows(on_obj: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        nonlocal steps
        on_mor: dict[int, int] = {
            src.identity[x]: dst.identity[on_obj[x]] for x in src.objects()
        }

        def backtrack(i: int) -> Iterator[dict[int, int]]:
            nonlocal steps
            if i == len(non_ids):
                yield dict(on_mor)
                return
            m = non_ids[i]
            x, y = on_obj[src.mor_src[m]], on_obj[src.mor_dst[m]]
            for cand in dst.hom(x, y):
                steps += 1
                if steps > cap:
                    raise SizeLimitExceeded(
                        f"functor search {src.name}->{dst.name} exceeded {cap} steps"
                    )
                on_mor[m] = cand
                # check all composition constraints among assigned morphisms
                ok = True
                for g, f in src.compose_pairs():
                    if g in on_mor and f in on_mor:
                        h = src.compose(g, f)
                        if h in on_mor:
                            if dst.try_compose(on_mor[g], on_mor[f]) != on_mor[h]:
                                ok = False
                                break
                if ok:
                    yield from backtrack(i + 1)
                del on_mor[m]

        for table in backtrack(0):
            yield tuple(table[m] for m in src.morphisms())

    for on_obj in itertools.product(dst.objects(), repeat=src.n_objects):
        for on_mor in assign_arrows(on_obj):
            results.append(
                FunctorData(src=src, dst=dst, on_objects=on_obj, on_morphisms=on_mor)
            )
    results.sort(key=lambda f: (f.on_objects, f.on_morphisms))
    return results


class NotParallelFunctors(NotComposable):
    def __init__(self, f: FunctorData, g: FunctorData):
        super().__init__(f"functors {f.name} and {g.name} are not parallel")


def enumerate_natural_transformations(
    f: FunctorData, g: FunctorData, iso_only: bool = False
) -> list[NatTransData]:
    """All natural transformations f => g (components scanned exhaustively)."""
    if f.src is not g.src and f.src != g.src:
        raise NotParallelFunctors(f, g)
    base, tgt = f.src, f.dst
    choices: list[tuple[int, ...]] = []
    for x in base.objects():
        hom = tgt.hom(f.on_objects[x], g.on_objects[x])
        if iso_only:
            hom = tuple(m for m in hom if tgt.is_iso(m))
        if not hom:
            return []
        choices.append(hom)
    found = []
    for comps in itertools.product(*choices):
        cand = NatTransData(source=f, target=g, components=comps)
        if cand.validate().ok:
            found.append(cand)
    return found


def find_natural_isos(f: FunctorData, g: FunctorData) -> list[NatTransData]:
    """All natural isomorphisms f => g; empty means not naturally isomorphic."""
    return enumerate_natural_transformations(f, g, iso_only=True)


# -- congruences and quotients ---------------------------------------------


@dataclass(frozen=True)
class HomCongruence:
    """Per-hom-set partition of morphism ids, given as mor -> class index."""

    base: FinCategory
    class_of: tuple[int, ...]

    @staticmethod
    def from_pairs(base: FinCategory, related: Iterable[tuple[int, int]]) -> "HomCongruence":
        """Symmetric-transitive-reflexive closure of the given related pairs."""
        parent = list(base.morphisms())

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, b in related:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        roots = sorted({find(m) for m in base.morphisms()})
        index = {r: i for i, r in enumerate(roots)}
        return HomCongruence(base, tuple(index[find(m)] for m in base.morphisms()))

    def validate(self) -> ValidationReport:
        report = ValidationReport("hom congruence")
        base = self.base
        classes: dict[int, list[int]] = {}
        for m in base.morphisms():
            classes.setdefault(self.class_of[m], []).append(m)
        for members in classes.values():
            rep = members[0]
            for m in members[1:]:
                if base.mor_src[m] != base.mor_src[rep] or base.mor_dst[m] != base.mor_dst[rep]:
                    report.add(
                        f"class relates non-parallel {base.mor_labels[rep]} and {base.mor_labels[m]}"
                    )
        # two-sided composition closure
        for members in classes.values():
            rep = members[0]
            for m in members[1:]:
                for g in base.morphisms():
                    if base.mor_src[g] == base.mor_dst[rep]:
                        if self.class_of[base.compose(g, rep)] != self.class_of[
                            base.compose(g, m)
                        ]:
                            report.add(
                                f"composition escapes: {base.mor_labels[g]} ∘ "
                                f"[{base.mor_labels[rep]}~{base.mor_labels[m]}]"
                            )
                for h in base.morphisms():
                    if base.mor_dst[h] == base.mor_src[rep]:
                        if self.class_of[base.compose(rep, h)] != self.class_of[
                            base.compose(m, h)
                        ]:
                            report.add(
                                f"composition escapes: [{base.mor_labels[rep]}~"
                                f"{base.mor_labels[m]}] ∘ {base.mor_labels[h]}"
                            )
        return report


def quotient_by_congruence(
    cat: FinCategory, cong: HomCongruence
) -> tuple[FinCategory, FunctorData]:
    """Quotient category with classes as morphisms plus the projection functor."""
    class_members: dict[int, list[int]] = {}
    for m in cat.morphisms():
        class_members.setdefault(cong.class_of[m], []).append(m)
    # canonical order: (src, dst, smallest member id)
    ordered = sorted(
        class_members.items(),
        key=lambda kv: (cat.mor_src[kv[1][0]], cat.mor_dst[kv[1][0]], min(kv[1])),
    )
    new_id = {old_class: i for i, (old_class, _) in enumerate(ordered)}
    reps = [min(members) for _, members in ordered]
    morphisms = [
        (cat.mor_src[r], cat.mor_dst[r], f"[{cat.mor_labels[r]}]") for r in reps
    ]
    identity = tuple(new_id[cong.class_of[cat.identity[x]]] for x in cat.objects())
    compose: dict[tuple[int, int], int] = {}
    for gi, g in enumerate(reps):
        for fi, f in enumerate(reps):
            if cat.mor_dst[f] != cat.mor_src[g]:
                continue
            h = new_id[cong.class_of[cat.compose(g, f)]]
            compose[(gi, fi)] = h
    # congruence check: composites must not depend on representatives
    for (old_class, members) in ordered:
        gi = new_id[old_class]
        for m in members:
            for fi, f in enumerate(reps):
                if cat.mor_dst[f] == cat.mor_src[m]:
                    if compose[(gi, fi)] != new_id[cong.class_of[cat.compose(m, f)]]:
                        raise NotACongruence(
                            "composition escapes the partition",
                            witness=(cat.mor_labels[m], cat.mor_labels[f]),
                        )
                if cat.mor_src[f] == cat.mor_dst[m]:
                    if compose[(fi, gi)] != new_id[cong.class_of[cat.compose(f, m)]]:
                        raise NotACongruence(
                            "composition escapes the partition",
                            witness=(cat.mor_labels[f], cat.mor_labels[m]),
                        )
    quotient = FinCategory.build(
        cat.obj_labels, morphisms, identity, compose, name=f"{cat.name}/~"
    )
    projection = FunctorData(
        src=cat,
        dst=quotient,
        on_objects=tuple(cat.objects()),
        on_morphisms=tuple(new_id[cong.class_of[m]] for m in cat.morphisms()),
        name="q",
    )
    return quotient, projection


# -- JSON and DOT interfaces -----------------------------------------------


def category_to_json(cat: FinCategory, reedy: tuple[Iterable[int], Iterable[int]] | None = None) -> dict:
    doc = {
        "objects": list(cat.obj_labels),
        "morphisms": [
            {
                "id": m,
                "src": cat.obj_labels[cat.mor_src[m]],
                "dst": cat.obj_labels[cat.mor_dst[m]],
                "label": cat.mor_labels[m],
            }
            for m in cat.morphisms()
        ],
        "identities": {cat.obj_labels[x]: cat.identity[x] for x in cat.objects()},
        "compose": sorted([g, f, h] for (g, f), h in cat._compose.items()),
    }
    if reedy is not None:
        doc["reedy"] = {"minus": sorted(reedy[0]), "plus": sorted(reedy[1])}
    return doc


def category_from_json(doc: dict) -> tuple[FinCategory, dict | None]:
    """Load the JSON category format; returns (category, reedy block or None)."""
    try:
        labels = list(doc["objects"])
        obj_index = {l: i for i, l in enumerate(labels)}
        if len(obj_index) != len(labels):
            raise ParseError("duplicate object labels")
        raw_mors = doc["morphisms"]
        mors: list[tuple[int, int, str]] = [None] * len(raw_mors)  # type: ignore
        for rec in raw_mors:
            mid = rec["id"]
            if not (0 <= mid < len(raw_mors)) or mors[mid] is not None:
                raise ParseError(f"morphism ids must be dense, got {mid}")
            mors[mid] = (obj_index[rec["src"]], obj_index[rec["dst"]], rec["label"])
        identity = [None] * len(labels)
        for label, mid in doc["identities"].items():
            identity[obj_index[label]] = mid
        if any(i is None for i in identity):
            raise ParseError("missing identity assignment")
        compose = {}
        for g, f, h in doc["compose"]:
            compose[(g, f)] = h
        cat = FinCategory.build(labels, mors, identity, compose, name=doc.get("name", "C"))
    except ParseError:
        raise
    except (KeyError, TypeError, IndexError) as exc:
        raise ParseError(f"malformed category document: {exc}") from exc
    # unlisted composable pairs are a load error
    for g, f in cat.compose_pairs():
        if cat.try_compose(g, f) is None:
            raise ParseError(
                f"composable pair ({cat.mor_labels[g]}, {cat.mor_labels[f]}) missing from compose"
            )
    for (g, f), _ in cat._compose.items():
        if cat.mor_dst[f] != cat.mor_src[g]:
            raise ParseError(f"compose lists non-composable pair ({g}, {f})")
    return cat, doc.get("reedy")


def load_category_file(path: str) -> tuple[FinCategory, dict | None]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return category_from_json(doc)


def category_to_dot(cat: FinCategory) -> str:
    """Objects as nodes, non-identity morphisms as edges."""
    lines = [f'digraph "{cat.name}" {{']
    for x in cat.objects():
        lines.append(f'  o{x} [label="{cat.obj_labels[x]}"];')
    for m in cat.morphisms():
        if cat.is_identity(m):
            continue
        lines.append(
            f'  o{cat.mor_src[m]} -> o{cat.mor_dst[m]} [label="{cat.mor_labels[m]}"];'
        )
    lines.append("}")
    return "\n".join(lines)
