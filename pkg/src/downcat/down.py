"""Down(C) and bounded Down_*(C): the direct replacement of a Reedy category.

The quotient keys every hom-class by its upward-interval maximum, so class
equality is table equality and composition is compose-then-maximize on the
materialized ladder category.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SizeLimitExceeded
from .fincat import (
    FinCategory,
    FunctorData,
    HomCongruence,
    ValidationReport,
    quotient_by_congruence,
)
from .ladder import (
    LadderMorphism,
    LadderObject,
    LadderVariant,
    MaterializedLadder,
    are_equivalent,
    gamma_split_idempotent,
    ladder_identity,
    materialize_ladder,
    up_max,
)
from .reedy import ReedyCategory


@dataclass(frozen=True)
class DownCategory:
    """The quotient category plus decode/encode tables and the projection."""

    rc: ReedyCategory = field(compare=False)
    variant: LadderVariant
    max_len: int
    ladder: MaterializedLadder = field(compare=False, repr=False)
    cat: FinCategory
    projection: FunctorData = field(compare=False, repr=False)
    # class id -> canonical representative (the class maximum)
    decode_table: tuple[LadderMorphism, ...] = field(compare=False, repr=False)

    def decode(self, class_id: int) -> LadderMorphism:
        return self.decode_table[class_id]

    def encode(self, m: LadderMorphism) -> int:
        """Class id of a ladder morphism, via its upward maximum."""
        rep = up_max(m, self.variant)
        return self.projection.on_morphisms[self.ladder.mor_id(rep)]

    def object_id(self, obj: LadderObject) -> int:
        return self.ladder.obj_id(obj)

    def object_at(self, i: int) -> LadderObject:
        return self.ladder.objects[i]


def _quotient_ladder(
    rc: ReedyCategory, variant: LadderVariant, max_len: int, cap: int
) -> DownCategory:
    ladder = materialize_ladder(rc, variant, max_len, cap=cap)
    maxima = [up_max(m, variant) for m in ladder.morphisms]
    related = [
        (i, ladder.mor_id(mx))
        for i, mx in enumerate(maxima)
    ]
    cong = HomCongruence.from_pairs(ladder.cat, related)
    quotient, projection = quotient_by_congruence(ladder.cat, cong)
    # decode: the class maximum, found as the unique member equal to its own max
    decode: dict[int, LadderMorphism] = {}
    for i, m in enumerate(ladder.morphisms):
        if maxima[i] == m:
            decode[projection.on_morphisms[i]] = m
    assert len(decode) == quotient.n_morphisms, "every class must have a maximum"
    decode_table = tuple(decode[c] for c in range(quotient.n_morphisms))
    return DownCategory(
        rc=rc,
        variant=variant,
        max_len=max_len,
        ladder=ladder,
        cat=quotient,
        projection=projection,
        decode_table=decode_table,
    )


def build_down(rc: ReedyCategory, cap: int = 200_000) -> DownCategory:
    """Down(C): quotient of the conservative-chain ladder category.

    Complete (not a bounded approximation): strict chains never exceed
    length |Ob C| - 1.
    """
    max_len = max(rc.cat.n_objects - 1, 0)
    return _quotient_ladder(rc, LadderVariant.STRICT, max_len, cap)


def build_down_star(
    rc: ReedyCategory, max_len: int | None = None, cap: int = 200_000
) -> DownCategory:
    """Bounded Down_*(C) over chains of length <= max_len (default |Ob C|)."""
    if max_len is None:
        max_len = rc.cat.n_objects
    return _quotient_ladder(rc, LadderVariant.MP, max_len, cap)


def normalize_object(
    dsc: DownCategory, obj: LadderObject
) -> tuple[LadderObject, tuple[int, int]]:
    """Strictify a bounded Down_* object.

    Returns the conservative-chain object together with the mutually inverse
    pair of class ids (to_strict, from_strict) in the quotient, obtained by
    splitting the maximum of the identity class.
    """
    ident = ladder_identity(obj)
    a = up_max(ident, dsc.variant)
    s, d = gamma_split_idempotent(a)
    strict_obj = s.dst
    to_strict = dsc.encode(s)
    from_strict = dsc.encode(d)
    q = dsc.cat
    assert q.try_compose(from_strict, to_strict) == dsc.encode(ident)
    assert q.try_compose(to_strict, from_strict) == q.identity[
        dsc.object_id(strict_obj)
    ]
    return strict_obj, (to_strict, from_strict)


@dataclass(frozen=True)
class LastFunctor:
    """The final-component comparison functor into the base category."""

    rc: ReedyCategory = field(compare=False)
    functor: FunctorData


@dataclass(frozen=True)
class WeqSet:
    morphisms: frozenset[int]

    def __contains__(self, m: int) -> bool:
        return m in self.morphisms


def last_of_ladder(m: LadderMorphism) -> int:
    """last(alpha, theta): the final component pushed to the end of the target."""
    cat = m.rc.cat
    mm = m.src.n
    return cat.compose(m.dst.chain_map(m.alpha(mm), m.dst.n), m.theta[mm])


def last_functor(
    rc: ReedyCategory, which: MaterializedLadder | DownCategory
) -> LastFunctor:
    """The functor sending ([n], X) to X(n) and (alpha, theta) to its last leg."""
    if isinstance(which, DownCategory):
        ladder = which.ladder
        on_objects = tuple(o.obj(o.n) for o in ladder.objects)
        on_morphisms = tuple(
            last_of_ladder(which.decode(c)) for c in which.cat.morphisms()
        )
        functor = FunctorData(
            src=which.cat,
            dst=rc.cat,
            on_objects=on_objects,
            on_morphisms=on_morphisms,
            name="last",
        )
    else:
        on_objects = tuple(o.obj(o.n) for o in which.objects)
        on_morphisms = tuple(last_of_ladder(m) for m in which.morphisms)
        functor = FunctorData(
            src=which.cat,
            dst=rc.cat,
            on_objects=on_objects,
            on_morphisms=on_morphisms,
            name="last",
        )
    return LastFunctor(rc=rc, functor=functor)


def weq_set(lf: LastFunctor) -> WeqSet:
    """Exact preimage of the identities under last."""
    base = lf.rc.cat
    f = lf.functor
    return WeqSet(
        frozenset(
            m for m in f.src.morphisms() if base.is_identity(f.on_morphisms[m])
        )
    )


@dataclass(frozen=True)
class DirectnessResult:
    direct: bool
    witness: str = ""
    degrees: tuple[int, ...] = ()


def check_direct(cat: FinCategory) -> DirectnessResult:
    """Directness of a finite category: no non-identity endos or isos, acyclic reach."""
    for m in cat.morphisms():
        if cat.is_identity(m):
            continue
        if cat.mor_src[m] == cat.mor_dst[m]:
            return DirectnessResult(False, f"non-identity endomorphism {cat.mor_labels[m]}")
        if cat.is_iso(m):
            return DirectnessResult(False, f"non-identity isomorphism {cat.mor_labels[m]}")
    edges = {
        (cat.mor_src[m], cat.mor_dst[m])
        for m in cat.morphisms()
        if not cat.is_identity(m)
    }
    # longest-path layering doubles as the acyclicity witness
    from .reedy import _find_cycle

    cycle = _find_cycle(cat.n_objects, edges)
    if cycle is not None:
        labels = [cat.obj_labels[v] for v in cycle]
        return DirectnessResult(False, f"reachability cycle {' -> '.join(labels)}")
    preds: dict[int, list[int]] = {}
    for a, b in edges:
        preds.setdefault(b, []).append(a)
    rank: dict[int, int] = {}

    def height(v: int) -> int:
        if v not in rank:
            rank[v] = 1 + max((height(p) for p in preds.get(v, ())), default=-1)
        return rank[v]

    return DirectnessResult(True, "", tuple(height(v) for v in cat.objects()))


def down_to_json(dc: DownCategory) -> dict:
    """JSON rendering with object decode tables (chains as morphism labels)."""
    base = dc.rc.cat
    objects = [
        {
            "id": i,
            "length": o.n,
            "chain": [base.mor_labels[m] for m in o.chain],
            "objects": [base.obj_labels[x] for x in o.objs],
        }
        for i, o in enumerate(dc.ladder.objects)
    ]
    morphisms = []
    for c in dc.cat.morphisms():
        rep = dc.decode(c)
        morphisms.append(
            {
                "id": c,
                "src": dc.object_id(rep.src),
                "dst": dc.object_id(rep.dst),
                "alpha": list(rep.alpha.values),
                "theta": [base.mor_labels[t] for t in rep.theta],
            }
        )
    return {
        "base": base.name,
        "variant": dc.variant.value,
        "max_len": dc.max_len,
        "objects": objects,
        "morphisms": morphisms,
    }
