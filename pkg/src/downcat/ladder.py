"""The skew-ladder categories over a Reedy category.

Three variants share one data model: chains in the base category as objects,
pairs (alpha, theta) of a simplex map and componentwise connecting morphisms
as morphisms. Hom-sets carry the pointwise order; every upward interval has a
computable maximum, which keys the equivalence classes that build Down(C).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import NotComposable, NotParallel, SizeLimitExceeded
from .fincat import FinCategory, FunctorData
from .reedy import (
    ReedyCategory,
    SimplexMor,
    image_factorization,
    largest_section,
    monotone_maps,
    simplex_identity,
)


class LadderVariant(enum.Enum):
    ALL = "all"  # chains in C, arbitrary components
    MP = "mp"  # chains in C_minus, components in C_plus
    STRICT = "strict"  # conservative C_minus chains, injective alpha


@dataclass(frozen=True)
class LadderObject:
    """A chain ([n], X): n composable morphisms, stored with its n+1 objects."""

    # excluded from eq/hash: mixing objects across base categories is a bug,
    # and hashing the full Reedy tables on every dict lookup is wasteful.
    rc: ReedyCategory = field(compare=False)
    chain: tuple[int, ...] = field(default=())  # chain[i]: X(i) -> X(i+1)
    objs: tuple[int, ...] = field(default=())  # object ids, length n+1

    @staticmethod
    def of_chain(rc: ReedyCategory, chain: Sequence[int]) -> "LadderObject":
        cat = rc.cat
        if not chain:
            raise ValueError("use of_object for length-0 chains")
        objs = [cat.mor_src[chain[0]]]
        for m in chain:
            assert cat.mor_src[m] == objs[-1], "chain is not composable"
            objs.append(cat.mor_dst[m])
        return LadderObject(rc, tuple(chain), tuple(objs))

    @staticmethod
    def of_object(rc: ReedyCategory, x: int) -> "LadderObject":
        return LadderObject(rc, (), (x,))

    @property
    def n(self) -> int:
        return len(self.chain)

    def obj(self, i: int) -> int:
        return self.objs[i]

    def chain_map(self, i: int, j: int) -> int:
        """The composite X(i) -> X(j) for i <= j."""
        cat = self.rc.cat
        m = cat.identity[self.objs[i]]
        for k in range(i, j):
            m = cat.compose(self.chain[k], m)
        return m

    def is_conservative(self) -> bool:
        cat = self.rc.cat
        return all(not cat.is_identity(m) for m in self.chain)

    def in_variant(self, variant: LadderVariant) -> bool:
        if variant is LadderVariant.ALL:
            return True
        if not all(m in self.rc.minus for m in self.chain):
            return False
        if variant is LadderVariant.STRICT:
            return self.is_conservative()
        return True

    def sort_key(self):
        return (self.n, self.chain, self.objs)

    def label(self) -> str:
        cat = self.rc.cat
        if not self.chain:
            return f"({cat.obj_labels[self.objs[0]]})"
        return "(" + ";".join(cat.mor_labels[m] for m in self.chain) + ")"


@dataclass(frozen=True)
class LadderMorphism:
    """A skew ladder (alpha, theta): src chain to dst chain."""

    src: LadderObject
    dst: LadderObject
    alpha: SimplexMor
    theta: tuple[int, ...]  # theta[i]: src.obj(i) -> dst.obj(alpha(i))

    @property
    def rc(self) -> ReedyCategory:
        return self.src.rc

    def is_identity(self) -> bool:
        return (
            self.src == self.dst
            and self.alpha.is_identity
            and all(
                self.theta[i] == self.rc.cat.identity[self.src.obj(i)]
                for i in range(self.src.n + 1)
            )
        )

    def validate(self, variant: LadderVariant) -> list[str]:
        """Endpoint, membership, and naturality violations (empty = valid)."""
        cat = self.rc.cat
        bad = []
        m, n = self.src.n, self.dst.n
        if (self.alpha.m, self.alpha.n) != (m, n):
            return [f"alpha has shape {self.alpha.m}->{self.alpha.n}, want {m}->{n}"]
        for i in range(m + 1):
            t = self.theta[i]
            if cat.mor_src[t] != self.src.obj(i) or cat.mor_dst[t] != self.dst.obj(
                self.alpha(i)
            ):
                bad.append(f"theta[{i}] endpoint mismatch")
                return bad
        if variant in (LadderVariant.MP, LadderVariant.STRICT):
            for i in range(m + 1):
                if self.theta[i] not in self.rc.plus:
                    bad.append(f"theta[{i}] not in plus")
        if variant is LadderVariant.STRICT and not self.alpha.is_injective:
            bad.append("alpha not injective")
        # naturality on generating inequalities i <= i+1 (functoriality closes it)
        for i in range(m):
            lhs = cat.compose(
                self.dst.chain_map(self.alpha(i), self.alpha(i + 1)), self.theta[i]
            )
            rhs = cat.compose(self.theta[i + 1], self.src.chain_map(i, i + 1))
            if lhs != rhs:
                bad.append(f"naturality fails between {i} and {i + 1}")
        return bad

    def naturality_full_scan(self) -> bool:
        """Naturality over every pair i <= j (test cross-check)."""
        cat = self.rc.cat
        for i in range(self.src.n + 1):
            for j in range(i, self.src.n + 1):
                lhs = cat.compose(
                    self.dst.chain_map(self.alpha(i), self.alpha(j)), self.theta[i]
                )
                rhs = cat.compose(self.theta[j], self.src.chain_map(i, j))
                if lhs != rhs:
                    return False
        return True

    def sort_key(self):
        return (self.src.sort_key(), self.dst.sort_key(), self.alpha.values, self.theta)

    def label(self) -> str:
        cat = self.rc.cat
        thetas = ",".join(cat.mor_labels[t] for t in self.theta)
        return f"{self.alpha.values}|{thetas}"


def ladder_identity(obj: LadderObject) -> LadderMorphism:
    cat = obj.rc.cat
    return LadderMorphism(
        src=obj,
        dst=obj,
        alpha=simplex_identity(obj.n),
        theta=tuple(cat.identity[obj.obj(i)] for i in range(obj.n + 1)),
    )


def ladder_compose(m2: LadderMorphism, m1: LadderMorphism) -> LadderMorphism:
    """m2 after m1: (beta∘alpha, (phi whiskered by alpha) ∘ theta)."""
    if m1.dst != m2.src:
        raise NotComposable("ladder morphisms are not composable")
    cat = m1.rc.cat
    alpha = m2.alpha.compose(m1.alpha)
    theta = tuple(
        cat.compose(m2.theta[m1.alpha(i)], m1.theta[i]) for i in range(m1.src.n + 1)
    )
    return LadderMorphism(src=m1.src, dst=m2.dst, alpha=alpha, theta=theta)


# -- enumeration -------------------------------------------------------------


def enumerate_ladder_objects(
    rc: ReedyCategory,
    variant: LadderVariant,
    max_len: int,
    cap: int = 200_000,
) -> list[LadderObject]:
    """All chains of length <= max_len in the variant, canonically sorted.

    STRICT is length-complete once max_len >= |Ob C| - 1: conservative minus
    chains strictly descend in degree.
    """
    cat = rc.cat
    if variant is LadderVariant.ALL:
        pool = list(cat.morphisms())
    else:
        pool = sorted(rc.minus)
    if variant is LadderVariant.STRICT:
        pool = [m for m in pool if not cat.is_identity(m)]
    results: list[LadderObject] = [
        LadderObject.of_object(rc, x) for x in cat.objects()
    ]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        new_frontier = []
        for chain in frontier:
            for m in pool:
                if chain and cat.mor_src[m] != cat.mor_dst[chain[-1]]:
                    continue
                longer = chain + (m,)
                new_frontier.append(longer)
                results.append(LadderObject.of_chain(rc, longer))
                if len(results) > cap:
                    raise SizeLimitExceeded(
                        f"ladder object enumeration exceeded {cap}"
                    )
        frontier = new_frontier
        if not frontier:
            break
    results.sort(key=LadderObject.sort_key)
    return results


def enumerate_ladder_homs(
    rc: ReedyCategory,
    variant: LadderVariant,
    a: LadderObject,
    b: LadderObject,
) -> list[LadderMorphism]:
    """The complete hom-set from a to b, canonically sorted."""
    cat = rc.cat
    out: list[LadderMorphism] = []
    for values in monotone_maps(a.n, b.n):
        alpha = SimplexMor(a.n, b.n, values)
        if variant is LadderVariant.STRICT and not alpha.is_injective:
            continue
        comp_choices = []
        for i in range(a.n + 1):
            hom = cat.hom(a.obj(i), b.obj(alpha(i)))
            if variant in (LadderVariant.MP, LadderVariant.STRICT):
                hom = tuple(t for t in hom if t in rc.plus)
            if not hom:
                comp_choices = None
                break
            comp_choices.append(hom)
        if comp_choices is None:
            continue
        for theta in itertools.product(*comp_choices):
            cand = LadderMorphism(src=a, dst=b, alpha=alpha, theta=theta)
            if not cand.validate(variant):
                out.append(cand)
    out.sort(key=lambda m: (m.alpha.values, m.theta))
    return out


# -- the hom-poset ------------------------------------------------------------


def hom_leq(m1: LadderMorphism, m2: LadderMorphism) -> bool:
    """Pointwise order: alpha1 <= alpha2 and theta2 factors theta1 through the chain."""
    if m1.src != m2.src or m1.dst != m2.dst:
        raise NotParallel("hom_leq requires a parallel pair")
    if not m1.alpha.leq(m2.alpha):
        return False
    cat = m1.rc.cat
    for i in range(m1.src.n + 1):
        step = m1.dst.chain_map(m1.alpha(i), m2.alpha(i))
        if cat.compose(step, m1.theta[i]) != m2.theta[i]:
            return False
    return True


def up_max(m: LadderMorphism, variant: LadderVariant) -> LadderMorphism:
    """The maximum of the upward interval above m.

    For MP/STRICT, alpha'(i) is the largest k with the chain-composite pushed
    component still in plus; for ALL it is the constant-top map.
    """
    cat = m.rc.cat
    n = m.dst.n
    if variant is LadderVariant.ALL:
        alpha_values = tuple(n for _ in range(m.src.n + 1))
    else:
        values = []
        for i in range(m.src.n + 1):
            best = m.alpha(i)
            for k in range(m.alpha(i), n + 1):
                pushed = cat.compose(m.dst.chain_map(m.alpha(i), k), m.theta[i])
                if pushed in m.rc.plus:
                    best = k
            values.append(best)
        alpha_values = tuple(values)
    alpha = SimplexMor(m.src.n, n, alpha_values)
    theta = tuple(
        cat.compose(m.dst.chain_map(m.alpha(i), alpha(i)), m.theta[i])
        for i in range(m.src.n + 1)
    )
    return LadderMorphism(src=m.src, dst=m.dst, alpha=alpha, theta=theta)


def are_equivalent(
    m1: LadderMorphism, m2: LadderMorphism, variant: LadderVariant
) -> bool:
    """Same equivalence class iff the upward-interval maxima coincide."""
    if m1.src != m2.src or m1.dst != m2.dst:
        raise NotParallel("are_equivalent requires a parallel pair")
    return up_max(m1, variant) == up_max(m2, variant)


@dataclass(frozen=True)
class IntervalCheck:
    ok: bool
    upward_size: int
    interval_size: int
    detail: str = ""


def upward_interval_check(
    m: LadderMorphism, variant: LadderVariant
) -> IntervalCheck:
    """Verify pr: (upward interval of m) -> [alpha, alpha'] is an order isomorphism."""
    hom = enumerate_ladder_homs(m.rc, variant, m.src, m.dst)
    ups = [x for x in hom if hom_leq(m, x)]
    top = up_max(m, variant)
    lo, hi = m.alpha.values, top.alpha.values
    interval = [
        values
        for values in monotone_maps(m.src.n, m.dst.n)
        if all(a <= v <= b for a, v, b in zip(lo, values, hi))
    ]
    projected = sorted(x.alpha.values for x in ups)
    if projected != sorted(interval):
        return IntervalCheck(False, len(ups), len(interval), "projection not bijective")
    # order preserved and reflected: m1 <= m2 iff alpha1 <= alpha2 pointwise
    for m1 in ups:
        for m2 in ups:
            le_hom = hom_leq(m1, m2)
            le_alpha = m1.alpha.leq(m2.alpha)
            if le_hom != le_alpha:
                return IntervalCheck(
                    False, len(ups), len(interval), "order not reflected"
                )
    return IntervalCheck(True, len(ups), len(interval))


# -- the Reedy structure on the MP ladder -------------------------------------


class GammaClass(enum.Enum):
    GAMMA_MINUS = "gamma_minus"
    GAMMA_PLUS = "gamma_plus"
    NEITHER = "neither"


def gamma_classify(m: LadderMorphism) -> tuple[GammaClass, bool]:
    """Classify within the MP ladder Reedy structure; second flag marks identities.

    Members of the degeneracy part are exactly (sigma, identity components)
    with sigma surjective; members of the direct part have injective alpha.
    Identities are in both and report as (GAMMA_PLUS, True).
    """
    cat = m.rc.cat
    if m.is_identity():
        return GammaClass.GAMMA_PLUS, True
    if m.alpha.is_injective:
        return GammaClass.GAMMA_PLUS, False
    if m.alpha.is_surjective and all(
        m.theta[i] == cat.identity[m.src.obj(i)] for i in range(m.src.n + 1)
    ):
        # also requires the source chain to be the reindexed target chain
        ok = all(
            m.src.obj(i) == m.dst.obj(m.alpha(i)) for i in range(m.src.n + 1)
        )
        if ok:
            return GammaClass.GAMMA_MINUS, False
    return GammaClass.NEITHER, False


def in_gamma_minus(m: LadderMorphism) -> bool:
    tag, is_id = gamma_classify(m)
    return tag is GammaClass.GAMMA_MINUS or is_id


def in_gamma_plus(m: LadderMorphism) -> bool:
    tag, _ = gamma_classify(m)
    return tag is GammaClass.GAMMA_PLUS


def gamma_factorize(m: LadderMorphism) -> tuple[LadderMorphism, LadderMorphism]:
    """Unique (degeneracy, direct) factorization of an MP ladder morphism.

    Factor alpha through its image, take the largest section of the surjective
    part, and reindex the source chain and components along it.
    """
    cat = m.rc.cat
    surj, inj = image_factorization(m.alpha)
    eps = largest_section(surj)
    # middle chain X' = X ∘ eps: entries are composites of the source chain
    l = surj.n
    if l == 0:
        mid = LadderObject.of_object(m.rc, m.src.obj(eps(0)))
    else:
        entries = tuple(m.src.chain_map(eps(i), eps(i + 1)) for i in range(l))
        mid = LadderObject.of_chain(m.rc, entries)
    theta_prime = tuple(m.theta[eps(i)] for i in range(l + 1))
    m_minus = LadderMorphism(
        src=m.src,
        dst=mid,
        alpha=surj,
        theta=tuple(cat.identity[m.src.obj(i)] for i in range(m.src.n + 1)),
    )
    m_plus = LadderMorphism(src=mid, dst=m.dst, alpha=inj, theta=theta_prime)
    assert ladder_compose(m_plus, m_minus) == m, "factorization does not recompose"
    return m_minus, m_plus


def gamma_split_idempotent(
    e: LadderMorphism,
) -> tuple[LadderMorphism, LadderMorphism]:
    """Split an idempotent MP ladder morphism as (degeneracy, direct) with section."""
    from .errors import NotIdempotent

    if ladder_compose(e, e) != e:
        raise NotIdempotent("ladder morphism is not idempotent")
    s, d = gamma_factorize(e)
    back = ladder_compose(s, d)
    assert back == ladder_identity(s.dst), "idempotent splitting fails section law"
    return s, d


# -- materialization -----------------------------------------------------------


@dataclass(frozen=True)
class MaterializedLadder:
    """A ladder category realized as a FinCategory with decode tables."""

    rc: ReedyCategory
    variant: LadderVariant
    max_len: int
    cat: FinCategory
    objects: tuple[LadderObject, ...]
    morphisms: tuple[LadderMorphism, ...]

    def obj_id(self, obj: LadderObject) -> int:
        return self._obj_index()[obj]

    def mor_id(self, m: LadderMorphism) -> int:
        return self._mor_index()[m]

    def _obj_index(self):
        if not hasattr(self, "_obj_idx"):
            object.__setattr__(
                self, "_obj_idx", {o: i for i, o in enumerate(self.objects)}
            )
        return self._obj_idx

    def _mor_index(self):
        if not hasattr(self, "_mor_idx"):
            object.__setattr__(
                self, "_mor_idx", {m: i for i, m in enumerate(self.morphisms)}
            )
        return self._mor_idx


def materialize_ladder(
    rc: ReedyCategory,
    variant: LadderVariant,
    max_len: int,
    cap: int = 200_000,
) -> MaterializedLadder:
    """Realize the bounded ladder category as integer tables."""
    objs = enumerate_ladder_objects(rc, variant, max_len, cap=cap)
    morphisms: list[LadderMorphism] = []
    for a in objs:
        for b in objs:
            morphisms.extend(enumerate_ladder_homs(rc, variant, a, b))
            if len(morphisms) > cap:
                raise SizeLimitExceeded(f"ladder morphism count exceeds {cap}")
    obj_index = {o: i for i, o in enumerate(objs)}
    morphisms.sort(
        key=lambda m: (obj_index[m.src], obj_index[m.dst], m.alpha.values, m.theta)
    )
    mor_index = {m: i for i, m in enumerate(morphisms)}
    mor_rows = [
        (obj_index[m.src], obj_index[m.dst], m.label()) for m in morphisms
    ]
    identity = tuple(
        mor_index[ladder_identity(o)] for o in objs
    )
    compose: dict[tuple[int, int], int] = {}
    by_src: dict[int, list[int]] = {}
    for gi, g in enumerate(morphisms):
        by_src.setdefault(obj_index[g.src], []).append(gi)
    for fi, f in enumerate(morphisms):
        for gi in by_src.get(obj_index[f.dst], ()):
            compose[(gi, fi)] = mor_index[ladder_compose(morphisms[gi], f)]
    cat = FinCategory.build(
        tuple(o.label() for o in objs),
        mor_rows,
        identity,
        compose,
        name=f"Ladder[{variant.value}]({rc.cat.name},{max_len})",
    )
    return MaterializedLadder(
        rc=rc,
        variant=variant,
        max_len=max_len,
        cat=cat,
        objects=tuple(objs),
        morphisms=tuple(morphisms),
    )
