"""The comparison maps between the nerve of the base and the nerve of its
replacement, built from the functorial Reedy factorization.

The factorization gadget (Phi, Q, eta) is read off the reedy_factorize tables,
never recomputed ad hoc. The four maps are evaluated tag-locally: a tagged
cell of a Kan-extended complex is sent to a concrete nerve chain, so the
diagram equalities can be checked cell-for-cell without materializing the
quotient complexes. Small variants are additionally materialized with the
union-find audit.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from ..down import (
    DownCategory,
    build_down,
    build_down_star,
    last_functor,
    last_of_ladder,
    normalize_object,
    weq_set,
)
from ..errors import SizeLimitExceeded
from ..fincat import FinCategory
from ..ladder import (
    LadderMorphism,
    LadderObject,
    LadderVariant,
    MaterializedLadder,
    ladder_compose,
    ladder_identity,
    materialize_ladder,
)
from ..reedy import ReedyCategory, SimplexMor, reedy_factorize
from .base import TruncatedSSet, nerve_truncated
from .connect import (
    dcp_to_dcpi_label,
    dcp_to_esd_label,
    dcpi_to_esdi_label,
    esd_to_esdp_label,
    esdi_to_esdpi_label,
    esdp_to_esdpi_label,
)
from .kan import (
    DcpCosimplicial,
    DcpiCosimplicial,
    EsdiPrimeCosimplicial,
    EsdPrimeCosimplicial,
)


class GammaVariant(enum.Enum):
    MP = "mp"
    DOWN_STAR = "down_star"
    DOWN = "down"


@dataclass
class FactorizationGadget:
    """Phi / Q / eta from the Reedy factorization tables."""

    rc: ReedyCategory
    phi: dict[int, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        for u in self.rc.cat.morphisms():
            self.phi[u] = reedy_factorize(self.rc, u)

    def q_obj(self, u: int) -> int:
        return self.rc.cat.mor_dst[self.phi[u][0]]

    def eta(self, u: int) -> int:
        return self.phi[u][1]

    def q_mor(self, f: int, g: int, u: int, v: int) -> int:
        """The connecting morphism Q(u) -> Q(v) of the square v∘f = g∘u,
        built from the factorizations of the two composites."""
        cat = self.rc.cat
        assert cat.compose(v, f) == cat.compose(g, u)
        s1, d1 = self.phi[cat.compose(self.phi[v][0], f)]
        s2, d2 = self.phi[cat.compose(g, self.eta(u))]
        w = cat.compose(d1, s2)
        # the two defining equations of the connecting morphism
        assert cat.compose(w, self.phi[u][0]) == cat.compose(self.phi[v][0], f)
        assert cat.compose(self.eta(v), w) == cat.compose(g, self.eta(u))
        return w


@dataclass
class ComparisonContext:
    """Everything needed to evaluate D, D^I, E, E^I on tagged cells."""

    rc: ReedyCategory
    variant: GammaVariant
    d: int
    alpha_bound: int
    gadget: FactorizationGadget
    mp: MaterializedLadder
    down_star: DownCategory
    down: DownCategory
    gamma_cat: FinCategory  # the category whose nerve is T
    S: TruncatedSSet
    T: TruncatedSSet
    last_table: tuple[int, ...]  # morphisms of gamma_cat -> morphisms of C
    last_objects: tuple[int, ...]
    weq: frozenset[int]

    # -- encoding of ladder morphisms into gamma_cat ----------------------

    def encode_mor(self, m: LadderMorphism) -> int:
        hit = self._encode_cache.get(m)
        if hit is not None:
            return hit
        if self.variant is GammaVariant.MP:
            out = self.mp.mor_id(m)
        elif self.variant is GammaVariant.DOWN_STAR:
            out = self.down_star.encode(m)
        else:
            out = self._retract_mor(self.down_star.encode(m))
        self._encode_cache[m] = out
        return out

    def encode_obj(self, obj: LadderObject) -> int:
        if self.variant is GammaVariant.MP:
            return self.mp.obj_id(obj)
        if self.variant is GammaVariant.DOWN_STAR:
            return self.down_star.object_id(obj)
        strict_obj, _ = self._normal[self.down_star.object_id(obj)]
        return self.down.object_id(strict_obj)

    # -- decoding of gamma_cat morphisms back to ladder form --------------

    def decode_mor(self, c: int) -> LadderMorphism:
        if self.variant is GammaVariant.MP:
            return self.mp.morphisms[c]
        if self.variant is GammaVariant.DOWN_STAR:
            return self.down_star.decode(c)
        return self.down.decode(c)

    def __post_init__(self):
        if self.variant is GammaVariant.DOWN:
            self._normal = {
                i: normalize_object(self.down_star, obj)
                for i, obj in enumerate(self.down_star.ladder.objects)
            }
        self._encode_cache: dict = {}
        self._eval_cache: dict = {}

    def _retract_mor(self, ds_class: int) -> int:
        """r: Down_* -> Down by conjugating with the normalization isos."""
        ds = self.down_star
        a = ds.cat.mor_src[ds_class]
        b = ds.cat.mor_dst[ds_class]
        _, (to_b, from_b) = self._normal[b]
        _, (to_a, from_a) = self._normal[a]
        w = ds.cat.compose(to_b, ds.cat.compose(ds_class, from_a))
        rep = ds.decode(w)
        return self.down.encode(rep)


def _last_functor_chain(ctx: ComparisonContext, phi_cell) -> tuple:
    """lambda of a T-cell: the nerve cell of S under last."""
    tag, payload = phi_cell
    if tag == "o":
        return ("o", ctx.last_objects[payload])
    return ("c", tuple(ctx.last_table[m] for m in payload))


class _Chain:
    """A functor [n] -> gamma_cat given by a nerve cell, with composites."""

    def __init__(self, ctx: ComparisonContext, phi_cell):
        tag, payload = phi_cell
        cat = ctx.gamma_cat
        if tag == "o":
            self.objs = (payload,)
            self.steps = ()
        else:
            self.steps = payload
            objs = [cat.mor_src[payload[0]]]
            for m in payload:
                objs.append(cat.mor_dst[m])
            self.objs = tuple(objs)
        self.cat = cat

    def obj(self, i: int) -> int:
        return self.objs[i]

    def mor(self, a: int, b: int) -> int:
        m = self.cat.identity[self.objs[a]]
        for t in range(a, b):
            m = self.cat.compose(self.steps[t], m)
        return m


class _BaseChain:
    """A functor [n] -> C given by a nerve cell of S."""

    def __init__(self, rc: ReedyCategory, phi_cell):
        tag, payload = phi_cell
        cat = rc.cat
        if tag == "o":
            self.objs = (payload,)
            self.steps = ()
        else:
            self.steps = payload
            objs = [cat.mor_src[payload[0]]]
            for m in payload:
                objs.append(cat.mor_dst[m])
            self.objs = tuple(objs)
        self.cat = cat

    def obj(self, i: int) -> int:
        return self.objs[i]

    def mor(self, a: int, b: int) -> int:
        m = self.cat.identity[self.objs[a]]
        for t in range(a, b):
            m = self.cat.compose(self.steps[t], m)
        return m


def build_comparison_context(
    rc: ReedyCategory,
    variant: GammaVariant,
    d: int,
    alpha_bound: int | None = None,
    max_len: int | None = None,
    nerve_dim: int | None = None,
) -> ComparisonContext:
    alpha = alpha_bound if alpha_bound is not None else d
    L = max_len if max_len is not None else max(rc.cat.n_objects - 1, alpha, 1)
    gadget = FactorizationGadget(rc)
    mp = materialize_ladder(rc, LadderVariant.MP, L)
    down_star = build_down_star(rc, max_len=L)
    down = build_down(rc)
    if variant is GammaVariant.MP:
        gamma_cat = mp.cat
        lf = last_functor(rc, mp)
    elif variant is GammaVariant.DOWN_STAR:
        gamma_cat = down_star.cat
        lf = last_functor(rc, down_star)
    else:
        gamma_cat = down.cat
        lf = last_functor(rc, down)
    if nerve_dim is None:
        # deep nerves are only needed where the quotient complexes get
        # materialized (the Down variant); tag-local sweeps cap at d anyway
        nerve_dim = 2 * d + 1 if variant is GammaVariant.DOWN else d + 1
    S = nerve_truncated(rc.cat, max(d, nerve_dim))
    T = nerve_truncated(gamma_cat, max(d, nerve_dim))
    w = weq_set(lf)
    return ComparisonContext(
        rc=rc,
        variant=variant,
        d=d,
        alpha_bound=alpha,
        gadget=gadget,
        mp=mp,
        down_star=down_star,
        down=down,
        gamma_cat=gamma_cat,
        S=S,
        T=T,
        last_table=lf.functor.on_morphisms,
        last_objects=lf.functor.on_objects,
        weq=w.morphisms,
    )


# -- the four evaluators -------------------------------------------------------


def _d_object(ctx: ComparisonContext, base: _BaseChain, x: int, alpha: tuple) -> LadderObject:
    """D_phi(x, alpha) = the chain of factorization midpoints."""
    rc = ctx.rc
    g = ctx.gadget
    m = len(alpha) - 1
    if m == 0:
        return LadderObject.of_object(rc, g.q_obj(base.mor(x, alpha[0])))
    entries = []
    for i in range(m):
        u = base.mor(x, alpha[i])
        v = base.mor(x, alpha[i + 1])
        gg = base.mor(alpha[i], alpha[i + 1])
        entries.append(g.q_mor(rc.cat.identity[base.obj(x)], gg, u, v))
    return LadderObject.of_chain(rc, tuple(entries))


def _d_step(
    ctx: ComparisonContext,
    base: _BaseChain,
    src: tuple[int, tuple],
    dst: tuple[int, tuple],
    beta: tuple,
) -> LadderMorphism:
    """D_phi on a morphism (beta) of the bounded Dcp category."""
    rc = ctx.rc
    g = ctx.gadget
    x, alpha = src
    x2, alpha2 = dst
    src_obj = _d_object(ctx, base, x, alpha)
    dst_obj = _d_object(ctx, base, x2, alpha2)
    f = base.mor(x, x2)
    theta = []
    for i in range(len(alpha)):
        u = base.mor(x, alpha[i])
        v = base.mor(x2, alpha2[beta[i]])
        theta.append(g.q_mor(f, rc.cat.identity[base.obj(alpha[i])], u, v))
    return LadderMorphism(
        src=src_obj,
        dst=dst_obj,
        alpha=SimplexMor(len(alpha) - 1, len(alpha2) - 1, beta),
        theta=tuple(theta),
    )


def eval_D(ctx: ComparisonContext, n: int, phi_cell, label) -> tuple:
    """D on a tagged cell of Dcp S: a nerve cell of T."""
    cache = ctx._eval_cache
    objs_chain, betas = label
    if not betas:
        key = ("D0", phi_cell, objs_chain[0])
        hit = cache.get(key)
        if hit is None:
            base = _BaseChain(ctx.rc, phi_cell)
            hit = ctx.encode_obj(_d_object(ctx, base, *objs_chain[0]))
            cache[key] = hit
        return ("o", hit)
    steps = []
    base = None
    for t in range(len(betas)):
        key = ("D1", phi_cell, objs_chain[t], objs_chain[t + 1], betas[t])
        hit = cache.get(key)
        if hit is None:
            if base is None:
                base = _BaseChain(ctx.rc, phi_cell)
            hit = ctx.encode_mor(
                _d_step(ctx, base, objs_chain[t], objs_chain[t + 1], betas[t])
            )
            cache[key] = hit
        steps.append(hit)
    return ("c", tuple(steps))


def _lift_chain(ctx: ComparisonContext, chain: _Chain) -> list[LadderMorphism]:
    """Entrywise lift of a T-chain to ladder morphisms (decode on classes)."""
    return [ctx.decode_mor(m) for m in chain.steps]


class _LiftedChain:
    """A functor [n] -> MP ladder lifted from a T-cell, with composites."""

    def __init__(self, ctx: ComparisonContext, phi_cell):
        tag, payload = phi_cell
        if tag == "o":
            if ctx.variant is GammaVariant.MP:
                obj = ctx.mp.objects[payload]
            elif ctx.variant is GammaVariant.DOWN_STAR:
                obj = ctx.down_star.ladder.objects[payload]
            else:
                obj = ctx.down.ladder.objects[payload]
            self.objs = (obj,)
            self.steps: tuple[LadderMorphism, ...] = ()
        else:
            steps = tuple(ctx.decode_mor(m) for m in payload)
            self.steps = steps
            self.objs = (steps[0].src,) + tuple(s.dst for s in steps)

    def obj(self, i: int) -> LadderObject:
        return self.objs[i]

    def mor(self, a: int, b: int) -> LadderMorphism:
        m = ladder_identity(self.objs[a])
        for t in range(a, b):
            m = ladder_compose(self.steps[t], m)
        return m


def eval_E(ctx: ComparisonContext, n: int, phi_cell, label) -> tuple:
    """E on a tagged cell of ESd' S: a nerve cell of S."""
    cache = ctx._eval_cache
    g = ctx.gadget
    pairs = label
    if len(pairs) == 1:
        key = ("E0", phi_cell, pairs[0])
        hit = cache.get(key)
        if hit is None:
            base = _BaseChain(ctx.rc, phi_cell)
            hit = g.q_obj(base.mor(*pairs[0]))
            cache[key] = hit
        return ("o", hit)
    steps = []
    base = None
    for t in range(len(pairs) - 1):
        key = ("E1", phi_cell, pairs[t], pairs[t + 1])
        hit = cache.get(key)
        if hit is None:
            if base is None:
                base = _BaseChain(ctx.rc, phi_cell)
            (a1, b1), (a2, b2) = pairs[t], pairs[t + 1]
            u = base.mor(a1, b1)
            v = base.mor(a2, b2)
            hit = g.q_mor(base.mor(a1, a2), base.mor(b1, b2), u, v)
            cache[key] = hit
        steps.append(hit)
    return ("c", tuple(steps))


def eval_EI(ctx: ComparisonContext, n: int, phi_cell, label) -> tuple:
    """E^I on a tagged cell of ESdI' T: a nerve cell of S."""
    cache = ctx._eval_cache
    g = ctx.gadget

    def proj(element) -> tuple[int, int]:
        tag, payload = element
        if tag == "p":
            return payload
        return (payload, payload)

    holder: list = [None]

    def get_chain() -> _Chain:
        if holder[0] is None:
            holder[0] = _Chain(ctx, phi_cell)
        return holder[0]

    pairs = [proj(e) for e in label]
    if len(pairs) == 1:
        key = ("EI0", phi_cell, pairs[0])
        hit = cache.get(key)
        if hit is None:
            hit = g.q_obj(ctx.last_table[get_chain().mor(*pairs[0])])
            cache[key] = hit
        return ("o", hit)
    steps = []
    for t in range(len(pairs) - 1):
        key = ("EI1", phi_cell, pairs[t], pairs[t + 1])
        hit = cache.get(key)
        if hit is None:
            chain = get_chain()
            (a1, b1), (a2, b2) = pairs[t], pairs[t + 1]
            f = ctx.last_table[chain.mor(a1, a2)]
            gg = ctx.last_table[chain.mor(b1, b2)]
            u = ctx.last_table[chain.mor(a1, b1)]
            v = ctx.last_table[chain.mor(a2, b2)]
            hit = g.q_mor(f, gg, u, v)
            cache[key] = hit
        steps.append(hit)
    return ("c", tuple(steps))


def _lambda_base_chain(ctx: ComparisonContext, phi_cell) -> _BaseChain:
    """last ∘ phi as a base chain (for D inside D^I)."""
    return _BaseChain(ctx.rc, _last_functor_chain(ctx, phi_cell))


def _di_cross(
    ctx: ComparisonContext,
    lifted: _LiftedChain,
    lambda_base: _BaseChain,
    src: tuple[int, tuple],
    y: int,
) -> LadderMorphism:
    """The unique morphism D_{lambda phi}(x, alpha) -> phi(y) in the ladder."""
    rc = ctx.rc
    g = ctx.gadget
    x, alpha = src
    src_obj = _d_object(ctx, lambda_base, x, alpha)
    dst_obj = lifted.obj(y)
    beta_vals = []
    theta = []
    for i in range(len(alpha)):
        to_y = lifted.mor(alpha[i], y)  # phi(alpha(i)) -> phi(y) in the ladder
        m_ai = lifted.obj(alpha[i]).n
        beta_vals.append(to_y.alpha(m_ai))
        u = lambda_base.mor(x, alpha[i])
        theta.append(rc.cat.compose(to_y.theta[m_ai], g.eta(u)))
    return LadderMorphism(
        src=src_obj,
        dst=dst_obj,
        alpha=SimplexMor(len(alpha) - 1, dst_obj.n, tuple(beta_vals)),
        theta=tuple(theta),
    )


def eval_DI(ctx: ComparisonContext, n: int, phi_cell, label) -> tuple:
    """D^I on a tagged cell of DcpI T: a nerve cell of T."""
    cache = ctx._eval_cache
    objs_chain, betas = label
    helpers: list = [None, None]  # lazy (lifted, lambda_base)

    def get_helpers():
        if helpers[0] is None:
            helpers[0] = _LiftedChain(ctx, phi_cell)
            helpers[1] = _lambda_base_chain(ctx, phi_cell)
        return helpers

    def eval_obj(o) -> int:
        key = ("DI0", phi_cell, o)
        hit = cache.get(key)
        if hit is not None:
            return hit
        lifted, lambda_base = get_helpers()
        tag, payload = o
        if tag == "d":
            hit = ctx.encode_obj(_d_object(ctx, lambda_base, *payload))
        else:
            hit = ctx.encode_obj(lifted.obj(payload))
        cache[key] = hit
        return hit

    if not betas:
        return ("o", eval_obj(objs_chain[0]))
    steps = []
    for t in range(len(betas)):
        key = ("DI1", phi_cell, objs_chain[t], objs_chain[t + 1], betas[t])
        hit = cache.get(key)
        if hit is None:
            lifted, lambda_base = get_helpers()
            (tag_a, pa), (tag_b, pb) = objs_chain[t], objs_chain[t + 1]
            if tag_a == "d" and tag_b == "d":
                hit = ctx.encode_mor(_d_step(ctx, lambda_base, pa, pb, betas[t]))
            elif tag_a == "d" and tag_b == "v":
                hit = ctx.encode_mor(_di_cross(ctx, lifted, lambda_base, pa, pb))
            else:
                hit = ctx.encode_mor(lifted.mor(pa, pb))
            cache[key] = hit
        steps.append(hit)
    return ("c", tuple(steps))
