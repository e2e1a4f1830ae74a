"""Desk-scale certification of the 1-localization results.

The proofs are themselves algorithms: the strict localization of the quotient
is evaluated on class maxima, the factor-through-last construction assembles
a functor from its plus and minus restrictions, and whisker lifts restrict to
length-0 chains. Each construction returns a certificate that is re-validated
by table scans, and exhaustive probe enumerations guard against drift.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .down import DownCategory, LastFunctor, WeqSet, last_functor, last_of_ladder, weq_set
from .errors import (
    DoesNotRespectEquivalence,
    NotNatural,
    NotWeqInverting,
    SizeLimitExceeded,
)
from .fincat import (
    FinCategory,
    FunctorData,
    NatTransData,
    enumerate_functors,
    enumerate_natural_transformations,
    find_natural_isos,
    identity_functor,
)
from .ladder import (
    LadderMorphism,
    LadderObject,
    LadderVariant,
    MaterializedLadder,
    hom_leq,
    in_gamma_minus,
    ladder_compose,
    materialize_ladder,
    up_max,
)
from .reedy import ReedyCategory, SimplexMor, delta, sigma, iota, simplex_identity


def inverts_weq(f: FunctorData, w: WeqSet) -> bool:
    """True iff every weq image has a two-sided inverse in the target."""
    return all(f.dst.is_iso(f.on_morphisms[m]) for m in w.morphisms)


# -- strict localization of the quotient --------------------------------------


def gamma_minus_degeneracies(ladder: MaterializedLadder) -> list[int]:
    """Morphism ids of the degeneracy class (sigma, identity components)."""
    return [i for i, m in enumerate(ladder.morphisms) if in_gamma_minus(m)]


def factor_strict_quotient(dsc: DownCategory, f: FunctorData) -> FunctorData:
    """The unique H with H ∘ q = f, built by evaluating f on class maxima.

    Precondition: f inverts the degeneracy class. The respect check replays
    the interpolation argument: for each comparable parallel pair the functor
    values are forced equal through the interpolating chain object, every step
    using that the two sections of a degeneracy have equal images.
    """
    ladder = dsc.ladder
    assert f.src == ladder.cat
    target = f.dst
    functor_report = f.validate()
    if not functor_report.ok:
        raise DoesNotRespectEquivalence(
            "input table is not a functor", pair=(functor_report.violations[0],)
        )
    for i in gamma_minus_degeneracies(ladder):
        if not target.is_iso(f.on_morphisms[i]):
            raise NotWeqInverting(
                "functor does not invert the degeneracy class",
                witness=ladder.cat.mor_labels[i],
            )
    _check_respects_equivalence(ladder, f)
    # H on classes via maxima; H on objects equals f on objects
    on_morphisms = tuple(
        f.on_morphisms[ladder.mor_id(dsc.decode(c))] for c in dsc.cat.morphisms()
    )
    H = FunctorData(
        src=dsc.cat,
        dst=target,
        on_objects=f.on_objects,
        on_morphisms=on_morphisms,
        name=f"{f.name}/~",
    )
    # literal table equality H ∘ q = f
    for i in ladder.cat.morphisms():
        if H.on_morphisms[dsc.projection.on_morphisms[i]] != f.on_morphisms[i]:
            raise DoesNotRespectEquivalence(
                "H∘q differs from f", pair=(ladder.cat.mor_labels[i],)
            )
    return H


def _check_respects_equivalence(ladder: MaterializedLadder, f: FunctorData) -> None:
    """Interpolation-argument respect check, raising with a violating pair."""
    for i, hi in enumerate(ladder.morphisms):
        for j, lo in enumerate(ladder.morphisms):
            if hi.src != lo.src or hi.dst != lo.dst or i == j:
                continue
            if not hom_leq(lo, hi):
                continue
            if lo.src.n + 1 <= ladder.max_len:
                _interpolation_steps(ladder, f, lo, hi)
            if f.on_morphisms[i] != f.on_morphisms[j]:
                raise DoesNotRespectEquivalence(
                    "functor distinguishes a comparable parallel pair",
                    pair=(ladder.cat.mor_labels[j], ladder.cat.mor_labels[i]),
                )


def _interpolation_steps(
    ladder: MaterializedLadder,
    f: FunctorData,
    lo: LadderMorphism,
    hi: LadderMorphism,
) -> None:
    """Replay the proof that f(lo) = f(hi): each step factors through the
    degenerate chain, whose two section images under f agree."""
    rc = ladder.rc
    cat = rc.cat
    m = lo.src.n
    target = f.dst

    def mk(alpha_vals, theta, src, dst):
        return LadderMorphism(
            src=src, dst=dst, alpha=SimplexMor(src.n, dst.n, tuple(alpha_vals)), theta=tuple(theta)
        )

    seq = []
    for k in range(m + 2):
        vals = [lo.alpha(i) if i < k else hi.alpha(i) for i in range(m + 1)]
        thetas = [lo.theta[i] if i < k else hi.theta[i] for i in range(m + 1)]
        seq.append(mk(vals, thetas, lo.src, lo.dst))
    assert seq[0] == hi and seq[-1] == lo
    X = lo.src
    for k in range(m + 1):
        # degenerate chain object ([m+1], X∘sigma^m_k)
        sk = sigma(m, k)
        if m == 0:
            entries = (cat.identity[X.obj(0)],)
            big = LadderObject.of_chain(rc, entries)
        else:
            entries = tuple(
                X.chain_map(sk(i), sk(i + 1)) for i in range(m + 1)
            )
            big = LadderObject.of_chain(rc, entries)
        degen = mk(sk.values, [cat.identity[X.obj(sk(i))] for i in range(m + 2)], big, X)
        d_k = mk(
            delta(m + 1, k).values,
            [cat.identity[X.obj(i)] for i in range(m + 1)],
            X,
            big,
        )
        d_k1 = mk(
            delta(m + 1, k + 1).values,
            [cat.identity[X.obj(i)] for i in range(m + 1)],
            X,
            big,
        )
        assert ladder_compose(degen, d_k).is_identity()
        assert ladder_compose(degen, d_k1).is_identity()
        fd = f.on_morphisms[ladder.mor_id(degen)]
        # both sections map to the (unique) inverse of the degeneracy image
        fk = f.on_morphisms[ladder.mor_id(d_k)]
        fk1 = f.on_morphisms[ladder.mor_id(d_k1)]
        if not (
            target.try_compose(fd, fk) == target.identity[f.on_objects[ladder.obj_id(X)]]
            and target.try_compose(fd, fk1)
            == target.identity[f.on_objects[ladder.obj_id(X)]]
        ):
            raise NotWeqInverting(
                "degeneracy image admits no common section image",
                witness=ladder.cat.mor_labels[ladder.mor_id(degen)],
            )
        if fk != fk1:
            # sections of an isomorphism are equal; failing here means f does
            # not invert the degeneracy after all
            raise NotWeqInverting(
                "the two sections of a degeneracy have distinct images",
                witness=ladder.cat.mor_labels[ladder.mor_id(degen)],
            )
        # tilde morphism gluing seq[k] and seq[k+1] through the big chain
        tilde_vals = [lo.alpha(i) if i <= k else hi.alpha(i - 1) for i in range(m + 2)]
        tilde_theta = [lo.theta[i] if i <= k else hi.theta[i - 1] for i in range(m + 2)]
        tilde = mk(tilde_vals, tilde_theta, big, lo.dst)
        assert ladder_compose(tilde, d_k) == seq[k]
        assert ladder_compose(tilde, d_k1) == seq[k + 1]
        ft = f.on_morphisms[ladder.mor_id(tilde)]
        assert target.try_compose(ft, fk) == f.on_morphisms[ladder.mor_id(seq[k])]
        assert target.try_compose(ft, fk1) == f.on_morphisms[ladder.mor_id(seq[k + 1])]
        # fk == fk1 therefore forces the two step values equal


# -- factorization through last -----------------------------------------------


@dataclass(frozen=True)
class FactorizationCertificate:
    lifted: FunctorData  # C -> target
    iso: NatTransData  # lifted ∘ last => original, componentwise invertible

    def validate(self) -> list[str]:
        bad = []
        rep = self.lifted.validate()
        bad += [f"lifted functor: {v}" for v in rep]
        rep = self.iso.validate()
        bad += [f"iso: {v}" for v in rep]
        if not self.iso.is_iso():
            bad.append("iso has a non-invertible component")
        return bad


def factor_through_last(
    dsc: DownCategory, f: FunctorData, w: WeqSet
) -> FactorizationCertificate:
    """Build the lifted functor on C and the natural isomorphism certificate.

    Works on Down(C) or bounded Down_*(C) sources. The lifted functor is
    assembled from its plus restriction (length-0 chains) and minus
    restriction (through the length-1 chain zig-zag), then glued along the
    Reedy factorization of the base.
    """
    if not inverts_weq(f, w):
        witness = next(m for m in w.morphisms if not f.dst.is_iso(f.on_morphisms[m]))
        raise NotWeqInverting(
            "functor does not invert last-weak equivalences",
            witness=f.src.mor_labels[witness],
        )
    rc = dsc.rc
    cat = rc.cat
    target = f.dst

    def class_id(m: LadderMorphism) -> int:
        return dsc.encode(m)

    def obj0(x: int) -> int:
        return dsc.object_id(LadderObject.of_object(rc, x))

    on_objects = tuple(f.on_objects[obj0(x)] for x in cat.objects())

    def lift_plus(d: int) -> int:
        x = cat.mor_src[d]
        src = LadderObject.of_object(rc, x)
        dst = LadderObject.of_object(rc, cat.mor_dst[d])
        m = LadderMorphism(src=src, dst=dst, alpha=simplex_identity(0), theta=(d,))
        return f.on_morphisms[class_id(m)]

    def lift_minus(s: int) -> int:
        x, y = cat.mor_src[s], cat.mor_dst[s]
        if cat.is_identity(s):
            return target.identity[on_objects[x]]
        chain = LadderObject.of_chain(rc, (s,))
        into = LadderMorphism(  # (delta^1_1, id_x): ([0],x) -> ([1],s)
            src=LadderObject.of_object(rc, x),
            dst=chain,
            alpha=SimplexMor(0, 1, (0,)),
            theta=(cat.identity[x],),
        )
        out = LadderMorphism(  # (delta^1_0, id_y): ([0],y) -> ([1],s), a weq
            src=LadderObject.of_object(rc, y),
            dst=chain,
            alpha=SimplexMor(0, 1, (1,)),
            theta=(cat.identity[y],),
        )
        f_out = f.on_morphisms[class_id(out)]
        inv = target.inverse(f_out)
        assert inv is not None, "weq image must be invertible"
        return target.compose(inv, f.on_morphisms[class_id(into)])

    from .reedy import reedy_factorize

    on_morphisms = []
    for u in cat.morphisms():
        s, d = reedy_factorize(rc, u)
        on_morphisms.append(target.compose(lift_plus(d), lift_minus(s)))
    lifted = FunctorData(
        src=cat,
        dst=target,
        on_objects=on_objects,
        on_morphisms=tuple(on_morphisms),
        name=f"~{f.name}",
    )
    # iso component at ([n],X): f of the weq (iota_n, id): ([0],X(n)) -> ([n],X)
    components = []
    for obj in dsc.ladder.objects:
        inc = LadderMorphism(
            src=LadderObject.of_object(rc, obj.obj(obj.n)),
            dst=obj,
            alpha=SimplexMor(0, obj.n, (obj.n,)),
            theta=(cat.identity[obj.obj(obj.n)],),
        )
        components.append(f.on_morphisms[class_id(inc)])
    last_f = last_functor(rc, dsc).functor
    iso = NatTransData(
        source=last_f.then(lifted),
        target=f,
        components=tuple(components),
    )
    return FactorizationCertificate(lifted=lifted, iso=iso)


# -- whisker lifts --------------------------------------------------------------


def whisker_lift(
    dsc: DownCategory,
    f: FunctorData,
    g: FunctorData,
    eps: NatTransData,
) -> NatTransData:
    """The unique lift of eps: f∘last => g∘last along last.

    Components are read off at length-0 chains; naturality of the lift and the
    restriction equation are verified by table scan.
    """
    rc = dsc.rc
    cat = rc.cat
    rep = eps.validate()
    if not rep.ok:
        raise NotNatural("eps is not natural", witness=rep.violations[0])

    def obj0(x: int) -> int:
        return dsc.object_id(LadderObject.of_object(rc, x))

    components = tuple(eps.components[obj0(x)] for x in cat.objects())
    lifted = NatTransData(source=f, target=g, components=components)
    rep = lifted.validate()
    if not rep.ok:
        raise NotNatural("restricted components are not natural", witness=rep.violations[0])
    # restriction equation: lift whiskered by last equals eps
    last_f = last_functor(rc, dsc).functor
    for i in dsc.cat.objects():
        if eps.components[i] != components[last_f.on_objects[i]]:
            raise NotNatural(
                "whisker equation fails", witness=dsc.cat.obj_labels[i]
            )
    return lifted


# -- suite reports ---------------------------------------------------------------


@dataclass
class SuiteReport:
    suite: str
    checks: list[dict] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, witness: str = "", t0: float | None = None):
        entry = {"check": name, "ok": bool(ok)}
        if witness:
            entry["witness"] = witness
        if t0 is not None:
            entry["seconds"] = round(time.perf_counter() - t0, 4)
        self.checks.append(entry)

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "checks": self.checks, **(
            {"meta": self.meta} if self.meta else {}
        )}

    def render(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            mark = "ok " if c["ok"] else "FAIL"
            extra = f"  [{c['witness']}]" if "witness" in c else ""
            lines.append(f"  [{mark}] {c['check']}{extra}")
        return "\n".join(lines)


# -- the counterexample -----------------------------------------------------------


def counterexample_suite() -> SuiteReport:
    """The strict-chain ladder over W3 does not weakly localize through last.

    Builds the explicit functor into the free-parallel-arrow extension, checks
    it is a weq-inverting functor, exhibits the parallel pair it separates, and
    certifies by full enumeration that no factorization up to natural
    isomorphism exists.
    """
    from .corpus import w3, w3_prime
    from .down import build_down

    report = SuiteReport("counterexample")
    t0 = time.perf_counter()
    rc = w3()
    cprime = w3_prime().cat
    strict = materialize_ladder(rc, LadderVariant.STRICT, rc.cat.n_objects - 1)
    H_ID = 6  # id of h inside w3_prime

    incl = {0: 0, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5}  # W3 morphisms into C'

    def F_mor(m: LadderMorphism) -> int:
        if (
            m.src.n == 0
            and m.src.obj(0) == 0
            and m.dst.obj(m.alpha(0)) == 1
            and m.theta[0] == 5  # gf
        ):
            return H_ID
        return incl[last_of_ladder(m)]

    on_objects = tuple(o.obj(o.n) for o in strict.objects)
    on_morphisms = tuple(F_mor(m) for m in strict.morphisms)
    F = FunctorData(
        src=strict.cat, dst=cprime, on_objects=on_objects, on_morphisms=on_morphisms, name="F"
    )
    report.record("F is a functor", F.validate().ok, t0=t0)

    lf = last_functor(rc, strict)
    w = weq_set(lf)
    report.record("F inverts weq", inverts_weq(F, w))

    # the separated parallel pair
    a = LadderObject.of_object(rc, 0)
    b = LadderObject.of_chain(rc, (4,))
    pair = [
        LadderMorphism(src=a, dst=b, alpha=SimplexMor(0, 1, (0,)), theta=(3,)),
        LadderMorphism(src=a, dst=b, alpha=SimplexMor(0, 1, (1,)), theta=(5,)),
    ]
    ids = [strict.mor_id(m) for m in pair]
    vals = [F.on_morphisms[i] for i in ids]
    report.record(
        "F maps the pair to (gf, h), unequal",
        vals == [5, H_ID] and vals[0] != vals[1],
        witness=f"F values {vals}",
    )
    lasts = [lf.functor.on_morphisms[i] for i in ids]
    report.record("last merges the pair", lasts[0] == lasts[1] == 5)

    # exhaustive search: no G: W3 -> C' with G∘last naturally isomorphic to F
    found = []
    for G in enumerate_functors(rc.cat, cprime):
        composite = lf.functor.then(G)
        if find_natural_isos(composite, F):
            found.append(G)
    report.record(
        "no factorization up to natural isomorphism",
        not found,
        witness=f"{len(found)} factorizations found" if found else "",
    )
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 4)
    return report


# -- probe-family weak localization report -----------------------------------------


def default_probes(rc: ReedyCategory) -> list[FinCategory]:
    from .corpus import terminal, walking_iso, w3_prime, w3_with_adjoined_iso

    probes = [terminal(), walking_iso(), rc.cat]
    if rc.cat.name == "W3":
        probes.append(w3_with_adjoined_iso())
        probes.append(w3_prime().cat)
    return probes


def weak_localization_report(
    rc: ReedyCategory,
    probes: list[FinCategory] | None = None,
    cap: int = 2_000_000,
) -> SuiteReport:
    """For each probe and each weq-inverting functor from Down(C): the
    factorization certificate validates and whisker lifts are unique.

    The probe family is a heuristic, not a completeness guarantee.
    """
    from .down import build_down

    report = SuiteReport("weak-localization")
    report.meta["probe_family"] = "heuristic"
    t0 = time.perf_counter()
    dsc = build_down(rc)
    lf = last_functor(rc, dsc)
    w = weq_set(lf)
    if probes is None:
        probes = default_probes(rc)
    for probe in probes:
        functors = enumerate_functors(dsc.cat, probe, cap=cap)
        inverting = [F for F in functors if inverts_weq(F, w)]
        all_ok = True
        witness = ""
        for F in inverting:
            cert = factor_through_last(dsc, F, w)
            bad = cert.validate()
            if bad:
                all_ok = False
                witness = f"{probe.name}: {bad[0]}"
                break
        report.record(
            f"probe {probe.name}: certificates for {len(inverting)} weq-inverting "
            f"functor(s) (of {len(functors)})",
            all_ok,
            witness=witness,
        )
        # whisker uniqueness against full enumeration, on C -> probe pairs
        pairs_checked = 0
        unique_ok = True
        c_functors = enumerate_functors(rc.cat, probe, cap=cap)
        for f_c in c_functors:
            for g_c in c_functors:
                fl = lf.functor.then(f_c)
                gl = lf.functor.then(g_c)
                for eps in enumerate_natural_transformations(fl, gl):
                    lifted = whisker_lift(dsc, f_c, g_c, eps)
                    matches = [
                        t
                        for t in enumerate_natural_transformations(f_c, g_c)
                        if all(
                            eps.components[i]
                            == t.components[lf.functor.on_objects[i]]
                            for i in dsc.cat.objects()
                        )
                    ]
                    pairs_checked += 1
                    if matches != [lifted]:
                        unique_ok = False
        report.record(
            f"probe {probe.name}: whisker lifts unique ({pairs_checked} transformations)",
            unique_ok,
        )
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 4)
    return report
