"""The acceptance suites: one function per criterion, shared by the CLI
selftest and the test suite. Each returns a SuiteReport with wall-clock
timings and failure witnesses."""

from __future__ import annotations

import itertools
import time

from .config import Limits, DEFAULT
from .corpus import builtin, w3, w3_prime, discrete
from .down import (
    build_down,
    build_down_star,
    check_direct,
    last_functor,
    normalize_object,
    weq_set,
)
from .errors import DowncatError
from .fincat import validate_category
from .ladder import (
    LadderVariant,
    are_equivalent,
    enumerate_ladder_homs,
    enumerate_ladder_objects,
    gamma_factorize,
    gamma_split_idempotent,
    hom_leq,
    in_gamma_minus,
    in_gamma_plus,
    ladder_compose,
    ladder_identity,
    materialize_ladder,
    up_max,
    upward_interval_check,
)
from .localization import (
    SuiteReport,
    counterexample_suite,
    factor_strict_quotient,
    weak_localization_report,
)
from .reedy import (
    compute_degree_function,
    split_idempotent,
    truncated_simplex_category,
    validate_reedy,
)


def corpus_validation_suite() -> SuiteReport:
    """Criterion 1: the whole builtin corpus validates; W3 degrees are 0,1,2."""
    report = SuiteReport("corpus-validation")
    t0 = time.perf_counter()
    names = ("W3", "C'", "TS(0)", "TS(1)", "TS(2)", "TS(3)",
             "discrete(1)", "discrete(2)", "discrete(3)")
    for name in names:
        rc = builtin(name).data
        cat_ok = validate_category(rc.cat).ok
        reedy_ok = validate_reedy(rc).ok
        report.record(f"{name} validates", cat_ok and reedy_ok)
    degrees = compute_degree_function(w3())
    report.record("W3 degree function is (0, 1, 2)", degrees == (0, 1, 2))
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 3)
    return report


def down_w3_suite() -> SuiteReport:
    """Criterion 2: Down(W3) has 4 objects, is direct, and the marked hom-set
    is a singleton with the expected maximum representative."""
    report = SuiteReport("down-w3")
    t0 = time.perf_counter()
    rc = w3()
    dc = build_down(rc)
    report.record("Down(W3) has 4 objects", dc.cat.n_objects == 4,
                  witness=f"got {dc.cat.n_objects}")
    res = check_direct(dc.cat)
    report.record("Down(W3) is direct", res.direct, witness=res.witness)
    from .ladder import LadderObject

    a = dc.object_id(LadderObject.of_object(rc, 0))
    g_chain = dc.object_id(LadderObject.of_chain(rc, (4,)))
    hom = dc.cat.hom(a, g_chain)
    report.record("Hom(([0],0),([1],g)) is a singleton", len(hom) == 1)
    rep = dc.decode(hom[0])
    expected = rep.alpha.values == (1,) and rep.theta == (5,)  # (delta^1_0, g∘f)
    report.record("its maximum representative is (delta^1_0, g∘f)", expected,
                  witness=f"alpha={rep.alpha.values} theta={rep.theta}")
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 3)
    return report


def _hom_poset_checks(report, rc, variant, max_len, label):
    objs = enumerate_ladder_objects(rc, variant, max_len)
    all_ok_max = True
    all_ok_interval = True
    all_ok_closure = True
    n_homs = 0
    n_mors = 0
    for a in objs:
        for b in objs:
            hom = enumerate_ladder_homs(rc, variant, a, b)
            if not hom:
                continue
            n_homs += 1
            n_mors += len(hom)
            for m in hom:
                mx = up_max(m, variant)
                if not (hom_leq(m, mx) and up_max(mx, variant) == mx):
                    all_ok_max = False
                if not upward_interval_check(m, variant).ok:
                    all_ok_interval = False
            # transitive-closure oracle: components of the comparability graph
            index = {m: i for i, m in enumerate(hom)}
            parent = list(range(len(hom)))

            def find(i):
                while parent[i] != i:
                    parent[i] = parent[parent[i]]
                    i = parent[i]
                return i

            for m1 in hom:
                for m2 in hom:
                    if hom_leq(m1, m2):
                        r1, r2 = find(index[m1]), find(index[m2])
                        if r1 != r2:
                            parent[max(r1, r2)] = min(r1, r2)
            for m1 in hom:
                for m2 in hom:
                    oracle = find(index[m1]) == find(index[m2])
                    if oracle != are_equivalent(m1, m2, variant):
                        all_ok_closure = False
    report.record(f"{label}: up_max exists, bounds above, idempotent "
                  f"({n_mors} morphisms)", all_ok_max)
    report.record(f"{label}: upward intervals project isomorphically", all_ok_interval)
    report.record(f"{label}: equivalence matches the closure oracle "
                  f"({n_homs} hom-sets)", all_ok_closure)


def hom_poset_suite() -> SuiteReport:
    """Criterion 3: hom-poset structure over W3 and TS(2)."""
    report = SuiteReport("hom-posets")
    t0 = time.perf_counter()
    for rc, name in ((w3(), "W3"), (truncated_simplex_category(2), "TS(2)")):
        _hom_poset_checks(report, rc, LadderVariant.STRICT,
                          rc.cat.n_objects - 1, f"{name} STRICT")
        _hom_poset_checks(report, rc, LadderVariant.MP, 2, f"{name} MP(2)")
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 3)
    return report


def _gamma_scan_oracle(rc, objs, m, variant):
    """All (degeneracy, direct) factorizations of m by exhaustive scan."""
    found = []
    for mid in objs:
        for s in enumerate_ladder_homs(rc, variant, m.src, mid):
            if not in_gamma_minus(s):
                continue
            for d in enumerate_ladder_homs(rc, variant, mid, m.dst):
                if not in_gamma_plus(d):
                    continue
                if ladder_compose(d, s) == m:
                    found.append((s, d))
    return found


def gamma_factorization_suite() -> SuiteReport:
    """Criterion 4: gamma factorization is the unique scan result."""
    report = SuiteReport("gamma-factorization")
    t0 = time.perf_counter()
    for rc, name in ((w3(), "W3"), (truncated_simplex_category(1), "TS(1)")):
        objs = enumerate_ladder_objects(rc, LadderVariant.MP, 2)
        strict = [o for o in objs if o.in_variant(LadderVariant.STRICT)]
        ok_strict = True
        count = 0
        for a in strict:
            for b in strict:
                for m in enumerate_ladder_homs(rc, LadderVariant.MP, a, b):
                    s, d = gamma_factorize(m)
                    found = _gamma_scan_oracle(rc, objs, m, LadderVariant.MP)
                    count += 1
                    if found != [(s, d)]:
                        ok_strict = False
        report.record(
            f"{name}: factorization unique between strict objects ({count})",
            ok_strict,
        )
        # wider MP sample, where the degeneracy leg is non-trivial
        ok_mp = True
        count = 0
        for a in objs:
            for b in objs:
                if a.n + b.n > 3:
                    continue
                for m in enumerate_ladder_homs(rc, LadderVariant.MP, a, b):
                    s, d = gamma_factorize(m)
                    found = _gamma_scan_oracle(rc, objs, m, LadderVariant.MP)
                    count += 1
                    if found != [(s, d)]:
                        ok_mp = False
        report.record(f"{name}: factorization unique on bounded MP ({count})", ok_mp)
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 3)
    return report


def idempotent_suite() -> SuiteReport:
    """Criterion 5: idempotents split uniquely (ladder over W3, and TS(2))."""
    report = SuiteReport("idempotents")
    t0 = time.perf_counter()
    rc = w3()
    ladder = materialize_ladder(rc, LadderVariant.MP, 3)
    ok = True
    count = 0
    for m in ladder.morphisms:
        if m.src != m.dst or ladder_compose(m, m) != m:
            continue
        count += 1
        s, d = gamma_split_idempotent(m)
        if ladder_compose(d, s) != m or ladder_compose(s, d) != ladder_identity(s.dst):
            ok = False
        # uniqueness by scan
        found = [
            (s2, d2)
            for mid in ladder.objects
            for s2 in enumerate_ladder_homs(rc, LadderVariant.MP, m.src, mid)
            if in_gamma_minus(s2)
            for d2 in enumerate_ladder_homs(rc, LadderVariant.MP, mid, m.dst)
            if in_gamma_plus(d2)
            and ladder_compose(d2, s2) == m
            and ladder_compose(s2, d2) == ladder_identity(mid)
        ]
        if found != [(s, d)]:
            ok = False
    report.record(f"W3 MP(3) ladder: {count} idempotents split uniquely", ok)
    ts2 = truncated_simplex_category(2)
    cat = ts2.cat
    ok = True
    count = 0
    for e in cat.morphisms():
        if cat.mor_src[e] != cat.mor_dst[e] or cat.compose(e, e) != e:
            continue
        count += 1
        s, d = split_idempotent(ts2, e)
        mid = cat.mor_dst[s]
        if cat.compose(d, s) != e or cat.compose(s, d) != cat.identity[mid]:
            ok = False
        found = [
            (s2, d2)
            for s2 in ts2.minus
            if cat.mor_src[s2] == cat.mor_src[e]
            for d2 in ts2.plus
            if cat.mor_src[d2] == cat.mor_dst[s2]
            and cat.mor_dst[d2] == cat.mor_dst[e]
            and cat.try_compose(d2, s2) == e
            and cat.try_compose(s2, d2) == cat.identity[cat.mor_dst[s2]]
        ]
        if found != [(s, d)]:
            ok = False
    report.record(f"TS(2): {count} idempotents split uniquely", ok)
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 3)
    return report


def localization_constructive_suite(cap: int = 2_000_000) -> SuiteReport:
    """Criterion 6: certificates for all probes, whisker uniqueness, and the
    strict-quotient round trip of last."""
    rc = w3()
    report = weak_localization_report(rc, cap=cap)
    report.suite = "localization-constructive"
    t0 = time.perf_counter()
    ds = build_down_star(rc, max_len=3)
    lf_mp = last_functor(rc, ds.ladder)
    H = factor_strict_quotient(ds, lf_mp.functor)
    lf_ds = last_functor(rc, ds)
    report.record(
        "factor_strict_quotient round-trips last",
        H.on_morphisms == lf_ds.functor.on_morphisms
        and H.on_objects == lf_ds.functor.on_objects,
    )
    report.meta["runtime_seconds"] = report.meta.get("runtime_seconds", 0) + round(
        time.perf_counter() - t0, 3
    )
    return report


def endofunctor_formula_suite(limits: Limits = DEFAULT) -> SuiteReport:
    """Criterion 8: the reindex formula, the counted diagrams, and
    monomorphism preservation."""
    from .sset.base import (
        boundary_inclusion,
        nerve_truncated,
        standard_simplex,
        validate_simplicial,
    )
    from .sset.kan import (
        EndofunctorKind,
        esd_direct,
        esdi_direct_counts,
        evaluate_endofunctor,
        induced_map,
    )
    from .reedy import SimplexMor

    report = SuiteReport("endofunctor-formulas")
    t0 = time.perf_counter()
    corpus = [
        ("N(W3)", w3().cat),
        ("N(C')", w3_prime().cat),
        ("N(TS(0))", truncated_simplex_category(0).cat),
        ("N(TS(1))", truncated_simplex_category(1).cat),
        ("N(TS(2))", truncated_simplex_category(2).cat),
        ("N(disc(2))", discrete(2).cat),
        ("N(disc(3))", discrete(3).cat),
    ]
    d = 1
    for name, cat in corpus:
        X = nerve_truncated(cat, 2 * d + 1)
        K = evaluate_endofunctor(EndofunctorKind.ESD, X, d)
        direct = esd_direct(X, d)
        same_counts = all(
            K.sset.n_cells(k) == direct.n_cells(k) for k in range(d + 1)
        )
        # canonical bijection: class of (n, x, w) corresponds to X(w)(x)
        iso_ok = True
        for k in range(d + 1):
            seen = {}
            for tag, cls in K.class_of_tag[k].items():
                n, x, w = tag
                target = X.act(SimplexMor(2 * k + 1, n, w), n, x)
                if seen.setdefault(cls, target) != target:
                    iso_ok = False
            if sorted(seen.values()) != list(range(direct.n_cells(k))):
                iso_ok = False
        # faces agree under the bijection
        faces_ok = True
        for k in range(1, d + 1):
            for tag, cls in K.class_of_tag[k].items():
                n, x, w = tag
                y = X.act(SimplexMor(2 * k + 1, n, w), n, x)
                for i in range(k + 1):
                    Fn = K.F.value(n)
                    from .sset.kan import _cell_id

                    fc = Fn.cells[k - 1][Fn.face(k, _cell_id(Fn, k, w), i)]
                    lhs = X.act(SimplexMor(2 * k - 1, n, fc), n, x)
                    if lhs != direct.face(k, y, i):
                        faces_ok = False
        report.record(
            f"(ESd {name})_k = {name}_2k+1 cell-exact (d<={d})",
            same_counts and iso_ok and faces_ok,
        )
        esdi = evaluate_endofunctor(EndofunctorKind.ESDI, X, d)
        counts_ok = all(
            esdi.sset.n_cells(k) == esdi_direct_counts(X, k) for k in range(d + 1)
        )
        report.record(f"|(ESdI {name})_k| coproduct formula", counts_ok)
    # the two counted diagrams
    K = evaluate_endofunctor(
        EndofunctorKind.ESDI, standard_simplex(1, 2 * limits.dim + 1), limits.dim
    )
    report.record("|(ESdI Δ1)_0| = 5", K.sset.n_cells(0) == 5,
                  witness=f"got {K.sset.n_cells(0)}")
    K = evaluate_endofunctor(
        EndofunctorKind.ESD, standard_simplex(2, 2 * limits.dim + 1), limits.dim
    )
    report.record("|(ESd Δ2)_0| = 6", K.sset.n_cells(0) == 6,
                  witness=f"got {K.sset.n_cells(0)}")
    # monomorphism preservation on the boundary inclusions
    kinds = list(EndofunctorKind)
    mono_ok = True
    for n in range(4):
        inc = boundary_inclusion(n, 2 * limits.dim + 1)
        for kind in kinds:
            KX = evaluate_endofunctor(kind, inc.src, limits.dim,
                                      alpha_bound=limits.resolved_alpha_bound())
            KY = evaluate_endofunctor(kind, inc.dst, limits.dim,
                                      alpha_bound=limits.resolved_alpha_bound())
            induced = induced_map(KX, inc, KY)
            if not (induced.validate().ok and induced.is_injective()):
                mono_ok = False
    report.record("all six endofunctors preserve ∂Δn ⊆ Δn, n <= 3", mono_ok)
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 3)
    return report


def horn_suite(limits: Limits = DEFAULT) -> SuiteReport:
    """Criterion 9: perfect matching and certified replay of the schedules."""
    from .sset.horn import HornFlavor, filling_schedule, horn_pairs, outsiders

    report = SuiteReport("horn-machinery")
    t0 = time.perf_counter()
    pairs1 = horn_pairs(1, HornFlavor.PLAIN)
    want = (
        len(pairs1) == 1
        and pairs1[0].core == ((0, 0), (0, 1), (1, 1))
        and pairs1[0].periphery == ((0, 0), (1, 1))
        and pairs1[0].position == 1
    )
    report.record("PLAIN n=1: the unique pair is (triangle, long edge) at 1", want)
    for n in range(limits.horn_plain_max + 1):
        outs = outsiders(n, HornFlavor.PLAIN)
        pairs = horn_pairs(n, HornFlavor.PLAIN)
        matched = len(outs) == 2 * len(pairs)
        inner = all(0 < r.position < len(r.core) - 1 for r in pairs)
        cert = filling_schedule(n, HornFlavor.PLAIN)
        report.record(
            f"PLAIN n={n}: matched ({len(pairs)} pairs), inner, replay complete",
            matched and inner and cert.ok,
        )
    for n in range(limits.horn_i_max + 1):
        outs = outsiders(n, HornFlavor.I)
        pairs = horn_pairs(n, HornFlavor.I)
        matched = len(outs) == 2 * len(pairs)
        inner = all(0 < r.position < len(r.core) - 1 for r in pairs)
        cert = filling_schedule(n, HornFlavor.I)
        report.record(
            f"I n={n}: matched ({len(pairs)} pairs), inner, replay complete",
            matched and inner and cert.ok,
        )
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 3)
    return report


def comparison_suite(limits: Limits = DEFAULT) -> SuiteReport:
    """Criterion 10: the comparison-map properties for all three variants,
    plus the cylinder construction on last."""
    from .sset.base import nerve_functor_map, nerve_truncated, validate_simplicial
    from .sset.check8 import build_comparison_maps, check_comparison_properties
    from .sset.compare import GammaVariant, build_comparison_context
    from .sset.cylinder import mapping_cylinder

    report = SuiteReport("comparison-maps")
    t0 = time.perf_counter()
    rc = w3()
    d = limits.dim
    for variant, alpha, L in (
        (GammaVariant.DOWN, limits.resolved_alpha_bound(), None),
        (GammaVariant.DOWN_STAR, limits.resolved_alpha_bound(), None),
        (GammaVariant.MP, 1, 2),
    ):
        ctx = build_comparison_context(rc, variant, d, alpha_bound=alpha, max_len=L)
        sub = check_comparison_properties(ctx)
        report.record(
            f"{variant.value}: properties (1)-(5) hold "
            f"({sum(1 for c in sub.checks)} checks)",
            sub.ok,
            witness="" if sub.ok else next(
                c["check"] for c in sub.checks if not c["ok"]
            ),
        )
        if variant is GammaVariant.DOWN:
            maps = build_comparison_maps(ctx, tag_budget=limits.tag_budget)
            report.record("down: materialized maps validate", maps.validate() == [])
    # the mapping cylinder on last
    dc = build_down(rc)
    lf = last_functor(rc, dc)
    T = nerve_truncated(dc.cat, 2 * d + 1)
    S = nerve_truncated(rc.cat, 2 * d + 1)
    lam = nerve_functor_map(lf.functor, T, S)
    cyl = mapping_cylinder(lam, d, alpha_bound=limits.resolved_alpha_bound())
    ok = (
        validate_simplicial(cyl.dcp_cyl).ok
        and validate_simplicial(cyl.esdp_cyl).ok
        and cyl.comparison.validate().ok
    )
    report.record(
        f"cylinder on last builds and validates ({len(cyl.collapse_edges)} "
        "collapse edges)",
        ok,
    )
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 3)
    return report


ALL_SUITES = {
    "corpus-validation": corpus_validation_suite,
    "down-w3": down_w3_suite,
    "hom-posets": hom_poset_suite,
    "gamma-factorization": gamma_factorization_suite,
    "idempotents": idempotent_suite,
    "localization-constructive": localization_constructive_suite,
    "counterexample": counterexample_suite,
    "endofunctor-formulas": endofunctor_formula_suite,
    "horn-machinery": horn_suite,
    "comparison-maps": comparison_suite,
}


def run_selftest(limits: Limits = DEFAULT) -> list[SuiteReport]:
    """Every acceptance suite, in declaration order."""
    reports = []
    for name, fn in ALL_SUITES.items():
        if fn in (endofunctor_formula_suite, horn_suite, comparison_suite):
            reports.append(fn(limits))
        else:
            reports.append(fn())
    return reports
