import pytest

from downcat.corpus import terminal, w3, w3_prime, walking_iso
from downcat.down import build_down, build_down_star, last_functor, weq_set
from downcat.errors import DoesNotRespectEquivalence, NotWeqInverting
from downcat.fincat import (
    FunctorData,
    enumerate_functors,
    enumerate_natural_transformations,
    identity_functor,
)
from downcat.localization import (
    counterexample_suite,
    default_probes,
    factor_strict_quotient,
    factor_through_last,
    inverts_weq,
    weak_localization_report,
    whisker_lift,
)


@pytest.fixture(scope="module")
def setup():
    rc = w3()
    dc = build_down(rc)
    lf = last_functor(rc, dc)
    return rc, dc, lf, weq_set(lf)


def test_last_inverts_its_own_weq(setup):
    rc, dc, lf, w = setup
    assert inverts_weq(lf.functor, w)


def test_groupoid_probe_inverts_everything(setup):
    rc, dc, lf, w = setup
    for F in enumerate_functors(dc.cat, walking_iso()):
        assert inverts_weq(F, w)


def test_factor_strict_quotient_of_q_is_identity(rc_w3):
    ds = build_down_star(rc_w3, max_len=3)
    H = factor_strict_quotient(ds, ds.projection)
    ident = identity_functor(ds.cat)
    assert H.on_objects == ident.on_objects
    assert H.on_morphisms == ident.on_morphisms


def test_factor_strict_quotient_of_last(rc_w3):
    ds = build_down_star(rc_w3, max_len=3)
    lf_mp = last_functor(rc_w3, ds.ladder)
    H = factor_strict_quotient(ds, lf_mp.functor)
    lf_ds = last_functor(rc_w3, ds)
    assert H.on_morphisms == lf_ds.functor.on_morphisms


def test_factor_strict_quotient_rejects_perturbed_functor(rc_w3):
    ds = build_down_star(rc_w3, max_len=2)
    lf_mp = last_functor(rc_w3, ds.ladder)
    # perturb one image inside a non-singleton class: send the smaller of the
    # (delta^1_1, f) / (delta^1_0, gf) pair to f's factor instead
    from downcat.ladder import LadderObject, LadderMorphism, LadderVariant
    from downcat.reedy import SimplexMor

    lo = LadderMorphism(
        src=LadderObject.of_object(rc_w3, 0),
        dst=LadderObject.of_chain(rc_w3, (4,)),
        alpha=SimplexMor(0, 1, (0,)),
        theta=(3,),
    )
    idx = ds.ladder.mor_id(lo)
    perturbed = list(lf_mp.functor.on_morphisms)
    perturbed[idx] = 3  # f instead of g∘f
    bad = FunctorData(
        src=ds.ladder.cat,
        dst=rc_w3.cat,
        on_objects=lf_mp.functor.on_objects,
        on_morphisms=tuple(perturbed),
        name="bad",
    )
    with pytest.raises((DoesNotRespectEquivalence, NotWeqInverting)):
        factor_strict_quotient(ds, bad)


def test_factor_through_last_of_last_is_identity(setup):
    rc, dc, lf, w = setup
    cert = factor_through_last(dc, lf.functor, w)
    assert cert.validate() == []
    assert cert.lifted.on_objects == tuple(rc.cat.objects())
    assert cert.lifted.on_morphisms == tuple(rc.cat.morphisms())


def test_factor_through_last_iso_twisted(setup):
    rc, dc, lf, w = setup
    # compose last with the inclusion of W3 into the iso-extended probe
    from downcat.corpus import w3_with_adjoined_iso

    probe = w3_with_adjoined_iso()
    incl = FunctorData(
        src=rc.cat,
        dst=probe,
        on_objects=(0, 1, 2),
        on_morphisms=(0, 1, 2, 3, 4, 5),
        name="incl",
    )
    assert incl.validate().ok
    twisted_objects = {0: 0, 1: 3, 2: 2}  # send 1 across the adjoined iso
    j, j_inv = 7, 8
    on_objects = tuple(twisted_objects[x] for x in rc.cat.objects())

    def conjugate(m):
        src, dst = rc.cat.mor_src[m], rc.cat.mor_dst[m]
        out = incl.on_morphisms[m]
        if twisted_objects[dst] == 3:
            out = probe.compose(j, out)
        if twisted_objects[src] == 3:
            out = probe.compose(out, j_inv)
        return out

    twisted = FunctorData(
        src=rc.cat,
        dst=probe,
        on_objects=on_objects,
        on_morphisms=tuple(conjugate(m) for m in rc.cat.morphisms()),
        name="twisted",
    )
    assert twisted.validate().ok
    F = lf.functor.then(twisted)
    assert inverts_weq(F, w)
    cert = factor_through_last(dc, F, w)
    assert cert.validate() == []
    from downcat.fincat import find_natural_isos

    assert find_natural_isos(cert.lifted, twisted)


def test_factor_through_last_rejects_non_inverting(setup):
    rc, dc, lf, w = setup
    non_inverting = next(
        F
        for F in enumerate_functors(dc.cat, rc.cat)
        if not inverts_weq(F, w)
    )
    with pytest.raises(NotWeqInverting):
        factor_through_last(dc, non_inverting, w)


def test_factor_through_last_on_down_star_source(rc_w3):
    ds = build_down_star(rc_w3, max_len=2)
    lf = last_functor(rc_w3, ds)
    w = weq_set(lf)
    cert = factor_through_last(ds, lf.functor, w)
    assert cert.validate() == []
    assert cert.lifted.on_morphisms == tuple(rc_w3.cat.morphisms())


def test_whisker_lift_identity(setup):
    rc, dc, lf, w = setup
    ident = identity_functor(rc.cat)
    comp = lf.functor.then(ident)
    from downcat.fincat import NatTransData

    eps = NatTransData(
        source=comp,
        target=comp,
        components=tuple(
            rc.cat.identity[comp.on_objects[i]] for i in dc.cat.objects()
        ),
    )
    lifted = whisker_lift(dc, ident, ident, eps)
    assert all(
        rc.cat.is_identity(c) for c in lifted.components
    )


def test_whisker_lift_round_trips_whiskering(setup):
    rc, dc, lf, w = setup
    probe = walking_iso()
    functors = enumerate_functors(rc.cat, probe)
    for f_c in functors[:6]:
        for g_c in functors[:6]:
            for t in enumerate_natural_transformations(f_c, g_c):
                eps_components = tuple(
                    t.components[lf.functor.on_objects[i]]
                    for i in dc.cat.objects()
                )
                from downcat.fincat import NatTransData

                eps = NatTransData(
                    source=lf.functor.then(f_c),
                    target=lf.functor.then(g_c),
                    components=eps_components,
                )
                lifted = whisker_lift(dc, f_c, g_c, eps)
                assert lifted.components == t.components


def test_counterexample_suite_passes():
    report = counterexample_suite()
    assert report.ok
    names = [c["check"] for c in report.checks]
    assert any("no factorization" in n for n in names)


def test_default_probe_family(rc_w3):
    probes = default_probes(rc_w3)
    names = {p.name for p in probes}
    assert {"1", "Iso", "W3", "W3+iso", "W3'"} <= names


def test_weak_localization_report_passes(rc_w3):
    report = weak_localization_report(rc_w3, probes=[terminal(), walking_iso()])
    assert report.ok
    assert report.meta["probe_family"] == "heuristic"
