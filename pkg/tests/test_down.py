import pytest

from downcat.corpus import discrete, w3
from downcat.down import (
    build_down,
    build_down_star,
    check_direct,
    down_to_json,
    last_functor,
    last_of_ladder,
    normalize_object,
    weq_set,
)
from downcat.fincat import FinCategory, validate_category
from downcat.ladder import (
    LadderObject,
    LadderVariant,
    enumerate_ladder_homs,
    ladder_identity,
    up_max,
)


def test_down_of_discrete_is_isomorphic_to_base(rc_discrete2):
    dc = build_down(rc_discrete2)
    assert dc.cat.n_objects == rc_discrete2.cat.n_objects
    assert dc.cat.n_morphisms == rc_discrete2.cat.n_morphisms
    assert all(dc.cat.is_identity(m) for m in dc.cat.morphisms())


def test_down_w3_shape(rc_w3):
    dc = build_down(rc_w3)
    assert dc.cat.n_objects == 4
    assert dc.cat.n_morphisms == 9
    assert validate_category(dc.cat).ok


def test_down_w3_marked_hom_is_singleton_with_expected_max(rc_w3):
    dc = build_down(rc_w3)
    a = dc.object_id(LadderObject.of_object(rc_w3, 0))
    b = dc.object_id(LadderObject.of_chain(rc_w3, (4,)))
    hom = dc.cat.hom(a, b)
    assert len(hom) == 1
    rep = dc.decode(hom[0])
    assert rep.alpha.values == (1,) and rep.theta == (5,)


def test_down_is_direct_for_corpus(rc_w3, ts1, ts2):
    for rc in (rc_w3, ts1, ts2):
        dc = build_down(rc)
        res = check_direct(dc.cat)
        assert res.direct, res.witness
        assert len(res.degrees) == dc.cat.n_objects


def test_check_direct_rejects_non_identity_idempotent():
    cat = FinCategory.build(
        ("0",),
        [(0, 0, "id0"), (0, 0, "e")],
        (0,),
        {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1},
        name="idem",
    )
    assert validate_category(cat).ok
    res = check_direct(cat)
    assert not res.direct
    assert "e" in res.witness


def test_down_star_contains_all_strict_objects(rc_w3):
    ds = build_down_star(rc_w3, max_len=rc_w3.cat.n_objects - 1)
    dc = build_down(rc_w3)
    for obj in dc.ladder.objects:
        ds.object_id(obj)  # raises if missing


def test_down_star_homs_between_strict_objects_agree_with_down(rc_w3):
    dc = build_down(rc_w3)
    ds = build_down_star(rc_w3, max_len=3)
    for a in dc.ladder.objects:
        for b in dc.ladder.objects:
            down_hom = dc.cat.hom(dc.object_id(a), dc.object_id(b))
            star_hom = ds.cat.hom(ds.object_id(a), ds.object_id(b))
            assert len(down_hom) == len(star_hom)
            down_reps = {dc.decode(c) for c in down_hom}
            star_reps = {ds.decode(c) for c in star_hom}
            assert down_reps == star_reps


def test_normalize_identity_chain(rc_w3):
    ds = build_down_star(rc_w3, max_len=3)
    obj = LadderObject.of_chain(rc_w3, (rc_w3.cat.identity[0],))
    strict_obj, (to_s, from_s) = normalize_object(ds, obj)
    assert strict_obj == LadderObject.of_object(rc_w3, 0)
    q = ds.cat
    assert q.compose(to_s, from_s) == q.identity[ds.object_id(strict_obj)]


def test_normalize_mixed_chain(rc_w3):
    ds = build_down_star(rc_w3, max_len=3)
    obj = LadderObject.of_chain(rc_w3, (rc_w3.cat.identity[2], 4))  # (id2, g)
    strict_obj, _ = normalize_object(ds, obj)
    assert strict_obj == LadderObject.of_chain(rc_w3, (4,))


def test_normalize_strict_object_is_trivial(rc_w3):
    ds = build_down_star(rc_w3, max_len=3)
    obj = LadderObject.of_chain(rc_w3, (4,))
    strict_obj, (to_s, from_s) = normalize_object(ds, obj)
    assert strict_obj == obj
    assert ds.cat.is_identity(to_s) and ds.cat.is_identity(from_s)


def test_normalization_gives_essential_surjectivity(rc_w3):
    ds = build_down_star(rc_w3, max_len=3)
    q = ds.cat
    for i, obj in enumerate(ds.ladder.objects):
        strict_obj, (to_s, from_s) = normalize_object(ds, obj)
        assert strict_obj.in_variant(LadderVariant.STRICT)
        assert q.compose(to_s, from_s) == q.identity[ds.object_id(strict_obj)]
        assert q.is_iso(to_s) and q.is_iso(from_s)


def test_last_values_on_examples(rc_w3):
    dc = build_down(rc_w3)
    lf = last_functor(rc_w3, dc)
    g_chain = dc.object_id(LadderObject.of_chain(rc_w3, (4,)))
    assert lf.functor.on_objects[g_chain] == 1
    a = LadderObject.of_object(rc_w3, 0)
    b = LadderObject.of_chain(rc_w3, (4,))
    lo, hi = enumerate_ladder_homs(rc_w3, LadderVariant.STRICT, a, b)
    # both representatives evaluate to g∘f under last
    assert last_of_ladder(lo) == 5
    assert last_of_ladder(hi) == 5


def test_last_functor_laws(rc_w3, ts1):
    for rc in (rc_w3, ts1):
        dc = build_down(rc)
        assert last_functor(rc, dc).functor.validate().ok
        ds = build_down_star(rc, max_len=2)
        assert last_functor(rc, ds).functor.validate().ok
        assert last_functor(rc, ds.ladder).functor.validate().ok


def test_weq_examples(rc_w3):
    dc = build_down(rc_w3)
    lf = last_functor(rc_w3, dc)
    w = weq_set(lf)
    for x in dc.cat.objects():
        assert dc.cat.identity[x] in w
    b1 = dc.object_id(LadderObject.of_object(rc_w3, 1))
    gch = dc.object_id(LadderObject.of_chain(rc_w3, (4,)))
    (inclusion,) = dc.cat.hom(b1, gch)
    assert inclusion in w
    a0 = dc.object_id(LadderObject.of_object(rc_w3, 0))
    (to_chain,) = dc.cat.hom(a0, gch)
    assert to_chain not in w


def test_last_commutes_with_projection_and_reflects_weq(rc_w3):
    ds = build_down_star(rc_w3, max_len=2)
    lf_ladder = last_functor(rc_w3, ds.ladder)
    lf_quotient = last_functor(rc_w3, ds)
    q = ds.projection
    for m in ds.ladder.cat.morphisms():
        assert (
            lf_quotient.functor.on_morphisms[q.on_morphisms[m]]
            == lf_ladder.functor.on_morphisms[m]
        )
    w_ladder = weq_set(lf_ladder)
    w_quotient = weq_set(lf_quotient)
    for m in ds.ladder.cat.morphisms():
        assert (m in w_ladder.morphisms) == (
            q.on_morphisms[m] in w_quotient.morphisms
        )


def test_down_composition_is_compose_then_maximize(rc_w3):
    dc = build_down(rc_w3)
    from downcat.ladder import ladder_compose

    for g in dc.cat.morphisms():
        for f in dc.cat.morphisms():
            if dc.cat.try_compose(g, f) is None:
                continue
            expected = up_max(
                ladder_compose(dc.decode(g), dc.decode(f)), dc.variant
            )
            assert dc.decode(dc.cat.compose(g, f)) == expected


def test_down_json_rendering(rc_w3):
    dc = build_down(rc_w3)
    doc = down_to_json(dc)
    assert len(doc["objects"]) == 4
    assert len(doc["morphisms"]) == 9
    chains = {tuple(o["chain"]) for o in doc["objects"]}
    assert ("g",) in chains
