import itertools

import pytest

from downcat.errors import NotComposable, NotParallel
from downcat.ladder import (
    GammaClass,
    LadderMorphism,
    LadderObject,
    LadderVariant,
    are_equivalent,
    enumerate_ladder_homs,
    enumerate_ladder_objects,
    gamma_classify,
    gamma_factorize,
    hom_leq,
    in_gamma_minus,
    in_gamma_plus,
    ladder_compose,
    ladder_identity,
    materialize_ladder,
    up_max,
    upward_interval_check,
)
from downcat.fincat import validate_category
from downcat.reedy import SimplexMor, simplex_identity

STRICT = LadderVariant.STRICT
MP = LadderVariant.MP
ALL = LadderVariant.ALL


def the_hom(rc):
    a = LadderObject.of_object(rc, 0)
    b = LadderObject.of_chain(rc, (4,))
    return enumerate_ladder_homs(rc, STRICT, a, b)


def test_strict_objects_over_w3(rc_w3):
    objs = enumerate_ladder_objects(rc_w3, STRICT, 2)
    assert [o.label() for o in objs] == ["(0)", "(1)", "(2)", "(g)"]


def test_strict_objects_over_discrete(rc_discrete2):
    objs = enumerate_ladder_objects(rc_discrete2, STRICT, 1)
    assert len(objs) == 2
    assert all(o.n == 0 for o in objs)


def test_mp_objects_bounded_count(rc_w3):
    assert len(enumerate_ladder_objects(rc_w3, MP, 1)) == 7


def test_strict_complete_at_object_bound(rc_w3):
    at_bound = enumerate_ladder_objects(rc_w3, STRICT, rc_w3.cat.n_objects - 1)
    beyond = enumerate_ladder_objects(rc_w3, STRICT, rc_w3.cat.n_objects + 2)
    assert at_bound == beyond


def test_the_marked_hom_set(rc_w3):
    hom = the_hom(rc_w3)
    assert [(m.alpha.values, m.theta) for m in hom] == [((0,), (3,)), ((1,), (5,))]


def test_hom_into_shorter_chain_is_empty(rc_w3):
    a = LadderObject.of_chain(rc_w3, (4,))
    for x in rc_w3.cat.objects():
        b = LadderObject.of_object(rc_w3, x)
        assert enumerate_ladder_homs(rc_w3, STRICT, a, b) == []


def test_hom_endo_discrete_is_identity(rc_discrete2):
    a = LadderObject.of_object(rc_discrete2, 0)
    hom = enumerate_ladder_homs(rc_discrete2, STRICT, a, a)
    assert hom == [ladder_identity(a)]


def test_compose_with_identity(rc_w3):
    for m in the_hom(rc_w3):
        assert ladder_compose(m, ladder_identity(m.src)) == m
        assert ladder_compose(ladder_identity(m.dst), m) == m


def test_compose_not_composable(rc_w3):
    m = the_hom(rc_w3)[0]
    with pytest.raises(NotComposable):
        ladder_compose(m, m)


def test_associativity_exhaustive_on_strict_w3(rc_w3):
    ladder = materialize_ladder(rc_w3, STRICT, 2)
    mors = ladder.morphisms
    for m1 in mors:
        for m2 in mors:
            if m1.dst != m2.src:
                continue
            for m3 in mors:
                if m2.dst != m3.src:
                    continue
                left = ladder_compose(m3, ladder_compose(m2, m1))
                right = ladder_compose(ladder_compose(m3, m2), m1)
                assert left == right


def test_materialized_ladders_are_valid_categories(rc_w3, ts1):
    for rc, variant, bound in ((rc_w3, STRICT, 2), (rc_w3, MP, 2), (ts1, MP, 2)):
        ladder = materialize_ladder(rc, variant, bound)
        assert validate_category(ladder.cat).ok


def test_hom_leq_example(rc_w3):
    lo, hi = the_hom(rc_w3)
    assert hom_leq(lo, hi)
    assert not hom_leq(hi, lo)
    assert hom_leq(lo, lo)


def test_hom_leq_requires_parallel(rc_w3):
    lo, _ = the_hom(rc_w3)
    with pytest.raises(NotParallel):
        hom_leq(lo, ladder_identity(lo.src))


def test_poset_laws_exhaustive(rc_w3, ts1):
    for rc in (rc_w3, ts1):
        objs = enumerate_ladder_objects(rc, MP, 2)
        for a in objs:
            for b in objs:
                hom = enumerate_ladder_homs(rc, MP, a, b)
                for m1 in hom:
                    assert hom_leq(m1, m1)
                    for m2 in hom:
                        if hom_leq(m1, m2) and hom_leq(m2, m1):
                            assert m1 == m2
                        for m3 in hom:
                            if hom_leq(m1, m2) and hom_leq(m2, m3):
                                assert hom_leq(m1, m3)


def test_up_max_example(rc_w3):
    lo, hi = the_hom(rc_w3)
    assert up_max(lo, STRICT) == hi
    assert up_max(hi, STRICT) == hi


def test_up_max_is_max_of_upward_interval(rc_w3, ts2):
    for rc, variant, bound in ((rc_w3, STRICT, 2), (rc_w3, MP, 2), (ts2, STRICT, 2)):
        objs = enumerate_ladder_objects(rc, variant, bound)
        for a in objs:
            for b in objs:
                hom = enumerate_ladder_homs(rc, variant, a, b)
                for m in hom:
                    mx = up_max(m, variant)
                    ups = [x for x in hom if hom_leq(m, x)]
                    assert mx in ups
                    assert all(hom_leq(x, mx) for x in ups)


def test_up_max_all_variant_is_constant_top(rc_w3):
    a = LadderObject.of_object(rc_w3, 0)
    b = LadderObject.of_chain(rc_w3, (3,))  # chain f: 0 -> 2 lives in ALL only
    hom = enumerate_ladder_homs(rc_w3, ALL, a, b)
    assert hom
    for m in hom:
        mx = up_max(m, ALL)
        assert mx.alpha.values == tuple(b.n for _ in range(a.n + 1))


def test_equivalence_example(rc_w3):
    lo, hi = the_hom(rc_w3)
    assert are_equivalent(lo, hi, STRICT)
    assert are_equivalent(lo, up_max(lo, STRICT), STRICT)


def test_distinct_maxima_not_equivalent(rc_w3):
    a = LadderObject.of_object(rc_w3, 0)
    hom = enumerate_ladder_homs(rc_w3, MP, a, a)
    maxima = {up_max(m, MP) for m in hom}
    for m1 in maxima:
        for m2 in maxima:
            if m1 != m2:
                assert not are_equivalent(m1, m2, MP)


def test_upward_interval_sizes(rc_w3):
    lo, hi = the_hom(rc_w3)
    res = upward_interval_check(lo, STRICT)
    assert res.ok and res.upward_size == 2 and res.interval_size == 2
    res = upward_interval_check(hi, STRICT)
    assert res.ok and res.upward_size == 1


def test_order_compatible_composition(rc_w3):
    ladder = materialize_ladder(rc_w3, MP, 2)
    mors = ladder.morphisms
    for m1 in mors:
        for m1p in mors:
            if m1.src != m1p.src or m1.dst != m1p.dst or not hom_leq(m1, m1p):
                continue
            for m2 in mors:
                if m2.src != m1.dst:
                    continue
                for m2p in mors:
                    if m2p.src != m2.src or m2p.dst != m2.dst:
                        continue
                    if hom_leq(m2, m2p):
                        assert hom_leq(
                            ladder_compose(m2, m1), ladder_compose(m2p, m1p)
                        )


def test_gamma_classify_identity(rc_w3):
    ident = ladder_identity(LadderObject.of_object(rc_w3, 0))
    tag, is_id = gamma_classify(ident)
    assert tag is GammaClass.GAMMA_PLUS and is_id


def test_gamma_classify_degeneracy(rc_w3):
    big = LadderObject.of_chain(rc_w3, (rc_w3.cat.identity[0],))
    small = LadderObject.of_object(rc_w3, 0)
    degen = LadderMorphism(
        src=big,
        dst=small,
        alpha=SimplexMor(1, 0, (0, 0)),
        theta=(rc_w3.cat.identity[0], rc_w3.cat.identity[0]),
    )
    tag, is_id = gamma_classify(degen)
    assert tag is GammaClass.GAMMA_MINUS and not is_id


def test_gamma_classify_injective_alpha(rc_w3):
    lo, _ = the_hom(rc_w3)
    tag, is_id = gamma_classify(lo)
    assert tag is GammaClass.GAMMA_PLUS and not is_id


def test_gamma_factorize_trivial_cases(rc_w3):
    lo, _ = the_hom(rc_w3)
    s, d = gamma_factorize(lo)
    assert s.is_identity() and d == lo
    big = LadderObject.of_chain(rc_w3, (rc_w3.cat.identity[0],))
    degen = LadderMorphism(
        src=big,
        dst=LadderObject.of_object(rc_w3, 0),
        alpha=SimplexMor(1, 0, (0, 0)),
        theta=(rc_w3.cat.identity[0], rc_w3.cat.identity[0]),
    )
    s, d = gamma_factorize(degen)
    assert d.is_identity() and s == degen


def test_gamma_plus_between_strict_objects_is_everything(rc_w3, ts1):
    for rc in (rc_w3, ts1):
        strict = enumerate_ladder_objects(rc, STRICT, rc.cat.n_objects - 1)
        for a in strict:
            for b in strict:
                for m in enumerate_ladder_homs(rc, MP, a, b):
                    assert in_gamma_plus(m)
                    assert m.alpha.is_injective


def test_strict_objects_are_those_with_singleton_identity_class(rc_w3, ts1):
    for rc in (rc_w3, ts1):
        for obj in enumerate_ladder_objects(rc, MP, 2):
            ident = ladder_identity(obj)
            singleton = up_max(ident, MP) == ident
            assert singleton == obj.in_variant(STRICT)


def test_naturality_generator_check_matches_full_scan(rc_w3, ts2):
    for rc in (rc_w3, ts2):
        objs = enumerate_ladder_objects(rc, MP, 2)
        for a in objs:
            for b in objs:
                for m in enumerate_ladder_homs(rc, MP, a, b):
                    assert m.naturality_full_scan()
