import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from downcat.corpus import discrete, w3
from downcat.errors import CycleDetected, NotIdempotent, NotSurjective
from downcat.reedy import (
    ReedyCategory,
    SimplexMor,
    compute_degree_function,
    delta,
    factorizations,
    image_factorization,
    iota,
    largest_section,
    monotone_maps,
    reedy_factorize,
    sigma,
    simplex_identity,
    simplex_mor_of,
    split_idempotent,
    truncated_simplex_category,
    validate_reedy,
)


def test_w3_reedy_validates(rc_w3):
    assert validate_reedy(rc_w3).ok


def test_discrete_identity_structure_validates(rc_discrete2):
    assert validate_reedy(rc_discrete2).ok


def test_g_in_both_parts_breaks_unique_factorization(rc_w3):
    broken = ReedyCategory.build(
        rc_w3.cat, minus=rc_w3.minus, plus=rc_w3.plus | {4}
    )
    report = validate_reedy(broken)
    assert not report.ok
    # the duplicate factorizations show up at g itself: (id2, g) and (g, id1)
    assert any("g" in v and "factoriz" in v for v in report.violations)
    assert len(factorizations(broken, 4)) == 2


def test_factorize_identity_is_identity_pair(rc_w3):
    s, d = reedy_factorize(rc_w3, rc_w3.cat.identity[0])
    assert rc_w3.cat.is_identity(s) and rc_w3.cat.is_identity(d)


def test_factorize_plus_morphism(rc_w3):
    s, d = reedy_factorize(rc_w3, 3)  # f: 0 -> 2
    assert rc_w3.cat.is_identity(s)
    assert d == 3


def test_factorize_in_ts2_image_factorization(ts2):
    # the self-map of [2] with values (0, 0, 2)
    target = next(
        m
        for m in ts2.cat.morphisms()
        if simplex_mor_of(ts2, m).values == (0, 0, 2)
        and simplex_mor_of(ts2, m).m == 2
        and simplex_mor_of(ts2, m).n == 2
    )
    s, d = reedy_factorize(ts2, target)
    assert simplex_mor_of(ts2, s).values == (0, 0, 1)
    assert simplex_mor_of(ts2, d).values == (0, 2)


def test_factorization_matches_exhaustive_scan_everywhere(rc_w3, ts1, ts2):
    for rc in (rc_w3, ts1, ts2):
        for m in rc.cat.morphisms():
            assert factorizations(rc, m) == [reedy_factorize(rc, m)]


def test_degree_w3(rc_w3):
    assert compute_degree_function(rc_w3) == (0, 1, 2)


def test_degree_discrete_all_zero():
    assert compute_degree_function(discrete(3)) == (0, 0, 0)


def test_degree_ts_is_dimension(ts2):
    assert compute_degree_function(ts2) == (0, 1, 2)


def test_degree_strictness(rc_w3, ts2):
    for rc in (rc_w3, ts2):
        deg = compute_degree_function(rc)
        cat = rc.cat
        for m in rc.plus:
            if not cat.is_identity(m):
                assert deg[cat.mor_src[m]] < deg[cat.mor_dst[m]]
        for m in rc.minus:
            if not cat.is_identity(m):
                assert deg[cat.mor_src[m]] > deg[cat.mor_dst[m]]


def test_cycle_detected_with_witness(rc_w3):
    # make g degree-raising too by swapping it into plus and dropping nothing:
    # 1 <' 2 from minus and 2 <' 1 from plus gives a 2-cycle
    broken = ReedyCategory.build(rc_w3.cat, minus=rc_w3.minus, plus=rc_w3.plus | {4})
    with pytest.raises(CycleDetected) as exc:
        compute_degree_function(broken)
    assert set(exc.value.cycle) >= {"1", "2"}


def test_split_identity(rc_w3):
    e = rc_w3.cat.identity[1]
    s, d = split_idempotent(rc_w3, e)
    assert rc_w3.cat.is_identity(s) and rc_w3.cat.is_identity(d)


def test_split_rejects_non_idempotent(ts2):
    non_idem = next(
        m
        for m in ts2.cat.morphisms()
        if ts2.cat.mor_src[m] == ts2.cat.mor_dst[m]
        and ts2.cat.try_compose(m, m) != m
    )
    with pytest.raises(NotIdempotent):
        split_idempotent(ts2, non_idem)


def test_split_endomorphism_idempotents_of_ts2(ts2):
    cat = ts2.cat
    count = 0
    for e in cat.morphisms():
        if cat.mor_src[e] != cat.mor_dst[e] or cat.compose(e, e) != e:
            continue
        count += 1
        s, d = split_idempotent(ts2, e)
        mid = cat.mor_dst[s]
        assert cat.compose(d, s) == e
        assert cat.compose(s, d) == cat.identity[mid]
        assert s in ts2.minus and d in ts2.plus
    # [1] alone has the idempotents (0,0), (0,1)=id, (1,1)
    hom11 = [
        e
        for e in cat.morphisms()
        if simplex_mor_of(ts2, e).m == 1 == simplex_mor_of(ts2, e).n
    ]
    assert len(hom11) == 3
    assert count >= 5


def test_ts_sizes():
    ts0 = truncated_simplex_category(0)
    assert ts0.cat.n_objects == 1 and ts0.cat.n_morphisms == 1
    ts1 = truncated_simplex_category(1)
    hom11 = [
        m
        for m in ts1.cat.morphisms()
        if simplex_mor_of(ts1, m).m == 1 and simplex_mor_of(ts1, m).n == 1
    ]
    assert len(hom11) == 3
    ts2 = truncated_simplex_category(2)
    hom12 = [
        m
        for m in ts2.cat.morphisms()
        if simplex_mor_of(ts2, m).m == 1 and simplex_mor_of(ts2, m).n == 2
    ]
    assert len(hom12) == 6


def test_ts_minus_plus_meet_in_identities(ts2):
    both = ts2.minus & ts2.plus
    assert all(ts2.cat.is_identity(m) for m in both)
    assert len(both) == ts2.cat.n_objects


def test_largest_section_identity():
    ident = simplex_identity(2)
    assert largest_section(ident) == ident


def test_largest_section_sigma10():
    eps = largest_section(sigma(0, 0))  # [1] ->> [0]
    assert eps.values == (1,)


def test_largest_section_sigma20():
    sig = SimplexMor(2, 1, (0, 0, 1))
    eps = largest_section(sig)
    assert eps.values == (1, 2)


def test_largest_section_rejects_non_surjective():
    with pytest.raises(NotSurjective):
        largest_section(delta(2, 1))


def test_largest_section_is_pointwise_maximal_among_all_sections():
    for m, n in [(1, 0), (2, 0), (2, 1), (3, 1), (3, 2)]:
        for values in monotone_maps(m, n):
            sig = SimplexMor(m, n, values)
            if not sig.is_surjective:
                continue
            eps = largest_section(sig)
            assert sig.compose(eps).is_identity
            sections = [
                SimplexMor(n, m, v)
                for v in monotone_maps(n, m)
                if sig.compose(SimplexMor(n, m, v)).is_identity
            ]
            for other in sections:
                assert other.leq(eps)


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_image_factorization_property(data):
    m = data.draw(st.integers(min_value=0, max_value=4))
    n = data.draw(st.integers(min_value=0, max_value=4))
    values = tuple(
        sorted(
            data.draw(
                st.lists(
                    st.integers(min_value=0, max_value=n),
                    min_size=m + 1,
                    max_size=m + 1,
                )
            )
        )
    )
    f = SimplexMor(m, n, values)
    surj, inj = image_factorization(f)
    assert surj.is_surjective and inj.is_injective
    assert inj.compose(surj) == f


def test_iota_and_generators():
    assert iota(3, [0, 2]).values == (0, 2)
    assert delta(2, 1).values == (0, 2)
    assert sigma(1, 0).values == (0, 0, 1)
