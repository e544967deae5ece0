"""
幾何迷向、可實現性、Balmer 質理想與 Zariski 拓撲測試
"""
from itertools import combinations

import pytest

from errors import (
    GroupMismatch, MalformedDescriptor, MalformedExpr, NotFinite, NotRealizable, NotUnrelated,
)
from group_catalog import (
    CIRCLE_GROUP, FULL, ICOSA, O2_GROUP, SO2, SO3_GROUP, TETRA, C, ClassSet, D, F,
    SeriesSet, classes, is_cotoral, is_in_phi,
)
from isotropy_balmer import (
    Basic, Sphere0, basic, cell, ctmax, dual, in_thickt, is_cotorally_closed,
    is_realizable, is_zariski_closed, isoclass, lambda_ct, loct_equal, loct_generator,
    parse_descriptor, parse_expr, point_closure, prime, prime_leq, primes, realize,
    separate, smash, sphere0, support, susp, wedge, zariski_closure,
)
from phi_space import ClopenSet, is_f_compact, phi
from tests.generators import (
    random_class_set, random_expr, random_realizable_set, random_unrealizable_set,
)


def _o2_tail(n, *extra):
    return ClassSet.build(O2_GROUP, [FULL] + list(extra), {'D': SeriesSet.tail(1, n)})


@pytest.mark.parametrize('n', [1, 2, 5])
def test_basic_cell_of_o2(n):
    s = support(basic(O2_GROUP, FULL, n))
    assert s.classes == _o2_tail(n)
    assert ctmax(s) == _o2_tail(n)
    assert is_realizable(s)


def test_support_rules(s3):
    assert support(sphere0(CIRCLE_GROUP)).classes == ClassSet.everything(CIRCLE_GROUP)
    assert support(cell(O2_GROUP, D(2))).classes.finite_members() == [C(1), C(2), D(1), D(2)]
    assert support(isoclass(O2_GROUP, SO2)).classes == ClassSet.of(O2_GROUP, [SO2])
    assert support(smash(basic(s3, F(1)), basic(s3, F(2)))).classes.is_empty
    x = wedge(basic(O2_GROUP, D(3)), basic(O2_GROUP, SO2))
    assert support(susp(-2, dual(x))).classes == support(x).classes


def test_support_of_isoclass_is_not_cotorally_closed():
    s = support(isoclass(O2_GROUP, SO2))
    assert not s.cotoral_closed
    assert support(cell(O2_GROUP, SO2)).cotoral_closed


def test_dual_requires_finite_term():
    with pytest.raises(MalformedExpr):
        dual(isoclass(O2_GROUP, SO2))


def test_wedge_requires_same_group():
    with pytest.raises(GroupMismatch):
        wedge(sphere0(O2_GROUP), sphere0(SO3_GROUP))


def test_basic_rejects_neighbourhood_without_top():
    space = phi(O2_GROUP)
    with pytest.raises(MalformedExpr):
        basic(O2_GROUP, FULL, clopen=ClopenSet.of(space, [SO2]))


def test_cotoral_closure():
    assert lambda_ct(ClassSet.of(O2_GROUP, [SO2])).classes == ClassSet.build(
        O2_GROUP, [SO2], {'C': SeriesSet.full(1)})
    assert lambda_ct(ClassSet.of(O2_GROUP, [D(5)])).classes == ClassSet.of(O2_GROUP, [D(5)])
    assert is_cotorally_closed(ClassSet.of(SO3_GROUP, [TETRA, C(3)]))


def test_ctmax():
    everything = support(sphere0(O2_GROUP))
    assert ctmax(everything) == ClassSet.build(O2_GROUP, [FULL, SO2], {'D': SeriesSet.full(1)})
    assert ctmax(ClassSet.of(O2_GROUP, [C(2), SO2, C(1)])) == ClassSet.of(O2_GROUP, [SO2])
    assert ctmax(ClassSet.of(CIRCLE_GROUP, [FULL])) == ClassSet.of(CIRCLE_GROUP, [FULL])


def test_realizability_examples():
    circle = CIRCLE_GROUP
    assert is_realizable(lambda_ct(ClassSet.of(circle, [C(2), C(3)])))
    all_cyclic = ClassSet.build(circle, [C(1)], {'C': SeriesSet.full(1)})
    assert not is_realizable(all_cyclic)
    assert not is_realizable(ClassSet.of(O2_GROUP, [FULL]))
    assert not is_realizable(ClassSet.of(O2_GROUP, [C(2)]).union(ClassSet.of(O2_GROUP, [SO2])))


def test_circle_antichains():
    cyclic = [C(n) for n in range(1, 9)]
    for size in (1, 2, 3):
        for chosen in combinations(cyclic, size):
            if any(a != b and b.index % a.index == 0 for a in chosen for b in chosen):
                continue
            assert is_realizable(lambda_ct(ClassSet.of(CIRCLE_GROUP, chosen)))
    everything = ClassSet.build(CIRCLE_GROUP, series={'C': SeriesSet.full(1)})
    assert not is_f_compact(CIRCLE_GROUP, everything)


def test_realize_examples():
    expr = realize(lambda_ct(ClassSet.of(CIRCLE_GROUP, [C(2)])))
    assert isinstance(expr, Basic) and expr.k == C(2)
    expr = realize(_o2_tail(3))
    assert isinstance(expr, Basic) and expr.k == FULL and expr.cutoff == 3
    assert isinstance(realize(ClassSet.everything(SO3_GROUP)), Sphere0)


def test_realize_mixed_set_round_trip():
    s = lambda_ct(_o2_tail(4, SO2, D(2))).classes
    assert support(realize(s)).classes == s


def test_realize_rejects_non_realizable():
    with pytest.raises(NotRealizable):
        realize(ClassSet.of(O2_GROUP, [FULL]))


@pytest.mark.parametrize('group', [CIRCLE_GROUP, O2_GROUP, SO3_GROUP])
def test_random_realize_round_trip(group, rng):
    for _ in range(30):
        s = random_realizable_set(group, rng)
        assert support(realize(s)).classes == s
    for _ in range(30):
        s = random_unrealizable_set(group, rng)
        assert not is_realizable(s)


def test_random_realize_round_trip_finite(s4, rng):
    for _ in range(20):
        s = random_realizable_set(s4, rng)
        assert support(realize(s)).classes == s


def test_prime_order_matches_cotoral(finite_groups):
    groups = [CIRCLE_GROUP, O2_GROUP, SO3_GROUP, finite_groups['D8']]
    for group in groups:
        listed = classes(group, 8)
        for a in listed:
            for b in listed:
                assert prime_leq(prime(group, a), prime(group, b)) == is_cotoral(group, a, b)


def test_prime_examples():
    assert prime_leq(prime(O2_GROUP, C(3)), prime(O2_GROUP, SO2))
    assert not prime_leq(prime(O2_GROUP, D(3)), prime(O2_GROUP, FULL))
    assert len(primes(O2_GROUP, 3)) == 8
    with pytest.raises(GroupMismatch):
        prime_leq(prime(O2_GROUP, C(3)), prime(CIRCLE_GROUP, C(3)))


def test_point_closures(s3):
    closure = point_closure(O2_GROUP, SO2).classes
    assert closure == ClassSet.build(O2_GROUP, [SO2], {'C': SeriesSet.full(1)})
    assert point_closure(SO3_GROUP, TETRA).classes == ClassSet.of(SO3_GROUP, [TETRA])
    assert point_closure(s3, F(0)).classes == ClassSet.of(s3, [F(0)])


def test_thick_ideal_membership():
    assert in_thickt(cell(O2_GROUP, C(2)), sphere0(O2_GROUP))
    assert not in_thickt(sphere0(O2_GROUP), basic(O2_GROUP, FULL, 1))
    x = basic(O2_GROUP, D(4))
    assert in_thickt(x, x)
    with pytest.raises(NotFinite):
        in_thickt(isoclass(O2_GROUP, SO2), sphere0(O2_GROUP))


def test_random_thick_membership(rng):
    for group in (CIRCLE_GROUP, O2_GROUP, SO3_GROUP):
        for _ in range(40):
            x, y = random_expr(group, rng), random_expr(group, rng)
            assert in_thickt(y, x) == support(y).classes.is_subset(support(x).classes)


def test_localizing_ideals():
    assert loct_equal(isoclass(O2_GROUP, D(3)), basic(O2_GROUP, D(3)))
    assert loct_equal(cell(O2_GROUP, FULL), sphere0(O2_GROUP))
    assert not loct_equal(isoclass(O2_GROUP, SO2), cell(O2_GROUP, SO2))


def test_loct_generator():
    s = ClassSet.of(O2_GROUP, [SO2, D(3)])
    assert support(loct_generator(s)).classes == s
    with pytest.raises(NotFinite):
        loct_generator(ClassSet.everything(O2_GROUP))


def test_separate():
    a, b = separate(O2_GROUP, SO2, D(3))
    assert support(a).classes.intersection(support(b).classes).is_empty
    assert SO2 in support(a) and D(3) in support(b)
    a, b = separate(SO3_GROUP, TETRA, ICOSA)
    assert support(a).classes == ClassSet.of(SO3_GROUP, [TETRA])
    a, b = separate(O2_GROUP, FULL, D(3))
    assert D(3) not in support(a)
    with pytest.raises(NotUnrelated):
        separate(O2_GROUP, C(2), C(2))
    with pytest.raises(NotUnrelated):
        separate(O2_GROUP, C(2), SO2)


def test_zariski_closure():
    evens = ClassSet.build(O2_GROUP, [], {'D': SeriesSet.periodic(1, 2, 0)})
    closure = zariski_closure(evens).classes
    assert closure == ClassSet.build(O2_GROUP, [FULL], {'D': SeriesSet.periodic(1, 2, 0)})
    assert is_zariski_closed(closure)
    assert not is_zariski_closed(evens)
    assert is_zariski_closed(lambda_ct(ClassSet.of(CIRCLE_GROUP, [C(2)])))
    assert is_zariski_closed(ClassSet.everything(SO3_GROUP))
    cyclic = ClassSet.build(O2_GROUP, [], {'C': SeriesSet.full(1)})
    assert SO2 in zariski_closure(cyclic)


def test_parse_expressions():
    expr = parse_expr('wedge(basic(O2,3), cell(C2))', O2_GROUP)
    assert support(expr).classes == _o2_tail(3, C(1), C(2))
    assert parse_expr('susp(-1, dual(S0))', O2_GROUP).is_finite
    assert not parse_expr('iso(SO2)', O2_GROUP).is_finite
    with pytest.raises(MalformedExpr):
        parse_expr('wedge(S0,', O2_GROUP)
    with pytest.raises(MalformedExpr):
        parse_expr('cell(A5)', O2_GROUP)


def test_parse_descriptors():
    assert parse_descriptor('tailD(4)+O2', O2_GROUP) == _o2_tail(4)
    assert parse_descriptor('Lct{SO2}', O2_GROUP) == ClassSet.build(
        O2_GROUP, [SO2], {'C': SeriesSet.full(1)})
    assert parse_descriptor('{C2,D3}+modD(2,0)', O2_GROUP) == ClassSet.build(
        O2_GROUP, [C(2), D(3)], {'D': SeriesSet.periodic(1, 2, 0)})
    assert parse_descriptor('empty', SO3_GROUP).is_empty
    assert parse_descriptor('all', SO3_GROUP) == ClassSet.everything(SO3_GROUP)
    with pytest.raises(MalformedDescriptor):
        parse_descriptor('tailD(3)', CIRCLE_GROUP)
    with pytest.raises(MalformedDescriptor):
        parse_descriptor('{C2', O2_GROUP)


@pytest.mark.parametrize('group', [CIRCLE_GROUP, O2_GROUP, SO3_GROUP])
def test_zariski_closure_is_a_closure_operator(group, rng):
    for _ in range(40):
        a, b = random_class_set(group, rng), random_class_set(group, rng)
        closed = zariski_closure(a).classes
        assert a.is_subset(closed)
        assert is_zariski_closed(closed)
        assert zariski_closure(closed).classes == closed
        assert closed.is_subset(zariski_closure(a.union(b)).classes)


def test_point_closure_is_zariski_closure_of_point(finite_groups):
    for group in (CIRCLE_GROUP, O2_GROUP, SO3_GROUP, finite_groups['S3']):
        for k in classes(group, 8):
            single = ClassSet.of(group, [k])
            assert point_closure(group, k).classes == zariski_closure(single).classes


def test_phi_membership_is_cotoral_maximality(finite_groups):
    for group in (CIRCLE_GROUP, O2_GROUP, SO3_GROUP, finite_groups['D8']):
        listed = classes(group, 8)
        top = ctmax(ClassSet.everything(group))
        for k in listed:
            maximal = not any(h != k and is_cotoral(group, k, h) for h in listed)
            assert is_in_phi(group, k) == maximal
            assert is_in_phi(group, k) == (k in top)
