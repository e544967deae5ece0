"""
子群目錄測試
"""
import pytest

from errors import InvalidClass, NotAGroup, NotSubconjugate, TooLarge, UnsupportedPair, UsageError
from group_catalog import (
    CIRCLE_GROUP, FULL, ICOSA, O2, O2_GROUP, OCTA, SO2, SO3_GROUP, TETRA, C, D, F,
    classes, describe, downset, is_cotoral, is_in_phi, is_subconjugate,
    load_finite_group, normalizer_class, parse_class, parse_group, restrict_class,
    separating_clopen, subgroup_model,
)
from group_catalog.finite import (
    brute_force_subgroups, format_table, load_table_file, parse_table_text,
    subgroup_by_generators,
)
from group_catalog.tables import cyclic_table, product_table
from phi_space import ClopenSet, phi


def _conjugacy_count(group):
    data = group.finite
    remaining = set(brute_force_subgroups(group))
    count = 0
    while remaining:
        subgroup = remaining.pop()
        remaining -= {data.conjugate(subgroup, g) for g in range(data.order)}
        count += 1
    return count


def test_trivial_group_has_one_class():
    group = load_finite_group([[0]])
    assert classes(group) == [F(0)]
    assert group.full_class() == F(0)


@pytest.mark.parametrize('name, expected', [
    ('Z2', 2), ('Z6', 4), ('S3', 4), ('D8', 8), ('A4', 5), ('S4', 11),
])
def test_class_counts(finite_groups, name, expected):
    group = finite_groups[name]
    assert len(classes(group)) == expected
    assert _conjugacy_count(group) == expected


def test_klein_four_from_product_table():
    group = load_finite_group(product_table(cyclic_table(2), cyclic_table(2)))
    assert len(classes(group)) == 5


def test_classes_sorted_by_order(s4):
    orders = [c.order for c in s4.finite.classes]
    assert orders == sorted(orders)
    assert orders[0] == 1 and orders[-1] == 24


def test_weyl_orders_of_s3(s3):
    assert [c.weyl_order for c in s3.finite.classes] == [6, 1, 2, 1]


def test_rejects_non_group_tables():
    with pytest.raises(NotAGroup):
        load_finite_group([[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        load_finite_group([[1, 0], [0, 1]])
    with pytest.raises(NotAGroup):
        load_finite_group([])


def test_rejects_large_tables():
    with pytest.raises(TooLarge):
        load_finite_group(cyclic_table(50))


def test_table_file_round_trip(tmp_path):
    path = tmp_path / 'z6.txt'
    path.write_text(format_table(cyclic_table(6)), encoding='utf-8')
    group = load_table_file(str(path))
    assert group.finite.name == 'z6'
    assert len(classes(group)) == 4
    assert parse_table_text(format_table(cyclic_table(3))) == cyclic_table(3)


def test_missing_table_file():
    with pytest.raises(NotAGroup):
        load_table_file('/nonexistent/table.txt')


def test_subgroup_by_generators(s3):
    assert subgroup_by_generators(s3, []) == F(0)
    assert subgroup_by_generators(s3, range(6)) == F(3)


def test_catalogue_listings():
    assert classes(CIRCLE_GROUP, 3) == [C(1), C(2), C(3), FULL]
    assert classes(O2_GROUP, 2) == [C(1), C(2), D(1), D(2), SO2, FULL]
    assert classes(SO3_GROUP, 2) == [C(1), C(2), D(2), SO2, O2, TETRA, OCTA, ICOSA, FULL]


def test_subconjugacy():
    assert is_subconjugate(O2_GROUP, C(2), D(4))
    assert not is_subconjugate(O2_GROUP, D(2), SO2)
    assert is_subconjugate(O2_GROUP, D(3), D(3))
    assert is_subconjugate(SO3_GROUP, C(2), D(3))
    assert not is_subconjugate(SO3_GROUP, C(3), D(4))
    assert is_subconjugate(SO3_GROUP, D(3), ICOSA)
    assert not is_subconjugate(SO3_GROUP, C(5), OCTA)
    assert is_subconjugate(SO3_GROUP, TETRA, OCTA)


def test_finite_subconjugacy_is_reflexive(s4):
    for k in classes(s4):
        assert is_subconjugate(s4, k, k)
        assert is_subconjugate(s4, F(0), k)


def test_cotoral():
    assert is_cotoral(O2_GROUP, C(5), SO2)
    assert not is_cotoral(O2_GROUP, D(3), FULL)
    assert not is_cotoral(SO3_GROUP, SO2, FULL)
    assert is_cotoral(CIRCLE_GROUP, C(4), FULL)


def test_finite_weyl_group():
    assert not is_in_phi(CIRCLE_GROUP, C(7))
    assert is_in_phi(O2_GROUP, D(3))
    assert is_in_phi(SO3_GROUP, TETRA)
    assert is_in_phi(SO3_GROUP, SO2)
    assert not is_in_phi(O2_GROUP, C(2))


def test_invalid_classes():
    with pytest.raises(InvalidClass):
        is_subconjugate(SO3_GROUP, D(1), O2)
    with pytest.raises(InvalidClass):
        parse_class('Q7', O2_GROUP)
    with pytest.raises(InvalidClass):
        parse_class('A4', O2_GROUP)


def test_parse_class_tokens(s3):
    assert parse_class('T', SO3_GROUP) == TETRA
    assert parse_class('icosa', SO3_GROUP) == ICOSA
    assert parse_class('O2', O2_GROUP) == FULL
    assert parse_class('O2', SO3_GROUP) == O2
    assert parse_class('d5', O2_GROUP) == D(5)
    assert parse_class('G', s3) == F(3)


def test_parse_group():
    assert parse_group('circle') == CIRCLE_GROUP
    assert parse_group('SO3') == SO3_GROUP
    with pytest.raises(UsageError):
        parse_group('SU2')


def test_downset():
    down = downset(O2_GROUP, D(4))
    assert down.finite_members() == [C(1), C(2), C(4), D(1), D(2), D(4)]
    assert C(9) in downset(SO3_GROUP, O2)
    assert downset(SO3_GROUP, TETRA).finite_members() == [C(1), C(2), C(3), D(2), TETRA]


def test_restriction_of_c2_to_o2():
    assert restrict_class(SO3_GROUP, O2, C(2)) == [C(2), D(1)]
    assert restrict_class(SO3_GROUP, O2, D(3)) == [D(3)]
    assert restrict_class(O2_GROUP, SO2, C(6)) == [C(6)]


def test_restriction_errors():
    with pytest.raises(NotSubconjugate):
        restrict_class(SO3_GROUP, O2, TETRA)
    with pytest.raises(UnsupportedPair):
        restrict_class(O2_GROUP, D(2), C(1))


def test_restriction_to_sylow_of_s4(s4):
    data = s4.finite
    sylow = next(F(c.index) for c in data.classes if c.order == 8)
    order_two = [F(c.index) for c in data.classes if c.order == 2]
    sizes = sorted(len(restrict_class(s4, sylow, k)) for k in order_two)
    assert sizes == [1, 2]


def test_restriction_to_whole_group(s3):
    assert restrict_class(s3, F(3), F(1)) == [F(1)]


def test_normalizers(s3):
    assert normalizer_class(SO3_GROUP, C(3)) == O2
    assert normalizer_class(SO3_GROUP, TETRA) == OCTA
    assert normalizer_class(SO3_GROUP, D(2)) == OCTA
    assert normalizer_class(O2_GROUP, D(3)) == D(6)
    assert normalizer_class(s3, F(1)) == F(1)
    assert normalizer_class(s3, F(2)) == F(3)


def test_separating_clopens(s3):
    u = separating_clopen(SO3_GROUP, C(2))
    assert u == ClopenSet.of(phi(O2_GROUP), [SO2])
    u = separating_clopen(SO3_GROUP, TETRA)
    assert TETRA in u and OCTA not in u
    u = separating_clopen(s3, F(1))
    assert len(u.isolated) == 1


def test_subgroup_model_fusion():
    model = subgroup_model(SO3_GROUP, O2)
    assert model.fuse(D(1)) == C(2)
    assert model.fuse(FULL) == O2
    assert model.preimage(C(2)) == [C(2), D(1)]
    circle = subgroup_model(O2_GROUP, SO2)
    assert circle.fuse(FULL) == SO2


def test_describe_o2():
    doc = describe(O2_GROUP, 4)
    assert doc["group"] == 'O2'
    assert doc["special_classes"] == ['SO2', 'G']
    assert doc["phi"]["sequences"] == [{"series": "D", "start": 1, "limit": "G"}]


def _is_partial_order(listed, leq):
    for a in listed:
        assert leq(a, a)
        for b in listed:
            if a != b and leq(a, b):
                assert not leq(b, a)
            for c in listed:
                if leq(a, b) and leq(b, c):
                    assert leq(a, c)
    return True


@pytest.mark.parametrize('name', ['Z2', 'Z6', 'S3', 'D8', 'A4'])
def test_finite_relations_are_partial_orders(finite_groups, name):
    group = finite_groups[name]
    listed = classes(group)
    assert _is_partial_order(listed, lambda a, b: is_subconjugate(group, a, b))
    assert _is_partial_order(listed, lambda a, b: is_cotoral(group, a, b))
    for a in listed:
        for b in listed:
            assert is_cotoral(group, a, b) == (a == b)


@pytest.mark.parametrize('group', [CIRCLE_GROUP, O2_GROUP, SO3_GROUP])
def test_catalogue_relations_are_partial_orders(group):
    listed = classes(group, 8)
    assert _is_partial_order(listed, lambda a, b: is_subconjugate(group, a, b))
    assert _is_partial_order(listed, lambda a, b: is_cotoral(group, a, b))
    for a in listed:
        for b in listed:
            if is_cotoral(group, a, b):
                assert is_subconjugate(group, a, b)


@pytest.mark.parametrize('name', ['Z2', 'Z6', 'S3', 'D8', 'A4'])
def test_subconjugacy_matches_brute_force(finite_groups, name):
    group = finite_groups[name]
    data = group.finite
    subgroups = brute_force_subgroups(group)
    for low in data.classes:
        for high in data.classes:
            expected = any(s <= high.representative and data.class_index_of(s) == low.index
                           for s in subgroups)
            assert is_subconjugate(group, F(low.index), F(high.index)) == expected


@pytest.mark.parametrize('name', ['Z6', 'S3', 'D8', 'A4', 'S4'])
def test_restriction_matches_brute_force(finite_groups, name):
    group = finite_groups[name]
    data = group.finite
    subgroups = brute_force_subgroups(group)
    for h in data.classes:
        model = subgroup_model(group, F(h.index))
        ordered = sorted(h.representative)
        for k in data.classes:
            if not is_subconjugate(group, F(k.index), F(h.index)):
                continue
            found = restrict_class(group, F(h.index), F(k.index))
            assert len(found) == len(set(found))
            covered = set()
            for cls in found:
                for member in model.group.finite.class_of(cls.index).members:
                    covered.add(frozenset(ordered[x] for x in member))
            expected = {s for s in subgroups
                        if s <= h.representative and data.class_index_of(s) == k.index}
            assert covered == expected
