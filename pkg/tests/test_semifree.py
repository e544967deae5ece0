"""
半自由寬球面模型測試
"""
import json

import pytest

from errors import (
    ClassNotInGroup, InvalidWideSphere, MixedParity, SplitUnavailable, TooLarge, UsageError,
)
from semifree import (
    GradedPart, LaurentPoly, attach_cell, canonical_form, direct_sum, empty_sphere,
    enumerate_classes, homotopy_classes, in_thick_sphere, is_isomorphic, is_k_twisted,
    is_untwisted, load_wide_sphere, p_borel_jump, p_fixed, rep_sphere, smash_rep_sphere,
    sphere, suspend, twisting_report, validate, wide_sphere_from_document,
    wide_sphere_to_document,
)
from semifree import linalg
from tests.generators import random_program


def _poly(text):
    return LaurentPoly.parse(text)


@pytest.fixture
def mapping_cone():
    """S^0 沿 [S^1, S^0] 的生成元黏上 2-胞腔"""
    return attach_cell(sphere(0), 1, [1])


@pytest.fixture
def twisted_pair():
    """S^z ∨ S^{2-z}"""
    return direct_sum(rep_sphere(1), rep_sphere(-1, 2))


def test_sphere_is_valid_and_untwisted():
    w = sphere(0)
    assert validate(w)
    assert p_fixed(w) == _poly('1')
    assert p_borel_jump(w) == _poly('1')
    assert is_untwisted(w)


def test_nesting_violation_is_invalid():
    part = GradedPart(0, ((0, 1), (2, 1)), 0, 2,
                      (linalg.subspace([[0, 1]], 2), linalg.full_space(2)))
    w = empty_sphere().with_part(part)
    assert not validate(w)


def test_rep_sphere_polynomials():
    assert p_fixed(rep_sphere(1)) == _poly('1')
    assert p_borel_jump(rep_sphere(1)) == _poly('t^2')
    assert p_fixed(rep_sphere(-1, 2)) == _poly('t^2')
    assert p_borel_jump(rep_sphere(-1, 2)) == _poly('1')
    assert not is_untwisted(rep_sphere(1))
    assert is_k_twisted(rep_sphere(1), 1)


def test_twisted_pair_has_equal_polynomials(twisted_pair):
    assert p_fixed(twisted_pair) == _poly('1+t^2')
    assert p_borel_jump(twisted_pair) == _poly('1+t^2')
    report = twisting_report(twisted_pair)
    assert report["dimension"]
    assert not report["intersection"]
    assert report["failed_degrees"] == [0]
    assert not is_untwisted(twisted_pair)


def test_twisting_report_of_rep_sphere():
    assert twisting_report(rep_sphere(1)) == {
        "k": 0, "dimension": False, "intersection": False, "failed_degrees": [0],
    }


def test_mapping_cone_is_untwisted(mapping_cone):
    assert p_fixed(mapping_cone) == _poly('1+t^2')
    assert p_borel_jump(mapping_cone) == _poly('1+t^2')
    assert is_untwisted(mapping_cone)
    assert not is_isomorphic(mapping_cone, direct_sum(sphere(0), sphere(2)))


def test_direct_sum_and_suspension():
    w = direct_sum(sphere(0), sphere(2))
    assert w.even.level(2) == w.even.coordinate_space(2)
    assert is_untwisted(w)
    assert is_isomorphic(suspend(sphere(0), 2), sphere(2))
    odd = suspend(sphere(0), 1)
    assert odd.even.is_empty and odd.odd.degrees() == [1]


def test_homotopy_classes_of_sphere():
    assert homotopy_classes(0, sphere(0)).dimension == 1
    assert homotopy_classes(1, sphere(0)).dimension == 1
    assert homotopy_classes(3, sphere(0)).dimension == 1
    assert homotopy_classes(-1, sphere(0)).dimension == 0
    assert homotopy_classes(2, sphere(0)).dimension == 0
    assert not homotopy_classes(0, sphere(0)).provisional


def test_homotopy_classes_of_mixed_sphere():
    w = direct_sum(sphere(0), sphere(-1))
    classes = homotopy_classes(0, w)
    assert classes.provisional
    assert classes.to_document()["fixed_dimension"] == 1
    assert classes.to_document()["extension_dimension"] == 1


def test_attach_cells(mapping_cone):
    assert is_isomorphic(attach_cell(sphere(0), 1, [0]), direct_sum(sphere(0), sphere(2)))
    split = attach_cell(direct_sum(sphere(0), sphere(2)), 0, [1])
    assert is_isomorphic(split, sphere(2))
    assert is_isomorphic(attach_cell(sphere(0), 1, [2]), mapping_cone)


def test_attach_cell_errors(twisted_pair):
    with pytest.raises(SplitUnavailable):
        attach_cell(twisted_pair, 0, [1])
    with pytest.raises(MixedParity):
        attach_cell(direct_sum(sphere(0), sphere(-1)), 0, [1, 1])
    with pytest.raises(ClassNotInGroup):
        attach_cell(sphere(0), 0, [1, 2])


def test_enumerate_classes_of_two_cells(twisted_pair, mapping_cone):
    found = enumerate_classes(_poly('1+t^2'))
    assert len(found) == 3
    assert sum(1 for w in found if is_untwisted(w)) == 2
    twisted = [w for w in found if not is_untwisted(w)]
    assert is_isomorphic(twisted[0], twisted_pair)
    assert any(is_isomorphic(w, mapping_cone) for w in found)
    assert any(is_isomorphic(w, direct_sum(sphere(0), sphere(2))) for w in found)


def test_enumerate_small_cases():
    assert len(enumerate_classes(_poly('1'))) == 1
    assert len(enumerate_classes(_poly('2'))) == 1
    assert enumerate_classes(LaurentPoly()) == [empty_sphere()]
    assert len(enumerate_classes(_poly('t+t^3'), parity=1)) == 3


def test_enumerate_refuses():
    with pytest.raises(UsageError):
        enumerate_classes(_poly('1+t'))
    with pytest.raises(UsageError):
        enumerate_classes(_poly('1+t^2'), parity=1)
    with pytest.raises(TooLarge):
        enumerate_classes(_poly('4'))
    with pytest.raises(TooLarge):
        enumerate_classes(_poly('1+t^2+t^4'))


def test_canonical_form_identifies_scalings(mapping_cone):
    assert canonical_form(attach_cell(sphere(0), 1, [3])) == canonical_form(mapping_cone)


@pytest.mark.parametrize('k', [-2, -1, 1, 2])
def test_smash_shifts_twisting(k, mapping_cone, twisted_pair):
    for w in (sphere(0), mapping_cone, twisted_pair, direct_sum(sphere(0), sphere(2))):
        assert is_untwisted(w) == is_k_twisted(smash_rep_sphere(w, k), k)
        assert in_thick_sphere(smash_rep_sphere(w, k), k) == is_untwisted(w)


def test_random_programs_stay_untwisted(rng):
    for _ in range(150):
        w, steps = random_program(rng)
        assert validate(w), steps
        assert is_untwisted(w), steps


def test_polynomial_parsing():
    p = _poly('2t^-2 + t')
    assert p.terms == ((-2, 2), (1, 1))
    assert str(p) == '2t^-2+t'
    assert str(_poly('1+t^2')) == '1+t^2'
    assert _poly('1+t^2').shift(2) == _poly('t^2+t^4')
    for bad in ('1+', '-t', 'x+1', 't^(1/2)'):
        with pytest.raises(UsageError):
            _poly(bad)


def test_document_of_sphere():
    assert wide_sphere_to_document(sphere(0)) == {
        "even": {"v_dims": {"0": 1}, "window": [0, 0], "filtration": {"0": [["1/1"]]}},
    }


def test_load_wide_sphere(tmp_path, mapping_cone):
    path = tmp_path / 'cone.json'
    path.write_text(json.dumps(wide_sphere_to_document(mapping_cone)), encoding='utf-8')
    loaded = load_wide_sphere(str(path))
    assert is_isomorphic(loaded, mapping_cone)
    assert is_untwisted(loaded)


def test_document_errors(tmp_path):
    bad_documents = [
        {'foo': 1},
        {'even': {'v_dims': {'1': 1}}},
        {'even': {'v_dims': {'0': 1}}},
        {'even': {'v_dims': {'0': 1, '2': 1}, 'window': [0, 2],
                  'filtration': {'0': [['0', '1']], '2': [['1', '0']]}}},
    ]
    for doc in bad_documents:
        with pytest.raises(InvalidWideSphere):
            wide_sphere_from_document(doc)
    path = tmp_path / 'broken.json'
    path.write_text('{', encoding='utf-8')
    with pytest.raises(InvalidWideSphere):
        load_wide_sphere(str(path))
    with pytest.raises(InvalidWideSphere):
        load_wide_sphere(str(tmp_path / 'missing.json'))


def test_extension_attachments_add_one_cell(rng):
    for _ in range(100):
        w, steps = random_program(rng)
        degrees = [d for part in w.parts() for d in part.degrees()] or [0]
        n = rng.choice(degrees) + rng.choice((-1, 0, 1))
        classes_at = homotopy_classes(n, w)
        vector = [0] * len(classes_at.fixed) + [rng.randint(-2, 2) for _ in classes_at.extension]
        result = attach_cell(w, n, vector)
        new_cell = LaurentPoly.monomial(n + 1)
        assert validate(result), steps
        assert p_fixed(result) == p_fixed(w) + new_cell, steps
        assert p_borel_jump(result) == p_borel_jump(w) + new_cell, steps


def _random_summand(rng):
    if rng.random() < 0.5:
        return random_program(rng)[0]
    return rep_sphere(rng.randint(-2, 2), rng.randint(-2, 2))


def test_direct_sum_is_componentwise(rng):
    for _ in range(80):
        first, second = _random_summand(rng), _random_summand(rng)
        total = direct_sum(first, second)
        assert validate(total)
        assert p_fixed(total) == p_fixed(first) + p_fixed(second)
        assert p_borel_jump(total) == p_borel_jump(first) + p_borel_jump(second)
        meets = [twisting_report(w)["intersection"] for w in (first, second)]
        assert twisting_report(total)["intersection"] == all(meets)
        if is_untwisted(total):
            assert is_untwisted(first) and is_untwisted(second)
