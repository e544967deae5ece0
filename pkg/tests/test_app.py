"""
命令列介面與輸出工具測試
"""
import json
from fractions import Fraction

import pytest

from app import main, run
from errors import MalformedDescriptor
from group_catalog import O2_GROUP
from group_catalog.finite import format_table
from group_catalog.tables import cyclic_table
from isotropy_balmer import parse_expr, support
from semifree import attach_cell, sphere, wide_sphere_to_document
from utils import dump_json, format_rational, parse_vector


@pytest.fixture
def z2_path(tmp_path):
    path = tmp_path / 'z2.txt'
    path.write_text(format_table(cyclic_table(2)), encoding='utf-8')
    return str(path)


@pytest.fixture
def sphere_path(tmp_path):
    path = tmp_path / 's0.json'
    path.write_text(json.dumps(wide_sphere_to_document(sphere(0))), encoding='utf-8')
    return str(path)


def test_usage_errors_exit_with_two():
    doc, code = run(['nope'])
    assert code == 2 and doc["error"]["code"] == 'UsageError'
    doc, code = run([])
    assert code == 2
    doc, code = run(['cotoral', '--group', 'SU2', 'C2', 'SO2'])
    assert code == 2


def test_bad_class_exits_with_two_and_keeps_code():
    doc, code = run(['cotoral', '--group', 'O2', 'Q7', 'SO2'])
    assert code == 2
    assert doc["error"]["code"] == 'InvalidClass'


def test_domain_error_exits_with_one():
    doc, code = run(['realize', '--group', 'O2', '{O2}'])
    assert code == 1
    assert doc["error"]["code"] == 'NotRealizable'


def test_balmer_and_realizability_verbs():
    assert run(['balmer', 'leq', '--group', 'O2', 'C3', 'SO2']) == ({"leq": True}, 0)
    assert run(['realizable', '--group', 'Circle', 'Lct{C2,C3}']) == ({"realizable": True}, 0)
    assert run(['cotoral', '--group', 'O2', 'D3', 'O2']) == ({"cotoral": False}, 0)
    assert run(['restrict', '--group', 'SO3', 'O2', 'C2']) == ({"classes": ['C2', 'D1']}, 0)


def test_support_wraps_library():
    text = 'wedge(basic(O2,3),cell(C2))'
    doc, code = run(['support', '--group', 'O2', text])
    expected = support(parse_expr(text, O2_GROUP)).to_document()
    expected["expr"] = parse_expr(text, O2_GROUP).to_text()
    assert code == 0 and doc == expected


def test_realize_round_trip_through_cli():
    doc, code = run(['realize', '--group', 'O2', 'tailD(3)+O2'])
    assert code == 0
    assert doc["expr"] == 'basic(G,3)'


def test_burnside_verbs(z2_path):
    group = f"Finite:{z2_path}"
    doc, code = run(['burnside', 'marks', '--group', group])
    assert code == 0
    assert doc["rows"] == [["2/1", "1/1"], ["0/1", "1/1"]]
    doc, _ = run(['burnside', 'idempotent', 'F1', '--group', group])
    assert doc["coefficients"] == ["-1/2", "1/1"]
    doc, _ = run(['burnside', 'eval', 'F0', '1,0', '--group', group])
    assert doc["mark"] == "2/1"
    _, code = run(['burnside', 'marks', '--group', 'O2'])
    assert code == 1


def test_group_load(z2_path):
    doc, code = run(['group', 'load', '--file', z2_path])
    assert code == 0
    assert doc["order"] == 2 and doc["class_count"] == 2


def test_semifree_classes():
    doc, code = run(['semifree', 'classes', '--poly', '1+t^2'])
    assert code == 0
    assert doc["count"] == 3
    assert sum(1 for c in doc["classes"] if c["untwisted"]) == 2


def test_semifree_file_verbs(sphere_path):
    doc, code = run(['semifree', 'check', '--file', sphere_path])
    assert code == 0
    assert doc == {"wide_sphere": True, "untwisted": True, "p_fixed": '1', "p_borel": '1'}
    doc, _ = run(['semifree', 'attach', '--file', sphere_path, '--n', '1', '--cls', '1'])
    assert doc == {"model": wide_sphere_to_document(attach_cell(sphere(0), 1, [1])),
                   "untwisted": True}
    doc, _ = run(['semifree', 'twist', '--file', sphere_path, '--k', '1'])
    assert doc["k_twisted"] is False
    doc, _ = run(['semifree', 'iso', '--file', sphere_path, '--file2', sphere_path])
    assert doc == {"isomorphic": True}
    _, code = run(['semifree', 'attach', '--file', sphere_path, '--n', '1'])
    assert code == 2


def test_main_prints_canonical_json(capsys):
    code = main(['balmer', 'leq', '--group', 'O2', 'C3', 'SO2'])
    assert code == 0
    assert capsys.readouterr().out.strip() == '{"leq": true}'


def test_dump_json_is_deterministic():
    assert dump_json({"b": 1, "a": [1, 2]}) == '{"a": [1, 2], "b": 1}'
    assert dump_json({"b": 1, "a": [1, 2]}) == dump_json({"a": [1, 2], "b": 1})


def test_rational_helpers():
    assert format_rational(Fraction(-2, 4)) == '-1/2'
    assert format_rational(3) == '3/1'
    assert parse_vector('1, 0,-1/2') == [1, 0, Fraction(-1, 2)]
    with pytest.raises(MalformedDescriptor):
        parse_vector('1,x')
