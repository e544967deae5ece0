"""
本地測試運行腳本

--test        執行 pytest 測試組
--acceptance  重現驗收範例與隨機性質檢查
--demo        簡短示範
"""
import os
import sys
import logging
import random
from dotenv import load_dotenv

# 載入環境變數
load_dotenv()

# 設定日誌
logging.basicConfig(
    level=os.environ.get('TTG_LOG_LEVEL', 'INFO').upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.StreamHandler(sys.stdout)
    ]
)
logger = logging.getLogger(__name__)

# 隨機檢查的種子
RANDOM_SEED = int(os.environ.get('TTG_RANDOM_SEED', '20240101'))

# 隨機檢查的次數
PROGRAM_COUNT = 1000
ROUND_TRIP_COUNT = 100
EXPR_PAIR_COUNT = 500


def _standard_groups():
    from group_catalog.finite import load_finite_group
    from group_catalog.tables import STANDARD_TABLES
    return {name: load_finite_group(build(), name=name) for name, build in STANDARD_TABLES.items()}


def _catalogue_groups():
    from group_catalog import CIRCLE_GROUP, O2_GROUP, SO3_GROUP
    return [CIRCLE_GROUP, O2_GROUP, SO3_GROUP]


def check_wide_sphere_classes():
    """1 + t^2 的寬球面恰有三個同構類，其中兩個未扭轉"""
    from semifree import (
        LaurentPoly, direct_sum, enumerate_classes, is_isomorphic, is_untwisted,
        rep_sphere,
    )

    found = enumerate_classes(LaurentPoly.parse('1+t^2'))
    twisted = [w for w in found if not is_untwisted(w)]
    logger.info(f"同構類 {len(found)} 個，扭轉的 {len(twisted)} 個")
    if len(found) != 3 or len(twisted) != 1:
        return False
    wedge = direct_sum(rep_sphere(1), rep_sphere(-1, 2))
    return is_isomorphic(twisted[0], wedge)


def check_twisted_wedge():
    """S^z ∨ S^{2-z}：p_1 = p_T = 1 + t^2 但不是未扭轉"""
    from semifree import (
        LaurentPoly, direct_sum, is_untwisted, p_borel_jump, p_fixed, rep_sphere,
    )

    one = LaurentPoly.parse('1')
    t2 = LaurentPoly.parse('t^2')
    first = rep_sphere(1)
    second = rep_sphere(-1, 2)
    w = direct_sum(first, second)
    expected = LaurentPoly.parse('1+t^2')
    return (p_fixed(w) == expected and p_borel_jump(w) == expected
            and not is_untwisted(w)
            and (p_fixed(first), p_borel_jump(first)) == (one, t2)
            and (p_fixed(second), p_borel_jump(second)) == (t2, one))


def check_closure_suite():
    """隨機建構程序保持未扭轉；S^{kz} 平移扭轉條件"""
    from semifree import is_k_twisted, is_untwisted, smash_rep_sphere, validate
    from tests.generators import random_program

    rng = random.Random(RANDOM_SEED)
    logger.info(f"開始執行 {PROGRAM_COUNT} 個隨機建構程序")
    for i in range(PROGRAM_COUNT):
        w, steps = random_program(rng)
        if not validate(w) or not is_untwisted(w):
            logger.error(f"第 {i} 個程序失敗: {steps}")
            return False
        k = rng.randint(-3, 3)
        if not is_k_twisted(smash_rep_sphere(w, k), k):
            logger.error(f"第 {i} 個程序的 S^{k}z 平移失敗: {steps}")
            return False
    return True


def check_burnside_suite():
    """標記表三角、原始冪等元完備正交、子群類數與暴力列舉一致"""
    from fractions import Fraction
    from burnside import mark_of, marks_matrix, primitive_idempotent
    from group_catalog import classes
    from group_catalog.finite import brute_force_subgroups

    for name, group in _standard_groups().items():
        data = group.finite
        matrix = marks_matrix(group)
        if not matrix.is_triangular():
            return False
        if matrix.diagonal() != [Fraction(c.weyl_order) for c in data.classes]:
            return False
        listed = classes(group)
        idempotents = [primitive_idempotent(group, k) for k in listed]
        total = [sum(column) for column in zip(*idempotents)]
        if total != [0] * (len(listed) - 1) + [1]:
            return False
        for k, vector in zip(listed, idempotents):
            for other in listed:
                if mark_of(group, vector, other) != (1 if other == k else 0):
                    return False
        remaining = set(brute_force_subgroups(group))
        count = 0
        while remaining:
            subgroup = remaining.pop()
            remaining -= {data.conjugate(subgroup, g) for g in range(data.order)}
            count += 1
        logger.info(f"{name}: {len(listed)} 個子群類，暴力列舉 {count} 個")
        if count != len(listed):
            return False
    return len(_standard_groups()['S4'].finite.classes) == 11


def check_o2_basic_cells():
    """O2 全群的基本胞腔：ctmax = {O2} ∪ {D(m): m >= n} 且可實現"""
    from group_catalog import FULL, O2_GROUP, ClassSet, SeriesSet
    from isotropy_balmer import basic, ctmax, is_realizable, support

    for n in (1, 2, 5):
        s = support(basic(O2_GROUP, FULL, n))
        expected = ClassSet.build(O2_GROUP, [FULL], {'D': SeriesSet.tail(1, n)})
        if ctmax(s) != expected or not is_realizable(s):
            return False
    return True


def check_circle_antichains():
    """圓群：有限循環反鏈可實現；全部循環類（不含全群）不可實現"""
    from itertools import combinations
    from group_catalog import CIRCLE_GROUP, C, ClassSet, SeriesSet
    from isotropy_balmer import is_realizable, lambda_ct
    from phi_space import is_f_compact

    cyclic = [C(n) for n in range(1, 9)]
    for size in (1, 2, 3):
        for chosen in combinations(cyclic, size):
            if any(a != b and b.index % a.index == 0 for a in chosen for b in chosen):
                continue
            if not is_realizable(lambda_ct(ClassSet.of(CIRCLE_GROUP, chosen))):
                return False
    everything = ClassSet.build(CIRCLE_GROUP, series={'C': SeriesSet.full(1)})
    return not is_f_compact(CIRCLE_GROUP, everything) and not is_realizable(everything)


def check_restriction():
    """SO(3) 的 C2 限制到 O(2) 得到 C2 與 D1"""
    from group_catalog import C, D, O2, SO3_GROUP, restrict_class

    return set(restrict_class(SO3_GROUP, O2, C(2))) == {C(2), D(1)}


def check_prime_posets():
    """prime_leq 與餘環面關係一致並為偏序；O2 中 SO2 的點閉包"""
    from group_catalog import O2_GROUP, SO2, C, ClassSet, SeriesSet, classes, is_cotoral
    from isotropy_balmer import point_closure, prime, prime_leq

    groups = _catalogue_groups() + list(_standard_groups().values())
    for group in groups:
        listed = classes(group, 12)
        leq = {}
        for a in listed:
            for b in listed:
                leq[a, b] = prime_leq(prime(group, a), prime(group, b))
                if leq[a, b] != is_cotoral(group, a, b):
                    return False
        for a in listed:
            if not leq[a, a]:
                return False
            for b in listed:
                if a != b and leq[a, b] and leq[b, a]:
                    return False
                if not leq[a, b]:
                    continue
                if any(leq[b, c] and not leq[a, c] for c in listed):
                    return False
    closure = point_closure(O2_GROUP, SO2).classes
    expected = ClassSet.build(O2_GROUP, [SO2], {'C': SeriesSet.full(1)})
    return closure == expected and C(7) in closure


def check_realize_round_trip():
    """隨機可實現集合 S 滿足 support(realize(S)) = S；不可實現集合報錯"""
    from errors import NotRealizable
    from isotropy_balmer import realize, support
    from tests.generators import random_realizable_set, random_unrealizable_set

    rng = random.Random(RANDOM_SEED)
    for group in _catalogue_groups() + list(_standard_groups().values()):
        for _ in range(ROUND_TRIP_COUNT):
            s = random_realizable_set(group, rng)
            if support(realize(s)).classes != s:
                logger.error(f"{group.name} 的往返失敗: {s}")
                return False
        if group.is_finite:
            continue
        for _ in range(ROUND_TRIP_COUNT):
            s = random_unrealizable_set(group, rng)
            try:
                realize(s)
            except NotRealizable:
                continue
            logger.error(f"{group.name} 的 {s} 應該不可實現")
            return False
    return True


def check_thick_membership():
    """in_thickt 與 support 包含一致；loct_equal 為等價關係"""
    from isotropy_balmer import in_thickt, loct_equal, support
    from tests.generators import random_expr

    rng = random.Random(RANDOM_SEED)
    groups = _catalogue_groups() + [_standard_groups()['S3']]
    for i in range(EXPR_PAIR_COUNT):
        group = groups[i % len(groups)]
        x, y, z = (random_expr(group, rng) for _ in range(3))
        sx, sy = support(x).classes, support(y).classes
        if in_thickt(y, x) != sy.is_subset(sx):
            return False
        if not loct_equal(x, x) or loct_equal(x, y) != loct_equal(y, x):
            return False
        if loct_equal(x, y) and loct_equal(y, z) and not loct_equal(x, z):
            return False
        if loct_equal(x, y) and sx != sy:
            return False
    return True


def run_acceptance():
    """執行所有驗收檢查"""
    checks = [
        ("寬球面同構類 1+t^2", check_wide_sphere_classes),
        ("S^z ∨ S^{2-z} 扭轉", check_twisted_wedge),
        ("建構程序封閉性", check_closure_suite),
        ("Burnside 環", check_burnside_suite),
        ("O2 基本胞腔", check_o2_basic_cells),
        ("圓群循環反鏈", check_circle_antichains),
        ("SO3 到 O2 的限制", check_restriction),
        ("質理想偏序", check_prime_posets),
        ("實現往返", check_realize_round_trip),
        ("厚理想與局部化理想", check_thick_membership),
    ]

    results = []

    for name, check_func in checks:
        logger.info(f"執行檢查: {name}")
        try:
            result = check_func()
            results.append((name, result))
        except Exception as e:
            logger.error(f"檢查 {name} 出錯: {str(e)}")
            results.append((name, False))

    # 顯示檢查結果
    print("\n" + "=" * 50)
    print("驗收結果摘要:")
    print("=" * 50)

    for name, result in results:
        status = "✅ 通過" if result else "❌ 失敗"
        print(f"{name}: {status}")

    print("=" * 50 + "\n")
    return all(result for _, result in results)


def run_test():
    """執行 pytest 測試組"""
    import pytest

    logger.info("開始執行 pytest 測試組")
    code = pytest.main(['-q', 'tests'])

    print("\n" + "=" * 50)
    print("測試結果摘要:")
    print("=" * 50)
    status = "✅ 通過" if code == 0 else "❌ 失敗"
    print(f"pytest: {status}")
    print("=" * 50 + "\n")
    return code == 0


def run_demo():
    """示範幾個命令列呼叫"""
    from app import run
    from utils import dump_json

    commands = [
        ['group', 'info', '--group', 'O2', '--bound', '4'],
        ['restrict', '--group', 'SO3', 'O2', 'C2'],
        ['support', '--group', 'O2', 'basic(O2,3)'],
        ['realizable', '--group', 'Circle', 'Lct{C2,C3}'],
        ['balmer', 'leq', '--group', 'O2', 'C3', 'SO2'],
        ['semifree', 'classes', '--poly', '1+t^2'],
    ]
    for argv in commands:
        document, code = run(argv)
        print(f"$ ttg {' '.join(argv)}")
        print(dump_json(document))
        print(f"(結束碼 {code})\n")


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description='本地測試運行腳本')
    parser.add_argument('--test', action='store_true', help='執行 pytest 測試組')
    parser.add_argument('--acceptance', action='store_true', help='執行驗收檢查')
    parser.add_argument('--demo', action='store_true', help='執行示範')

    args = parser.parse_args()

    if args.test:
        ok = run_test()
    elif args.acceptance:
        ok = run_acceptance()
    elif args.demo:
        run_demo()
        ok = True
    else:
        # 默認執行測試與驗收檢查
        ok = run_test() and run_acceptance()
    sys.exit(0 if ok else 1)
