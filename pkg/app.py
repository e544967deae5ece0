"""
ttg 命令列主程式

用法: python app.py <動詞> [子動詞] [參數...] [--group G] [--bound n] ...
輸出為標準 JSON；成功結束碼 0，領域錯誤 1，用法錯誤 2。
"""
import argparse
import logging
import os
import sys

from dotenv import load_dotenv

from burnside import marks_matrix, mark_of, primitive_idempotent
from errors import InvalidClass, MalformedDescriptor, MalformedExpr, TTGError, UsageError
from group_catalog import (
    classes, describe, is_cotoral, is_in_phi, is_subconjugate, parse_class,
    parse_group, restrict_class,
)
from group_catalog.catalogue import DEFAULT_BOUND
from group_catalog.finite import load_table_file
from isotropy_balmer import (
    ctmax, in_thickt, is_realizable, is_zariski_closed, loct_equal,
    parse_descriptor, parse_expr, point_closure, prime, prime_leq, realize,
    separate, support, zariski_closure,
)
from phi_space import (
    ClopenSet, basic_nbhd, clopen_complement, clopen_difference,
    clopen_intersect, clopen_union, is_f_compact, is_f_open, phi,
)
from semifree import (
    LaurentPoly, attach_cell, enumerate_classes, homotopy_classes,
    is_isomorphic, is_untwisted, load_wide_sphere, p_borel_jump, p_fixed,
    twisting_report, wide_sphere_to_document,
)
from utils import class_tokens, dump_json, format_rational, parse_vector

# 載入環境變數
load_dotenv()

# 設定日誌
logging.basicConfig(
    level=os.environ.get('TTG_LOG_LEVEL', 'WARNING').upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

# 參數解析錯誤（結束碼 2）
_ARGUMENT_ERRORS = (InvalidClass, MalformedDescriptor, MalformedExpr)


class CommandParser(argparse.ArgumentParser):
    """解析失敗時拋出 UsageError，而不是直接結束程式"""

    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = CommandParser(prog='ttg', description='有理等變穩定同倫範疇的張量三角幾何計算工具')
    parser.add_argument('verb', help='動詞，例如 group、support、semifree')
    parser.add_argument('rest', nargs='*', help='子動詞與位置參數')
    parser.add_argument('--group', help='Circle、O2、SO3 或 Finite:<乘法表路徑>')
    parser.add_argument('--bound', type=int, default=None, help='無窮系列列表的截斷上限')
    parser.add_argument('--file', help='輸入檔案（乘法表或寬球面 JSON）')
    parser.add_argument('--file2', help='第二個寬球面 JSON 檔案')
    parser.add_argument('--poly', help='Laurent 多項式，例如 "1+t^2"')
    parser.add_argument('--parity', type=int, choices=(0, 1), default=None, help='奇偶部分')
    parser.add_argument('--n', type=int, default=None, help='次數或序列截斷')
    parser.add_argument('--k', type=int, default=0, help='表示球面 S^{kz} 的 k')
    parser.add_argument('--cls', help='同倫類的係數向量，例如 "1,0"')
    return parser


def _argument(parse, *args):
    """解析位置參數；解析失敗屬於用法錯誤"""
    try:
        return parse(*args)
    except _ARGUMENT_ERRORS as e:
        e.exit_code = 2
        raise


def _positionals(args, count, usage):
    if len(args.rest) != count:
        raise UsageError(f"用法: {usage}")
    return args.rest


def _require(value, flag):
    if value is None:
        raise UsageError(f"缺少必要參數 {flag}")
    return value


def _group(args):
    return parse_group(_require(args.group, '--group'))


def _bound(args):
    return DEFAULT_BOUND if args.bound is None else args.bound


def _class(group, token):
    return _argument(parse_class, token, group)


def _expr(group, text):
    return _argument(parse_expr, text, group)


def _set(group, text):
    return _argument(parse_descriptor, text, group)


def _wide_sphere(path, flag):
    return load_wide_sphere(_require(path, flag))


# 群與子群類

def cmd_group(args):
    sub = args.rest[0] if args.rest else None
    if sub == 'load':
        path = args.file or (args.rest[1] if len(args.rest) > 1 else None)
        group = load_table_file(_require(path, '--file'))
        data = group.finite
        return {
            "group": group.name,
            "order": data.order,
            "class_count": len(data.classes),
            "classes": [
                {
                    "class": f"F{c.index}",
                    "order": c.order,
                    "conjugates": c.size,
                    "weyl_order": c.weyl_order,
                }
                for c in data.classes
            ],
        }
    if sub == 'info':
        return describe(_group(args), _bound(args))
    if sub == 'subgroups':
        group = _group(args)
        listed = classes(group, _bound(args))
        return {
            "group": group.name,
            "bound": _bound(args),
            "classes": class_tokens(listed),
            "phi": [k.token for k in listed if is_in_phi(group, k)],
        }
    raise UsageError("用法: group load|info|subgroups")


def cmd_cotoral(args):
    group = _group(args)
    low, high = _positionals(args, 2, 'cotoral --group G L K')
    return {"cotoral": is_cotoral(group, _class(group, low), _class(group, high))}


def cmd_subconj(args):
    group = _group(args)
    low, high = _positionals(args, 2, 'subconj --group G L K')
    return {"subconjugate": is_subconjugate(group, _class(group, low), _class(group, high))}


def cmd_restrict(args):
    group = _group(args)
    h, k = _positionals(args, 2, 'restrict --group G H K')
    return {"classes": class_tokens(restrict_class(group, _class(group, h), _class(group, k)))}


# ΦG 與開閉集

def cmd_phi(args):
    group = _group(args)
    sub = args.rest[0] if args.rest else None
    if sub == 'show' and len(args.rest) == 1:
        return phi(group).to_document()
    if sub == 'nbhd' and len(args.rest) == 2:
        return basic_nbhd(group, _class(group, args.rest[1]), args.n).to_document()
    if sub == 'open' and len(args.rest) == 2:
        return {"f_open": is_f_open(group, _set(group, args.rest[1]))}
    if sub == 'compact' and len(args.rest) == 2:
        return {"f_compact": is_f_compact(group, _set(group, args.rest[1]))}
    raise UsageError("用法: phi show | phi nbhd K [--n cutoff] | phi open S | phi compact S")


_CLOPEN_OPERATIONS = {
    'union': clopen_union,
    'intersect': clopen_intersect,
    'difference': clopen_difference,
}


def cmd_clopen(args):
    group = _group(args)
    space = phi(group)
    sub = args.rest[0] if args.rest else None
    operands = [ClopenSet.from_class_set(space, _set(group, text)) for text in args.rest[1:]]
    if sub == 'complement' and len(operands) == 1:
        return clopen_complement(operands[0]).to_document()
    if sub in _CLOPEN_OPERATIONS and len(operands) == 2:
        return _CLOPEN_OPERATIONS[sub](*operands).to_document()
    raise UsageError("用法: clopen union|intersect|difference A B 或 clopen complement A")


# Burnside 環

def cmd_burnside(args):
    group = _group(args)
    sub = args.rest[0] if args.rest else None
    if sub == 'marks' and len(args.rest) == 1:
        return marks_matrix(group).to_document()
    if sub == 'idempotent' and len(args.rest) == 2:
        k = _class(group, args.rest[1])
        return {
            "class": k.token,
            "basis": list(marks_matrix(group).labels),
            "coefficients": [format_rational(c) for c in primitive_idempotent(group, k)],
        }
    if sub == 'eval' and len(args.rest) == 3:
        k = _class(group, args.rest[1])
        vector = _argument(parse_vector, args.rest[2])
        return {"class": k.token, "mark": format_rational(mark_of(group, vector, k))}
    raise UsageError("用法: burnside marks | burnside idempotent K | burnside eval K c1,c2,...")


# 幾何迷向與 Balmer 譜

def cmd_support(args):
    group = _group(args)
    (text,) = _positionals(args, 1, 'support --group G EXPR')
    expr = _expr(group, text)
    doc = support(expr).to_document()
    doc["expr"] = expr.to_text()
    return doc


def cmd_ctmax(args):
    group = _group(args)
    (text,) = _positionals(args, 1, 'ctmax --group G EXPR')
    return {"ctmax": ctmax(support(_expr(group, text))).to_document()}


def cmd_realizable(args):
    group = _group(args)
    (text,) = _positionals(args, 1, 'realizable --group G SET')
    return {"realizable": is_realizable(_set(group, text))}


def cmd_realize(args):
    group = _group(args)
    (text,) = _positionals(args, 1, 'realize --group G SET')
    expr = realize(_set(group, text))
    return {"expr": expr.to_text(), "support": support(expr).to_document()}


def cmd_thickt(args):
    group = _group(args)
    y, x = _positionals(args, 2, 'thickt --group G Y X')
    return {"in_thickt": in_thickt(_expr(group, y), _expr(group, x))}


def cmd_loct_eq(args):
    group = _group(args)
    x, y = _positionals(args, 2, 'loct-eq --group G X Y')
    return {"loct_equal": loct_equal(_expr(group, x), _expr(group, y))}


def cmd_closure(args):
    group = _group(args)
    (text,) = _positionals(args, 1, 'closure --group G SET')
    s = _set(group, text)
    return {"zariski_closed": is_zariski_closed(s), "closure": zariski_closure(s).to_document()}


def cmd_separate(args):
    group = _group(args)
    first, second = _positionals(args, 2, 'separate --group G K1 K2')
    a, b = separate(group, _class(group, first), _class(group, second))
    return {"first": a.to_text(), "second": b.to_text()}


def cmd_balmer(args):
    group = _group(args)
    sub = args.rest[0] if args.rest else None
    if sub == 'leq' and len(args.rest) == 3:
        p = prime(group, _class(group, args.rest[1]))
        q = prime(group, _class(group, args.rest[2]))
        return {"leq": prime_leq(p, q)}
    if sub == 'closure' and len(args.rest) == 2:
        return point_closure(group, _class(group, args.rest[1])).to_document()
    raise UsageError("用法: balmer leq L K | balmer closure K")


# 半自由 T-譜

def _model_document(w):
    return {"model": wide_sphere_to_document(w), "untwisted": is_untwisted(w)}


def cmd_semifree(args):
    sub = args.rest[0] if args.rest else None
    if sub == 'check':
        w = _wide_sphere(args.file, '--file')
        return {
            "wide_sphere": True,
            "untwisted": is_untwisted(w),
            "p_fixed": str(p_fixed(w)),
            "p_borel": str(p_borel_jump(w)),
        }
    if sub == 'classes':
        poly = LaurentPoly.parse(_require(args.poly, '--poly'))
        found = enumerate_classes(poly, args.parity)
        return {
            "poly": str(poly),
            "count": len(found),
            "classes": [_model_document(w) for w in found],
        }
    if sub == 'homotopy':
        w = _wide_sphere(args.file, '--file')
        return homotopy_classes(_require(args.n, '--n'), w).to_document()
    if sub == 'attach':
        w = _wide_sphere(args.file, '--file')
        vector = _argument(parse_vector, _require(args.cls, '--cls'))
        return _model_document(attach_cell(w, _require(args.n, '--n'), vector))
    if sub == 'twist':
        w = _wide_sphere(args.file, '--file')
        report = twisting_report(w, args.k)
        report["k_twisted"] = report["dimension"] and report["intersection"]
        return report
    if sub == 'iso':
        first = _wide_sphere(args.file, '--file')
        second = _wide_sphere(args.file2, '--file2')
        return {"isomorphic": is_isomorphic(first, second)}
    raise UsageError("用法: semifree check|classes|homotopy|attach|twist|iso")


COMMANDS = {
    'group': cmd_group,
    'cotoral': cmd_cotoral,
    'subconj': cmd_subconj,
    'restrict': cmd_restrict,
    'phi': cmd_phi,
    'clopen': cmd_clopen,
    'burnside': cmd_burnside,
    'support': cmd_support,
    'ctmax': cmd_ctmax,
    'realizable': cmd_realizable,
    'realize': cmd_realize,
    'thickt': cmd_thickt,
    'loct-eq': cmd_loct_eq,
    'closure': cmd_closure,
    'separate': cmd_separate,
    'balmer': cmd_balmer,
    'semifree': cmd_semifree,
}


def run(argv):
    """
    執行一個命令

    Args:
        argv: 參數列表（不含程式名稱）

    Returns:
        (dict, int): 輸出文件與結束碼
    """
    try:
        args = build_parser().parse_intermixed_args(argv)
        handler = COMMANDS.get(args.verb)
        if handler is None:
            raise UsageError(f"未知的動詞: {args.verb}（可用: {', '.join(sorted(COMMANDS))}）")
        logger.info(f"執行命令: {args.verb} {' '.join(args.rest)}")
        return handler(args), 0
    except TTGError as e:
        if e.exit_code == 2:
            logger.warning(f"用法錯誤 [{e.code}]: {e.message}")
        else:
            logger.error(f"計算失敗 [{e.code}]: {e.message}")
        return e.to_document(), e.exit_code


def main(argv=None):
    document, code = run(sys.argv[1:] if argv is None else argv)
    print(dump_json(document))
    return code


if __name__ == "__main__":
    sys.exit(main())
