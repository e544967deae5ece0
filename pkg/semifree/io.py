"""
寬球面檔案格式

{"even": {"v_dims": {"0": 1}, "window": [0, 0], "filtration": {"0": [["1/1"]]}},
 "odd": {...}}

窗口內省略的次數沿用其上方最近一個指定次數的過濾；上方都沒有時為 0。
"""
import json
import logging

from errors import InvalidWideSphere
from semifree import linalg
from semifree.wide_sphere import GradedPart, WideSphere, require_valid
from utils import format_rational

# 設定日誌
logger = logging.getLogger(__name__)


def _parse_part(parity, doc):
    label = 'even' if parity == 0 else 'odd'
    if not isinstance(doc, dict):
        raise InvalidWideSphere(f"{label} 部分必須是物件")
    try:
        v_dims = {int(d): int(m) for d, m in (doc.get('v_dims') or {}).items()}
    except (TypeError, ValueError):
        raise InvalidWideSphere(f"{label} 部分的 v_dims 格式錯誤")
    blocks = tuple(sorted((d, m) for d, m in v_dims.items() if m != 0))
    for d, m in blocks:
        if m < 0:
            raise InvalidWideSphere(f"{label} 部分次數 {d} 的維度為負")
        if d % 2 != parity:
            raise InvalidWideSphere(f"{label} 部分含有奇偶不符的次數 {d}")
    width = sum(m for _, m in blocks)
    if width == 0:
        return GradedPart.empty(parity)

    window = doc.get('window')
    if not isinstance(window, list) or len(window) != 2:
        raise InvalidWideSphere(f"{label} 部分需要 window: [lo, hi]")
    try:
        lo, hi = int(window[0]), int(window[1])
    except (TypeError, ValueError):
        raise InvalidWideSphere(f"{label} 部分的 window 必須是整數")
    if lo % 2 != parity or hi % 2 != parity or hi < lo:
        raise InvalidWideSphere(f"{label} 部分的 window [{lo}, {hi}] 不合法")

    specified = {}
    for key, rows in (doc.get('filtration') or {}).items():
        try:
            degree = int(key)
        except ValueError:
            raise InvalidWideSphere(f"{label} 部分的過濾次數 {key!r} 不是整數")
        if not lo <= degree <= hi or degree % 2 != parity:
            raise InvalidWideSphere(f"{label} 部分的過濾次數 {degree} 不在窗口內")
        try:
            parsed = [[linalg.to_rational(x) for x in row] for row in rows]
        except (TypeError, ValueError) as e:
            raise InvalidWideSphere(f"{label} 部分次數 {degree} 的項目不是有理數: {e}")
        if any(len(row) != width for row in parsed):
            raise InvalidWideSphere(f"{label} 部分次數 {degree} 的列長度應為 {width}")
        if parsed and linalg.rank(parsed, width) != len(parsed):
            raise InvalidWideSphere(f"{label} 部分次數 {degree} 的列向量線性相關")
        specified[degree] = parsed

    levels = []
    for d in range(lo, hi + 1, 2):
        rows = specified.get(d)
        if rows is None:
            above = [e for e in specified if e > d]
            rows = specified[min(above)] if above else []
        levels.append(linalg.subspace(rows, width))
    return GradedPart(parity, blocks, lo, hi, tuple(levels))


def wide_sphere_from_document(doc):
    """
    由 JSON 物件建立並驗證寬球面

    Returns:
        WideSphere（標準化）
    """
    if not isinstance(doc, dict):
        raise InvalidWideSphere("寬球面文件必須是物件")
    unknown = set(doc) - {'even', 'odd'}
    if unknown:
        raise InvalidWideSphere(f"未知的欄位: {sorted(unknown)}")
    even = _parse_part(0, doc.get('even', {}))
    odd = _parse_part(1, doc.get('odd', {}))
    return require_valid(WideSphere(even, odd)).normalized()


def load_wide_sphere(path):
    """從檔案載入寬球面"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            doc = json.load(f)
    except OSError as e:
        logger.error(f"無法讀取寬球面檔案 {path}: {e}")
        raise InvalidWideSphere(f"無法讀取寬球面檔案 {path}")
    except json.JSONDecodeError as e:
        raise InvalidWideSphere(f"寬球面檔案不是合法的 JSON: {e}")
    return wide_sphere_from_document(doc)


def wide_sphere_to_document(w):
    """寬球面轉成 JSON 物件（只輸出非空的部分）"""
    doc = {}
    for part in w.normalized().parts():
        if part.is_empty:
            continue
        label = 'even' if part.parity == 0 else 'odd'
        doc[label] = {
            "v_dims": {str(d): m for d, m in part.blocks},
            "window": [part.lo, part.hi],
            "filtration": {
                str(part.lo + 2 * i): [[format_rational(x) for x in row]
                                       for row in linalg.rows_of(level)]
                for i, level in enumerate(part.levels)
            },
        }
    return doc
