"""
標記表（table of marks）

只適用於有限群。矩陣第 (L, K) 項為 |(G/K)^L|，子群類依階數遞增排序，
因此矩陣為上三角，對角線是 Weyl 群的階。
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import pandas as pd
from sympy import Matrix, Rational

from errors import MalformedDescriptor, NotFinite
from group_catalog.classes import F
from utils import format_rational

# 設定日誌
logger = logging.getLogger(__name__)


def _require_finite(group):
    if group.kind != 'finite':
        logger.warning(f"{group.name} 不是有限群，無法計算標記")
        raise NotFinite(f"{group.name} 不是由乘法表載入的有限群")
    return group.finite


def _to_fraction(value):
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class MarksMatrix:
    group: object
    labels: Tuple[str, ...]
    entries: Tuple[Tuple[Fraction, ...], ...]

    @property
    def size(self):
        return len(self.labels)

    def mark(self, row, column):
        return self.entries[row][column]

    def diagonal(self):
        return [self.entries[i][i] for i in range(self.size)]

    def is_triangular(self):
        """非零項只出現在 L 子共軛於 K 的位置"""
        data = self.group.finite
        for i in range(self.size):
            for j in range(self.size):
                if self.entries[i][j] and not data.is_subconjugate(i, j):
                    return False
        return True

    def to_frame(self):
        """以 pandas DataFrame 表示（列為 L，行為 G/K）"""
        return pd.DataFrame(
            [list(row) for row in self.entries],
            index=list(self.labels),
            columns=[f"G/{label}" for label in self.labels],
        )

    def to_sympy(self):
        return Matrix(self.size, self.size,
                      lambda i, j: Rational(self.entries[i][j].numerator,
                                            self.entries[i][j].denominator))

    def to_document(self):
        frame = self.to_frame().apply(lambda column: column.map(format_rational))
        return {
            "group": self.group.name,
            "classes": list(self.labels),
            "columns": list(frame.columns),
            "rows": frame.values.tolist(),
            "weyl_orders": [format_rational(x) for x in self.diagonal()],
        }


def fixed_cosets(data, low, high):
    """|(G/K)^L|，L、K 為子群的元素集合"""
    count = 0
    for g in range(data.order):
        g_inv = data.inverses[g]
        # L·gK = gK ⇔ g^-1 L g ⊆ K
        if all(data.mul(data.mul(g_inv, x), g) in high for x in low):
            count += 1
    return Fraction(count, len(high))


@lru_cache(maxsize=64)
def marks_matrix(group):
    """
    計算有限群的標記表

    Args:
        group: GroupId（kind='finite'）

    Returns:
        MarksMatrix
    """
    data = _require_finite(group)
    size = len(data.classes)
    logger.info(f"開始計算 {group.name} 的標記表（{size} 個子群類）")
    entries = []
    for low in data.classes:
        row = tuple(fixed_cosets(data, low.representative, high.representative)
                    for high in data.classes)
        entries.append(row)
    labels = tuple(F(i).token for i in range(size))
    logger.info(f"{group.name} 的標記表計算完成")
    return MarksMatrix(group, labels, tuple(entries))


def primitive_idempotent(group, k):
    """
    原始冪等元 e_L 在傳遞基底 [G/K] 下的係數

    解上三角方程 M c = δ_L。

    Returns:
        tuple of Fraction
    """
    group.check(k)
    matrix = marks_matrix(group)
    size = matrix.size
    target = Matrix(size, 1, lambda i, _: 1 if i == k.index else 0)
    solution = matrix.to_sympy().upper_triangular_solve(target)
    return tuple(_to_fraction(solution[i, 0]) for i in range(size))


def mark_of(group, vector, k):
    """Σ c_K |(G/K)^L|"""
    group.check(k)
    matrix = marks_matrix(group)
    if len(vector) != matrix.size:
        raise MalformedDescriptor(f"向量長度 {len(vector)} 與子群類數 {matrix.size} 不符")
    row = matrix.entries[k.index]
    return sum((Fraction(c) * row[j] for j, c in enumerate(vector)), Fraction(0))


def idempotent_vector(group, points):
    """e_U 在傳遞基底下的係數（U 為一組子群類）"""
    size = marks_matrix(group).size
    total = [Fraction(0)] * size
    for k in points:
        for j, c in enumerate(primitive_idempotent(group, k)):
            total[j] += c
    return tuple(total)


def _left_cosets(data, subgroup):
    cosets = []
    seen = set()
    for g in range(data.order):
        if g in seen:
            continue
        coset = frozenset(data.mul(g, h) for h in subgroup)
        seen |= coset
        cosets.append(coset)
    return cosets


def gset_product(group, first, second):
    """
    G/K1 × G/K2 依軌道分解後在傳遞基底下的係數

    每條軌道 G·(xK1, yK2) 同構於 G/(xK1x^-1 ∩ yK2y^-1)。

    Returns:
        tuple of int
    """
    data = _require_finite(group)
    group.check(first)
    group.check(second)
    left = _left_cosets(data, data.class_of(first.index).representative)
    right = _left_cosets(data, data.class_of(second.index).representative)
    left_index = {c: i for i, c in enumerate(left)}
    right_index = {c: i for i, c in enumerate(right)}

    def act(g, coset, index):
        return index[frozenset(data.mul(g, x) for x in coset)]

    counts = [0] * len(data.classes)
    visited = set()
    for a in range(len(left)):
        for b in range(len(right)):
            if (a, b) in visited:
                continue
            orbit = {(act(g, left[a], left_index), act(g, right[b], right_index))
                     for g in range(data.order)}
            visited |= orbit
            stabilizer = frozenset(
                g for g in range(data.order)
                if act(g, left[a], left_index) == a and act(g, right[b], right_index) == b
            )
            counts[data.class_index_of(stabilizer)] += 1
    return tuple(counts)
