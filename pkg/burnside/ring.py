"""
有理 Burnside 環 A(G) ≅ C(ΦG, Q)

元素是 ΦG 上的局部常數函數，以開閉集分割加上每塊的有理數值表示。
每次運算後合併同值的塊，使表示法唯一。
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from burnside.marks import mark_of, marks_matrix
from errors import MalformedDescriptor, SpaceMismatch
from group_catalog.classes import F
from phi_space.clopen import ClopenSet
from phi_space.space import phi
from utils import format_rational

# 設定日誌
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BurnsideElement:
    space: object
    chart: Tuple[Tuple[Fraction, ClopenSet], ...]

    @classmethod
    def from_cells(cls, space, cells):
        """
        由 (值, 開閉集) 建立元素

        各塊必須互不相交並覆蓋 ΦG。
        """
        merged = {}
        covered = ClopenSet.empty(space)
        for value, cell in cells:
            if cell.space != space:
                raise SpaceMismatch("分割塊不在同一個 Φ 空間上")
            if cell.is_empty:
                continue
            if not covered.intersection(cell).is_empty:
                raise MalformedDescriptor("分割塊互相重疊")
            covered = covered.union(cell)
            value = Fraction(value)
            merged[value] = merged[value].union(cell) if value in merged else cell
        if covered != ClopenSet.whole(space):
            raise MalformedDescriptor("分割塊沒有覆蓋整個 Φ 空間")
        return cls(space, tuple(sorted(merged.items(), key=lambda item: item[0])))

    @classmethod
    def constant(cls, space, value):
        return cls.from_cells(space, [(value, ClopenSet.whole(space))])

    def value_at(self, k):
        for value, cell in self.chart:
            if k in cell:
                return value
        raise MalformedDescriptor(f"{k} 不是 Φ{self.space.group.name} 的點")

    def support(self):
        """值非零的點集"""
        result = ClopenSet.empty(self.space)
        for value, cell in self.chart:
            if value:
                result = result.union(cell)
        return result

    def _pointwise(self, other, op):
        if self.space != other.space:
            raise SpaceMismatch("元素屬於不同的 Φ 空間")
        cells = []
        for a, cell_a in self.chart:
            for b, cell_b in other.chart:
                cell = cell_a.intersection(cell_b)
                if not cell.is_empty:
                    cells.append((op(a, b), cell))
        return BurnsideElement.from_cells(self.space, cells)

    def __add__(self, other):
        return ring_add(self, other)

    def __mul__(self, other):
        return ring_mul(self, other)

    def scale(self, factor):
        factor = Fraction(factor)
        return BurnsideElement.from_cells(self.space, [(factor * v, c) for v, c in self.chart])

    def is_idempotent(self):
        return ring_mul(self, self) == self

    def to_document(self):
        return {
            "space": self.space.group.name,
            "chart": [{"value": format_rational(v), "set": c.to_document()}
                      for v, c in self.chart],
        }


def ring_add(a, b):
    return a._pointwise(b, lambda x, y: x + y)


def ring_mul(a, b):
    return a._pointwise(b, lambda x, y: x * y)


def unit(group):
    return BurnsideElement.constant(phi(group), 1)


def zero(group):
    return BurnsideElement.constant(phi(group), 0)


def e_U(group, clopen):
    """
    開閉集 U 對應的冪等元（U 的指示函數）

    Args:
        group: GroupId
        clopen: ΦG 上的 ClopenSet

    Returns:
        BurnsideElement
    """
    space = phi(group)
    if clopen.space != space:
        raise SpaceMismatch(f"開閉集不在 Φ{group.name} 上")
    return BurnsideElement.from_cells(space, [(1, clopen), (0, clopen.complement())])


def element_from_vector(group, vector):
    """傳遞基底向量 Σ c_K [G/K] 的標記函數"""
    space = phi(group)
    size = marks_matrix(group).size
    cells = [(mark_of(group, vector, F(i)), ClopenSet.of(space, [F(i)])) for i in range(size)]
    return BurnsideElement.from_cells(space, cells)
