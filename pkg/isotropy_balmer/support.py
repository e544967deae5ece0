"""
幾何迷向集合（support）的計算

  S0       → 所有子群類
  cell(K)  → K 的子共軛下閉包
  basic    → Λct(融合後的 U)
  iso(K)   → {(K)}
  wedge    → 聯集；smash → 交集；susp、dual → 不變
"""
import logging
from dataclasses import dataclass

from errors import MalformedDescriptor, MalformedExpr
from group_catalog.catalogue import circle_class, downset
from group_catalog.class_sets import ClassSet
from group_catalog.restriction import subgroup_model
from isotropy_balmer.expr import (
    Basic, Cell, Dual, IsoClass, Smash, Sphere0, Susp, Wedge,
)
from phi_space.topology import fuse_clopen

# 設定日誌
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsotropySet:
    """
    子群類集合

    cotoral_closed 為 True 時集合對餘環面特化封閉（有限表達式的 support 一定如此）；
    局部化理想的描述子則允許任意集合。
    """

    classes: ClassSet
    cotoral_closed: bool = True

    @property
    def group(self):
        return self.classes.group

    def __contains__(self, k):
        return k in self.classes

    def to_document(self):
        doc = self.classes.to_document()
        doc["cotoral_closed"] = self.cotoral_closed
        return doc


def _as_class_set(value):
    if isinstance(value, IsotropySet):
        return value.classes
    if isinstance(value, ClassSet):
        return value
    raise MalformedDescriptor(f"不是子群類集合: {value!r}")


def lambda_ct(class_set):
    """
    餘環面下閉包 Λct(S)

    目錄中只有圓類（SO2 或圓群本身）有真的餘環面子群，即全部的循環類。
    """
    s = _as_class_set(class_set)
    circle = circle_class(s.group)
    if circle is not None and circle in s:
        s = s.with_full_series('C')
    return IsotropySet(s, True)


def is_cotorally_closed(class_set):
    s = _as_class_set(class_set)
    return lambda_ct(s).classes == s


def ctmax(class_set):
    """餘環面極大元：圓類在集合中時去掉所有循環類"""
    s = _as_class_set(class_set)
    circle = circle_class(s.group)
    if circle is not None and circle in s:
        return s.without_series('C')
    return s


def support(expr):
    """
    表達式的幾何迷向集合

    Args:
        expr: SpectrumExpr

    Returns:
        IsotropySet
    """
    classes = _support(expr)
    if expr.is_finite:
        return IsotropySet(classes, True)
    return IsotropySet(classes, is_cotorally_closed(classes))


def _support(expr):
    group = expr.group
    if isinstance(expr, Sphere0):
        return ClassSet.everything(group)
    if isinstance(expr, Cell):
        return downset(group, expr.k)
    if isinstance(expr, IsoClass):
        return ClassSet.of(group, [expr.k])
    if isinstance(expr, Basic):
        model = subgroup_model(group, expr.k)
        return lambda_ct(fuse_clopen(model, expr.clopen)).classes
    if isinstance(expr, Wedge):
        result = ClassSet.empty(group)
        for term in expr.terms:
            result = result.union(_support(term))
        return result
    if isinstance(expr, Smash):
        result = ClassSet.everything(group)
        for term in expr.terms:
            result = result.intersection(_support(term))
        return result
    if isinstance(expr, (Susp, Dual)):
        return _support(expr.term)
    logger.error(f"無法辨識的表達式節點: {expr!r}")
    raise MalformedExpr(f"無法辨識的表達式節點: {type(expr).__name__}")
