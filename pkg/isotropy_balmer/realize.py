"""
可實現性與實現

一個子群類集合是某個有限譜的 support，當且僅當它對餘環面特化封閉，
且其餘環面極大部分在 f-拓撲中是開緊集。實現時以基本胞腔的 wedge 覆蓋。
"""
import logging

from errors import NotRealizable, NotUnrelated
from group_catalog.catalogue import circle_class, limit_class
from group_catalog.class_sets import ClassSet
from isotropy_balmer.expr import basic, sphere0, wedge
from isotropy_balmer.support import (
    _as_class_set, ctmax, is_cotorally_closed, lambda_ct, support,
)
from phi_space.topology import is_f_compact, is_f_open

# 設定日誌
logger = logging.getLogger(__name__)

# separate 調整截斷值的最多次數
MAX_SEPARATION_ROUNDS = 64


def is_realizable(class_set):
    """
    S = Λct(S) 且 ctmax(S) 為 f-開且 f-緊

    Returns:
        bool
    """
    s = _as_class_set(class_set)
    if not is_cotorally_closed(s):
        return False
    top = ctmax(s)
    return is_f_open(s.group, top) and is_f_compact(s.group, top)


def realize(class_set):
    """
    以基本胞腔的 wedge 實現 support 為 S 的有限譜

    圓類與極限點各用一個胞腔（極限點的截斷取 ctmax 中二面體尾端的起點），
    其餘有限多個餘環面極大類各用一個單點胞腔。

    Returns:
        SpectrumExpr
    """
    s = _as_class_set(class_set)
    group = s.group
    if s == ClassSet.everything(group):
        return sphere0(group)
    if not is_realizable(s):
        logger.warning(f"集合不可實現: {s}")
        raise NotRealizable(f"{s} 不是有限譜的 support")

    remaining = ctmax(s)
    cells = []

    circle = circle_class(group)
    if circle is not None and circle in remaining:
        cells.append(basic(group, circle))
        remaining = remaining.difference(ClassSet.of(group, [circle]))

    limit = limit_class(group)
    if limit is not None and limit in remaining:
        cutoff = remaining.part('D').tail_start()
        cell = basic(group, limit, cutoff)
        cells.append(cell)
        remaining = remaining.difference(support(cell).classes)

    for k in remaining.finite_members():
        cells.append(basic(group, k))

    logger.info(f"以 {len(cells)} 個基本胞腔實現 {s}")
    if len(cells) == 1:
        return cells[0]
    return wedge(*cells, group=group)


def separate(group, first, second):
    """
    兩個餘環面無關的類各給一個基本胞腔，使兩者的 support 互斥

    Returns:
        (SpectrumExpr, SpectrumExpr)
    """
    cone_a = lambda_ct(ClassSet.of(group, [first])).classes
    cone_b = lambda_ct(ClassSet.of(group, [second])).classes
    if not cone_a.intersection(cone_b).is_empty:
        raise NotUnrelated(f"{first} 與 {second} 的餘環面錐相交")

    limit = limit_class(group)
    pair = (first, second)
    cutoffs = [None, None]
    for _ in range(MAX_SEPARATION_ROUNDS):
        cells = [basic(group, k, c) for k, c in zip(pair, cutoffs)]
        overlap = support(cells[0]).classes.intersection(support(cells[1]).classes)
        if overlap.is_empty:
            return cells[0], cells[1]
        dihedral = overlap.part('D')
        if dihedral is None or dihedral.is_empty or not dihedral.is_finite:
            break
        bound = max(dihedral.finite_members()) + 1
        moved = False
        for i, k in enumerate(pair):
            if k == limit:
                cutoffs[i] = bound
                moved = True
        if not moved:
            break
    raise NotUnrelated(f"無法分離 {first} 與 {second}")
