"""
Zariski（zf）拓撲

閉集是基本胞腔 support 的有限聯集之交集。目錄中的判定：
S 對餘環面特化封閉；循環類無窮多時含圓類；二面體類無窮多時含極限點。
"""
import logging

from group_catalog.catalogue import circle_class, limit_class
from group_catalog.class_sets import ClassSet
from isotropy_balmer.support import IsotropySet, _as_class_set, is_cotorally_closed, lambda_ct

# 設定日誌
logger = logging.getLogger(__name__)


def _forced(s):
    """S 在閉包中被迫加入的類"""
    forced = []
    circle = circle_class(s.group)
    if circle is not None and not s.part('C').is_finite and circle not in s:
        forced.append(circle)
    limit = limit_class(s.group)
    if limit is not None and not s.part('D').is_finite and limit not in s:
        forced.append(limit)
    return forced


def is_zariski_closed(class_set):
    s = _as_class_set(class_set)
    return is_cotorally_closed(s) and not _forced(s)


def zariski_closure(class_set):
    """
    最小的 Zariski 閉超集

    Returns:
        IsotropySet
    """
    s = lambda_ct(_as_class_set(class_set)).classes
    forced = _forced(s)
    if forced:
        s = lambda_ct(s.union(ClassSet.of(s.group, forced))).classes
    return IsotropySet(s, True)
