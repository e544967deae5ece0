"""
子群目錄模組

圓群 T、O(2)、SO(3) 與有限群的子群類、子共軛關係、餘環面關係
以及有限 Weyl 群判定。

O(2) 與 SO(3) 的子共軛表由閉子群的標準分類直接寫出：
  O(2)：C(m) ⊆ C(n)、C(m) ⊆ D(n)、D(m) ⊆ D(n) 當且僅當 m | n；C(n) ⊆ SO(2)
  SO(3)：C(m) ⊆ D(n) 當且僅當 m | n 或 m <= 2；D(m) ⊆ D(n) 當且僅當 m | n；
         A4 ⊇ C1,C2,C3,D2；S4 ⊇ C1..C4,D2,D3,D4,A4；A5 ⊇ C1,C2,C3,C5,D2,D3,D5,A4；
         所有 D(n) ⊆ O(2)，所有 C(n) ⊆ SO(2) ⊆ O(2)
"""
import logging
import os

from group_catalog.class_sets import ClassSet, SeriesSet, divisors
from group_catalog.classes import (
    FULL, ICOSA, O2, OCTA, SO2, TETRA, C, D, F, GroupId, SubgroupClass,
    sorted_classes,
)

# 設定日誌
logger = logging.getLogger(__name__)

# 列舉無窮系列時的預設截斷
DEFAULT_BOUND = int(os.environ.get('TTG_DEFAULT_BOUND', '12'))

# SO(3) 中有限特殊子群所含的循環與二面體類
_POLYHEDRAL_CONTENTS = {
    'A4': ((1, 2, 3), (2,), ()),
    'S4': ((1, 2, 3, 4), (2, 3, 4), (TETRA,)),
    'A5': ((1, 2, 3, 5), (2, 3, 5), (TETRA,)),
}


def _divides(m, n):
    return n % m == 0


def _check(group, *classes):
    for k in classes:
        group.check(k)


def classes(group, bound=None):
    """
    列出群的所有子群類（無窮系列截斷到 bound）

    Args:
        group: GroupId
        bound: 系列索引上限

    Returns:
        list of SubgroupClass
    """
    bound = DEFAULT_BOUND if bound is None else bound
    if bound < 1:
        raise ValueError("bound 必須 >= 1")
    found = list(group.special_classes())
    for tag, start in group.series_starts().items():
        found.extend(SubgroupClass(tag, n) for n in range(start, bound + 1))
    return sorted_classes(found)


def _circle_leq(low, high):
    if high == FULL or low == high:
        return True
    return low.series == 'C' and high.series == 'C' and _divides(low.index, high.index)


def _o2_leq(low, high):
    if high == FULL or low == high:
        return True
    if low.series == 'C':
        if high.series in ('C', 'D'):
            return _divides(low.index, high.index)
        return high == SO2
    if low.series == 'D':
        return high.series == 'D' and _divides(low.index, high.index)
    return False


def _so3_leq(low, high):
    if high == FULL or low == high:
        return True
    if low.series == 'C':
        m = low.index
        if high.series == 'C':
            return _divides(m, high.index)
        if high.series == 'D':
            return _divides(m, high.index) or m <= 2
        if high in (SO2, O2):
            return True
        if high.series in _POLYHEDRAL_CONTENTS:
            return m in _POLYHEDRAL_CONTENTS[high.series][0]
        return False
    if low.series == 'D':
        m = low.index
        if high.series == 'D':
            return _divides(m, high.index)
        if high == O2:
            return True
        if high.series in _POLYHEDRAL_CONTENTS:
            return m in _POLYHEDRAL_CONTENTS[high.series][1]
        return False
    if low == SO2:
        return high == O2
    if low == TETRA:
        return high in (OCTA, ICOSA)
    return False


def is_subconjugate(group, low, high):
    """
    low 是否 G-共軛於 high 的某個子群

    Returns:
        bool
    """
    _check(group, low, high)
    if group.kind == 'finite':
        return group.finite.is_subconjugate(low.index, high.index)
    if group.kind == 'circle':
        return _circle_leq(low, high)
    if group.kind == 'o2':
        return _o2_leq(low, high)
    if group.kind == 'so3':
        return _so3_leq(low, high)
    # 有限子群視角：沿用外圍群的關係
    return is_subconjugate(group.ambient, low, high)


def circle_class(group):
    """含所有循環類為餘環面子群的類（SO2 或圓群本身）"""
    if group.kind == 'circle':
        return FULL
    if group.kind in ('o2', 'so3'):
        return SO2
    return None


def limit_class(group):
    """ΦG 中二面體序列的極限點"""
    if group.kind == 'o2':
        return FULL
    if group.kind == 'so3':
        return O2
    return None


def is_cotoral(group, low, high):
    """
    low 是否在 high 中為正規子群且商為環面

    目錄中除了相等以外，只有 C(n) 對 SO(2)（圓群時為整個群）是餘環面的。
    """
    _check(group, low, high)
    if low == high:
        return True
    return low.series == 'C' and high == circle_class(group)


def is_in_phi(group, k):
    """
    K 的 Weyl 群是否有限

    SO(2) 在 SO(3) 中的正規化子為 O(2)，Weyl 群為 Z/2，因此屬於 ΦSO(3)。
    """
    _check(group, k)
    if group.is_finite:
        return True
    if group.kind == 'circle':
        return k == FULL
    return k.series != 'C'


def phi_classes(group, bound=None):
    return [k for k in classes(group, bound) if is_in_phi(group, k)]


def downset(group, k):
    """
    (K) 的子共軛下閉包 Λcl((K))

    Returns:
        ClassSet
    """
    _check(group, k)
    if k == group.full_class() and not group.is_finite:
        return ClassSet.everything(group)
    if group.kind == 'finite':
        return ClassSet.of(group, [F(i) for i in range(len(group.finite.classes))
                                   if group.finite.is_subconjugate(i, k.index)])
    if group.kind == 'view':
        return ClassSet.of(group, [x for x in group.members
                                   if is_subconjugate(group.ambient, x, k)])

    starts = group.series_starts()
    if k.series == 'C':
        return ClassSet.of(group, [C(m) for m in divisors(k.index)])
    if k == SO2:
        return ClassSet.build(group, [SO2], {'C': SeriesSet.full(1)})
    if k.series == 'D':
        cyclic = set(divisors(k.index))
        if group.kind == 'so3':
            cyclic |= {1, 2}
        dihedral = [D(m) for m in divisors(k.index) if m >= starts['D']]
        return ClassSet.of(group, [C(m) for m in sorted(cyclic)] + dihedral)
    if k == O2:
        return ClassSet.build(group, [SO2, O2],
                              {'C': SeriesSet.full(1), 'D': SeriesSet.full(starts['D'])})
    cyclic, dihedral, extra = _POLYHEDRAL_CONTENTS[k.series]
    return ClassSet.of(group, [C(m) for m in cyclic] + [D(m) for m in dihedral]
                       + list(extra) + [k])


def view_of(group, k):
    """無窮目錄群中有限子群類 K 的有限子群視角"""
    members = tuple(downset(group, k).finite_members())
    return GroupId('view', ambient=group, top=k, members=members)


def describe(group, bound=None):
    """群的摘要文件（子群類族與 Φ 結構）"""
    from phi_space.space import phi
    bound = DEFAULT_BOUND if bound is None else bound
    listed = classes(group, bound)
    return {
        "group": group.name,
        "order": group.finite.order if group.kind == 'finite' else None,
        "series": {tag: {"start": start} for tag, start in group.series_starts().items()},
        "special_classes": [k.token for k in group.special_classes()],
        "class_count": len(listed) if group.is_finite else None,
        "phi": phi(group).to_document(),
        "bound": bound,
    }
