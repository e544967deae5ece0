"""
子群模型與限制

subgroup_model 為子群類 H 選定一個群模型，並記錄模型中的子群類如何
融合回外圍群 G 的子群類；restrict_class 與 separating_clopen 都建立在其上。
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from errors import NotSubconjugate, UnsupportedInstance, UnsupportedPair
from group_catalog.catalogue import is_subconjugate, view_of
from group_catalog.class_sets import ClassSet
from group_catalog.classes import (
    CIRCLE_GROUP, FULL, ICOSA, O2, O2_GROUP, OCTA, SO2, TETRA, C, D, F,
    SubgroupClass, sorted_classes,
)
from group_catalog.finite import load_finite_group

# 設定日誌
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgroupModel:
    """
    子群類 top 的群模型

    fusion:
        'identity'   模型就是外圍群本身
        'view'       有限子群視角，類代號與外圍群相同
        'circle'     SO(2) 以圓群為模型
        'o2_in_so3'  SO(3) 中的 O(2)
        'finite'     有限群的子表，fusion_table[i] 為模型第 i 類的融合像
    """

    ambient: object
    top: SubgroupClass
    group: object
    fusion: str
    fusion_table: Tuple[SubgroupClass, ...] = ()

    def fuse(self, k):
        """模型中的子群類 → 外圍群中的子群類"""
        self.group.check(k)
        if self.fusion in ('identity', 'view'):
            return k
        if self.fusion == 'finite':
            return self.fusion_table[k.index]
        if self.fusion == 'circle':
            return SO2 if k == FULL else k
        # o2_in_so3：反射直線併入 C(2)
        if k == FULL:
            return O2
        if k.series == 'D' and k.index == 1:
            return C(2)
        return k

    def fuse_set(self, class_set):
        """把模型群上的 ClassSet 融合成外圍群上的 ClassSet"""
        if self.fusion == 'identity':
            return class_set
        if self.fusion in ('view', 'finite'):
            return ClassSet.of(self.ambient, [self.fuse(k) for k in class_set.finite_members()])
        specials = [self.fuse(k) for k in class_set.specials]
        series = {}
        cyclic = class_set.part('C')
        if cyclic is not None:
            series['C'] = cyclic
        dihedral = class_set.part('D')
        if dihedral is not None:
            if 1 in dihedral:
                specials.append(C(2))
            series['D'] = dihedral.rebased(2)
        return ClassSet.build(self.ambient, specials, series)

    def preimage(self, k):
        """模型中融合到 k 的所有子群類"""
        if self.fusion in ('identity', 'view'):
            return [k] if self.group.owns(k) else []
        if self.fusion == 'finite':
            return [F(i) for i, image in enumerate(self.fusion_table) if image == k]
        if self.fusion == 'circle':
            if k == SO2:
                return [FULL]
            return [k] if k.series == 'C' else []
        if k == O2:
            return [FULL]
        if k.series == 'C' and k.index == 2:
            return [C(2), D(1)]
        if k.series in ('C', 'D') or k == SO2:
            return [k]
        return []


def _finite_submodel(group, elements, top):
    """以 elements（G 的子群）建立有限模型"""
    data = group.finite
    ordered = sorted(elements)
    position = {e: i for i, e in enumerate(ordered)}
    rows = [[position[data.mul(a, b)] for b in ordered] for a in ordered]
    model = load_finite_group(rows, name=f"{data.name or 'G'}.{top.token}")
    table = []
    for cls in model.finite.classes:
        image = frozenset(ordered[x] for x in cls.representative)
        table.append(F(data.class_index_of(image)))
    return SubgroupModel(group, top, model, 'finite', tuple(table))


@lru_cache(maxsize=256)
def subgroup_model(group, k):
    """
    子群類 K 的群模型與融合對應

    Args:
        group: GroupId
        k: SubgroupClass

    Returns:
        SubgroupModel
    """
    group.check(k)
    if k == group.full_class():
        return SubgroupModel(group, k, group, 'identity')
    if group.kind == 'finite':
        rep = group.finite.class_of(k.index).representative
        return _finite_submodel(group, rep, k)
    if group.kind == 'view':
        return SubgroupModel(group.ambient, k, view_of(group.ambient, k), 'view')
    if k == SO2:
        return SubgroupModel(group, k, CIRCLE_GROUP, 'circle')
    if group.kind == 'so3' and k == O2:
        return SubgroupModel(group, k, O2_GROUP, 'o2_in_so3')
    return SubgroupModel(group, k, view_of(group, k), 'view')


def restrict_class(group, h, k):
    """
    (K)_G ∩ sub(H) 分解成的 H-共軛類

    支援：有限群的任意子群類、(SO3, O2)、(SO3, SO2)、(O2, SO2)，
    以及 H 為整個群的情形。

    Returns:
        list of SubgroupClass（H 模型中的類）
    """
    group.check(h)
    group.check(k)
    supported = (
        h == group.full_class()
        or group.kind == 'finite'
        or (group.kind == 'so3' and h in (O2, SO2))
        or (group.kind == 'o2' and h == SO2)
    )
    if not supported:
        logger.warning(f"不支援的限制: {group.name} → {h}")
        raise UnsupportedPair(f"不支援 ({group.name}, {h}) 的限制")
    if not is_subconjugate(group, k, h):
        raise NotSubconjugate(f"{k} 不共軛於 {h} 的子群")
    model = subgroup_model(group, h)
    return sorted_classes(model.preimage(k))


_CATALOGUE_NORMALIZERS = {
    'so3': {SO2: O2, O2: O2, TETRA: OCTA, OCTA: OCTA, ICOSA: ICOSA, FULL: FULL},
    'o2': {SO2: FULL, FULL: FULL},
}


def normalizer_class(group, k):
    """
    正規化子 N_G(K) 的共軛類

    Returns:
        SubgroupClass
    """
    group.check(k)
    if group.kind == 'finite':
        data = group.finite
        rep = data.class_of(k.index).representative
        return F(data.class_index_of(data.normalizer(rep)))
    if group.kind == 'circle':
        return FULL
    if group.kind == 'o2':
        if k.series == 'C':
            return FULL
        if k.series == 'D':
            return D(2 * k.index)
        return _CATALOGUE_NORMALIZERS['o2'][k]
    if group.kind == 'so3':
        if k.series == 'C':
            return FULL if k.index == 1 else O2
        if k.series == 'D':
            return OCTA if k.index == 2 else D(2 * k.index)
        return _CATALOGUE_NORMALIZERS['so3'][k]
    raise UnsupportedInstance(f"{group.name} 不支援正規化子計算")


def separating_model(group, k):
    """
    N = N_G(K) 的模型以及 ΦN 中分離 K 的開閉集 U

    K ∈ Λct(U)，而 K 在 N 中的其他 G-共軛不在 Λct(U) 中。

    Returns:
        (SubgroupModel, ClopenSet)
    """
    from phi_space.clopen import ClopenSet
    from phi_space.space import phi

    group.check(k)
    if group.kind == 'finite':
        data = group.finite
        rep = data.class_of(k.index).representative
        normalizer = data.normalizer(rep)
        model = _finite_submodel(group, normalizer, normalizer_class(group, k))
        ordered = sorted(normalizer)
        position = {e: i for i, e in enumerate(ordered)}
        inner = frozenset(position[x] for x in rep)
        point = F(model.group.finite.class_index_of(inner))
        return model, ClopenSet.of(phi(model.group), [point])

    if group.kind == 'so3' and k.series == 'C' and k.index >= 2:
        model = subgroup_model(group, O2)
        return model, ClopenSet.of(phi(model.group), [SO2])
    if group.kind == 'so3' and k == TETRA:
        model = subgroup_model(group, OCTA)
        return model, ClopenSet.of(phi(model.group), [TETRA])
    if group.kind == 'o2' and k.series == 'C':
        model = subgroup_model(group, FULL)
        return model, ClopenSet.of(phi(model.group), [SO2])
    if group.kind == 'circle' and k.series == 'C':
        model = subgroup_model(group, FULL)
        return model, ClopenSet.of(phi(model.group), [FULL])

    logger.warning(f"不支援的分離實例: ({group.name}, {k})")
    raise UnsupportedInstance(f"不支援 ({group.name}, {k}) 的分離開閉集")


def separating_clopen(group, k):
    """ΦN_G(K) 中分離 K 的開閉集"""
    return separating_model(group, k)[1]
