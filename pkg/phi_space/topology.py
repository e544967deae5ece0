"""
f-拓撲

ε 鄰域以系列索引的截斷值表示：截斷值越大，鄰域越小。
"""
import logging

from errors import MalformedDescriptor
from group_catalog.catalogue import circle_class, limit_class
from group_catalog.restriction import subgroup_model
from phi_space.clopen import ClopenSet
from phi_space.space import phi

# 設定日誌
logger = logging.getLogger(__name__)


def basic_nbhd(group, k, cutoff=None):
    """
    K 在 ΦK 中的基本開閉鄰域

    Args:
        group: GroupId
        k: SubgroupClass
        cutoff: 序列索引下限；None 表示序列起點

    Returns:
        ClopenSet（在 K 的模型群的 Φ 上）
    """
    model = subgroup_model(group, k)
    space = phi(model.group)
    top = model.group.full_class()
    for seq in space.sequences:
        if seq.limit == top:
            start = seq.start if cutoff is None else max(cutoff, seq.start)
            return ClopenSet.tail(space, start)
    return ClopenSet.of(space, [top])


def fuse_clopen(model, clopen):
    """把模型群 Φ 上的開閉集融合成外圍群的子群類集合"""
    return model.fuse_set(clopen.to_class_set())


def _check_group(group, class_set):
    if class_set.group != group:
        raise MalformedDescriptor(f"描述子屬於 {class_set.group.name}，而不是 {group.name}")


def is_f_open(group, class_set):
    """
    集合在 f-拓撲中是否為開集

    唯一的非孤立點是 ΦG 中二面體序列的極限；含有極限點的集合必須包含序列尾端。
    """
    _check_group(group, class_set)
    limit = limit_class(group)
    if limit is None or limit not in class_set:
        return True
    return class_set.part('D').is_cofinite


def is_f_compact(group, class_set):
    """
    集合在 f-拓撲中是否為緊集

    循環類彼此孤立，只能有限多個；二面體類有無窮多個時極限點必須在集合中。
    """
    _check_group(group, class_set)
    if group.is_finite:
        return True
    if circle_class(group) is not None and not class_set.part('C').is_finite:
        return False
    limit = limit_class(group)
    if limit is not None and not class_set.part('D').is_finite:
        return limit in class_set
    return True
