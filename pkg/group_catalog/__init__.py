"""
子群目錄模組初始化
"""
from group_catalog.catalogue import (
    classes, describe, downset, is_cotoral, is_in_phi, is_subconjugate, limit_class,
)
from group_catalog.class_sets import ClassSet, SeriesSet
from group_catalog.classes import (
    CIRCLE_GROUP, FULL, ICOSA, O2, O2_GROUP, OCTA, SO2, SO3_GROUP, TETRA, C, D, F,
    parse_class, parse_group,
)
from group_catalog.finite import load_finite_group
from group_catalog.restriction import (
    normalizer_class, restrict_class, separating_clopen, subgroup_model,
)
