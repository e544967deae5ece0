"""
ΦG 空間模組初始化
"""
from phi_space.clopen import (
    ClopenSet, clopen_complement, clopen_difference, clopen_intersect, clopen_union,
)
from phi_space.space import phi
from phi_space.topology import basic_nbhd, is_f_compact, is_f_open
