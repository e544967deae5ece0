"""
Burnside 環模組初始化
"""
from burnside.marks import (
    gset_product, idempotent_vector, mark_of, marks_matrix, primitive_idempotent,
)
from burnside.ring import (
    BurnsideElement, e_U, element_from_vector, ring_add, ring_mul, unit, zero,
)
