"""
半自由 T-譜代數模型模組初始化
"""
from semifree.classify import canonical_form, enumerate_classes, is_isomorphic
from semifree.conditions import in_thick_sphere, is_k_twisted, is_untwisted, twisting_report
from semifree.io import load_wide_sphere, wide_sphere_from_document, wide_sphere_to_document
from semifree.operations import (
    attach_cell, direct_sum, homotopy_classes, smash_rep_sphere, suspend,
)
from semifree.polynomials import LaurentPoly
from semifree.wide_sphere import (
    GradedPart, empty_sphere, p_borel_jump, p_fixed, rep_sphere, sphere, validate,
)
