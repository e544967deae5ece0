"""
未扭轉（untwisted）與 k-扭轉條件

  (i)  維度條件：p_1 = t^{2k} p_T
  (ii) 交集條件：每個次數 d，V_d ∩ N̄_{d+2k+2} = 0

k = 0 即未扭轉；滿足 k-扭轉條件的寬球面恰好構成 thick(S^{kz})。
"""
import logging

from semifree import linalg
from semifree.wide_sphere import p_borel_jump, p_fixed

# 設定日誌
logger = logging.getLogger(__name__)


def twisting_report(w, k=0):
    """
    逐項檢查 k-扭轉條件

    Returns:
        dict: dimension（條件 i）、intersection（條件 ii）、failed_degrees
    """
    dimension_ok = p_borel_jump(w) == p_fixed(w).shift(2 * k)
    failed = []
    for part in w.parts():
        for d, _ in part.blocks:
            meet = linalg.meet_dim(part.coordinate_space(d), part.level(d + 2 * k + 2))
            if meet:
                failed.append(d)
    return {
        "k": k,
        "dimension": dimension_ok,
        "intersection": not failed,
        "failed_degrees": sorted(failed),
    }


def is_k_twisted(w, k):
    report = twisting_report(w, k)
    return report["dimension"] and report["intersection"]


def is_untwisted(w):
    return is_k_twisted(w, 0)


def in_thick_sphere(w, k=0):
    """W 是否在 S^{kz} 生成的厚子範疇中"""
    return is_k_twisted(w, k)
