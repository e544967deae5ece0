"""
寬球面的建構運算：直和、懸垂、與表示球面 S^{kz} 的 smash、
同倫類與胞腔黏合
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from errors import ClassNotInGroup, MixedParity, SplitUnavailable
from semifree import linalg
from semifree.conditions import is_untwisted
from semifree.wide_sphere import GradedPart, WideSphere, sphere

# 設定日誌
logger = logging.getLogger(__name__)


def _sum_parts(a, b):
    if a.is_empty:
        return b.normalized()
    if b.is_empty:
        return a.normalized()
    degrees = sorted(set(a.degrees()) | set(b.degrees()))
    blocks = tuple((d, a.block_dim(d) + b.block_dim(d)) for d in degrees)
    merged = GradedPart(a.parity, blocks)
    width = merged.width
    positions_a = []
    positions_b = []
    for d in degrees:
        start = merged.offset(d)
        positions_a.extend(range(start, start + a.block_dim(d)))
        positions_b.extend(range(start + a.block_dim(d), start + a.block_dim(d) + b.block_dim(d)))
    lo = min(a.lo, b.lo)
    hi = max(a.hi, b.hi)
    levels = []
    for d in range(lo, hi + 1, 2):
        levels.append(linalg.span(linalg.embed(a.level(d), positions_a, width),
                                  linalg.embed(b.level(d), positions_b, width)))
    return GradedPart(a.parity, blocks, lo, hi, tuple(levels)).normalized()


def direct_sum(first, second):
    """W1 ⊕ W2：過濾為區塊對角"""
    return WideSphere(_sum_parts(first.even, second.even), _sum_parts(first.odd, second.odd))


def suspend(w, n):
    """Σ^n W：次數平移 n，n 為奇數時交換奇偶部分"""
    result = WideSphere(GradedPart.empty(0), GradedPart.empty(1))
    for part in w.parts():
        if not part.is_empty:
            result = result.with_part(part.shifted(n))
    return result.normalized()


def smash_rep_sphere(w, k):
    """S^{kz} ∧ W：V 不變，N̄'_d = N̄_{d-2k}"""
    return WideSphere(w.even.filtration_shifted(k), w.odd.filtration_shifted(k)).normalized()


@dataclass(frozen=True)
class HomotopyClasses:
    """
    [S^n, W] 的基底

    fixed      同奇偶部分：V_n ∩ N̄_n 的基底（在 |V|_{n} 座標中）
    extension  反奇偶部分：|V| / (N̄_{n+1} + V_{n+1}) 的補座標（在 |V|_{n+1} 座標中）
    """

    n: int
    fixed: Tuple[Tuple[object, ...], ...]
    extension: Tuple[int, ...]
    provisional: bool = False

    @property
    def dimension(self):
        return len(self.fixed) + len(self.extension)

    def to_document(self):
        return {
            "n": self.n,
            "dimension": self.dimension,
            "fixed_dimension": len(self.fixed),
            "extension_dimension": len(self.extension),
            "provisional": self.provisional,
        }


def homotopy_classes(n, w):
    """
    [S^n, W] 的向量空間描述

    Args:
        n: 整數
        w: WideSphere

    Returns:
        HomotopyClasses
    """
    same = w.part(n)
    fixed = ()
    if not same.is_empty and same.block_dim(n):
        meet = linalg.intersection(same.coordinate_space(n), same.level(n))
        fixed = tuple(tuple(row) for row in linalg.rows_of(meet))
    other = w.part(n + 1)
    extension = ()
    if not other.is_empty:
        image = linalg.span(other.level(n + 1), other.coordinate_space(n + 1))
        extension = tuple(linalg.complement_coordinates(image))
    return HomotopyClasses(n, fixed, extension, provisional=w.is_mixed)


def _parse_vector(vector, length):
    if len(vector) != length:
        raise ClassNotInGroup(f"同倫類向量長度應為 {length}，得到 {len(vector)}")
    try:
        return [linalg.to_rational(x) for x in vector]
    except (TypeError, ValueError) as e:
        raise ClassNotInGroup(f"同倫類向量含有非有理數項目: {e}")


def _split_off(part, vector):
    """商掉由 vector 張成的直線（保留 V 的補部分）"""
    column = next(j for j, x in enumerate(vector) if x != 0)
    degree = next(d for d, _ in part.blocks if column in part.coordinates(d))
    blocks = tuple((d, m - 1 if d == degree else m) for d, m in part.blocks)
    blocks = tuple((d, m) for d, m in blocks if m > 0)
    levels = tuple(linalg.quotient_by_line(level, vector, column) for level in part.levels)
    return GradedPart(part.parity, blocks, part.lo, part.hi, levels).normalized()


def _extend(part, degree, omega):
    """在 degree 加入新生成元 e，並在 d <= degree 的過濾加入 e + ω"""
    old_blocks = dict(part.blocks)
    old_blocks[degree] = old_blocks.get(degree, 0) + 1
    blocks = tuple(sorted(old_blocks.items()))
    merged = GradedPart(part.parity, blocks)
    width = merged.width
    new_coordinate = merged.offset(degree) + old_blocks[degree] - 1
    positions = [j for j in range(width) if j != new_coordinate]
    omega_embedded = [0] * width
    for j, x in enumerate(omega):
        omega_embedded[positions[j]] = x
    omega_embedded[new_coordinate] = 1
    if part.is_empty:
        lo, hi = degree, degree
    else:
        lo, hi = min(part.lo, degree), max(part.hi, degree)
    levels = []
    for d in range(lo, hi + 1, 2):
        level = linalg.embed(part.level(d), positions, width)
        if d <= degree:
            level = linalg.subspace(linalg.rows_of(level) + [omega_embedded], width)
        levels.append(level)
    return GradedPart(part.parity, blocks, lo, hi, tuple(levels)).normalized()


def attach_cell(w, n, class_vector):
    """
    沿 [S^n, W] 中的類黏上一個 (n+1)-胞腔，回傳其 cofiber

    零類：W ∨ S^{n+1}
    反奇偶類（延伸）：V 在 n+1 次增加一個生成元
    同奇偶類（分裂）：W 必須未扭轉，回傳互補的收縮

    Returns:
        WideSphere
    """
    classes = homotopy_classes(n, w)
    values = _parse_vector(class_vector, classes.dimension)
    fixed_part = values[:len(classes.fixed)]
    extension_part = values[len(classes.fixed):]
    has_fixed = any(x != 0 for x in fixed_part)
    has_extension = any(x != 0 for x in extension_part)

    if has_fixed and has_extension:
        raise MixedParity("同倫類同時有同奇偶與反奇偶分量")
    if not has_fixed and not has_extension:
        return direct_sum(w, sphere(n + 1))

    if has_fixed:
        if not is_untwisted(w):
            logger.warning("W 不滿足未扭轉條件，無法分裂")
            raise SplitUnavailable("只有未扭轉的寬球面才能沿同奇偶的非零類分裂")
        part = w.part(n)
        vector = [sum(c * basis[j] for c, basis in zip(fixed_part, classes.fixed))
                  for j in range(part.width)]
        return w.with_part(_split_off(part, vector)).normalized()

    part = w.part(n + 1)
    omega = [0] * part.width
    for c, j in zip(extension_part, classes.extension):
        omega[j] = c
    return w.with_part(_extend(part, n + 1, omega)).normalized()
