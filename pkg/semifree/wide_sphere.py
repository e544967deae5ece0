"""
寬球面（wide sphere）模型

每個奇偶部分記錄：
  blocks   各次數 V_d 的維度（依次數遞增；座標也依此排列）
  lo, hi   過濾的窗口；d < lo 時 N̄_d 為整個 |V|，d > hi 時為 0
  levels   N̄_lo, N̄_{lo+2}, ..., N̄_hi 的 RREF 矩陣

c 使次數降 2，正規化後 N̄_{d+2} ⊆ N̄_d。
"""
import logging
from dataclasses import dataclass, replace
from typing import Tuple

from sympy import ImmutableMatrix

from errors import InvalidWideSphere
from semifree import linalg
from semifree.polynomials import LaurentPoly

# 設定日誌
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedPart:
    parity: int
    blocks: Tuple[Tuple[int, int], ...] = ()
    lo: int = 0
    hi: int = -2
    levels: Tuple[ImmutableMatrix, ...] = ()

    @classmethod
    def empty(cls, parity):
        return cls(parity, (), parity, parity - 2, ())

    @property
    def width(self):
        return sum(m for _, m in self.blocks)

    @property
    def is_empty(self):
        return self.width == 0

    def degrees(self):
        return [d for d, _ in self.blocks]

    def block_dim(self, degree):
        return dict(self.blocks).get(degree, 0)

    def offset(self, degree):
        """次數 degree 的區塊在 |V| 中的起始座標"""
        total = 0
        for d, m in self.blocks:
            if d >= degree:
                break
            total += m
        return total

    def coordinates(self, degree):
        start = self.offset(degree)
        return list(range(start, start + self.block_dim(degree)))

    def coordinate_space(self, degree):
        return linalg.coordinate_space(self.coordinates(degree), self.width)

    def level(self, degree):
        """N̄_degree"""
        if degree < self.lo:
            return linalg.full_space(self.width)
        if degree > self.hi:
            return linalg.zero_space(self.width)
        return self.levels[(degree - self.lo) // 2]

    def span_range(self):
        """涵蓋窗口與所有 V 次數、前後各多一格的次數範圍"""
        lows = [self.lo] + self.degrees()
        highs = [self.hi] + self.degrees()
        return range(min(lows) - 2, max(highs) + 4, 2)

    def normalized(self):
        """最小窗口、RREF 表示"""
        if self.is_empty:
            return GradedPart.empty(self.parity)
        degrees = list(self.span_range())
        spaces = {d: linalg.subspace(linalg.rows_of(self.level(d)), self.width) for d in degrees}
        non_full = [d for d in degrees if linalg.dim(spaces[d]) < self.width]
        nonzero = [d for d in degrees if linalg.dim(spaces[d]) > 0]
        lo = min(non_full) - 2
        hi = max(nonzero)
        if hi < lo:
            hi = lo - 2
        levels = tuple(spaces[d] if d in spaces else self.level(d) for d in range(lo, hi + 1, 2))
        return GradedPart(self.parity, tuple(self.blocks), lo, hi, levels)

    def shifted(self, n):
        return GradedPart((self.parity + n) % 2, tuple((d + n, m) for d, m in self.blocks),
                          self.lo + n, self.hi + n, self.levels)

    def filtration_shifted(self, k):
        """N̄'_d = N̄_{d-2k}"""
        return replace(self, lo=self.lo + 2 * k, hi=self.hi + 2 * k)


@dataclass(frozen=True)
class WideSphere:
    even: GradedPart
    odd: GradedPart

    def part(self, parity):
        return self.even if parity % 2 == 0 else self.odd

    def with_part(self, part):
        if part.parity % 2 == 0:
            return WideSphere(part, self.odd)
        return WideSphere(self.even, part)

    def parts(self):
        return (self.even, self.odd)

    @property
    def is_mixed(self):
        return not self.even.is_empty and not self.odd.is_empty

    def normalized(self):
        return WideSphere(self.even.normalized(), self.odd.normalized())


def empty_sphere():
    return WideSphere(GradedPart.empty(0), GradedPart.empty(1))


def sphere(n):
    """S^n：V_n = Q，N̄_n = 全空間"""
    part = GradedPart(n % 2, ((n, 1),), n, n, (linalg.full_space(1),))
    return empty_sphere().with_part(part)


def rep_sphere(k, n=0):
    """S^{n+kz}"""
    from semifree.operations import smash_rep_sphere
    return smash_rep_sphere(sphere(n), k)


def validation_error(w):
    """
    回傳第一個違反的不變量，合法時回傳 None
    """
    for part in w.parts():
        label = 'even' if part.parity == 0 else 'odd'
        previous = None
        for d, m in part.blocks:
            if d % 2 != part.parity:
                return f"{label} 部分含有奇偶不符的次數 {d}"
            if m <= 0:
                return f"{label} 部分次數 {d} 的維度必須為正"
            if previous is not None and d <= previous:
                return f"{label} 部分的次數必須嚴格遞增"
            previous = d
        if part.is_empty:
            continue
        if part.lo % 2 != part.parity or part.hi % 2 != part.parity:
            return f"{label} 部分的窗口端點奇偶不符"
        expected = (part.hi - part.lo) // 2 + 1 if part.hi >= part.lo else 0
        if len(part.levels) != expected:
            return f"{label} 部分窗口 [{part.lo}, {part.hi}] 應有 {expected} 層過濾"
        for i, level in enumerate(part.levels):
            degree = part.lo + 2 * i
            if level.cols != part.width:
                return f"{label} 部分次數 {degree} 的過濾寬度不是 {part.width}"
            if linalg.rank(linalg.rows_of(level), part.width) != level.rows:
                return f"{label} 部分次數 {degree} 的過濾列向量線性相關"
        for d in part.span_range():
            if not linalg.contains(part.level(d), part.level(d + 2)):
                return f"{label} 部分 N̄_{d + 2} 不包含於 N̄_{d}"
    return None


def validate(w):
    return validation_error(w) is None


def require_valid(w):
    message = validation_error(w)
    if message:
        logger.warning(f"寬球面不合法: {message}")
        raise InvalidWideSphere(message)
    return w


def p_fixed(w):
    """p_T(t) = Σ dim V_d t^d"""
    mapping = {}
    for part in w.parts():
        for d, m in part.blocks:
            mapping[d] = mapping.get(d, 0) + m
    return LaurentPoly.from_mapping(mapping)


def p_borel_jump(w):
    """p_1(t) = Σ (dim N̄_d - dim N̄_{d+2}) t^d"""
    mapping = {}
    for part in w.parts():
        if part.is_empty:
            continue
        for d in part.span_range():
            jump = linalg.dim(part.level(d)) - linalg.dim(part.level(d + 2))
            if jump:
                mapping[d] = mapping.get(d, 0) + jump
    return LaurentPoly.from_mapping(mapping)
