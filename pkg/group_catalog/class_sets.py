"""
子群類集合的描述子

無窮系列（C(n)、D(n)）上的集合以「分段週期」形式表示：
從系列起點開始切成若干段，每段由自己的週期與餘數決定成員，最後一段延伸到無窮。
有限集合、餘有限集合與最終週期集合都是特例。
所有運算只依賴週期、餘數與分段端點，不會逐一走過索引。
"""
import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from math import gcd, isqrt
from typing import FrozenSet, Tuple

from errors import GroupMismatch, MalformedDescriptor, TooLarge
from group_catalog.classes import SubgroupClass, sorted_classes

# 設定日誌
logger = logging.getLogger(__name__)

# 合併兩個週期時允許展開的餘數個數上限
MAX_LIFTED_RESIDUES = 2_000_000


def divisors(n):
    """n 的所有正因數（遞增）"""
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _lcm(a, b):
    return a * b // gcd(a, b)


def _reduce(period, residues):
    """縮到最小週期；residues 為遞增 tuple"""
    if not residues:
        return 1, ()
    if len(residues) == period:
        return 1, (0,)
    present = set(residues)
    # 檢查較小的一邊即可
    sample = present if 2 * len(present) <= period else set(range(period)) - present
    for d in divisors(period):
        if d == period:
            break
        if len(sample) % (period // d):
            continue
        if all((r + d) % period in sample for r in sample):
            return d, tuple(sorted({r % d for r in residues}))
    return period, tuple(residues)


def _count(period, residues, a, b):
    """[a, b) 中餘數落在 residues 的整數個數"""
    def upto(x):
        return (x // period) * len(residues) + bisect_left(residues, x % period)
    return upto(b) - upto(a)


def _points(period, residues, a, b):
    """依序產生 [a, b) 中餘數落在 residues 的整數"""
    if not residues:
        return
    base = a - a % period
    while base < b:
        for r in residues:
            n = base + r
            if n >= b:
                break
            if n >= a:
                yield n
        base += period


def _combine_patterns(first, second, op):
    (p1, r1), (p2, r2) = first, second
    period = _lcm(p1, p2)
    cost = len(r1) * (period // p1) + len(r2) * (period // p2)
    if cost > MAX_LIFTED_RESIDUES:
        logger.warning(f"週期 {p1} 與 {p2} 的合併需要展開 {cost} 個餘數")
        raise TooLarge(f"週期 {p1} 與 {p2} 的合併太大")
    in_first, in_second = set(r1), set(r2)
    # op(False, False) 恆為 False，候選只需來自兩邊的餘數
    candidates = set(_points(p1, r1, 0, period)) | set(_points(p2, r2, 0, period))
    residues = sorted(x for x in candidates if op(x % p1 in in_first, x % p2 in in_second))
    return _reduce(period, tuple(residues))


@dataclass(frozen=True, eq=False)
class SeriesSet:
    """
    一個無窮系列上的分段週期集合

    pieces: ((begin, period, residues), ...)，begin 遞增且第一段從 start 開始；
    begin_i <= n < begin_{i+1} 時 n 屬於集合 ⇔ n % period_i in residues_i。
    相等判斷依集合內容，不依分段方式。
    """

    start: int
    pieces: Tuple[Tuple[int, int, Tuple[int, ...]], ...]

    # 建構

    @classmethod
    def _build(cls, start, pieces):
        """
        由 (begin, period, residues) 列表建立並正規化

        同一 begin 出現多次時以後者為準；begin < start 的部分截掉。
        """
        by_begin = {start: (1, ())}
        for begin, period, residues in pieces:
            if period < 1:
                raise MalformedDescriptor(f"週期必須為正整數: {period}")
            residues = tuple(sorted({r % period for r in residues}))
            by_begin[max(begin, start)] = (period, residues)
        begins = sorted(by_begin)
        normalized = []
        for i, begin in enumerate(begins):
            period, residues = by_begin[begin]
            if i + 1 < len(begins):
                end = begins[i + 1]
                length = end - begin
                # 有限段只需要自己範圍內的成員
                if period > length:
                    hits = [n % length for n in _points(period, residues, begin, end)]
                    period, residues = length, tuple(sorted(hits))
            period, residues = _reduce(period, residues)
            if normalized and normalized[-1][1:] == (period, residues):
                continue
            normalized.append((begin, period, residues))
        return cls(start, tuple(normalized))

    @classmethod
    def empty(cls, start):
        return cls._build(start, [])

    @classmethod
    def full(cls, start):
        return cls._build(start, [(start, 1, (0,))])

    @classmethod
    def finite(cls, start, indices):
        pieces = []
        for n in sorted(set(indices)):
            if n < start:
                raise MalformedDescriptor(f"索引 {n} 小於系列起點 {start}")
            pieces.append((n, 1, (0,)))
            pieces.append((n + 1, 1, ()))
        return cls._build(start, pieces)

    @classmethod
    def cofinite(cls, start, excluded=()):
        return cls.full(start).difference(cls.finite(start, excluded))

    @classmethod
    def tail(cls, start, cutoff):
        """{n : n >= cutoff}"""
        return cls._build(start, [(max(cutoff, start), 1, (0,))])

    @classmethod
    def periodic(cls, start, modulus, residue, threshold=None):
        """{n >= threshold : n ≡ residue (mod modulus)}"""
        if modulus < 1:
            raise MalformedDescriptor(f"模數必須為正整數: {modulus}")
        threshold = start if threshold is None else max(threshold, start)
        return cls._build(start, [(threshold, modulus, (residue,))])

    def rebased(self, start):
        """同樣的成員，改以 start 為系列起點（小於 start 的成員捨去）"""
        return SeriesSet._build(start, list(self.pieces))

    # 查詢

    def _segments(self):
        """依序產生 (begin, end, period, residues)，最後一段 end 為 None"""
        for i, (begin, period, residues) in enumerate(self.pieces):
            end = self.pieces[i + 1][0] if i + 1 < len(self.pieces) else None
            yield begin, end, period, residues

    def _pattern_at(self, n):
        begins = [piece[0] for piece in self.pieces]
        _, period, residues = self.pieces[bisect_right(begins, n) - 1]
        return period, residues

    def __contains__(self, n):
        if n < self.start:
            return False
        period, residues = self._pattern_at(n)
        return n % period in residues

    @property
    def period(self):
        """最終週期"""
        return self.pieces[-1][1]

    @property
    def residues(self):
        """最終週期下的餘數"""
        return self.pieces[-1][2]

    @property
    def is_empty(self):
        return all(
            not residues if end is None else _count(period, residues, begin, end) == 0
            for begin, end, period, residues in self._segments()
        )

    @property
    def is_finite(self):
        return not self.residues

    @property
    def is_cofinite(self):
        return len(self.residues) == self.period

    @property
    def is_full(self):
        return self.complement().is_empty

    def members(self, bound):
        found = []
        for begin, end, period, residues in self._segments():
            stop = bound + 1 if end is None else min(end, bound + 1)
            found.extend(_points(period, residues, begin, stop))
            if end is None or end > bound:
                break
        return found

    def finite_members(self):
        if not self.is_finite:
            raise MalformedDescriptor("集合不是有限集合")
        found = []
        for begin, end, period, residues in self._segments():
            if end is not None:
                found.extend(_points(period, residues, begin, end))
        return found

    def excluded(self):
        """餘有限集合中被排除的索引"""
        if not self.is_cofinite:
            raise MalformedDescriptor("集合不是餘有限集合")
        found = []
        for begin, end, period, residues in self._segments():
            if end is not None:
                missing = tuple(sorted(set(range(period)) - set(residues)))
                found.extend(_points(period, missing, begin, end))
        return found

    def tail_start(self):
        """餘有限集合從此索引起全部包含"""
        if not self.is_cofinite:
            raise MalformedDescriptor("集合不是餘有限集合")
        cutoff = self.pieces[-1][0]
        while cutoff > self.start and cutoff - 1 in self:
            cutoff -= 1
        return cutoff

    # 布林運算

    def _combine(self, other, op):
        if self.start != other.start:
            raise MalformedDescriptor(f"系列起點不同: {self.start} 與 {other.start}")
        begins = sorted({piece[0] for piece in self.pieces} | {piece[0] for piece in other.pieces})
        pieces = [
            (begin,) + _combine_patterns(self._pattern_at(begin), other._pattern_at(begin), op)
            for begin in begins
        ]
        return SeriesSet._build(self.start, pieces)

    def union(self, other):
        return self._combine(other, lambda a, b: a or b)

    def intersection(self, other):
        return self._combine(other, lambda a, b: a and b)

    def difference(self, other):
        return self._combine(other, lambda a, b: a and not b)

    def complement(self):
        return self.full(self.start).difference(self)

    def is_subset(self, other):
        return self.difference(other).is_empty

    def __eq__(self, other):
        if not isinstance(other, SeriesSet):
            return NotImplemented
        if self.start != other.start:
            return False
        return self._combine(other, lambda a, b: a != b).is_empty

    def __hash__(self):
        # 最終週期與餘數已是最小形式，只由集合內容決定
        return hash((self.start, self.period, self.residues))

    def to_document(self):
        if self.is_finite:
            return {"kind": "finite", "indices": self.finite_members()}
        if self.is_cofinite:
            return {"kind": "cofinite", "indices": self.excluded()}
        return {
            "kind": "periodic",
            "pieces": [
                {"from": begin, "period": period, "residues": list(residues)}
                for begin, period, residues in self.pieces
            ],
        }


@dataclass(frozen=True)
class ClassSet:
    """
    群 G 的子群類集合：特殊類明列，無窮系列用 SeriesSet
    """

    group: object
    specials: FrozenSet[SubgroupClass]
    series: Tuple[Tuple[str, SeriesSet], ...]

    @classmethod
    def build(cls, group, classes=(), series=None):
        """
        建立集合

        Args:
            group: GroupId
            classes: 明列的子群類（系列中的類也可以直接列出）
            series: {系列代號: SeriesSet}
        """
        starts = group.series_starts()
        parts = {tag: SeriesSet.empty(start) for tag, start in starts.items()}
        for tag, part in (series or {}).items():
            if tag not in starts:
                raise MalformedDescriptor(f"{group.name} 沒有 {tag} 系列")
            if part.start != starts[tag]:
                part = part.rebased(starts[tag])
            parts[tag] = parts[tag].union(part)
        specials = set()
        for k in classes:
            group.check(k)
            if k.series in starts:
                parts[k.series] = parts[k.series].union(SeriesSet.finite(starts[k.series], [k.index]))
            else:
                specials.add(k)
        return cls(group, frozenset(specials), tuple(sorted(parts.items())))

    @classmethod
    def empty(cls, group):
        return cls.build(group)

    @classmethod
    def everything(cls, group):
        starts = group.series_starts()
        return cls.build(group, group.special_classes(),
                         {tag: SeriesSet.full(start) for tag, start in starts.items()})

    @classmethod
    def of(cls, group, classes):
        return cls.build(group, classes)

    def part(self, tag):
        for name, part in self.series:
            if name == tag:
                return part
        return None

    def __contains__(self, k):
        if not isinstance(k, SubgroupClass) or not self.group.owns(k):
            return False
        part = self.part(k.series)
        if part is not None:
            return k.index in part
        return k in self.specials

    def _check_same(self, other):
        if self.group != other.group:
            raise GroupMismatch(f"集合屬於不同的群: {self.group.name} 與 {other.group.name}")

    def _combine(self, other, special_op, series_op):
        self._check_same(other)
        specials = special_op(self.specials, other.specials)
        series = {tag: series_op(part, other.part(tag)) for tag, part in self.series}
        return ClassSet(self.group, frozenset(specials), tuple(sorted(series.items())))

    def union(self, other):
        return self._combine(other, lambda a, b: a | b, SeriesSet.union)

    def intersection(self, other):
        return self._combine(other, lambda a, b: a & b, SeriesSet.intersection)

    def difference(self, other):
        return self._combine(other, lambda a, b: a - b, SeriesSet.difference)

    def complement(self):
        return ClassSet.everything(self.group).difference(self)

    def is_subset(self, other):
        return self.difference(other).is_empty

    def with_classes(self, *classes):
        return self.union(ClassSet.of(self.group, classes))

    def without_series(self, tag):
        series = {name: part for name, part in self.series}
        if tag in series:
            series[tag] = SeriesSet.empty(series[tag].start)
        return ClassSet(self.group, self.specials, tuple(sorted(series.items())))

    def with_full_series(self, tag):
        series = {name: part for name, part in self.series}
        if tag in series:
            series[tag] = SeriesSet.full(series[tag].start)
        return ClassSet(self.group, self.specials, tuple(sorted(series.items())))

    @property
    def is_empty(self):
        return not self.specials and all(part.is_empty for _, part in self.series)

    @property
    def is_finite(self):
        return all(part.is_finite for _, part in self.series)

    def members(self, bound):
        """依輸出順序列出成員，系列截斷到 bound"""
        found = list(self.specials)
        for tag, part in self.series:
            found.extend(SubgroupClass(tag, n) for n in part.members(bound))
        return sorted_classes(found)

    def finite_members(self):
        if not self.is_finite:
            raise MalformedDescriptor("集合含有無窮多個子群類")
        found = list(self.specials)
        for tag, part in self.series:
            found.extend(SubgroupClass(tag, n) for n in part.finite_members())
        return sorted_classes(found)

    def to_document(self):
        return {
            "group": self.group.name,
            "classes": [k.token for k in sorted_classes(self.specials)],
            "series": {tag: part.to_document() for tag, part in self.series},
        }

    def __str__(self):
        pieces = [k.token for k in sorted_classes(self.specials)]
        for tag, part in self.series:
            if part.is_empty:
                continue
            if part.is_finite:
                pieces.extend(f"{tag}{n}" for n in part.finite_members())
            elif part.is_cofinite:
                excluded = part.excluded()
                pieces.append(f"{tag}(all)" if not excluded else
                              f"{tag}(all but {','.join(str(n) for n in excluded)})")
            else:
                pieces.append(f"{tag}({part.to_document()})")
        return '{' + ', '.join(pieces) + '}'
