"""
ΦG 的開閉集

孤立點逐一記錄；每條收斂序列上的部分只能是有限集（不含極限點）
或餘有限集（含極限點）。
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from errors import MalformedDescriptor, SpaceMismatch
from group_catalog.class_sets import ClassSet, SeriesSet
from group_catalog.classes import SubgroupClass, sorted_classes

# 設定日誌
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClopenSet:
    space: object
    isolated: FrozenSet[SubgroupClass]
    series: Tuple[Tuple[str, SeriesSet], ...] = ()

    @classmethod
    def build(cls, space, points=(), series=None):
        """
        建立開閉集

        Args:
            space: PhiSpace
            points: 孤立點、序列成員或極限點
            series: {系列代號: SeriesSet}，必須是有限或餘有限

        Returns:
            ClopenSet
        """
        parts = {seq.series: SeriesSet.empty(seq.start) for seq in space.sequences}
        for tag, part in (series or {}).items():
            if tag not in parts:
                raise MalformedDescriptor(f"{space.group.name} 的 Φ 沒有 {tag} 序列")
            parts[tag] = parts[tag].union(part)
        isolated = set()
        limits = set()
        for k in points:
            if k in space.isolated:
                isolated.add(k)
                continue
            seq = next((s for s in space.sequences if s.limit == k), None)
            if seq is not None:
                limits.add(seq.series)
                continue
            seq = space.sequence_for(k.series)
            if seq is None or k.index < seq.start:
                logger.warning(f"{k} 不是 Φ{space.group.name} 的點")
                raise MalformedDescriptor(f"{k} 不是 Φ{space.group.name} 的點")
            parts[k.series] = parts[k.series].union(SeriesSet.finite(seq.start, [k.index]))
        for tag, part in parts.items():
            if not (part.is_finite or part.is_cofinite):
                raise MalformedDescriptor(f"{tag} 序列上的集合不是開閉集（必須有限或餘有限）")
            if part.is_cofinite and not part.is_empty:
                limits.discard(tag)
            elif tag in limits:
                raise MalformedDescriptor(f"含有 {tag} 序列極限點的開閉集必須包含序列的尾端")
        return cls(space, frozenset(isolated), tuple(sorted(parts.items())))

    @classmethod
    def of(cls, space, points):
        return cls.build(space, points)

    @classmethod
    def empty(cls, space):
        return cls.build(space)

    @classmethod
    def whole(cls, space):
        return cls.build(space, space.isolated,
                         {seq.series: SeriesSet.full(seq.start) for seq in space.sequences})

    @classmethod
    def tail(cls, space, cutoff, points=()):
        """極限點加上索引 >= cutoff 的序列成員"""
        if not space.sequences:
            raise MalformedDescriptor(f"Φ{space.group.name} 沒有收斂序列")
        seq = space.sequences[0]
        return cls.build(space, points, {seq.series: SeriesSet.tail(seq.start, cutoff)})

    @classmethod
    def from_class_set(cls, space, class_set):
        """把 ΦG 內的 ClassSet 轉成開閉集"""
        if class_set.group != space.group:
            raise SpaceMismatch(f"集合屬於 {class_set.group.name}，空間是 Φ{space.group.name}")
        points = []
        series = {}
        for k in class_set.specials:
            points.append(k)
        for tag, part in class_set.series:
            if part.is_empty:
                continue
            seq = space.sequence_for(tag)
            if seq is None:
                raise MalformedDescriptor(f"{tag} 系列的類不在 Φ{space.group.name} 中")
            series[tag] = part
        for seq in space.sequences:
            part = series.get(seq.series)
            has_limit = seq.limit in class_set
            if part is not None and part.is_cofinite and not has_limit:
                raise MalformedDescriptor(f"含有 {seq.series} 尾端的集合必須包含極限點 {seq.limit}")
        return cls.build(space, points, series)

    def _check_same(self, other):
        if self.space != other.space:
            raise SpaceMismatch(f"開閉集屬於不同的空間: Φ{self.space.group.name} 與 Φ{other.space.group.name}")

    def part(self, tag):
        for name, part in self.series:
            if name == tag:
                return part
        return None

    def __contains__(self, k):
        if k in self.isolated:
            return True
        for seq in self.space.sequences:
            part = self.part(seq.series)
            if k == seq.limit:
                return part.is_cofinite
            if k.series == seq.series:
                return k.index in part
        return False

    def _combine(self, other, point_op, series_op):
        self._check_same(other)
        isolated = point_op(self.isolated, other.isolated)
        series = {tag: series_op(part, other.part(tag)) for tag, part in self.series}
        return ClopenSet(self.space, frozenset(isolated), tuple(sorted(series.items())))

    def union(self, other):
        return self._combine(other, lambda a, b: a | b, SeriesSet.union)

    def intersection(self, other):
        return self._combine(other, lambda a, b: a & b, SeriesSet.intersection)

    def difference(self, other):
        return self._combine(other, lambda a, b: a - b, SeriesSet.difference)

    def complement(self):
        return ClopenSet.whole(self.space).difference(self)

    def is_subset(self, other):
        return self.difference(other).is_empty

    @property
    def is_empty(self):
        return not self.isolated and all(part.is_empty for _, part in self.series)

    def limits(self):
        return [seq.limit for seq in self.space.sequences
                if self.part(seq.series).is_cofinite]

    def to_class_set(self):
        """提升為 G 的子群類集合"""
        return ClassSet.build(self.space.group, list(self.isolated) + self.limits(),
                              dict(self.series))

    def members(self, bound):
        return self.to_class_set().members(bound)

    def to_document(self):
        return {
            "space": self.space.group.name,
            "isolated": [k.token for k in sorted_classes(list(self.isolated) + self.limits())],
            "series": {tag: part.to_document() for tag, part in self.series},
        }


def clopen_union(a, b):
    return a.union(b)


def clopen_intersect(a, b):
    return a.intersection(b)


def clopen_complement(a):
    return a.complement()


def clopen_difference(a, b):
    return a.difference(b)
