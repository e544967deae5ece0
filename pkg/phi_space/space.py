"""
ΦG 空間

ΦG 是 Weyl 群有限的子群類所成的空間。目錄中只會出現三種形狀：
有限離散空間、單點，以及「孤立點 + 收斂到極限點的二面體序列」。
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from group_catalog.catalogue import limit_class
from group_catalog.classes import FULL, ICOSA, OCTA, SO2, TETRA, SubgroupClass

# 設定日誌
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvergentSequence:
    """series(start), series(start+1), ... → limit"""

    series: str
    start: int
    limit: SubgroupClass

    def to_document(self):
        return {"series": self.series, "start": self.start, "limit": self.limit.token}


@dataclass(frozen=True)
class PhiSpace:
    group: object
    isolated: Tuple[SubgroupClass, ...]
    sequences: Tuple[ConvergentSequence, ...] = ()

    def sequence_for(self, tag):
        for seq in self.sequences:
            if seq.series == tag:
                return seq
        return None

    def contains_point(self, k):
        if k in self.isolated:
            return True
        for seq in self.sequences:
            if k == seq.limit:
                return True
            if k.series == seq.series and k.index >= seq.start:
                return True
        return False

    @property
    def is_discrete(self):
        return not self.sequences

    def to_document(self):
        return {
            "group": self.group.name,
            "isolated": [k.token for k in self.isolated],
            "sequences": [seq.to_document() for seq in self.sequences],
        }


def phi(group):
    """
    建立 ΦG

    Args:
        group: GroupId

    Returns:
        PhiSpace
    """
    if group.is_finite:
        return PhiSpace(group, tuple(group.special_classes()))
    if group.kind == 'circle':
        return PhiSpace(group, (FULL,))
    starts = group.series_starts()
    sequence = ConvergentSequence('D', starts['D'], limit_class(group))
    if group.kind == 'o2':
        isolated = (SO2,)
    else:
        isolated = (SO2, TETRA, OCTA, ICOSA, FULL)
    return PhiSpace(group, isolated, (sequence,))
