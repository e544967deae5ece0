"""
子群共軛類與群代號

SubgroupClass 是共軛類的符號代號：無窮系列 C(n)、D(n) 以索引表示，
其餘特殊類（SO2、O2、A4、S4、A5、整個群 G、有限群的 F<i>）各有固定代號。
"""
import logging
import re
from dataclasses import dataclass
from typing import Any, Optional, Tuple

from errors import InvalidClass, UsageError

# 設定日誌
logger = logging.getLogger(__name__)

# 代號輸出順序
SERIES_ORDER = ('C', 'D', 'SO2', 'O2', 'A4', 'S4', 'A5', 'G', 'F')

# 輸入時接受的別名
TOKEN_ALIASES = {
    'T': 'A4',
    'TETRA': 'A4',
    'OCTA': 'S4',
    'ICOSA': 'A5',
    'I': 'A5',
    'FULL': 'G',
}

CATALOGUE_KINDS = ('circle', 'o2', 'so3')

# 目錄群本身的名稱也代表全群類 G
_FULL_GROUP_NAMES = {
    'circle': ('SO2', 'CIRCLE'),
    'o2': ('O2',),
    'so3': ('SO3',),
}


@dataclass(frozen=True)
class SubgroupClass:
    """子群共軛類代號"""

    series: str
    index: int = 0

    @property
    def token(self):
        if self.series in ('C', 'D', 'F'):
            return f"{self.series}{self.index}"
        return self.series

    def sort_key(self):
        return (SERIES_ORDER.index(self.series), self.index)

    def __str__(self):
        return self.token


def C(n):
    return SubgroupClass('C', n)


def D(n):
    return SubgroupClass('D', n)


def F(i):
    return SubgroupClass('F', i)


SO2 = SubgroupClass('SO2')
O2 = SubgroupClass('O2')
TETRA = SubgroupClass('A4')
OCTA = SubgroupClass('S4')
ICOSA = SubgroupClass('A5')
FULL = SubgroupClass('G')
TRIVIAL = C(1)


def sorted_classes(classes):
    return sorted(classes, key=lambda k: k.sort_key())


@dataclass(frozen=True)
class GroupId:
    """
    群代號

    kind:
        'finite'：由乘法表載入的有限群（finite 欄位為 FiniteGroupData）
        'circle' / 'o2' / 'so3'：目錄中的無窮緊李群
        'view'：無窮目錄群中的有限子群，子群類以其在 ambient 中的融合像表示
    """

    kind: str
    finite: Any = None
    ambient: Optional['GroupId'] = None
    top: Optional[SubgroupClass] = None
    members: Tuple[SubgroupClass, ...] = ()

    @property
    def name(self):
        if self.kind == 'circle':
            return 'Circle'
        if self.kind == 'o2':
            return 'O2'
        if self.kind == 'so3':
            return 'SO3'
        if self.kind == 'finite':
            label = self.finite.name or 'Finite'
            return f"{label}(order={self.finite.order})"
        return f"{self.top.token}<{self.ambient.name}"

    @property
    def is_finite(self):
        return self.kind in ('finite', 'view')

    def series_starts(self):
        """無窮系列的起始索引"""
        if self.kind == 'circle':
            return {'C': 1}
        if self.kind == 'o2':
            return {'C': 1, 'D': 1}
        if self.kind == 'so3':
            return {'C': 1, 'D': 2}
        return {}

    def special_classes(self):
        """不屬於無窮系列的所有類"""
        if self.kind == 'circle':
            return (FULL,)
        if self.kind == 'o2':
            return (SO2, FULL)
        if self.kind == 'so3':
            return (SO2, O2, TETRA, OCTA, ICOSA, FULL)
        if self.kind == 'finite':
            return tuple(F(i) for i in range(len(self.finite.classes)))
        return self.members

    def full_class(self):
        if self.kind == 'finite':
            return F(len(self.finite.classes) - 1)
        if self.kind == 'view':
            return self.top
        return FULL

    def owns(self, cls):
        starts = self.series_starts()
        if cls.series in starts:
            return cls.index >= starts[cls.series]
        return cls in self.special_classes()

    def check(self, cls):
        """確認類屬於此群，否則拋出 InvalidClass"""
        if not isinstance(cls, SubgroupClass) or not self.owns(cls):
            logger.warning(f"{self.name} 中不存在子群類: {cls}")
            raise InvalidClass(f"{cls} 不是 {self.name} 的子群類")
        return cls

    def __str__(self):
        return self.name


CIRCLE_GROUP = GroupId('circle')
O2_GROUP = GroupId('o2')
SO3_GROUP = GroupId('so3')

_TOKEN_PATTERN = re.compile(r'^([A-Za-z]+)(\d*)$')


def parse_class(token, group):
    """
    解析子群類代號

    Args:
        token: 例如 'C3'、'D5'、'SO2'、'A4'、'G'、'F2'
        group: GroupId

    Returns:
        SubgroupClass
    """
    text = token.strip()
    match = _TOKEN_PATTERN.match(text)
    if not match:
        raise InvalidClass(f"無法解析子群類代號: {token!r}")
    head, digits = match.group(1).upper(), match.group(2)
    if head in ('C', 'D', 'F') and digits:
        cls = SubgroupClass(head, int(digits))
    else:
        name = TOKEN_ALIASES.get(head + digits, head + digits)
        if name in _FULL_GROUP_NAMES.get(group.kind, ()):
            name = 'G'
        if name not in SERIES_ORDER or name in ('C', 'D', 'F'):
            raise InvalidClass(f"未知的子群類代號: {token!r}")
        cls = SubgroupClass(name)
    if group.kind == 'finite' and cls == FULL:
        cls = group.full_class()
    return group.check(cls)


def parse_group(text):
    """
    解析 --group 參數

    Args:
        text: 'Circle'、'O2'、'SO3' 或 'Finite:<路徑>'

    Returns:
        GroupId
    """
    value = (text or '').strip()
    lowered = value.lower()
    if lowered == 'circle':
        return CIRCLE_GROUP
    if lowered == 'o2':
        return O2_GROUP
    if lowered == 'so3':
        return SO3_GROUP
    if lowered.startswith('finite:'):
        from group_catalog.finite import load_table_file
        return load_table_file(value.split(':', 1)[1])
    raise UsageError(f"未知的群: {text!r}（可用 Circle、O2、SO3、Finite:<路徑>）")
