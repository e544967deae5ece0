"""
有限群模組

由乘法表載入有限群，暴力列舉所有子群並依共軛關係分類。
元素以 0..n-1 的索引表示，0 必須是單位元。
"""
import logging
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Tuple

from errors import NotAGroup, TooLarge
from group_catalog.classes import F, GroupId

# 設定日誌
logger = logging.getLogger(__name__)

# 暴力列舉的群階上限
MAX_ORDER = 48


@dataclass(frozen=True, eq=False)
class SubgroupClassData:
    """一個子群共軛類"""

    index: int
    representative: FrozenSet[int]
    members: Tuple[FrozenSet[int], ...]
    normalizer_order: int

    @property
    def order(self):
        return len(self.representative)

    @property
    def size(self):
        return len(self.members)

    @property
    def weyl_order(self):
        return self.normalizer_order // self.order


@dataclass(frozen=True, eq=False)
class FiniteGroupData:
    """已驗證的乘法表與其子群共軛類"""

    order: int
    table: Tuple[Tuple[int, ...], ...]
    inverses: Tuple[int, ...]
    classes: Tuple[SubgroupClassData, ...]
    name: str = ''
    lookup: Dict[FrozenSet[int], int] = field(default_factory=dict, repr=False)

    def mul(self, a, b):
        return self.table[a][b]

    def conjugate(self, subgroup, g):
        """g H g^-1"""
        g_inv = self.inverses[g]
        return frozenset(self.table[self.table[g][h]][g_inv] for h in subgroup)

    def class_index_of(self, subgroup):
        return self.lookup[frozenset(subgroup)]

    def normalizer(self, subgroup):
        subgroup = frozenset(subgroup)
        return frozenset(g for g in range(self.order) if self.conjugate(subgroup, g) == subgroup)

    def is_subconjugate(self, low, high):
        """low 的某個共軛是否包含於 high 的代表元"""
        target = self.classes[high].representative
        return any(member <= target for member in self.classes[low].members)

    def class_of(self, index):
        return self.classes[index]


def _check_table(rows):
    """驗證乘法表，回傳 (table, inverses)"""
    n = len(rows)
    if n == 0:
        raise NotAGroup("乘法表是空的")
    if n > MAX_ORDER:
        logger.warning(f"群階 {n} 超過上限 {MAX_ORDER}")
        raise TooLarge(f"群階 {n} 超過暴力列舉上限 {MAX_ORDER}")
    table = []
    for i, row in enumerate(rows):
        row = tuple(int(x) for x in row)
        if len(row) != n:
            raise NotAGroup(f"第 {i} 列長度為 {len(row)}，應為 {n}")
        if any(x < 0 or x >= n for x in row):
            raise NotAGroup(f"第 {i} 列含有超出範圍的元素")
        table.append(row)
    table = tuple(table)

    # 單位元
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise NotAGroup("元素 0 不是單位元")

    # 反元素（同時保證每列為排列）
    inverses = []
    for i in range(n):
        if len(set(table[i])) != n:
            raise NotAGroup(f"第 {i} 列不是排列")
        right = table[i].index(0)
        if table[right][i] != 0:
            raise NotAGroup(f"元素 {i} 沒有雙邊反元素")
        inverses.append(right)

    # 結合律
    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            row_ab = table[ab]
            row_b = table[b]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    raise NotAGroup(f"結合律不成立: ({a}*{b})*{c} != {a}*({b}*{c})")
    return table, tuple(inverses)


def _closure(table, generators):
    """由生成元產生的子群"""
    elements = {0}
    frontier = [0]
    gens = list(generators)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = table[x][g]
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elements)


def enumerate_subgroups(table):
    """
    列舉所有子群

    從循環子群出發，反覆與循環子群合併直到不再產生新的子群。

    Args:
        table: 乘法表

    Returns:
        set of frozenset
    """
    n = len(table)
    cyclic = {_closure(table, [g]) for g in range(n)}
    subgroups = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        found = set()
        for h in frontier:
            for c in cyclic:
                if c <= h:
                    continue
                joined = _closure(table, h | c)
                if joined not in subgroups:
                    found.add(joined)
        subgroups |= found
        frontier = found
    return subgroups


def load_finite_group(rows, name=''):
    """
    載入有限群乘法表

    Args:
        rows: n×n 的索引表，第 i 列第 j 行為 i·j
        name: 顯示名稱

    Returns:
        GroupId（kind='finite'）
    """
    table, inverses = _check_table(rows)
    n = len(table)
    logger.info(f"開始列舉子群，群階 {n}")

    subgroups = enumerate_subgroups(table)
    probe = FiniteGroupData(order=n, table=table, inverses=inverses, classes=())

    remaining = set(subgroups)
    raw_classes = []
    while remaining:
        h = min(remaining, key=lambda s: (len(s), tuple(sorted(s))))
        orbit = {probe.conjugate(h, g) for g in range(n)}
        remaining -= orbit
        members = tuple(sorted(orbit, key=lambda s: tuple(sorted(s))))
        raw_classes.append(members)

    raw_classes.sort(key=lambda ms: (len(ms[0]), tuple(sorted(ms[0]))))
    classes = []
    lookup = {}
    for index, members in enumerate(raw_classes):
        representative = members[0]
        classes.append(SubgroupClassData(
            index=index,
            representative=representative,
            members=members,
            normalizer_order=n // len(members),
        ))
        for member in members:
            lookup[member] = index

    data = FiniteGroupData(
        order=n,
        table=table,
        inverses=inverses,
        classes=tuple(classes),
        name=name,
        lookup=lookup,
    )
    logger.info(f"子群列舉完成: {len(subgroups)} 個子群，{len(classes)} 個共軛類")
    return GroupId('finite', finite=data)


def parse_table_text(text):
    """
    解析乘法表檔案內容

    第一行為 n，之後 n 行各含 n 個以空白分隔的索引。
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise NotAGroup("乘法表檔案是空的")
    try:
        n = int(lines[0][0])
        rows = [[int(x) for x in line] for line in lines[1:]]
    except ValueError as e:
        raise NotAGroup(f"乘法表含有非整數項目: {e}")
    if n > MAX_ORDER:
        raise TooLarge(f"群階 {n} 超過暴力列舉上限 {MAX_ORDER}")
    if len(rows) != n:
        raise NotAGroup(f"宣告 {n} 列，實際有 {len(rows)} 列")
    return rows


def load_table_file(path):
    """從檔案載入有限群"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        logger.error(f"無法讀取乘法表檔案 {path}: {e}")
        raise NotAGroup(f"無法讀取乘法表檔案 {path}")
    name = os.path.splitext(os.path.basename(path))[0]
    return load_finite_group(parse_table_text(text), name=name)


def format_table(rows):
    """將乘法表轉成檔案格式"""
    lines = [str(len(rows))]
    lines.extend(' '.join(str(x) for x in row) for row in rows)
    return '\n'.join(lines) + '\n'


def subgroup_by_generators(group, generators):
    """由生成元取得子群的共軛類代號"""
    data = group.finite
    return F(data.class_index_of(_closure(data.table, generators)))


def brute_force_subgroups(group):
    """
    驗證用的子群列舉：以一至三個元素生成的所有子群

    與 enumerate_subgroups 的結果應一致（本模組支援的群都可由三個元素生成）。
    """
    data = group.finite
    found = set()
    for k in (1, 2, 3):
        for gens in combinations(range(data.order), k):
            found.add(_closure(data.table, gens))
    return found
