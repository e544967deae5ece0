"""
形式譜表達式

葉節點：S0、cell(K) = G/K_+、basic(K, U) = σ_{K,U}、iso(K) = e⟨(K)⟩
內部節點：wedge、smash、susp(n, ·)、dual(·)

每個節點都帶有所屬的群；iso 為無窮（非緊）物件，dual 只接受有限子樹。
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from errors import GroupMismatch, MalformedExpr
from group_catalog.classes import SubgroupClass

# 設定日誌
logger = logging.getLogger(__name__)


class SpectrumExpr:
    """表達式節點的基底類別"""

    @property
    def is_finite(self):
        return True

    def children(self):
        return ()

    def to_text(self):
        raise NotImplementedError

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class Sphere0(SpectrumExpr):
    group: object

    def to_text(self):
        return 'S0'


@dataclass(frozen=True)
class Cell(SpectrumExpr):
    group: object
    k: SubgroupClass

    def to_text(self):
        return f"cell({self.k.token})"


@dataclass(frozen=True)
class Basic(SpectrumExpr):
    """σ_{K,U}；U 為 K 的模型群 Φ 上含 K 的開閉集"""

    group: object
    k: SubgroupClass
    clopen: object
    cutoff: Optional[int] = None

    def to_text(self):
        if self.cutoff is None:
            return f"basic({self.k.token})"
        return f"basic({self.k.token},{self.cutoff})"


@dataclass(frozen=True)
class IsoClass(SpectrumExpr):
    group: object
    k: SubgroupClass

    @property
    def is_finite(self):
        return False

    def to_text(self):
        return f"iso({self.k.token})"


@dataclass(frozen=True)
class Wedge(SpectrumExpr):
    group: object
    terms: Tuple[SpectrumExpr, ...] = ()

    @property
    def is_finite(self):
        return all(t.is_finite for t in self.terms)

    def children(self):
        return self.terms

    def to_text(self):
        return f"wedge({','.join(t.to_text() for t in self.terms)})"


@dataclass(frozen=True)
class Smash(SpectrumExpr):
    group: object
    terms: Tuple[SpectrumExpr, ...] = ()

    @property
    def is_finite(self):
        return all(t.is_finite for t in self.terms)

    def children(self):
        return self.terms

    def to_text(self):
        return f"smash({','.join(t.to_text() for t in self.terms)})"


@dataclass(frozen=True)
class Susp(SpectrumExpr):
    group: object
    n: int
    term: SpectrumExpr

    @property
    def is_finite(self):
        return self.term.is_finite

    def children(self):
        return (self.term,)

    def to_text(self):
        return f"susp({self.n},{self.term.to_text()})"


@dataclass(frozen=True)
class Dual(SpectrumExpr):
    group: object
    term: SpectrumExpr

    def children(self):
        return (self.term,)

    def to_text(self):
        return f"dual({self.term.to_text()})"


def _same_group(terms, group=None):
    for t in terms:
        if group is None:
            group = t.group
        elif t.group != group:
            raise GroupMismatch(f"表達式混用了 {group.name} 與 {t.group.name}")
    if group is None:
        raise MalformedExpr("空的 wedge/smash 需要指定群")
    return group


def sphere0(group):
    return Sphere0(group)


def cell(group, k):
    return Cell(group, group.check(k))


def basic(group, k, cutoff=None, clopen=None):
    """
    基本胞腔 σ_{K,U}

    未指定 U 時使用 basic_nbhd(K, cutoff)。
    """
    from group_catalog.restriction import subgroup_model
    from phi_space.space import phi
    from phi_space.topology import basic_nbhd

    group.check(k)
    model = subgroup_model(group, k)
    if clopen is None:
        clopen = basic_nbhd(group, k, cutoff)
    elif clopen.space != phi(model.group):
        raise MalformedExpr(f"U 必須是 Φ({model.group.name}) 上的開閉集")
    if model.group.full_class() not in clopen:
        raise MalformedExpr(f"U 必須包含 {k}")
    return Basic(group, k, clopen, cutoff)


def isoclass(group, k):
    return IsoClass(group, group.check(k))


def wedge(*terms, group=None):
    return Wedge(_same_group(terms, group), tuple(terms))


def smash(*terms, group=None):
    return Smash(_same_group(terms, group), tuple(terms))


def susp(n, term):
    return Susp(term.group, int(n), term)


def dual(term):
    if not term.is_finite:
        raise MalformedExpr("dual 只能作用於有限（緊）的表達式")
    return Dual(term.group, term)
