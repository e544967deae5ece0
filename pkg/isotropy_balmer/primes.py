"""
Balmer 質理想與理想的判定

每個子群類 K 對應一個質理想 ℘_K = {X : Φ^K X ≃ 0}，
包含關係就是餘環面序。
"""
import logging
from dataclasses import dataclass

from errors import GroupMismatch, NotFinite
from group_catalog.catalogue import classes, is_cotoral
from group_catalog.class_sets import ClassSet
from group_catalog.classes import SubgroupClass
from isotropy_balmer.expr import isoclass, wedge
from isotropy_balmer.support import _as_class_set, lambda_ct, support

# 設定日誌
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BalmerPrime:
    group: object
    k: SubgroupClass

    def __str__(self):
        return f"℘_{self.k.token}"


def prime(group, k):
    return BalmerPrime(group, group.check(k))


def primes(group, bound=None):
    """列出質理想（無窮系列截斷到 bound）"""
    return [BalmerPrime(group, k) for k in classes(group, bound)]


def prime_leq(p, q):
    """℘_L ⊆ ℘_K 當且僅當 L 餘環面於 K"""
    if p.group != q.group:
        raise GroupMismatch(f"質理想屬於不同的群: {p.group.name} 與 {q.group.name}")
    return is_cotoral(p.group, p.k, q.k)


def point_closure(group, k):
    """{℘_K} 的閉包：Λct({K})"""
    group.check(k)
    return lambda_ct(ClassSet.of(group, [k]))


def in_thickt(y, x):
    """
    Y 是否在 X 生成的厚張量理想中

    兩者都必須是有限表達式；判定條件為 supp(Y) ⊆ supp(X)。
    """
    for expr in (y, x):
        if not expr.is_finite:
            raise NotFinite(f"{expr} 不是有限表達式")
    if y.group != x.group:
        raise GroupMismatch("表達式屬於不同的群")
    return support(y).classes.is_subset(support(x).classes)


def loct_equal(x, y):
    """兩個表達式生成相同的局部化張量理想"""
    if y.group != x.group:
        raise GroupMismatch("表達式屬於不同的群")
    return support(x).classes == support(y).classes


def loct_generator(class_set):
    """
    幾何迷向恰為 S 的局部化理想生成元：∨_{K∈S} e⟨(K)⟩

    S 必須是有限集合，不要求餘環面封閉。
    """
    s = _as_class_set(class_set)
    if not s.is_finite:
        raise NotFinite("只有有限集合可以寫成 iso 物件的 wedge")
    terms = [isoclass(s.group, k) for k in s.finite_members()]
    return wedge(*terms, group=s.group)
