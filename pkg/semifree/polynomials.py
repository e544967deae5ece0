"""
Laurent 多項式 p_T(t) 與 p_1(t)

係數為非負整數；以 sympy 解析 '1+t^2'、'2t^-2 + t' 之類的字串。
"""
import logging
import re
from dataclasses import dataclass
from typing import Tuple

from sympy import Symbol, expand, sympify
from sympy.core.sympify import SympifyError

from errors import UsageError

# 設定日誌
logger = logging.getLogger(__name__)

_T = Symbol('t')


@dataclass(frozen=True)
class LaurentPoly:
    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping):
        items = {}
        for exponent, coefficient in mapping.items():
            coefficient = int(coefficient)
            if coefficient < 0:
                raise ValueError(f"係數必須非負: t^{exponent} 的係數為 {coefficient}")
            if coefficient:
                items[int(exponent)] = items.get(int(exponent), 0) + coefficient
        return cls(tuple(sorted(items.items())))

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls.from_mapping({exponent: coefficient})

    @classmethod
    def parse(cls, text):
        """
        解析 Laurent 多項式字串

        Args:
            text: 例如 '1+t^2'

        Returns:
            LaurentPoly
        """
        source = re.sub(r'(\d)\s*t', r'\1*t', text.replace('^', '**'))
        try:
            expr = expand(sympify(source, locals={'t': _T}))
        except (SympifyError, SyntaxError, TypeError) as e:
            raise UsageError(f"無法解析多項式 {text!r}: {e}")
        mapping = {}
        for monomial, coefficient in expr.as_coefficients_dict().items():
            if monomial == 1:
                exponent = 0
            else:
                base, exponent = monomial.as_base_exp()
                if base != _T or not exponent.is_integer:
                    raise UsageError(f"{text!r} 不是 t 的 Laurent 多項式")
            if not coefficient.is_integer or coefficient < 0:
                raise UsageError(f"{text!r} 的係數必須是非負整數")
            mapping[int(exponent)] = int(coefficient)
        return cls.from_mapping(mapping)

    def as_dict(self):
        return dict(self.terms)

    def coefficient(self, exponent):
        return self.as_dict().get(exponent, 0)

    def shift(self, k):
        """乘以 t^k"""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def __add__(self, other):
        merged = self.as_dict()
        for e, c in other.terms:
            merged[e] = merged.get(e, 0) + c
        return LaurentPoly.from_mapping(merged)

    @property
    def even(self):
        return {e: c for e, c in self.terms if e % 2 == 0}

    @property
    def odd(self):
        return {e: c for e, c in self.terms if e % 2}

    def total(self):
        return sum(c for _, c in self.terms)

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for e, c in self.terms:
            if e == 0:
                pieces.append(str(c))
                continue
            power = 't' if e == 1 else f"t^{e}"
            pieces.append(power if c == 1 else f"{c}{power}")
        return '+'.join(pieces)
