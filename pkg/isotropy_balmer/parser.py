"""
表達式與集合描述子的文字語法

表達式：S0 | cell(K) | basic(K[, n]) | iso(K) | wedge(e, ...) | smash(e, ...)
        | susp(n, e) | dual(e)
描述子：項以 + 連接；項為 {K, ...} | Lct{K, ...} | tailC(n) | tailD(n)
        | modC(m, r) | modD(m, r) | allC | allD | all | empty | K
"""
import logging
import re

from errors import InvalidClass, MalformedDescriptor, MalformedExpr
from group_catalog.class_sets import ClassSet, SeriesSet
from group_catalog.classes import parse_class
from isotropy_balmer.expr import (
    basic, cell, dual, isoclass, smash, sphere0, susp, wedge,
)
from isotropy_balmer.support import lambda_ct

# 設定日誌
logger = logging.getLogger(__name__)

_TOKEN = re.compile(r'\s*(?:(?P<num>-?\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<sym>[(){},+]))')


def tokenize(text, error):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise error(f"無法解析位置 {pos} 的字元: {text[pos:pos + 10]!r}")
        pos = match.end()
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
    return tokens


class _Cursor:
    def __init__(self, tokens, error):
        self.tokens = tokens
        self.pos = 0
        self.error = error

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        token = self.peek()
        if token[0] is None:
            raise self.error("輸入意外結束")
        if kind and token[0] != kind:
            raise self.error(f"預期 {kind}，得到 {token[1]!r}")
        if value and token[1] != value:
            raise self.error(f"預期 {value!r}，得到 {token[1]!r}")
        self.pos += 1
        return token[1]

    def accept(self, value):
        if self.peek()[1] == value:
            self.pos += 1
            return True
        return False

    def done(self):
        if self.pos != len(self.tokens):
            raise self.error(f"多餘的輸入: {self.peek()[1]!r}")

    def number(self):
        return int(self.take('num'))


def _class(cursor, group):
    token = cursor.take('name')
    try:
        return parse_class(token, group)
    except InvalidClass as e:
        raise cursor.error(e.message)


def parse_expr(text, group):
    """
    解析表達式

    Args:
        text: 例如 'wedge(basic(O2,3), cell(C2))'
        group: GroupId

    Returns:
        SpectrumExpr
    """
    cursor = _Cursor(tokenize(text, MalformedExpr), MalformedExpr)
    expr = _expr(cursor, group)
    cursor.done()
    return expr


def _expr(cursor, group):
    head = cursor.take('name')
    lowered = head.lower()
    if lowered == 's0':
        return sphere0(group)
    cursor.take('sym', '(')
    if lowered == 'cell':
        result = cell(group, _class(cursor, group))
    elif lowered == 'iso':
        result = isoclass(group, _class(cursor, group))
    elif lowered == 'basic':
        k = _class(cursor, group)
        cutoff = cursor.number() if cursor.accept(',') else None
        result = basic(group, k, cutoff)
    elif lowered in ('wedge', 'smash'):
        terms = []
        if cursor.peek()[1] != ')':
            terms.append(_expr(cursor, group))
            while cursor.accept(','):
                terms.append(_expr(cursor, group))
        build = wedge if lowered == 'wedge' else smash
        result = build(*terms, group=group)
    elif lowered == 'susp':
        n = cursor.number()
        cursor.take('sym', ',')
        result = susp(n, _expr(cursor, group))
    elif lowered == 'dual':
        result = dual(_expr(cursor, group))
    else:
        raise MalformedExpr(f"未知的表達式: {head!r}")
    cursor.take('sym', ')')
    return result


def parse_descriptor(text, group):
    """
    解析子群類集合描述子

    Args:
        text: 例如 'Lct{C2,C3}'、'tailD(4)+O2'
        group: GroupId

    Returns:
        ClassSet
    """
    cursor = _Cursor(tokenize(text, MalformedDescriptor), MalformedDescriptor)
    result = _term(cursor, group)
    while cursor.accept('+'):
        result = result.union(_term(cursor, group))
    cursor.done()
    return result


def _class_list(cursor, group):
    cursor.take('sym', '{')
    found = []
    if not cursor.accept('}'):
        found.append(_class(cursor, group))
        while cursor.accept(','):
            found.append(_class(cursor, group))
        cursor.take('sym', '}')
    return ClassSet.of(group, found)


def _series_part(group, tag, part_builder):
    starts = group.series_starts()
    if tag not in starts:
        raise MalformedDescriptor(f"{group.name} 沒有 {tag} 系列")
    return ClassSet.build(group, series={tag: part_builder(starts[tag])})


def _term(cursor, group):
    kind, value = cursor.peek()
    if value == '{':
        return _class_list(cursor, group)
    head = cursor.take('name')
    lowered = head.lower()
    if lowered == 'lct':
        return lambda_ct(_class_list(cursor, group)).classes
    if lowered in ('tailc', 'taild'):
        tag = head[-1].upper()
        cursor.take('sym', '(')
        n = cursor.number()
        cursor.take('sym', ')')
        return _series_part(group, tag, lambda start: SeriesSet.tail(start, n))
    if lowered in ('modc', 'modd'):
        tag = head[-1].upper()
        cursor.take('sym', '(')
        m = cursor.number()
        cursor.take('sym', ',')
        r = cursor.number()
        cursor.take('sym', ')')
        if m < 1:
            raise MalformedDescriptor(f"模數必須為正整數: {m}")
        return _series_part(group, tag, lambda start: SeriesSet.periodic(start, m, r))
    if lowered in ('allc', 'alld'):
        tag = head[-1].upper()
        return _series_part(group, tag, SeriesSet.full)
    if lowered == 'all':
        return ClassSet.everything(group)
    if lowered == 'empty':
        return ClassSet.empty(group)
    try:
        return ClassSet.of(group, [parse_class(head, group)])
    except InvalidClass as e:
        raise MalformedDescriptor(e.message)
