"""
工具函數模組

命令列輸出共用的序列化：有理數字串、標準 JSON 與向量解析。
"""
import json
import logging
from fractions import Fraction

from errors import MalformedDescriptor

# 設定日誌
logger = logging.getLogger(__name__)


def to_fraction(value):
    """
    轉成 Fraction

    Args:
        value: int、Fraction、sympy Rational 或 "p/q" 字串

    Returns:
        Fraction
    """
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def format_rational(value):
    """有理數的標準字串 "p/q"（最簡、分母為正）"""
    value = to_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_vector(text):
    """
    解析逗號分隔的有理數向量，例如 "1,0,-1/2"

    Returns:
        list of Fraction
    """
    items = [item.strip() for item in (text or '').split(',') if item.strip()]
    try:
        return [Fraction(item) for item in items]
    except (ValueError, ZeroDivisionError):
        logger.warning(f"無法解析向量: {text!r}")
        raise MalformedDescriptor(f"向量項目必須是有理數: {text!r}")


def class_tokens(classes):
    return [k.token for k in classes]


def dump_json(document):
    """標準 JSON：鍵排序、固定分隔符，相同輸入輸出位元組相同"""
    return json.dumps(document, sort_keys=True, ensure_ascii=False, separators=(', ', ': '))
