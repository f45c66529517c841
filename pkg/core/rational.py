"""
精确有理数解析与格式化

只接受三种字面量：整数 `7`、分数 `-3/4`、十进制小数 `0.5`。
小数按十进制精确转换（0.5 → 1/2），绝不经过二进制浮点。
"""

import re
from fractions import Fraction

_INT = re.compile(r"^[+-]?\d+$")
_RATIO = re.compile(r"^([+-]?\d+)/(\d+)$")
_DECIMAL = re.compile(r"^[+-]?(\d+\.\d*|\.\d+)$")


def parse_rational(text: str) -> Fraction:
    """解析有理数字面量，格式非法或分母为 0 时抛 ValueError"""
    token = text.strip()
    if _INT.match(token):
        return Fraction(int(token))
    m = _RATIO.match(token)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {token!r}")
        return Fraction(int(m.group(1)), den)
    if _DECIMAL.match(token):
        return Fraction(token)
    raise ValueError(f"malformed rational {token!r}")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
