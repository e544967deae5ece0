"""
常用有限群的乘法表產生器

所有表的第 0 個元素都是單位元。
"""
from itertools import permutations


def _table_from_elements(elements, compose):
    index = {e: i for i, e in enumerate(elements)}
    return [[index[compose(a, b)] for b in elements] for a in elements]


def _compose_perm(p, q):
    # (p*q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(len(q)))


def _parity(p):
    seen = set()
    sign = 0
    for start in range(len(p)):
        if start in seen:
            continue
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = p[i]
            length += 1
        sign += length - 1
    return sign % 2


def cyclic_table(n):
    """Z/n"""
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def dihedral_table(m):
    """階為 2m 的二面體群，元素 (r, s) 代表 x^r y^s"""
    elements = [(r, s) for s in (0, 1) for r in range(m)]

    def compose(a, b):
        r1, s1 = a
        r2, s2 = b
        r = (r1 + (-r2 if s1 else r2)) % m
        return (r, (s1 + s2) % 2)

    return _table_from_elements(elements, compose)


def symmetric_table(n):
    """S_n"""
    elements = sorted(permutations(range(n)))
    return _table_from_elements(elements, _compose_perm)


def alternating_table(n):
    """A_n"""
    elements = sorted(p for p in permutations(range(n)) if _parity(p) == 0)
    return _table_from_elements(elements, _compose_perm)


def product_table(rows_a, rows_b):
    """直積 A × B"""
    nb = len(rows_b)
    elements = [(a, b) for a in range(len(rows_a)) for b in range(nb)]
    return _table_from_elements(
        elements, lambda x, y: (rows_a[x[0]][y[0]], rows_b[x[1]][y[1]])
    )


STANDARD_TABLES = {
    'Z2': lambda: cyclic_table(2),
    'Z6': lambda: cyclic_table(6),
    'S3': lambda: symmetric_table(3),
    'D8': lambda: dihedral_table(4),
    'A4': lambda: alternating_table(4),
    'S4': lambda: symmetric_table(4),
}
