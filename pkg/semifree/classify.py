"""
寬球面的同構判定與小維度分類

同構即逐次數換基底（區塊對角的 GL）把一條過濾鏈搬到另一條。
可行的 g（滿足 g N̄1_d ⊆ N̄2_d）構成線性空間，取其一般元素的行列式
判斷是否含有可逆元素。每個奇偶部分的總維度限制在 3 以內。
"""
import logging
from itertools import combinations, product

from sympy import Matrix, symbols, zeros

from errors import TooLarge, UsageError
from semifree import linalg
from semifree.wide_sphere import GradedPart, WideSphere, empty_sphere

# 設定日誌
logger = logging.getLogger(__name__)

# 每個奇偶部分可分類的最大總維度
MAX_CLASSIFY_DIM = 3


def _check_size(part):
    if part.width > MAX_CLASSIFY_DIM:
        raise TooLarge(f"奇偶部分總維度 {part.width} 超過上限 {MAX_CLASSIFY_DIM}")


def _annihilator(space):
    """{y : y·x = 0, x ∈ space}"""
    if linalg.dim(space) == 0:
        return [[1 if i == j else 0 for j in range(space.cols)] for i in range(space.cols)]
    return [list(v) for v in Matrix(space).nullspace()]


def parts_isomorphic(a, b):
    """兩個同奇偶部分是否同構"""
    a = a.normalized()
    b = b.normalized()
    if a.blocks != b.blocks:
        return False
    _check_size(a)
    width = a.width
    if width == 0:
        return True
    degrees = sorted(set(a.span_range()) | set(b.span_range()))
    for d in degrees:
        if linalg.dim(a.level(d)) != linalg.dim(b.level(d)):
            return False

    variables = []
    for d, m in a.blocks:
        start = a.offset(d)
        variables.extend((start + i, start + j) for i in range(m) for j in range(m))
    constraints = []
    for d in degrees:
        sources = linalg.rows_of(a.level(d))
        targets = _annihilator(b.level(d))
        for f in sources:
            for y in targets:
                constraints.append([y[i] * f[j] for i, j in variables])
    if constraints:
        solutions = Matrix(constraints).nullspace()
    else:
        solutions = [Matrix([1 if k == idx else 0 for k in range(len(variables))])
                     for idx in range(len(variables))]
    if not solutions:
        return False
    params = symbols(f"s0:{len(solutions)}")
    generic = zeros(width, width)
    for param, solution in zip(params, solutions):
        for idx, (i, j) in enumerate(variables):
            generic[i, j] += param * solution[idx]
    return generic.det().expand() != 0


def is_isomorphic(first, second):
    """
    W1 與 W2 是否同構

    Returns:
        bool
    """
    return all(parts_isomorphic(first.part(p), second.part(p)) for p in (0, 1))


def _rref_candidates(rank, width):
    """所有 0/1 項的 rank×width RREF 矩陣"""
    if rank == 0:
        yield linalg.zero_space(width)
        return
    for pivots in combinations(range(width), rank):
        free = [(r, j) for r, p in enumerate(pivots) for j in range(p + 1, width) if j not in pivots]
        for values in product((0, 1), repeat=len(free)):
            rows = [[0] * width for _ in range(rank)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, j), x in zip(free, values):
                rows[r][j] = x
            yield linalg.subspace(rows, width)



def _chains(width, dims):
    """
    維度依序為 dims（次數遞增）的所有巢狀 0/1 子空間鏈

    後一層必須包含於前一層。
    """
    if not dims:
        yield ()
        return
    for upper in _chains(width, dims[1:]):
        for space in _rref_candidates(dims[0], width):
            if upper and not linalg.contains(space, upper[0]):
                continue
            yield (space,) + upper


def _chain_key(part):
    return tuple(linalg.sort_key(level) for level in part.levels)


def _candidate_parts(template):
    """與 template 有相同區塊與維度輪廓的所有 0/1 候選"""
    dims = [linalg.dim(level) for level in template.levels]
    candidates = [
        GradedPart(template.parity, template.blocks, template.lo, template.hi, levels)
        for levels in _chains(template.width, dims)
    ]
    return sorted(candidates, key=_chain_key)


def canonical_part(part):
    """
    部分的標準形：與之同構、鍵值最小的 0/1 RREF 鏈

    找不到 0/1 代表時（連續模空間）回報 TooLarge。
    """
    part = part.normalized()
    if part.is_empty:
        return part
    _check_size(part)
    for candidate in _candidate_parts(part):
        if parts_isomorphic(candidate, part):
            return candidate
    raise TooLarge("此部分沒有 0/1 標準形（軌道有連續參數）")


def canonical_form(w):
    return WideSphere(canonical_part(w.even), canonical_part(w.odd))


def enumerate_classes(poly, parity=None):
    """
    列出 p_1 = p_T = p 的寬球面同構類

    Args:
        poly: LaurentPoly
        parity: 0、1 或 None（由 p 推斷）

    Returns:
        list of WideSphere（標準形）
    """
    exponents = [e for e, _ in poly.terms]
    parities = {e % 2 for e in exponents}
    if parity is None:
        if len(parities) > 1:
            raise UsageError("多項式同時含有奇數與偶數次項，請指定 --parity")
        parity = parities.pop() if parities else 0
    if any(e % 2 != parity % 2 for e in exponents):
        raise UsageError(f"多項式含有與奇偶性 {parity} 不符的次數")
    if poly.total() > MAX_CLASSIFY_DIM:
        raise TooLarge(f"係數總和 {poly.total()} 超過上限 {MAX_CLASSIFY_DIM}")
    if len(exponents) >= 3:
        raise TooLarge("三個以上不同次數時軌道有連續參數，不做分類")
    if not exponents:
        return [empty_sphere()]

    logger.info(f"開始列舉 p = {poly} 的寬球面同構類")
    blocks = tuple(poly.terms)
    lo, hi = min(exponents), max(exponents)
    dims = [sum(c for e, c in poly.terms if e >= d) for d in range(lo, hi + 1, 2)]
    width = poly.total()
    candidates = sorted(
        (GradedPart(parity % 2, blocks, lo, hi, levels) for levels in _chains(width, dims)),
        key=_chain_key,
    )
    representatives = []
    for candidate in candidates:
        if any(parts_isomorphic(candidate, kept) for kept in representatives):
            continue
        representatives.append(candidate)
    logger.info(f"共 {len(representatives)} 個同構類")
    return [empty_sphere().with_part(part) for part in representatives]
