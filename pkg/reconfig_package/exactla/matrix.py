"""
정확한 유리수 희소 행렬과 계수(rank)/영공간 계산

Notes:
    - 0 항목은 저장하지 않으며, 반복 순서는 항상 (row, col) 오름차순
    - rank는 행별 분모 최소공배수로 정수화한 뒤 희소 Bareiss 소거로 계산
"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from exactla.rational import RationalLike, common_denominator, to_rational
from utils.exceptions import StructuralError

Entry = Tuple[int, int]


class RationalMatrix:
    """불변 희소 유리수 행렬

    Attributes:
        rows (int): 행 개수
        cols (int): 열 개수
    """

    __slots__ = ('rows', 'cols', '_entries')

    def __init__(self, rows: int, cols: int,
                 entries: Optional[Mapping[Entry, RationalLike]] = None):
        if rows < 0 or cols < 0:
            raise StructuralError(f"행렬 크기가 음수입니다: {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        stored: Dict[Entry, Fraction] = {}
        for (r, c), value in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise StructuralError(f"행렬 인덱스 범위 초과: ({r}, {c}) / {rows}x{cols}")
            q = to_rational(value)
            if q != 0:
                stored[(r, c)] = q
        self._entries = dict(sorted(stored.items()))

    @classmethod
    def from_rows(cls, dense: Sequence[Sequence[RationalLike]],
                  cols: Optional[int] = None) -> 'RationalMatrix':
        """밀집 행 리스트로부터 생성 (행이 없으면 cols를 명시)"""
        width = cols if cols is not None else (len(dense[0]) if dense else 0)
        entries = {}
        for r, row in enumerate(dense):
            if len(row) != width:
                raise StructuralError(f"행 길이 불일치: {len(row)} != {width}")
            for c, value in enumerate(row):
                entries[(r, c)] = value
        return cls(len(dense), width, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]],
                     rows: Optional[int] = None) -> 'RationalMatrix':
        height = rows if rows is not None else (len(columns[0]) if columns else 0)
        entries = {}
        for c, column in enumerate(columns):
            if len(column) != height:
                raise StructuralError(f"열 길이 불일치: {len(column)} != {height}")
            for r, value in enumerate(column):
                entries[(r, c)] = value
        return cls(height, len(columns), entries)

    @classmethod
    def identity(cls, size: int) -> 'RationalMatrix':
        return cls(size, size, {(i, i): 1 for i in range(size)})

    def get(self, r: int, c: int) -> Fraction:
        return self._entries.get((r, c), Fraction(0))

    def items(self) -> Iterator[Tuple[Entry, Fraction]]:
        return iter(self._entries.items())

    def nonzero_count(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def to_rows(self) -> List[List[Fraction]]:
        dense = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), value in self._entries.items():
            dense[r][c] = value
        return dense

    def row_maps(self) -> List[Dict[int, Fraction]]:
        maps: List[Dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for (r, c), value in self._entries.items():
            maps[r][c] = value
        return maps

    def column(self, c: int) -> Tuple[Fraction, ...]:
        return tuple(self.get(r, c) for r in range(self.rows))

    def select_columns(self, columns: Sequence[int]) -> 'RationalMatrix':
        index = {c: i for i, c in enumerate(columns)}
        return RationalMatrix(self.rows, len(columns),
                              {(r, index[c]): v for (r, c), v in self._entries.items() if c in index})

    def transpose(self) -> 'RationalMatrix':
        return RationalMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    def matmul(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.cols != other.rows:
            raise StructuralError(f"행렬 곱 차원 불일치: {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        right_rows = other.row_maps()
        product: Dict[Entry, Fraction] = {}
        for (r, k), left in self._entries.items():
            for c, right in right_rows[k].items():
                product[(r, c)] = product.get((r, c), Fraction(0)) + left * right
        return RationalMatrix(self.rows, other.cols, product)

    def apply(self, vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """행렬-벡터 곱 A·x"""
        if len(vector) != self.cols:
            raise StructuralError(f"벡터 길이 불일치: {len(vector)} != {self.cols}")
        result = [Fraction(0)] * self.rows
        for (r, c), value in self._entries.items():
            result[r] += value * vector[c]
        return tuple(result)

    def apply_transpose(self, vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """yᵀA"""
        if len(vector) != self.rows:
            raise StructuralError(f"벡터 길이 불일치: {len(vector)} != {self.rows}")
        result = [Fraction(0)] * self.cols
        for (r, c), value in self._entries.items():
            result[c] += vector[r] * value
        return tuple(result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(self._entries.items())))

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols}, nnz={len(self._entries)})"


def _integer_rows(m: RationalMatrix) -> List[Dict[int, int]]:
    rows = []
    for row in m.row_maps():
        if not row:
            continue
        scale = common_denominator(row.values())
        rows.append({c: int(v * scale) for c, v in row.items()})
    return rows


def rank(m: RationalMatrix) -> int:
    """정확한 ℚ 위의 계수

    희소 Bareiss 소거: 각 단계의 나눗셈은 이전 피벗으로 나누어떨어짐이 보장됩니다.
    """
    rows = _integer_rows(m)
    result = 0
    previous = 1
    for col in range(m.cols):
        candidates = [i for i, row in enumerate(rows) if col in row]
        if not candidates:
            continue
        pivot_index = min(candidates, key=lambda i: (len(rows[i]), i))
        pivot_row = rows.pop(pivot_index)
        pivot = pivot_row[col]
        reduced = []
        for row in rows:
            factor = row.get(col, 0)
            if factor == 0:
                new_row = {j: (pivot * v) // previous for j, v in row.items()}
            else:
                new_row = {}
                for j in row.keys() | pivot_row.keys():
                    if j == col:
                        continue
                    value = (pivot * row.get(j, 0) - factor * pivot_row.get(j, 0)) // previous
                    if value:
                        new_row[j] = value
            if new_row:
                reduced.append(new_row)
        rows = reduced
        previous = pivot
        result += 1
        if not rows:
            break
    return result


def rref(m: RationalMatrix) -> Tuple[List[List[Fraction]], List[int]]:
    """기약 행사다리꼴과 피벗 열 목록"""
    rows = m.to_rows()
    pivots: List[int] = []
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inverse = 1 / rows[r][c]
        rows[r] = [v * inverse for v in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return rows[:r], pivots


def nullspace(m: RationalMatrix) -> List[Tuple[Fraction, ...]]:
    """영공간 기저 (자유 변수 오름차순, 각 기저 벡터는 자기 자유 변수 위치에 1)"""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * m.cols
        vector[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vector[pc] = -row[free]
        basis.append(tuple(vector))
    return basis


def dot(u: Iterable[Fraction], v: Iterable[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))
