"""Exact rank and kernel computations over the rationals and prime fields.

Nothing here ever touches floating point. Rational ranks are computed with
integer-preserving elimination (rows are rescaled by their content to keep
entries small); prime-field ranks reduce entries modulo ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Mapping


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % q for q in range(3, isqrt(p) + 1, 2))


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not a prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts ``Q``, ``QQ``, ``Fp:3``, ``F3``, ``GF3`` and ``Z3``."""
        t = text.strip()
        if t.upper() in ("Q", "QQ", "RATIONALS"):
            return cls(0)
        low = t.lower()
        for prefix in ("fp:", "gf:", "gf", "f", "z"):
            if low.startswith(prefix) and low[len(prefix):].isdigit():
                return cls(int(low[len(prefix):]))
        raise ValueError(f"unrecognised field {text!r}; use Q or Fp:<prime>")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
GF5 = FieldSpec(5)


@dataclass(frozen=True)
class SparseIntMatrix:
    rows: int
    cols: int
    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if v == 0:
                raise ValueError(f"explicit zero stored at ({r}, {c})")

    @classmethod
    def from_dense(cls, dense: Iterable[Iterable[int]]) -> "SparseIntMatrix":
        dense = [list(r) for r in dense]
        ncols = len(dense[0]) if dense else 0
        ent = {(i, j): v for i, row in enumerate(dense) for j, v in enumerate(row) if v}
        return cls(len(dense), ncols, ent)

    @classmethod
    def from_columns(cls, nrows: int, columns: list[Mapping[int, int]]) -> "SparseIntMatrix":
        ent = {(r, j): v for j, col in enumerate(columns) for r, v in col.items() if v}
        return cls(nrows, len(columns), ent)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def columns(self) -> list[dict[int, int]]:
        cols: list[dict[int, int]] = [{} for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return cols


def _row_dicts(m: SparseIntMatrix, p: int) -> list[dict[int, int]]:
    rows: list[dict[int, int]] = [{} for _ in range(m.rows)]
    for (r, c), v in m.entries.items():
        if p:
            v %= p
            if v:
                rows[r][c] = v
        else:
            rows[r][c] = v
    return [r for r in rows if r]


def _rank_gf2(rows: list[dict[int, int]]) -> int:
    # rows as python int bitsets; xor basis keyed by leading bit
    basis: dict[int, int] = {}
    for row in rows:
        x = 0
        for c in row:
            x |= 1 << c
        while x:
            top = x.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = x
                break
            x ^= b
    return len(basis)


def _eliminate(rows: list[dict[int, int]], p: int) -> int:
    """Sparse elimination with least-fill pivoting; returns the rank."""
    live = dict(enumerate(rows))
    col_rows: dict[int, set[int]] = {}
    for i, row in live.items():
        for c in row:
            col_rows.setdefault(c, set()).add(i)
    rank = 0
    while col_rows:
        # Markowitz-style choice: sparsest column, then its sparsest row
        c = min(col_rows, key=lambda k: (len(col_rows[k]), k))
        cand = col_rows.pop(c)
        piv = min(cand, key=lambda i: (abs(live[i][c]) != 1, len(live[i]), i))
        prow = live.pop(piv)
        for k in prow:
            if k != c:
                col_rows[k].discard(piv)
        a = prow[c]
        inv = pow(a, -1, p) if p else None
        for i in cand:
            if i == piv:
                continue
            row = live[i]
            b = row[c]
            if p:
                f = (b * inv) % p
                for k, v in prow.items():
                    nv = (row.get(k, 0) - f * v) % p
                    if nv:
                        if k not in row and k != c:
                            col_rows[k].add(i)
                        row[k] = nv
                    elif k in row:
                        del row[k]
                        if k != c:
                            col_rows[k].discard(i)
            else:
                # row <- a*row - b*prow, then divide out the content
                g = gcd(a, b)
                sa, sb = a // g, b // g
                for k in row:
                    row[k] *= sa
                for k, v in prow.items():
                    nv = row.get(k, 0) - sb * v
                    if nv:
                        if k not in row and k != c:
                            col_rows[k].add(i)
                        row[k] = nv
                    elif k in row:
                        del row[k]
                        if k != c:
                            col_rows[k].discard(i)
                content = 0
                for v in row.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                if content > 1:
                    for k in row:
                        row[k] //= content
            if not row:
                del live[i]
        rank += 1
        for k in [k for k, s in col_rows.items() if not s]:
            del col_rows[k]
    return rank


def rank(m: SparseIntMatrix, fld: FieldSpec = QQ) -> int:
    """Rank of an integer matrix with entries read in the given field."""
    p = fld.characteristic
    rows = _row_dicts(m, p)
    if not rows:
        return 0
    if p == 2:
        return _rank_gf2(rows)
    return _eliminate(rows, p)


def rank_of_columns(nrows: int, columns: list[Mapping[int, int]], fld: FieldSpec = QQ) -> int:
    return rank(SparseIntMatrix.from_columns(nrows, columns), fld)


def nullspace(m: SparseIntMatrix, fld: FieldSpec = QQ) -> list[dict[int, int]]:
    """A basis of the right kernel ``{x : m x = 0}`` as sparse integer vectors.

    Over the rationals each vector is scaled to coprime integer entries; over
    ``F_p`` entries are representatives in ``[0, p)``.
    """
    p = fld.characteristic
    rows = [dict(r) for r in _row_dicts(m, p)]
    if p == 0:
        rows = [{k: Fraction(v) for k, v in r.items()} for r in rows]
    # reduced row echelon form, column by column
    pivots: dict[int, dict] = {}
    for row in rows:
        for c, prow in pivots.items():
            b = row.get(c)
            if b:
                for k, v in prow.items():
                    nv = row.get(k, 0) - b * v
                    if p:
                        nv %= p
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        if not row:
            continue
        c = min(row)
        a = row[c]
        inv = pow(a, -1, p) if p else 1 / a
        row = {k: (v * inv) % p if p else v * inv for k, v in row.items()}
        for pc, prow in pivots.items():
            b = prow.get(c)
            if b:
                for k, v in row.items():
                    nv = prow.get(k, 0) - b * v
                    if p:
                        nv %= p
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        pivots[c] = row
    basis = []
    for free in range(m.cols):
        if free in pivots:
            continue
        vec = {free: 1}
        for c, prow in pivots.items():
            b = prow.get(free)
            if b:
                vec[c] = (-b) % p if p else -b
        if p == 0:
            den = lcm(*(Fraction(v).denominator for v in vec.values()))
            ivec = {k: int(Fraction(v) * den) for k, v in vec.items()}
            g = gcd(*ivec.values())
            vec = {k: v // g for k, v in ivec.items() if v}
        basis.append(vec)
    return basis
