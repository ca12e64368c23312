"""Sparse exact linear algebra over the scalar field.

Vectors are dicts {column: FieldElement}.  `Echelon` keeps rows in
semi-echelon form under a caller-supplied column priority (the highest
priority column of a row is its pivot), which is what lets the quotient code
pick which words become representatives.
"""

from __future__ import annotations

import heapq
from itertools import count

from .backend import kernel as _k
from .scalar import ONE, ZERO, as_field

_axpy = _k.vec_axpy


class Echelon:
    """Incremental row reduction with pivots chosen by `priority(col)`."""

    def __init__(self, priority):
        self.priority = priority
        self.pivots: dict = {}
        self._prio_cache: dict = {}
        self._reduced = True

    def _prio(self, col):
        p = self._prio_cache.get(col)
        if p is None:
            p = self.priority(col)
            self._prio_cache[col] = p
        return p

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: dict, stop=None) -> dict:
        """Eliminate pivot columns from `vec` (highest priority first).

        Returns the remainder; its leading column, if any, is not a pivot.
        If `stop(col)` is true for a leading non-pivot column, reduction stops
        there.
        """
        row = dict(vec)
        tie = count()
        heap = [(_neg(self._prio(c)), next(tie), c) for c in row]
        heapq.heapify(heap)
        seen = set(row)
        while heap:
            _, _, col = heapq.heappop(heap)
            seen.discard(col)
            coef = row.get(col)
            if coef is None:
                continue
            piv = self.pivots.get(col)
            if piv is None:
                if stop is None or stop(col):
                    break
                continue
            for c in piv:
                if c not in row and c not in seen:
                    seen.add(c)
                    heapq.heappush(heap, (_neg(self._prio(c)), next(tie), c))
            _axpy(row, -coef, piv)
        return row

    def leading(self, vec: dict):
        if not vec:
            return None
        return max(vec, key=self._prio)

    def insert(self, vec: dict):
        """Add a vector; returns its new pivot column or None if dependent."""
        row = self.reduce(vec)
        if not row:
            return None
        col = self.leading(row)
        inv = ONE / row[col]
        self.pivots[col] = {c: v * inv for c, v in row.items()}
        self._reduced = False
        return col

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec, stop=lambda col: True)

    def interreduce(self):
        """Bring the stored rows to reduced echelon form."""
        if self._reduced:
            return
        order = sorted(self.pivots, key=self._prio)
        done = set()
        for col in order:
            row = self.pivots[col]
            for c in [c for c in row if c != col and c in done]:
                coef = row.get(c)
                if coef:
                    _axpy(row, -coef, self.pivots[c])
            done.add(col)
        self._reduced = True

    def rows(self):
        self.interreduce()
        return self.pivots

    def normal_form(self, vec: dict) -> dict:
        """Fully reduced remainder of `vec` (only non-pivot columns)."""
        self.interreduce()
        out = {}
        for c, v in vec.items():
            piv = self.pivots.get(c)
            if piv is None:
                _axpy(out, v, {c: ONE})
            else:
                _axpy(out, -v, piv, skip=c)
        return out


class _Desc:
    """Heap key that reverses the order of an arbitrary comparable value."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return other.v < self.v

    def __eq__(self, other):
        return self.v == other.v


def _neg(p):
    return _Desc(p)


def _identity(col):
    return col


def rank(vectors, priority=_identity) -> int:
    """Rank of a list of sparse vectors (columns must be mutually comparable
    under `priority`)."""
    e = Echelon(priority=priority)
    return sum(1 for v in vectors if e.insert(v) is not None)


def nullspace(columns: list, priority=None, coord_priority=_identity) -> list:
    """Basis of {c : sum_i c_i columns[i] = 0}, as dicts {i: coef}.

    The basis is in reduced echelon form with respect to the column index
    (higher index first), so the choice is deterministic.  Coordinates of
    the vectors must be mutually comparable under `coord_priority`.
    """
    tag_prio = priority or _identity
    e = Echelon(priority=lambda col: (1, coord_priority(col[1])) if col[0] == "v"
                else (0, tag_prio(col[1])))
    kernel = Echelon(priority=lambda i: tag_prio(i))
    for i, vec in enumerate(columns):
        aug = {("v", c): v for c, v in vec.items()}
        aug[("t", i)] = ONE
        row = e.reduce(aug)
        lead = e.leading(row) if row else None
        if lead is not None and lead[0] == "v":
            e.insert(row)
        else:
            kernel.insert({c[1]: v for c, v in row.items()})
    return [dict(r) for _, r in sorted(kernel.rows().items(), key=lambda kv: tag_prio(kv[0]))]


def det_bareiss(matrix: list) -> object:
    """Fraction-free determinant; entries are FieldElements or ints."""
    n = len(matrix)
    if n == 0:
        return ONE
    m = [[as_field(x) for x in row] for row in matrix]
    sign = ONE
    prev = ONE
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
