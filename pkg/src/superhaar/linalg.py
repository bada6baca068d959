"""Sparse exact linear algebra over Scalar.

Vectors are dicts key -> Scalar with no zero entries. Keys may be any
hashable, orderable object (ints, tuples).
"""
from __future__ import annotations

import heapq

from .scalar import Scalar


def vadd(u: dict, v: dict, c=1) -> dict:
    """u + c*v as a new dict."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k)
        y = x * c if y is None else y + x * c
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vaxpy(u: dict, v: dict, c) -> None:
    """In place u += c*v."""
    for k, x in v.items():
        y = u.get(k)
        y = x * c if y is None else y + x * c
        if y:
            u[k] = y
        else:
            u.pop(k, None)


def vscale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


class Echelon:
    """Incrementally built row-echelon basis; each row's pivot is its
    smallest key and carries coefficient 1."""

    def __init__(self):
        self.rows: dict = {}  # pivot -> row
        self.tags: dict = {}  # pivot -> combination of inserted vectors

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict, track=None):
        """Return v minus its projection along the span; with track, also
        returns the combination of tags subtracted."""
        v = dict(v)
        comb = dict(track) if track is not None else None
        heap = [k for k in v if k in self.rows]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            c = v.get(k)
            if c is None:
                continue
            row = self.rows[k]
            for kk, x in row.items():
                y = v.get(kk)
                if y is None:
                    y = -(x * c)
                    if kk != k and kk in self.rows:
                        heapq.heappush(heap, kk)
                else:
                    y = y - x * c
                if y:
                    v[kk] = y
                else:
                    del v[kk]
            if comb is not None:
                vaxpy(comb, self.tags[k], -c)
        if comb is not None:
            return v, comb
        return v

    def add(self, v: dict, tag=None) -> bool:
        if tag is not None:
            r, comb = self.reduce(v, {tag: Scalar(1)})
        else:
            r, comb = self.reduce(v), None
        if not r:
            return False
        p = min(r)
        inv = r[p].inv()
        r = {k: x * inv for k, x in r.items()}
        self.rows[p] = r
        if comb is not None:
            self.tags[p] = vscale(comb, inv)
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def rref(rows: list) -> tuple[list, list]:
    """Reduced row echelon form. Returns (rows, pivots)."""
    ech = Echelon()
    for r in rows:
        ech.add(r)
    pivots = sorted(ech.rows)
    # back substitution, from the last pivot upwards
    red = {}
    for p in reversed(pivots):
        r = dict(ech.rows[p])
        for k in [k for k in r if k != p and k in red]:
            c = r.get(k)
            if c:
                vaxpy(r, red[k], -c)
        red[p] = r
    return [red[p] for p in pivots], pivots


def nullspace(rows: list, columns) -> list:
    """Basis of {x : sum_col row[col] x[col] = 0 for all rows}; columns is
    the ordered list of unknowns."""
    red, pivots = rref(rows)
    pset = set(pivots)
    basis = []
    for f in columns:
        if f in pset:
            continue
        v = {f: Scalar(1)}
        for p, r in zip(pivots, red):
            c = r.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def solve(rows: list, rhs: list, columns):
    """One solution x of rows.x = rhs (None if inconsistent) and the
    nullspace basis."""
    aug = "__rhs__"
    full = []
    for r, b in zip(rows, rhs):
        r = dict(r)
        if b:
            r[aug] = Scalar(b)
        full.append(r)
    order = {c: i for i, c in enumerate(columns)}
    order[aug] = len(columns)
    full = [{order[k]: x for k, x in r.items()} for r in full]
    red, pivots = rref(full)
    if order[aug] in pivots:
        return None, []
    x = {}
    for p, r in zip(pivots, red):
        b = r.get(order[aug])
        if b:
            x[columns[p]] = b
    null = nullspace([{k: v for k, v in r.items() if k != order[aug]} for r in red],
                     list(range(len(columns))))
    null = [{columns[k]: v for k, v in n.items()} for n in null]
    return x, null


class SparseMatrix:
    """Square or rectangular matrix stored by columns: col -> {row: Scalar}."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols=None):
        self.nrows, self.ncols = nrows, ncols
        self.cols = cols if cols is not None else {}

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, {i: {i: Scalar(1)} for i in range(n)})

    @classmethod
    def from_entries(cls, nrows, ncols, entries: dict):
        m = cls(nrows, ncols)
        for (i, j), x in entries.items():
            x = Scalar(x)
            if x:
                m.cols.setdefault(j, {})[i] = x
        return m

    @classmethod
    def from_dense(cls, rows):
        n = len(rows)
        k = len(rows[0]) if rows else 0
        return cls.from_entries(n, k, {(i, j): rows[i][j] for i in range(n) for j in range(k) if rows[i][j]})

    def entry(self, i, j) -> Scalar:
        return self.cols.get(j, {}).get(i, Scalar(0))

    def entries(self):
        for j, col in self.cols.items():
            for i, x in col.items():
                yield (i, j), x

    def apply(self, v: dict) -> dict:
        out = {}
        for j, c in v.items():
            col = self.cols.get(j)
            if col:
                vaxpy(out, col, c)
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        cols = {}
        for j, col in other.cols.items():
            r = self.apply(col)
            if r:
                cols[j] = r
        return SparseMatrix(self.nrows, other.ncols, cols)

    def __add__(self, other):
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, c in other.cols.items():
            r = vadd(cols.get(j, {}), c)
            if r:
                cols[j] = r
            else:
                cols.pop(j, None)
        return SparseMatrix(self.nrows, self.ncols, cols)

    def scale(self, c) -> "SparseMatrix":
        if not c:
            return SparseMatrix(self.nrows, self.ncols)
        return SparseMatrix(self.nrows, self.ncols, {j: vscale(col, c) for j, col in self.cols.items()})

    def __neg__(self):
        return self.scale(Scalar(-1))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.cols.values())

    def __eq__(self, other):
        return (self - other).is_zero()

    def transpose(self) -> "SparseMatrix":
        cols = {}
        for (i, j), x in self.entries():
            cols.setdefault(i, {})[j] = x
        return SparseMatrix(self.ncols, self.nrows, cols)

    def row_dicts(self) -> list:
        rows = [dict() for _ in range(self.nrows)]
        for (i, j), x in self.entries():
            rows[i][j] = x
        return rows

    def to_dense(self):
        return [[self.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={sum(len(c) for c in self.cols.values())})"
