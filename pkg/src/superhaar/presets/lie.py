"""Enveloping algebras of Lie superalgebras given by faithful matrices."""
from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError
from ..freealg import Element, Generator, Presentation
from ..hopf import HopfData, Tensor
from ..linalg import SparseMatrix, solve
from ..reps import Rep
from ..scalar import Scalar


def supercommutator(X: SparseMatrix, Y: SparseMatrix, px: int, py: int) -> SparseMatrix:
    xy = X @ Y
    yx = Y @ X
    return xy + yx if (px & py) else xy - yx


class MatrixLieSuperalgebra:
    """Basis elements (name, parity, matrix, rank) on a graded vector space."""

    def __init__(self, basis, space_parities):
        self.names = [b[0] for b in basis]
        self.parity = {b[0]: b[1] % 2 for b in basis}
        self.mats = {b[0]: (b[2] if isinstance(b[2], SparseMatrix) else SparseMatrix.from_dense(b[2]))
                     for b in basis}
        self.rank = {b[0]: b[3] for b in basis}
        self.space_parities = list(space_parities)
        self.dim = len(space_parities)
        self._structure = {}
        self._compute_structure()

    def _coords(self, M: SparseMatrix) -> dict:
        """Coordinates of M in the basis (DomainError if outside the span)."""
        if M.is_zero():
            return {}
        rows = {}
        for n in self.names:
            for (i, j), x in self.mats[n].entries():
                rows.setdefault((i, j), {})[n] = x
        target = dict(M.entries())
        keys = sorted(set(rows) | set(target))
        sol, _ = solve([rows.get(k, {}) for k in keys], [target.get(k, Scalar(0)) for k in keys], self.names)
        if sol is None:
            raise DomainError("matrices are not closed under the bracket")
        return sol

    def _compute_structure(self):
        for a in self.names:
            for b in self.names:
                br = supercommutator(self.mats[a], self.mats[b], self.parity[a], self.parity[b])
                self._structure[(a, b)] = self._coords(br)

    def bracket(self, a: str, b: str) -> dict:
        return self._structure[(a, b)]

    def even(self):
        return [n for n in self.names if self.parity[n] == 0]

    def odd(self):
        return [n for n in self.names if self.parity[n] == 1]

    def presentation(self, name="") -> Presentation:
        gens = [Generator(n, self.parity[n], self.rank[n]) for n in self.names]
        p = Presentation(gens, name=name)
        for a in self.names:
            for b in self.names:
                ia, ib = p.index[a], p.index[b]
                br = Element(p, {(p.index[c],): x for c, x in self.bracket(a, b).items()})
                if ia > ib:
                    sign = -1 if (self.parity[a] & self.parity[b]) else 1
                    rhs = Element(p, {(ib, ia): Scalar(sign)}) + br
                    p.add_rule((ia, ib), rhs)
                elif ia == ib and self.parity[a]:
                    p.add_rule((ia, ia), br.scale(Fraction(1, 2)))
        return p

    def primitive_hopf(self, p: Presentation) -> HopfData:
        delta, eps, S = {}, {}, {}
        for n in self.names:
            x = p.gen(n)
            delta[n] = Tensor.pure(p, x, 1) + Tensor.pure(p, 1, x)
            eps[n] = 0
            S[n] = -x
        return HopfData(p, delta, eps, S)

    def vector_rep(self, p: Presentation, labels=None, name="T") -> Rep:
        return Rep(p, self.space_parities, {n: self.mats[n] for n in self.names}, labels=labels, name=name)

    def element(self, p: Presentation, coords: dict) -> Element:
        return Element(p, {(p.index[n],): Scalar(x) for n, x in coords.items() if x})


def unit_matrix(n, i, j, c=1) -> SparseMatrix:
    return SparseMatrix.from_entries(n, n, {(i, j): c})


def pbw_count(n_even: int, n_odd: int, d: int) -> int:
    """Number of monomials of degree <= d in a graded symmetric algebra."""
    from math import comb
    total = 0
    for k in range(d + 1):
        for j in range(min(k, n_odd) + 1):
            total += comb(n_odd, j) * comb(n_even + k - j - 1, k - j) if k - j > 0 else comb(n_odd, j)
    return total
