"""Common container for the algebras used throughout the package."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..freealg import Element, Presentation, in_left_ideal_J, j_residue
from ..hopf import HopfData
from ..reps import MatrixPoly, Pairing, Rep, parse_matrix_word


@dataclass
class SupergroupPreset:
    name: str
    presentation: Presentation
    hopf: HopfData
    even_tail: list
    gamma: Element
    reps: dict
    quantum: bool = False
    elements: dict = field(default_factory=dict)
    words: dict = field(default_factory=dict)
    aliases: dict = field(default_factory=dict)
    exact_rules: bool = True
    notes: dict = field(default_factory=dict)
    _pairing: Pairing | None = field(default=None, repr=False)

    @property
    def p(self) -> Presentation:
        return self.presentation

    @property
    def vector_rep(self) -> Rep:
        return self.reps["T"]

    @property
    def dual_rep(self) -> Rep | None:
        return self.reps.get("Tb")

    @property
    def pairing(self) -> Pairing:
        if self._pairing is None:
            self._pairing = Pairing(self.reps, self.hopf)
        return self._pairing

    def parse(self, text: str) -> Element:
        names = dict(self.elements)
        names.setdefault("Gamma", self.gamma)
        return self.presentation.parse(text, names)

    def nf(self, x) -> Element:
        return self.presentation.normal_form(x)

    def word(self, text: str) -> MatrixPoly:
        """Matrix-word text; named words such as Theta may appear as atoms."""
        aliases = {k: (lambda args, w=w: _as_poly(w)) for k, w in self.words.items()}
        aliases.update(self.aliases)
        return parse_matrix_word(text, self.reps, aliases)

    def tail_counit(self, w):
        return self.hopf.counit_word(w)

    def in_J(self, x) -> bool:
        return in_left_ideal_J(x, self.presentation, self.even_tail, counit=self.tail_counit)

    def j_residue(self, x) -> Element:
        return j_residue(x, self.presentation, self.even_tail, counit=self.tail_counit)

    def generators(self):
        return [self.presentation.gen(g.name) for g in self.presentation.gens]


def _as_poly(w) -> MatrixPoly:
    return w if isinstance(w, MatrixPoly) else MatrixPoly({tuple(w): 1})
