"""
Poisson Brackets
The Lie-Poisson bracket on a symmetric algebra S(L), extended from {x, y} = [x, y]
on variables by the Leibniz rule
"""

import logging
from typing import Callable, Dict, Tuple

from src.liealg.algebra import LieAlgebra
from src.sympoly.poly import Poly, Variable
from src.utils.errors import UnknownVariable

logger = logging.getLogger(__name__)

VariableBracket = Callable[[Variable, Variable], Poly]


class PoissonAlgebra:
    """
    Poisson structure given by the bracket of two variables

    {f, g} = sum_v (df/dv) X_g(v) with X_g(v) = {v, g} = sum_w {v, w} dg/dw.
    Only variables that occur in f and g are visited.
    """

    def __init__(self, var_bracket: VariableBracket, name: str = "poisson"):
        self._var_bracket = var_bracket
        self.name = name
        self._cache: Dict[Tuple[Variable, Variable], Poly] = {}

    @classmethod
    def of_algebra(cls, L: LieAlgebra) -> "PoissonAlgebra":
        """Brackets of t-free variables through the structure constants of L"""

        def bracket(u: Variable, v: Variable) -> Poly:
            for w in (u, v):
                if w.t_exponent != 0 or not 0 <= w.base_index < L.dim:
                    raise UnknownVariable(f"{w} is not a basis element of {L.name}", witness=w)
            return Poly.linear(L.bracket_basis(u.base_index, v.base_index))

        return cls(bracket, name=L.name)

    def var_bracket(self, u: Variable, v: Variable) -> Poly:
        key = (u, v)
        if key not in self._cache:
            self._cache[key] = self._var_bracket(u, v)
        return self._cache[key]

    def hamiltonian(self, g: Poly, v: Variable, partials: Dict[Variable, Poly] = None) -> Poly:
        """X_g(v) = {v, g}"""
        result = Poly.zero()
        for w in g.variables():
            vw = self.var_bracket(v, w)
            if vw:
                dg = partials[w] if partials is not None else g.partial(w)
                result = result + vw * dg
        return result

    def bracket(self, f: Poly, g: Poly) -> Poly:
        if not f or not g:
            return Poly.zero()
        partials = {w: g.partial(w) for w in g.variables()}
        result = Poly.zero()
        for v in f.variables():
            xg = self.hamiltonian(g, v, partials)
            if xg:
                result = result + f.partial(v) * xg
        return result

    def is_central(self, f: Poly, actors) -> Tuple[bool, object]:
        """{f, x} == 0 for every actor variable; returns the first failing actor"""
        for x in actors:
            if self.bracket(f, Poly.of(x)):
                return False, x
        return True, None


def poisson_bracket(L: LieAlgebra, f: Poly, g: Poly) -> Poly:
    """{f, g} in S(L)"""
    return PoissonAlgebra.of_algebra(L).bracket(f, g)
