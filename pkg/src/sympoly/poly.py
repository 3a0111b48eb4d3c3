"""
Sparse Polynomials
Exact multivariate polynomials over Q(zeta_M) in variables indexed by Lie algebra
basis elements, optionally carrying a power of t. These model elements of the
symmetric algebras S(q), S(q^{+n}) and S(q[t, t^-1]).
"""

from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from src.scalars.cyclo import CycloScalar, as_scalar
from src.utils.linalg import Matrix


class Variable(NamedTuple):
    """Basis element `base_index` times t^t_exponent"""

    base_index: int
    t_exponent: int = 0


Monomial = Tuple[Tuple[Variable, int], ...]


def var_key(v: Variable) -> Tuple[int, int]:
    return (v.t_exponent, v.base_index)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    powers = dict(a)
    for v, e in b:
        powers[v] = powers.get(v, 0) + e
    return tuple(sorted(powers.items(), key=lambda item: var_key(item[0])))


def mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def mono_key(mono: Monomial):
    """Graded-lex key on (t_exponent, base_index)"""
    return (mono_degree(mono), tuple((var_key(v), e) for v, e in mono))


class Poly:
    """
    Immutable sparse polynomial: monomial -> nonzero CycloScalar

    Zero is the empty term map, so equality with zero is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, CycloScalar]] = None):
        self.terms: Dict[Monomial, CycloScalar] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, CycloScalar]) -> "Poly":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls) -> "Poly":
        return cls._wrap({})

    @classmethod
    def const(cls, value) -> "Poly":
        c = as_scalar(value)
        return cls._wrap({(): c} if c else {})

    @classmethod
    def var(cls, base_index: int, t_exponent: int = 0, coeff=1) -> "Poly":
        c = as_scalar(coeff)
        return cls._wrap({((Variable(base_index, t_exponent), 1),): c} if c else {})

    @classmethod
    def of(cls, v: Variable, coeff=1) -> "Poly":
        return cls.var(v.base_index, v.t_exponent, coeff)

    @classmethod
    def linear(cls, vec: Dict[int, CycloScalar], t_exponent: int = 0) -> "Poly":
        """sum_k vec[k] x_k t^t_exponent"""
        return cls._wrap({((Variable(k, t_exponent), 1),): c for k, c in vec.items() if c})

    # ------------------------------------------------------------------
    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def monomials(self) -> List[Monomial]:
        return sorted(self.terms, key=mono_key)

    def items(self) -> List[Tuple[Monomial, CycloScalar]]:
        return [(m, self.terms[m]) for m in self.monomials()]

    def coefficient(self, mono: Monomial) -> CycloScalar:
        return self.terms.get(mono, CycloScalar.zero())

    def variables(self) -> List[Variable]:
        found = {v for mono in self.terms for v, _ in mono}
        return sorted(found, key=var_key)

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self.terms}) <= 1

    def t_range(self) -> Tuple[int, int]:
        exps = [v.t_exponent for v in self.variables()]
        return (min(exps), max(exps)) if exps else (0, 0)

    def filter(self, keep: Callable[[Monomial], bool]) -> "Poly":
        return Poly._wrap({m: c for m, c in self.terms.items() if keep(m)})

    # ------------------------------------------------------------------
    # ring operations

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if not other.terms:
            return self
        terms = dict(self.terms)
        for m, c in other.terms.items():
            total = terms[m] + c if m in terms else c
            if total:
                terms[m] = total
            else:
                terms.pop(m, None)
        return Poly._wrap(terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) + (-self)

    def scale(self, value) -> "Poly":
        c = as_scalar(value)
        if not c:
            return Poly.zero()
        return Poly._wrap({m: x * c for m, x in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except (TypeError, ValueError):
                return NotImplemented
        terms: Dict[Monomial, CycloScalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                total = terms[m] + c1 * c2 if m in terms else c1 * c2
                if total:
                    terms[m] = total
                else:
                    terms.pop(m)
        return Poly._wrap(terms)

    def __rmul__(self, other) -> "Poly":
        return self.__mul__(other)

    def __truediv__(self, value) -> "Poly":
        return self.scale(as_scalar(value).inverse())

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except (TypeError, ValueError):
                return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[m] == other.terms[m] for m in self.terms)

    __hash__ = None

    def partial(self, v: Variable) -> "Poly":
        """Formal partial derivative d/dv"""
        terms: Dict[Monomial, CycloScalar] = {}
        for mono, c in self.terms.items():
            for pos, (w, e) in enumerate(mono):
                if w == v:
                    rest = mono[:pos] + (((w, e - 1),) if e > 1 else ()) + mono[pos + 1:]
                    terms[rest] = c * e
                    break
        return Poly._wrap(terms)

    # ------------------------------------------------------------------
    # substitutions

    def substitute(self, images: Callable[[Variable], Optional["Poly"]]) -> "Poly":
        """
        Replace each variable v by images(v); variables mapped to None stay as they are

        This is the algebra map S(V) -> S(W) extending a map on variables.
        """
        cache: Dict[Tuple[Variable, int], Poly] = {}

        def power(v: Variable, e: int) -> Poly:
            key = (v, e)
            if key not in cache:
                image = images(v)
                base = Poly.of(v) if image is None else image
                cache[key] = base if e == 1 else power(v, e - 1) * base
            return cache[key]

        result = Poly.zero()
        for mono, c in self.terms.items():
            term = Poly.const(c)
            for v, e in mono:
                term = term * power(v, e)
                if not term:
                    break
            result = result + term
        return result

    def rename(self, fn: Callable[[Variable], Variable]) -> "Poly":
        """Apply a map on variables monomial by monomial; colliding monomials merge"""
        terms: Dict[Monomial, CycloScalar] = {}
        for mono, c in self.terms.items():
            powers: Dict[Variable, int] = {}
            for v, e in mono:
                w = fn(v)
                powers[w] = powers.get(w, 0) + e
            new = tuple(sorted(powers.items(), key=lambda item: var_key(item[0])))
            total = terms[new] + c if new in terms else c
            if total:
                terms[new] = total
            else:
                terms.pop(new)
        return Poly._wrap(terms)

    def evaluate(self, point: Callable[[Variable], CycloScalar]) -> CycloScalar:
        total = CycloScalar.zero()
        for mono, c in self.terms.items():
            value = c
            for v, e in mono:
                value = value * (point(v) ** e)
            total = total + value
        return total

    # ------------------------------------------------------------------
    # rendering

    def to_text(self, labels: Optional[Sequence[str]] = None) -> str:
        """`coef * label[t^k]^e * ...` terms joined by ` + ` in canonical order; zero is "0" """
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.items():
            factors = [] if (c == 1 and mono) else [c.to_text()]
            for v, e in mono:
                name = labels[v.base_index] if labels is not None else f"x{v.base_index}"
                if v.t_exponent:
                    name = f"{name}[t^{v.t_exponent}]"
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def to_json(self, labels: Optional[Sequence[str]] = None) -> List[dict]:
        out = []
        for mono, c in self.items():
            out.append(
                {
                    "coeff": c.to_json(),
                    "monomial": [
                        {
                            "base": labels[v.base_index] if labels is not None else v.base_index,
                            "t": v.t_exponent,
                            "exp": e,
                        }
                        for v, e in mono
                    ],
                }
            )
        return out

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"


def poly_sum(polys: Iterable[Poly]) -> Poly:
    total = Poly.zero()
    for p in polys:
        total = total + p
    return total


def linear_images(matrix: Matrix) -> Callable[[Variable], Poly]:
    """
    Images of variables under a linear map on the base algebra

    Variable(j, k) goes to sum_i matrix[i][j] Variable(i, k); the t-power is kept.
    """
    columns: Dict[int, Dict[int, CycloScalar]] = {}

    def image(v: Variable) -> Poly:
        if v.base_index not in columns:
            columns[v.base_index] = {i: row[v.base_index] for i, row in enumerate(matrix) if row[v.base_index]}
        return Poly.linear(columns[v.base_index], v.t_exponent)

    return image


def apply_linear(F: Poly, matrix: Matrix) -> Poly:
    """Extend a linear map on the base algebra to the algebra map on polynomials"""
    return F.substitute(linear_images(matrix))
