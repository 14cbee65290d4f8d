"""Type definitions for link diagrams and bracket polynomials."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import sympy

from platcalc.invariants.errors import InvalidDiagramError

DEFAULT_CROSSING_BUDGET: int = 24
"""Crossing count above which the bracket is refused unless the caller raises the budget."""

A = sympy.Symbol("A")
"""The variable of every bracket polynomial."""

Terms = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial in ``A``, stored as its canonical term list.

    Arithmetic goes through sympy; ``terms`` is the hashable view used for equality, ordering and text.

    Args:
        terms: ``(exponent, coefficient)`` pairs. Duplicates are summed, zero coefficients dropped
            and the result is stored with exponents descending.
    """

    terms: Terms = ()

    def __post_init__(self) -> None:
        collected: dict[int, int] = {}
        for exponent, coefficient in self.terms:
            collected[int(exponent)] = collected.get(int(exponent), 0) + int(coefficient)
        normalized = tuple(sorted(((e, c) for e, c in collected.items() if c), reverse=True))
        object.__setattr__(self, "terms", normalized)

    @classmethod
    def from_sympy(cls, expr: sympy.Expr) -> "LaurentPolynomial":
        """Expand ``expr`` and read off its terms.

        Raises:
            ValueError: If a term is not an integer multiple of an integer power of ``A``.
        """
        terms: list[tuple[int, int]] = []
        for term in sympy.Add.make_args(sympy.expand(expr)):
            coefficient, exponent = term.as_coeff_exponent(A)
            if not (coefficient.is_Integer and exponent.is_Integer):
                raise ValueError(f"{term} is not an integer multiple of a power of A")
            terms.append((int(exponent), int(coefficient)))
        return cls(tuple(terms))

    @classmethod
    def from_dict(cls, coefficients: Mapping[int, int]) -> "LaurentPolynomial":
        return cls(tuple(coefficients.items()))

    @classmethod
    def monomial(cls, coefficient: int = 1, exponent: int = 0) -> "LaurentPolynomial":
        return cls(((exponent, coefficient),))

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls.monomial(1, 0)

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls(())

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @cached_property
    def expr(self) -> sympy.Expr:
        return sympy.Add(*(sympy.Integer(c) * A ** sympy.Integer(e) for e, c in self.terms))

    def to_sympy(self) -> sympy.Expr:
        """Exact sympy expression in the symbol ``A``."""
        return self.expr

    def __add__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return LaurentPolynomial.from_sympy(self.expr + _coerce(other).expr)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial.from_sympy(-self.expr)

    def __sub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return LaurentPolynomial.from_sympy(self.expr - _coerce(other).expr)

    def __rsub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return LaurentPolynomial.from_sympy(_coerce(other).expr - self.expr)

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return LaurentPolynomial.from_sympy(self.expr * _coerce(other).expr)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPolynomial":
        """Non-negative powers of any polynomial; negative powers of monomials only."""
        if power < 0 and (len(self.terms) != 1 or abs(self.terms[0][1]) != 1):
            raise ValueError(f"negative power {power} of a non-unit polynomial {self.to_text()}")
        return LaurentPolynomial.from_sympy(self.expr**power)

    def to_text(self) -> str:
        """Text form with descending exponents, e.g. ``-A^4 - A^-4`` or ``3*A^2 + 1``."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for index, (exponent, coefficient) in enumerate(self.terms):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            elif magnitude == 1:
                body = f"A^{exponent}"
            else:
                body = f"{magnitude}*A^{exponent}"
            if index == 0:
                parts.append(f"-{body}" if coefficient < 0 else body)
            else:
                parts.append(f"{'-' if coefficient < 0 else '+'} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


LOOP_VALUE: LaurentPolynomial = LaurentPolynomial(((2, -1), (-2, -1)))
"""Value of one extra trivial loop, ``-A^2 - A^-2``."""

WRITHE_FACTOR: LaurentPolynomial = LaurentPolynomial.monomial(-1, 3)
"""``-A^3``; the bracket is normalized by its ``-writhe`` power."""


def _coerce(value: "LaurentPolynomial | int") -> LaurentPolynomial:
    if isinstance(value, LaurentPolynomial):
        return value
    return LaurentPolynomial.monomial(int(value), 0)


@dataclass(frozen=True)
class Crossing:
    """One crossing in planar-diagram convention.

    Edge labels are listed counter-clockwise; ``a -> c`` is the under-strand and ``b``/``d`` the
    over-strand.
    """

    a: int
    b: int
    c: int
    d: int

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def to_text(self) -> str:
        return f"X[{self.a},{self.b},{self.c},{self.d}]"


@dataclass(frozen=True)
class LinkDiagram:
    """A link diagram as crossings over numbered edges plus crossing-free loops.

    Args:
        crossings: Crossings in sweep order.
        free_loops: Number of components that meet no crossing.

    Raises:
        InvalidDiagramError: If an edge label is not used by exactly two crossing slots.
    """

    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.free_loops < 0:
            raise ValueError(f"free_loops must be >= 0, got {self.free_loops}")
        counts: dict[int, int] = {}
        for crossing in self.crossings:
            for label in crossing.labels:
                counts[label] = counts.get(label, 0) + 1
        for label, count in sorted(counts.items()):
            if count != 2:
                raise InvalidDiagramError(label=label, occurrences=count)

    @classmethod
    def from_codes(cls, codes: Iterable[tuple[int, int, int, int]], free_loops: int = 0) -> "LinkDiagram":
        return cls(tuple(Crossing(*code) for code in codes), free_loops)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @cached_property
    def strand_components(self) -> tuple[frozenset[int], ...]:
        """Edge-label sets of the components that meet a crossing, ordered by smallest label."""
        graph = nx.Graph()
        for crossing in self.crossings:
            graph.add_edge(crossing.a, crossing.c)
            graph.add_edge(crossing.b, crossing.d)
        return tuple(sorted((frozenset(part) for part in nx.connected_components(graph)), key=min))

    @property
    def component_count(self) -> int:
        return len(self.strand_components) + self.free_loops

    def component_of(self, label: int) -> int:
        for index, part in enumerate(self.strand_components):
            if label in part:
                return index
        raise KeyError(label)


@dataclass(frozen=True)
class OracleValue:
    """Orientation-free link invariant: component count plus the sorted multiset of normalized brackets.

    Args:
        components: Number of link components.
        polynomials: One normalized bracket per orientation class, sorted by terms.
    """

    components: int
    polynomials: tuple[LaurentPolynomial, ...]

    def __post_init__(self) -> None:
        if self.components < 1:
            raise ValueError(f"components must be >= 1, got {self.components}")
        object.__setattr__(self, "polynomials", tuple(sorted(self.polynomials, key=lambda poly: poly.terms)))

    def to_text(self) -> str:
        """``1`` for the unknot, else ``components=<k> {p1; p2; ...}``."""
        if self.components == 1:
            return self.polynomials[0].to_text()
        inner = "; ".join(poly.to_text() for poly in self.polynomials)
        return f"components={self.components} {{{inner}}}"
