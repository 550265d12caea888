"""The cycle index as a value: a sparse rational combination of cycle-type monomials."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Union

from symprod.errors import UnboundVariableError
from symprod.exactnum import Scalar
from symprod.permgroups import CycleType

Assignment = Union[Mapping[int, Scalar], Sequence[Scalar]]


class CycleIndexPolynomial:
    """``sum c_a x1^a1 x2^a2 ... xm^am`` over cycle types ``a`` of ``m``.

    Terms with zero coefficient are dropped; iteration follows the canonical
    order (multiplicity vectors, lexicographically descending), which is the
    order used for rendering and JSON.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[CycleType, Scalar]):
        clean = {}
        for ct, c in terms.items():
            if len(ct.multiplicities) != degree or ct.degree != degree:
                raise ValueError(f"cycle type {ct.multiplicities} is not a partition of {degree}")
            c = Fraction(c)
            if c:
                clean[ct] = c
        self.degree = degree
        self._terms = {ct: clean[ct] for ct in sorted(clean, key=CycleType.sort_key)}

    @property
    def terms(self) -> dict[CycleType, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[CycleType, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, ct: CycleType) -> Fraction:
        return self._terms.get(ct, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleIndexPolynomial):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self._terms.items())))

    def evaluate(self, assignment: Assignment) -> Fraction:
        """Substitute rationals for the variables; ``assignment[k]`` is ``x_k``.

        A sequence is read as ``(x1, x2, ...)``.  Only variables that occur
        with positive exponent need a value.
        """
        if not isinstance(assignment, Mapping):
            assignment = {k: v for k, v in enumerate(assignment, start=1)}
        total = Fraction(0)
        for ct, c in self._terms.items():
            value = c
            for k, a in enumerate(ct.multiplicities, start=1):
                if not a:
                    continue
                try:
                    x = assignment[k]
                except KeyError:
                    raise UnboundVariableError(f"no value for x{k}") from None
                value *= Fraction(x) ** a
            total += value
        return total

    def evaluate_alternating(self, odd_value: Scalar, even_value: Scalar) -> Fraction:
        """Evaluate at ``x_k = odd_value`` (k odd) and ``x_k = even_value`` (k even)."""
        odd_value, even_value = Fraction(odd_value), Fraction(even_value)
        total = Fraction(0)
        for ct, c in self._terms.items():
            n_odd = sum(ct.multiplicities[0::2])
            n_even = sum(ct.multiplicities[1::2])
            total += c * odd_value ** n_odd * even_value ** n_even
        return total

    def coefficient_sum(self) -> Fraction:
        """Value at ``x1 = x2 = ... = 1``; equals 1 for any group average."""
        return sum(self._terms.values(), Fraction(0))

    def render(self) -> str:
        """Text form such as ``1/2 x1^2 + 1/2 x2``; unit coefficients are omitted."""
        if not self._terms:
            return "0"
        pieces = []
        for ct, c in self._terms.items():
            mono = " ".join(
                f"x{k}" if a == 1 else f"x{k}^{a}"
                for k, a in enumerate(ct.multiplicities, start=1) if a
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag} {mono}" if mono else str(mag))
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = render

    def __repr__(self) -> str:
        return f"CycleIndexPolynomial({self.degree}, {self.render()!r})"

    def to_json_terms(self) -> list[dict]:
        return [
            {"cycleType": list(ct.multiplicities), "coefficient": format_rational(c)}
            for ct, c in self._terms.items()
        ]

    @classmethod
    def from_json_terms(cls, degree: int, terms: Sequence[Mapping]) -> CycleIndexPolynomial:
        return cls(degree, {
            CycleType(tuple(t["cycleType"])): parse_rational(t["coefficient"])
            for t in terms
        })


def format_rational(q: Fraction) -> str:
    """Always ``p/q``, including integers (``3/1``) so the shape is fixed."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
