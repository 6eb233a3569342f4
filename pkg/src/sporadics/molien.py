"""Molien coefficients via the symmetric-power character recurrence.

For a character chi of a (cover) table, the dimension of the degree-d
invariants of the dual representation is the inner product of the trivial
character with the character of Sym^d(V*).  The symmetric-power characters
are built classwise from the values chi(g^k), which only need the table's
prime power maps; everything stays in exact cyclotomic/rational arithmetic.
Taking the inner product over the full cover table makes the center act by a
character on each Sym^d, so non-equivariant degrees drop out automatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sporadics.chartab import CharacterTable
from sporadics.cyclo import Cyclotomic


class NonIntegerCoefficientError(ArithmeticError):
    """A Molien coefficient failed to reduce to a nonnegative integer."""


@dataclass(frozen=True)
class MolienProfile:
    table_name: str
    char_index: int
    char_degree: int
    max_degree: int
    coefficients: tuple[int, ...]  # m_0 .. m_D

    def to_obj(self) -> dict:
        return {
            "table": self.table_name,
            "char_index": self.char_index,
            "char_degree": self.char_degree,
            "max_degree": self.max_degree,
            "coefficients": list(self.coefficients),
        }

    def series_text(self) -> str:
        """Render as a truncated power series, zero terms suppressed."""
        return format_series(self.coefficients)


def format_series(coefficients) -> str:
    terms = []
    for d, m in enumerate(coefficients):
        if d == 0:
            terms.append(str(m))
            continue
        if m == 0:
            continue
        t = "t" if d == 1 else f"t^{d}"
        terms.append(t if m == 1 else f"{m}{t}")
    terms.append(f"O(t^{len(coefficients)})")
    return " + ".join(terms)


def dual_character(table: CharacterTable, char_index: int) -> tuple[Cyclotomic, ...]:
    """Values of the dual character: complex conjugate classwise."""
    return tuple(v.conjugate() for v in table.characters[char_index].values)


def _sym_column(table: CharacterTable, values, class_index: int, D: int) -> list[Cyclotomic]:
    """Characters of Sym^0..Sym^D at one class, for the class function `values`.

    Newton-style recurrence: d * s_d(g) = sum_{k=1..d} chi(g^k) * s_{d-k}(g).
    """
    pow_vals = [None] + [
        values[table.power_class(class_index, k)] for k in range(1, D + 1)
    ]
    col = [Cyclotomic.from_rational(1)]
    for d in range(1, D + 1):
        acc = Cyclotomic.from_rational(0)
        for k in range(1, d + 1):
            term = pow_vals[k] * col[d - k]
            acc = acc + term
        col.append(acc / Fraction(d))
    return col


def symmetric_power_values(table: CharacterTable, char_index: int, D: int):
    """Matrix of Sym^d character values, rows d = 0..D, columns the classes."""
    if D < 1:
        raise ValueError("degree limit must be >= 1")
    values = table.characters[char_index].values
    cols = [_sym_column(table, values, c, D) for c in range(len(table.classes))]
    return [[cols[c][d] for c in range(len(table.classes))] for d in range(D + 1)]


def molien_of_class_function(table: CharacterTable, values, D: int) -> list[int]:
    """Invariant dimensions of Sym^0..Sym^D for an explicit class function.

    The class function is the character of the representation itself (not its
    dual); dualize first if that is what you mean.
    """
    if D < 1:
        raise ValueError("degree limit must be >= 1")
    sizes = [c.size for c in table.classes]
    sums = [Cyclotomic.from_rational(0)] * (D + 1)
    for c in range(len(table.classes)):
        col = _sym_column(table, values, c, D)
        w = Fraction(sizes[c])
        for d in range(D + 1):
            sums[d] = sums[d] + col[d] * w
    coefficients = []
    for d, s in enumerate(sums):
        val = s / Fraction(table.order)
        if not val.is_rational():
            raise NonIntegerCoefficientError(
                f"{table.group_name}: m_{d} is irrational ({val!r})")
        q = val.as_rational()
        if q.denominator != 1 or q < 0:
            raise NonIntegerCoefficientError(
                f"{table.group_name}: m_{d} = {q} is not a nonnegative integer")
        coefficients.append(int(q))
    return coefficients


def molien_coefficients(table: CharacterTable, char_index: int, D: int) -> MolienProfile:
    """Molien coefficients m_0..m_D of the chosen character's dual."""
    coefficients = molien_of_class_function(table, dual_character(table, char_index), D)
    return MolienProfile(
        table_name=table.group_name,
        char_index=char_index,
        char_degree=table.characters[char_index].degree,
        max_degree=D,
        coefficients=tuple(coefficients),
    )
