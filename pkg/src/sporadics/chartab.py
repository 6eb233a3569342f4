"""Character tables of finite groups: data model, ingestion, validation.

Tables arrive as JSON files exported from a character table library (format
under ``to_obj``/``ingest_table``).  Ingestion is strict: a table that fails
any structural invariant (class sizes, identity class, power-map order
arithmetic, row orthogonality) is rejected with the violated invariant named.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from sporadics.cyclo import Cyclotomic, NotRationalError


class ParseError(ValueError):
    """Malformed table file (bad JSON or missing/ill-typed fields)."""


class ValidationError(ValueError):
    """Structurally parseable table violating a named invariant."""


class MissingPowerMapError(KeyError):
    """A required prime power map is absent; ingestion should have caught it."""


@lru_cache(maxsize=None)
def _factorize(k: int) -> tuple[int, ...]:
    """Prime factors of k with multiplicity, ascending."""
    out = []
    d = 2
    while d * d <= k:
        while k % d == 0:
            out.append(d)
            k //= d
        d += 1
    if k > 1:
        out.append(k)
    return tuple(out)


@dataclass(frozen=True)
class ConjugacyClass:
    name: str
    size: int
    element_order: int
    power_maps: dict[int, int]  # prime -> class index of g^p


@dataclass(frozen=True)
class Character:
    name: str
    values: tuple[Cyclotomic, ...]

    @property
    def degree(self) -> int:
        return int(self.values[0].as_rational())


class CharacterTable:
    """Immutable validated character table of a finite group or cover a.G."""

    def __init__(
        self,
        group_name: str,
        order: int,
        classes: list[ConjugacyClass],
        characters: list[Character],
        cover_of: tuple[str, int] | None = None,
    ):
        self.group_name = group_name
        self.order = order
        self.classes = tuple(classes)
        self.characters = tuple(characters)
        self.cover_of = cover_of
        self._validate()

    # -- validation ----------------------------------------------------------

    def _validate(self) -> None:
        if self.order < 1:
            raise ValidationError(f"{self.group_name}: order {self.order} not positive")
        if not self.classes:
            raise ValidationError(f"{self.group_name}: no conjugacy classes")
        ident = self.classes[0]
        if ident.size != 1 or ident.element_order != 1:
            raise ValidationError(
                f"{self.group_name}: class 0 must be the identity class "
                f"(got size {ident.size}, order {ident.element_order})")
        total = sum(c.size for c in self.classes)
        if total != self.order:
            raise ValidationError(
                f"{self.group_name}: class sizes sum {total} != {self.order}")
        exponent = 1
        for c in self.classes:
            exponent = exponent * c.element_order // gcd(exponent, c.element_order)
        required = set(_factorize(exponent))
        for i, c in enumerate(self.classes):
            if c.size < 1 or self.order % c.size:
                raise ValidationError(
                    f"{self.group_name}: class {c.name} size {c.size} does not divide order")
            missing = required - set(c.power_maps)
            if missing:
                raise ValidationError(
                    f"{self.group_name}: class {c.name} lacks power maps for primes {sorted(missing)}")
            for p, j in c.power_maps.items():
                if not (0 <= j < len(self.classes)):
                    raise ValidationError(
                        f"{self.group_name}: class {c.name} power map {p} -> {j} out of range")
                want = c.element_order // gcd(c.element_order, p)
                got = self.classes[j].element_order
                if got != want:
                    raise ValidationError(
                        f"{self.group_name}: power map p={p} on {c.name} lands on order "
                        f"{got}, expected {want}")
            if i == 0:
                for p, j in c.power_maps.items():
                    if j != 0:
                        raise ValidationError(
                            f"{self.group_name}: identity class power map p={p} not identity")
        for chi in self.characters:
            if len(chi.values) != len(self.classes):
                raise ValidationError(
                    f"{self.group_name}: character {chi.name} has {len(chi.values)} values "
                    f"for {len(self.classes)} classes")
            v0 = chi.values[0]
            if not v0.is_rational() or v0.as_rational().denominator != 1 \
                    or v0.as_rational() <= 0:
                raise ValidationError(
                    f"{self.group_name}: character {chi.name} degree {v0!r} "
                    f"is not a positive integer")
        for i, chi in enumerate(self.characters):
            for j in range(i, len(self.characters)):
                psi = self.characters[j]
                try:
                    ip = self.inner_product(chi.values, psi.values)
                except NotRationalError as exc:
                    raise ValidationError(
                        f"{self.group_name}: inner product ({chi.name}, {psi.name}) "
                        f"is irrational: {exc}") from exc
                expected = Fraction(1) if i == j else Fraction(0)
                if ip != expected:
                    raise ValidationError(
                        f"{self.group_name}: orthogonality failure at pair "
                        f"({chi.name}, {psi.name}): <,> = {ip}, expected {expected}")

    # -- operations ----------------------------------------------------------

    def power_class(self, class_index: int, k: int) -> int:
        """Class of g^k for g in the given class, via stored prime power maps."""
        c = self.classes[class_index]
        k %= c.element_order
        if k == 0:
            return 0
        idx = class_index
        for p in _factorize(k):
            pm = self.classes[idx].power_maps
            if p not in pm:
                raise MissingPowerMapError(
                    f"{self.group_name}: class {self.classes[idx].name} has no power map "
                    f"for prime {p}")
            idx = pm[p]
        return idx

    def char_value_at_power(self, char_index: int, class_index: int, k: int) -> Cyclotomic:
        return self.characters[char_index].values[self.power_class(class_index, k)]

    def inner_product(self, f, g) -> Fraction:
        """Exact <f, g> = (1/|G|) sum over classes of |class| * f * conj(g)."""
        acc = Cyclotomic.from_rational(0)
        for c, fv, gv in zip(self.classes, f, g):
            acc = acc + fv * gv.conjugate() * Fraction(c.size)
        return (acc / Fraction(self.order)).as_rational()

    def first_character_of_degree(self, degree: int) -> int:
        """Lowest-index character of the given degree (the table's order is
        the library export order, so this realizes the first-character rule)."""
        for i, chi in enumerate(self.characters):
            if chi.degree == degree:
                return i
        raise ValidationError(
            f"{self.group_name}: no character of degree {degree}")

    @property
    def trivial_values(self) -> tuple[Cyclotomic, ...]:
        one = Cyclotomic.from_rational(1)
        return tuple(one for _ in self.classes)

    def __repr__(self) -> str:
        return (f"CharacterTable({self.group_name}, order={self.order}, "
                f"{len(self.classes)} classes, {len(self.characters)} characters)")

    # -- serialization -------------------------------------------------------

    def to_obj(self) -> dict:
        obj: dict = {
            "group": self.group_name,
            "order": str(self.order),
        }
        if self.cover_of is not None:
            obj["cover_of"] = {"base": self.cover_of[0], "multiplier": self.cover_of[1]}
        obj["classes"] = [
            {
                "name": c.name,
                "size": str(c.size),
                "order": c.element_order,
                "powermaps": {str(p): j for p, j in sorted(c.power_maps.items())},
            }
            for c in self.classes
        ]
        obj["characters"] = [
            {"name": chi.name, "values": [v.to_obj() for v in chi.values]}
            for chi in self.characters
        ]
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=1)


def table_from_obj(obj: dict) -> CharacterTable:
    try:
        group = obj["group"]
        order = int(obj["order"])
        cover_of = None
        if "cover_of" in obj and obj["cover_of"] is not None:
            cover_of = (obj["cover_of"]["base"], int(obj["cover_of"]["multiplier"]))
        classes = []
        for c in obj["classes"]:
            classes.append(ConjugacyClass(
                name=c["name"],
                size=int(c["size"]),
                element_order=int(c["order"]),
                power_maps={int(p): int(j) for p, j in c["powermaps"].items()},
            ))
        characters = []
        for ch in obj["characters"]:
            characters.append(Character(
                name=ch["name"],
                values=tuple(Cyclotomic.from_obj(v) for v in ch["values"]),
            ))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad table structure: {exc}") from exc
    return CharacterTable(group, order, classes, characters, cover_of)


def ingest_table(data: bytes | str) -> CharacterTable:
    """Parse and fully validate a character-table file."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed table file at byte offset {exc.pos}: {exc.msg}") from exc
    return table_from_obj(obj)
