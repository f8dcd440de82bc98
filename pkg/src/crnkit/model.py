"""Reaction-network data model.

A network is a triple of species, complexes, and reactions.  A complex is a
formal nonnegative-integer combination of species (the empty combination is
the zero complex, written ``0``); a reaction is an ordered pair of distinct
complexes.  All types are immutable after construction.

Ordering is part of the contract: species, complexes, and reactions keep the
order in which they were given (for parsed networks, first-appearance /
source order), and every downstream computation indexes against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .linalg import RationalMatrix


class NetworkError(ValueError):
    """Structural problem in a reaction network (or in its DSL source)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(NetworkError):
    """A reaction whose reactant and product complexes coincide."""


class DuplicateReactionError(NetworkError):
    """The same ordered (reactant, product) complex pair appears twice."""


class DuplicateLabelError(NetworkError):
    """Two reactions carry the same label."""


class EmptyNetworkError(NetworkError):
    """A network with no reactions."""


@dataclass(frozen=True)
class Species:
    """A chemical species and its position in the network's species order."""

    name: str
    index: int

    def __post_init__(self) -> None:
        if not self.name:
            raise NetworkError("species name must be nonempty")
        if self.index < 0:
            raise NetworkError("species index must be nonnegative")


class Complex:
    """A nonnegative-integer combination of species.

    Stored sparsely as (species index, coefficient) pairs with coefficients
    >= 1; the empty combination is the zero complex.  Complexes compare and
    hash by value, which gives them set semantics within a network.
    """

    __slots__ = ("_terms",)

    def __init__(self, coefficients: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        terms = []
        for index, coeff in items:
            if not isinstance(index, int) or index < 0:
                raise NetworkError(f"invalid species index {index!r} in complex")
            if not isinstance(coeff, int) or coeff < 1:
                raise NetworkError(
                    f"stoichiometric coefficient for species {index} must be a positive integer"
                )
            terms.append((index, coeff))
        terms.sort()
        if len({i for i, _ in terms}) != len(terms):
            raise NetworkError("duplicate species index in complex")
        self._terms = tuple(terms)

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self._terms)

    def coefficient(self, species_index: int) -> int:
        for i, c in self._terms:
            if i == species_index:
                return c
        return 0

    def vector(self, species_count: int) -> tuple[int, ...]:
        v = [0] * species_count
        for i, c in self._terms:
            v[i] = c
        return tuple(v)

    def format(self, species_names: Iterable[str]) -> str:
        names = tuple(species_names)
        if not self._terms:
            return "0"
        parts = [
            names[i] if c == 1 else f"{c} {names[i]}"
            for i, c in self._terms
        ]
        return " + ".join(parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"Complex({dict(self._terms)!r})"


@dataclass(frozen=True)
class Reaction:
    """A directed reaction between two complex indices."""

    reactant: int
    product: int
    label: str | None = None


class Network:
    """An immutable chemical reaction network.

    Validates on construction: unique species names, unique complexes, every
    complex used by at least one reaction, no self-loop reactions, unique
    (reactant, product) pairs, and unique labels.  Reactions without an
    explicit label get the positional default ``R<k>`` (1-based).
    """

    __slots__ = ("_species", "_complexes", "_reactions", "_labels")

    def __init__(
        self,
        species: Iterable[Species],
        complexes: Iterable[Complex],
        reactions: Iterable[Reaction],
    ):
        self._species = tuple(species)
        self._complexes = tuple(complexes)
        self._reactions = tuple(reactions)
        self._labels = tuple(
            rx.label if rx.label is not None else f"R{i + 1}"
            for i, rx in enumerate(self._reactions)
        )
        self._validate()

    def _validate(self) -> None:
        if not self._reactions:
            raise EmptyNetworkError("network has no reactions")
        if not self._species:
            raise NetworkError("network has no species")
        names = [s.name for s in self._species]
        if len(set(names)) != len(names):
            raise NetworkError("species names must be unique")
        for pos, s in enumerate(self._species):
            if s.index != pos:
                raise NetworkError(
                    f"species {s.name!r} has index {s.index} but position {pos}"
                )
        if len(set(self._complexes)) != len(self._complexes):
            raise NetworkError("complexes must be unique within a network")
        m, n = len(self._species), len(self._complexes)
        for c in self._complexes:
            if any(i >= m for i in c.support):
                raise NetworkError("complex references a species index out of range")
        used: set[int] = set()
        seen_pairs: set[tuple[int, int]] = set()
        for rx in self._reactions:
            if not (0 <= rx.reactant < n and 0 <= rx.product < n):
                raise NetworkError("reaction references a complex index out of range")
            if rx.reactant == rx.product:
                raise SelfLoopError(
                    f"reaction {rx.label or ''} has identical reactant and product complexes"
                )
            pair = (rx.reactant, rx.product)
            if pair in seen_pairs:
                raise DuplicateReactionError(
                    f"duplicate reaction between complexes {rx.reactant} and {rx.product}"
                )
            seen_pairs.add(pair)
            used.add(rx.reactant)
            used.add(rx.product)
        if used != set(range(n)):
            missing = sorted(set(range(n)) - used)
            raise NetworkError(f"complexes {missing} are not used by any reaction")
        if len(set(self._labels)) != len(self._labels):
            dup = sorted({x for x in self._labels if self._labels.count(x) > 1})
            raise DuplicateLabelError(f"duplicate reaction labels: {', '.join(dup)}")

    @property
    def species(self) -> tuple[Species, ...]:
        return self._species

    @property
    def complexes(self) -> tuple[Complex, ...]:
        return self._complexes

    @property
    def reactions(self) -> tuple[Reaction, ...]:
        return self._reactions

    @property
    def species_count(self) -> int:
        return len(self._species)

    @property
    def complex_count(self) -> int:
        return len(self._complexes)

    @property
    def reaction_count(self) -> int:
        return len(self._reactions)

    @property
    def species_names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self._species)

    @property
    def labels(self) -> tuple[str, ...]:
        """Reaction labels in reaction order (positional defaults filled in)."""
        return self._labels

    def reaction_label(self, i: int) -> str:
        return self._labels[i]

    def label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self._labels)}

    def reaction_vector(self, i: int) -> tuple[int, ...]:
        """Product complex minus reactant complex, over the species order."""
        rx = self._reactions[i]
        a = self._complexes[rx.reactant].vector(self.species_count)
        b = self._complexes[rx.product].vector(self.species_count)
        return tuple(pb - pa for pa, pb in zip(a, b))

    def complex_string(self, complex_index: int) -> str:
        return self._complexes[complex_index].format(self.species_names)

    def reaction_string(self, i: int) -> str:
        rx = self._reactions[i]
        return (
            f"{self._labels[i]}: {self.complex_string(rx.reactant)}"
            f" -> {self.complex_string(rx.product)}"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return (
            self._species == other._species
            and self._complexes == other._complexes
            and self._reactions == other._reactions
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self._species, self._complexes, self._reactions))

    def __repr__(self) -> str:
        return (
            f"Network(species={self.species_count}, complexes={self.complex_count},"
            f" reactions={self.reaction_count})"
        )


def molecularity_matrix(net: Network) -> RationalMatrix:
    """Species x complexes matrix of stoichiometric coefficients."""
    return RationalMatrix(
        [
            [net.complexes[j].coefficient(i) for j in range(net.complex_count)]
            for i in range(net.species_count)
        ]
    )


def incidence_matrix(net: Network) -> RationalMatrix:
    """Complexes x reactions matrix: -1 at the reactant, +1 at the product."""
    n, r = net.complex_count, net.reaction_count
    rows = [[0] * r for _ in range(n)]
    for j, rx in enumerate(net.reactions):
        rows[rx.reactant][j] = -1
        rows[rx.product][j] = 1
    return RationalMatrix(rows)


def stoichiometric_matrix(net: Network) -> RationalMatrix:
    """Species x reactions matrix, the product of molecularity and incidence.

    Column j equals the reaction vector of reaction j (product complex minus
    reactant complex).
    """
    return molecularity_matrix(net) @ incidence_matrix(net)
