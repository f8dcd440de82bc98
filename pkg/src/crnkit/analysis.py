"""Structural network analysis and pointwise kinetics.

Covers the graph-theoretic network numbers (linkage classes, strong and
terminal strong linkage classes, rank, deficiency), weak reversibility,
structural deficiency-zero / deficiency-one theorem checks, subnetwork
extraction, and evaluation of the species formation rate function for
mass-action and power-law kinetics at a given positive point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .linalg import rank, rank_of_rows
from .model import (
    Complex,
    Network,
    NetworkError,
    Reaction,
    Species,
    stoichiometric_matrix,
)


class EmptySubsetError(ValueError):
    """Subnetwork extraction was given no reactions."""


class DimensionError(ValueError):
    """Kinetics or point dimensions do not match the network."""


class NonPositivePointError(ValueError):
    """Kinetics evaluation needs a strictly positive concentration vector."""


@dataclass(frozen=True)
class NetworkNumbers:
    """The structural summary of a network.

    Invariants: deficiency = complexes - linkage classes - rank >= 0, and
    the network is weakly reversible exactly when every linkage class is a
    single strong linkage class.
    """

    species_count: int
    complex_count: int
    reaction_count: int
    irreversible_reaction_count: int
    linkage_class_count: int
    strong_linkage_class_count: int
    terminal_strong_linkage_class_count: int
    rank: int
    deficiency: int
    weakly_reversible: bool


CONCLUSION_NOT_APPLICABLE = "not-applicable"
CONCLUSION_NO_POSITIVE_STEADY_STATE = "no-positive-steady-state"
CONCLUSION_AT_MOST_ONE = "at-most-one-steady-state-per-class"
CONCLUSION_EXACTLY_ONE = "exactly-one-per-class"


@dataclass(frozen=True)
class DeficiencyVerdict:
    """Outcome of a structural deficiency-theorem check.

    ``conditions`` records each hypothesis with whether it holds; the
    ``conclusion`` is one of the CONCLUSION_* constants and differs from
    not-applicable only when every theorem precondition is satisfied.
    ``statement`` is a human-readable sentence for reports.
    """

    theorem: str  # "deficiency-zero" | "deficiency-one"
    applicable: bool
    conditions: tuple[tuple[str, bool], ...]
    conclusion: str
    statement: str


def _undirected_components(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[int, ...]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])


def _tarjan_sccs(n: int, adjacency: list[list[int]]) -> list[tuple[int, ...]]:
    index: list[int | None] = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    sccs: list[tuple[int, ...]] = []
    counter = 0
    for root in range(n):
        if index[root] is not None:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, edge_pos = work.pop()
            if edge_pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            for i in range(edge_pos, len(adjacency[v])):
                w = adjacency[v][i]
                if index[w] is None:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])  # type: ignore[type-var]
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(tuple(sorted(comp)))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return sorted(sccs, key=lambda c: c[0])


def _directed_adjacency(net: Network) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(net.complex_count)]
    for rx in net.reactions:
        adj[rx.reactant].append(rx.product)
    return adj


def linkage_classes(net: Network) -> list[tuple[int, ...]]:
    """Connected components of the undirected graph on complexes."""
    edges = [(rx.reactant, rx.product) for rx in net.reactions]
    return _undirected_components(net.complex_count, edges)


def strong_linkage_classes(net: Network) -> list[tuple[int, ...]]:
    """Strongly connected components of the directed graph on complexes."""
    return _tarjan_sccs(net.complex_count, _directed_adjacency(net))


def terminal_strong_linkage_classes(net: Network) -> list[tuple[int, ...]]:
    """Strong linkage classes with no reaction leaving them."""
    sccs = strong_linkage_classes(net)
    scc_of: dict[int, int] = {c: k for k, scc in enumerate(sccs) for c in scc}
    terminal = [True] * len(sccs)
    for rx in net.reactions:
        if scc_of[rx.reactant] != scc_of[rx.product]:
            terminal[scc_of[rx.reactant]] = False
    return [scc for k, scc in enumerate(sccs) if terminal[k]]


def _irreversible_count(net: Network) -> int:
    pairs = {(rx.reactant, rx.product) for rx in net.reactions}
    return sum(1 for rx in net.reactions if (rx.product, rx.reactant) not in pairs)


def network_numbers(net: Network) -> NetworkNumbers:
    """Compute the full structural summary of a network."""
    l = len(linkage_classes(net))
    sl = len(strong_linkage_classes(net))
    t = len(terminal_strong_linkage_classes(net))
    s = rank(stoichiometric_matrix(net))
    n = net.complex_count
    return NetworkNumbers(
        species_count=net.species_count,
        complex_count=n,
        reaction_count=net.reaction_count,
        irreversible_reaction_count=_irreversible_count(net),
        linkage_class_count=l,
        strong_linkage_class_count=sl,
        terminal_strong_linkage_class_count=t,
        rank=s,
        deficiency=n - l - s,
        weakly_reversible=sl == l,
    )


def subnetwork(net: Network, reactions: Iterable[int]) -> Network:
    """Network induced by a subset of reaction indices.

    Keeps exactly the chosen reactions, the complexes they touch, and the
    species occurring in those complexes; species and complex order are
    inherited from the parent, and labels are preserved.
    """
    chosen = sorted(set(reactions))
    if not chosen:
        raise EmptySubsetError("subnetwork needs at least one reaction")
    if chosen[0] < 0 or chosen[-1] >= net.reaction_count:
        raise NetworkError(f"reaction index out of range in {chosen}")

    touched_complexes = sorted(
        {c for i in chosen for c in (net.reactions[i].reactant, net.reactions[i].product)}
    )
    touched_species = sorted(
        {s for c in touched_complexes for s in net.complexes[c].support}
    )
    species_map = {old: new for new, old in enumerate(touched_species)}
    complex_map = {old: new for new, old in enumerate(touched_complexes)}

    species = [
        Species(net.species[old].name, new) for old, new in sorted(species_map.items())
    ]
    complexes = [
        Complex({species_map[i]: c for i, c in net.complexes[old].terms})
        for old in touched_complexes
    ]
    reactions_out = [
        Reaction(
            complex_map[net.reactions[i].reactant],
            complex_map[net.reactions[i].product],
            net.reaction_label(i),
        )
        for i in chosen
    ]
    return Network(species, complexes, reactions_out)


def deficiency_zero_check(net: Network) -> DeficiencyVerdict:
    """Structural deficiency-zero theorem verdict.

    Applicable exactly when the deficiency is zero.  Then: not weakly
    reversible means no positive steady state (and no cyclic composition
    trajectory through a positive composition) for arbitrary kinetics;
    weakly reversible means, under mass action kinetics, exactly one steady
    state per positive stoichiometric compatibility class.
    """
    nn = network_numbers(net)
    is_zero = nn.deficiency == 0
    conditions = (
        ("deficiency is zero", is_zero),
        ("weakly reversible", nn.weakly_reversible),
    )
    if not is_zero:
        return DeficiencyVerdict(
            theorem="deficiency-zero",
            applicable=False,
            conditions=conditions,
            conclusion=CONCLUSION_NOT_APPLICABLE,
            statement=f"deficiency is {nn.deficiency}, not zero; the theorem does not apply",
        )
    if not nn.weakly_reversible:
        return DeficiencyVerdict(
            theorem="deficiency-zero",
            applicable=True,
            conditions=conditions,
            conclusion=CONCLUSION_NO_POSITIVE_STEADY_STATE,
            statement=(
                "deficiency zero and not weakly reversible: for arbitrary kinetics the "
                "system admits no positive steady state and no cyclic composition "
                "trajectory containing a positive composition"
            ),
        )
    return DeficiencyVerdict(
        theorem="deficiency-zero",
        applicable=True,
        conditions=conditions,
        conclusion=CONCLUSION_EXACTLY_ONE,
        statement=(
            "deficiency zero and weakly reversible: under mass action kinetics each "
            "positive stoichiometric compatibility class contains exactly one steady "
            "state, and that steady state is asymptotically stable"
        ),
    )


def _linkage_class_deficiencies(net: Network) -> list[int]:
    """Deficiency of each linkage class: n_i - 1 - s_i over the class's reactions."""
    deficiencies = []
    for cls in linkage_classes(net):
        members = set(cls)
        vectors = [
            net.reaction_vector(i)
            for i, rx in enumerate(net.reactions)
            if rx.reactant in members
        ]
        deficiencies.append(len(cls) - 1 - rank_of_rows(vectors))
    return deficiencies


def deficiency_one_check(net: Network) -> DeficiencyVerdict:
    """Structural deficiency-one theorem verdict (mass action kinetics).

    Hypotheses: every linkage class contains exactly one terminal strong
    linkage class, every linkage class has deficiency at most one, and the
    class deficiencies sum to the network deficiency.  When they all hold
    there is at most one steady state per positive stoichiometric
    compatibility class (exactly one if also weakly reversible).
    """
    nn = network_numbers(net)
    classes = linkage_classes(net)
    class_of = {c: k for k, cls in enumerate(classes) for c in cls}
    terminal_per_class = [0] * len(classes)
    for scc in terminal_strong_linkage_classes(net):
        terminal_per_class[class_of[scc[0]]] += 1
    class_deficiencies = _linkage_class_deficiencies(net)

    one_terminal = all(t == 1 for t in terminal_per_class)
    small_deficiencies = all(d <= 1 for d in class_deficiencies)
    sums_match = sum(class_deficiencies) == nn.deficiency
    conditions = (
        ("one terminal strong linkage class per linkage class", one_terminal),
        ("each linkage class deficiency at most one", small_deficiencies),
        ("linkage class deficiencies sum to network deficiency", sums_match),
        ("weakly reversible", nn.weakly_reversible),
    )
    applicable = one_terminal and small_deficiencies and sums_match
    if not applicable:
        failed = [name for name, holds in conditions[:3] if not holds]
        return DeficiencyVerdict(
            theorem="deficiency-one",
            applicable=False,
            conditions=conditions,
            conclusion=CONCLUSION_NOT_APPLICABLE,
            statement="hypotheses fail (" + "; ".join(failed) + "); the theorem does not apply",
        )
    if nn.weakly_reversible:
        return DeficiencyVerdict(
            theorem="deficiency-one",
            applicable=True,
            conditions=conditions,
            conclusion=CONCLUSION_EXACTLY_ONE,
            statement=(
                "all hypotheses hold and the network is weakly reversible: under mass "
                "action kinetics there is exactly one steady state in each positive "
                "stoichiometric compatibility class"
            ),
        )
    return DeficiencyVerdict(
        theorem="deficiency-one",
        applicable=True,
        conditions=conditions,
        conclusion=CONCLUSION_AT_MOST_ONE,
        statement=(
            "all hypotheses hold: under mass action kinetics there is no more than one "
            "steady state in each positive stoichiometric compatibility class"
        ),
    )


MASS_ACTION = "mass-action"
POWER_LAW = "power-law"


@dataclass(frozen=True)
class Kinetics:
    """Rate constants plus a kinetic order matrix (reactions x species).

    Rate ``i`` evaluates as ``rates[i] * prod(x[j] ** orders[i][j])``.  For
    mass-action kinetics the order rows are the reactant complex coefficient
    vectors; power-law kinetics allows arbitrary real orders.
    """

    kind: str
    rates: tuple[float, ...]
    orders: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if self.kind not in (MASS_ACTION, POWER_LAW):
            raise ValueError(f"unknown kinetics kind {self.kind!r}")
        if not self.rates:
            raise ValueError("at least one rate constant required")
        if any(not (k > 0) for k in self.rates):
            raise ValueError("rate constants must be strictly positive")
        if len(self.orders) != len(self.rates):
            raise DimensionError("one kinetic order row per reaction required")
        widths = {len(row) for row in self.orders}
        if len(widths) > 1:
            raise DimensionError("kinetic order rows must have equal length")

    @classmethod
    def mass_action(cls, net: Network, rates: Sequence[float]) -> "Kinetics":
        """Mass-action kinetics: order rows taken from the reactant complexes."""
        if len(rates) != net.reaction_count:
            raise DimensionError(
                f"{net.reaction_count} rate constants required, got {len(rates)}"
            )
        orders = tuple(
            tuple(
                float(c)
                for c in net.complexes[rx.reactant].vector(net.species_count)
            )
            for rx in net.reactions
        )
        return cls(MASS_ACTION, tuple(float(k) for k in rates), orders)

    @classmethod
    def power_law(
        cls, rates: Sequence[float], orders: Sequence[Sequence[float]]
    ) -> "Kinetics":
        return cls(
            POWER_LAW,
            tuple(float(k) for k in rates),
            tuple(tuple(float(v) for v in row) for row in orders),
        )


def _fluxes(net: Network, kinetics: Kinetics, x: Sequence[float]) -> list[float]:
    if len(kinetics.rates) != net.reaction_count:
        raise DimensionError("kinetics does not match the network's reaction count")
    if any(len(row) != net.species_count for row in kinetics.orders):
        raise DimensionError("kinetic order rows do not match the species count")
    if len(x) != net.species_count:
        raise DimensionError(
            f"point has {len(x)} coordinates, network has {net.species_count} species"
        )
    if any(not (xi > 0) for xi in x):
        raise NonPositivePointError("all concentrations must be strictly positive")
    return [
        k * math.prod(xi ** f for xi, f in zip(x, row))
        for k, row in zip(kinetics.rates, kinetics.orders)
    ]


def sfrf(net: Network, kinetics: Kinetics, x: Sequence[float]) -> tuple[float, ...]:
    """Species formation rate function: stoichiometric matrix times the fluxes."""
    fluxes = _fluxes(net, kinetics, x)
    vectors = [net.reaction_vector(i) for i in range(net.reaction_count)]
    return tuple(
        sum(vec[s] * flux for vec, flux in zip(vectors, fluxes))
        for s in range(net.species_count)
    )


def is_steady_state(
    net: Network, kinetics: Kinetics, x: Sequence[float], tol: float = 1e-9
) -> bool:
    """Whether the formation rate vanishes at ``x``, relative to flux size.

    True when ``max|f(x)| <= tol * max(1, max|K(x)|)``.
    """
    if tol < 0 or math.isnan(tol):
        raise ValueError("tolerance must be nonnegative")
    fluxes = _fluxes(net, kinetics, x)
    f = sfrf(net, kinetics, x)
    scale = max(1.0, max(abs(v) for v in fluxes))
    return max(abs(v) for v in f) <= tol * scale
