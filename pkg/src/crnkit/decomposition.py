"""Independent decompositions of a reaction network.

A partition of the reaction set is independent when the network rank equals
the sum of the part ranks (equivalently, the stoichiometric subspace is the
direct sum of the part subspaces).  Whether a nontrivial independent
partition exists at all is decided by connectivity of the *coordinate
graph*: one vertex per greedily chosen basis row of the transposed
stoichiometric matrix, with an edge joining two vertices whenever some
non-basis reaction vector uses both basis vectors with nonzero coefficients.
A connected graph means only the trivial decomposition exists; otherwise the
connected components induce the finest independent partition this
construction yields, with every non-basis reaction joining the component
that carries its nonzero coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Literal, Sequence

from .linalg import (
    BasisSelection,
    RationalMatrix,
    _insert_into_echelon,
    coordinates,
    rank,
    rank_of_rows,
    select_basis_rows,
)
from .model import Network, incidence_matrix, stoichiometric_matrix

BRUTE_FORCE_REACTION_LIMIT = 12  # Bell(12) ~ 4.2M partitions


class PartitionError(ValueError):
    """The given parts do not form a partition of the reaction set."""


class MismatchedReactionSetError(PartitionError):
    """Two partitions do not cover the same reaction set."""


class TooLargeError(ValueError):
    """Brute-force enumeration rejected: too many reactions."""


class InternalError(RuntimeError):
    """A constructed decomposition failed its own verification."""


@dataclass(frozen=True)
class CoordinateGraph:
    """Undirected graph on basis-row indices.

    Vertex ``i`` stands for the i-th basis row; ``vertex_labels`` carries the
    reaction labels of those rows.  Edges are unordered pairs ``(i, j)`` with
    ``i < j``.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    vertex_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        for i, j in self.edges:
            if not (0 <= i < j < self.vertex_count):
                raise ValueError(f"invalid edge ({i}, {j})")
        if len(self.vertex_labels) != self.vertex_count:
            raise ValueError("one label per vertex required")


@dataclass(frozen=True)
class Decomposition:
    """A partition of the reaction index set with per-part ranks.

    Parts are disjoint, nonempty, cover all reactions, and are ordered by
    their smallest reaction index; ``part_ranks[i]`` is the rank of the span
    of part i's reaction vectors.
    """

    parts: tuple[tuple[int, ...], ...]
    part_ranks: tuple[int, ...]

    def labels(self, net: Network) -> tuple[tuple[str, ...], ...]:
        return tuple(tuple(net.reaction_label(i) for i in part) for part in self.parts)


@dataclass(frozen=True)
class IndependenceReport:
    """Rank bookkeeping for a candidate partition.

    ``independent`` holds exactly when the network rank equals the sum of
    the part ranks; ``incidence_independent`` is the same statement for the
    incidence matrices (each part's incidence matrix is built over the
    complexes its own reactions touch).
    """

    network_rank: int
    part_ranks: tuple[int, ...]
    independent: bool
    incidence_network_rank: int
    incidence_part_ranks: tuple[int, ...]
    incidence_independent: bool


def _canonical_partition(
    parts: Iterable[Iterable[int]], reaction_count: int | None = None
) -> tuple[tuple[int, ...], ...]:
    """Validate and canonicalize: sorted within parts, parts kept in given order."""
    canon: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for part in parts:
        p = tuple(sorted(part))
        if not p:
            raise PartitionError("empty part in partition")
        for i in p:
            if not isinstance(i, int):
                raise PartitionError(f"reaction index {i!r} is not an integer")
            if i in seen:
                raise PartitionError(f"reaction index {i} appears in more than one part")
            seen.add(i)
        canon.append(p)
    if not canon:
        raise PartitionError("partition has no parts")
    if reaction_count is not None:
        expected = set(range(reaction_count))
        if seen != expected:
            missing = sorted(expected - seen)
            extra = sorted(seen - expected)
            detail = []
            if missing:
                detail.append(f"missing indices {missing}")
            if extra:
                detail.append(f"unknown indices {extra}")
            raise PartitionError("not a partition of the reaction set: " + "; ".join(detail))
    return tuple(canon)


def _part_incidence_rank(net: Network, part: Sequence[int]) -> int:
    # Incidence matrix of the subnetwork induced by `part`, over only the
    # complexes those reactions touch (inherited order).
    touched = sorted({c for i in part for c in (net.reactions[i].reactant, net.reactions[i].product)})
    row_of = {c: k for k, c in enumerate(touched)}
    rows = [[0] * len(part) for _ in touched]
    for j, i in enumerate(part):
        rx = net.reactions[i]
        rows[row_of[rx.reactant]][j] = -1
        rows[row_of[rx.product]][j] = 1
    return rank(RationalMatrix(rows))


def verify_decomposition(net: Network, parts: Iterable[Iterable[int]]) -> IndependenceReport:
    """Check a user partition for independence and incidence independence.

    Part order is preserved from the input; raises `PartitionError` when the
    parts overlap, leave a gap, or contain an empty part.
    """
    canon = _canonical_partition(parts, net.reaction_count)
    vectors = [net.reaction_vector(i) for i in range(net.reaction_count)]
    network_rank = rank_of_rows(vectors)
    part_ranks = tuple(rank_of_rows([vectors[i] for i in part]) for part in canon)
    incidence_network_rank = rank(incidence_matrix(net))
    incidence_part_ranks = tuple(_part_incidence_rank(net, part) for part in canon)
    return IndependenceReport(
        network_rank=network_rank,
        part_ranks=part_ranks,
        independent=sum(part_ranks) == network_rank,
        incidence_network_rank=incidence_network_rank,
        incidence_part_ranks=incidence_part_ranks,
        incidence_independent=sum(incidence_part_ranks) == incidence_network_rank,
    )


def _basis_coordinates(
    net: Network, basis: BasisSelection
) -> dict[int, tuple[Fraction, ...]]:
    """Coordinates of every non-basis reaction vector in the basis rows."""
    nt = stoichiometric_matrix(net).transpose()
    basis_rows = [nt.row(i) for i in basis.basis_rows]
    in_basis = set(basis.basis_rows)
    return {
        k: coordinates(nt.row(k), basis_rows)
        for k in range(nt.rows)
        if k not in in_basis
    }


def build_coordinate_graph(net: Network, basis: BasisSelection) -> CoordinateGraph:
    """Coordinate graph of the reaction vectors for the given basis rows.

    For each non-basis reaction vector, an edge joins every pair of basis
    vertices at which its (unique, exact) coordinates are nonzero.
    """
    edges: set[tuple[int, int]] = set()
    for coeffs in _basis_coordinates(net, basis).values():
        nonzero = [v for v, a in enumerate(coeffs) if a != 0]
        edges.update(
            (nonzero[a], nonzero[b])
            for a in range(len(nonzero))
            for b in range(a + 1, len(nonzero))
        )
    labels = tuple(net.reaction_label(i) for i in basis.basis_rows)
    return CoordinateGraph(basis.rank, frozenset(edges), labels)


def connected_components(graph: CoordinateGraph) -> list[tuple[int, ...]]:
    """Vertex sets of the undirected components, ordered by smallest vertex."""
    parent = list(range(graph.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in graph.edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri
    groups: dict[int, list[int]] = {}
    for v in range(graph.vertex_count):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])


def find_independent_decomposition(net: Network) -> Decomposition | None:
    """Finest independent decomposition from coordinate-graph connectivity.

    Returns None when the coordinate graph is connected (only the trivial
    decomposition exists).  Otherwise each connected component yields one
    part: the component's basis reactions plus every non-basis reaction
    whose nonzero coordinates all sit in that component.  The result is
    verified independent before being returned.
    """
    nt = stoichiometric_matrix(net).transpose()
    basis = select_basis_rows(nt)
    graph = build_coordinate_graph(net, basis)
    components = connected_components(graph)
    if len(components) <= 1:
        return None

    component_of = {v: ci for ci, comp in enumerate(components) for v in comp}
    members: list[set[int]] = [set() for _ in components]
    for vertex, row_index in enumerate(basis.basis_rows):
        members[component_of[vertex]].add(row_index)
    for row_index, coeffs in _basis_coordinates(net, basis).items():
        owners = {component_of[v] for v, a in enumerate(coeffs) if a != 0}
        if len(owners) != 1:
            raise InternalError(
                f"reaction {row_index} spans several coordinate-graph components"
            )
        members[owners.pop()].add(row_index)

    parts = tuple(tuple(sorted(p)) for p in sorted(members, key=min))
    report = verify_decomposition(net, parts)
    if not report.independent:
        raise InternalError("constructed decomposition failed independence verification")
    return Decomposition(parts, report.part_ranks)


def iter_set_partitions(
    n: int, max_parts: int | None = None
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partitions of range(n) into at most ``max_parts`` blocks.

    Blocks are emitted in restricted-growth order: each block is sorted and
    blocks are ordered by their smallest element.
    """
    if n <= 0:
        return
    limit = n if max_parts is None else min(max_parts, n)
    if limit < 1:
        return
    assignment = [0] * n

    def rec(i: int, used: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(used)]
            for idx in range(n):
                blocks[assignment[idx]].append(idx)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(min(used + 1, limit)):
            assignment[i] = b
            yield from rec(i + 1, max(used, b + 1))

    yield from rec(0, 0)


class _SubsetRankCache:
    """Rank of the span of any subset of a fixed vector list, memoized.

    Subsets are bitmasks; the echelon basis of ``mask`` is built by inserting
    one vector into the echelon basis of ``mask`` minus its highest bit.
    """

    def __init__(self, vectors: Sequence[Sequence[int]]):
        self._vectors = vectors
        self._echelon: dict[int, tuple[tuple[int, tuple[Fraction, ...]], ...]] = {0: ()}
        self._rank: dict[int, int] = {0: 0}

    def rank(self, mask: int) -> int:
        if mask not in self._rank:
            high = mask.bit_length() - 1
            base = mask ^ (1 << high)
            self.rank(base)  # ensure base echelon exists
            echelon = list(self._echelon[base])
            _insert_into_echelon(echelon, self._vectors[high])
            self._echelon[mask] = tuple(echelon)
            self._rank[mask] = len(echelon)
        return self._rank[mask]


def brute_force_decompositions(net: Network, max_parts: int) -> list[Decomposition]:
    """Every independent decomposition with at most ``max_parts`` parts.

    An exhaustive oracle for small networks: enumerates all set partitions of
    the reaction set, keeps those whose part ranks sum to the network rank,
    and returns them in canonical (restricted-growth) order.  The trivial
    single-part partition is always included.  Raises `TooLargeError` when
    the network has more than ``BRUTE_FORCE_REACTION_LIMIT`` reactions.
    """
    r = net.reaction_count
    if r > BRUTE_FORCE_REACTION_LIMIT:
        raise TooLargeError(
            f"{r} reactions exceed the brute-force limit of {BRUTE_FORCE_REACTION_LIMIT}"
        )
    if max_parts < 1:
        raise ValueError("max_parts must be at least 1")
    vectors = [net.reaction_vector(i) for i in range(r)]
    cache = _SubsetRankCache(vectors)
    total = cache.rank((1 << r) - 1)
    found: list[Decomposition] = []
    for partition in iter_set_partitions(r, max_parts):
        ranks = tuple(cache.rank(_mask(part)) for part in partition)
        if sum(ranks) == total:
            found.append(Decomposition(partition, ranks))
    return found


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


PartitionRelation = Literal["refinement", "coarsening", "equal", "incomparable"]


def refine_or_coarsen_check(
    parts_a: Iterable[Iterable[int]], parts_b: Iterable[Iterable[int]]
) -> PartitionRelation:
    """Relate two partitions of the same reaction set.

    ``"refinement"`` means every part of the first sits inside a part of the
    second; ``"coarsening"`` is the converse; ``"equal"`` both; otherwise
    ``"incomparable"``.
    """
    a = _canonical_partition(parts_a)
    b = _canonical_partition(parts_b)
    ground_a = {i for part in a for i in part}
    ground_b = {i for part in b for i in part}
    if ground_a != ground_b:
        raise MismatchedReactionSetError("partitions cover different reaction sets")

    def refines(fine: tuple[tuple[int, ...], ...], coarse: tuple[tuple[int, ...], ...]) -> bool:
        owner = {i: k for k, part in enumerate(coarse) for i in part}
        return all(len({owner[i] for i in part}) == 1 for part in fine)

    a_ref_b = refines(a, b)
    b_ref_a = refines(b, a)
    if a_ref_b and b_ref_a:
        return "equal"
    if a_ref_b:
        return "refinement"
    if b_ref_a:
        return "coarsening"
    return "incomparable"
