"""Analysis report: one structure holding everything the CLI prints.

The report is built once from a network, serializes to a stable dict (the
JSON schema, version "1"), deserializes losslessly, and renders to text from
the same values, so the two output formats can never disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping

from .analysis import (
    DeficiencyVerdict,
    NetworkNumbers,
    deficiency_one_check,
    deficiency_zero_check,
    network_numbers,
    subnetwork,
)
from .decomposition import (
    IndependenceReport,
    build_coordinate_graph,
    connected_components,
    find_independent_decomposition,
    verify_decomposition,
)
from .linalg import select_basis_rows
from .model import Network, stoichiometric_matrix

SCHEMA_VERSION = "1"

# (display row label, dict key, attribute) for the numbers table.
NUMBERS_ROWS: tuple[tuple[str, str, str], ...] = (
    ("# species", "species", "species_count"),
    ("# complexes", "complexes", "complex_count"),
    ("# reactions", "reactions", "reaction_count"),
    ("# irreversible reactions", "irreversible_reactions", "irreversible_reaction_count"),
    ("# linkage classes", "linkage_classes", "linkage_class_count"),
    ("rank of network", "rank_of_network", "rank"),
    ("deficiency", "deficiency", "deficiency"),
)

_EXTRA_NUMBER_KEYS: tuple[tuple[str, str], ...] = (
    ("strong_linkage_classes", "strong_linkage_class_count"),
    ("terminal_strong_linkage_classes", "terminal_strong_linkage_class_count"),
)


def numbers_to_dict(nn: NetworkNumbers) -> dict[str, Any]:
    d: dict[str, Any] = {key: getattr(nn, attr) for _, key, attr in NUMBERS_ROWS}
    for key, attr in _EXTRA_NUMBER_KEYS:
        d[key] = getattr(nn, attr)
    d["weakly_reversible"] = nn.weakly_reversible
    return d


def numbers_from_dict(d: Mapping[str, Any]) -> NetworkNumbers:
    return NetworkNumbers(
        species_count=d["species"],
        complex_count=d["complexes"],
        reaction_count=d["reactions"],
        irreversible_reaction_count=d["irreversible_reactions"],
        linkage_class_count=d["linkage_classes"],
        strong_linkage_class_count=d["strong_linkage_classes"],
        terminal_strong_linkage_class_count=d["terminal_strong_linkage_classes"],
        rank=d["rank_of_network"],
        deficiency=d["deficiency"],
        weakly_reversible=d["weakly_reversible"],
    )


def verdict_to_dict(v: DeficiencyVerdict) -> dict[str, Any]:
    return {
        "theorem": v.theorem,
        "applicable": v.applicable,
        "conditions": [{"name": name, "holds": holds} for name, holds in v.conditions],
        "conclusion": v.conclusion,
        "statement": v.statement,
    }


def verdict_from_dict(d: Mapping[str, Any]) -> DeficiencyVerdict:
    return DeficiencyVerdict(
        theorem=d["theorem"],
        applicable=d["applicable"],
        conditions=tuple((c["name"], c["holds"]) for c in d["conditions"]),
        conclusion=d["conclusion"],
        statement=d["statement"],
    )


def independence_to_dict(rep: IndependenceReport) -> dict[str, Any]:
    return {
        "network_rank": rep.network_rank,
        "part_ranks": list(rep.part_ranks),
        "independent": rep.independent,
        "incidence_network_rank": rep.incidence_network_rank,
        "incidence_part_ranks": list(rep.incidence_part_ranks),
        "incidence_independent": rep.incidence_independent,
    }


def independence_from_dict(d: Mapping[str, Any]) -> IndependenceReport:
    return IndependenceReport(
        network_rank=d["network_rank"],
        part_ranks=tuple(d["part_ranks"]),
        independent=d["independent"],
        incidence_network_rank=d["incidence_network_rank"],
        incidence_part_ranks=tuple(d["incidence_part_ranks"]),
        incidence_independent=d["incidence_independent"],
    )


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the ``analyze`` command reports, in a stable order.

    When the decomposition is trivial, ``parts`` holds the single whole-set
    part and ``trivial`` is True.
    """

    network: NetworkNumbers
    trivial: bool
    parts: tuple[tuple[str, ...], ...]
    part_numbers: tuple[NetworkNumbers, ...]
    independence: IndependenceReport
    graph_vertices: tuple[str, ...]
    graph_edges: tuple[tuple[int, int], ...]
    graph_components: tuple[tuple[int, ...], ...]
    network_verdicts: tuple[DeficiencyVerdict, DeficiencyVerdict]
    part_verdicts: tuple[tuple[DeficiencyVerdict, DeficiencyVerdict], ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "network": numbers_to_dict(self.network),
            "coordinate_graph": {
                "vertices": list(self.graph_vertices),
                "edges": [list(e) for e in self.graph_edges],
                "components": [list(c) for c in self.graph_components],
            },
            "decomposition": {
                "trivial": self.trivial,
                "parts": [list(p) for p in self.parts],
                **independence_to_dict(self.independence),
            },
            "subnetworks": [
                {
                    "part": list(part),
                    "numbers": numbers_to_dict(nums),
                    "deficiency_zero": verdict_to_dict(dz),
                    "deficiency_one": verdict_to_dict(d1),
                }
                for part, nums, (dz, d1) in zip(
                    self.parts, self.part_numbers, self.part_verdicts
                )
            ],
            "deficiency_zero": verdict_to_dict(self.network_verdicts[0]),
            "deficiency_one": verdict_to_dict(self.network_verdicts[1]),
        }

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "AnalysisReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {d.get('schema_version')!r}")
        graph = d["coordinate_graph"]
        decomp = d["decomposition"]
        subs = d["subnetworks"]
        return cls(
            network=numbers_from_dict(d["network"]),
            trivial=decomp["trivial"],
            parts=tuple(tuple(p) for p in decomp["parts"]),
            part_numbers=tuple(numbers_from_dict(s["numbers"]) for s in subs),
            independence=independence_from_dict(decomp),
            graph_vertices=tuple(graph["vertices"]),
            graph_edges=tuple((e[0], e[1]) for e in graph["edges"]),
            graph_components=tuple(tuple(c) for c in graph["components"]),
            network_verdicts=(
                verdict_from_dict(d["deficiency_zero"]),
                verdict_from_dict(d["deficiency_one"]),
            ),
            part_verdicts=tuple(
                (verdict_from_dict(s["deficiency_zero"]), verdict_from_dict(s["deficiency_one"]))
                for s in subs
            ),
        )


def build_report(net: Network) -> AnalysisReport:
    """Run the whole pipeline on a network and assemble the report."""
    basis = select_basis_rows(stoichiometric_matrix(net).transpose())
    graph = build_coordinate_graph(net, basis)
    components = connected_components(graph)
    decomposition = find_independent_decomposition(net)

    if decomposition is None:
        index_parts: tuple[tuple[int, ...], ...] = (tuple(range(net.reaction_count)),)
        trivial = True
    else:
        index_parts = decomposition.parts
        trivial = False
    label_parts = tuple(
        tuple(net.reaction_label(i) for i in part) for part in index_parts
    )
    independence = verify_decomposition(net, index_parts)

    part_nets = [subnetwork(net, part) for part in index_parts]
    part_numbers = tuple(network_numbers(sub) for sub in part_nets)
    part_verdicts = tuple(
        (deficiency_zero_check(sub), deficiency_one_check(sub)) for sub in part_nets
    )
    return AnalysisReport(
        network=network_numbers(net),
        trivial=trivial,
        parts=label_parts,
        part_numbers=part_numbers,
        independence=independence,
        graph_vertices=graph.vertex_labels,
        graph_edges=tuple(sorted(graph.edges)),
        graph_components=tuple(components),
        network_verdicts=(deficiency_zero_check(net), deficiency_one_check(net)),
        part_verdicts=part_verdicts,
    )


def format_numbers_table(columns: list[tuple[str, Mapping[str, Any]]]) -> str:
    """Fixed-order table: one row per network number, one column per network."""
    label_width = max(len(label) for label, _, _ in NUMBERS_ROWS)
    col_widths = [max(len(header), 5) for header, _ in columns]
    lines = [
        " " * label_width
        + "".join(f"  {header:>{w}}" for (header, _), w in zip(columns, col_widths))
    ]
    for label, key, _ in NUMBERS_ROWS:
        cells = "".join(
            f"  {str(values[key]):>{w}}" for (_, values), w in zip(columns, col_widths)
        )
        lines.append(f"{label:<{label_width}}{cells}")
    return "\n".join(lines)


def rank_equation(total: int, parts: list[int]) -> str:
    return f"{total} = {' + '.join(str(p) for p in parts)}" if parts else str(total)


def render_text(report_dict: Mapping[str, Any]) -> str:
    """Deterministic plain-text rendering of a report dict."""
    decomp = report_dict["decomposition"]
    graph = report_dict["coordinate_graph"]
    subs = report_dict["subnetworks"]
    out: list[str] = []

    if decomp["trivial"]:
        out.append("independent decomposition: trivial only (coordinate graph is connected)")
    else:
        out.append(f"independent decomposition: {len(decomp['parts'])} parts")
        for k, part in enumerate(decomp["parts"], 1):
            out.append(f"  P{k}: {', '.join(part)}")
    eq = rank_equation(decomp["network_rank"], decomp["part_ranks"])
    verdict = "independent" if decomp["independent"] else "not independent"
    out.append(f"rank condition: {eq} ({verdict})")
    inc_eq = rank_equation(decomp["incidence_network_rank"], decomp["incidence_part_ranks"])
    inc_verdict = (
        "incidence independent" if decomp["incidence_independent"] else "not incidence independent"
    )
    out.append(f"incidence rank condition: {inc_eq} ({inc_verdict})")
    out.append("")

    out.append("coordinate graph:")
    vertices = graph["vertices"]
    out.append(
        "  vertices: "
        + " ".join(f"v{i + 1}={label}" for i, label in enumerate(vertices))
    )
    if graph["edges"]:
        out.append(
            "  edges: "
            + " ".join(f"(v{i + 1},v{j + 1})" for i, j in graph["edges"])
        )
    else:
        out.append("  edges: none")
    out.append(
        "  components: "
        + " ".join(
            "{" + ", ".join(f"v{v + 1}" for v in comp) + "}"
            for comp in graph["components"]
        )
    )
    out.append("")

    out.append("network numbers:")
    columns: list[tuple[str, Mapping[str, Any]]] = [("N", report_dict["network"])]
    if not decomp["trivial"]:
        columns += [(f"N{k + 1}", s["numbers"]) for k, s in enumerate(subs)]
    table = format_numbers_table(columns)
    out.extend("  " + line for line in table.splitlines())
    wr = "yes" if report_dict["network"]["weakly_reversible"] else "no"
    out.append(f"  weakly reversible: {wr}")
    out.append("")

    out.append("deficiency theorems:")
    out.append(_verdict_lines("N", report_dict["deficiency_zero"]))
    out.append(_verdict_lines("N", report_dict["deficiency_one"]))
    if not decomp["trivial"]:
        for k, s in enumerate(subs, 1):
            out.append(_verdict_lines(f"N{k}", s["deficiency_zero"]))
            out.append(_verdict_lines(f"N{k}", s["deficiency_one"]))
    return "\n".join(out) + "\n"


def _verdict_lines(name: str, verdict: Mapping[str, Any]) -> str:
    return (
        f"  {name} [{verdict['theorem']}] {verdict['conclusion']}: {verdict['statement']}"
    )
