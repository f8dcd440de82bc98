"""Parser for the plain-text reaction DSL (conventional extension ``.crn``).

One reaction per line::

    R1: T + V -> I + V      # optional label before ':', '#' starts a comment
    R2: I -> 0              ; the zero complex is written 0
    bind: A + B <-> C       # reversible, expands to 'bindf' and 'bindb'

Grammar::

    line      := [label ":"] complex arrow complex [";" comment] | comment | blank
    label     := identifier
    arrow     := "->" | "<->"
    complex   := "0" | term ("+" term)*
    term      := [positive-integer] identifier      e.g. "2 X5" or "2X5"
    comment   := "#" to end of line

Species identifiers are letters, digits, and underscores, not starting with
a digit.  Species order is first-appearance order (reactant side scanned
before product side), complex order is first-appearance order, reaction
order is source order.  A reversible arrow expands into the forward then
the backward reaction; with an explicit label the pair is labeled
``<label>f`` / ``<label>b``, otherwise both fall back to the positional
defaults ``R<k>``.
"""

from __future__ import annotations

import os
import re

from .model import (
    Complex,
    DuplicateLabelError,
    DuplicateReactionError,
    EmptyNetworkError,
    Network,
    NetworkError,
    Reaction,
    SelfLoopError,
    Species,
)


class DslSyntaxError(NetworkError):
    """Malformed DSL line; carries the 1-based line number."""


_LABEL_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(.*)$")
_TERM_RE = re.compile(r"^([0-9]+)?\s*([A-Za-z_][A-Za-z0-9_]*)$")


def parse_network(text: str) -> Network:
    """Parse DSL source into a `Network`.

    Raises `DslSyntaxError`, `SelfLoopError`, `DuplicateReactionError`,
    `DuplicateLabelError`, or `EmptyNetworkError`, each pointing at the
    offending line where one exists.
    """
    species_index: dict[str, int] = {}
    complex_index: dict[tuple[tuple[int, int], ...], int] = {}
    complex_maps: list[dict[int, int]] = []
    reactions: list[Reaction] = []
    pair_lines: dict[tuple[int, int], int] = {}
    label_lines: dict[str, int] = {}

    def intern_species(name: str) -> int:
        if name not in species_index:
            species_index[name] = len(species_index)
        return species_index[name]

    def intern_complex(coeffs: dict[int, int]) -> int:
        key = tuple(sorted(coeffs.items()))
        if key not in complex_index:
            complex_index[key] = len(complex_maps)
            complex_maps.append(dict(coeffs))
        return complex_index[key]

    def parse_complex(src: str, line_no: int) -> dict[int, int]:
        s = src.strip()
        if not s:
            raise DslSyntaxError("missing complex", line_no)
        if s == "0":
            return {}
        coeffs: dict[int, int] = {}
        for chunk in s.split("+"):
            term = chunk.strip()
            m = _TERM_RE.match(term)
            if not m:
                raise DslSyntaxError(f"invalid term {term!r}", line_no)
            coeff = int(m.group(1)) if m.group(1) else 1
            if coeff < 1:
                raise DslSyntaxError(
                    f"stoichiometric coefficient must be positive in {term!r}", line_no
                )
            idx = intern_species(m.group(2))
            coeffs[idx] = coeffs.get(idx, 0) + coeff
        return coeffs

    def add_reaction(reactant: int, product: int, label: str | None, line_no: int) -> None:
        pair = (reactant, product)
        if pair in pair_lines:
            raise DuplicateReactionError(
                f"reaction duplicates the one on line {pair_lines[pair]}", line_no
            )
        pair_lines[pair] = line_no
        if label is not None:
            if label in label_lines:
                raise DuplicateLabelError(
                    f"label {label!r} already used on line {label_lines[label]}", line_no
                )
            label_lines[label] = line_no
        reactions.append(Reaction(reactant, product, label))

    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if ";" in line:
            # Only a comment may follow ';', and '#' comments are gone by now.
            line, tail = line.split(";", 1)
            if tail.strip():
                raise DslSyntaxError(f"unexpected text after ';': {tail.strip()!r}", line_no)
        line = line.strip()
        if not line:
            continue

        label: str | None = None
        m = _LABEL_RE.match(line)
        if m:
            label, line = m.group(1), m.group(2)

        if "<->" in line:
            sides = line.split("<->")
            if len(sides) != 2 or "->" in sides[0] or "->" in sides[1]:
                raise DslSyntaxError("expected exactly one arrow", line_no)
            reversible = True
        else:
            sides = line.split("->")
            if len(sides) != 2:
                raise DslSyntaxError("expected exactly one arrow ('->' or '<->')", line_no)
            reversible = False

        reactant_map = parse_complex(sides[0], line_no)
        product_map = parse_complex(sides[1], line_no)
        if reactant_map == product_map:
            raise SelfLoopError(
                "reactant and product complexes are identical", line_no
            )
        reactant = intern_complex(reactant_map)
        product = intern_complex(product_map)

        if reversible:
            fwd = f"{label}f" if label is not None else None
            bwd = f"{label}b" if label is not None else None
            add_reaction(reactant, product, fwd, line_no)
            add_reaction(product, reactant, bwd, line_no)
        else:
            add_reaction(reactant, product, label, line_no)

    if not reactions:
        raise EmptyNetworkError("no reactions found in input")

    # Materialize positional default labels so collisions with explicit
    # labels are caught here, with a line number.
    resolved: list[Reaction] = []
    for i, rx in enumerate(reactions):
        if rx.label is None:
            default = f"R{i + 1}"
            if default in label_lines:
                raise DuplicateLabelError(
                    f"default label {default!r} for reaction {i + 1} collides with an "
                    "explicit label",
                    label_lines[default],
                )
            rx = Reaction(rx.reactant, rx.product, default)
        resolved.append(rx)
    labels = [rx.label for rx in resolved]
    if len(set(labels)) != len(labels):
        dup = sorted({x for x in labels if labels.count(x) > 1})
        raise DuplicateLabelError(f"duplicate reaction labels: {', '.join(map(str, dup))}")

    species = [Species(name, idx) for name, idx in species_index.items()]
    complexes = [Complex(cm) for cm in complex_maps]
    return Network(species, complexes, resolved)


def parse_file(path: str | os.PathLike[str]) -> Network:
    """Parse a ``.crn`` file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_network(fh.read())


def to_dsl(net: Network) -> str:
    """Serialize a network to DSL text.

    Labels are written explicitly and every reaction appears on its own line
    with a plain ``->`` arrow, so ``parse_network(to_dsl(net)) == net``.
    """
    return "".join(net.reaction_string(i) + "\n" for i in range(net.reaction_count))
