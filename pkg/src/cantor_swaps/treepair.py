"""Tree-pair diagrams for elements of V, with ASCII and DOT rendering."""

from __future__ import annotations

from dataclasses import dataclass

from .address import Address, format_address
from .element import VElement


@dataclass(frozen=True)
class TreePair:
    """Leaves are listed left to right.  Domain leaf ``i`` carries number
    ``i + 1``; ``range_numbering[j]`` is the number carried by range leaf
    ``j``, i.e. the domain leaf that maps onto it."""

    domain_leaves: tuple[Address, ...]
    range_leaves: tuple[Address, ...]
    range_numbering: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.domain_leaves)

    @property
    def domain_numbering(self) -> tuple[int, ...]:
        return tuple(range(1, self.size + 1))

    @property
    def leaf_permutation(self) -> dict[int, int]:
        """Domain leaf number -> position (1-based) of its image leaf."""
        return {num: pos + 1 for pos, num in enumerate(self.range_numbering)}

    def to_element(self) -> VElement:
        pairs = []
        for pos, num in enumerate(self.range_numbering):
            pairs.append((self.domain_leaves[num - 1], self.range_leaves[pos]))
        return VElement.from_pairs(pairs)

    def render_ascii(self) -> str:
        left = _tree_lines(self.domain_leaves, self.domain_numbering)
        right = _tree_lines(self.range_leaves, self.range_numbering)
        width = max(len(s) for s in left)
        rows = max(len(left), len(right))
        left += [""] * (rows - len(left))
        right += [""] * (rows - len(right))
        out = []
        for i, (a, b) in enumerate(zip(left, right)):
            mid = " --> " if i == 0 else "     "
            out.append((a.ljust(width) + mid + b).rstrip())
        return "\n".join(out)

    def render_dot(self, name: str = "treepair") -> str:
        lines = [f"digraph {name} {{", "  node [shape=circle, width=0.15, label=\"\"];"]
        for side, leaves, nums in (
            ("d", self.domain_leaves, self.domain_numbering),
            ("r", self.range_leaves, self.range_numbering),
        ):
            label = "domain" if side == "d" else "range"
            lines.append(f"  subgraph cluster_{label} {{")
            lines.append(f"    label=\"{label}\";")
            number = dict(zip(leaves, nums))
            for node in _internal_nodes(leaves) + list(leaves):
                ident = f"{side}_{format_address(node)}"
                if node in number:
                    lines.append(
                        f"    {ident} [shape=plaintext, label=\"{number[node]}\", "
                        f"tooltip=\"{format_address(node)}\"];"
                    )
                else:
                    lines.append(f"    {ident} [tooltip=\"{format_address(node)}\"];")
            for node in _internal_nodes(leaves):
                for x in "01":
                    lines.append(
                        f"    {side}_{format_address(node)} -> {side}_{format_address(node + x)};"
                    )
            lines.append("  }")
        lines.append("}")
        return "\n".join(lines)


def to_tree_pair(f: VElement) -> TreePair:
    table = f.table
    domain = tuple(sorted(table))
    rng = tuple(sorted(table.values()))
    number_of = {d: i + 1 for i, d in enumerate(domain)}
    preimage = {r: d for d, r in table.items()}
    return TreePair(domain, rng, tuple(number_of[preimage[r]] for r in rng))


def _internal_nodes(leaves) -> list[Address]:
    nodes = set()
    for leaf in leaves:
        for k in range(len(leaf)):
            nodes.add(leaf[:k])
    return sorted(nodes)


def _tree_lines(leaves, numbers) -> list[str]:
    number = dict(zip(leaves, numbers))
    lines: list[str] = []

    def walk(node: Address, prefix: str, tail: str):
        tag = format_address(node) if node else "*"
        if node in number:
            tag = f"{format_address(node)} [{number[node]}]"
        lines.append(prefix + tail + tag)
        if node in number:
            return
        pad = prefix + ("" if not tail else ("  " if tail.startswith("└") else "│ "))
        walk(node + "0", pad, "├─")
        walk(node + "1", pad, "└─")

    walk("", "", "")
    return lines
