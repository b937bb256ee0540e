"""Reports for enumerations: DOT export of the element graph and a
matplotlib rendering of its spanning tree.

The DOT digraph carries every discovered edge n -> n * p^k with the
attribute label = p; spanning-tree edges (largest-prime rule) are solid,
the rest dashed.  ``render_tree`` draws the same structure to an image
file for quick visual checks alongside the machine-readable output.
"""

from __future__ import annotations

from collections import defaultdict

from .divset import EnumTree

__all__ = ["render_tree", "to_dot"]


def to_dot(tree: EnumTree, name: str = "members") -> str:
    """DOT digraph for an enumeration's element graph."""
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for n in tree.nodes:
        lines.append(f'  n{n} [label="{n}"];')
    for edge in tree.edges:
        style = "" if edge.spanning else ", style=dashed"
        lines.append(f'  n{edge.src} -> n{edge.dst} [label="{edge.p}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _layout(tree: EnumTree) -> dict[int, tuple[float, int]]:
    """Node positions: x from a depth-first walk of the spanning tree,
    y the negated depth (root at the top)."""
    children: dict[int, list[int]] = defaultdict(list)
    for edge in tree.edges:
        if edge.spanning:
            children[edge.src].append(edge.dst)
    for kids in children.values():
        kids.sort()
    pos: dict[int, tuple[float, int]] = {}
    next_x = 0

    def place(node: int, depth: int) -> float:
        nonlocal next_x
        kids = children.get(node, [])
        if not kids:
            x = float(next_x)
            next_x += 1
        else:
            x = sum(place(kid, depth + 1) for kid in kids) / len(kids)
        pos[node] = (x, -depth)
        return x

    if tree.nodes:
        place(tree.nodes[0], 0)
    return pos


def render_tree(tree: EnumTree, path: str, title: str = "") -> None:
    """Draw the element graph to an image file (format from the extension).

    Spanning-tree edges are solid, other discovered edges dashed.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    pos = _layout(tree)
    depth = max((-y for _, y in pos.values()), default=0)
    width = max((x for x, _ in pos.values()), default=1)
    fig, ax = plt.subplots(figsize=(max(4.0, 1.1 * width + 2), max(3.0, depth + 2)))
    for edge in tree.edges:
        if edge.src not in pos or edge.dst not in pos:
            continue
        (x0, y0), (x1, y1) = pos[edge.src], pos[edge.dst]
        if edge.spanning:
            ax.plot([x0, x1], [y0, y1], color="tab:blue", lw=1.2, zorder=1)
        else:
            ax.plot([x0, x1], [y0, y1], color="0.7", lw=0.8, ls="--", zorder=0)
        ax.annotate(
            str(edge.p),
            ((x0 + x1) / 2, (y0 + y1) / 2),
            fontsize=7,
            color="0.4",
            ha="center",
        )
    for n, (x, y) in pos.items():
        ax.annotate(
            str(n),
            (x, y),
            ha="center",
            va="center",
            fontsize=8,
            bbox=dict(boxstyle="round,pad=0.25", fc="white", ec="tab:blue"),
            zorder=2,
        )
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
