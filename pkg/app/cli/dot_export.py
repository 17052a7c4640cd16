"""
Export the Hasse diagram of B(x) together with x for plotting with graphviz' dot

Nodes are the bigrassmannian permutations below x plus a separate node for x
itself (drawn as a box), labelled in one-line notation. Edges point upward and
are the covering relations of the triangle order restricted to those nodes.

For example:

    bigrass export-dot 42513 --output below.gv
    dot -Tpng -O below.gv
"""

import logging
from typing import List

import networkx as nx

from app.combinatorics.bigrassmannian import below_set
from app.combinatorics.perm_core import Permutation
from app.combinatorics.triangle import leq, triangle_of_permutation

logger = logging.getLogger(__name__)

TOP_NODE = 'x'


def below_set_digraph(x: Permutation) -> nx.DiGraph:
    """Covering digraph of B(x) and x under the triangle order"""
    graph = nx.DiGraph()
    members = below_set(x).entries
    triangles = {}
    for k, (idx, perm) in enumerate(members):
        node = f'b{k}'
        graph.add_node(node, label=perm.one_line(), index=str(idx))
        triangles[node] = triangle_of_permutation(perm)
    graph.add_node(TOP_NODE, label=x.one_line(), top=True)

    for u, tu in triangles.items():
        graph.add_edge(u, TOP_NODE)
        for v, tv in triangles.items():
            if u != v and leq(tu, tv):
                graph.add_edge(u, v)

    reduced = nx.transitive_reduction(graph)
    reduced.add_nodes_from(graph.nodes(data=True))
    logger.debug(
        f"Hasse diagram of B({x}): {reduced.number_of_nodes()} nodes, "
        f"{reduced.number_of_edges()} covering edges"
    )
    return reduced


def to_dot(graph: nx.DiGraph, name: str = 'below_set') -> str:
    """Graphviz digraph text; node and edge order follow insertion and sorting"""
    lines: List[str] = [f'digraph {name} {{', '\trankdir=BT;']
    for node, attrs in graph.nodes(data=True):
        shape = 'box' if attrs.get('top') else 'ellipse'
        lines.append(f'\t"{node}" [label="{attrs["label"]}", shape={shape}];')
    order = {node: k for k, node in enumerate(graph.nodes)}
    for u, v in sorted(graph.edges, key=lambda e: (order[e[0]], order[e[1]])):
        lines.append(f'\t"{u}" -> "{v}";')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def export_dot(x: Permutation) -> str:
    return to_dot(below_set_digraph(x))
