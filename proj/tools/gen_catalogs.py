#!/usr/bin/env python3
"""Regenerates the graph6 catalogs under data/.

Uses the networkx graph atlas (all graphs up to 7 vertices, one per
isomorphism class) and its non-isomorphic tree generator. The committed
files are the source of truth for tests; rerun this only to extend them.
"""

import pathlib

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

OUT = pathlib.Path(__file__).resolve().parent.parent / "data"

EXPECTED_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
EXPECTED_TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}


def g6(graph: nx.Graph) -> str:
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def main() -> None:
    OUT.mkdir(exist_ok=True)
    atlas = graph_atlas_g()
    for n, expected in EXPECTED_GRAPH_COUNTS.items():
        graphs = [g for g in atlas if g.number_of_nodes() == n]
        assert len(graphs) == expected, (n, len(graphs))
        path = OUT / f"graphs{n}.g6"
        path.write_text("".join(g6(g) + "\n" for g in graphs))
        print(f"{path}: {len(graphs)} graphs")
    for n, expected in EXPECTED_TREE_COUNTS.items():
        trees = [nx.path_graph(n)] if n <= 2 else list(nx.nonisomorphic_trees(n))
        assert len(trees) == expected, (n, len(trees))
        path = OUT / f"trees{n}.g6"
        path.write_text("".join(g6(t) + "\n" for t in trees))
        print(f"{path}: {len(trees)} trees")


if __name__ == "__main__":
    main()
