#!/usr/bin/env python3
"""Regenerate the graph6 catalogs under data/graphs.

graphs_upto7.g6  every graph on 1..7 vertices (networkx graph atlas order)
cubic8.g6        connected cubic graphs on 8 vertices, one per isomorphism class
"""
import itertools
import pathlib

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "graphs"


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def cubic_graphs(n):
    found = []

    def extend(g, v):
        if v == n:
            if nx.is_connected(g) and not any(nx.is_isomorphic(g, h) for h in found):
                found.append(g.copy())
            return
        need = 3 - g.degree(v)
        candidates = [w for w in range(v + 1, n) if g.degree(w) < 3]
        for ws in itertools.combinations(candidates, need):
            for w in ws:
                g.add_edge(v, w)
            extend(g, v + 1)
            for w in ws:
                g.remove_edge(v, w)

    g = nx.empty_graph(n)
    extend(g, 0)
    return found


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() > 0]
    (OUT / "graphs_upto7.g6").write_text("".join(g6(g) + "\n" for g in atlas))
    (OUT / "cubic8.g6").write_text("".join(g6(g) + "\n" for g in cubic_graphs(8)))


if __name__ == "__main__":
    main()
