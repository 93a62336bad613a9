"""Regenerate the graph6 assets under data/.

Every asset is validated again at load time by the Rust catalog against its
expected intersection array, so this script is not trusted; it only records
how the files were produced. Requires networkx.
"""
import itertools
import pathlib

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parent.parent / "data"


def relabel(g):
    return nx.convert_node_labels_to_integers(g, ordering="sorted" if all(
        isinstance(v, int) for v in g) else "default")


def write(name, g):
    g = relabel(g)
    data = nx.to_graph6_bytes(g, nodes=sorted(g), header=False)
    (OUT / f"{name}.g6").write_bytes(data)
    print(name, g.number_of_nodes(), g.number_of_edges())


def lcf(n, shifts, repeats):
    return nx.LCF_graph(n, shifts, repeats)


def biggs_smith():
    # four 17-gons with steps 1, 2, 4, 8 joined by H-shaped spokes
    g = nx.Graph()
    for i in range(17):
        for k, s in enumerate((1, 2, 4, 8)):
            g.add_edge((k, i), (k, (i + s) % 17))
        g.add_edge((4, i), (5, i))
        g.add_edge((4, i), (0, i))
        g.add_edge((4, i), (2, i))
        g.add_edge((5, i), (1, i))
        g.add_edge((5, i), (3, i))
    return nx.convert_node_labels_to_integers(g, ordering="sorted")


def hoffman_singleton():
    g = nx.Graph()
    for h in range(5):
        for j in range(5):
            g.add_edge(("P", h, j), ("P", h, (j + 1) % 5))
            g.add_edge(("Q", h, j), ("Q", h, (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                g.add_edge(("P", h, j), ("Q", i, (h * i + j) % 5))
    return g


def sylvester():
    # Hoffman-Singleton graph minus the closed neighbourhood of an edge
    h = hoffman_singleton()
    u, v = ("P", 0, 0), ("P", 0, 1)
    drop = {u, v} | set(h[u]) | set(h[v])
    g = h.subgraph(sorted(x for x in h if x not in drop)).copy()
    return nx.convert_node_labels_to_integers(g, ordering="sorted")


def coxeter():
    # Odd graph O_4 with the seven lines of a Fano plane removed
    fano = [{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}]
    verts = [c for c in itertools.combinations(range(7), 3) if set(c) not in fano]
    g = nx.Graph()
    g.add_nodes_from(range(len(verts)))
    for a, b in itertools.combinations(range(len(verts)), 2):
        if not set(verts[a]) & set(verts[b]):
            g.add_edge(a, b)
    return g


def shrikhande():
    g = nx.Graph()
    conn = [(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)]
    for x in range(4):
        for y in range(4):
            for dx, dy in conn:
                g.add_edge(4 * x + y, 4 * ((x + dx) % 4) + (y + dy) % 4)
    return g


def main():
    OUT.mkdir(exist_ok=True)
    write("petersen", nx.petersen_graph())
    write("heawood", nx.heawood_graph())
    write("pappus", nx.pappus_graph())
    write("desargues", nx.desargues_graph())
    write("dodecahedron", nx.dodecahedral_graph())
    write("shrikhande", shrikhande())
    write("coxeter", coxeter())
    write("sylvester", sylvester())
    write("tutte-8-cage", lcf(30, [-13, -9, 7, -7, 9, 13], 5))
    write("foster", lcf(90, [17, -9, 37, -37, 9, -17], 15))
    write("biggs-smith", biggs_smith())
    t12 = lcf(126, [17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21,
                    57, 11, -21, -57, 59, -17], 7)
    write("tutte-12-cage", t12)
    sides = nx.bipartite.sets(t12)
    for tag, side in zip("ab", sorted(sides, key=min)):
        side = sorted(side)
        half = nx.Graph()
        half.add_nodes_from(side)
        for x, y in itertools.combinations(side, 2):
            if set(t12[x]) & set(t12[y]):
                half.add_edge(x, y)
        write(f"gh22-point-{tag}", nx.convert_node_labels_to_integers(half, ordering="sorted"))


if __name__ == "__main__":
    main()
