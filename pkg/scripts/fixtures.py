"""Spectral radii of the two four-vertex fixtures and the deletions that change them."""

from hermspec.graph import delete_edge, delete_vertex, parse_mixed_graph
from hermspec.spectra import charpoly_leverrier, compare_radius, spectral_radius

D1 = parse_mixed_graph("v 4\n0 -- 1\n0 -- 3\n1 -- 3\n1 -> 2\n2 -> 3\n")
D2 = parse_mixed_graph("v 4\n3 -> 0\n0 -> 2\n2 -> 3\n0 -- 1\n1 -- 2\n1 -- 3\n")

CASES = [
    ("D1", D1),
    ("D1 - v3", delete_vertex(D1, 2)[0]),
    ("D1 - v3v4", delete_edge(D1, 2, 3)),
    ("D2", D2),
    ("D2 - u2", delete_vertex(D2, 1)[0]),
    ("D2 - u1u3", delete_edge(D2, 0, 2)),
]


def main():
    for name, D in CASES:
        cmp = compare_radius(D)
        print(f"{name:10s} rho = {spectral_radius(D):.9f}  vs 2: {cmp.result.value:8s} phi = {charpoly_leverrier(D)}")


if __name__ == "__main__":
    main()
