"""Exact counts: star hypergraphs, complete hypergraphs, and the cut ideal."""

from hyperchip import catalog
from hyperchip.counting import acyclic_count_complete_bipartite, maximal_u_parking, steck_count, u_vector_complete
from hyperchip.digraphs import laplacian_determinant, reduced_laplacian, star_digraph
from hyperchip.ideal import cut_ideal_generators, format_monomial, minimal_generators
from hyperchip.parking import enumerate_parking, maximal_parking
from hyperchip.trees import tree_classes

# every edge of a star hypergraph contains the sink
S = catalog.star_example()
D = star_digraph(S)
L = reduced_laplacian(D)
for name, row in zip(D.nonsink, L):
    print(f"{str(name):>3}", row)
print("det", laplacian_determinant(L))
print(len(enumerate_parking(S)), "parking functions,", len(tree_classes(S)), "tree classes")
print("degrees", S.degrees(), "maximal", maximal_parking(S))

# complete 3-uniform hypergraph on 5 vertices: parking functions are u-parking functions
u = u_vector_complete(4, 3)
print("u =", u, "count =", steck_count(u))
print(len(maximal_u_parking(u)), "maximal, e.g.", maximal_u_parking(u)[:3])
print("check by enumeration:", len(enumerate_parking(catalog.complete_hypergraph(5, 3))))

for m, n in [(2, 2), (3, 3), (4, 5)]:
    print(f"K_{m},{n}:", acyclic_count_complete_bipartite(m, n), "acyclic orientations")

# standard monomials of the cut ideal are exactly the parking functions
H = catalog.running_example()
gens = minimal_generators(cut_ideal_generators(H).values())
print("M_H =", ", ".join(format_monomial(g) for g in gens))
