"""Walk through the three-triangle hypergraph: parking functions, orientations, trees."""

from hyperchip import catalog
from hyperchip.core import EdgeNode
from hyperchip.parking import bounded_sets, enumerate_acyclic_orientations, enumerate_parking, orientation_to_config
from hyperchip.trees import class_canonical_tree, hypertree_of, parking_to_tree, tree_classes, tree_to_parking

H = catalog.running_example()
print("vertices", H.vertices, "sink", H.sink)
print("edges", [f"{EdgeNode(k)}={''.join(e)}" for k, e in enumerate(H.edges)])

# the parking functions form an order ideal with 11 elements
configs = enumerate_parking(H)
print(len(configs), "parking functions:", configs)

# (2,1,1) fails because {1,2,3} is bounded: every vertex has at least its cut degree
print("bounded sets of (2,1,1):", [sorted(T) for T in bounded_sets(H, (2, 1, 1))])

# each acyclic orientation rooted at the sink gives one maximal parking function
for o in enumerate_acyclic_orientations(H):
    chosen = {str(EdgeNode(k)): v for k, v in enumerate(o)}
    print("orientation", chosen, "->", orientation_to_config(H, o))

# spanning trees of B(H) up to burning equivalence, one per parking function
print(len(tree_classes(H)), "tree classes")

beta = ["4", "3", "2", "1", EdgeNode(2), EdgeNode(1), EdgeNode(0)]
tree, cls = parking_to_tree(H, (1, 1, 0), beta)
print("(1,1,0) ->", cls.to_json())
print("tree edges:", sorted(f"{e}-{v}" for e, v in tree.edges))
print("hypertree:", hypertree_of(H, tree))

# the canonical member of the class reads back with zeros on the edge-nodes
canon = class_canonical_tree(H, cls, beta)
print("canonical tree reads back as", tree_to_parking(H, canon, beta))
