"""Chip-firing with choices, and the digraphs obtained by fixing a cyclic order per edge."""

from hyperchip import catalog
from hyperchip.digraphs import (
    cycling_from_order,
    cycling_parking_sets,
    digraph_from_cycling,
    digraph_parking_enumerate,
    greedy_cycling_cover,
    reduced_laplacian,
    union_over_cyclings,
)
from hyperchip.firing import cancellative_choices, fire_set, fire_vertex, ready_to_fire
from hyperchip.parking import enumerate_parking

H = catalog.running_example()

# vertex 2 sits in e1 and e2; it picks where each chip goes
print(fire_vertex(H, (1, 2, 0), "2", {0: "3", 1: "4"}))
print(fire_vertex(H, (1, 2, 0), "2", {0: "1", 1: "1"}))

# firing T = {1,2,3} from (2,1,0): some cancellative choice goes negative
T = {"1", "2", "3"}
outcomes = sorted({fire_set(H, (2, 1, 0), T, ch) for ch in cancellative_choices(H, T)})
print(len(outcomes), "distinct outcomes, worst", min(outcomes, key=min))
print("ready at (2,1,0)?", ready_to_fire(H, (2, 1, 0), T))
print("ready at (2,1,1)?", ready_to_fire(H, (2, 1, 1), T))

# order 1 < 3 < 2 < 4 sorts each edge into a cycle
C = cycling_from_order(H, ["1", "3", "2", "4"])
D = digraph_from_cycling(H, C)
print("cycling", C.orders)
print("Laplacian", reduced_laplacian(D))
print("parking set", digraph_parking_enumerate(D))

# union over all vertex-induced cyclings recovers every H-parking function
print(union_over_cyclings(H) == enumerate_parking(H))

# orders starting at the sink already suffice here
print(union_over_cyclings(H, sink_first=True) == enumerate_parking(H))
for order, C, configs in cycling_parking_sets(H, sink_first=True):
    print("".join(order), len(configs))

print("greedy cover uses", len(greedy_cycling_cover(H)), "cyclings")
