from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hyperchip import RootedHypergraph

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")


def _components(labels, edges):
    parent = {v: v for v in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        for v in e[1:]:
            parent[find(v)] = find(e[0])
    groups = {}
    for v in labels:
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


@st.composite
def hypergraphs(draw, max_nonsink=5, max_edges=6, max_edge_size=4, min_nonsink=1):
    """Connected hypergraphs with repeated edges allowed.

    Stray components are glued on by enlarging an edge, so every draw is usable.
    """
    n = draw(st.integers(min_nonsink, max_nonsink))
    labels = [str(i) for i in range(1, n + 2)]
    edges = []
    for _ in range(draw(st.integers(1, max_edges))):
        k = draw(st.integers(2, min(max_edge_size, n + 1)))
        edges.append(list(draw(st.sampled_from(list(combinations(labels, k))))))
    comps = _components(labels, edges)
    while len(comps) > 1:
        a, b = comps[0][0], comps[1][0]
        k = draw(st.sampled_from([i for i, e in enumerate(edges) if a in e] or range(len(edges))))
        edges[k] += [v for v in (a, b) if v not in edges[k]]
        comps = _components(labels, edges)
    sink = draw(st.sampled_from(labels))
    return RootedHypergraph(tuple(labels), tuple(tuple(e) for e in edges), sink)


@st.composite
def graphs(draw, max_nonsink=5, max_edges=6):
    """Connected multigraphs as 2-regular hypergraphs: a random tree plus extra edges."""
    n = draw(st.integers(1, max_nonsink))
    labels = [str(i) for i in range(1, n + 2)]
    edges = [(labels[draw(st.integers(0, i - 1))], labels[i]) for i in range(1, n + 1)]
    pairs = list(combinations(labels, 2))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=max(0, max_edges - n)))
    sink = draw(st.sampled_from(labels))
    return RootedHypergraph(tuple(labels), tuple(edges + extra), sink)


@st.composite
def configs(draw, H, slack=1):
    """Configurations in the box [0, deg(i) - 1 + slack]."""
    return tuple(draw(st.integers(0, d - 1 + slack)) for d in H.degrees())


@st.composite
def hypergraph_and_config(draw, slack=1, **kw):
    H = draw(hypergraphs(**kw))
    return H, draw(configs(H, slack))


@st.composite
def nonempty_subsets(draw, H):
    mask = draw(st.integers(1, (1 << H.n) - 1))
    return H.labels_of(mask)


# acceptance lines, echoed in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
