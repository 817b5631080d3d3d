"""Independent brute-force oracles and seeded builders shared by the test suites."""
import itertools
import random
from collections import deque
from functools import lru_cache

from models.gamma import UNMATCHED, BipartiteGraph
from models.graph import Graph
from models.instance import Instance


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_lists(rng, n, k, empty_probability=0.0):
    lists = []
    for _ in range(n):
        if rng.random() < empty_probability:
            lists.append([])
        else:
            size = rng.randint(1, k)
            lists.append(sorted(rng.sample(range(1, k + 1), size)))
    return lists


def random_instance(rng, n, k, p, empty_probability=0.0):
    return Instance(random_graph(rng, n, p), k, random_lists(rng, n, k, empty_probability))


def cluster_graph(rng, n, max_block):
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    start = 0
    while start < n:
        block = order[start:start + rng.randint(1, max_block)]
        edges.extend((u, v) for i, u in enumerate(block) for v in block[i + 1:])
        start += len(block)
    return Graph(n, edges)


def triple_scan_p3s(graph):
    """All induced P3s as (x, middle, z) with x < z, by checking every 3-subset"""
    found = set()
    for a, b, c in itertools.combinations(range(graph.n), 3):
        for x, y, z in ((b, a, c), (a, b, c), (a, c, b)):
            if graph.has_edge(x, y) and graph.has_edge(y, z) and not graph.has_edge(x, z):
                found.add((min(x, z), y, max(x, z)))
    return found


def flood_fill_components(graph):
    components = []
    seen = set()
    for start in range(graph.n):
        if start in seen:
            continue
        reach = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for w in range(graph.n):
                if w not in reach and graph.has_edge(u, w):
                    reach.add(w)
                    frontier.append(w)
        seen |= reach
        components.append(tuple(sorted(reach)))
    return components


def has_disjoint_p3s(graph, r):
    """Exhaustive: some r-subset of induced P3s is pairwise disjoint"""
    triples = sorted(triple_scan_p3s(graph))
    for combo in itertools.combinations(triples, r):
        vertices = [v for triple in combo for v in triple]
        if len(set(vertices)) == len(vertices):
            return True
    return False


def is_induced_p3(graph, triple):
    x, y, z = triple
    return len({x, y, z}) == 3 and graph.has_edge(x, y) and graph.has_edge(y, z) and not graph.has_edge(x, z)


def violating_triple_scan(instance):
    """True iff some induced P3 has a color common to all three lists"""
    for x, y, z in triple_scan_p3s(instance.graph):
        if instance.list_set(x) & instance.list_set(y) & instance.list_set(z):
            return True
    return False


def enumerate_decide(instance):
    """Try every assignment from the product of the lists"""
    for coloring in itertools.product(*instance.lists):
        if instance.verify_coloring(coloring):
            return True
    return False


def brute_max_matching(graph):
    """Maximum matching size by DP over (left index, used right nodes)"""
    rows = graph.left_adjacency

    @lru_cache(maxsize=None)
    def best(index, used):
        if index == len(rows):
            return 0
        value = best(index + 1, used)
        for b in rows[index]:
            if not used >> b & 1:
                value = max(value, 1 + best(index + 1, used | 1 << b))
        return value

    return best(0, 0)


def has_augmenting_path(graph, matching):
    """Alternating BFS from every free left node to some free right node"""
    pair_right = matching.pair_right()
    queue = deque(a for a in range(graph.n_left) if matching.pair_left[a] == UNMATCHED)
    seen_left = set(queue)
    while queue:
        a = queue.popleft()
        for b in graph.left_adjacency[a]:
            mate = pair_right[b]
            if mate == UNMATCHED:
                return True
            if mate not in seen_left:
                seen_left.add(mate)
                queue.append(mate)
    return False


def random_bipartite(rng, n_left, n_right, p):
    return BipartiteGraph.from_edges(
        n_left, n_right, [(a, b) for a in range(n_left) for b in range(n_right) if rng.random() < p]
    )


def random_permutation(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
