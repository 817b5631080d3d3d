import logging
from enum import Enum
from models.graph import Graph
from models.instance import Instance
from utils.errors import RejectionBudgetExceeded, ValidationSkipped
from utils.prng import SplitMix64

logger = logging.getLogger(__name__)


class GenerationMode(Enum):
    CLUSTER = "cluster"
    RP3FREE = "rp3free"
    RANDOM = "random"
    PLANTED = "planted"


class GeneratorService:
    """Seeded instance generators.

    Every draw comes from one SplitMix64 stream seeded with ``seed``, consumed
    in this order: the graph, then one list per vertex in increasing vertex
    order (skipped with ``full_lists``). The same arguments always give the
    same instance, byte for byte once written.
    """

    @staticmethod
    def cluster_edges(rng, vertices, max_clique):
        """Shuffle the vertices, cut them into blocks of 1..max_clique, make each block a clique"""
        order = list(vertices)
        rng.shuffle(order)
        edges = []
        start = 0
        while start < len(order):
            size = 1 + rng.randrange(max_clique)
            block = order[start:start + size]
            edges.extend((u, v) for i, u in enumerate(block) for v in block[i + 1:])
            start += size
        return edges

    @staticmethod
    def gnp_edges(rng, n, density):
        """Each pair u < v, in lexicographic order, is an edge with probability density"""
        return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]

    @staticmethod
    def generate(mode, n, k, seed, r=1, density=0.3, full_lists=False, max_clique=None, cap=60,
                 budget=10_000):
        """Generate an instance in the given mode"""
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        if k < 1 or r < 1:
            raise ValueError("k and r must be at least 1")
        if not 0.0 <= density <= 1.0:
            raise ValueError(f"density must lie in [0, 1], got {density}")

        # Graph first, then lists, from one stream
        rng = SplitMix64(seed)
        if mode is GenerationMode.CLUSTER:
            graph = Graph(n, GeneratorService.cluster_edges(rng, list(range(n)), max_clique or k))
        elif mode is GenerationMode.RANDOM:
            graph = Graph(n, GeneratorService.gnp_edges(rng, n, density))
        elif mode is GenerationMode.RP3FREE:
            graph = GeneratorService._rejection_sample(rng, n, r, density, cap, budget)
        else:
            graph = GeneratorService._planted(rng, n, r, density, max_clique or k)

        # One list per vertex in increasing order
        if full_lists:
            return Instance.full(graph, k)
        return Instance(graph, k, [rng.nonempty_subset(k) for _ in range(n)])

    @staticmethod
    def _rejection_sample(rng, n, r, density, cap, budget):
        if n > cap:
            raise ValidationSkipped(n, cap)
        for draw in range(1, budget + 1):
            graph = Graph(n, GeneratorService.gnp_edges(rng, n, density))
            if graph.find_disjoint_induced_p3s(r, cap=cap) is None:
                logger.info(f"Accepted an {r}P3-free graph after {draw} draws")
                return graph
        raise RejectionBudgetExceeded(budget)

    @staticmethod
    def _planted(rng, n, r, density, max_clique):
        """Cluster graph plus r-1 extra vertices with random adjacency.

        The cluster part has no induced P3, so every induced P3 uses an extra
        vertex and at most r-1 of them can be pairwise disjoint.
        """
        extras = min(r - 1, n)
        base = n - extras
        edges = GeneratorService.cluster_edges(rng, list(range(base)), max_clique)
        for x in range(base, n):
            edges.extend((v, x) for v in range(x) if rng.random() < density)
        permutation = rng.permutation(n)
        return Graph(n, ((permutation[u], permutation[v]) for u, v in edges))
