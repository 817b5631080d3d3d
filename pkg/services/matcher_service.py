import logging
from collections import deque

from models.gamma import UNMATCHED, ColorClassDecomposition, GammaGraph, Matching
from models.verdict import SolveStats, Verdict
from utils.errors import CertificateError, PreconditionViolation

logger = logging.getLogger(__name__)

INFINITY = -1


class MatcherService:
    """Decides reduced instances through a saturating matching of the Gamma graph.

    An instance is reduced when no induced P3 has a color common to all three
    lists. Then every color class G_i is a disjoint union of cliques, and a
    coloring is the same thing as a matching of Gamma that covers every vertex
    node: a vertex picks a (color, clique) pair, and a clique can hand its
    color to at most one of its members.
    """

    @staticmethod
    def decompose(instance):
        """Components of every color class, each checked to be a clique of G"""
        # Group vertices by the colors in their lists
        graph = instance.graph
        members = [[] for _ in range(instance.k)]
        for v, colors in enumerate(instance.lists):
            for color in colors:
                members[color - 1].append(v)

        classes = []
        components = []
        for color, vertices in enumerate(members, start=1):
            # Every component of a color class must be a clique of G
            class_components = graph.components_within(vertices)
            for component in class_components:
                if len(component) > 2 and not graph.is_clique(component):
                    raise PreconditionViolation(color, component)
            classes.append(tuple(vertices))
            components.append(class_components)
        return ColorClassDecomposition(instance, classes, components)

    @staticmethod
    def build_gamma(decomposition):
        """One a-node per vertex, one b-node per (color, component)"""
        rows = [[] for _ in range(decomposition.instance.n)]
        labels = []
        for color, class_components in enumerate(decomposition.components, start=1):
            for component in class_components:
                b = len(labels)
                labels.append((color, component))
                for v in component:
                    rows[v].append(b)
        gamma = GammaGraph(decomposition, labels, rows)
        logger.debug(f"Built {gamma}")
        return gamma

    @staticmethod
    def hopcroft_karp(graph):
        """Maximum-cardinality matching by Hopcroft-Karp.

        Each phase layers the graph by BFS from the free left nodes up to the
        first free right node, then augments along vertex-disjoint shortest
        paths with an iterative DFS. The loop stops when a phase finds no
        augmenting path; the phase count is kept on the Matching.
        """
        n_left = graph.n_left
        adjacency = graph.left_adjacency
        pair_left = [UNMATCHED] * n_left
        pair_right = [UNMATCHED] * graph.n_right
        dist = [INFINITY] * n_left
        phases = 0

        while True:
            # BFS layering
            queue = deque()
            for a in range(n_left):
                if pair_left[a] == UNMATCHED:
                    dist[a] = 0
                    queue.append(a)
                else:
                    dist[a] = INFINITY
            limit = INFINITY
            while queue:
                a = queue.popleft()
                if limit != INFINITY and dist[a] >= limit:
                    continue
                next_dist = dist[a] + 1
                for b in adjacency[a]:
                    mate = pair_right[b]
                    if mate == UNMATCHED:
                        if limit == INFINITY:
                            limit = next_dist
                    elif dist[mate] == INFINITY:
                        dist[mate] = next_dist
                        queue.append(mate)
            if limit == INFINITY:
                break
            phases += 1

            # DFS augmentation along the layers
            cursor = [0] * n_left
            for root in range(n_left):
                if pair_left[root] != UNMATCHED or dist[root] != 0:
                    continue
                stack = [root]
                path = []
                while stack:
                    a = stack[-1]
                    row = adjacency[a]
                    advanced = False
                    while cursor[a] < len(row):
                        b = row[cursor[a]]
                        cursor[a] += 1
                        mate = pair_right[b]
                        # Free right node on the last layer: flip the whole path
                        if mate == UNMATCHED:
                            if dist[a] + 1 == limit:
                                path.append(b)
                                for left, right in zip(stack, path):
                                    pair_left[left] = right
                                    pair_right[right] = left
                                stack = []
                                advanced = True
                                break
                        # Descend one layer through the mate
                        elif dist[mate] == dist[a] + 1:
                            path.append(b)
                            stack.append(mate)
                            advanced = True
                            break
                    # Dead end: retire a for the rest of this phase
                    if not advanced:
                        dist[a] = INFINITY
                        stack.pop()
                        if path:
                            path.pop()

        matching = Matching(pair_left, graph.n_right, phases)
        logger.debug(f"Hopcroft-Karp finished: {matching}")
        return matching

    @staticmethod
    def extract_coloring(gamma, matching):
        """Color every vertex with the color of the b-node matched to it"""
        if not matching.saturates_left():
            raise ValueError("matching does not cover every vertex node")
        coloring = tuple(gamma.color_of(b) for b in matching.pair_left)
        if not gamma.instance.verify_coloring(coloring):
            raise CertificateError(f"extracted coloring {coloring} is not an L-coloring")
        return coloring

    @staticmethod
    def decide_reduced(instance, stats=None):
        """Admissible iff the Gamma graph has a matching covering every vertex node"""
        stats = stats if stats is not None else SolveStats()
        gamma = MatcherService.build_gamma(MatcherService.decompose(instance))
        matching = MatcherService.hopcroft_karp(gamma)
        stats.matcher_phases += matching.phases
        stats.gamma_nodes = max(stats.gamma_nodes, gamma.node_count)

        # Some vertex node is left uncovered
        if matching.size < gamma.n_left:
            logger.debug(f"Reduced instance not admissible: matching {matching.size} < {gamma.n_left}")
            return Verdict.no(stats)
        return Verdict.yes(MatcherService.extract_coloring(gamma, matching), stats)
