import heapq
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import islice

from models.verdict import ReducerStats, SolveStats, Verdict
from services.matcher_service import MatcherService
from services.reducer_service import DEFAULT_DEDUP_CAP, ReducerService
from utils.errors import CertificateError

logger = logging.getLogger(__name__)


class SolverService:
    """Top-level list-coloring pipeline and its brute-force oracle"""

    @staticmethod
    def decide(instance, dedup_cap=DEFAULT_DEDUP_CAP, parallel=False, workers=4, prune_empty=True):
        """Decide admissibility with a certificate.

        Streams the profile of reduced instances and decides each with the
        matcher, stopping at the first admissible leaf. Leaf lists are subsets
        of the original lists, so a leaf coloring certifies the original
        instance. With ``parallel`` the leaves are decided in ordered batches
        on a thread pool; the first admissible leaf in stream order still
        wins, so the result equals the sequential one.

        With ``prune_empty`` the reducer drops subtrees whose lists run empty;
        they hold no admissible leaf, so the verdict and certificate are
        unchanged.
        """
        started = time.perf_counter()
        stats = SolveStats(ReducerStats())

        def finish(verdict):
            stats.time_ms = (time.perf_counter() - started) * 1000.0
            return verdict

        empty = instance.empty_list_vertices()
        if empty:
            logger.info(f"Vertex {empty[0]} has an empty list; not admissible")
            return finish(Verdict.no(stats))

        leaves = ReducerService.reduce_to_profile(instance, stats.reducer, dedup_cap, prune_empty)
        if parallel:
            coloring = SolverService._first_coloring_parallel(leaves, stats, workers)
        else:
            coloring = SolverService._first_coloring(leaves, stats)

        if coloring is None:
            logger.info(f"Not admissible after {stats.leaves_decided} leaves")
            return finish(Verdict.no(stats))
        if not instance.verify_coloring(coloring):
            raise CertificateError(f"leaf coloring {coloring} does not color the original instance")
        return finish(Verdict.yes(coloring, stats))

    @staticmethod
    def _decide_leaf(leaf):
        if leaf.instance.empty_list_vertices():
            return None
        verdict = MatcherService.decide_reduced(leaf.instance, SolveStats())
        logger.debug(f"Leaf at depth {leaf.depth}: admissible={verdict.admissible}")
        return verdict

    @staticmethod
    def _record(verdict, stats):
        if verdict is None:
            stats.leaves_screened += 1
            return
        stats.leaves_decided += 1
        stats.matcher_phases += verdict.stats.matcher_phases
        stats.gamma_nodes = max(stats.gamma_nodes, verdict.stats.gamma_nodes)

    @staticmethod
    def _first_coloring(leaves, stats):
        for leaf in leaves:
            verdict = SolverService._decide_leaf(leaf)
            SolverService._record(verdict, stats)
            if verdict is not None and verdict.admissible:
                return verdict.coloring
        return None

    @staticmethod
    def _first_coloring_parallel(leaves, stats, workers):
        batch_size = max(1, workers) * 4
        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            while True:
                batch = list(islice(leaves, batch_size))
                if not batch:
                    return None
                verdicts = list(pool.map(SolverService._decide_leaf, batch))
                for verdict in verdicts:
                    SolverService._record(verdict, stats)
                    if verdict is not None and verdict.admissible:
                        return verdict.coloring

    # Oracle

    @staticmethod
    def degeneracy_order(instance):
        """Vertices in reverse smallest-last order, ties broken by smaller id.

        Repeatedly removing a vertex of minimum remaining degree gives the
        smallest-last sequence; coloring it backwards puts the densest core first.
        """
        graph = instance.graph
        degree = [graph.degree(v) for v in range(graph.n)]
        removed = [False] * graph.n
        heap = [(d, v) for v, d in enumerate(degree)]
        heapq.heapify(heap)
        sequence = []
        while heap:
            d, v = heapq.heappop(heap)
            # stale entry from before a neighbor was removed
            if removed[v] or d != degree[v]:
                continue
            removed[v] = True
            sequence.append(v)
            for w in graph.neighbors(v):
                if not removed[w]:
                    degree[w] -= 1
                    heapq.heappush(heap, (degree[w], w))
        sequence.reverse()
        return sequence

    @staticmethod
    def oracle_decide(instance):
        """Exact backtracking with forward checking; exponential, meant for n <= ~20.

        The search keeps one frame per assigned vertex on an explicit stack:
        the vertex, its candidate colors, the next candidate to try and the
        neighbors whose domains lost the current choice.
        """
        started = time.perf_counter()
        stats = SolveStats()
        graph = instance.graph
        order = SolverService.degeneracy_order(instance)
        domains = [set(colors) for colors in instance.lists]
        coloring = [0] * graph.n

        admissible = False
        if all(domains):
            stats.oracle_nodes += 1
            admissible = not order
            frames = [[order[0], sorted(domains[order[0]]), 0, None]] if order else []
            while frames:
                frame = frames[-1]
                v, candidates, position, pruned = frame

                # Undo the choice whose subtree just failed
                if pruned is not None:
                    coloring[v] = 0
                    for w in pruned:
                        domains[w].add(candidates[position - 1])
                    frame[3] = None
                if position == len(candidates):
                    frames.pop()
                    continue

                color = candidates[position]
                frame[2] = position + 1
                pruned = []
                wiped_out = False
                for w in graph.neighbors(v):
                    if coloring[w] == 0 and color in domains[w]:
                        domains[w].discard(color)
                        pruned.append(w)
                        if not domains[w]:
                            wiped_out = True
                            break
                if wiped_out:
                    for w in pruned:
                        domains[w].add(color)
                    continue

                coloring[v] = color
                frame[3] = pruned
                stats.oracle_nodes += 1
                if len(frames) == len(order):
                    admissible = True
                    break
                u = order[len(frames)]
                frames.append([u, sorted(domains[u]), 0, None])

        stats.time_ms = (time.perf_counter() - started) * 1000.0
        if not admissible:
            return Verdict.no(stats)
        return Verdict.yes(tuple(coloring), stats)
