import logging

from models.verdict import ProfileLeaf, ReducerStats

logger = logging.getLogger(__name__)

DEFAULT_DEDUP_CAP = 1_000_000
PROGRESS_EVERY = 10_000


class ReducerService:
    """Turns an instance into a profile of reduced instances.

    At a node with a violating triple ((x, y, z), c) the reducer branches on
    removing c from L(x), L(y) or L(z). Any L-coloring survives in some child:
    y is adjacent to x and z, so x, y and z cannot all be colored c. Each
    child has a strictly smaller total list size, so the tree is finite, and
    every leaf has pointwise smaller lists than the root.
    """

    @staticmethod
    def list_key(instance):
        """All lists packed into one integer, bit v * (k + 1) + c for color c in L(v)"""
        stride = instance.k + 1
        key = 0
        for v, colors in enumerate(instance.lists):
            for color in colors:
                key |= 1 << (v * stride + color)
        return key

    @staticmethod
    def dedup_key(instance):
        """Graph fingerprint followed by the exact list bitmasks"""
        width = (instance.n * (instance.k + 1) + 7) // 8
        return instance.graph.fingerprint + ReducerService.list_key(instance).to_bytes(width, 'little')

    @staticmethod
    def reduce_to_profile(instance, stats=None, dedup_cap=DEFAULT_DEDUP_CAP, prune_empty=False):
        """Lazily yield the leaves of the branching tree, depth first.

        Children are explored in the order x, y, z. States already seen are
        skipped while the visited set is below ``dedup_cap``; once it is full,
        no further states are recorded. Leaves with an empty list are yielded
        like any other leaf, unless ``prune_empty`` is set: then a child whose
        list would become empty is dropped along with its whole subtree, since
        no descendant of it can be colored.
        """
        stats = stats if stats is not None else ReducerStats()
        # the graph is shared by every node, so packed lists identify a state
        stride = instance.k + 1
        visited = set()
        # (node, depth, packed lists, first middle vertex still worth scanning)
        stack = [(instance, 0, ReducerService.list_key(instance), 0)]

        while stack:
            node, depth, key, start = stack.pop()

            if dedup_cap > 0:
                if key in visited:
                    stats.dedup_hits += 1
                    continue
                if len(visited) < dedup_cap:
                    visited.add(key)
                elif not stats.dedup_saturated:
                    stats.dedup_saturated = True
                    logger.info(f"Dedup set reached its cap of {dedup_cap} states")

            stats.branches += 1
            stats.max_depth = max(stats.max_depth, depth)
            if stats.branches % PROGRESS_EVERY == 0:
                logger.debug(f"Reducer progress: {stats}")

            # lists only shrink, so middles before the parent's are still clean
            violation = node.find_violating_triple(start)
            if violation is None:
                stats.leaves += 1
                yield ProfileLeaf(node, depth)
                continue

            (x, y, z), color = violation
            for v in (z, y, x):
                if prune_empty and len(node.lists[v]) == 1:
                    stats.pruned += 1
                    continue
                child_key = key & ~(1 << (v * stride + color))
                if dedup_cap > 0 and child_key in visited:
                    stats.dedup_hits += 1
                    continue
                stack.append((node.remove_color(v, color), depth + 1, child_key, y))
