class ReducerStats:
    """Counters kept by the profile reducer while it branches"""

    def __init__(self):
        self.leaves = 0
        self.branches = 0
        self.max_depth = 0
        self.dedup_hits = 0
        self.dedup_saturated = False
        self.pruned = 0

    def __str__(self):
        return (f"ReducerStats(leaves={self.leaves}, branches={self.branches}, "
                f"max_depth={self.max_depth}, dedup_hits={self.dedup_hits}, pruned={self.pruned})")

    def __repr__(self):
        return self.__str__()


class ProfileLeaf:
    """One member of the profile: same graph, pointwise smaller lists, no common-color P3"""

    __slots__ = ('instance', 'depth')

    def __init__(self, instance, depth):
        self.instance = instance
        self.depth = depth

    def __str__(self):
        return f"ProfileLeaf(depth={self.depth}, total_list_size={self.instance.total_list_size()})"

    def __repr__(self):
        return self.__str__()


class SolveStats:
    """Counters collected on every solve"""

    def __init__(self, reducer=None):
        self.leaves_decided = 0
        self.leaves_screened = 0
        self.matcher_phases = 0
        self.gamma_nodes = 0
        self.oracle_nodes = 0
        self.time_ms = 0.0
        self.reducer = reducer if reducer is not None else ReducerStats()


class Verdict:
    """Admissible with a certificate coloring, or not admissible"""

    def __init__(self, admissible, coloring=None, stats=None):
        if admissible and coloring is None:
            raise ValueError("an admissible verdict needs a certificate coloring")
        if not admissible and coloring is not None:
            raise ValueError("a non-admissible verdict carries no coloring")
        self.admissible = admissible
        self.coloring = tuple(coloring) if coloring is not None else None
        self.stats = stats if stats is not None else SolveStats()

    @classmethod
    def yes(cls, coloring, stats=None):
        return cls(True, coloring, stats)

    @classmethod
    def no(cls, stats=None):
        return cls(False, None, stats)

    def to_dict(self):
        """JSON form of a solve result; vertex keys are 1-based as in instance files"""
        return {
            'admissible': self.admissible,
            'coloring': (
                {str(v + 1): color for v, color in enumerate(self.coloring)}
                if self.coloring is not None else None
            ),
            'leaves_decided': self.stats.leaves_decided,
            'branches': self.stats.reducer.branches,
            'max_depth': self.stats.reducer.max_depth,
            'time_ms': round(self.stats.time_ms, 3),
        }

    def __str__(self):
        return f"Verdict(admissible={self.admissible})"

    def __repr__(self):
        return self.__str__()
