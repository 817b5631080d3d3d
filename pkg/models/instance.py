from enum import Enum

from utils.errors import InstanceError, ValidationSkipped


class Instance:
    """A graph together with a list-k-assignment.

    Colors are 1..k. ``lists[v]`` is the sorted tuple of colors allowed at v.
    r is not part of an instance: rP3-freeness never affects correctness and
    is only checked by ``validate``.
    """

    __slots__ = ('graph', 'k', 'lists', '_list_sets')

    def __init__(self, graph, k, lists=None):
        if k < 1:
            raise InstanceError(f"k must be at least 1, got {k}")

        if lists is None:
            normalized = [tuple(range(1, k + 1))] * graph.n
        else:
            normalized = [tuple(sorted(set(colors))) for colors in lists]
        if len(normalized) != graph.n:
            raise InstanceError(f"expected {graph.n} lists, got {len(normalized)}")
        for v, colors in enumerate(normalized):
            if colors and (colors[0] < 1 or colors[-1] > k):
                raise InstanceError(f"list of vertex {v} has a color outside 1..{k}: {list(colors)}")

        self.graph = graph
        self.k = k
        self.lists = tuple(normalized)
        self._list_sets = tuple(frozenset(c) for c in normalized)

    @classmethod
    def _from_checked(cls, graph, k, lists, list_sets):
        """Build from lists that are already sorted, deduplicated and in range"""
        instance = cls.__new__(cls)
        instance.graph = graph
        instance.k = k
        instance.lists = lists
        instance._list_sets = list_sets
        return instance

    @classmethod
    def full(cls, graph, k):
        """Plain k-coloring instance: every list is [k]"""
        return cls(graph, k)

    @property
    def n(self):
        return self.graph.n

    def list_set(self, v):
        return self._list_sets[v]

    def has_color(self, v, color):
        return color in self._list_sets[v]

    def total_list_size(self):
        return sum(len(colors) for colors in self.lists)

    def empty_list_vertices(self):
        return [v for v, colors in enumerate(self.lists) if not colors]

    def with_lists(self, lists):
        """Same graph and k, new lists"""
        return Instance(self.graph, self.k, lists)

    def remove_color(self, v, color):
        """Copy of the instance with ``color`` removed from L(v)"""
        if color not in self._list_sets[v]:
            return self
        # only L(v) changes; every other list is shared with the parent
        lists = self.lists[:v] + (tuple(c for c in self.lists[v] if c != color),) + self.lists[v + 1:]
        list_sets = self._list_sets[:v] + (self._list_sets[v] - {color},) + self._list_sets[v + 1:]
        return Instance._from_checked(self.graph, self.k, lists, list_sets)

    def verify_coloring(self, coloring):
        """True iff the coloring is total, proper and respects every list"""
        if len(coloring) != self.n:
            return False
        for v, color in enumerate(coloring):
            if color not in self._list_sets[v]:
                return False
        return all(coloring[u] != coloring[v] for u, v in self.graph.edges())

    def find_violating_triple(self, start=0):
        """First induced P3 whose three lists share a color.

        Triples are scanned in the order of Graph.iter_induced_p3s and the
        smallest shared color is reported. None means every induced P3 has
        L(x) & L(y) & L(z) empty. ``start`` skips middles below it; callers
        pass it only when those middles are known to be clean.
        """
        graph = self.graph
        sets = self._list_sets
        for y in range(start, graph.n):
            y_colors = sets[y]
            if not y_colors:
                continue
            nbrs = graph.adjacency[y]
            for i, x in enumerate(nbrs):
                xy_colors = y_colors & sets[x]
                if not xy_colors:
                    continue
                x_nbrs = graph.neighbor_set(x)
                for z in nbrs[i + 1:]:
                    if z in x_nbrs:
                        continue
                    shared = xy_colors & sets[z]
                    if shared:
                        return (x, y, z), min(shared)
        return None

    def relabel(self, permutation):
        """Instance with vertex v renamed to permutation[v], lists moved along"""
        lists = [()] * self.n
        for v, colors in enumerate(self.lists):
            lists[permutation[v]] = colors
        return Instance(self.graph.relabel(permutation), self.k, lists)

    def validate(self, r, cap=60):
        """Check list ranges and, for n <= cap, rP3-freeness"""
        if r < 1:
            raise ValueError(f"r must be at least 1, got {r}")
        lists_ok = all(not colors or (colors[0] >= 1 and colors[-1] <= self.k) for colors in self.lists)
        try:
            witness = self.graph.find_disjoint_induced_p3s(r, cap=cap)
        except ValidationSkipped:
            status, witness = RP3Status.SKIPPED, None
        else:
            status = RP3Status.FREE if witness is None else RP3Status.WITNESS
        return ValidationReport(
            r=r,
            cap=cap,
            lists_in_range=lists_ok,
            rp3_status=status,
            witness=witness,
            empty_lists=len(self.empty_list_vertices()),
        )

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return self.k == other.k and self.lists == other.lists and self.graph == other.graph

    def __hash__(self):
        return hash((self.k, self.lists, self.graph))

    def __str__(self):
        return f"Instance(n={self.n}, m={self.graph.edge_count}, k={self.k})"

    def __repr__(self):
        return self.__str__()


class RP3Status(Enum):
    FREE = "free"
    WITNESS = "witness"
    SKIPPED = "skipped"


class ValidationReport:
    """Findings of Instance.validate"""

    def __init__(self, r, cap, lists_in_range, rp3_status, witness, empty_lists):
        self.r = r
        self.cap = cap
        self.lists_in_range = lists_in_range
        self.rp3_status = rp3_status
        self.witness = witness
        self.empty_lists = empty_lists

    @property
    def is_rp3_free(self):
        """True/False when decided, None when skipped by the cap"""
        if self.rp3_status is RP3Status.SKIPPED:
            return None
        return self.rp3_status is RP3Status.FREE

    def to_dict(self):
        """Convert report to dictionary representation, vertices 1-based"""
        return {
            'r': self.r,
            'cap': self.cap,
            'lists_in_range': self.lists_in_range,
            'rp3_status': self.rp3_status.value,
            'witness': [[v + 1 for v in triple] for triple in self.witness] if self.witness else None,
            'empty_lists': self.empty_lists,
        }

    def __str__(self):
        return f"ValidationReport(r={self.r}, rp3_status={self.rp3_status.value}, empty_lists={self.empty_lists})"

    def __repr__(self):
        return self.__str__()
