UNMATCHED = -1


class ColorClassDecomposition:
    """For each color i, the vertices whose list holds i and the components of G_i.

    Index 0 of ``classes`` and ``components`` is color 1.
    """

    def __init__(self, instance, classes, components):
        self.instance = instance
        self.classes = tuple(classes)
        self.components = tuple(tuple(c) for c in components)

    @property
    def k(self):
        return self.instance.k

    def components_of(self, color):
        return self.components[color - 1]

    def component_count(self):
        return sum(len(comps) for comps in self.components)


class BipartiteGraph:
    """Bipartite graph with left nodes 0..n_left-1 and right nodes 0..n_right-1.

    ``left_adjacency[a]`` lists the right neighbors of a, without duplicates.
    """

    def __init__(self, n_left, n_right, left_adjacency):
        if len(left_adjacency) != n_left:
            raise ValueError(f"expected {n_left} adjacency rows, got {len(left_adjacency)}")
        rows = tuple(tuple(row) for row in left_adjacency)
        for a, row in enumerate(rows):
            for b in row:
                if not 0 <= b < n_right:
                    raise ValueError(f"left node {a} has right neighbor {b} outside 0..{n_right - 1}")
        self.n_left = n_left
        self.n_right = n_right
        self.left_adjacency = rows

    @classmethod
    def from_edges(cls, n_left, n_right, edges):
        """Build from (left, right) pairs; repeated pairs collapse"""
        rows = [{} for _ in range(n_left)]
        for a, b in edges:
            rows[a][b] = None
        return cls(n_left, n_right, [list(row) for row in rows])

    @property
    def node_count(self):
        return self.n_left + self.n_right

    @property
    def edge_count(self):
        return sum(len(row) for row in self.left_adjacency)

    def edges(self):
        return [(a, b) for a, row in enumerate(self.left_adjacency) for b in row]

    def relabel(self, left_perm, right_perm):
        """Rename left a to left_perm[a] and right b to right_perm[b]"""
        rows = [[] for _ in range(self.n_left)]
        for a, row in enumerate(self.left_adjacency):
            rows[left_perm[a]] = [right_perm[b] for b in row]
        return BipartiteGraph(self.n_left, self.n_right, rows)

    def __str__(self):
        return f"BipartiteGraph(left={self.n_left}, right={self.n_right}, edges={self.edge_count})"

    def __repr__(self):
        return self.__str__()


class GammaGraph(BipartiteGraph):
    """The bipartite graph with one a-node per vertex and one b-node per (color, component).

    Left node v is a_v. Right node j is b^i_C with ``b_labels[j] == (i, C)``;
    b-nodes are ordered by color, then by the minimum vertex of C. a_v is
    adjacent to b^i_C exactly when v lies in C.
    """

    def __init__(self, decomposition, b_labels, left_adjacency):
        super().__init__(decomposition.instance.n, len(b_labels), left_adjacency)
        self.decomposition = decomposition
        self.b_labels = tuple(b_labels)

    @property
    def instance(self):
        return self.decomposition.instance

    def color_of(self, b):
        return self.b_labels[b][0]

    def __str__(self):
        return f"GammaGraph(A={self.n_left}, B={self.n_right}, edges={self.edge_count})"


class Matching:
    """A matching stored as the partner of every left node (UNMATCHED if free)"""

    def __init__(self, pair_left, n_right, phases=0):
        self.pair_left = tuple(pair_left)
        self.n_right = n_right
        self.phases = phases

    @property
    def size(self):
        return sum(1 for b in self.pair_left if b != UNMATCHED)

    def pairs(self):
        return [(a, b) for a, b in enumerate(self.pair_left) if b != UNMATCHED]

    def partner_of_left(self, a):
        b = self.pair_left[a]
        return None if b == UNMATCHED else b

    def pair_right(self):
        partners = [UNMATCHED] * self.n_right
        for a, b in self.pairs():
            partners[b] = a
        return partners

    def saturates_left(self):
        return all(b != UNMATCHED for b in self.pair_left)

    def is_valid_for(self, graph):
        """Every pair is an edge of the graph and no right node is used twice"""
        if len(self.pair_left) != graph.n_left:
            return False
        used = set()
        for a, b in self.pairs():
            if b in used or b not in graph.left_adjacency[a]:
                return False
            used.add(b)
        return True

    def __str__(self):
        return f"Matching(size={self.size}, phases={self.phases})"

    def __repr__(self):
        return self.__str__()
