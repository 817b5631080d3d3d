import hashlib
from collections import deque

from utils.errors import GraphError, ValidationSkipped


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Every vertex keeps its neighbors twice: as a sorted tuple for ordered
    scans and as a frozenset for constant-time adjacency tests. Instances are
    never mutated after construction.
    """

    __slots__ = ('n', 'adjacency', '_neighbor_sets', '_fingerprint')

    def __init__(self, n, edges=()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")

        neighbor_sets = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)

        self.n = n
        self.adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
        self._neighbor_sets = tuple(frozenset(s) for s in neighbor_sets)
        self._fingerprint = None

    @classmethod
    def complete(cls, n):
        """Complete graph K_n"""
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n):
        """Path 0-1-...-(n-1)"""
        return cls(n, ((v, v + 1) for v in range(n - 1)))

    @classmethod
    def disjoint_union(cls, *graphs):
        """Disjoint union, vertices of later graphs shifted past earlier ones"""
        offset = 0
        edges = []
        for graph in graphs:
            edges.extend((u + offset, v + offset) for u, v in graph.edges())
            offset += graph.n
        return cls(offset, edges)

    # Basic queries

    @property
    def edge_count(self):
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self):
        """All edges (u, v) with u < v, in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def neighbors(self, v):
        return self.adjacency[v]

    def neighbor_set(self, v):
        return self._neighbor_sets[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return v in self._neighbor_sets[u]

    def _check_vertices(self, vertices):
        for v in vertices:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} outside 0..{self.n - 1}")

    # Structural queries

    def induced_subgraph(self, vertices):
        """Subgraph induced on the given vertices.

        Returns the new graph and the mapping old id -> new id; new ids follow
        the sorted order of the old ones.
        """
        kept = sorted(set(vertices))
        self._check_vertices(kept)
        mapping = {old: new for new, old in enumerate(kept)}
        edges = [
            (mapping[u], mapping[v])
            for u in kept
            for v in self.adjacency[u]
            if u < v and v in mapping
        ]
        return Graph(len(kept), edges), mapping

    def components_within(self, vertices):
        """Connected components of G[vertices] without building the subgraph.

        Components are sorted internally and ordered by their minimum vertex.
        """
        allowed = set(vertices)
        self._check_vertices(allowed)
        seen = set()
        components = []
        for start in sorted(allowed):
            if start in seen:
                continue
            seen.add(start)
            queue = deque([start])
            members = [start]
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if w in allowed and w not in seen:
                        seen.add(w)
                        members.append(w)
                        queue.append(w)
            components.append(tuple(sorted(members)))
        return components

    def connected_components(self):
        return self.components_within(range(self.n))

    def is_clique(self, vertices):
        """True iff every pair of the given vertices is adjacent"""
        members = set(vertices)
        self._check_vertices(members)
        size = len(members)
        return all(len(members & self._neighbor_sets[v]) == size - 1 for v in members)

    def is_p3_free(self):
        """True iff every component is a clique (the graph is a cluster graph)"""
        for component in self.connected_components():
            size = len(component)
            if any(len(self.adjacency[v]) != size - 1 for v in component):
                return False
        return True

    def iter_induced_p3s(self):
        """All induced P3s (x, y, z), y the middle and x < z.

        Ordered by middle y, then by (x, z) lexicographically.
        """
        for y in range(self.n):
            nbrs = self.adjacency[y]
            for i, x in enumerate(nbrs):
                x_nbrs = self._neighbor_sets[x]
                for z in nbrs[i + 1:]:
                    if z not in x_nbrs:
                        yield (x, y, z)

    def find_induced_p3(self):
        """Lexicographically least induced P3 by (y, x, z), or None"""
        return next(self.iter_induced_p3s(), None)

    def find_disjoint_induced_p3s(self, r, cap=60):
        """Search for r pairwise vertex-disjoint induced P3s.

        Returns the triples when they exist (so the graph is not rP3-free) and
        None otherwise. The search backtracks over triples in canonical order
        and is exponential in r, so graphs above ``cap`` vertices are refused
        with ValidationSkipped.
        """
        if r < 1:
            raise ValueError(f"r must be at least 1, got {r}")
        if self.n > cap:
            raise ValidationSkipped(self.n, cap)
        if 3 * r > self.n:
            return None
        if r == 1:
            triple = self.find_induced_p3()
            return [triple] if triple is not None else None

        triples = list(self.iter_induced_p3s())
        chosen = []
        used = set()

        def extend(start):
            if len(chosen) == r:
                return True
            needed = r - len(chosen)
            # Not enough free vertices or triples left for the rest
            if self.n - len(used) < 3 * needed or len(triples) - start < needed:
                return False
            for index in range(start, len(triples)):
                triple = triples[index]
                if used.isdisjoint(triple):
                    chosen.append(triple)
                    used.update(triple)
                    if extend(index + 1):
                        return True
                    chosen.pop()
                    used.difference_update(triple)
            return False

        return list(chosen) if extend(0) else None

    # Derived graphs and encodings

    def relabel(self, permutation):
        """Graph with vertex v renamed to permutation[v]"""
        if sorted(permutation) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph(self.n, ((permutation[u], permutation[v]) for u, v in self.edges()))

    @property
    def fingerprint(self):
        """16-byte digest of n and the sorted edge list"""
        if self._fingerprint is None:
            digest = hashlib.blake2b(digest_size=16)
            digest.update(self.n.to_bytes(8, 'little'))
            for u, v in self.edges():
                digest.update(u.to_bytes(4, 'little'))
                digest.update(v.to_bytes(4, 'little'))
            self._fingerprint = digest.digest()
        return self._fingerprint

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __str__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __repr__(self):
        return self.__str__()
