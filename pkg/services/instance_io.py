import logging
import sys

from models.graph import Graph
from models.instance import Instance
from utils.errors import InstanceParseError

logger = logging.getLogger(__name__)

STDIN_PATH = '-'


class InstanceIOService:
    """Reads and writes the line-based ``p lkc`` instance format.

    Vertices are 1-based in files and 0-based in memory; colors are 1..k in
    both. A vertex without an ``l`` line gets the full list [k]; ``l <v>``
    with no colors gives it an empty list.
    """

    @staticmethod
    def parse_instance(text):
        """Parse instance text, raising InstanceParseError with the offending line"""
        header = None
        edges = []
        seen_edges = set()
        lists = {}

        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith('#'):
                continue
            tokens = line.split()
            kind = tokens[0]

            if header is None:
                if kind != 'p':
                    raise InstanceParseError("expected header 'p lkc <n> <m> <k>' first", line_number)
                header = InstanceIOService._parse_header(tokens, line_number)
                continue

            n, m, k = header
            if kind == 'p':
                raise InstanceParseError("duplicate header", line_number)
            elif kind == 'e':
                values = InstanceIOService._parse_ints(tokens[1:], line_number)
                if len(values) != 2:
                    raise InstanceParseError("edge line needs exactly two vertices", line_number)
                u, v = values
                for w in (u, v):
                    if not 1 <= w <= n:
                        raise InstanceParseError(f"vertex {w} out of range 1..{n}", line_number)
                if u == v:
                    raise InstanceParseError(f"self-loop at vertex {u}", line_number)
                if u > v:
                    raise InstanceParseError(f"edge {u} {v} must list the smaller vertex first", line_number)
                edge = (u - 1, v - 1)
                if edge in seen_edges:
                    raise InstanceParseError(f"duplicate edge {u} {v}", line_number)
                seen_edges.add(edge)
                edges.append(edge)
            elif kind == 'l':
                values = InstanceIOService._parse_ints(tokens[1:], line_number)
                if not values:
                    raise InstanceParseError("list line needs a vertex", line_number)
                v, colors = values[0], values[1:]
                if not 1 <= v <= n:
                    raise InstanceParseError(f"vertex {v} out of range 1..{n}", line_number)
                if v - 1 in lists:
                    raise InstanceParseError(f"second list for vertex {v}", line_number)
                for c in colors:
                    if not 1 <= c <= k:
                        raise InstanceParseError(f"color {c} out of range 1..{k}", line_number)
                if len(set(colors)) != len(colors):
                    raise InstanceParseError(f"repeated color in list of vertex {v}", line_number)
                lists[v - 1] = colors
            else:
                raise InstanceParseError(f"unknown record type '{kind}'", line_number)

        if header is None:
            raise InstanceParseError("missing header 'p lkc <n> <m> <k>'")
        n, m, k = header
        if len(edges) != m:
            raise InstanceParseError(f"header declares {m} edges, found {len(edges)}")

        full = list(range(1, k + 1))
        instance = Instance(Graph(n, edges), k, [lists.get(v, full) for v in range(n)])
        logger.info(f"Parsed instance n={n} m={m} k={k}")
        return instance

    @staticmethod
    def _parse_header(tokens, line_number):
        if len(tokens) != 5 or tokens[1] != 'lkc':
            raise InstanceParseError("header must be 'p lkc <n> <m> <k>'", line_number)
        n, m, k = InstanceIOService._parse_ints(tokens[2:], line_number)
        if n < 0 or m < 0:
            raise InstanceParseError("n and m must be non-negative", line_number)
        if k < 1:
            raise InstanceParseError("k must be at least 1", line_number)
        return n, m, k

    @staticmethod
    def _parse_ints(tokens, line_number):
        try:
            return [int(token) for token in tokens]
        except ValueError:
            raise InstanceParseError(f"expected integers, got {' '.join(tokens)!r}", line_number)

    @staticmethod
    def write_instance(instance):
        """Canonical text: header, sorted edges, then one list line per vertex"""
        edges = instance.graph.edges()
        lines = [f"p lkc {instance.n} {len(edges)} {instance.k}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
        for v, colors in enumerate(instance.lists):
            lines.append(' '.join(['l', str(v + 1), *map(str, colors)]))
        return '\n'.join(lines) + '\n'

    @staticmethod
    def read_source(path, stdin=None):
        """Parse an instance from a file path, or from stdin when path is '-'"""
        if path == STDIN_PATH:
            stream = stdin if stdin is not None else sys.stdin
            return InstanceIOService.parse_instance(stream.read())
        with open(path, encoding='utf-8') as handle:
            return InstanceIOService.parse_instance(handle.read())
