import io
import random

import pytest

from models.graph import Graph
from models.instance import Instance
from services.instance_io import InstanceIOService
from tests.oracles import random_instance
from utils.errors import InstanceParseError

PATH_TEXT = """\
# a path with a shared color
p lkc 3 2 2
e 1 2
e 2 3
l 1 1
l 2 1 2
l 3 1
"""


def test_parse_path_instance():
    instance = InstanceIOService.parse_instance(PATH_TEXT)
    assert instance.n == 3
    assert instance.k == 2
    assert instance.graph.edges() == [(0, 1), (1, 2)]
    assert instance.lists == ((1,), (1, 2), (1,))


def test_missing_list_line_means_full_list():
    instance = InstanceIOService.parse_instance("p lkc 2 1 3\ne 1 2\nl 1 2\n")
    assert instance.lists == ((2,), (1, 2, 3))


def test_list_line_without_colors_is_empty_list():
    instance = InstanceIOService.parse_instance("p lkc 1 0 2\nl 1\n")
    assert instance.lists == ((),)


def test_reversed_edge_is_rejected():
    with pytest.raises(InstanceParseError, match="smaller vertex first") as excinfo:
        InstanceIOService.parse_instance("p lkc 2 1 1\ne 2 1\n")
    assert excinfo.value.line_number == 2


def test_empty_graph():
    instance = InstanceIOService.parse_instance("p lkc 0 0 1\n")
    assert instance.n == 0


@pytest.mark.parametrize("text, line_number", [
    ("e 1 2\n", 1),
    ("p lkc 2 1\n", 1),
    ("p lkc 2 1 2\nx 1\n", 2),
    ("p lkc 2 1 2\ne 1 3\n", 2),
    ("p lkc 2 1 2\ne 1 1\n", 2),
    ("p lkc 3 2 2\ne 1 2\n\ne 1 2\n", 4),
    ("p lkc 2 0 2\nl 1 3\n", 2),
    ("p lkc 2 0 2\nl 1 1 1\n", 2),
    ("p lkc 2 0 2\nl 1 1\n# note\nl 1 2\n", 4),
    ("p lkc 2 0 2\nl 3 1\n", 2),
    ("p lkc 2 0 2\ne one two\n", 2),
    ("p lkc 2 0 2\np lkc 2 0 2\n", 2),
])
def test_parse_errors_name_the_line(text, line_number):
    with pytest.raises(InstanceParseError) as excinfo:
        InstanceIOService.parse_instance(text)
    assert excinfo.value.line_number == line_number
    assert f"line {line_number}" in str(excinfo.value)


def test_edge_count_mismatch():
    with pytest.raises(InstanceParseError, match="declares 2 edges"):
        InstanceIOService.parse_instance("p lkc 3 2 1\ne 1 2\n")


def test_missing_header():
    with pytest.raises(InstanceParseError, match="missing header"):
        InstanceIOService.parse_instance("# nothing here\n")


def test_write_lists_every_vertex():
    instance = Instance(Graph.path(2), 2, [[2], []])
    assert InstanceIOService.write_instance(instance) == "p lkc 2 1 2\ne 1 2\nl 1 2\nl 2\n"


def test_round_trip_random_instances():
    rng = random.Random(2024)
    for _ in range(100):
        instance = random_instance(rng, rng.randint(0, 12), rng.randint(1, 5), rng.random(), empty_probability=0.1)
        text = InstanceIOService.write_instance(instance)
        assert InstanceIOService.parse_instance(text) == instance


def test_read_source_from_stdin_and_file(tmp_path):
    from_stdin = InstanceIOService.read_source('-', stdin=io.StringIO(PATH_TEXT))
    path = tmp_path / "path.lkc"
    path.write_text(PATH_TEXT, encoding='utf-8')
    assert InstanceIOService.read_source(str(path)) == from_stdin
