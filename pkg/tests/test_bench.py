import pytest

from config import Config
from database import open_session, reset_database
from models.bench_run import BenchKind, BenchRun, LeafCeiling
from services.bench_service import BenchReport, BenchService
from services.generator_service import GenerationMode, GeneratorService


@pytest.fixture
def session(tmp_path):
    url = f"sqlite:///{tmp_path / 'bench.db'}"
    session = open_session(url)
    yield session
    session.close()


class TestFitSlope:

    def test_quadratic_times(self):
        sizes = [10, 20, 40, 80]
        assert BenchService.fit_slope(sizes, [n ** 2 for n in sizes]) == pytest.approx(2.0)

    def test_linear_times_with_constant(self):
        sizes = [100, 1000, 10000]
        assert BenchService.fit_slope(sizes, [3.5 * n for n in sizes]) == pytest.approx(1.0)

    def test_needs_two_positive_points(self):
        assert BenchService.fit_slope([10], [1.0]) is None
        assert BenchService.fit_slope([10, 20], [0.0, 1.0]) is None


def test_matcher_row_counts_gamma():
    instance = GeneratorService.generate(GenerationMode.CLUSTER, 60, 4, 0)
    row = BenchService.time_matcher(instance)
    assert row['gamma_edges'] == instance.total_list_size()
    assert row['gamma_nodes'] <= 5 * 60
    assert row['matching'] <= 60
    assert row['wall_ms'] >= 0.0


def test_instance_hash_is_stable():
    a = GeneratorService.generate(GenerationMode.RANDOM, 10, 2, 4)
    b = GeneratorService.generate(GenerationMode.RANDOM, 10, 2, 4)
    assert BenchService.instance_hash(a) == BenchService.instance_hash(b)
    assert len(BenchService.instance_hash(a)) == 32


def test_leaf_schedule_rows():
    report = BenchService.run_leaf_schedule([10, 20], 2, 2, 0)
    assert report.kind is BenchKind.LEAVES
    assert [row['n'] for row in report.rows] == [10, 20]
    assert all(row['leaves'] >= 1 and row['branches'] >= row['leaves'] for row in report.rows)
    assert "leaves" in report.format_table()


def test_rejects_empty_schedule():
    with pytest.raises(ValueError):
        BenchService.run_matcher_schedule([], 3, 0)


def test_record_and_ceilings(session):
    report = BenchReport(BenchKind.LEAVES, [
        {'n': 10, 'k': 2, 'r': 2, 'seed': 0, 'instance_hash': 'a' * 32, 'leaves': 4, 'branches': 9,
         'wall_ms': 1.0},
    ])
    BenchService.record(session, report)
    assert session.query(BenchRun).one().leaves == 4

    assert BenchService.check_leaf_ceilings(session, report) == []
    assert session.query(LeafCeiling).one().leaves == 4

    report.rows[0]['leaves'] = 5
    assert BenchService.check_leaf_ceilings(session, report) == [{'n': 10, 'leaves': 5, 'ceiling': 4}]
    assert "REGRESSION n=10" in report.format_table()


def test_get_or_create_keeps_first_ceiling(session):
    ceiling, created = LeafCeiling.get_or_create(session, 10, 2, 2, 0, 7)
    assert created
    again, created = LeafCeiling.get_or_create(session, 10, 2, 2, 0, 99)
    assert not created
    assert again.leaves == 7


def test_reset_database_drops_rows(tmp_path):
    url = f"sqlite:///{tmp_path / 'reset.db'}"
    session = open_session(url)
    LeafCeiling.get_or_create(session, 1, 1, 1, 0, 1)
    session.close()

    session = reset_database(url)()
    try:
        assert session.query(LeafCeiling).count() == 0
    finally:
        session.close()


@pytest.mark.slow
def test_matcher_scales_near_linearly():
    report = BenchService.run_matcher_schedule(Config.BENCH_SCHEDULE, Config.BENCH_K, 0)
    assert report.slope is not None
    assert report.slope <= Config.BENCH_SLOPE_LIMIT
