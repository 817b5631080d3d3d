import hashlib
import logging
import time

import numpy as np

from models.bench_run import BenchKind, BenchRun, LeafCeiling
from models.verdict import ReducerStats
from services.generator_service import GenerationMode, GeneratorService
from services.matcher_service import MatcherService
from services.reducer_service import ReducerService

logger = logging.getLogger(__name__)


class BenchReport:
    """Rows of one benchmark schedule plus the fitted log-log slope"""

    def __init__(self, kind, rows, slope=None):
        self.kind = kind
        self.rows = rows
        self.slope = slope
        self.regressions = []

    def to_dict(self):
        """Convert report to dictionary representation"""
        return {
            'kind': self.kind.value,
            'rows': self.rows,
            'slope': self.slope,
            'regressions': self.regressions,
        }

    def format_table(self):
        if self.kind is BenchKind.MATCHER:
            lines = [f"{'n':>8} {'|V(Gamma)|':>11} {'phases':>7} {'wall_ms':>11}"]
            lines.extend(
                f"{row['n']:>8} {row['gamma_nodes']:>11} {row['phases']:>7} {row['wall_ms']:>11.2f}"
                for row in self.rows
            )
            if self.slope is not None:
                lines.append(f"log-log slope: {self.slope:.3f}")
        else:
            lines = [f"{'n':>6} {'leaves':>8} {'branches':>9} {'wall_ms':>11}"]
            lines.extend(
                f"{row['n']:>6} {row['leaves']:>8} {row['branches']:>9} {row['wall_ms']:>11.2f}"
                for row in self.rows
            )
            for regression in self.regressions:
                lines.append(
                    f"REGRESSION n={regression['n']}: {regression['leaves']} leaves > ceiling {regression['ceiling']}"
                )
        return '\n'.join(lines)


class BenchService:
    """Measures the matcher stage and the reducer's leaf counts"""

    @staticmethod
    def instance_hash(instance):
        return hashlib.blake2b(ReducerService.dedup_key(instance), digest_size=16).hexdigest()

    @staticmethod
    def fit_slope(sizes, times):
        """Least-squares slope of log(time) against log(n)"""
        points = [(n, t) for n, t in zip(sizes, times) if n > 0 and t > 0]
        if len(points) < 2:
            return None
        xs = np.log([n for n, _ in points])
        ys = np.log([t for _, t in points])
        slope, _ = np.polyfit(xs, ys, 1)
        return float(slope)

    @staticmethod
    def time_matcher(instance):
        """Time decompose + Gamma construction + Hopcroft-Karp on a reduced instance"""
        started = time.perf_counter()
        gamma = MatcherService.build_gamma(MatcherService.decompose(instance))
        matching = MatcherService.hopcroft_karp(gamma)
        wall_ms = (time.perf_counter() - started) * 1000.0
        return {
            'gamma_nodes': gamma.node_count,
            'gamma_edges': gamma.edge_count,
            'matching': matching.size,
            'phases': matching.phases,
            'wall_ms': wall_ms,
        }

    @staticmethod
    def run_matcher_schedule(schedule, k, seed):
        """Matcher timings on cluster-graph instances, one per n in the schedule"""
        if not schedule or any(n <= 0 for n in schedule):
            raise ValueError("schedule sizes must be positive")
        rows = []
        for n in schedule:
            instance = GeneratorService.generate(GenerationMode.CLUSTER, n, k, seed)
            row = {'n': n, 'k': k, 'seed': seed, 'instance_hash': BenchService.instance_hash(instance)}
            row.update(BenchService.time_matcher(instance))
            logger.info(f"Matcher bench row: {row}")
            rows.append(row)
        slope = BenchService.fit_slope([row['n'] for row in rows], [row['wall_ms'] for row in rows])
        return BenchReport(BenchKind.MATCHER, rows, slope)

    @staticmethod
    def run_leaf_schedule(sizes, k, r, seed, density=0.02, dedup_cap=1_000_000):
        """Profile sizes of planted rP3-free instances"""
        if not sizes or any(n <= 0 for n in sizes):
            raise ValueError("schedule sizes must be positive")
        rows = []
        for n in sizes:
            instance = GeneratorService.generate(GenerationMode.PLANTED, n, k, seed, r=r, density=density)
            stats = ReducerStats()
            started = time.perf_counter()
            for _ in ReducerService.reduce_to_profile(instance, stats, dedup_cap):
                pass
            rows.append({
                'n': n,
                'k': k,
                'r': r,
                'seed': seed,
                'instance_hash': BenchService.instance_hash(instance),
                'leaves': stats.leaves,
                'branches': stats.branches,
                'max_depth': stats.max_depth,
                'wall_ms': (time.perf_counter() - started) * 1000.0,
            })
            logger.info(f"Leaf bench row: {rows[-1]}")
        return BenchReport(BenchKind.LEAVES, rows)

    @staticmethod
    def record(session, report):
        """Store every row of the report"""
        for row in report.rows:
            session.add(BenchRun(
                kind=report.kind,
                n=row['n'],
                k=row['k'],
                r=row.get('r', 1),
                seed=row['seed'],
                instance_hash=row['instance_hash'],
                gamma_nodes=row.get('gamma_nodes'),
                phases=row.get('phases'),
                leaves=row.get('leaves'),
                branches=row.get('branches'),
                wall_ms=row['wall_ms'],
            ))
        session.commit()

    @staticmethod
    def check_leaf_ceilings(session, report):
        """Compare leaf counts against stored ceilings, fixing missing ones.

        Returns the rows whose leaf count exceeds an existing ceiling.
        """
        regressions = []
        for row in report.rows:
            ceiling, created = LeafCeiling.get_or_create(
                session, row['n'], row['k'], row['r'], row['seed'], row['leaves']
            )
            if created:
                logger.info(f"Fixed {ceiling}")
            elif row['leaves'] > ceiling.leaves:
                regressions.append({'n': row['n'], 'leaves': row['leaves'], 'ceiling': ceiling.leaves})
        report.regressions = regressions
        return regressions
