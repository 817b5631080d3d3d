import os
from pathlib import Path

# Build paths
BASE_DIR = Path(__file__).resolve().parent


def _int_tuple(value):
    return tuple(int(part) for part in value.split(',') if part.strip())


class Config:
    # Validation configuration
    VALIDATION_CAP = int(os.environ.get('LKC_VALIDATION_CAP') or 60)  # Max n for exact rP3 packing search
    ORACLE_CHECK_LIMIT = int(os.environ.get('LKC_ORACLE_CHECK_LIMIT') or 20)  # Max n for --oracle-check

    # Reducer configuration
    DEDUP_CAP = int(os.environ.get('LKC_DEDUP_CAP') or 1_000_000)  # Visited states kept for dedup

    # Generator configuration
    REJECTION_BUDGET = int(os.environ.get('LKC_REJECTION_BUDGET') or 10_000)
    DEFAULT_DENSITY = float(os.environ.get('LKC_DENSITY') or 0.3)

    # Solver configuration
    PARALLEL_WORKERS = int(os.environ.get('LKC_PARALLEL_WORKERS') or 4)

    # Benchmark configuration
    BENCH_SCHEDULE = _int_tuple(os.environ.get('LKC_BENCH_SCHEDULE') or '1000,2000,4000,8000,16000,32000,64000')
    BENCH_K = int(os.environ.get('LKC_BENCH_K') or 10)
    BENCH_SLOPE_LIMIT = float(os.environ.get('LKC_BENCH_SLOPE_LIMIT') or 2.7)
    LEAF_BENCH_SIZES = _int_tuple(os.environ.get('LKC_LEAF_BENCH_SIZES') or '20,40,60,80,100,120,140,160,180,200')
    LEAF_BENCH_K = int(os.environ.get('LKC_LEAF_BENCH_K') or 3)
    LEAF_BENCH_R = int(os.environ.get('LKC_LEAF_BENCH_R') or 2)
    LEAF_BENCH_DENSITY = float(os.environ.get('LKC_LEAF_BENCH_DENSITY') or 0.02)  # Adjacency of the planted extra vertices

    # Database configuration
    BENCH_DATABASE_URL = os.environ.get('LKC_BENCH_DATABASE_URL') or f'sqlite:///{BASE_DIR / "bench_runs.db"}'

    # Logging
    LOG_LEVEL = os.environ.get('LKC_LOG_LEVEL') or 'WARNING'
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
