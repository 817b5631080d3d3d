import json
import logging

import click

from config import Config
from database import open_session
from models.run_config import RunConfig
from services.bench_service import BenchService
from utils.cli_decorators import EXIT_OK, EXIT_REGRESSION, exit_on_error

logger = logging.getLogger(__name__)


def _parse_schedule(value):
    if value is None:
        return None
    try:
        return tuple(int(part) for part in value.split(',') if part.strip())
    except ValueError:
        raise ValueError(f"schedule must be comma-separated integers, got {value!r}")


def cmd_bench(cfg, max_slope=None):
    """Run the matcher or leaf-count schedule and print the table"""
    if cfg.leaves:
        report = BenchService.run_leaf_schedule(cfg.schedule, cfg.k, cfg.r, cfg.seed, density=cfg.density,
                                                dedup_cap=cfg.dedup_cap)
    else:
        report = BenchService.run_matcher_schedule(cfg.schedule, cfg.k, cfg.seed)

    status = EXIT_OK
    if cfg.record:
        session = open_session(cfg.db_url)
        try:
            BenchService.record(session, report)
            if cfg.leaves and BenchService.check_leaf_ceilings(session, report):
                status = EXIT_REGRESSION
        finally:
            session.close()

    if max_slope is not None and report.slope is not None and report.slope > max_slope:
        logger.warning(f"Fitted slope {report.slope:.3f} exceeds {max_slope}")
        status = EXIT_REGRESSION

    if cfg.json_output:
        click.echo(json.dumps(report.to_dict()))
    else:
        click.echo(report.format_table())
    return status


@click.command('bench')
@click.option('--schedule', default=None,
              help='Comma-separated sizes (default: Config.BENCH_SCHEDULE, or LEAF_BENCH_SIZES with --leaves).')
@click.option('-k', type=click.IntRange(min=1), default=None, help='Colors (default BENCH_K / LEAF_BENCH_K).')
@click.option('-r', type=click.IntRange(min=1), default=Config.LEAF_BENCH_R, show_default=True,
              help='r for --leaves instances.')
@click.option('--seed', type=click.IntRange(0, (1 << 63) - 1), default=0, show_default=True)
@click.option('--density', type=click.FloatRange(0.0, 1.0), default=Config.LEAF_BENCH_DENSITY, show_default=True,
              help='Adjacency of the planted extra vertices with --leaves.')
@click.option('--leaves', is_flag=True, help='Measure profile leaf counts instead of matcher time.')
@click.option('--record', is_flag=True, help='Store rows; with --leaves also enforce leaf ceilings.')
@click.option('--db', 'db_url', default=Config.BENCH_DATABASE_URL, show_default=True)
@click.option('--max-slope', type=float, default=None, help='Exit 1 when the fitted slope exceeds this.')
@click.option('--json', 'json_output', is_flag=True, help='Emit JSON.')
@exit_on_error
def bench(schedule, k, r, seed, density, leaves, record, db_url, max_slope, json_output):
    """Time the matching stage on cluster graphs, or count profile leaves."""
    sizes = _parse_schedule(schedule)
    if sizes is None:
        sizes = Config.LEAF_BENCH_SIZES if leaves else Config.BENCH_SCHEDULE
    if k is None:
        k = Config.LEAF_BENCH_K if leaves else Config.BENCH_K
    cfg = RunConfig('bench', k=k, r=r, seed=seed, density=density, schedule=sizes, leaves=leaves,
                    record=record, db_url=db_url, json_output=json_output)
    return cmd_bench(cfg, max_slope=max_slope)
