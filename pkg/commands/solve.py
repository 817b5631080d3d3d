import json
import logging

import click

from config import Config
from models.run_config import RunConfig
from services.instance_io import InstanceIOService
from services.solver_service import SolverService
from utils.cli_decorators import EXIT_ADMISSIBLE, EXIT_NOT_ADMISSIBLE, exit_on_error
from utils.errors import OracleDisagreement

logger = logging.getLogger(__name__)


def format_verdict(verdict):
    """Human-readable verdict; vertices printed 1-based"""
    if not verdict.admissible:
        lines = ["not admissible"]
    else:
        lines = ["admissible"]
        lines.append("coloring: " + ' '.join(f"{v + 1}:{c}" for v, c in enumerate(verdict.coloring)))
    stats = verdict.stats
    lines.append(
        f"leaves decided: {stats.leaves_decided}, branches: {stats.reducer.branches}, "
        f"max depth: {stats.reducer.max_depth}, time: {stats.time_ms:.2f} ms"
    )
    return '\n'.join(lines)


def cmd_solve(cfg):
    """Decide the instance, print the verdict, return the exit status"""
    instance = InstanceIOService.read_source(cfg.input_path)

    if cfg.oracle_check and instance.n > Config.ORACLE_CHECK_LIMIT:
        raise ValueError(f"--oracle-check needs n <= {Config.ORACLE_CHECK_LIMIT}, got n={instance.n}")

    if cfg.command == 'oracle':
        verdict = SolverService.oracle_decide(instance)
    else:
        verdict = SolverService.decide(instance, dedup_cap=cfg.dedup_cap,
                                       parallel=cfg.parallel, workers=cfg.workers)

    if cfg.oracle_check:
        oracle = SolverService.oracle_decide(instance)
        if oracle.admissible != verdict.admissible:
            raise OracleDisagreement(verdict.admissible, oracle.admissible)

    report = instance.validate(cfg.r, cfg.cap) if cfg.validate_rp3 else None

    if cfg.json_output:
        payload = verdict.to_dict()
        if report is not None:
            payload['validation'] = report.to_dict()
        click.echo(json.dumps(payload))
    else:
        click.echo(format_verdict(verdict))
        if report is not None:
            click.echo(f"rP3 check (r={report.r}): {report.rp3_status.value}")

    return EXIT_ADMISSIBLE if verdict.admissible else EXIT_NOT_ADMISSIBLE


def _solver_options(command):
    command = click.option('--validate-rp3', is_flag=True, help='Also report rP3-freeness (n <= --cap).')(command)
    command = click.option('--cap', type=click.IntRange(min=1), default=Config.VALIDATION_CAP,
                           show_default=True, help='Vertex cap for the rP3 check.')(command)
    command = click.option('-r', type=click.IntRange(min=1), default=1, show_default=True,
                           help='r for the rP3 check.')(command)
    command = click.option('--oracle-check', is_flag=True,
                           help='Cross-check against the backtracking oracle; exit 3 on disagreement.')(command)
    command = click.option('--json', 'json_output', is_flag=True, help='Emit JSON.')(command)
    command = click.argument('input_path', default='-')(command)
    return command


@click.command('solve')
@_solver_options
@click.option('--parallel', is_flag=True, help='Decide profile leaves on a thread pool.')
@click.option('--workers', type=click.IntRange(min=1), default=Config.PARALLEL_WORKERS, show_default=True)
@exit_on_error
def solve(input_path, json_output, oracle_check, r, cap, validate_rp3, parallel, workers):
    """Decide whether an instance file ('-' for stdin) admits a list coloring.

    Exit status: 0 admissible, 1 not admissible, 2 input error, 3 oracle disagreement.
    """
    cfg = RunConfig('solve', input_path=input_path, json_output=json_output, oracle_check=oracle_check,
                    r=r, cap=cap, validate_rp3=validate_rp3, parallel=parallel, workers=workers)
    return cmd_solve(cfg)


@click.command('oracle')
@_solver_options
@exit_on_error
def oracle(input_path, json_output, oracle_check, r, cap, validate_rp3):
    """Decide an instance with the exponential backtracking oracle only."""
    cfg = RunConfig('oracle', input_path=input_path, json_output=json_output, oracle_check=oracle_check,
                    r=r, cap=cap, validate_rp3=validate_rp3)
    return cmd_solve(cfg)
