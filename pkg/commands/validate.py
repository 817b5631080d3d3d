import json

import click

from config import Config
from models.instance import RP3Status
from models.run_config import RunConfig
from services.instance_io import InstanceIOService
from utils.cli_decorators import EXIT_OK, exit_on_error


def format_report(report):
    lines = [f"lists in range: {'yes' if report.lists_in_range else 'no'}"]
    if report.rp3_status is RP3Status.FREE:
        lines.append(f"{report.r}P3-free: yes")
    elif report.rp3_status is RP3Status.WITNESS:
        lines.append(f"{report.r}P3-free: no")
        for x, y, z in report.witness:
            lines.append(f"  witness: {x + 1}-{y + 1}-{z + 1}")
    else:
        lines.append(f"{report.r}P3-free: skipped (n exceeds cap {report.cap})")
    lines.append(f"empty lists: {report.empty_lists}")
    return '\n'.join(lines)


def cmd_validate(cfg):
    """Print the validation report of the instance"""
    instance = InstanceIOService.read_source(cfg.input_path)
    report = instance.validate(cfg.r, cfg.cap)
    if cfg.json_output:
        click.echo(json.dumps(report.to_dict()))
    else:
        click.echo(format_report(report))
    return EXIT_OK


@click.command('validate')
@click.argument('input_path', default='-')
@click.option('-r', type=click.IntRange(min=1), required=True, help='Check rP3-freeness for this r.')
@click.option('--cap', type=click.IntRange(min=1), default=Config.VALIDATION_CAP, show_default=True,
              help='Skip the exact packing search above this many vertices.')
@click.option('--json', 'json_output', is_flag=True, help='Emit JSON.')
@exit_on_error
def validate(input_path, r, cap, json_output):
    """Report list ranges and rP3-freeness of an instance file."""
    cfg = RunConfig('validate', input_path=input_path, r=r, cap=cap, json_output=json_output)
    return cmd_validate(cfg)
