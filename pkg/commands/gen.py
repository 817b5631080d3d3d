import click

from config import Config
from models.run_config import RunConfig
from services.generator_service import GenerationMode, GeneratorService
from services.instance_io import InstanceIOService
from utils.cli_decorators import EXIT_OK, exit_on_error

MAX_SEED = (1 << 63) - 1


def cmd_gen(cfg):
    """Write a generated instance to stdout"""
    instance = GeneratorService.generate(
        GenerationMode(cfg.mode), cfg.n, cfg.k, cfg.seed, r=cfg.r, density=cfg.density,
        full_lists=cfg.full_lists, max_clique=cfg.max_clique, cap=cfg.cap, budget=cfg.budget,
    )
    click.echo(InstanceIOService.write_instance(instance), nl=False)
    return EXIT_OK


@click.command('gen')
@click.argument('mode', type=click.Choice([m.value for m in GenerationMode]))
@click.option('-n', type=click.IntRange(min=1), required=True, help='Number of vertices.')
@click.option('-k', type=click.IntRange(min=1), required=True, help='Colors 1..k.')
@click.option('--seed', type=click.IntRange(0, MAX_SEED), required=True, help='SplitMix64 seed.')
@click.option('-r', type=click.IntRange(min=1), default=1, show_default=True,
              help='r for rp3free and planted modes.')
@click.option('--density', type=click.FloatRange(0.0, 1.0), default=Config.DEFAULT_DENSITY, show_default=True,
              help='Edge probability for random, rp3free and planted modes.')
@click.option('--full-lists', is_flag=True, help='Give every vertex the list 1..k.')
@click.option('--max-clique', type=click.IntRange(min=1), default=None, help='Largest cluster block (default k).')
@click.option('--cap', type=click.IntRange(min=1), default=Config.VALIDATION_CAP, show_default=True)
@click.option('--budget', type=click.IntRange(min=1), default=Config.REJECTION_BUDGET, show_default=True,
              help='Rejection-sampling draws for rp3free mode.')
@exit_on_error
def gen(mode, n, k, seed, r, density, full_lists, max_clique, cap, budget):
    """Generate a seeded instance in MODE (cluster, rp3free, random, planted)."""
    cfg = RunConfig('gen', mode=mode, n=n, k=k, seed=seed, r=r, density=density, full_lists=full_lists,
                    max_clique=max_clique, cap=cap, budget=budget)
    return cmd_gen(cfg)
