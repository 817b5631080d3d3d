import click

from utils.logging_setup import configure_logging


def create_cli():
    @click.group(context_settings={'help_option_names': ['-h', '--help']})
    @click.option('-v', '--verbose', count=True, help='-v for INFO logs, -vv for DEBUG (stderr).')
    def cli(verbose):
        """List-coloring solver with certificates."""
        configure_logging(verbose)

    # Register commands
    from commands.solve import solve, oracle
    from commands.validate import validate
    from commands.gen import gen
    from commands.bench import bench

    cli.add_command(solve)
    cli.add_command(validate)
    cli.add_command(gen)
    cli.add_command(bench)
    cli.add_command(oracle)

    return cli


def main():
    create_cli()()


if __name__ == '__main__':
    main()
