"""
Command-line argument parser for the verify, chamber and export commands.
"""

import argparse
from typing import Optional, Sequence

from quadric_lattices.core.constants import (
    Command,
    OutputFormat,
    Suite,
    X_ANTICANONICAL_BASIS,
    X_EPS_TILDE_BASIS,
    X_STANDARD_BASIS,
)
from quadric_lattices.core.parameters import RunParameters
from quadric_lattices.utils.exceptions import ValidationError


class CLIParser:
    """
    Parse command-line arguments for verification runs and queries.
    """

    def __init__(self):
        self.parser = self._build_parser()

    def _common_options(self) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--n', type=int, help='Even dimension n = 2m')
        common.add_argument('--config', type=str, help='Path to JSON configuration file')
        common.add_argument(
            '--format',
            type=str,
            choices=[f.value for f in OutputFormat],
            help='Output format (default: text)'
        )
        common.add_argument('--out', type=str, metavar='FILE', help='Write the output to FILE')
        common.add_argument(
            '--unsafe-cap',
            action='store_true',
            default=None,
            help='Lift the enumeration caps (may run for a very long time)'
        )
        common.add_argument('--verbose', action='store_true', help='Log progress (INFO)')
        common.add_argument('--debug', action='store_true', help='Log everything (DEBUG)')
        return common

    def _build_parser(self) -> argparse.ArgumentParser:
        """
        Build argument parser.

        Returns:
            Configured ArgumentParser with one sub-parser per command
        """
        common = self._common_options()
        parser = argparse.ArgumentParser(
            description="Exact lattice and cone checks for blow-ups of P^n at n+3 points",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
Examples:
  # All suites for n = 2
  python main.py verify --n 2 --suite all

  # Chamber of -K_X for n = 4, in the (-K_X, E) basis
  python main.py chamber --n 4 --basis antiK_E --class 1 0 0 0 0 0 0 0

  # Cone E for n = 2 as JSON
  python main.py export cones.E --n 2 --format json --out E.json

  # Config file, CLI overrides config
  python main.py verify --config config_example.json --n 4
            """
        )
        commands = parser.add_subparsers(dest='command', required=True)

        verify = commands.add_parser(Command.VERIFY.value, parents=[common], help='Run verification suites')
        verify.add_argument('--suite', type=str, choices=[s.value for s in Suite], help='Suite to run (default: all)')
        verify.add_argument('--samples', type=int, help='Random instances per sampled check')
        verify.add_argument('--seed', type=int, help='Seed for sampled checks')
        verify.add_argument('--workers', type=int, help='Worker processes (default: $QUADRIC_LATTICES_WORKERS or 1)')

        chamber = commands.add_parser(Command.CHAMBER.value, parents=[common], help='Locate a divisor class')
        chamber.add_argument(
            '--class',
            dest='class_coords',
            nargs='+',
            metavar='COORD',
            help='n+4 rational coordinates, e.g. 2 -1 -1 -1 -1 -1 -1 -1'
        )
        chamber.add_argument(
            '--basis',
            type=str,
            choices=[X_STANDARD_BASIS, X_ANTICANONICAL_BASIS, X_EPS_TILDE_BASIS],
            help='Basis of the coordinates (default: H_E)'
        )

        export = commands.add_parser(Command.EXPORT.value, parents=[common], help='Export a computed object')
        export.add_argument('object', type=str, help='Object name, e.g. cones.E, factorization, weyl.generators')

        return parser

    def parse(self, argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
        """
        Parse command-line arguments.

        Returns:
            Parsed arguments namespace
        """
        return self.parser.parse_args(argv)

    def create_parameters_from_args(self, args: argparse.Namespace) -> RunParameters:
        """
        Create RunParameters from parsed arguments alone.

        Raises:
            ValidationError: If --n is missing and no config is given
        """
        if args.n is None and not args.config:
            raise ValidationError("Missing required parameter --n. Either provide --config or --n.")
        params = RunParameters(n=args.n, command=Command.from_string(args.command))
        return apply_cli_overrides(params, args)


def apply_cli_overrides(params: RunParameters, args: argparse.Namespace) -> RunParameters:
    """Copy every option given on the command line onto params."""
    params.command = Command.from_string(args.command)
    if args.n is not None:
        params.n = args.n
    if args.format is not None:
        params.output_format = OutputFormat.from_string(args.format)
    if args.out is not None:
        params.out = args.out
    if args.unsafe_cap:
        params.unsafe_cap = True
    if getattr(args, 'suite', None) is not None:
        params.suite = Suite.from_string(args.suite)
    for name in ('samples', 'seed', 'workers', 'class_coords', 'basis'):
        value = getattr(args, name, None)
        if value is not None:
            setattr(params, name, value)
    if getattr(args, 'object', None) is not None:
        params.export_object = args.object
    return params
