#!/usr/bin/env python3
"""
Quadric Lattices - Main Entry Point

Exact verification suites, chamber queries and exports for the blow-up of
P^n at n+3 points and the variety of m-planes of a pencil of quadrics.

Usage:
    python main.py verify --n 2 --suite all
    python main.py chamber --n 4 --basis antiK_E --class 1 0 0 0 0 0 0 0
    python main.py export cones.E --n 2 --format json
"""

import logging
import sys
from typing import Optional, Sequence, Tuple

from quadric_lattices.core.constants import Command, Side
from quadric_lattices.core.parameters import RunParameters
from quadric_lattices.io.cli_parser import CLIParser
from quadric_lattices.io.config_loader import ConfigLoader
from quadric_lattices.io.exporters import export_object
from quadric_lattices.io.output_formatter import OutputFormatter
from quadric_lattices.lattice.space import make_space
from quadric_lattices.mcd.chamber_report import chamber_report
from quadric_lattices.utils.calculations import to_vector
from quadric_lattices.utils.exceptions import ComputationError, ConfigurationError, ValidationError
from quadric_lattices.verification.suites import run_verification

logger = logging.getLogger("quadric_lattices.main")

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def configure_logging(verbose: bool, debug: bool) -> None:
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT)


def run_verify(parameters: RunParameters) -> Tuple[str, int]:
    report = run_verification(
        parameters.n,
        suite=parameters.suite,
        samples=parameters.samples,
        seed=parameters.seed,
        unsafe_cap=parameters.unsafe_cap,
        workers=parameters.workers,
    )
    return OutputFormatter.format_report(report, parameters.output_format), 0 if report.passed else 1


def run_chamber(parameters: RunParameters) -> Tuple[str, int]:
    space = make_space(parameters.n, Side.XSIDE)
    x = space.element(to_vector(parameters.class_coords), parameters.basis)
    return OutputFormatter.format_chamber(chamber_report(x), parameters.output_format), 0


def run_export(parameters: RunParameters) -> Tuple[str, int]:
    export = export_object(parameters.export_object, parameters.n, parameters.unsafe_cap)
    return OutputFormatter.format_export(export, parameters.output_format), 0


COMMANDS = {
    Command.VERIFY: run_verify,
    Command.CHAMBER: run_chamber,
    Command.EXPORT: run_export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main execution function.

    Returns:
        Exit code: 0 success, 1 failed checks, 2 usage or computation
        error, 130 interrupted
    """
    try:
        cli_parser = CLIParser()
        args = cli_parser.parse(argv)
        configure_logging(args.verbose, args.debug)

        if args.config:
            parameters = ConfigLoader.load(args.config)
            parameters = ConfigLoader.merge_with_cli(parameters, args)
        else:
            parameters = cli_parser.create_parameters_from_args(args)

        parameters.validate()
        logger.info("Running %r", parameters)

        output, code = COMMANDS[parameters.command](parameters)
        OutputFormatter.write(output, parameters.out)
        if parameters.out:
            print(f"Output written to: {parameters.out}", file=sys.stderr)
        return code

    except (ValidationError, ConfigurationError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except ComputationError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        print("\nOperation cancelled by user.", file=sys.stderr)
        return 130
    except Exception as e:
        print(f"Unexpected error: {e}", file=sys.stderr)
        import traceback
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
