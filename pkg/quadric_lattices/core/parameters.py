"""
Parameter management for verification runs, chamber queries and exports.
"""

from typing import Any, Dict, Optional, Sequence

from quadric_lattices.core.constants import (
    Command,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    EXHAUSTIVE_N_CAP,
    OutputFormat,
    Suite,
    X_STANDARD_BASIS,
)
from quadric_lattices.core.validators import (
    validate_even_dimension,
    validate_integer_positive,
    validate_length,
    validate_non_negative,
)
from quadric_lattices.utils.exceptions import ValidationError


class RunParameters:
    """
    Container for one CLI run with validation.

    Attributes:
        n: Even dimension n = 2m
        command: verify, chamber or export
        suite: Verification suite (verify)
        output_format: json, csv or text
        out: Output path, None for stdout
        unsafe_cap: Lift the enumeration caps
        samples: Random instances per sampled check (n >= 4)
        seed: Seed for the sampling generator
        workers: Worker pool size; None defers to the environment
        export_object: Object name (export)
        class_coords: Coordinates of the queried class (chamber)
        basis: XSide basis of class_coords (chamber)
    """

    def __init__(
        self,
        n: int,
        command: Command = Command.VERIFY,
        suite: Suite = Suite.ALL,
        output_format: OutputFormat = OutputFormat.TEXT,
        out: Optional[str] = None,
        unsafe_cap: bool = False,
        samples: int = DEFAULT_SAMPLES,
        seed: int = DEFAULT_SEED,
        workers: Optional[int] = None,
        export_object: Optional[str] = None,
        class_coords: Optional[Sequence[str]] = None,
        basis: str = X_STANDARD_BASIS,
    ):
        self.n = n
        self.command = command
        self.suite = suite
        self.output_format = output_format
        self.out = out
        self.unsafe_cap = unsafe_cap
        self.samples = samples
        self.seed = seed
        self.workers = workers
        self.export_object = export_object
        self.class_coords = list(class_coords) if class_coords is not None else None
        self.basis = basis

    def validate(self) -> None:
        """
        Validate all parameters.

        Raises:
            ValidationError: If any parameter is invalid
        """
        validate_even_dimension(self.n)
        if not isinstance(self.command, Command):
            raise ValidationError(f"command must be Command enum, got {type(self.command).__name__}")
        if not isinstance(self.suite, Suite):
            raise ValidationError(f"suite must be Suite enum, got {type(self.suite).__name__}")
        if not isinstance(self.output_format, OutputFormat):
            raise ValidationError(f"output_format must be OutputFormat enum, got {type(self.output_format).__name__}")
        validate_integer_positive(self.samples, "samples")
        validate_non_negative(self.seed, "seed")
        if self.workers is not None:
            validate_integer_positive(self.workers, "workers")

        if self.command == Command.VERIFY and self.n > EXHAUSTIVE_N_CAP and not self.unsafe_cap:
            raise ValidationError(
                f"n={self.n} exceeds the verification cap n <= {EXHAUSTIVE_N_CAP}; pass --unsafe-cap to override"
            )
        if self.command == Command.EXPORT and not self.export_object:
            raise ValidationError("export needs an object name")
        if self.command == Command.CHAMBER:
            if not self.class_coords:
                raise ValidationError("chamber needs --class with n+4 coordinates")
            validate_length(self.class_coords, self.n + 4, "class")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "command": self.command.value,
            "suite": self.suite.value,
            "format": self.output_format.value,
            "out": self.out,
            "unsafe_cap": self.unsafe_cap,
            "samples": self.samples,
            "seed": self.seed,
            "workers": self.workers,
            "object": self.export_object,
            "class": self.class_coords,
            "basis": self.basis,
        }

    def __repr__(self) -> str:
        return (
            f"RunParameters(command={self.command.value}, n={self.n}, suite={self.suite.value}, "
            f"format={self.output_format.value}, samples={self.samples}, seed={self.seed}, "
            f"unsafe_cap={self.unsafe_cap})"
        )
