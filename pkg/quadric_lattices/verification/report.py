"""
Check results and suite reports.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

import pandas as pd

from quadric_lattices.core.constants import SCHEMA_VERSION
from quadric_lattices.utils.exceptions import CapExceededError, ComputationError

logger = logging.getLogger(__name__)


def _plain(value: Any) -> Any:
    """JSON-friendly form of a check value; Fractions become strings."""
    if isinstance(value, bool) or isinstance(value, (int, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    return str(value)


@dataclass(frozen=True)
class Check:
    """
    One exact comparison.

    Attributes:
        check_id: Stable dotted identifier, e.g. "cones.E.facets"
        anchor: What the check establishes
        expected: Expected value
        computed: Computed value (or the error message when computation failed)
        seconds: Wall time spent computing
    """

    check_id: str
    anchor: str
    expected: Any
    computed: Any
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.check_id,
            "anchor": self.anchor,
            "expected": _plain(self.expected),
            "computed": _plain(self.computed),
            "pass": self.passed,
            "seconds": round(self.seconds, 4),
        }


class CheckRecorder:
    """Collects timed checks for one suite run."""

    def __init__(self, prefix: str):
        self.prefix = prefix
        self.checks: List[Check] = []

    def record(self, name: str, anchor: str, expected: Any, compute: Callable[[], Any]) -> Check:
        """
        Run compute() and store the comparison with expected.

        A ComputationError becomes a failed check carrying the message; cap
        refusals propagate.
        """
        start = time.perf_counter()
        try:
            computed = compute()
        except CapExceededError:
            raise
        except ComputationError as e:
            computed = f"{type(e).__name__}: {e}"
        check = Check(f"{self.prefix}.{name}", anchor, expected, computed, time.perf_counter() - start)
        if not check.passed:
            logger.warning("Check %s failed: expected %r, computed %r", check.check_id, expected, check.computed)
        else:
            logger.debug("Check %s passed in %.3fs", check.check_id, check.seconds)
        self.checks.append(check)
        return check


@dataclass
class Report:
    """
    Outcome of a verification run.

    Attributes:
        n: Even dimension
        suite: Suite name ("all" for everything)
        checks: Individual results in execution order
        skipped: Check groups left out because of a cap
        seconds: Total wall time
    """

    n: int
    suite: str
    checks: List[Check] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dataframe(self) -> pd.DataFrame:
        rows = [c.to_dict() for c in self.checks]
        df = pd.DataFrame(rows, columns=["id", "anchor", "expected", "computed", "pass", "seconds"])
        for column in ("expected", "computed"):
            df[column] = df[column].map(str)
        return df

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "seconds": round(self.seconds, 3),
            "skipped": list(self.skipped),
            "checks": [c.to_dict() for c in self.checks],
        }
