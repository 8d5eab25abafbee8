"""
Output formatting for reports, chamber queries and exports.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

import pandas as pd

from quadric_lattices.core.constants import OutputFormat, SCHEMA_VERSION
from quadric_lattices.io.exporters import Export
from quadric_lattices.verification.report import Report


def _ratio(pair) -> str:
    num, den = pair
    return str(num) if den == 1 else f"{num}/{den}"


class OutputFormatter:
    """
    Render results as text, JSON or CSV.
    """

    @staticmethod
    def format_report(report: Report, output_format: OutputFormat) -> str:
        if output_format == OutputFormat.JSON:
            return OutputFormatter.to_json(report.to_dict())
        if output_format == OutputFormat.CSV:
            return report.to_dataframe().to_csv(index=False)
        return OutputFormatter.format_report_text(report)

    @staticmethod
    def format_report_text(report: Report) -> str:
        """
        Human-readable verification report.

        Failed checks are listed with their expected and computed values.
        """
        output = "\n" + "=" * 60 + "\n"
        output += f"VERIFICATION n={report.n} suite={report.suite}\n"
        output += "=" * 60 + "\n\n"

        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            output += f"  [{status}] {check.check_id:<40} {check.seconds:8.3f}s\n"
        if report.skipped:
            output += "\nSkipped (above cap):\n"
            for name in report.skipped:
                output += f"  {name}\n"

        failures = report.failures
        if failures:
            output += "\nFailures:\n"
            output += "-" * 60 + "\n"
            for check in failures:
                output += f"{check.check_id}: {check.anchor}\n"
                output += f"  expected: {check.expected}\n"
                output += f"  computed: {check.computed}\n"

        output += "\n" + "=" * 60 + "\n"
        total = len(report.checks)
        output += f"{total - len(failures)}/{total} checks passed in {report.seconds:.2f}s\n"
        output += "=" * 60 + "\n"
        return output

    @staticmethod
    def format_chamber(result: Dict[str, Any], output_format: OutputFormat) -> str:
        if output_format == OutputFormat.JSON:
            return OutputFormatter.to_json(dict(schema=SCHEMA_VERSION, **result))
        if output_format == OutputFormat.CSV:
            rows = [dict(w, relation="through") for w in result["walls_through"]]
            rows += [dict(w, relation="nearest", distance_squared=_ratio(w["distance_squared"]))
                     for w in result["nearest_walls"]]
            return pd.DataFrame(rows).to_csv(index=False)

        output = "\n" + "=" * 60 + "\n"
        output += f"CHAMBER n={result['n']}\n"
        output += "=" * 60 + "\n\n"
        x = result["class"]
        output += f"Class ({x['basis']}): {', '.join(_ratio(c) for c in x['coords'])}\n"
        output += f"alpha: {', '.join(_ratio(a) for a in result['alpha'])}\n"
        output += f"Regions: {'; '.join(result['regions']) or 'none'}\n"
        counts = result["sign_counts"]
        output += f"Signs: +{counts['+']} 0:{counts['0']} -{counts['-']}\n\n"
        if result["walls_through"]:
            output += "Walls through the class:\n"
            for w in result["walls_through"]:
                output += f"  {w['wall']:<30} {w['kind']}\n"
        output += "Nearest walls:\n"
        for w in result["nearest_walls"]:
            output += f"  {w['wall']:<30} {w['kind']:<12} d^2 = {_ratio(w['distance_squared'])}\n"
        return output

    @staticmethod
    def format_export(export: Export, output_format: OutputFormat) -> str:
        if output_format == OutputFormat.JSON:
            return OutputFormatter.to_json(export.to_dict())
        if output_format == OutputFormat.CSV:
            return export.table.to_csv(index=False)
        output = "\n" + "=" * 60 + "\n"
        output += f"{export.name.upper()} n={export.n}\n"
        output += "=" * 60 + "\n\n"
        with pd.option_context("display.max_rows", None, "display.max_colwidth", 80, "display.width", 160):
            output += export.table.to_string(index=False) + "\n"
        return output

    @staticmethod
    def to_json(data: Dict[str, Any]) -> str:
        return json.dumps(data, indent=2) + "\n"

    @staticmethod
    def write(text: str, filepath: Optional[str]) -> None:
        """
        Write to filepath, or print when no path is given.
        """
        if filepath is None:
            print(text, end="")
            return
        Path(filepath).write_text(text)
