"""Verification suites and their reports."""

from quadric_lattices.verification.report import Check, CheckRecorder, Report
from quadric_lattices.verification.suites import SUITES, resolve_workers, run_verification

__all__ = ["Check", "CheckRecorder", "Report", "SUITES", "resolve_workers", "run_verification"]
