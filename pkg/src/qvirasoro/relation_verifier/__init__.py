"""Orchestration of the identity suites, the involution and the CLI."""

from .cli import build_parser, main, run_cli
from .config import SUITE_NAMES, SUITE_ORDER, ConfigError, SuiteConfig
from .pi_involution import PiInvolution
from .runner import run, run_checks, summarize, write_report
from .suites import Check, Context, execute, suite_checks

__all__ = [
    "SuiteConfig", "ConfigError", "SUITE_NAMES", "SUITE_ORDER", "PiInvolution", "Check",
    "Context", "execute", "suite_checks", "run", "run_checks", "summarize", "write_report",
    "run_cli", "build_parser", "main",
]
