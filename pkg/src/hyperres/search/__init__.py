"""Extremal search for resilient families and the fixed verification suite."""

from .engine import (
    LowerBoundReport,
    SearchResult,
    SearchSpec,
    SearchSpecError,
    max_resilient_family,
    verify_lower_bound,
)
from .suite import CheckResult, SuiteReport, check_paper_suite, resilient_corpus
