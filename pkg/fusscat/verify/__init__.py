from .base.suite_module import SuiteModule, CheckResult
from .suites import (
    ClosedVsRecurrence,
    Sums,
    Enumeration,
    Involution,
    CycleLemma,
    Prime,
    GeneratingFunctions,
)

SUITE_REG = [
    ClosedVsRecurrence,
    Sums,
    Enumeration,
    Involution,
    CycleLemma,
    Prime,
    GeneratingFunctions,
]
