from .suite_module import SuiteModule, CheckResult, first_mismatch, first_failure
