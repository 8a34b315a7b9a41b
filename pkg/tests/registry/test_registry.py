import unittest

from fusscat.registry import Registry
from fusscat.verify import SuiteModule


class NotSubclass:
    pass


class ArgsNotImplemented(SuiteModule):
    name = "no-args"

    def checks(self):
        return []


class NameNotImplemented(SuiteModule):
    args = {}

    def checks(self):
        return []


class AlwaysPasses(SuiteModule):
    name = "always-passes"
    args = {"n_max": 3}

    def checks(self):
        yield "trivial", {"n_max": self.args.n_max}, lambda: None


class TestRegistry(unittest.TestCase):
    def test_register_invalid_class(self):
        registry = Registry()
        with self.assertRaises(AssertionError):
            registry.register_suite(NotSubclass)

    def test_register_args_not_implemented(self):
        registry = Registry()
        with self.assertRaises(NotImplementedError):
            registry.register_suite(ArgsNotImplemented)

    def test_register_name_not_implemented(self):
        registry = Registry()
        with self.assertRaises(NotImplementedError):
            registry.register_suite(NameNotImplemented)

    def test_builtin_suites(self):
        assert Registry().suite_names() == [
            "closed-vs-recurrence",
            "cycle-lemma",
            "enumeration",
            "gf",
            "involution",
            "prime",
            "sums",
        ]

    def test_lookup(self):
        registry = Registry()
        assert registry.lookup_suite("sums").name == "sums"
        with self.assertRaises(ValueError):
            registry.lookup_suite("nope")

    def test_resolve_all_sorted(self):
        registry = Registry().register_suite(AlwaysPasses)
        names = [cls.name for cls in registry.resolve_suites("all")]
        assert names == sorted(names)
        assert "always-passes" in names

    def test_external_suite_runs(self):
        results = AlwaysPasses.from_args({}).run()
        assert [(r.name, r.passed) for r in results] == [("trivial", True)]


if __name__ == "__main__":
    unittest.main(verbosity=1)
