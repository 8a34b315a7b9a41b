import io
import unittest
from unittest import mock

from fusscat.utils.requires_args import RequiresArgsMixin


class Stub(RequiresArgsMixin):
    args = {"k1": 0, "k2": False, "k3": 1.5, "k4": "hello"}
    full_args = {"k1": 10}

    @classmethod
    def from_args(cls, args):
        return args


class NoArgs(RequiresArgsMixin):
    @classmethod
    def from_args(cls, args):
        return args


class TestRequiresArgs(unittest.TestCase):
    def test_prompt_no_changes(self):
        with mock.patch("sys.stdin", io.StringIO("\n")):
            new_conf = Stub.prompt()
        assert new_conf == Stub.args

    def test_prompt_modify(self):
        with mock.patch("sys.stdin", io.StringIO('{"k1": 5}')):
            new_conf = Stub.prompt()
        assert new_conf["k1"] == 5
        assert new_conf["k2"] == Stub.args["k2"]
        assert new_conf["k3"] == Stub.args["k3"]
        assert new_conf["k4"] == Stub.args["k4"]

    def test_prompt_starts_from_provided(self):
        with mock.patch("sys.stdin", io.StringIO("\n")):
            new_conf = Stub.prompt({"k1": 7})
        assert new_conf["k1"] == 7

    def test_prompt_unknown_key(self):
        with mock.patch("sys.stdin", io.StringIO('{"k9": 5}')):
            with self.assertRaises(ValueError):
                Stub.prompt()

    def test_default_args(self):
        assert Stub.default_args() == Stub.args
        assert Stub.default_args(full=True)["k1"] == 10
        assert Stub.default_args(full=True)["k4"] == "hello"
        with self.assertRaises(NotImplementedError):
            NoArgs.default_args()


if __name__ == "__main__":
    unittest.main(verbosity=1)
