# Copyright (C) 2026 The fusscat authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
import abc
from collections import namedtuple
from time import time

from fusscat.utils.requires_args import RequiresArgsMixin
from fusscat.utils.util import DotDict

CheckResult = namedtuple(
    "CheckResult", ["name", "bound", "passed", "counterexample"]
)


def first_mismatch(cases):
    """
    :param cases: Iterable[(index, actual, expected)]
    :return: the first index whose actual value differs, else None
    """
    for index, actual, expected in cases:
        if actual != expected:
            return index
    return None


def first_failure(cases):
    """
    :param cases: Iterable[(index, ok)]
    :return: the first index with ok False, else None
    """
    for index, ok in cases:
        if not ok:
            return index
    return None


class SuiteModule(RequiresArgsMixin, metaclass=abc.ABCMeta):
    """
    A named group of exact checks. Subclasses set ``name`` (the value of
    ``verify --suite``), ``args`` (quick bounds), optionally ``full_args``,
    and implement ``checks()``.
    """

    name = None

    def __init__(self, args):
        self.args = DotDict(args)

    @classmethod
    def check_name_implemented(cls):
        if cls.name is None:
            raise NotImplementedError(
                'Subclass must define class attribute "name"'
            )

    @classmethod
    def from_args(cls, args):
        return cls({**cls.args, **args})

    @classmethod
    def apply_overrides(cls, args, p=None, n_max=None):
        """
        Narrow the bounds from the command line.

        :param args: Dict[str, Any]
        :param p: Optional[int] restrict to this arity
        :param n_max: Optional[int] largest layer
        :return: Dict[str, Any]
        """
        args = dict(args)
        if p is not None and "p_min" in args:
            args["p_min"] = args["p_max"] = p
        if n_max is not None and "n_max" in args:
            args["n_max"] = n_max
        return args

    def arities(self):
        return range(self.args.p_min, self.args.p_max + 1)

    @abc.abstractmethod
    def checks(self):
        """
        :return: Iterable[(name, bound, check)] where check() returns the
            first counterexample or None
        """
        raise NotImplementedError

    def run(self, logger=None, checks=None):
        """
        :param logger: Optional[logging.Logger]
        :param checks: Optional subset of self.checks()
        :return: List[CheckResult]
        """
        if checks is None:
            checks = self.checks()
        results = []
        for check_name, bound, check in checks:
            start = time()
            counterexample = check()
            result = CheckResult(
                check_name, bound, counterexample is None, counterexample
            )
            results.append(result)
            if logger is not None:
                logger.info(
                    "[{}] {} {} ({:.2f}s){}".format(
                        self.name,
                        check_name,
                        "pass" if result.passed else "FAIL",
                        time() - start,
                        ""
                        if result.passed
                        else " first counterexample: {}".format(counterexample),
                    )
                )
        return results
