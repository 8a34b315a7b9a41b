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
from fusscat.verify.base.suite_module import SuiteModule


class Registry:
    def __init__(self):
        self._suite_class_by_id = {}
        self._register_suites()

    # SUITE METHODS
    def register_suite(self, suite_class):
        """
        Use your own verification suite.

        :param suite_class: fusscat.verify.SuiteModule. Your custom class.
        :return:
        """
        assert issubclass(suite_class, SuiteModule)
        suite_class.check_args_implemented()
        suite_class.check_name_implemented()
        if suite_class.name == "all":
            raise ValueError('"all" is reserved for running every suite')
        self._suite_class_by_id[suite_class.name] = suite_class
        return self

    def lookup_suite(self, suite_name):
        try:
            return self._suite_class_by_id[suite_name]
        except KeyError:
            raise ValueError(
                'Unknown suite "{}", expected one of: all, {}'.format(
                    suite_name, ", ".join(self.suite_names())
                )
            )

    def suite_names(self):
        return sorted(self._suite_class_by_id)

    def resolve_suites(self, suite_name):
        """
        :param suite_name: str, a registered name or "all"
        :return: List[type] sorted by suite name
        """
        if suite_name == "all":
            return [self._suite_class_by_id[n] for n in self.suite_names()]
        return [self.lookup_suite(suite_name)]

    def _register_suites(self):
        from fusscat.verify import SUITE_REG

        for suite in SUITE_REG:
            self.register_suite(suite)
