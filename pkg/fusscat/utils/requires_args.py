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
import json


class RequiresArgsMixin(metaclass=abc.ABCMeta):
    """
    Subclasses declare their tunable bounds as a class attribute ``args``.
    ``full_args`` optionally overrides some of them for a thorough run.
    Defaults can be shown to the user as JSON and edited before the object
    is built with ``from_args()``, which acts as a secondary constructor.
    """

    args = None  # Dict[str, Any]
    full_args = {}  # Dict[str, Any]

    @classmethod
    def check_args_implemented(cls):
        if cls.args is None:
            raise NotImplementedError(
                'Subclass must define class attribute "args"'
            )

    @classmethod
    def default_args(cls, full=False):
        """
        :param full: bool, use the thorough bounds instead of the quick ones
        :return: Dict[str, Any]
        """
        cls.check_args_implemented()
        if full:
            return {**cls.args, **cls.full_args}
        return dict(cls.args)

    @classmethod
    def prompt(cls, provided=None):
        """
        Display defaults as JSON, prompt user for changes.

        :param provided: Dict[str, Any], values replacing the defaults
        :return: Dict[str, Any] Updated config dictionary.
        """
        args = dict(cls.args)
        if provided is not None:
            args.update({k: v for k, v in provided.items() if k in args})
        return cls._prompt(cls.__name__, args)

    @staticmethod
    def _prompt(name, args):
        if not args:
            return args

        user_input = input(
            "\n{} Defaults:\n{}\n"
            "Press ENTER to use defaults. Otherwise, "
            "modify JSON keys then press ENTER.\n".format(
                name, json.dumps(args, indent=2, sort_keys=True)
            )
            + 'Example: {"n_max": 6}\n'
        )

        if user_input.strip() == "":
            return args

        updates = json.loads(user_input)
        unknown = set(updates) - set(args)
        if unknown:
            raise ValueError(
                "{} has no option(s): {}".format(name, ", ".join(sorted(unknown)))
            )
        return {**args, **updates}

    @classmethod
    @abc.abstractmethod
    def from_args(cls, args):
        raise NotImplementedError
