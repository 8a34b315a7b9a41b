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
import os

from fusscat.globals import DEFAULT_ENUM_LIMIT, ENUM_LIMIT_ENV


class ResourceLimitError(ValueError):
    """
    Raised when a request would materialise more objects than allowed.
    """

    def __init__(self, what, requested, limit):
        self.what = what
        self.requested = requested
        self.limit = limit
        super(ResourceLimitError, self).__init__(
            "Refusing to build {} {} (limit is {}). Raise the limit with "
            "--limit or the {} environment variable.".format(
                requested, what, limit, ENUM_LIMIT_ENV
            )
        )


def enumeration_limit(override=None):
    """
    Resolve the active enumeration guard.

    :param override: Optional[int] explicit limit, wins over the environment
    :return: int
    """
    if override is not None:
        return int(override)
    env_value = os.environ.get(ENUM_LIMIT_ENV)
    if env_value:
        return int(float(env_value))
    return DEFAULT_ENUM_LIMIT


def check_resource(what, requested, limit):
    if requested > limit:
        raise ResourceLimitError(what, requested, limit)
    return requested


def exact_int_list(values):
    """
    Nested numpy object arrays -> nested lists of Python ints.
    """
    if hasattr(values, "tolist"):
        values = values.tolist()
    if isinstance(values, list):
        return [exact_int_list(v) for v in values]
    return int(values)


class DotDict(dict):
    """
    Dictionary with attribute access. Missing keys read as None.
    """

    __getattr__ = dict.get
    __setattr__ = dict.__setitem__
    __delattr__ = dict.__delitem__

    def __getstate__(self):
        return dict(self)

    def __setstate__(self, state):
        self.update(state)
