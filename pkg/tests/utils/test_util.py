import os
import pickle
import unittest
from unittest import mock

import numpy as np

from fusscat.globals import DEFAULT_ENUM_LIMIT
from fusscat.utils.util import (
    DotDict,
    ResourceLimitError,
    check_resource,
    enumeration_limit,
    exact_int_list,
)


class TestUtil(unittest.TestCase):
    def test_enumeration_limit(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            assert enumeration_limit() == DEFAULT_ENUM_LIMIT
        with mock.patch.dict(os.environ, {"FUSS_MAX_ENUM": "1e3"}):
            assert enumeration_limit() == 1000
            assert enumeration_limit(50) == 50

    def test_check_resource(self):
        assert check_resource("paths", 10, 10) == 10
        with self.assertRaises(ResourceLimitError) as ctx:
            check_resource("paths", 11, 10)
        assert ctx.exception.requested == 11
        assert isinstance(ctx.exception, ValueError)
        assert "FUSS_MAX_ENUM" in str(ctx.exception)

    def test_exact_int_list(self):
        values = np.empty((2, 2), dtype=object)
        values[:] = [[1, 2 ** 70], [-3, 0]]
        assert exact_int_list(values) == [[1, 2 ** 70], [-3, 0]]

    def test_dot_dict(self):
        args = DotDict({"n_max": 4})
        assert args.n_max == 4
        assert args.missing is None
        args.p = 3
        assert args["p"] == 3
        assert pickle.loads(pickle.dumps(args)) == args


if __name__ == "__main__":
    unittest.main(verbosity=2)
