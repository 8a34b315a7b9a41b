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
import json
import logging
import os


def setup_logger(name, log_dir=None, level=logging.INFO):
    """
    Console logger on stderr, plus a DEBUG file log when a directory is
    given. Stdout is reserved for data.

    :param name: str logger name, also the log file prefix
    :param log_dir: Optional[str]
    :param level: console level
    :return: logging.Logger
    """
    logger_id = name if log_dir is None else "{}_{}".format(log_dir, name)
    logger = logging.getLogger("fusscat." + logger_id)
    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    sh = logging.StreamHandler()
    sh.setLevel(level)
    sh.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(sh)

    if log_dir is not None:
        os.makedirs(log_dir, exist_ok=True)
        log_path = os.path.join(log_dir, "{}_log.txt".format(name))
        fh = logging.FileHandler(log_path, mode="a")
        fh.setLevel(logging.DEBUG)
        fh.setFormatter(
            logging.Formatter("%(asctime)s  [%(levelname)s] %(message)s")
        )
        logger.addHandler(fh)

    return logger


def log_args(logger, args):
    for k in sorted(args):
        logger.info("{}: {}".format(k, args[k]))


def write_args_file(log_dir, args):
    with open(os.path.join(log_dir, "args.json"), "w") as args_file:
        json.dump(dict(args), args_file, indent=4, sort_keys=True)
