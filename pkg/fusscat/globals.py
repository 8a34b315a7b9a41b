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
VERSION = "0.1.0dev0"

# Enumeration guard: maximum number of paths or trees materialised at once.
ENUM_LIMIT_ENV = "FUSS_MAX_ENUM"
DEFAULT_ENUM_LIMIT = 1000000

# Maximum number of stored cells across all layers of a built simplex.
SIMPLEX_CELL_LIMIT = 5000000
