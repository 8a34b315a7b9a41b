from .simplex import (
    FCSimplex,
    SimplexLayer,
    build_simplex,
    entry,
    layer_sum,
    layer_size,
    simplex_keys,
)
from .prime_grid import PrimeGrid, build_prime_grid
