from .truncated import (
    TruncatedSeries,
    add,
    mul,
    negate,
    swap_xy,
    reciprocal,
    coefficient,
    series_to_frame,
)
from .generating import (
    DEFAULT_CAPS,
    solve_G,
    build_F,
    cubic_residual,
    residual_F,
    residual_G,
    residual_G_swapped,
    rational_b3prime,
)
