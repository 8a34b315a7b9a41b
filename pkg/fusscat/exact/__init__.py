from .core import (
    StatIndex,
    stat_index,
    check_arity,
    exact_div,
    binomial,
    catalan,
    fuss_catalan,
    ballot,
    ballot_general,
    ballot_probability,
    b3_closed,
    b3_closed_symmetric,
    cycle_lemma_count,
    bp_closed,
    b3_prime,
    b3_prime_correction,
)
