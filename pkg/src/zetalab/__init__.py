"""Certified experiments around the product zeta(s) L(s): ball
arithmetic, quadratic character sums, L-values with closed forms,
continued fractions, and combined rational approximation sequences."""

from .approx_seq import (
    CombinedEntry,
    CombinedTable,
    HypothesisReport,
    ProductScanReport,
    SandwichReport,
    beta_mirror,
    combined_sequence,
    fixed_row_sandwich,
    product_upper_bound_scan,
    rational_hypothesis_experiment,
)
from .ball import (
    Comparison,
    PrecisionContext,
    RealBall,
    Verdict,
    ZeroStraddleError,
    absolute,
    add,
    compare_to_rational,
    div,
    encloses,
    mul,
    neg,
    pi,
    pow_int,
    recip,
    sub,
)
from .diophantine import (
    CFExpansion,
    Convergent,
    ScanReport,
    Termination,
    cf_expand,
    convergents,
    dirichlet_check,
    irrationality_scan,
    mu_estimate,
    rationality_lower_bound_check,
)
from .dirichlet import (
    DirichletCharacter,
    UnsupportedModulusError,
    chi4,
    kronecker,
    quadratic_character,
    r_divisor,
    r_divisor_table,
    r_lattice,
    r_lattice_table,
)
from .exact_arith import bernoulli, binomial, euler_number, factorial
from .lseries import (
    ClosedFormValue,
    ScalingFit,
    SummatoryRecord,
    beta,
    beta_odd_closed,
    beta_scaling_experiment,
    dedekind_product,
    euler_product_exact,
    euler_product_inv_zeta,
    scaling_experiment,
    summatory,
    zeta,
    zeta_even_closed,
)

__version__ = "0.1.0"
