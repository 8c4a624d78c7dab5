"""Exact-arithmetic engine for supersymmetric functions on strict partitions.

Everything is computed over the rationals with no floating point anywhere:
Schur P/Q-functions and projective character tables, factorial Schur
P*-functions, the deformed power-sum basis frak-p, shifted Plancherel
measures and their averages (brute-force and closed-form polynomials in n),
content evaluations, and the Han-Xiong corner functions.
"""

from .content import (
    EvenPolynomial,
    OrdinaryPSumExpr,
    c_hat,
    hat_F,
    hat_F_eval_direct,
    hat_p,
    phi_series_check,
    psi,
    psi_direct,
    rewrite_XY,
)
from .explorer import (
    P2Report,
    ScanReport,
    StructureConstantRecord,
    deg1_conjecture_scan,
    p2_experiment,
    structure_constants,
)
from .factorial import (
    SignedIndex,
    normalize_index,
    p_star,
    p_star_eval,
    psi_iso,
    psi_iso_inverse,
)
from .frakp import (
    FrakExpansion,
    assemble,
    deg1,
    expand_gamma_in_frak,
    expand_p_in_frak,
    frak_p,
    frak_p_eval,
    tilde,
)
from .gamma import GammaElement, scalar_product
from .partitions import (
    Cell,
    OddPartition,
    OrdinaryPartition,
    StrictPartition,
    add_cell,
    corners,
    enumerate_odd,
    enumerate_ordinary,
    enumerate_strict,
    falling,
    g,
    g_skew,
    inner_corners,
    outer_corners,
    remove_cell,
    shifted_cells,
    stirling2,
    z,
)
from .plancherel import (
    PolynomialInN,
    average_bruteforce,
    average_mu_bruteforce,
    average_mu_symbolic,
    average_symbolic,
    falling_shifted,
    prob,
    prob_mu,
    product_average_check,
    product_average_closed_form,
)
from .schurq import (
    CharacterTable,
    character,
    character_table,
    character_via_scalar,
    expand_in_P,
    expand_p_in_P,
    p_fn,
    q,
    q_onerow,
)

__version__ = "0.1.0"
