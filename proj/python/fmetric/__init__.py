"""F-metric spaces: axiom checks, derived metrics, topology and contractions."""

from ._core import (
    FiniteSpace,
    FmetricError,
    Gauge,
    ball_members,
    check_D1_D2,
    check_D3,
    check_sandwich,
    classify,
    closure_approx,
    delta_for_epsilon,
    derive_metric,
    eventually_constant,
    gen_exp,
    gen_hybrid,
    gen_square_grid,
    greedy_net,
    is_F_cauchy,
    is_F_convergent_to,
    is_F_open,
    iteration_bound,
    min_alpha,
    shortest_chain_infimum,
    solve_fixed_point,
)

__all__ = [
    "FiniteSpace",
    "FmetricError",
    "Gauge",
    "ball_members",
    "check_D1_D2",
    "check_D3",
    "check_sandwich",
    "classify",
    "closure_approx",
    "delta_for_epsilon",
    "derive_metric",
    "eventually_constant",
    "gen_exp",
    "gen_hybrid",
    "gen_square_grid",
    "greedy_net",
    "is_F_cauchy",
    "is_F_convergent_to",
    "is_F_open",
    "iteration_bound",
    "min_alpha",
    "shortest_chain_infimum",
    "solve_fixed_point",
]
