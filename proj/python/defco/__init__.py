"""Defective graph coloring: exact tree-decomposition DP, approximations,
structural solvers and hardness gadgets."""

from ._defco import (
    BudgetExceeded,
    Graph,
    HardnessInstance,
    InputError,
    MccInstance,
    PreconditionError,
    approx_plus_one,
    brute_force,
    build_hardness,
    decompose,
    deficiency_profile,
    degeneracy,
    halve,
    min_colors,
    min_deficiency,
    random_mcc,
    read_dimacs,
    solve_approx,
    solve_by_fvs,
    solve_by_vc,
    solve_double_colors,
    solve_exact,
    tower,
    treewidth_upper_bound,
    verify,
    write_dimacs,
)

__all__ = [name for name in dir() if not name.startswith("_")]
