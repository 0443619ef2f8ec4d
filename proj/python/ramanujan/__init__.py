"""Ramanujan's tau function, Hecke and congruence checks, and p-adic tools."""

from ._core import (
    EnumerationBudgetError,
    TauTable,
    ap_sweep,
    count_affine_by_character,
    count_affine_naive,
    evaluate_delta,
    find_counterexample_scan,
    has_root_in_zp,
    hecke_apply,
    hensel_lift,
    is_square_in_qp,
    mobius_act,
    monic_integrality,
    padic_abs,
    reduce_curve,
    roots_mod_pk,
    run_cli,
    tau,
    tau_extended,
    tau_table_via_cube,
    verify_congruence,
    verify_conjecture_one,
    verify_deligne_bound,
    verify_eigenform,
    vp,
)

__all__ = [name for name in dir() if not name.startswith("_")]
