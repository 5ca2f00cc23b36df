"""Eccentricity-based lower bounds on the algebraic connectivity of graphs."""

from ._algconn import (
    CertificateResult,
    ConvergenceError,
    Graph,
    ParseError,
    bound_g1,
    bound_g1_diam,
    bound_g2,
    bound_lu,
    bound_mohar,
    bound_s1,
    bound_s2_over_n,
    certify_g1_matrix,
    certify_g2_matrix,
    check_chain,
    complement,
    count_s_ell,
    distances,
    eccentricities,
    eigen_decompose,
    evaluate_all,
    gamma,
    generate,
    is_psd,
    lambda2,
    laplacian,
    power_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
