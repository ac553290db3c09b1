from .classify import (
    Verdict,
    check_direct_finiteness,
    choose_prime,
    direct_finiteness_verdict,
    g1_action_matrices,
    g1_basis,
    g1_equivalent_to_rep,
    prime_for_polynomial,
    rep_direct_finiteness,
    root_of_unity_angles,
    satisfies_g1,
    verify_g1_invariance,
)
