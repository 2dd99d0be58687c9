import numpy as np
import pytest

from qubitsep import (
    ENTANGLED,
    SEPARABLE,
    BoostLimitError,
    BoostX,
    GeneralBoost,
    HSParams,
    InvalidStateError,
    NoPhysicalBoostError,
    RelabelAxesError,
    SigmaForm,
    UnsupportedDegeneracyError,
    UnsupportedFormError,
    classify,
    eliminate_and_diagonalize,
    peres_horodecki,
    r_from_hs,
    rho_from_hs,
    separability_verdict,
    sigma_pair_b1zero,
    sigma_pair_symmetric,
    solve_normal_form,
    solve_pair_general,
    solve_pair_symmetric,
    solve_symmetric_cubic,
    solve_symmetric_quartic,
)
from qubitsep.normal_form import (
    GENERIC,
    NO_PHYSICAL_BOOST,
    NON_GENERIC_A,
    NON_GENERIC_B,
    NON_GENERIC_C,
    NON_GENERIC_D,
)

# frozen from exact-root evaluation (verified against 30-digit arithmetic)
BETA_SYM_064 = 0.8381591141937414
GAMMA_SQ_064 = 3.3614654455582774
S0_SYM_064 = 0.4635781669160054
S1_SYM_064 = -0.2364218330839946
SUM_SYM_064 = 1.8042735676021249

BETA_A_B1ZERO = -0.0692966918274642
BETA_B_B1ZERO = 0.2207890075482393
SUM_B1ZERO = 0.9275622029820688

BETA1_CUBIC = 0.0792032561208348
BETA2_CUBIC = 0.1967021301502871
BETAS_QUARTIC = (0.0816147674563641, 0.2068199699475560, 0.1777353654311645)


def test_solve_pair_general_trivial():
    assert solve_pair_general(0.0, 0.0, 0.7) == (0.0, 0.0)


def test_solve_pair_general_symmetric_case():
    ba, bb = solve_pair_general(0.64, 0.64, 0.3)
    assert abs(ba - BETA_SYM_064) < 1e-12
    assert abs(bb - BETA_SYM_064) < 1e-12


def test_solve_pair_general_one_sided():
    ba, bb = solve_pair_general(0.2, 0.0, 0.3)
    assert abs(ba - BETA_A_B1ZERO) < 1e-12
    assert abs(bb - BETA_B_B1ZERO) < 1e-12
    # quadratic residual well below 1e-12
    c2 = 0.0 - 0.2 * 0.3
    c1 = 0.2**2 + 0.3**2 - 1.0
    assert abs((c2 * ba + c1) * ba + c2) < 1e-12


def test_solve_pair_general_roots_multiply_to_one():
    rng = np.random.default_rng(59)
    checked = 0
    for _ in range(500):
        a1, b1, t1 = rng.uniform(-0.95, 0.95, 3)
        c2 = b1 - a1 * t1
        c1 = a1 * a1 - b1 * b1 + t1 * t1 - 1.0
        if abs(c2) < 1e-6 or c1 * c1 - 4 * c2 * c2 <= 1e-12:
            continue
        roots = np.roots([c2, c1, c2])
        assert abs(roots[0] * roots[1] - 1.0) < 1e-8
        try:
            ba, _ = solve_pair_general(a1, b1, t1)
        except NoPhysicalBoostError:
            continue
        checked += 1
        assert abs(ba) < 1.0
        # returned root is the physical one of the pair
        assert abs(ba - roots[np.argmin(np.abs(roots))]) < 1e-8
    assert checked > 100


def test_solve_pair_general_elimination_certificate():
    rng = np.random.default_rng(61)
    for _ in range(500):
        a1, b1, t1 = rng.uniform(-0.9, 0.9, 3)
        try:
            ba, bb = solve_pair_general(a1, b1, t1)
        except NoPhysicalBoostError:
            continue
        e1 = -bb + b1 * ba * bb + a1 - ba * t1
        e2 = -ba + a1 * ba * bb + b1 - bb * t1
        assert max(abs(e1), abs(e2)) < 1e-12


def test_solve_pair_symmetric_values():
    assert solve_pair_symmetric(0.0, 0.3) == 0.0
    beta = solve_pair_symmetric(0.64, 0.3)
    assert abs(beta - BETA_SYM_064) < 1e-12
    g2 = 1.0 / (1.0 - beta * beta)
    assert abs(g2 - GAMMA_SQ_064) < 1e-12
    assert abs(beta - 0.8382) < 5e-4
    assert abs(g2 - 3.3615) < 1e-4


def test_solve_pair_symmetric_boundary():
    # 2a = 1.3 = 1 + t1: the required boost hits light speed
    with pytest.raises(BoostLimitError):
        solve_pair_symmetric(0.65, 0.3)


def test_solve_pair_symmetric_invalid_region():
    with pytest.raises(InvalidStateError):
        solve_pair_symmetric(0.9, 0.3)


def test_boundary_beta_approach():
    # just inside the boundary the solver succeeds with beta within 1e-6 of 1
    eps = 4e-13
    a = (1 + 0.3) * (1 - eps) / 2
    beta = solve_pair_symmetric(a, 0.3)
    assert beta < 1.0
    assert 1.0 - beta < 1e-6


def test_boundary_verdict_continuity():
    t1 = 0.3
    for eps in np.geomspace(1e-6, 0.1, 25):
        a = (1 + t1) * (1 - eps) / 2
        beta = solve_pair_symmetric(a, t1)
        assert abs(beta) < 1.0 - 1e-9
        p = HSParams.diagonal([a, 0, 0], [a, 0, 0], [t1, 0.1, 0.1])
        assert solve_normal_form(p).classification.kind == GENERIC


def test_sigma_pair_symmetric_reference():
    sig = sigma_pair_symmetric(0.64, [0.3, 0.3, 0.3])
    assert abs(sig.s0 - S0_SYM_064) < 1e-12
    assert abs(sig.s[0] - S1_SYM_064) < 1e-12
    assert abs(sig.s[1] - 0.3) < 1e-15 and abs(sig.s[2] - 0.3) < 1e-15
    assert abs(sig.s0 - 0.4636) < 1e-4
    assert abs(sig.tprime[1] - 0.6471) < 1e-4
    assert abs(sig.tprime_sum - SUM_SYM_064) < 1e-12
    v = separability_verdict(sig)
    assert v.kind == ENTANGLED


def test_sigma_pair_symmetric_trivial():
    sig = sigma_pair_symmetric(0.0, [0.3, -0.2, 0.1])
    assert sig.s0 == 1.0
    assert np.allclose(sig.s, [0.3, -0.2, 0.1], atol=0)


def test_sigma_pair_b1zero_reference():
    sig = sigma_pair_b1zero(0.2, [0.3, 0.3, 0.3])
    assert abs(sig.tprime_sum - SUM_B1ZERO) < 1e-12
    assert abs(sig.tprime_sum - 0.92756) < 1e-4
    assert separability_verdict(sig).kind == SEPARABLE


def test_sigma_pair_b1zero_matches_brute_force_substitution():
    # independent route: apply the axis boosts to R and renormalize
    ba, bb = solve_pair_general(0.2, 0.0, 0.3)
    p = HSParams.diagonal([0.2, 0, 0], [0, 0, 0], [0.3, 0.3, 0.3])
    sig, report = eliminate_and_diagonalize(
        r_from_hs(p), (BoostX(ba, 1), BoostX(bb, 1))
    )
    closed = sigma_pair_b1zero(0.2, [0.3, 0.3, 0.3])
    assert abs(sig.tprime_sum - closed.tprime_sum) < 1e-12
    assert abs(sig.s0 - closed.s0) < 1e-12
    assert report.offdiag_residual < 1e-12


def test_sigma_pair_b1zero_trivial_cases():
    sig = sigma_pair_b1zero(0.0, [0.4, 0.2, 0.1])
    assert sig.s0 == 1.0 and np.allclose(sig.s, [0.4, 0.2, 0.1], atol=0)
    sig = sigma_pair_b1zero(0.5, [0.0, 0.2, 0.1])
    assert abs(sig.s0 - np.sqrt(0.75)) < 1e-12
    assert abs(sig.s[0]) < 1e-15


def test_sigma_pair_b1zero_reality_violation():
    # |1 - t1^2 - a1^2| < |2 a1 t1| has no real boost
    with pytest.raises(NoPhysicalBoostError):
        sigma_pair_b1zero(0.8, [0.7, 0.0, 0.0])


def test_cubic_coefficients_and_betas(cubic_state):
    from qubitsep.normal_form import _cubic_coefficients

    coeffs = _cubic_coefficients(0.1, 0.15, np.array([0.3, -0.2, 0.4]))
    assert np.abs(coeffs - np.array([1.0, -13.65, 3.6, -0.2])).max() < 1e-12
    b1, b2 = solve_symmetric_cubic(0.1, 0.15, [0.3, -0.2, 0.4])
    assert abs(b1 - BETA1_CUBIC) < 1e-12
    assert abs(b2 - BETA2_CUBIC) < 1e-12
    assert abs(b1 - 0.0792) < 5e-5
    assert abs(b2 - 0.1967) < 5e-5
    assert b1 * b1 + b2 * b2 < 1.0


def test_cubic_trivial_and_errors():
    assert solve_symmetric_cubic(0.0, 0.0, [0.3, -0.2, 0.4]) == (0.0, 0.0)
    with pytest.raises(RelabelAxesError):
        solve_symmetric_cubic(0.0, 0.15, [0.3, -0.2, 0.4])
    with pytest.raises(UnsupportedDegeneracyError):
        solve_symmetric_cubic(0.1, 0.15, [0.3, 0.3, 0.4])


def test_cubic_ratio_identity():
    rng = np.random.default_rng(67)
    checked = 0
    for _ in range(300):
        a1, a2 = rng.uniform(-0.5, 0.5, 2)
        tdiag = rng.uniform(-0.5, 0.5, 3)
        if abs(a1) < 1e-3 or abs(tdiag[1] - tdiag[0]) < 1e-3:
            continue
        try:
            b1, b2 = solve_symmetric_cubic(a1, a2, tdiag)
        except NoPhysicalBoostError:
            continue
        if abs(b1) < 1e-12 or abs(b2) < 1e-12:
            continue
        checked += 1
        lhs = (a1 - b1 * tdiag[0]) / b1
        rhs = (a2 - b2 * tdiag[1]) / b2
        assert abs(lhs - rhs) < 1e-10
    assert checked > 50


def test_quartic_coefficients_and_betas(quartic_state):
    from qubitsep.normal_form import _quartic_coefficients

    coeffs = _quartic_coefficients(
        np.array([0.1, 0.15, 0.2]), np.array([0.3, -0.2, 0.2])
    )
    assert np.abs(coeffs - np.array([1.0, -18.65, 18.05, -3.8, 0.2])).max() < 1e-12
    betas = solve_symmetric_quartic([0.1, 0.15, 0.2], [0.3, -0.2, 0.2])
    for got, frozen, printed in zip(betas, BETAS_QUARTIC, (0.0816, 0.2068, 0.1777)):
        assert abs(got - frozen) < 1e-12
        assert abs(got - printed) < 2e-3
    assert sum(x * x for x in betas) < 1.0


def test_quartic_fundamental_identity():
    a = np.array([0.1, 0.15, 0.2])
    t = np.array([0.3, -0.2, 0.2])
    betas = np.array(solve_symmetric_quartic(a, t))
    lhs = (a[0] - betas[0] * t[0]) / betas[0]
    rhs = 1.0 - float(a @ betas)
    assert abs(lhs - rhs) < 1e-10


def test_quartic_continuity_to_zero():
    for eps in (1e-2, 1e-3, 1e-4):
        betas = solve_symmetric_quartic([eps, eps, eps], [0.3, -0.2, 0.2])
        assert np.abs(betas).max() < 5 * eps


def test_quartic_errors():
    with pytest.raises(RelabelAxesError):
        solve_symmetric_quartic([0.1, 0.0, 0.2], [0.3, -0.2, 0.2])
    with pytest.raises(UnsupportedDegeneracyError):
        solve_symmetric_quartic([0.1, 0.15, 0.2], [0.3, -0.2, -0.2])


def test_eliminate_identity_case():
    p = HSParams.diagonal([0, 0, 0], [0, 0, 0], [0.2, -0.5, 0.3])
    sig, report = eliminate_and_diagonalize(r_from_hs(p), GeneralBoost(np.zeros(3)))
    assert sig.s0 == 1.0
    assert np.allclose(sig.s, [-0.5, 0.3, 0.2], atol=1e-15)  # descending |s|
    assert report.offdiag_residual == 0.0


def test_eliminate_reference_cubic(cubic_state):
    b1, b2 = solve_symmetric_cubic(0.1, 0.15, [0.3, -0.2, 0.4])
    sig, report = eliminate_and_diagonalize(
        r_from_hs(cubic_state), GeneralBoost(np.array([b1, b2, 0.0]))
    )
    q_expected = np.array(
        [
            [0.96257, 0, 0, 0],
            [0, 0.292049, -0.015808, 0],
            [0, -0.015808, -0.229474, 0],
            [0, 0, 0, 0.4],
        ]
    )
    q_raw = (
        GeneralBoost(np.array([b1, b2, 0.0])).matrix
        @ r_from_hs(cubic_state).raw
        @ GeneralBoost(np.array([b1, b2, 0.0])).matrix.T
    )
    assert np.abs(q_raw - q_expected).max() < 5e-4
    assert report.offdiag_residual < 1e-12
    assert abs(sig.s0 - 0.96257) < 5e-5
    expected_ratios = np.array([0.415552, 0.303945, -0.238396])  # descending |s|
    assert np.abs(sig.tprime - expected_ratios).max() < 1e-3
    assert abs(sig.tprime_sum - 0.957893) < 1e-3


def test_eliminate_reference_quartic(quartic_state):
    betas = solve_symmetric_quartic([0.1, 0.15, 0.2], [0.3, -0.2, 0.2])
    boost = GeneralBoost(np.array(betas))
    q_expected = np.array(
        [
            [0.92527, 0, 0, 0],
            [0, 0.29218, -0.01648, -0.01713],
            [0, -0.01648, -0.230845, -0.03401],
            [0, -0.01713, -0.03401, 0.16432],
        ]
    )
    q_raw = boost.matrix @ r_from_hs(quartic_state).raw @ boost.matrix.T
    assert np.abs(q_raw - q_expected).max() < 5e-3
    sig, report = eliminate_and_diagonalize(r_from_hs(quartic_state), boost)
    assert report.offdiag_residual < 1e-9
    assert abs(sig.s0 - 0.9257) < 5e-3
    assert np.abs(sig.s - np.array([0.2943, -0.2344, 0.1653])).max() < 5e-3
    assert sig.tprime_sum < 1.0


def test_separability_verdict_examples():
    v = separability_verdict(SigmaForm(1.0, np.array([0.3, 0.3, 0.3])))
    assert v.kind == SEPARABLE and abs(v.witness + 0.1) < 1e-12
    sig = SigmaForm(0.5, np.array([0.3, 0.3, 0.3]))
    assert separability_verdict(sig).kind == ENTANGLED


def test_classify_non_generic_cases():
    a_case = HSParams.diagonal([1, 0, 0], [0, 0, 0], [0, 0, 0])
    assert classify(a_case).kind == NON_GENERIC_A
    b_case = HSParams.diagonal([0, 0, 0], [0, 1, 0], [0, 0, 0])
    assert classify(b_case).kind == NON_GENERIC_B
    c_case = HSParams.diagonal([0.5, 0, 0], [0.5, 0, 0], [0, 0, 0])
    assert classify(c_case).kind == NON_GENERIC_C
    d_case = HSParams.diagonal([1, 0, 0], [1, 0, 0], [1, 0, 0])
    cls = classify(d_case)
    assert cls.kind == NON_GENERIC_D
    assert "entangled" in cls.detail


def test_classify_non_generic_axis_permutation():
    a_case = HSParams.diagonal([0, 0, -1], [0, 0, 0], [0, 0, 0])
    assert classify(a_case).kind == NON_GENERIC_A
    c_case = HSParams.diagonal([0, 0.5, 0], [0, 0.5, 0], [0.2, 0, 0.2])
    assert classify(c_case).kind == NON_GENERIC_C


def test_classify_generic_and_boundary(pair64):
    assert classify(pair64).kind == GENERIC
    boundary = HSParams.diagonal([0.65, 0, 0], [0.65, 0, 0], [0.3, 0.1, 0.1])
    cls = classify(boundary)
    assert cls.kind == NO_PHYSICAL_BOOST


def test_classify_requires_diagonal_t():
    with pytest.raises(UnsupportedFormError):
        classify(HSParams(np.zeros(3), np.zeros(3), np.ones((3, 3))))


def test_classify_unsupported_family():
    p = HSParams.diagonal([0.2, 0, 0], [0, 0.3, 0], [0.1, 0.1, 0.1])
    cls = classify(p)
    assert cls.kind == NO_PHYSICAL_BOOST
    assert "not symmetric" in cls.detail


def test_solver_reports_offdiag_certificate(pair64):
    report = solve_normal_form(pair64)
    assert report.classification.kind == GENERIC
    assert report.offdiag_residual < 1e-9
    assert report.boost_kind == "pair"
    assert report.axis == 2


def test_single_pair_axis_relabeling_invariance():
    # the normalized sum must not depend on which axis carries the pair
    base_t = [0.3, -0.1, 0.45]
    sums = []
    for axis in range(3):
        a = np.zeros(3)
        b = np.zeros(3)
        a[axis] = 0.35
        b[axis] = -0.15
        order = [axis % 3, (axis + 1) % 3, (axis + 2) % 3]
        tdiag = np.empty(3)
        tdiag[order] = base_t
        report = solve_normal_form(HSParams.diagonal(a, b, tdiag))
        assert report.classification.kind == GENERIC
        sums.append(report.sigma.tprime_sum)
    assert max(sums) - min(sums) < 1e-9


def test_symmetric_two_driver_handles_any_zero_axis(cubic_state):
    ref = solve_normal_form(cubic_state).sigma.tprime_sum
    for order in ((2, 0, 1), (1, 2, 0), (0, 2, 1)):
        idx = np.asarray(order)
        p = HSParams.diagonal(
            cubic_state.a[idx], cubic_state.b[idx], np.diag(cubic_state.t)[idx]
        )
        report = solve_normal_form(p)
        assert report.classification.kind == GENERIC
        assert abs(report.sigma.tprime_sum - ref) < 1e-9


def test_degenerate_quadratic_family():
    # symmetric pair with t1 = 1: the beta_a quadratic vanishes identically;
    # beta_a = 0 with beta_b = a still eliminates the linear block exactly
    for a, t2 in ((0.3, 0.2), (-0.4, 0.1)):
        p = HSParams.diagonal([a, 0, 0], [a, 0, 0], [1.0, t2, -t2])
        rho = rho_from_hs(p)
        report = solve_normal_form(p)
        assert report.classification.kind == GENERIC
        assert report.offdiag_residual < 1e-12
        lorentz = separability_verdict(report.sigma)
        assert lorentz.kind == peres_horodecki(rho).kind == ENTANGLED


def test_entangled_member_of_case_c_family():
    # equal transverse correlations on a half-strength symmetric pair stay
    # non-generic, and the exact test still supplies the (entangled) verdict
    p = HSParams.diagonal([0.5, 0, 0], [0.5, 0, 0], [0.0, 0.4, 0.4])
    assert classify(p).kind == NON_GENERIC_C
    assert peres_horodecki(rho_from_hs(p)).kind == ENTANGLED


def test_driver_verdicts_agree_with_ppt_on_references(
    pair64, one_sided02, cubic_state, quartic_state
):
    for p in (pair64, one_sided02, cubic_state, quartic_state):
        report = solve_normal_form(p)
        assert report.classification.kind == GENERIC
        lorentz = separability_verdict(report.sigma)
        ppt = peres_horodecki(rho_from_hs(p))
        assert lorentz.kind == ppt.kind
