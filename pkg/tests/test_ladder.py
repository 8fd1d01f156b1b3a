"""Ladder recurrences, coefficients, Casimir, and the truncated matrices."""

import math

import mpmath
import numpy as np
import pytest

from diracladder import (
    DomainError,
    NotAnEigenfunction,
    PrecisionLimit,
    WrongBranch,
    apply_casimir,
    apply_lowering,
    apply_omega3,
    apply_raising,
    c_minus,
    c_plus,
    commutator_check,
    ground_ladder_function,
    make_channel,
    matrix_representation,
    negative_branch_ground,
    positive_operator_check,
    raise_to_rank,
)
from diracladder.ladder import LadderFunction

LAM = 1.3660254037844386468           # zeta=0.5, j=1/2 channel
C0_REF = 1.9053062883085296678        # 2^(lam-1/2)/sqrt(Gamma(2*lam-1))
CPLUS_REF = 1.6528916502810694801     # sqrt(2*lam)
POSITIVE_K0 = 3.2320508075688772935   # lam*(lam+1)
POSITIVE_K2 = 22.160254037844386468   # 2*(lam+2)^2 - lam*(lam-1)


def ground():
    return ground_ladder_function(make_channel(0.5, -1, 0.5).lam)


def test_ground_member():
    f = ground()
    assert f.mu == f.lam
    assert f.rank == 0
    assert f.coeffs[0] == pytest.approx(C0_REF, abs=1e-14)
    assert f.norm_squared() == pytest.approx(1.0, abs=1e-13)


def test_ground_requires_lam_above_half():
    with pytest.raises(DomainError):
        ground_ladder_function(0.5)
    with pytest.raises(DomainError):
        ground_ladder_function(0.2)


def test_lowering_annihilates_ground():
    f = ground()
    zero, coeff = apply_lowering(f)
    assert zero.is_zero
    assert coeff == 0


def test_raising_coefficient_and_degree():
    f = ground()
    up, coeff = apply_raising(f)
    assert coeff == pytest.approx(CPLUS_REF, abs=1e-14)
    assert up.rank == 1
    assert up.mu == pytest.approx(f.mu + 1, abs=1e-14)
    assert up.norm_squared() == pytest.approx(1.0, abs=1e-12)


def test_coefficient_labels():
    omega = LAM * (LAM - 1)
    for k in range(6):
        mu = LAM + k
        assert c_plus(LAM, mu) == pytest.approx(
            math.sqrt(mu * (mu + 1) - omega), abs=1e-13)
        assert c_minus(LAM, mu + 1) == pytest.approx(
            -math.sqrt((mu + 1) * mu - omega), abs=1e-13)
    # bottom of the tower: lowering out of mu = lam gives zero amplitude
    assert c_minus(LAM, LAM) == pytest.approx(0.0, abs=1e-15)
    # adjacent product reproduces the lower.raise eigenvalue
    mu = LAM + 2
    assert c_minus(LAM, mu + 1) * c_plus(LAM, mu) == pytest.approx(
        -(mu * (mu + 1) - omega), rel=1e-13)


def test_round_trip_returns_same_polynomial():
    f = raise_to_rank(ground(), 4)
    up, c_up = apply_raising(f)
    back, c_down = apply_lowering(up)
    assert c_down == pytest.approx(-c_up, rel=1e-12)
    for a, b in zip(back.coeffs, f.coeffs):
        assert a == pytest.approx(b, rel=1e-11, abs=1e-13)


def test_raise_to_rank_degree_bookkeeping():
    for k in (0, 1, 3, 7):
        f = raise_to_rank(ground(), k)
        assert f.rank == k
        assert f.degree == k
        assert f.mu == pytest.approx(LAM + k, abs=1e-12)


def test_float_rank_ceiling():
    with pytest.raises(PrecisionLimit):
        raise_to_rank(ground(), 61)
    # extended precision lifts the ceiling
    with mpmath.workdps(40):
        f = ground_ladder_function(mpmath.mpf(1) + mpmath.sqrt(mpmath.mpf(3)) / 2)
        g = raise_to_rank(f, 65)
        assert g.rank == 65


def test_weight_operator():
    f = raise_to_rank(ground(), 2)
    same, mu = apply_omega3(f)
    assert same is f
    assert mu == f.mu


def test_casimir_eigenvalue_constant_along_tower():
    omega = LAM * (LAM - 1)
    f = ground()
    for _ in range(8):
        _, val = apply_casimir(f)
        assert val == pytest.approx(omega, rel=1e-10)
        f, _ = apply_raising(f)


def test_casimir_on_negative_branch_ground():
    f = negative_branch_ground(LAM)
    _, val = apply_casimir(f)
    assert val == pytest.approx(LAM * (LAM - 1), rel=1e-12)


def test_casimir_rejects_non_eigenfunctions():
    f = raise_to_rank(ground(), 3)
    # breaking one coefficient breaks the eigenvalue equation
    broken = LadderFunction(lam=f.lam, mu=f.mu,
                            coeffs=f.coeffs[:-1] + (f.coeffs[-1] * 1.5,),
                            branch=f.branch)
    with pytest.raises(NotAnEigenfunction):
        apply_casimir(broken)
    with pytest.raises(DomainError):
        apply_casimir(LadderFunction(lam=LAM, mu=LAM, coeffs=(0.0,),
                                     branch="positive"))


def test_commutator_report():
    rep = commutator_check(raise_to_rank(ground(), 5))
    assert rep.all_passed
    assert len(rep.checks) == 4


def test_recurrences_match_numerical_differentiation():
    # raising acts on the full function as rho*d/drho - rho + mu + 1/2,
    # lowering as rho*d/drho + rho - mu + 1/2; check both against five-point
    # central differences of the sampled member
    f = raise_to_rank(ground(), 2)
    up, c_up = apply_raising(f)
    down, c_down = apply_lowering(f)
    mu = f.mu
    h = 1e-3
    for rho in (0.7, 1.9, 4.3):
        stencil = np.array([f.evaluate(rho + i * h) for i in (-2, -1, 1, 2)])
        deriv = (stencil[0] - 8 * stencil[1] + 8 * stencil[2] - stencil[3]) / (12 * h)
        val = f.evaluate(rho)
        raised = rho * deriv - rho * val + (mu + 0.5) * val
        lowered = rho * deriv + rho * val - (mu - 0.5) * val
        assert raised == pytest.approx(c_up * up.evaluate(rho), rel=1e-9)
        assert lowered == pytest.approx(c_down * down.evaluate(rho), rel=1e-9)


def test_evaluate_domain():
    f = ground()
    with pytest.raises(DomainError):
        f.evaluate(0.0)
    with pytest.raises(DomainError):
        f.evaluate(-1.0)
    with pytest.raises(DomainError):
        f.evaluate(np.array([0.5, -0.5]))


def test_negative_branch_shape_and_norm_guard():
    f = negative_branch_ground(LAM)
    assert f.mu == -LAM
    # q == 1: the member is exactly rho^(lam-1/2) * e^(+rho)
    for rho in (20.0, 30.0, 40.0):
        expected = rho ** (LAM - 0.5) * math.exp(rho)
        assert f.evaluate(rho) == pytest.approx(expected, rel=1e-12)
    with pytest.raises(WrongBranch):
        f.norm_squared()


def test_positive_form_frozen_values():
    f = ground()
    assert positive_operator_check(f) == pytest.approx(POSITIVE_K0, abs=1e-11)
    f2 = raise_to_rank(f, 2)
    assert positive_operator_check(f2) == pytest.approx(POSITIVE_K2, abs=1e-10)
    with pytest.raises(WrongBranch):
        positive_operator_check(negative_branch_ground(LAM))


def test_positive_form_stays_accurate_at_high_rank():
    # the Gamma-moment sums cancel heavily here; the label must still match
    f = raise_to_rank(ground(), 12)
    label = 2 * f.mu**2 - LAM * (LAM - 1)
    assert positive_operator_check(f) == pytest.approx(label, rel=1e-11)


def test_matrix_validation():
    with pytest.raises(DomainError):
        matrix_representation("omega4", LAM, 3)
    with pytest.raises(DomainError):
        matrix_representation("omega1", LAM, 0)
    with pytest.raises(DomainError):
        matrix_representation("omega1", LAM, 2.5)
    with pytest.raises(DomainError):
        matrix_representation("omega1", 0.4, 3)


def test_matrix_basis_and_symmetry_classes():
    K = 5
    m1 = matrix_representation("omega1", LAM, K)
    m2 = matrix_representation("omega2", LAM, K)
    m3 = matrix_representation("omega3", LAM, K)
    mus = np.array(m1.basis_mus)
    assert len(mus) == 2 * (K + 1)
    assert np.all(np.diff(mus) > 0)
    assert np.array_equal(mus, -mus[::-1])

    a1, a2, a3 = m1.as_array(), m2.as_array(), m3.as_array()
    # symmetry classes hold exactly, not just to roundoff
    assert np.array_equal(a1, -a1.T)
    assert np.array_equal(a2, a2.T)
    assert np.array_equal(a2, -a2.conj().T)
    assert np.all(a1.imag == 0)
    assert np.all(a2.real == 0)
    assert np.array_equal(a3, np.diag(mus.astype(complex)))
    assert np.trace(a1) == 0
    assert np.trace(a2) == 0


def test_matrix_commutator_interior_rows():
    K = 8
    a1 = matrix_representation("omega1", LAM, K).as_array()
    a2 = matrix_representation("omega2", LAM, K).as_array()
    a3 = matrix_representation("omega3", LAM, K).as_array()
    comm = a1 @ a2 - a2 @ a1 - 1j * a3
    interior = comm[1:-1, :]
    assert np.abs(interior).max() < 1e-12
    # boundary rows carry the truncation artifact and are exempt
    assert np.abs(comm[0]).max() > 0.1


def test_matrix_towers_disconnected():
    K = 4
    a1 = matrix_representation("omega1", LAM, K).as_array()
    n = K + 1
    assert np.all(a1[:n, n:] == 0)
    assert np.all(a1[n:, :n] == 0)


def test_nearest_neighbour_element_frozen():
    m1 = matrix_representation("omega1", LAM, 3)
    a1 = m1.as_array()
    col = m1.basis_mus.index(min(mu for mu in m1.basis_mus if mu > 0))
    # <lam|omega1|lam+1> = -(1/2) sqrt(2 lam)
    assert a1[col, col + 1].real == pytest.approx(-0.82644582514053474005, abs=1e-13)


def test_extended_precision_tower():
    with mpmath.workdps(40):
        lam = mpmath.mpf(1) + mpmath.sqrt(mpmath.mpf(3)) / 2
        f = raise_to_rank(ground_ladder_function(lam), 5)
        rep = commutator_check(f, tolerance=1e-30)
        assert rep.all_passed
        assert abs(f.norm_squared() - 1) < mpmath.mpf("1e-35")
