"""Channel construction, validation, and the closed-form spectrum."""

import warnings

import mpmath
import pytest

from diracladder import (
    InvalidQuantumNumber,
    Supercritical,
    SupercriticalChannelWarning,
    UnphysicalState,
    bound_energy,
    make_channel,
    mu_from_energy,
    spectrum_table,
    state_from_energy,
    zeta_from_charge,
)
from diracladder.errors import DomainError

# reference channel: zeta = 0.5, j = 1/2, eps = -1 (40-digit recomputation)
S_REF = 0.86602540378443864676
LAM_REF = 1.3660254037844386468
E_REF = {
    0: 0.86602540378443864676,
    1: 0.96592582628906828675,
    2: 0.98512105479418262854,
}


def ref_channel():
    return make_channel(0.5, -1, 0.5)


def test_reference_channel_numbers():
    ch = ref_channel()
    assert ch.tau == -1.0
    assert ch.s == pytest.approx(S_REF, abs=1e-15)
    assert ch.lam == pytest.approx(LAM_REF, abs=1e-15)
    assert ch.omega == pytest.approx(0.5, abs=1e-15)


def test_omega_equals_angular_invariant_minus_coupling_squared():
    for j in (0.5, 1.5, 2.5):
        for eps in (-1, 1):
            for zeta in (0.1, 0.5, 0.9):
                ch = make_channel(j, eps, zeta)
                assert ch.omega == pytest.approx(j * (j + 1) - zeta**2, abs=1e-14)
                assert ch.omega == pytest.approx(ch.lam * (ch.lam - 1), abs=1e-14)


def test_j_must_be_half_odd_integer():
    for bad in (0.6, 1.0, 0.0, -0.5, 2):
        with pytest.raises(InvalidQuantumNumber):
            make_channel(bad, -1, 0.5)


def test_epsilon_and_zeta_validation():
    with pytest.raises(InvalidQuantumNumber):
        make_channel(0.5, 0, 0.5)
    with pytest.raises(InvalidQuantumNumber):
        make_channel(0.5, 2, 0.5)
    with pytest.raises(InvalidQuantumNumber):
        make_channel(0.5, -1, 0.0)
    with pytest.raises(InvalidQuantumNumber):
        make_channel(0.5, -1, -0.3)


def test_supercritical_coupling_rejected():
    # s turns imaginary at zeta = j + 1/2
    with pytest.raises(Supercritical):
        make_channel(0.5, -1, 1.0)
    with pytest.raises(Supercritical):
        make_channel(0.5, -1, 1.2)
    with pytest.raises(Supercritical) as err:
        make_channel(1.5, 1, 2.0)
    assert "j=1.5" in str(err.value)
    # just below critical is fine
    make_channel(0.5, -1, 0.999)


def test_frozen_energies():
    ch = ref_channel()
    for k, e in E_REF.items():
        assert bound_energy(ch, k).energy == pytest.approx(e, abs=1e-15)


def test_k_validation():
    ch = ref_channel()
    for bad in (-1, 1.5, "2", True):
        with pytest.raises(InvalidQuantumNumber):
            bound_energy(ch, bad)


def test_nodeless_level_excluded_for_positive_epsilon():
    ch = make_channel(0.5, 1, 0.5)
    with pytest.raises(UnphysicalState) as err:
        bound_energy(ch, 0)
    assert "k=0" in str(err.value)
    # eps = -1 allows it, eps = +1 starts at k = 1
    assert bound_energy(make_channel(0.5, -1, 0.5), 0).k == 0
    assert bound_energy(ch, 1).k == 1


def test_epsilon_pairs_are_exactly_degenerate_above_ground():
    for k in (1, 2, 5):
        e_minus = bound_energy(make_channel(0.5, -1, 0.5), k).energy
        e_plus = bound_energy(make_channel(0.5, 1, 0.5), k).energy
        assert e_minus == e_plus


def test_kinematic_relations():
    st = bound_energy(ref_channel(), 3)
    assert st.wavenumber**2 + st.energy**2 == pytest.approx(1.0, abs=1e-14)
    assert st.nu == pytest.approx(
        ((1 - st.energy) / (1 + st.energy)) ** 0.5, abs=1e-15)
    assert st.mu == pytest.approx(LAM_REF + 3, abs=1e-14)
    # stable inversion: kappa = zeta*E/(mu - 1/2)
    assert st.wavenumber == pytest.approx(0.5 * st.energy / (st.mu - 0.5), abs=1e-15)


def test_mass_scaling():
    st1 = bound_energy(ref_channel(), 2, mass=1.0)
    st2 = bound_energy(ref_channel(), 2, mass=3.5)
    assert st2.energy == pytest.approx(3.5 * st1.energy, rel=1e-15)
    assert st2.nu == pytest.approx(st1.nu, rel=1e-15)
    with pytest.raises(DomainError):
        bound_energy(ref_channel(), 2, mass=0.0)


def test_mu_from_energy_inverts_spectrum():
    ch = ref_channel()
    for k in range(6):
        st = bound_energy(ch, k)
        assert mu_from_energy(st.energy, 0.5) == pytest.approx(st.mu, abs=1e-12)


def test_state_from_energy_carries_detuning():
    ch = ref_channel()
    st = bound_energy(ch, 2)
    detuned = state_from_energy(ch, 2, st.energy * (1 + 1e-3))
    assert detuned.energy == pytest.approx(st.energy * (1 + 1e-3), rel=1e-15)
    assert abs(detuned.mu - st.mu) > 1e-4


def test_zeta_from_charge():
    assert zeta_from_charge(1) == pytest.approx(0.0072973525693, abs=1e-16)
    assert zeta_from_charge(10, alpha=0.05) == pytest.approx(0.5, abs=1e-15)


def test_spectrum_table_sorted_and_complete():
    states = spectrum_table(0.5, 1.5, 2)
    energies = [st.energy for st in states]
    assert energies == sorted(energies)
    # j=1/2 and j=3/2, k <= 2: (eps=-1, k=0,1,2) + (eps=+1, k=1,2) per j
    assert len(states) == 10


def test_spectrum_table_skips_supercritical_channels_with_warning():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        states = spectrum_table(1.2, 2.5, 1)
    assert any(issubclass(w.category, SupercriticalChannelWarning) for w in caught)
    assert states
    assert all(st.channel.j >= 1.5 for st in states)


def test_extended_precision_channel():
    with mpmath.workdps(40):
        ch = make_channel(0.5, -1, mpmath.mpf(1) / 2)
        want = mpmath.mpf("1.366025403784438646763723170752936183471")
        assert abs(ch.lam - want) < mpmath.mpf("1e-38")
        st = bound_energy(ch, 1)
        want_e = mpmath.mpf("0.9659258262890682867497431997288973676339")
        assert abs(st.energy - want_e) < mpmath.mpf("1e-38")
