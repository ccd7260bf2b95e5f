# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Unit and property tests for `hybridEPR.methods.measures`."""

from hypothesis import given
from hypothesis import strategies as st
import numpy as np
import pytest

from hybridEPR.instruments.random_states import random_pure_state
from hybridEPR.methods.linalg import tensor_product_vec
from hybridEPR.methods import measures as he_mea
from hybridEPR.methods import phases as he_ph
from hybridEPR.methods.qstate import basis_state
from hybridEPR.methods.qstate import density_from_pure
from hybridEPR.methods.qstate import DensityMatrix4
from hybridEPR.methods.qstate import PureState2Q
from hybridEPR.methods.qstate import schmidt_coefficients
from hybridEPR.methods.qstate import singlet
from hybridEPR.methods.qstate import werner_state
from hybridEPR.utils import DomainError

unit_floats = st.floats(min_value=0.0, max_value=1.0)


class TestConcurrence(object):
    """Unit tests for the concurrence."""

    def setup_method(self):
        """Create a clean testing setup before each method."""

        self.rng = np.random.default_rng(1998)
        return

    def teardown_method(self):
        """Clean up test environment after each method."""

        del self.rng
        return

    def test_spin_flip(self):
        """Test the spin flip of the singlet and of |uu>."""

        np.testing.assert_allclose(he_mea.spin_flip(singlet()).amp,
                                   -singlet().amp, atol=1.0e-15)
        np.testing.assert_allclose(he_mea.spin_flip(basis_state(0, 0)).amp,
                                   [0.0, 0.0, 0.0, -1.0], atol=1.0e-15)
        return

    @pytest.mark.parametrize("psi, target", [(singlet(), 1.0),
                                             (basis_state(0, 0), 0.0),
                                             (basis_state(1, 0), 0.0)])
    def test_concurrence_pure(self, psi, target):
        """Test the concurrence of extreme pure states.

        Parameters
        ----------
        psi : PureState2Q
            Input state.
        target : float
            Expected concurrence.

        """

        assert he_mea.concurrence_pure(psi) == pytest.approx(target,
                                                             abs=1.0e-12)
        return

    def test_product_states_unentangled(self):
        """Test that random product states carry no concurrence."""

        for _ in range(50):
            left, right = (self.rng.standard_normal((2, 2))
                           + 1j * self.rng.standard_normal((2, 2)))
            psi = PureState2Q(tensor_product_vec(left / np.linalg.norm(left),
                                                 right / np.linalg.norm(right)))

            assert schmidt_coefficients(psi)[1] <= 1.0e-12
            assert he_mea.concurrence_pure(psi) <= 2.0e-12
        return

    def test_concurrence_schmidt(self):
        """Test C = 2 s1 s2 on random pure states."""

        for seed in range(100):
            psi = random_pure_state(seed)
            sval1, sval2 = schmidt_coefficients(psi)

            assert he_mea.concurrence_pure(psi) == pytest.approx(
                2.0 * sval1 * sval2, abs=1.0e-12)
        return

    def test_mixed_matches_pure(self):
        """Test that rank-one density matrices reproduce the pure value."""

        for seed in range(1000):
            psi = random_pure_state(seed)
            conc = he_mea.concurrence_mixed(density_from_pure(psi))

            assert abs(conc - he_mea.concurrence_pure(psi)) <= 1.0e-9
        return

    @pytest.mark.parametrize("prob", [0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0])
    def test_werner(self, prob):
        """Test the Werner concurrence max(0, (3 p - 1) / 2).

        Parameters
        ----------
        prob : float
            Weight of the singlet.

        """

        conc = he_mea.concurrence_mixed(werner_state(prob))

        assert conc == pytest.approx(max(0.0, 0.5 * (3.0 * prob - 1.0)),
                                     abs=1.0e-9)
        return

    def test_maximally_mixed(self):
        """Test that the maximally mixed state is separable."""

        conc = he_mea.concurrence_mixed(DensityMatrix4.maximally_mixed())

        assert conc == pytest.approx(0.0, abs=1.0e-12)
        return

    @pytest.mark.parametrize("kind", sorted(he_ph.SETUP_KINDS))
    def test_phases_keep_entanglement(self, kind):
        """Test that no setup changes the concurrence of the singlet.

        Parameters
        ----------
        kind : str
            Setup kind.

        """

        for _ in range(20):
            params = self.rng.uniform(-4.0, 4.0, len(he_ph.setup_params(kind)))
            phased = he_ph.apply_phase(singlet(),
                                       he_ph.SETUP_KINDS[kind](*params))

            assert he_mea.concurrence_pure(phased) == pytest.approx(
                1.0, abs=1.0e-12)
        return


class TestEntropy(object):
    """Unit tests for the binary entropy and entanglement of formation."""

    @pytest.mark.parametrize("xval, target", [(0.0, 0.0), (1.0, 0.0),
                                              (0.5, 1.0)])
    def test_binary_entropy_points(self, xval, target):
        """Test the endpoint convention and the maximum.

        Parameters
        ----------
        xval : float
            Probability.
        target : float
            Expected entropy in bits.

        """

        assert he_mea.binary_entropy(xval) == target
        return

    @given(unit_floats)
    def test_binary_entropy_symmetric(self, xval):
        """Test h(x) = h(1 - x) and 0 <= h <= 1."""

        hval = he_mea.binary_entropy(xval)

        assert 0.0 <= hval <= 1.0 + 1.0e-15
        assert hval == pytest.approx(he_mea.binary_entropy(1.0 - xval),
                                     abs=1.0e-12)
        return

    @pytest.mark.parametrize("xval", [-1.0e-3, 1.001, np.nan])
    def test_binary_entropy_domain(self, xval):
        """Test that probabilities outside [0, 1] are rejected.

        Parameters
        ----------
        xval : float
            Invalid probability.

        """

        with pytest.raises(DomainError) as derr:
            he_mea.binary_entropy(xval)

        assert str(derr).find('Binary entropy needs x in [0, 1]') >= 0
        return

    @pytest.mark.parametrize("conc, target", [(0.0, 0.0), (1.0, 1.0)])
    def test_eof_endpoints(self, conc, target):
        """Test EoF of separable and maximally entangled states.

        Parameters
        ----------
        conc : float
            Concurrence.
        target : float
            Expected EoF.

        """

        assert he_mea.eof_from_concurrence(conc) == pytest.approx(target,
                                                                  abs=1.0e-12)
        return

    def test_eof_monotonic(self):
        """Test that EoF grows with the concurrence."""

        eofs = [he_mea.eof_from_concurrence(conc)
                for conc in np.linspace(0.0, 1.0, 201)]

        assert np.all(np.diff(eofs) >= 0.0)
        return

    def test_eof_domain(self):
        """Test that concurrences above 1 are rejected."""

        with pytest.raises(DomainError):
            he_mea.eof_from_concurrence(1.1)
        return


class TestFidelity(object):
    """Unit tests for fidelity and the distances built on it."""

    def setup_method(self):
        """Create a clean testing setup before each method."""

        self.psi = singlet()
        self.rng = np.random.default_rng(2003)
        return

    def teardown_method(self):
        """Clean up test environment after each method."""

        del self.psi, self.rng
        return

    @pytest.mark.parametrize("setup", [he_ph.ABSetup(phi_b=0.7),
                                       he_ph.DABSetup(g=1.3, phi_e=-2.2)])
    def test_global_phase_exact(self, setup):
        """Test that global phases give fidelity 1 and distance 0 exactly.

        Parameters
        ----------
        setup : PhaseSetup
            Setup with a global phase only.

        """

        fid = he_mea.fidelity_pure(self.psi, he_ph.apply_phase(self.psi, setup))

        assert fid == 1.0
        assert he_mea.bures_distance(fid) == 0.0
        return

    def test_random_global_phase(self):
        """Test unit fidelity between random states and their rotated copies."""

        for seed in range(50):
            psi = random_pure_state(seed)
            chi = self.rng.uniform(0.0, 2.0 * np.pi)

            assert he_mea.fidelity_pure(psi, PureState2Q(
                np.exp(1j * chi) * psi.amp)) == pytest.approx(1.0, abs=1.0e-12)
        return

    def test_ac_fidelity(self):
        """Test F = |cos(mu lambda_E)| and its Bures distance."""

        for mu, lam in self.rng.uniform([0.0, -4.0], [4.0, 4.0], (200, 2)):
            phased = he_ph.apply_phase(self.psi,
                                       he_ph.ACSetup(mu=mu, lambda1=lam,
                                                     lambda2=0.0))
            fid = he_mea.fidelity_pure(self.psi, phased)
            dist = he_mea.bures_distance(fid)
            target = abs(np.cos(mu * lam))

            assert abs(fid - target) <= 1.0e-12
            assert abs(dist**2 - (2.0 - 2.0 * target)) <= 1.0e-12
        return

    def test_orthogonal_states(self):
        """Test the maximal Bures distance of orthogonal states."""

        fid = he_mea.fidelity_pure(basis_state(0, 1), basis_state(1, 0))

        assert fid == 0.0
        assert he_mea.bures_distance(fid) == pytest.approx(np.sqrt(2.0))
        assert he_mea.fubini_study_distance(fid) == pytest.approx(np.pi / 2.0)
        return

    def test_mixed_matches_pure(self):
        """Test the Uhlmann fidelity on projectors of the phased family."""

        rho = density_from_pure(self.psi)
        for mu, lam in self.rng.uniform([0.0, -4.0], [4.0, 4.0], (100, 2)):
            phased = he_ph.apply_phase(self.psi,
                                       he_ph.ACSetup(mu=mu, lambda1=lam,
                                                     lambda2=0.0))
            fid = he_mea.fidelity_mixed(rho, density_from_pure(phased))

            assert abs(fid - he_mea.fidelity_pure(self.psi, phased)) <= 1.0e-9
        return

    @pytest.mark.parametrize("prob", [0.0, 0.4, 1.0])
    def test_mixed_self_fidelity(self, prob):
        """Test that every state has unit fidelity with itself.

        Parameters
        ----------
        prob : float
            Werner weight.

        """

        rho = werner_state(prob)

        assert he_mea.fidelity_mixed(rho, rho) == pytest.approx(1.0,
                                                                abs=1.0e-9)
        return

    @given(unit_floats)
    def test_bures_bounds(self, fid):
        """Test 0 <= D_B <= sqrt(2) and D_B^2 = 2 (1 - F)."""

        dist = he_mea.bures_distance(fid)

        assert 0.0 <= dist <= np.sqrt(2.0)
        assert dist**2 == pytest.approx(2.0 * (1.0 - fid), abs=1.0e-12)
        return

    @pytest.mark.parametrize("fid", [-0.1, 1.1])
    def test_distance_domain(self, fid):
        """Test that fidelities outside [0, 1] are rejected.

        Parameters
        ----------
        fid : float
            Invalid fidelity.

        """

        with pytest.raises(DomainError):
            he_mea.bures_distance(fid)
        with pytest.raises(DomainError):
            he_mea.fubini_study_distance(fid)
        return

    def test_bures_triangle(self):
        """Test the triangle inequality of the Bures distance."""

        states = [random_pure_state(seed) for seed in range(12)]
        for psi_a in states:
            for psi_b in states:
                for psi_c in states:
                    d_ab = he_mea.bures_distance(
                        he_mea.fidelity_pure(psi_a, psi_b))
                    d_bc = he_mea.bures_distance(
                        he_mea.fidelity_pure(psi_b, psi_c))
                    d_ac = he_mea.bures_distance(
                        he_mea.fidelity_pure(psi_a, psi_c))

                    assert d_ac <= d_ab + d_bc + 1.0e-12
        return


class TestReports(object):
    """Tests of the per-setup measure reports."""

    def setup_method(self):
        """Create a clean testing setup before each method."""

        self.rng = np.random.default_rng(1935)
        return

    def teardown_method(self):
        """Clean up test environment after each method."""

        del self.rng
        return

    @pytest.mark.parametrize("kind", sorted(he_ph.SETUP_KINDS))
    def test_pipeline_matches_formulas(self, kind):
        """Test pipeline measures against the closed forms on random draws.

        Parameters
        ----------
        kind : str
            Setup kind.

        """

        for _ in range(100):
            params = self.rng.uniform(-4.0, 4.0, len(he_ph.setup_params(kind)))
            setup = he_ph.SETUP_KINDS[kind](*params)
            report = he_mea.measure_report(setup)
            conc, eof, fid, dist = he_mea.table1_formulas(setup)

            assert abs(report.concurrence - conc) <= 1.0e-12
            assert abs(report.eof - eof) <= 1.0e-12
            assert abs(report.fidelity - fid) <= 1.0e-12
            assert abs(report.bures**2 - dist**2) <= 1.0e-12
            assert abs(report.bures - dist) <= 1.0e-9
            if kind in ('ab', 'dab'):
                assert (report.fidelity, report.bures) == (1.0, 0.0)
        return

    def test_ac_example(self):
        """Test the AC row at mu lambda_E = pi / 3."""

        report = he_mea.measure_report(he_ph.ACSetup(mu=1.0,
                                                     lambda1=np.pi / 3.0,
                                                     lambda2=0.0))

        assert report.fidelity == pytest.approx(0.5, abs=1.0e-12)
        assert report.bures == pytest.approx(1.0, abs=1.0e-12)
        return

    def test_report_dict(self):
        """Test the MeasureReport JSON schema."""

        out = he_mea.measure_report(he_ph.BerrySetup(gamma=0.0)).to_dict()

        assert out['setup'] == {'kind': 'berry', 'gamma': 0.0}
        assert out['fidelity'] == 1.0
        assert out['bures'] == 0.0
        assert out['concurrence'] == pytest.approx(1.0, abs=1.0e-12)
        assert out['eof'] == pytest.approx(1.0, abs=1.0e-12)
        return

    def test_custom_initial_state(self):
        """Test reports on a product source state."""

        report = he_mea.measure_report(he_ph.HMWSetup(d=1.0, lambda_b=0.3),
                                       initial=basis_state(0, 0))

        assert report.concurrence == pytest.approx(0.0, abs=1.0e-12)
        assert report.eof == pytest.approx(0.0, abs=1.0e-12)
        assert report.fidelity == 1.0
        return
