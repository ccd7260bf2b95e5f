# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Unit tests for `hybridEPR.methods.linalg`."""

import numpy as np
import pytest

from hybridEPR.methods import linalg as he_lin
from hybridEPR.methods.qstate import PAULI
from hybridEPR.utils import DomainError
from hybridEPR.utils import NotHermitian
from hybridEPR.utils import NotPSD


def random_hermitian(rng, scale=1.0):
    """Draw a random 4x4 Hermitian matrix."""

    raw = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    return scale * 0.5 * (raw + raw.conj().T)


class TestTensor(object):
    """Unit tests for the Kronecker products."""

    @pytest.mark.parametrize("left", ['x', 'y', 'z', 'identity'])
    @pytest.mark.parametrize("right", ['x', 'y', 'z', 'identity'])
    def test_tensor_product_index(self, left, right):
        """Test the index convention of the operator product.

        Parameters
        ----------
        left : str
            Pauli factor on the left particle.
        right : str
            Pauli factor on the right particle.

        """

        amat = getattr(PAULI, left)
        bmat = getattr(PAULI, right)
        prod = he_lin.tensor_product(amat, bmat)

        for i, j, k, m in np.ndindex(2, 2, 2, 2):
            assert prod[2 * i + k, 2 * j + m] == amat[i, j] * bmat[k, m]
        return

    def test_tensor_product_vec(self):
        """Test that |d>|u> lands on basis index 2."""

        prod = he_lin.tensor_product_vec([0.0, 1.0], [1.0, 0.0])

        np.testing.assert_array_equal(prod, [0.0, 0.0, 1.0, 0.0])
        return

    def test_bilinear(self):
        """Test linearity of the operator product in both factors."""

        rng = np.random.default_rng(1935)
        for _ in range(20):
            amat, bmat, cmat = (rng.standard_normal((3, 2, 2))
                                + 1j * rng.standard_normal((3, 2, 2)))
            scale = complex(*rng.standard_normal(2))

            np.testing.assert_allclose(
                he_lin.tensor_product(amat + scale * bmat, cmat),
                he_lin.tensor_product(amat, cmat)
                + scale * he_lin.tensor_product(bmat, cmat), atol=1.0e-12)
            np.testing.assert_allclose(
                he_lin.tensor_product(cmat, amat + scale * bmat),
                he_lin.tensor_product(cmat, amat)
                + scale * he_lin.tensor_product(cmat, bmat), atol=1.0e-12)
        return

    def test_mixed_product(self):
        """Test (A x B)(C x D) = AC x BD."""

        rng = np.random.default_rng(1936)
        for _ in range(20):
            amat, bmat, cmat, dmat = (rng.standard_normal((4, 2, 2))
                                      + 1j * rng.standard_normal((4, 2, 2)))

            prod = he_lin.tensor_product(amat, bmat) @ he_lin.tensor_product(
                cmat, dmat)

            np.testing.assert_allclose(
                prod, he_lin.tensor_product(amat @ cmat, bmat @ dmat),
                atol=1.0e-12)
        return

    @pytest.mark.parametrize("mat", [np.eye(3), np.ones(4), [[1.0, np.nan],
                                                             [0.0, 1.0]]])
    def test_bad_matrix(self, mat):
        """Test that wrong shapes or non-finite entries raise DomainError.

        Parameters
        ----------
        mat : array-like
            Invalid 2x2 operator.

        """

        with pytest.raises(DomainError):
            he_lin.tensor_product(mat, np.eye(2))
        return


class TestHermitianEigen(object):
    """Unit tests for the Jacobi eigensolver."""

    def setup_method(self):
        """Create a clean testing setup before each method."""

        self.rng = np.random.default_rng(20240611)
        return

    def teardown_method(self):
        """Clean up test environment after each method."""

        del self.rng
        return

    @pytest.mark.parametrize("scale", [1.0e-3, 1.0, 1.0e3])
    def test_reconstruction(self, scale):
        """Test that eigenpairs rebuild random Hermitian matrices.

        Parameters
        ----------
        scale : float
            Overall size of the matrix entries.

        """

        for _ in range(50):
            hmat = random_hermitian(self.rng, scale)
            evals, evecs = he_lin.hermitian_eigen(hmat)
            norm = max(1.0, np.linalg.norm(hmat))

            np.testing.assert_allclose(evecs @ np.diag(evals) @ evecs.conj().T,
                                       hmat, atol=1.0e-10 * norm)
            np.testing.assert_allclose(evecs.conj().T @ evecs, np.eye(4),
                                       atol=1.0e-12)
            np.testing.assert_allclose(evals,
                                       np.linalg.eigvalsh(hmat)[::-1],
                                       atol=1.0e-10 * norm)
            assert np.all(np.diff(evals) <= 0.0)
        return

    def test_trace_sum(self):
        """Test that the eigenvalues sum to the trace."""

        for _ in range(50):
            hmat = random_hermitian(self.rng)
            evals, _ = he_lin.hermitian_eigen(hmat)

            assert evals.sum() == pytest.approx(np.trace(hmat).real, abs=1.0e-12)
        return

    def test_gauge(self):
        """Test that the first nonzero component of each vector is positive."""

        for _ in range(20):
            _, evecs = he_lin.hermitian_eigen(random_hermitian(self.rng))
            for icol in range(4):
                col = evecs[:, icol]
                lead = col[np.where(np.abs(col) > 1.0e-12)[0][0]]
                assert abs(lead.imag) < 1.0e-12
                assert lead.real > 0.0
        return

    def test_diagonal_input(self):
        """Test that diagonal matrices are sorted without rotation."""

        evals, evecs = he_lin.hermitian_eigen(np.diag([0.1, 0.7, -0.2, 0.4]))

        np.testing.assert_array_equal(evals, [0.7, 0.4, 0.1, -0.2])
        np.testing.assert_array_equal(np.abs(evecs), np.eye(4)[:, [1, 3, 0, 2]])
        return

    def test_degenerate_spectrum(self):
        """Test a fully degenerate spectrum."""

        evals, evecs = he_lin.hermitian_eigen(2.0 * np.eye(4))

        np.testing.assert_array_equal(evals, 2.0 * np.ones(4))
        np.testing.assert_allclose(evecs.conj().T @ evecs, np.eye(4))
        return

    def test_not_hermitian(self):
        """Test that non-Hermitian input is rejected."""

        mat = np.zeros((4, 4))
        mat[0, 1] = 1.0

        with pytest.raises(NotHermitian) as herr:
            he_lin.hermitian_eigen(mat)

        assert str(herr).find('Matrix is not Hermitian') >= 0
        return

    def test_small_asymmetry_tolerated(self):
        """Test that residuals below 1e-10 are symmetrized away."""

        mat = np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex)
        mat[0, 1] = 1.0e-12

        evals, _ = he_lin.hermitian_eigen(mat)

        np.testing.assert_allclose(evals, [1.0, 0.0, 0.0, 0.0], atol=1.0e-12)
        return


class TestPsdSqrt(object):
    """Unit tests for the PSD square root."""

    def setup_method(self):
        """Create a clean testing setup before each method."""

        self.rng = np.random.default_rng(7)
        return

    def teardown_method(self):
        """Clean up test environment after each method."""

        del self.rng
        return

    def test_diagonal_root(self):
        """Test the root of a diagonal matrix."""

        root = he_lin.psd_sqrt(np.diag([4.0, 1.0, 0.0, 0.0]))

        np.testing.assert_allclose(root, np.diag([2.0, 1.0, 0.0, 0.0]),
                                   atol=1.0e-14)
        return

    @pytest.mark.parametrize("rank", [1, 2, 4])
    def test_root_squares_back(self, rank):
        """Test that root @ root reproduces random PSD matrices.

        Parameters
        ----------
        rank : int
            Rank of the PSD matrix.

        """

        for _ in range(20):
            fac = (self.rng.standard_normal((4, rank))
                   + 1j * self.rng.standard_normal((4, rank)))
            mat = fac @ fac.conj().T
            mat /= np.trace(mat).real
            root = he_lin.psd_sqrt(mat)

            np.testing.assert_allclose(root, root.conj().T, atol=1.0e-12)
            np.testing.assert_allclose(root @ root, mat, atol=1.0e-10)
        return

    def test_root_commutes(self):
        """Test that the root commutes with the input matrix."""

        for _ in range(20):
            fac = (self.rng.standard_normal((4, 4))
                   + 1j * self.rng.standard_normal((4, 4)))
            mat = fac @ fac.conj().T
            root = he_lin.psd_sqrt(mat)

            np.testing.assert_allclose(root @ mat, mat @ root, atol=1.0e-10)
        return

    def test_projector_root(self):
        """Test that projectors are their own square roots."""

        for rank in (1, 2, 3):
            fac = (self.rng.standard_normal((4, rank))
                   + 1j * self.rng.standard_normal((4, rank)))
            basis, _ = np.linalg.qr(fac)
            proj = basis @ basis.conj().T

            np.testing.assert_allclose(he_lin.psd_sqrt(proj), proj, atol=1.0e-10)
        return

    def test_not_psd(self):
        """Test that a negative eigenvalue raises NotPSD."""

        with pytest.raises(NotPSD) as perr:
            he_lin.psd_sqrt(np.diag([1.0, -1.0e-3, 0.0, 0.0]))

        assert str(perr).find('not positive semidefinite') >= 0
        return

    def test_tiny_negative_clamped(self):
        """Test that eigenvalues just below zero are clamped."""

        root = he_lin.psd_sqrt(np.diag([1.0, -1.0e-12, 0.0, 0.0]))

        np.testing.assert_allclose(root, np.diag([1.0, 0.0, 0.0, 0.0]),
                                   atol=1.0e-14)
        return
