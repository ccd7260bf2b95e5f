# Full author list can be found in the CHANGELOG and git history.
#
# Distributed under the BSD 3-Clause License.
# ----------------------------------------------------------------------------
"""Fixed-size complex linear algebra for two-qubit problems.

Matrices are numpy ``complex128`` arrays of shape (2, 2) or (4, 4) and vectors
have shape (2,) or (4,).  Only these two sizes are supported.

"""

import numpy as np

import pysat

from hybridEPR.utils import DomainError
from hybridEPR.utils import NotHermitian
from hybridEPR.utils import NotPSD

HERMITIAN_TOL = 1.0e-10
PSD_TOL = 1.0e-10
JACOBI_TOL = 1.0e-13
JACOBI_MAX_SWEEPS = 100


def as_cmat(mat, dim):
    """Convert input to a finite complex square matrix of a fixed size.

    Parameters
    ----------
    mat : array-like
        Matrix entries, row-major.
    dim : int
        Expected dimension, 2 or 4.

    Returns
    -------
    cmat : np.ndarray
        Copy of `mat` as a complex128 array of shape (dim, dim).

    Raises
    ------
    DomainError
        If the shape is wrong or an entry is not finite.

    """

    cmat = np.array(mat, dtype=np.complex128)
    if cmat.shape != (dim, dim):
        raise DomainError('Expected a {:d}x{:d} matrix, got shape {:}'.format(
            dim, dim, cmat.shape))
    if not np.all(np.isfinite(cmat)):
        raise DomainError('Matrix contains non-finite entries')

    return cmat


def as_cvec(vec, dim):
    """Convert input to a finite complex vector of a fixed length.

    Parameters
    ----------
    vec : array-like
        Vector components.
    dim : int
        Expected length, 2 or 4.

    Returns
    -------
    cvec : np.ndarray
        Copy of `vec` as a complex128 array of shape (dim,).

    Raises
    ------
    DomainError
        If the shape is wrong or a component is not finite.

    """

    cvec = np.array(vec, dtype=np.complex128)
    if cvec.shape != (dim,):
        raise DomainError('Expected a {:d}-vector, got shape {:}'.format(
            dim, cvec.shape))
    if not np.all(np.isfinite(cvec)):
        raise DomainError('Vector contains non-finite entries')

    return cvec


def tensor_product(amat, bmat):
    """Kronecker product of two 2x2 complex matrices.

    Parameters
    ----------
    amat : array-like
        Left factor, acting on the left particle.
    bmat : array-like
        Right factor, acting on the right particle.

    Returns
    -------
    prod : np.ndarray
        4x4 matrix with ``prod[2i + k, 2j + l] = amat[i, j] * bmat[k, l]``.

    """

    return np.kron(as_cmat(amat, 2), as_cmat(bmat, 2))


def tensor_product_vec(uvec, vvec):
    """Kronecker product of two 2-component complex vectors.

    Parameters
    ----------
    uvec : array-like
        Left-particle spinor.
    vvec : array-like
        Right-particle spinor.

    Returns
    -------
    prod : np.ndarray
        4-vector with ``prod[2i + k] = uvec[i] * vvec[k]``.

    """

    return np.kron(as_cvec(uvec, 2), as_cvec(vvec, 2))


def hermiticity_residual(mat):
    """Return max |m - m^dagger| over all entries."""

    return float(np.max(np.abs(mat - mat.conj().T)))


def _off_diagonal_norm(mat):
    """Frobenius norm of the off-diagonal part."""

    off = mat - np.diag(np.diag(mat))
    return float(np.sqrt(np.sum(np.abs(off)**2)))


def _jacobi_rotation(mat, ip, iq):
    """Build the unitary that zeroes element (ip, iq) of a Hermitian matrix.

    The element ``a_pq = r exp(i phi)`` is first made real by a diagonal phase
    on column q, then annihilated by a real Givens rotation.

    """

    apq = mat[ip, iq]
    rad = abs(apq)
    rot = np.eye(mat.shape[0], dtype=np.complex128)
    if rad == 0.0:
        return rot

    phase = apq / rad
    theta = (mat[iq, iq].real - mat[ip, ip].real) / (2.0 * rad)
    tval = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta**2 + 1.0))
    cval = 1.0 / np.sqrt(tval**2 + 1.0)
    sval = tval * cval

    rot[ip, ip] = cval
    rot[ip, iq] = sval
    rot[iq, ip] = -sval * np.conj(phase)
    rot[iq, iq] = cval * np.conj(phase)

    return rot


def _fix_gauge(vecs):
    """Make the first nonzero component of every column real-positive."""

    for icol in range(vecs.shape[1]):
        col = vecs[:, icol]
        nonzero, = np.where(np.abs(col) > 1.0e-12)
        if len(nonzero) > 0:
            lead = col[nonzero[0]]
            vecs[:, icol] = col * (np.conj(lead) / abs(lead))

    return vecs


def hermitian_eigen(hmat):
    """Eigendecomposition of a 4x4 Hermitian matrix by cyclic Jacobi sweeps.

    Parameters
    ----------
    hmat : array-like
        Hermitian 4x4 matrix.

    Returns
    -------
    evals : np.ndarray
        Real eigenvalues sorted in descending order.
    evecs : np.ndarray
        Orthonormal eigenvectors stored as columns, ``evecs[:, i]`` belongs to
        ``evals[i]``.  The first nonzero component of each is real-positive.

    Raises
    ------
    NotHermitian
        If any entry of ``hmat - hmat^dagger`` exceeds 1e-10 in magnitude.

    Note
    ----
    Sweeps stop once the off-diagonal Frobenius norm falls below
    ``1e-13 * max(1, ||hmat||_F)`` or after 100 sweeps.

    """

    amat = as_cmat(hmat, 4)
    resid = hermiticity_residual(amat)
    if resid > HERMITIAN_TOL:
        raise NotHermitian(' '.join(('Matrix is not Hermitian, max residual',
                                     '{:.3e} exceeds {:.1e}'.format(
                                         resid, HERMITIAN_TOL))))

    amat = 0.5 * (amat + amat.conj().T)
    vecs = np.eye(4, dtype=np.complex128)
    tol = JACOBI_TOL * max(1.0, float(np.linalg.norm(amat)))

    for isweep in range(JACOBI_MAX_SWEEPS):
        if _off_diagonal_norm(amat) < tol:
            break
        for ip in range(3):
            for iq in range(ip + 1, 4):
                rot = _jacobi_rotation(amat, ip, iq)
                amat = rot.conj().T @ amat @ rot
                vecs = vecs @ rot
    else:
        pysat.logger.warning(' '.join(('Jacobi eigensolver reached',
                                       '{:d} sweeps with'.format(
                                           JACOBI_MAX_SWEEPS),
                                       'off-diagonal norm {:.3e}'.format(
                                           _off_diagonal_norm(amat)))))

    evals = np.real(np.diag(amat))
    order = np.argsort(-evals, kind='stable')

    return evals[order], _fix_gauge(vecs[:, order])


def psd_sqrt(mat):
    """Principal square root of a 4x4 positive semidefinite matrix.

    Parameters
    ----------
    mat : array-like
        Hermitian 4x4 matrix with eigenvalues >= -1e-10.

    Returns
    -------
    root : np.ndarray
        Hermitian PSD matrix with ``root @ root`` equal to `mat`.

    Raises
    ------
    NotHermitian
        Propagated from `hermitian_eigen`.
    NotPSD
        If an eigenvalue is below -1e-10.

    Note
    ----
    Eigenvalues in [-1e-10, 0) are clamped to zero, as are eigenvalues whose
    magnitude is below 64 machine epsilons relative to the largest one.

    """

    evals, evecs = hermitian_eigen(mat)
    if evals[-1] < -PSD_TOL:
        raise NotPSD(' '.join(('Matrix is not positive semidefinite, minimum',
                               'eigenvalue {:.3e}'.format(evals[-1]))))

    floor = 64.0 * np.finfo(float).eps * max(1.0, evals[0])
    evals = np.where(evals > floor, evals, 0.0)

    return (evecs * np.sqrt(evals)) @ evecs.conj().T
