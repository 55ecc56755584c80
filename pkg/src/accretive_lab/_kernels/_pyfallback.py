"""NumPy reference implementations of the hot kernels.

Same contracts as the compiled module ``_jacobi``: inputs are C-contiguous
``complex128`` arrays (the package-level wrappers normalize), Hermitian
where stated, and small (the harness caps n at 16).
"""

import numpy as np

name = "python"


def eigh_values(h):
    """Ascending eigenvalues of a Hermitian matrix."""
    return np.linalg.eigvalsh(h)


def eigh_factor(h):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix."""
    return np.linalg.eigh(h)


def rotated_max_eig(a, phases):
    """Largest eigenvalue of the Hermitian part of ``phase * a`` per phase."""
    rotated = phases[:, None, None] * a[None, :, :]
    herm = 0.5 * (rotated + np.conj(np.swapaxes(rotated, 1, 2)))
    return np.linalg.eigvalsh(herm)[:, -1]


def parlett_recurrence(t, fdiag):
    """Upper-triangular f(T) from T and f on its diagonal.

    Caller guarantees the diagonal entries are pairwise separated.
    """
    n = t.shape[0]
    f = np.zeros_like(t)
    np.fill_diagonal(f, fdiag)
    for offset in range(1, n):
        for i in range(n - offset):
            j = i + offset
            num = t[i, j] * (f[i, i] - f[j, j])
            if j > i + 1:
                num += f[i, i + 1 : j] @ t[i + 1 : j, j]
                num -= t[i, i + 1 : j] @ f[i + 1 : j, j]
            f[i, j] = num / (t[i, i] - t[j, j])
    return f
