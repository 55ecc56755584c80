"""Hot numerical kernels with a backend switch.

Two interchangeable implementations exist: a Cython extension
(``_jacobi``, built by ``setup.py``) and a NumPy fallback
(``_pyfallback``). The compiled one is preferred when importable; the
``ACCRETIVE_LAB_BACKEND`` environment variable (``compiled`` or
``python``) forces a choice, and :func:`use_backend` switches at runtime
(used by the tests and the benchmark).

The compiled eigensolver is a cyclic Jacobi iteration, which beats the
LAPACK round trip only below ``JACOBI_MAX_DIM`` (measured crossover);
above that the compiled backend delegates eigenvalue work to NumPy. The
triangular recurrence has no LAPACK counterpart and is compiled at every
size (10-40x over the Python loop).
"""

import os

import numpy as np

from . import _pyfallback

_BACKENDS = {"python": _pyfallback}
try:
    from . import _jacobi
except ImportError:
    _jacobi = None
else:
    _BACKENDS["compiled"] = _jacobi

JACOBI_MAX_DIM = 5
SCAN_MAX_DIM = 4  # the fallback batches all angles into one LAPACK call


def _default_backend():
    wanted = os.environ.get("ACCRETIVE_LAB_BACKEND", "").strip().lower()
    if wanted in _BACKENDS:
        return wanted
    return "compiled" if "compiled" in _BACKENDS else "python"


_active = _BACKENDS[_default_backend()]


def available_backends():
    return tuple(sorted(_BACKENDS))


def active_backend():
    return _active.name


def use_backend(name):
    """Select the kernel backend by name; returns the previous name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    previous = _active.name
    _active = _BACKENDS[name]
    return previous


def _as_cmatrix(a):
    return np.ascontiguousarray(a, dtype=np.complex128)


def _eig_impl(n, cap=JACOBI_MAX_DIM):
    if _active is not _pyfallback and n <= cap:
        return _active
    return _pyfallback


def eigh_values(h):
    """Ascending eigenvalues of a Hermitian matrix."""
    h = _as_cmatrix(h)
    return _eig_impl(h.shape[0]).eigh_values(h)


def eigh_factor(h):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix."""
    h = _as_cmatrix(h)
    return _eig_impl(h.shape[0]).eigh_factor(h)


def rotated_max_eig(a, thetas):
    """Largest eigenvalue of the Hermitian part of ``exp(i theta) * a`` per angle."""
    a = _as_cmatrix(a)
    phases = np.exp(1j * np.asarray(thetas, dtype=np.float64))
    return _eig_impl(a.shape[0], cap=SCAN_MAX_DIM).rotated_max_eig(
        a, np.ascontiguousarray(phases)
    )


def parlett_recurrence(t, fdiag):
    """Upper-triangular f(T) from T and f evaluated on its diagonal."""
    return _active.parlett_recurrence(
        _as_cmatrix(t), np.ascontiguousarray(fdiag, dtype=np.complex128)
    )
