from __future__ import annotations

import numpy as np
from scipy.linalg import qr


def sample_haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """
    A Haar-distributed unitary of size dim x dim: QR of a complex Ginibre matrix with
    the phases of diag(R) moved into Q.
    """
    assert dim >= 1, "dim must be positive"
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = qr(z)
    d = np.diag(r)
    ph = d / np.abs(d)
    return q * ph


def unitarity_residual(u: np.ndarray) -> float:
    """||U*U - I|| in the Frobenius norm."""
    return float(np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0])))
