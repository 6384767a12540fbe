"""Six-vertex transfer matrix used as an independent check of the Baxter formula.

The R-matrix is the symmetric trigonometric one in ``y = sqrt(z/b)``:
``a = yq - 1/(yq)``, ``b = y - 1/y``, ``c = q - 1/q``.
The auxiliary trace carries a diagonal twist ``diag(q^tau, q^-tau)`` and the
Cartan factor ``q^{cartan * sigma * 2 S^z}`` with ``sigma = +-1`` for the
auxiliary state.  The defaults ``tau = 3N/2`` and ``cartan = -1/2`` make the
ratio of the two auxiliary components on the reference state
``up...up`` equal ``q^{2 Delta}`` times the site factors, which is the ratio
of the two Baxter summands.  Only eigenvalue ratios are compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


def r_matrix(X: complex, q: complex) -> np.ndarray:
    """4x4 matrix on aux (x) site, index ``2*aux + site``, state 0 = up."""
    y = np.sqrt(complex(X))
    a = y * q - 1 / (y * q)
    b = y - 1 / y
    c = q - 1 / q
    M = np.zeros((4, 4), dtype=complex)
    M[0, 0] = M[3, 3] = a
    M[1, 1] = M[2, 2] = b
    M[1, 2] = M[2, 1] = c
    return M


def transfer_matrix(
    z: complex, bs: Sequence[complex], q: complex, tau: float | None = None, cartan: float = -0.5
) -> np.ndarray:
    N = len(bs)
    if N < 1:
        raise ValueError("need at least one site")
    if tau is None:
        tau = 1.5 * N
    dim = 2**N
    mono = np.eye(2 * dim, dtype=complex).reshape((2,) * (N + 1) * 2)
    for j, b in enumerate(bs):
        R = r_matrix(z / b, q).reshape(2, 2, 2, 2)
        mono = np.tensordot(R, mono, axes=([2, 3], [0, j + 1]))
        mono = np.moveaxis(mono, 1, j + 1)
    mono = mono.reshape(2, dim, 2, dim)
    sz = np.array([sum(0.5 if not (s >> (N - 1 - j)) & 1 else -0.5 for j in range(N)) for s in range(dim)])
    out = np.zeros((dim, dim), dtype=complex)
    for aux, sigma in ((0, 1), (1, -1)):
        twist = q ** (sigma * tau) * q ** (cartan * sigma * 2 * sz)
        out += twist[:, None] * mono[aux, :, aux, :]
    return out


@dataclass
class OracleSample:
    z: complex
    eigenvalues: np.ndarray
    reference: complex
    condition: float
    ill_conditioned: bool

    def ratios(self) -> np.ndarray:
        return self.eigenvalues / self.reference


def sixvertex_oracle(
    N: int,
    bs: Sequence[complex],
    q: complex,
    zs: Sequence[complex],
    tau: float | None = None,
    cartan: float = -0.5,
    cond_limit: float = 1e10,
) -> list[OracleSample]:
    """Diagonalise the transfer matrix at each sample point."""
    if not 1 <= N <= 8:
        raise ValueError("oracle supports 1 <= N <= 8")
    if len(bs) != N:
        raise ValueError("need one inhomogeneity per site")
    out = []
    for z in zs:
        T = transfer_matrix(z, bs, q, tau, cartan)
        vals, vecs = np.linalg.eig(T)
        cond = float(np.linalg.cond(vecs))
        out.append(OracleSample(complex(z), vals, complex(T[0, 0]), cond, cond > cond_limit))
    return out


def distinct_count(values: np.ndarray, rtol: float = 1e-8) -> int:
    reps: list[complex] = []
    for v in values:
        if not any(abs(v - r) <= rtol * max(1.0, abs(r)) for r in reps):
            reps.append(v)
    return len(reps)
