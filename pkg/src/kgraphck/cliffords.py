"""Gamma matrices for the complex Clifford algebra in the convention

    gamma^l gamma^j + gamma^j gamma^l = -2 delta^{lj} Id,

so each gamma^j is skew-hermitian and i*gamma^j is self-adjoint.  The
construction is the standard Pauli tensor-product one multiplied by i;
entries lie in Z[i], so an exact copy is kept alongside the numpy view for
symbolic work.  For even k the grading

    omega = i^{[(k+1)/2]} gamma^1 ... gamma^k

is self-adjoint, squares to the identity and anticommutes with every
gamma^j; for odd k >= 3 the representation is chosen with omega = Id
(k = 1 keeps gamma^1 = [[i]], whose omega is the central scalar -1).
"""

from dataclasses import dataclass

import numpy as np

from .gaussian import QQi

_S1 = [[QQi(0), QQi(1)], [QQi(1), QQi(0)]]
_S2 = [[QQi(0), QQi(0, -1)], [QQi(0, 1), QQi(0)]]
_S3 = [[QQi(1), QQi(0)], [QQi(0), QQi(-1)]]
_ID = [[QQi(1), QQi(0)], [QQi(0), QQi(1)]]


def _kron(a, b):
    n, m = len(a), len(b)
    return [[a[i // m][j // m] * b[i % m][j % m] for j in range(n * m)]
            for i in range(n * m)]


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][t] * b[t][j] for t in range(n)), QQi(0)) for j in range(n)]
            for i in range(n)]


def _scale(c, a):
    return [[c * x for x in row] for row in a]


def _hermitian_generators(k):
    """Pauli tensor construction of k hermitian matrices with
    g_i g_j + g_j g_i = 2 delta_{ij} on dimension 2^[k/2]."""
    m = k // 2
    gens = []
    for a in range(1, m + 1):
        for sigma in (_S1, _S2):
            mat = [[QQi(1)]]
            for t in range(1, m + 1):
                if t < a:
                    mat = _kron(mat, _S3)
                elif t == a:
                    mat = _kron(mat, sigma)
                else:
                    mat = _kron(mat, _ID)
            gens.append(mat)
    if k % 2 == 1:
        mat = [[QQi(1)]]
        for _ in range(m):
            mat = _kron(mat, _S3)
        gens.append(mat)
    return gens[:k]


@dataclass
class CliffordRep:
    k: int
    gammas_exact: list   # k matrices over Z[i] as QQi entries
    gammas: np.ndarray   # shape (k, d, d) complex128
    grading: np.ndarray | None  # omega for even k, else None (central scalar)

    @property
    def dim(self):
        return 2 ** (self.k // 2)


def gamma_matrices(k):
    """Exact gamma matrices; all convention identities verified to 1e-12."""
    if not 1 <= k <= 6:
        raise ValueError("rank supported up to 6")
    gens = _hermitian_generators(k)
    gammas_exact = [_scale(QQi(0, 1), g) for g in gens]

    if k >= 3 and k % 2 == 1:
        # flip the last generator if needed so the central element is +Id
        omega = _omega_exact(k, gammas_exact)
        if complex(omega[0][0]).real < 0:
            gammas_exact[-1] = _scale(QQi(-1), gammas_exact[-1])

    gammas = np.array([[[complex(x) for x in row] for row in g]
                       for g in gammas_exact])
    d = gammas.shape[1]
    eye = np.eye(d)
    for l in range(k):
        for j in range(k):
            anti = gammas[l] @ gammas[j] + gammas[j] @ gammas[l]
            want = -2.0 * eye if l == j else 0.0 * eye
            assert np.max(np.abs(anti - want)) < 1e-12
        assert np.max(np.abs(gammas[l].conj().T + gammas[l])) < 1e-12  # skew-hermitian

    grading = None
    if k % 2 == 0:
        omega = _omega_numpy(k, gammas)
        assert np.max(np.abs(omega - omega.conj().T)) < 1e-12
        assert np.max(np.abs(omega @ omega - eye)) < 1e-12
        for l in range(k):
            assert np.max(np.abs(omega @ gammas[l] + gammas[l] @ omega)) < 1e-12
        grading = omega
    else:
        omega = _omega_numpy(k, gammas)
        for l in range(k):  # central in odd rank
            assert np.max(np.abs(omega @ gammas[l] - gammas[l] @ omega)) < 1e-12
        if k >= 3:
            assert np.max(np.abs(omega - eye)) < 1e-12

    return CliffordRep(k, gammas_exact, gammas, grading)


def _omega_exact(k, gammas_exact):
    prod = gammas_exact[0]
    for g in gammas_exact[1:]:
        prod = _matmul(prod, g)
    phase = QQi(1)
    for _ in range((k + 1) // 2):
        phase = phase * QQi(0, 1)
    return _scale(phase, prod)


def _omega_numpy(k, gammas):
    prod = np.eye(gammas.shape[1], dtype=complex)
    for g in gammas:
        prod = prod @ g
    return (1j) ** ((k + 1) // 2) * prod


def clifford_multiplier_exact(rep, n):
    """The matrix gamma(in) = i * sum_l n_l gamma^l over Z[i] entries, for a
    signed degree n; it is self-adjoint with square n^2 Id, which is how the
    gauge Dirac operator acts on the grade-n subspace."""
    d = rep.dim
    out = [[QQi(0)] * d for _ in range(d)]
    for l, nl in enumerate(n):
        if nl == 0:
            continue
        g = rep.gammas_exact[l]
        for i in range(d):
            for j in range(d):
                out[i][j] = out[i][j] + QQi(nl) * g[i][j]
    return [[QQi(0, 1) * x for x in row] for row in out]
