"""Independent reference computations used only by the tests.

None of these touch the package's own numerics.
"""
import numpy as np


def jacobi_eigvals(h, sweeps=100, tol=1e-15):
    """All eigenvalues of a complex Hermitian matrix by cyclic Jacobi.

    Works on the real symmetric embedding [[Re, -Im], [Im, Re]], whose
    spectrum is that of ``h`` with every eigenvalue doubled.
    """
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    a = np.block([[h.real, -h.imag], [h.imag, h.real]])
    m = 2 * n
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= tol * max(1.0, np.linalg.norm(a)):
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                if a[p, q] == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = a[:, [p, q]] @ np.array([[c, s], [-s, c]])
                a[:, p], a[:, q] = rot[:, 0], rot[:, 1]
                rot = np.array([[c, -s], [s, c]]) @ a[[p, q], :]
                a[p, :], a[q, :] = rot[0], rot[1]
    w = np.sort(np.diag(a))
    return w[::2]


def frame_bounds_bruteforce(vectors):
    v = np.asarray(vectors, dtype=complex)
    s = sum(np.outer(x.conj(), x) for x in v)
    w = jacobi_eigvals(s)
    return w[0], w[-1]


def dense_inverse(m):
    return np.linalg.inv(m)


def gram_schmidt_free_aux(vectors):
    """Auxiliary sequence by the textbook double loop, no kernels."""
    e = np.asarray(vectors, dtype=complex)
    g = []
    for n in range(len(e)):
        acc = e[n].copy()
        for i in range(n):
            acc = acc - np.vdot(e[i], e[n]) * g[i]
        g.append(acc)
    return np.array(g)


def random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (z + z.conj().T)
