"""Modular determinant kernel used by the CRT path of the tree counter.

Elimination runs in float64 with primes below 2**26, so every product and
every partial remainder stays exactly representable; the reduction uses a
multiply-by-reciprocal floor with a one-step correction.  The batch driver
parallelizes over primes.
"""
from __future__ import annotations

import os

# avoid probing optional TBB/OpenMP backends; workqueue is always available
os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")

import numpy as np
from numba import njit, prange

PRIME_BITS = 26
_PRIME_LIMIT = 1 << PRIME_BITS


@njit(cache=True)
def _det_mod(a, q):
    n = a.shape[0]
    m = np.empty((n, n), np.float64)
    for i in range(n):
        for j in range(n):
            m[i, j] = a[i, j] % q
    qf = float(q)
    invq = 1.0 / qf
    det = 1.0
    neg = False
    for k in range(n):
        piv = k
        while piv < n and m[piv, k] == 0.0:
            piv += 1
        if piv == n:
            return np.int64(0)
        if piv != k:
            for j in range(k, n):
                tmp = m[k, j]
                m[k, j] = m[piv, j]
                m[piv, j] = tmp
            neg = not neg
        pivval = m[k, k]
        det = det * pivval
        det -= qf * np.floor(det * invq)
        if det < 0.0:
            det += qf
        elif det >= qf:
            det -= qf
        # modular inverse of the pivot by extended Euclid
        t0, t1 = np.int64(0), np.int64(1)
        r0, r1 = q, np.int64(pivval)
        while r1 != 0:
            quo = r0 // r1
            t0, t1 = t1, t0 - quo * t1
            r0, r1 = r1, r0 - quo * r1
        pinv = float(t0 % q)
        for i in range(k + 1, n):
            if m[i, k] == 0.0:
                continue
            f = m[i, k] * pinv
            f -= qf * np.floor(f * invq)
            if f < 0.0:
                f += qf
            elif f >= qf:
                f -= qf
            m[i, k] = 0.0
            for j in range(k + 1, n):
                x = m[i, j] - f * m[k, j]
                x -= qf * np.floor(x * invq)
                if x < 0.0:
                    x += qf
                elif x >= qf:
                    x -= qf
                m[i, j] = x
    r = np.int64(det)
    if neg:
        r = (q - r) % q
    return r


@njit(parallel=True, cache=True)
def _det_mod_batch(a, primes):
    out = np.empty(primes.shape[0], np.int64)
    for i in prange(primes.shape[0]):
        out[i] = _det_mod(a, primes[i])
    return out


def _is_prime_small(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


_prime_pool: list = []


def _primes(count: int) -> list:
    """The ``count`` largest primes below 2**26, cached across calls."""
    candidate = (_prime_pool[-1] - 2) if _prime_pool else _PRIME_LIMIT - 1
    while len(_prime_pool) < count:
        if _is_prime_small(candidate):
            _prime_pool.append(candidate)
        candidate -= 2
    return _prime_pool[:count]


def _apply_thread_cap() -> None:
    cap = os.environ.get("IWAGRAPH_THREADS")
    if cap:
        import numba

        numba.set_num_threads(max(1, int(cap)))


def det_crt(matrix: np.ndarray, bound_bits: float) -> int:
    """Exact determinant of an int64 matrix via CRT over word-size primes.

    ``bound_bits`` must bound log2(2*|det| + 1); the caller typically uses
    the Hadamard bound plus slack.
    """
    if matrix.shape[0] == 0:
        return 1
    _apply_thread_cap()
    count = max(1, int(bound_bits // (PRIME_BITS - 1)) + 2)
    primes = _primes(count)
    residues = _det_mod_batch(
        np.ascontiguousarray(matrix, dtype=np.int64),
        np.array(primes, dtype=np.int64),
    )
    # incremental CRT with a symmetric lift at the end
    x = 0
    modulus = 1
    for r, q in zip(residues.tolist(), primes):
        # solve x' = x (mod modulus), x' = r (mod q)
        delta = (r - x) * pow(modulus, -1, q) % q
        x += modulus * delta
        modulus *= q
    if x > modulus // 2:
        x -= modulus
    return x
