# utils/smith.py

from dataclasses import dataclass
from math import gcd

import numpy as np


def exgcd(a: int, b: int) -> np.ndarray:
    """Unimodular M with M @ [a, b] = [gcd(a, b), 0]; M[0, 1] == 0 whenever a divides b."""
    a_sign = -1 if a < 0 else 1
    b_sign = -1 if b < 0 else 1
    a, b = a * a_sign, b * b_sign
    m = np.array([[b, 0, 1], [a, 1, 0]], dtype=object)
    while m[1, 0] != 0:
        q = m[0, 0] // m[1, 0]
        m[0] -= q * m[1]
        m = m[::-1]
    g = m[0, 0]
    m = m[:, 1:] * np.array([a_sign, b_sign], dtype=object)
    if g != 0:
        m[1] = [-b_sign * b // g, a_sign * a // g]
    return m


def _inverse_2x2(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=object)


@dataclass
class Diagonalization:
    """A == S @ D @ T with S, T unimodular and D diagonal."""
    S: np.ndarray
    D: np.ndarray
    T: np.ndarray
    Sinv: np.ndarray
    Tinv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        return [int(self.D[i, i]) for i in range(min(self.D.shape))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    def kernel_mask(self) -> np.ndarray:
        """Columns of Tinv spanning ker A."""
        mask = np.ones(self.D.shape[1], dtype=bool)
        for i, d in enumerate(self.diagonal):
            if d != 0:
                mask[i] = False
        return mask

    def image_mask(self) -> np.ndarray:
        mask = np.zeros(self.D.shape[0], dtype=bool)
        for i, d in enumerate(self.diagonal):
            if d != 0:
                mask[i] = True
        return mask


def diagonalize(a: np.ndarray) -> Diagonalization:
    """Clear row and column i alternately with gcd steps until both vanish off the diagonal."""
    d = np.array(a, dtype=object).copy()
    rows, cols = d.shape
    s, t = np.eye(rows, dtype=object), np.eye(cols, dtype=object)
    sinv, tinv = s.copy(), t.copy()

    def clear_row(i):
        if all(d[i, j] == 0 for j in range(i + 1, cols)):
            return False
        for j in range(i + 1, cols):
            m = exgcd(d[i, i], d[i, j]).T
            d[:, [i, j]] = d[:, [i, j]].dot(m)
            t[[i, j]] = _inverse_2x2(m).dot(t[[i, j]])
            tinv[:, [i, j]] = tinv[:, [i, j]].dot(m)
        return True

    def clear_col(i):
        if all(d[j, i] == 0 for j in range(i + 1, rows)):
            return False
        for j in range(i + 1, rows):
            m = exgcd(d[i, i], d[j, i])
            d[[i, j]] = m.dot(d[[i, j]])
            s[:, [i, j]] = s[:, [i, j]].dot(_inverse_2x2(m))
            sinv[[i, j]] = m.dot(sinv[[i, j]])
        return True

    for i in range(min(rows, cols)):
        clear_col(i)
        while clear_row(i) and clear_col(i):
            pass
    return Diagonalization(s, d, t, sinv, tinv)


def invariant_factors(diagonal: list[int]) -> list[int]:
    """Replace a diagonal by the divisibility chain d_1 | d_2 | ... of the same abelian group."""
    factors = sorted(abs(x) for x in diagonal if x != 0)
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                if b % a != 0:
                    g = gcd(a, b)
                    factors[i], factors[j] = g, a * b // g
                    changed = True
        factors.sort()
    return factors
