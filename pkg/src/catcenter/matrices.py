"""Exact matrices over a prime field and the category they form.

Objects of the matrix category are dimensions; a morphism m -> n is an
n×m matrix.  Tensor is the Kronecker product with the row-major index rule
(i, j) -> i*cols(b) + j, which makes it strictly associative.
"""
from __future__ import annotations

import itertools
import os

import numpy as np

from .report import NotEnumerable

DEFAULT_MAX_PRIME = 7


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


class Mat:
    """Immutable matrix with entries in Z/p."""

    __slots__ = ("a", "p", "_k")

    def __init__(self, data, p):
        a = np.array(data, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        if a.ndim != 2:
            raise ValueError("matrix literal must be two-dimensional")
        self._set(a % p, p)

    def _set(self, a, p):
        a.flags.writeable = False
        self.a = a
        self.p = p
        self._k = None

    @classmethod
    def _wrap(cls, a, p):
        """From a fresh int64 array produced internally (no copy, no checks)."""
        m = cls.__new__(cls)
        m._set(a % p, p)
        return m

    @property
    def _key(self):
        if self._k is None:
            self._k = (self.p, self.a.shape, self.a.tobytes())
        return self._k

    @classmethod
    def of_shape(cls, rows, cols, entries, p):
        return cls(np.array(entries, dtype=np.int64).reshape(rows, cols), p)

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Mat._wrap(self.a @ other.a, self.p)

    def __add__(self, other):
        return Mat._wrap(self.a + other.a, self.p)

    def __eq__(self, other):
        return isinstance(other, Mat) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def tolist(self):
        return self.a.tolist()

    def __repr__(self):
        return f"Mat({self.a.tolist()}, p={self.p})"


def kron(a, b):
    """Kronecker product; entry ((i,k),(j,l)) sits at (i*b.rows+k, j*b.cols+l)."""
    x, y = a.a, b.a
    out = (x[:, None, :, None] * y[None, :, None, :]).reshape(x.shape[0] * y.shape[0], x.shape[1] * y.shape[1])
    return Mat._wrap(out, a.p)


def eye(n, p):
    return Mat(np.eye(n, dtype=np.int64), p)


def zeros(rows, cols, p):
    return Mat(np.zeros((rows, cols), dtype=np.int64), p)


def swap_matrix(m, n, p):
    """The permutation V_m ⊗ V_n -> V_n ⊗ V_m, e_i⊗e_j -> e_j⊗e_i."""
    a = np.zeros((n * m, m * n), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            a[j * m + i, i * n + j] = 1
    return Mat(a, p)


def inverse(m):
    """Inverse over Z/p by Gauss-Jordan elimination, or None if singular."""
    if m.rows != m.cols:
        return None
    p, n = m.p, m.rows
    aug = np.concatenate([m.a.copy(), np.eye(n, dtype=np.int64)], axis=1) % p
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r, col] % p), None)
        if piv is None:
            return None
        aug[[col, piv]] = aug[[piv, col]]
        aug[col] = (aug[col] * pow(int(aug[col, col]), -1, p)) % p
        for r in range(n):
            if r != col and aug[r, col]:
                aug[r] = (aug[r] - aug[r, col] * aug[col]) % p
    return Mat(aug[:, n:], p)


def all_matrices(rows, cols, p):
    """Every rows×cols matrix over Z/p, in lexicographic order of entries."""
    for entries in itertools.product(range(p), repeat=rows * cols):
        yield Mat.of_shape(rows, cols, entries, p)


def max_candidates(default=1 << 24):
    """Enumeration cap, overridable through CATCENTER_MAX_CANDIDATES."""
    raw = os.environ.get("CATCENTER_MAX_CANDIDATES")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"CATCENTER_MAX_CANDIDATES must be an integer, got {raw!r}") from None
    return default


class MatCategory:
    """Dimensions and matrices over Z/p.  Hom-sets are never enumerated."""

    def __init__(self, p=2, max_prime=DEFAULT_MAX_PRIME):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p > max_prime:
            raise ValueError(f"prime {p} exceeds the configured bound {max_prime}")
        self.p = p
        self.name = f"Mat(F{p})"

    objects = None  # infinitely many

    def src(self, f):
        return f.cols

    def tgt(self, f):
        return f.rows

    def id(self, n):
        return eye(n, self.p)

    def compose(self, g, f):
        return g @ f

    def has_object(self, n):
        return isinstance(n, (int, np.integer)) and n >= 0

    def has_morphism(self, f):
        return isinstance(f, Mat) and f.p == self.p

    def homset(self, a, b):
        raise NotEnumerable("matrix hom-sets are not enumerated; supply a candidate pool")

    def inverse(self, f):
        return inverse(f)

    def __eq__(self, other):
        return isinstance(other, MatCategory) and other.p == self.p

    __hash__ = object.__hash__

    def __repr__(self):
        return f"<MatCategory p={self.p}>"
