"""Class-count formulas for size p*p and enumeration cross-checks.

The counts split by family: one cyclic class, the level-two classes counted by
p(p^(p-1) - 1)/(p - 1), and the irretractable classes counted separately for
defect maps with f(0) != 0 ("even branch") and f(0) = 0 ("zero branch").
The enumeration functions recount both irretractable branches and the
level-two orbits by scanning all defect maps with numpy digit arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    out = n
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


def psi(n: int) -> int:
    """sum over d | n of d * phi(d) * phi(n/d)."""
    return sum(d * euler_phi(d) * euler_phi(n // d) for d in divisors(n))


def two_adic_split(m: int) -> tuple[int, int]:
    """m = 2**k * l with l odd; returns (k, l)."""
    k = 0
    while m % 2 == 0:
        m //= 2
        k += 1
    return k, m


@dataclass(frozen=True)
class CountReport:
    p: int
    n_cyclic: int
    n_mpl2: int
    n_irr_even: int
    n_irr_zero: int

    @property
    def n_irr(self) -> int:
        return self.n_irr_even + self.n_irr_zero

    @property
    def total(self) -> int:
        return self.n_cyclic + self.n_mpl2 + self.n_irr


def count_formula(p: int) -> CountReport:
    """Closed-form class counts of indecomposable cycle sets of size p*p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n_mpl2, rem = divmod(p * (p ** (p - 1) - 1), p - 1)
    assert rem == 0
    if p == 2:
        return CountReport(p, 1, n_mpl2, 1, 1)
    n_even = p ** ((p - 1) // 2) - 1
    k, l = two_adic_split(p - 1)
    acc = sum(psi(l // d) * (p ** (2 ** (k - 1) * d) - 1) for d in divisors(l))
    n_zero, rem = divmod(acc, p - 1)
    assert rem == 0
    return CountReport(p, 1, n_mpl2, n_even, n_zero)


def _digit_rows(p: int, width: int) -> np.ndarray:
    """All base-p digit vectors of the given width, one per row."""
    count = p**width
    vals = np.arange(count, dtype=np.int64)
    out = np.empty((count, width), dtype=np.int64)
    for col in range(width - 1, -1, -1):
        out[:, col] = vals % p
        vals //= p
    return out


def count_irr_by_enumeration(p: int) -> tuple[int, int]:
    """Recount irretractable classes by scanning all even defect maps.

    A class is a pair (orbit of the scaling action f -> alpha^{-1} f(alpha A),
    member alpha of the orbit's stabiliser); classes are counted as stabiliser
    sizes summed over orbit minima.  Returns (f(0) != 0 count, f(0) = 0 count).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    half = p // 2 + 1
    digits = _digit_rows(p, half)
    full = np.empty((p**half, p), dtype=np.int64)
    full[:, :half] = digits
    for a in range(half, p):
        full[:, a] = digits[:, p - a]
    nonconst = (full != full[:, :1]).any(axis=1)

    weights = p ** np.arange(p, dtype=np.int64)
    key_one = full @ weights
    key_min = key_one.copy()
    stab = np.ones(p**half, dtype=np.int64)
    for alpha in range(2, p):
        inv = pow(alpha, -1, p)
        cols = (np.arange(p) * alpha) % p
        transformed = (full[:, cols] * inv) % p
        key = transformed @ weights
        stab += key == key_one
        np.minimum(key_min, key, out=key_min)

    canonical = (key_one == key_min) & nonconst
    even_branch = canonical & (full[:, 0] != 0)
    zero_branch = canonical & (full[:, 0] == 0)
    return int(stab[even_branch].sum()), int(stab[zero_branch].sum())


def count_mpl2_by_enumeration(p: int) -> int:
    """Recount level-two classes as orbits of joint scaling on (f, s) pairs.

    Rows are (f(1)..f(p-1), s) with f(0) = 0 implicit and f not identically
    zero; alpha scales every coordinate.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    rows = _digit_rows(p, p)  # columns 0..p-2 are f(1..p-1), column p-1 is s
    nonzero = (rows[:, : p - 1] != 0).any(axis=1)
    weights = p ** np.arange(p, dtype=np.int64)
    key_one = rows @ weights
    key_min = key_one.copy()
    for alpha in range(2, p):
        key = ((rows * alpha) % p) @ weights
        np.minimum(key_min, key, out=key_min)
    return int(((key_one == key_min) & nonzero).sum())


def fp_rank(rows, p: int) -> int:
    """Rank over the field with p elements (Gaussian elimination)."""
    mat = [[v % p for v in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [(v * inv) % p for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank
