"""Involutive set-theoretic solutions r(x,y) = (lam_x(y), rho_y(x)).

Conversion to and from cycle sets: lam_x is the inverse of the row x*(-),
and rho_y(x) = (lam_x^{-1}(y)) * x.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cycleset import CycleSet, assert_valid, check_cycle_set
from .errors import InvariantViolation
from .perms import inverse

_Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Solution:
    """lam[x][y] = lam_x(y) and rho[y][x] = rho_y(x)."""

    lam: _Table
    rho: _Table

    def __post_init__(self):
        lam = tuple(tuple(int(v) for v in row) for row in self.lam)
        rho = tuple(tuple(int(v) for v in row) for row in self.rho)
        n = len(lam)
        if len(rho) != n:
            raise ValueError("lam and rho must have the same size")
        for row in lam + rho:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise ValueError("malformed solution table")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "rho", rho)

    @property
    def n(self) -> int:
        return len(self.lam)

    def r(self, x: int, y: int) -> tuple[int, int]:
        return (self.lam[x][y], self.rho[y][x])


@dataclass(frozen=True)
class SolutionReport:
    nondegenerate_ok: bool
    nondegenerate_witness: tuple[str, int] | None
    involutive_ok: bool
    involutive_witness: tuple[int, int] | None
    braiding_ok: bool
    braiding_witness: tuple[int, int, int] | None

    @property
    def ok(self) -> bool:
        return self.nondegenerate_ok and self.involutive_ok and self.braiding_ok


def _apply12(lam, rho, x, y, z):
    return lam[x, y], rho[y, x], z


def _apply23(lam, rho, x, y, z):
    return x, lam[y, z], rho[z, y]


def check_solution(sol: Solution) -> SolutionReport:
    """Nondegeneracy, involutivity, and the braid relation on all triples."""
    n = sol.n
    lam = np.array(sol.lam, dtype=np.int64)
    rho = np.array(sol.rho, dtype=np.int64)

    ar = np.arange(n)
    nd_ok, nd_wit = True, None
    lam_rows = (np.sort(lam, axis=1) == ar).all(axis=1)
    rho_rows = (np.sort(rho, axis=1) == ar).all(axis=1)
    if not lam_rows.all():
        nd_ok, nd_wit = False, ("lam", int(np.argmin(lam_rows)))
    elif not rho_rows.all():
        nd_ok, nd_wit = False, ("rho", int(np.argmin(rho_rows)))

    x, y = np.meshgrid(ar, ar, indexing="ij")
    x1, y1 = lam[x, y], rho[y, x]
    x2, y2 = lam[x1, y1], rho[y1, x1]
    bad = np.argwhere((x2 != x) | (y2 != y))
    if bad.size:
        inv_ok, inv_wit = False, (int(bad[0][0]), int(bad[0][1]))
    else:
        inv_ok, inv_wit = True, None

    xg, yg, zg = np.meshgrid(ar, ar, ar, indexing="ij")
    state = _apply12(lam, rho, *_apply23(lam, rho, *_apply12(lam, rho, xg, yg, zg)))
    other = _apply23(lam, rho, *_apply12(lam, rho, *_apply23(lam, rho, xg, yg, zg)))
    mismatch = (state[0] != other[0]) | (state[1] != other[1]) | (state[2] != other[2])
    bad = np.argwhere(mismatch)
    if bad.size:
        br_ok, br_wit = False, tuple(int(v) for v in bad[0])
    else:
        br_ok, br_wit = True, None

    return SolutionReport(nd_ok, nd_wit, inv_ok, inv_wit, br_ok, br_wit)


def to_solution(cs: CycleSet, check: bool = True) -> Solution:
    """The solution attached to a cycle set: lam_x = (x*(-))^{-1}."""
    if check:
        assert_valid(cs)
    n = cs.n
    lam = tuple(inverse(row) for row in cs.table)
    rho = tuple(
        tuple(cs.table[lam[x][y]][x] for x in range(n)) for y in range(n)
    )
    return Solution(lam, rho)


def from_solution(sol: Solution, check: bool = True) -> CycleSet:
    """Recover the cycle set table x*y = lam_x^{-1}(y)."""
    table = tuple(inverse(row) for row in sol.lam)
    cs = CycleSet(table)
    if check:
        rep = check_cycle_set(cs)
        if not rep.ok:
            raise InvariantViolation(f"solution does not come from a cycle set: {rep}")
        if to_solution(cs, check=False).rho != sol.rho:
            raise InvariantViolation("rho is inconsistent with lam for an involutive solution")
    return cs
