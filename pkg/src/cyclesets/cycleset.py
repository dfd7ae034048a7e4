"""Finite cycle sets: the table, its axioms, retraction, quotients.

A cycle set on points {0..n-1} is a binary operation table where each row
``table[x]`` is the permutation y -> x*y, the square law
(x*y)*(x*z) = (y*x)*(y*z) holds for all triples, and x -> x*x is a bijection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InducedTableIllDefined, InvariantViolation
from .perms import PermGroup, Perm, is_perm, is_transitive

_Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CycleSet:
    """Operation table; rows are x*(-).  Shape-checked, axioms are not."""

    table: _Table

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(rows)
        for row in rows:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise ValueError("malformed cycle set table")
        object.__setattr__(self, "table", rows)

    @property
    def n(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def sigma(self, x: int) -> Perm:
        """The left translation y -> x*y as a permutation tuple."""
        return self.table[x]

    def sigma_perms(self) -> tuple[Perm, ...]:
        return self.table


@dataclass(frozen=True)
class ValidityReport:
    square_law_ok: bool
    square_law_witness: tuple[int, int, int] | None
    rows_bijective_ok: bool
    rows_bijective_witness: int | None
    diagonal_bijective_ok: bool
    diagonal_bijective_witness: tuple[int, int] | None

    @property
    def ok(self) -> bool:
        return self.square_law_ok and self.rows_bijective_ok and self.diagonal_bijective_ok


def check_cycle_set(cs: CycleSet) -> ValidityReport:
    """Check all three axioms, reporting a first witness for each failure."""
    n = cs.n
    t = np.array(cs.table, dtype=np.int64)

    rows_sorted = np.sort(t, axis=1)
    row_ok = (rows_sorted == np.arange(n)).all(axis=1)
    if row_ok.all():
        c2_ok, c2_wit = True, None
    else:
        c2_ok, c2_wit = False, int(np.argmin(row_ok))

    diag = t[np.arange(n), np.arange(n)]
    c3_ok, c3_wit = True, None
    seen: dict[int, int] = {}
    for x in range(n):
        v = int(diag[x])
        if v in seen:
            c3_ok, c3_wit = False, (seen[v], x)
            break
        seen[v] = x

    # square law: t[t[x,y], t[x,z]] == t[t[y,x], t[y,z]] for all x,y,z
    u = t[t]  # u[x,y,:] = row of x*y
    idx = np.broadcast_to(t[:, None, :], (n, n, n))
    lhs = np.take_along_axis(u, idx, axis=2)  # lhs[x,y,z] = (x*y)*(x*z)
    rhs = lhs.transpose(1, 0, 2)
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        x, y, z = (int(v) for v in bad[0])
        c1_ok, c1_wit = False, (x, y, z)
    else:
        c1_ok, c1_wit = True, None

    return ValidityReport(c1_ok, c1_wit, c2_ok, c2_wit, c3_ok, c3_wit)


def assert_valid(cs: CycleSet) -> CycleSet:
    rep = check_cycle_set(cs)
    if not rep.ok:
        raise InvariantViolation(f"not a cycle set: {rep}")
    return cs


def sigma_gens(cs: CycleSet) -> list[Perm]:
    """The row permutations x -> sigma_x, duplicates preserved."""
    return list(cs.sigma_perms())


def permutation_group(cs: CycleSet) -> PermGroup:
    """The group generated by the row permutations."""
    return PermGroup(cs.n, cs.sigma_perms())


def is_indecomposable(cs: CycleSet) -> bool:
    """True when the row permutations act transitively on the points."""
    return is_transitive(cs.sigma_perms(), cs.n)


def relabel(cs: CycleSet, perm: Perm) -> CycleSet:
    """Transport the table along x -> perm[x]."""
    if not is_perm(perm) or len(perm) != cs.n:
        raise ValueError("relabel needs a permutation of the points")
    inv = [0] * cs.n
    for i, x in enumerate(perm):
        inv[x] = i
    t = cs.table
    return CycleSet(
        tuple(tuple(perm[t[inv[x]][inv[y]]] for y in range(cs.n)) for x in range(cs.n))
    )


def retraction(cs: CycleSet) -> tuple[CycleSet, tuple[int, ...]]:
    """Identify points with equal rows; return the induced cycle set + projection.

    proj[x] is the class index of point x.  Raises InducedTableIllDefined if
    the class of x*y fails to depend only on the classes of x and y (cannot
    happen for a valid cycle set).
    """
    n = cs.n
    classes: dict[tuple[int, ...], int] = {}
    proj = []
    for x in range(n):
        key = cs.table[x]
        if key not in classes:
            classes[key] = len(classes)
        proj.append(classes[key])
    m = len(classes)
    rep = [None] * m
    for x in range(n):
        if rep[proj[x]] is None:
            rep[proj[x]] = x
    induced = [[proj[cs.table[rep[a]][rep[b]]] for b in range(m)] for a in range(m)]
    for x in range(n):
        for y in range(n):
            if proj[cs.table[x][y]] != induced[proj[x]][proj[y]]:
                raise InducedTableIllDefined((proj[x], proj[y]), (x, y))
    return CycleSet(tuple(tuple(r) for r in induced)), tuple(proj)


def multipermutation_level(cs: CycleSet) -> int | None:
    """Retraction steps until one point; None when retraction stalls."""
    cur = cs
    level = 0
    while cur.n > 1:
        nxt, _ = retraction(cur)
        if nxt.n == cur.n:
            return None
        cur = nxt
        level += 1
    return level


def is_irretractable(cs: CycleSet) -> bool:
    """True when all rows are distinct (and there is more than one point)."""
    return cs.n > 1 and len(set(cs.table)) == cs.n


def sub_cycle_set(cs: CycleSet, subset) -> tuple[int, ...]:
    """Smallest subset closed under * containing ``subset``, as sorted points."""
    closed = set(int(x) for x in subset)
    frontier = list(closed)
    while frontier:
        x = frontier.pop()
        for y in list(closed):
            for z in (cs.table[x][y], cs.table[y][x], cs.table[x][x]):
                if z not in closed:
                    closed.add(z)
                    frontier.append(z)
    return tuple(sorted(closed))


def restrict(cs: CycleSet, points) -> CycleSet:
    """The induced table on a *-closed subset, reindexed to 0..k-1."""
    points = list(points)
    index = {p: i for i, p in enumerate(points)}
    try:
        table = tuple(
            tuple(index[cs.table[x][y]] for y in points) for x in points
        )
    except KeyError as exc:
        raise ValueError(f"subset is not closed: point {exc} escapes") from exc
    return CycleSet(table)


def _join_partitions(a, b, n: int):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (a, b):
        for block in part:
            r = block[0]
            for x in block[1:]:
                ra, rb = find(r), find(x)
                if ra != rb:
                    parent[rb] = ra
    blocks: dict[int, list[int]] = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    return tuple(sorted(tuple(sorted(v)) for v in blocks.values()))


def _induced_table(cs: CycleSet, partition):
    n = cs.n
    cls = [0] * n
    for i, block in enumerate(partition):
        for x in block:
            cls[x] = i
    m = len(partition)
    induced = [[cls[cs.table[block[0]][other[0]]] for other in partition] for block in partition]
    for x in range(n):
        for y in range(n):
            if cls[cs.table[x][y]] != induced[cls[x]][cls[y]]:
                return None
    return CycleSet(tuple(tuple(r) for r in induced))


def quotients(cs: CycleSet) -> list[tuple[tuple[tuple[int, ...], ...], CycleSet]]:
    """All proper nontrivial quotients: (partition, induced cycle set) pairs.

    Candidate partitions are the block systems of the row group, closed under
    joins; a partition yields a quotient exactly when the induced table is
    well defined.  Requires an indecomposable input.
    """
    from .perms import block_systems

    n = cs.n
    if n <= 1:
        return []
    gens = cs.sigma_perms()
    systems = set(block_systems(gens, n))
    frontier = list(systems)
    while frontier:
        s = frontier.pop()
        for t in list(systems):
            j = _join_partitions(s, t, n)
            if 1 < len(j) < n and j not in systems:
                systems.add(j)
                frontier.append(j)
    out = []
    for system in sorted(systems):
        induced = _induced_table(cs, system)
        if induced is not None:
            if not check_cycle_set(induced).ok:
                raise InvariantViolation("well-defined quotient is not a cycle set")
            out.append((system, induced))
    return out


def is_simple(cs: CycleSet) -> bool:
    """No proper nontrivial quotient (input must be indecomposable)."""
    if cs.n <= 1:
        return False
    return not quotients(cs)
