"""Isomorphism testing, automorphism groups, and the size-p*p classifier.

Isomorphisms are bijections f with f(x*y) = f(x)*'f(y).  The engine refines a
colouring of the points (cycle type of the row, then iterated neighbourhood
multisets) and backtracks over colour-respecting assignments, propagating
forced images f(x*y) := f(x)*'f(y) as soon as both arguments are mapped.

Classification of an indecomposable cycle set of size p*p proceeds by
retraction level: level 1 is the cyclic class; level 2 members are matched
against canonical (f, s) parameter pairs; irretractable members first have
their twist alpha recovered from the block action and are then matched against
canonical defect maps.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from .cycleset import (
    CycleSet,
    assert_valid,
    is_indecomposable,
    multipermutation_level,
)
from .counting import count_formula, is_prime
from .errors import BoundExceeded, NoMatch, NotIndecomposable, NotSizePSquared
from .families import (
    CyclicParams,
    FamilyParams,
    IrrParams,
    Mpl2Params,
    mpl2_params,
    to_cycle_set,
)
from .perms import Perm, closure, compose, cycle_type, inverse, perm_order

# -- defect-map scaling action ------------------------------------------------


def phi_act(p: int, alpha: int, phi) -> tuple[int, ...]:
    """(alpha . f)(A) = alpha^{-1} * f(alpha*A)."""
    inv = pow(alpha, -1, p)
    return tuple((inv * phi[(alpha * a) % p]) % p for a in range(p))


def phi_orbit(p: int, phi) -> list[tuple[int, ...]]:
    return sorted({phi_act(p, alpha, phi) for alpha in range(1, p)})


def canonical_phi(p: int, phi) -> tuple[int, ...]:
    return phi_orbit(p, phi)[0]


def phi_stabilizer(p: int, phi) -> list[int]:
    phi = tuple(v % p for v in phi)
    return [alpha for alpha in range(1, p) if phi_act(p, alpha, phi) == phi]


def canonical_mpl2_pair(p: int, phi, s: int) -> tuple[tuple[int, ...], int]:
    """Lex-least (alpha*f, alpha*s) over units alpha; f indexed over Z_p."""
    phi = tuple(v % p for v in phi)
    s = s % p
    return min(
        (tuple((alpha * v) % p for v in phi), (alpha * s) % p) for alpha in range(1, p)
    )


# -- colour refinement ---------------------------------------------------------


def _refine(tables):
    """Joint colour refinement; colours are comparable across the tables."""
    sizes = [len(t) for t in tables]
    colours = []
    key_ids: dict = {}
    for t in tables:
        cs = []
        for x in range(len(t)):
            key = cycle_type(t[x])
            if key not in key_ids:
                key_ids[key] = len(key_ids)
            cs.append(key_ids[key])
        colours.append(cs)
    while True:
        keys = []
        for t, cs in zip(tables, colours):
            n = len(t)
            keys.append(
                [
                    (
                        cs[x],
                        tuple(sorted((cs[y], cs[t[x][y]], cs[t[y][x]]) for y in range(n))),
                    )
                    for x in range(n)
                ]
            )
        key_ids = {}
        for ks in keys:
            for key in sorted(set(ks)):
                if key not in key_ids:
                    key_ids[key] = None
        for i, key in enumerate(sorted(key_ids)):
            key_ids[key] = i
        new = [[key_ids[key] for key in ks] for ks in keys]
        if all(len(set(a)) == len(set(b)) for a, b in zip(colours, new)):
            return new
        colours = new


def _search(ta, tb, ca, cb, find_all: bool):
    """Colour-respecting isomorphisms ta -> tb; first one, or all of them."""
    n = len(ta)
    by_colour: dict[int, list[int]] = {}
    for v in range(n):
        by_colour.setdefault(cb[v], []).append(v)
    f = [-1] * n
    g = [-1] * n
    found: list[Perm] = []

    def propagate(seed: int):
        made = []
        queue = [seed]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for w in range(n):
                if f[w] == -1:
                    continue
                for x, y in ((u, w), (w, u)):
                    pxy = ta[x][y]
                    qxy = tb[f[x]][f[y]]
                    if f[pxy] == -1:
                        if g[qxy] != -1 or ca[pxy] != cb[qxy]:
                            return made, False
                        f[pxy] = qxy
                        g[qxy] = pxy
                        made.append(pxy)
                        queue.append(pxy)
                    elif f[pxy] != qxy:
                        return made, False
        return made, True

    def undo(made):
        for x in made:
            g[f[x]] = -1
            f[x] = -1

    def extend() -> bool:
        pivot, cands = -1, None
        for x in range(n):
            if f[x] != -1:
                continue
            cs = [v for v in by_colour.get(ca[x], ()) if g[v] == -1]
            if cands is None or len(cs) < len(cands):
                pivot, cands = x, cs
                if not cs:
                    return False
        if cands is None:
            found.append(tuple(f))
            return not find_all
        for v in cands:
            f[pivot] = v
            g[v] = pivot
            made, ok = propagate(pivot)
            if ok and extend():
                undo(made)
                f[pivot] = -1
                g[v] = -1
                return True
            undo(made)
            f[pivot] = -1
            g[v] = -1
        return False

    extend()
    return found


def _is_morphism(ta, tb, f) -> bool:
    n = len(ta)
    return all(f[ta[x][y]] == tb[f[x]][f[y]] for x in range(n) for y in range(n))


def iso_cycle_sets(a: CycleSet, b: CycleSet) -> Perm | None:
    """A point bijection carrying a's table to b's, or None."""
    if a.n != b.n:
        return None
    ca, cb = _refine([a.table, b.table])
    if sorted(ca) != sorted(cb):
        return None
    found = _search(a.table, b.table, ca, cb, find_all=False)
    if not found:
        return None
    f = found[0]
    assert _is_morphism(a.table, b.table, f)
    return f


def automorphisms(cs: CycleSet) -> list[Perm]:
    """All table automorphisms, in lexicographic order."""
    c = _refine([cs.table])[0]
    found = _search(cs.table, cs.table, c, c, find_all=True)
    for f in found:
        assert _is_morphism(cs.table, cs.table, f)
    return sorted(found)


# -- enumeration of class representatives --------------------------------------


def enumerate_classes(p: int, family: str = "all", bound: int = 1_000_000) -> list[FamilyParams]:
    """Canonical parameters of every class of the requested family at size p*p.

    Raises BoundExceeded when the class count is larger than ``bound``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if family not in ("all", "cyclic", "mpl2", "irr"):
        raise ValueError(f"unknown family: {family!r}")
    report = count_formula(p)
    expect = {
        "all": report.total,
        "cyclic": 1,
        "mpl2": report.n_mpl2,
        "irr": report.n_irr,
    }[family]
    if expect > bound:
        raise BoundExceeded(f"{expect} classes exceed the bound {bound}")
    out: list[FamilyParams] = []
    if family in ("all", "cyclic"):
        out.append(CyclicParams(p))
    if family in ("all", "mpl2"):
        out.extend(_enumerate_mpl2(p))
    if family in ("all", "irr"):
        out.extend(_enumerate_irr(p))
    return out


def _enumerate_mpl2(p: int) -> list[Mpl2Params]:
    width = p  # f(1)..f(p-1) then s
    rows = np.empty((p**width, width), dtype=np.int64)
    vals = np.arange(p**width, dtype=np.int64)
    for col in range(width - 1, -1, -1):
        rows[:, col] = vals % p
        vals //= p
    nonzero = (rows[:, : p - 1] != 0).any(axis=1)
    weights = p ** np.arange(width - 1, -1, -1, dtype=np.int64)
    key_one = rows @ weights
    key_min = key_one.copy()
    for alpha in range(2, p):
        np.minimum(key_min, ((rows * alpha) % p) @ weights, out=key_min)
    keep = np.flatnonzero((key_one == key_min) & nonzero)
    out = []
    for i in keep:
        row = rows[i]
        phi = (0, *(int(v) for v in row[: p - 1]))
        out.append(mpl2_params(p, (p,), phi, int(row[p - 1])))
    return sorted(out, key=lambda q: (q.phi, q.s))


def _enumerate_irr(p: int) -> list[IrrParams]:
    half = p // 2 + 1
    out = []
    for code in range(p**half):
        digits = []
        v = code
        for _ in range(half):
            v, r = divmod(v, p)
            digits.append(r)
        digits.reverse()
        phi = tuple(digits[a] if a < half else digits[p - a] for a in range(p))
        if all(v == phi[0] for v in phi):
            continue
        if canonical_phi(p, phi) != phi:
            continue
        for alpha in phi_stabilizer(p, phi):
            out.append(IrrParams(p, phi, alpha))
    return sorted(out, key=lambda q: (q.phi, q.alpha))


# -- classification -------------------------------------------------------------


def _recover_alpha(cs: CycleSet, p: int) -> int:
    """Twist of an irretractable member, read off the block action."""
    from .perms import block_systems

    gens = cs.sigma_perms()
    systems = block_systems(gens, cs.n)
    blocks = systems[0]
    pos = {}
    for i, block in enumerate(blocks):
        for x in block:
            pos[x] = i
    induced = []
    for gen in gens:
        img = [pos[gen[block[0]]] for block in blocks]
        induced.append(tuple(img))
    quotient = closure(induced, cap=100_000)
    translations = [
        h for h in quotient if h == tuple(range(p)) or (perm_order(h) == p and all(h[i] != i for i in range(p)))
    ]
    if len(translations) != p:
        raise NoMatch("block action has no regular translation subgroup")
    tau = next(h for h in translations if h != tuple(range(p)))
    h = next((g for g in induced if g not in translations), None)
    if h is None:
        return 1
    conj = compose(compose(h, tau), inverse(h))
    power = tau
    for k in range(1, p):
        if power == conj:
            return k
        power = compose(power, tau)
    raise NoMatch("block conjugation does not normalise the translations")


def classify_size_p2(cs: CycleSet) -> FamilyParams:
    """Match an indecomposable cycle set of size p*p to its family parameters.

    Raises NotSizePSquared / NotIndecomposable for out-of-scope input and
    NoMatch if no class matches (which would refute the classification).
    """
    n = cs.n
    p = isqrt(n)
    if p * p != n or not is_prime(p):
        raise NotSizePSquared(f"size {n} is not the square of a prime")
    assert_valid(cs)
    if not is_indecomposable(cs):
        raise NotIndecomposable("the row group is not transitive")

    level = multipermutation_level(cs)
    if level == 1:
        if cycle_type(cs.table[0]) != (n,):
            raise NoMatch("level-one member whose row is not an n-cycle")
        return CyclicParams(p)
    if level == 2:
        candidates = _enumerate_mpl2(p)
    elif level is None:
        alpha = _recover_alpha(cs, p)
        candidates = [q for q in _enumerate_irr(p) if q.alpha == alpha]
    else:
        raise NoMatch(f"unexpected retraction level {level} at size p*p")

    row_types = sorted(cycle_type(row) for row in cs.table)
    for params in candidates:
        member = to_cycle_set(params)
        if sorted(cycle_type(row) for row in member.table) != row_types:
            continue
        if iso_cycle_sets(cs, member) is not None:
            return params
    raise NoMatch("no family member is isomorphic to the input")
