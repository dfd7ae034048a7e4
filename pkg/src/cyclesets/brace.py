"""Brace structure on the permutation group generated by a cycle set's rows.

Let G be the group generated (under composition) by the inverse rows
g_x = (x*(-))^{-1}.  G carries an abelian addition determined by

    a + g_x = a o g_{a^{-1}(x)}        (equivalently g_x + g_y = g_x o g_{sigma_x(y)})

which makes (G, +, o) a brace: lambda_a(b) = -a + a o b is an additive
automorphism for every a, and lambda_a(g_x) = g_{a(x)}.

Elements are indexed 0..order-1 (index 0 is the identity = additive zero).
No Cayley tables are materialised: every element gets a canonical additive
generator word from a breadth-first search, and sums, lambda-images and whole
rows are evaluated by folding those words with numpy gathers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cycleset import CycleSet, assert_valid
from .errors import CapExceeded, InconsistentAddition, InvariantViolation, SizeTooLarge
from .perms import inverse


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class BraceSubset:
    """A subset of element indices together with its structural tags."""

    indices: tuple[int, ...]
    add_subgroup: bool
    circ_subgroup: bool
    left_ideal: bool
    ideal: bool


class PermBrace:
    """Use build_perm_brace; the constructor wires precomputed state."""

    def __init__(self, n_points, elems, index, gidx, sidx):
        self.n_points = n_points
        self.elems = elems  # (order, n_points) int32, row i = permutation of element i
        self._index = index  # row bytes -> element index
        self.inv_elems = np.empty_like(elems)
        rng = np.arange(elems.shape[0])
        self.inv_elems[rng[:, None], elems] = np.arange(n_points, dtype=elems.dtype)[None, :]
        self.gidx = gidx  # gidx[x] = index of g_x = (x*(-))^{-1}
        self.sidx = sidx  # sidx[x] = index of the row x*(-)
        self.zero = 0
        self._stride = n_points * elems.dtype.itemsize
        self._words: dict[int, tuple[int, ...]] = {}
        self._build_additive_bfs()

    # -- construction ------------------------------------------------------

    def _build_additive_bfs(self):
        order = self.elems.shape[0]
        self.parent_elem = np.full(order, -1, dtype=np.int64)
        self.parent_point = np.full(order, -1, dtype=np.int64)
        visited = np.zeros(order, dtype=bool)
        visited[self.zero] = True
        level = np.array([self.zero], dtype=np.int64)
        self.levels = [level]
        points = np.arange(self.n_points, dtype=np.int64)
        while level.size:
            src = np.repeat(level, self.n_points)
            pts = np.tile(points, level.size)
            dst = self._add_gen_many(src, pts)
            fresh = ~visited[dst]
            # keep the first discovery of each element in this batch
            if fresh.any():
                dst_f, src_f, pts_f = dst[fresh], src[fresh], pts[fresh]
                uniq, first = np.unique(dst_f, return_index=True)
                self.parent_elem[uniq] = src_f[first]
                self.parent_point[uniq] = pts_f[first]
                visited[uniq] = True
                level = uniq
                self.levels.append(level)
            else:
                level = np.array([], dtype=np.int64)
        if not visited.all():
            raise InconsistentAddition(
                "additive generators do not span the permutation group"
            )
        self._neg_gen = {}
        self._gen_add_order = {}
        for x in range(self.n_points):
            g = int(self.gidx[x])
            if g in self._neg_gen:
                continue
            prev, cur, steps = self.zero, g, 1
            while cur != self.zero:
                prev = cur
                cur = self.add_gen(cur, x)
                steps += 1
            # prev + g_x = 0, and the loop ran `steps - 1` additions past g_x
            self._neg_gen[g] = prev
            self._gen_add_order[g] = steps

    # -- low level lookups -------------------------------------------------

    @property
    def order(self) -> int:
        return self.elems.shape[0]

    def perm(self, i: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.elems[i])

    def index_of(self, perm) -> int:
        key = np.ascontiguousarray(perm, dtype=self.elems.dtype).tobytes()
        try:
            return self._index[key]
        except KeyError:
            raise ValueError("permutation is not in the group") from None

    def _lookup_many(self, rows: np.ndarray) -> np.ndarray:
        arr = np.ascontiguousarray(rows, dtype=self.elems.dtype)
        buf = arr.tobytes()
        stride = self._stride
        index = self._index
        return np.fromiter(
            (index[buf[r * stride : (r + 1) * stride]] for r in range(arr.shape[0])),
            dtype=np.int64,
            count=arr.shape[0],
        )

    # -- group operations ----------------------------------------------------

    def circ(self, i: int, j: int) -> int:
        row = self.elems[i][self.elems[j]]
        return self._index[np.ascontiguousarray(row).tobytes()]

    def circ_inv(self, i: int) -> int:
        return self._index[np.ascontiguousarray(self.inv_elems[i]).tobytes()]

    def circ_many(self, src: np.ndarray, other: np.ndarray) -> np.ndarray:
        rows = np.take_along_axis(self.elems[src], self.elems[other], axis=1)
        return self._lookup_many(rows)

    def circ_row_left(self, i: int) -> np.ndarray:
        """All products i o j as an index array over j."""
        return self._lookup_many(self.elems[i][self.elems])

    def circ_row_right(self, i: int) -> np.ndarray:
        """All products j o i as an index array over j."""
        return self._lookup_many(self.elems[:, self.elems[i]])

    # -- additive structure --------------------------------------------------

    def add_gen(self, i: int, x: int) -> int:
        """i + g_x."""
        w = int(self.inv_elems[i, x])
        return self.circ(i, int(self.gidx[w]))

    def _add_gen_many(self, src: np.ndarray, pts: np.ndarray) -> np.ndarray:
        w = self.inv_elems[src, pts]
        return self.circ_many(src, self.gidx[w])

    def word(self, i: int) -> tuple[int, ...]:
        """Additive generator word for element i (order is immaterial)."""
        cached = self._words.get(i)
        if cached is not None:
            return cached
        out = []
        j = i
        while j != self.zero:
            out.append(int(self.parent_point[j]))
            j = int(self.parent_elem[j])
        word = tuple(out)
        self._words[i] = word
        return word

    def add(self, i: int, j: int) -> int:
        acc = i
        for z in self.word(j):
            acc = self.add_gen(acc, z)
        return acc

    def lam(self, i: int, j: int) -> int:
        """lambda_i(j) = -i + i o j."""
        acc = self.zero
        row = self.elems[i]
        for z in self.word(j):
            acc = self.add_gen(acc, int(row[z]))
        return acc

    def neg(self, i: int) -> int:
        acc = self.zero
        for z in self.word(i):
            acc = self.add(acc, self._neg_gen[int(self.gidx[z])])
        return acc

    def star(self, i: int, j: int) -> int:
        """i * j = lambda_i(j) - j."""
        return self.add(self.lam(i, j), self.neg(j))

    def add_pow(self, k: int, i: int) -> int:
        """The additive multiple k·i (k may be negative)."""
        if k < 0:
            return self.add_pow(-k, self.neg(i))
        acc, base = self.zero, i
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return acc

    def add_order(self, i: int) -> int:
        d = self.order
        for q in _prime_factors(self.order):
            while d % q == 0 and self.add_pow(d // q, i) == self.zero:
                d //= q
        return d

    def circ_order(self, i: int) -> int:
        from .perms import perm_order

        return perm_order(self.perm(i))

    # -- whole-row maps (O(order) each) ---------------------------------------

    def translate_row(self, i: int) -> np.ndarray:
        """out[j] = i + j for every j."""
        out = np.empty(self.order, dtype=np.int64)
        out[self.zero] = i
        for level in self.levels[1:]:
            out[level] = self._add_gen_many(out[self.parent_elem[level]], self.parent_point[level])
        return out

    def lam_row(self, i: int) -> np.ndarray:
        """out[j] = lambda_i(j) for every j."""
        out = np.empty(self.order, dtype=np.int64)
        out[self.zero] = self.zero
        row = self.elems[i].astype(np.int64)
        for level in self.levels[1:]:
            out[level] = self._add_gen_many(
                out[self.parent_elem[level]], row[self.parent_point[level]]
            )
        return out

    def neg_row(self) -> np.ndarray:
        """out[j] = -j for every j."""
        out = np.empty(self.order, dtype=np.int64)
        for j in range(self.order):
            out[j] = self.neg(j)
        return out

    # -- distinguished subsets -------------------------------------------------

    def socle(self) -> BraceSubset:
        """a with lambda_a = id, i.e. g_{a(z)} = g_z for every point z."""
        img = self.gidx[self.elems]
        mask = (img == self.gidx[None, :]).all(axis=1)
        return self.classify_subset(np.flatnonzero(mask), known_circ_subgroup=True)

    def fix(self, subset=None) -> BraceSubset:
        """Elements fixed by lambda_s for every s (in ``subset``, default all).

        Without a subset the generators suffice since lambda is multiplicative.
        """
        cand = np.arange(self.order)
        sources = np.unique(self.gidx) if subset is None else np.asarray(sorted(set(subset)))
        for g in sources:
            lr = self.lam_row(int(g))
            cand = cand[lr[cand] == cand]
        # lambda_s is additive, so the fixed set is always +-closed; for the
        # full fix it is also o-closed (conjugate the subscript).
        return self.classify_subset(
            cand, known_add_subgroup=True, known_circ_subgroup=subset is None
        )

    def block_stabilizer(self, system) -> BraceSubset:
        """Elements whose point permutation maps every given block onto itself."""
        block_of = np.empty(self.n_points, dtype=np.int64)
        for bid, block in enumerate(system):
            for pt in block:
                block_of[pt] = bid
        mask = (block_of[self.elems] == block_of[None, :]).all(axis=1)
        return self.classify_subset(np.flatnonzero(mask), known_circ_subgroup=True)

    def additive_sylow(self, p: int) -> BraceSubset:
        """Elements whose additive order is a power of p."""
        target = self.order
        while target % p == 0:
            target //= p
        target = self.order // target  # largest p-power dividing the group order
        hits = [i for i in range(self.order) if self.add_pow(target, i) == self.zero]
        return self.classify_subset(hits, known_add_subgroup=True)

    def circ_center(self) -> BraceSubset:
        """Elements commuting with everything under the circle product."""
        mask = np.ones(self.order, dtype=bool)
        for g in np.unique(self.gidx):
            mask &= self.circ_row_left(int(g)) == self.circ_row_right(int(g))
        return self.classify_subset(np.flatnonzero(mask), known_circ_subgroup=True)

    def additive_span(self, indices) -> tuple[int, ...]:
        """Additive subgroup generated by the given elements."""
        seen = {self.zero}
        frontier = [self.zero]
        gens = [int(i) for i in indices]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.add(cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return tuple(sorted(seen))

    def circ_span(self, indices) -> tuple[int, ...]:
        seen = {self.zero}
        frontier = [self.zero]
        gens = [int(i) for i in indices]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.circ(cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return tuple(sorted(seen))

    def _circ_closed(self, S: np.ndarray, members: np.ndarray) -> bool:
        if S.size > 2048:
            raise SizeTooLarge("subset too large for a pairwise closure check")
        E = self.elems[S]
        for row in E:
            if not members[self._lookup_many(row[E])].all():
                return False
        return True

    def _add_closed(self, S: np.ndarray, members: np.ndarray) -> bool:
        if S.size > 128:
            raise SizeTooLarge("subset too large for a pairwise closure check")
        return all(members[self.add(int(a), int(b))] for a in S for b in S)

    def _circ_gens_of_subgroup(self, S: np.ndarray) -> list[int]:
        gens: list[int] = []
        span = {self.zero}
        for s in S.tolist():
            if s not in span:
                gens.append(int(s))
                span = set(self.circ_span(gens))
        return gens

    def classify_subset(
        self, indices, *, known_add_subgroup: bool = False, known_circ_subgroup: bool = False
    ) -> BraceSubset:
        """Tag a subset: +-subgroup, o-subgroup, left ideal, ideal.

        Since a o b = a + lambda_a(b), a lambda-stable subset is +-closed
        exactly when it is o-closed, so one verified closure (or one the
        caller vouches for) settles the other without a pairwise scan.
        """
        idx = tuple(sorted(int(i) for i in set(np.asarray(indices).tolist())))
        if len(idx) == self.order:
            return BraceSubset(idx, True, True, True, True)
        S = np.array(idx, dtype=np.int64)
        members = np.zeros(self.order, dtype=bool)
        members[S] = True
        has_zero = bool(members[self.zero])
        gens = [int(g) for g in np.unique(self.gidx)]
        lam_stable = all(members[self.lam_row(g)[S]].all() for g in gens)
        add_sub, circ_sub = known_add_subgroup, known_circ_subgroup
        if lam_stable and (add_sub or circ_sub):
            add_sub = circ_sub = True
        if not circ_sub:
            circ_sub = has_zero and self._circ_closed(S, members)
            if circ_sub and lam_stable:
                add_sub = True
        if not add_sub:
            if circ_sub:
                # an o-subgroup is +-closed iff stable under its own lambdas
                add_sub = all(
                    members[self.lam_row(s)[S]].all()
                    for s in self._circ_gens_of_subgroup(S)
                )
            else:
                add_sub = has_zero and self._add_closed(S, members)
        normal = True
        for g in gens:
            left = self.circ_row_left(g)
            right = self.circ_row_right(self.circ_inv(g))
            if not members[right[left[S]]].all():
                normal = False
                break
        left_ideal = add_sub and lam_stable
        ideal = left_ideal and circ_sub and normal
        return BraceSubset(idx, add_sub, circ_sub, left_ideal, ideal)

    # -- materialised tables (guarded) ----------------------------------------

    def _guard(self, max_order: int):
        if self.order > max_order:
            raise SizeTooLarge(
                f"group order {self.order} exceeds table bound {max_order}"
            )

    def circ_table(self, max_order: int = 512) -> np.ndarray:
        self._guard(max_order)
        return np.stack([self.circ_row_left(i) for i in range(self.order)])

    def add_table(self, max_order: int = 512) -> np.ndarray:
        self._guard(max_order)
        return np.stack([self.translate_row(i) for i in range(self.order)])

    def lam_table(self, max_order: int = 512) -> np.ndarray:
        self._guard(max_order)
        return np.stack([self.lam_row(i) for i in range(self.order)])


def build_perm_brace(cs: CycleSet, cap: int = 1_000_000, check: bool = True) -> PermBrace:
    """Close the inverse rows under composition and attach the brace structure."""
    if check:
        assert_valid(cs)
    n = cs.n
    dtype = np.int32
    gens_t = []
    seen_gens = set()
    for row in cs.table:
        g = inverse(row)
        if g not in seen_gens:
            seen_gens.add(g)
            gens_t.append(g)
    gens = np.array(gens_t, dtype=np.int64)

    ident = np.arange(n, dtype=dtype)
    stride = n * ident.itemsize
    rows = [ident]
    index = {ident.tobytes(): 0}
    frontier = np.array([ident])
    while frontier.size:
        batches = [frontier[:, g] for g in gens]
        cand = np.ascontiguousarray(np.concatenate(batches), dtype=dtype)
        buf = cand.tobytes()
        fresh = []
        for r in range(cand.shape[0]):
            key = buf[r * stride : (r + 1) * stride]
            if key not in index:
                index[key] = len(index)
                fresh.append(cand[r])
                if len(index) > cap:
                    raise CapExceeded(cap)
        rows.extend(fresh)
        frontier = np.array(fresh) if fresh else np.empty((0, n), dtype=dtype)

    elems = np.array(rows, dtype=dtype)
    # map every point to the index of its own row's inverse / row
    gidx_full = np.empty(n, dtype=np.int64)
    sidx_full = np.empty(n, dtype=np.int64)
    for x in range(n):
        g = np.ascontiguousarray(inverse(cs.table[x]), dtype=dtype).tobytes()
        s = np.ascontiguousarray(cs.table[x], dtype=dtype).tobytes()
        gidx_full[x] = index[g]
        sidx_full[x] = index[s]
    return PermBrace(n, elems, index, gidx_full, sidx_full)


def verify_brace(brace: PermBrace, samples: int = 300, seed: int = 0) -> bool:
    """Spot-check the brace axioms; exhaustive when the order is small.

    Checks: (G,+) abelian group with the computed negatives, lambda_a is an
    additive automorphism, lambda is multiplicative in its subscript, and the
    compatibility a o (b + c) = a o b - a + a o c.  Raises InvariantViolation
    on any failure.
    """
    n = brace.order
    if n <= 96:
        add = brace.add_table(max_order=96)
        circ = brace.circ_table(max_order=96)
        if not (add == add.T).all():
            raise InvariantViolation("addition is not commutative")
        if not (add[add] == add[:, add]).all():
            raise InvariantViolation("addition is not associative")
        neg = np.array([brace.neg(i) for i in range(n)])
        if not (add[np.arange(n), neg] == brace.zero).all():
            raise InvariantViolation("negation failed")
        lhs = circ[:, add]  # a o (b + c)
        ab = circ[:, :, None]  # a o b
        ac = circ[:, None, :]  # a o c
        rhs = add[add[ab, neg[:, None, None]], ac]  # (a o b) - a + (a o c)
        if not (lhs == rhs).all():
            raise InvariantViolation("o is not distributive over + in the brace sense")
        lam = brace.lam_table(max_order=96)
        if not (lam[:, add] == add[lam[:, :, None], lam[:, None, :]]).all():
            raise InvariantViolation("lambda_a is not additive")
        if not (lam[circ] == lam[:, lam]).all():
            raise InvariantViolation("lambda is not multiplicative in the subscript")
        return True

    rng = np.random.default_rng(seed)
    pick = lambda: int(rng.integers(n))
    for _ in range(samples):
        a, b, c = pick(), pick(), pick()
        if brace.add(a, b) != brace.add(b, a):
            raise InvariantViolation("addition is not commutative")
        if brace.add(brace.add(a, b), c) != brace.add(a, brace.add(b, c)):
            raise InvariantViolation("addition is not associative")
        if brace.add(a, brace.neg(a)) != brace.zero:
            raise InvariantViolation("negation failed")
        lhs = brace.circ(a, brace.add(b, c))
        rhs = brace.add(brace.add(brace.circ(a, b), brace.neg(a)), brace.circ(a, c))
        if lhs != rhs:
            raise InvariantViolation("o is not distributive over + in the brace sense")
        if brace.lam(a, brace.add(b, c)) != brace.add(brace.lam(a, b), brace.lam(a, c)):
            raise InvariantViolation("lambda_a is not additive")
        if brace.lam(brace.circ(a, b), c) != brace.lam(a, brace.lam(b, c)):
            raise InvariantViolation("lambda is not multiplicative in the subscript")
    return True
