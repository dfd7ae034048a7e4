"""The known indecomposable cycle sets of size p*p, plus deform/cable moves.

Three families, each built from explicit parameters:

* cyclic: x*y = y+1 on Z_{p*p} (the unique level-one class);
* mpl2(m, A, f, s): points Z_m x A with
  (a,x)*(b,y) = (b+1, y + [b=0]*s + f(b-a)), f(0)=0, f not identically zero
  (level two when A = Z_p);
* irr(p, f, alpha): points Z_p x Z_p with
  (a,x)*(b,y) = (alpha*(b+x), alpha*(y + f(b-a))), f even, non-constant,
  and f(alpha*A) = alpha*f(A) (the irretractable classes).

A deformation composes the table with an automorphism; cabling replaces every
row by its k-th additive multiple inside the row group's brace.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .brace import build_perm_brace
from .cycleset import CycleSet, assert_valid, check_cycle_set
from .counting import is_prime
from .errors import ConstantPhi, InvariantViolation, NotAnAutomorphism
from .perms import Perm, is_perm
from .solutions import Solution, check_solution, to_solution


# -- parameter records ------------------------------------------------------


@dataclass(frozen=True)
class CyclicParams:
    p: int


@dataclass(frozen=True)
class Mpl2Params:
    m: int
    a_invariants: tuple[int, ...]
    phi: tuple[tuple[int, ...], ...]
    s: tuple[int, ...]


@dataclass(frozen=True)
class IrrParams:
    p: int
    phi: tuple[int, ...]
    alpha: int


FamilyParams = CyclicParams | Mpl2Params | IrrParams


class AbGroup:
    """Finite abelian group as tuples in mixed radix, row-major indexing."""

    def __init__(self, invariants):
        self.invariants = tuple(int(d) for d in invariants)
        if not self.invariants or any(d < 1 for d in self.invariants):
            raise ValueError("invariants must be positive")
        self.size = prod(self.invariants)

    @property
    def zero(self):
        return (0,) * len(self.invariants)

    def reduce(self, elem):
        elem = tuple(int(v) for v in elem)
        if len(elem) != len(self.invariants):
            raise ValueError("element has wrong rank")
        return tuple(v % d for v, d in zip(elem, self.invariants))

    def add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.invariants))

    def sub(self, a, b):
        return tuple((x - y) % d for x, y, d in zip(a, b, self.invariants))

    def scale(self, k, a):
        return tuple((k * x) % d for x, d in zip(a, self.invariants))

    def index(self, elem) -> int:
        out = 0
        for v, d in zip(elem, self.invariants):
            out = out * d + (v % d)
        return out

    def element(self, index: int):
        out = []
        for d in reversed(self.invariants):
            index, r = divmod(index, d)
            out.append(r)
        return tuple(reversed(out))

    def elements(self):
        return [self.element(i) for i in range(self.size)]


def mpl2_params(m: int, a_invariants, phi, s) -> Mpl2Params:
    """Normalise scalar phi entries / s into rank-1 tuples."""
    inv = tuple(int(d) for d in a_invariants)

    def as_elem(v):
        if isinstance(v, int):
            if v == 0:
                return (0,) * len(inv)
            if len(inv) != 1:
                raise ValueError("scalar element given for a group of rank > 1")
            return (v % inv[0],)
        return tuple(int(x) % d for x, d in zip(v, inv))

    return Mpl2Params(int(m), inv, tuple(as_elem(v) for v in phi), as_elem(s))


# -- constructors -----------------------------------------------------------


def cyclic_cycle_set(n: int) -> CycleSet:
    """x*y = y+1 on Z_n."""
    if n < 1:
        raise ValueError("need at least one point")
    row = tuple((y + 1) % n for y in range(n))
    return CycleSet(tuple(row for _ in range(n)))


def mpl2_cycle_set(m: int, a_invariants, phi, s) -> CycleSet:
    """(a,x)*(b,y) = (b+1, y + [b=0]*s + f(b-a)) on Z_m x A."""
    params = mpl2_params(m, a_invariants, phi, s)
    m = params.m
    if m < 2:
        raise ValueError("need m >= 2")
    group = AbGroup(params.a_invariants)
    f = [group.reduce(v) for v in params.phi]
    s_elem = group.reduce(params.s)
    if len(f) != m:
        raise ValueError(f"defect map must list {m} values")
    if f[0] != group.zero:
        raise InvariantViolation("defect map must vanish at 0")
    if all(v == group.zero for v in f):
        raise ConstantPhi("defect map is identically zero")

    size = m * group.size
    table = []
    for a in range(m):
        for x_i in range(group.size):
            row = []
            for b in range(m):
                shift = group.add(f[(b - a) % m], s_elem if b == 0 else group.zero)
                for y_i in range(group.size):
                    y = group.element(y_i)
                    row.append(((b + 1) % m) * group.size + group.index(group.add(y, shift)))
            table.append(tuple(row))
    assert len(table) == size
    return CycleSet(tuple(table))


def irr_cycle_set(p: int, phi, alpha: int = 1) -> CycleSet:
    """(a,x)*(b,y) = (alpha*(b+x), alpha*(y+f(b-a))) on Z_p x Z_p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    f = tuple(int(v) % p for v in phi)
    if len(f) != p:
        raise ValueError(f"defect map must list {p} values")
    if all(v == f[0] for v in f):
        raise ConstantPhi("defect map is constant")
    for a in range(p):
        if f[a] != f[(p - a) % p]:
            raise InvariantViolation(f"defect map must be even: f({a}) != f({p - a})")
    alpha = int(alpha) % p
    if alpha == 0:
        raise InvariantViolation("alpha must be a unit mod p")
    for a in range(p):
        if f[(alpha * a) % p] != (alpha * f[a]) % p:
            raise InvariantViolation(
                f"defect map is not alpha-equivariant: f({alpha}*{a}) != {alpha}*f({a})"
            )

    table = []
    for a in range(p):
        for x in range(p):
            row = []
            for b in range(p):
                first = (alpha * (b + x)) % p
                base = f[(b - a) % p]
                for y in range(p):
                    row.append(first * p + (alpha * (y + base)) % p)
            table.append(tuple(row))
    return CycleSet(tuple(table))


def to_cycle_set(params: FamilyParams) -> CycleSet:
    if isinstance(params, CyclicParams):
        return cyclic_cycle_set(params.p * params.p)
    if isinstance(params, Mpl2Params):
        return mpl2_cycle_set(params.m, params.a_invariants, params.phi, params.s)
    if isinstance(params, IrrParams):
        return irr_cycle_set(params.p, params.phi, params.alpha)
    raise TypeError(f"not family parameters: {params!r}")


# -- JSON form --------------------------------------------------------------


def params_to_dict(params: FamilyParams) -> dict:
    if isinstance(params, CyclicParams):
        return {"family": "cyclic", "p": params.p}
    if isinstance(params, Mpl2Params):
        rank1 = len(params.a_invariants) == 1
        return {
            "family": "mpl2",
            "m": params.m,
            "a_invariants": list(params.a_invariants),
            "phi": [v[0] if rank1 else list(v) for v in params.phi],
            "s": params.s[0] if rank1 else list(params.s),
        }
    if isinstance(params, IrrParams):
        return {"family": "irr", "p": params.p, "phi": list(params.phi), "alpha": params.alpha}
    raise TypeError(f"not family parameters: {params!r}")


def params_from_dict(data: dict) -> FamilyParams:
    family = data.get("family")
    if family == "cyclic":
        return CyclicParams(int(data["p"]))
    if family == "mpl2":
        return mpl2_params(data["m"], data["a_invariants"], data["phi"], data["s"])
    if family == "irr":
        return IrrParams(int(data["p"]), tuple(int(v) for v in data["phi"]), int(data.get("alpha", 1)))
    raise ValueError(f"unknown family: {family!r}")


# -- deform and cable -------------------------------------------------------


def is_cycle_set_automorphism(cs: CycleSet, perm: Perm) -> bool:
    if not is_perm(perm) or len(perm) != cs.n:
        return False
    t = cs.table
    return all(
        perm[t[x][y]] == t[perm[x]][perm[y]] for x in range(cs.n) for y in range(cs.n)
    )


def deform(cs: CycleSet, perm: Perm) -> CycleSet:
    """Twist the table to x *' y = perm[x*y]; perm must be an automorphism."""
    if not is_cycle_set_automorphism(cs, perm):
        raise NotAnAutomorphism("deforming map must be a cycle set automorphism")
    out = CycleSet(tuple(tuple(perm[v] for v in row) for row in cs.table))
    rep = check_cycle_set(out)
    if not rep.ok:
        raise InvariantViolation(f"deformed table is not a cycle set: {rep}")
    return out


def cable(cs: CycleSet, k: int, cap: int = 1_000_000) -> CycleSet:
    """Replace each row by its k-th additive multiple in the row brace."""
    br = build_perm_brace(cs, cap=cap)
    rows = tuple(br.perm(br.add_pow(k, int(br.sidx[x]))) for x in range(cs.n))
    out = CycleSet(rows)
    rep = check_cycle_set(out)
    if not rep.ok:
        raise InvariantViolation(f"cabled table is not a cycle set: {rep}")
    return out


# -- the co-simple presentation of the irretractable members -----------------


def co_params(p: int, phi, alpha: int) -> tuple[tuple[int, ...], int]:
    """Parameters (f, t) of the co-simple presentation: f(i) = -phi(alpha*i), t = alpha^{-1}."""
    f = tuple((-int(phi[(alpha * i) % p])) % p for i in range(p))
    return f, pow(alpha, -1, p)


def co_simple_solution(p: int, f, t: int) -> Solution:
    """lam_{(i,j)}(k,l) = (t*k+j, t*(l - f(t*k+j-i))); rho determined by involutivity.

    Validates the three parameter conditions before building:
    S1 evenness f(i) = f(-i), S2 the scaling law f(t*i) = t*f(i) - (t-1)*f(0),
    S3 f non-constant.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    f = tuple(int(v) % p for v in f)
    if len(f) != p:
        raise ValueError(f"f must list {p} values")
    t = int(t) % p
    if t == 0:
        raise InvariantViolation("t must be a unit mod p")
    for i in range(p):
        if f[i] != f[(p - i) % p]:
            raise InvariantViolation(f"condition S1 failed: f({i}) != f(-{i})")
    for i in range(p):
        if f[(t * i) % p] != (t * f[i] - (t - 1) * f[0]) % p:
            raise InvariantViolation(
                f"condition S2 failed: f({t}*{i}) != {t}*f({i}) - {t - 1}*f(0)"
            )
    if all(v == f[0] for v in f):
        raise ConstantPhi("condition S3 failed: f is constant")

    n = p * p
    lam = []
    for i in range(p):
        for j in range(p):
            row = []
            for k in range(p):
                first = (t * k + j) % p
                shift = f[(first - i) % p]
                for l in range(p):
                    row.append(first * p + (t * (l - shift)) % p)
            lam.append(tuple(row))
    inv_lam = {x: _invert_row(lam[x]) for x in range(n)}
    rho = tuple(
        tuple(inv_lam[lam[x][y]][x] for x in range(n)) for y in range(n)
    )
    sol = Solution(tuple(lam), rho)
    rep = check_solution(sol)
    if not rep.ok:
        raise InvariantViolation(f"co-simple parameters give no solution: {rep}")
    return sol


def _invert_row(row):
    out = [0] * len(row)
    for i, v in enumerate(row):
        out[v] = i
    return tuple(out)


def mirror_perm(p: int) -> Perm:
    """(i,j) -> (i,-j) on p*p points."""
    return tuple(i * p + (-j) % p for i in range(p) for j in range(p))


def psi_iso_check(p: int, phi, alpha: int) -> bool:
    """The mirror map intertwines an irr member's solution with its co-simple form."""
    sol_a = to_solution(irr_cycle_set(p, phi, alpha))
    f, t = co_params(p, phi, alpha)
    sol_b = co_simple_solution(p, f, t)
    psi = mirror_perm(p)
    n = p * p
    for x in range(n):
        for y in range(n):
            u, v = sol_a.r(x, y)
            if (psi[u], psi[v]) != sol_b.r(psi[x], psi[y]):
                return False
    return True
