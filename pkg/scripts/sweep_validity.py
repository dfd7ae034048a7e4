#!/usr/bin/env python3
"""Validity sweep: rebuild every class at the given primes and recheck it.

For each enumerated isomorphism class the script verifies the table
axioms, indecomposability, the expected retraction profile, and the full
braiding/involutivity/nondegeneracy check of the derived solution.  Prints
one tally line per prime and exits nonzero on the first failure.
"""

import argparse
import sys
import time

from cyclesets import (
    CyclicParams,
    Mpl2Params,
    check_cycle_set,
    check_solution,
    enumerate_classes,
    is_indecomposable,
    is_irretractable,
    multipermutation_level,
    to_cycle_set,
    to_solution,
)


def sweep(p):
    tally = {"cyclic": 0, "mpl2": 0, "irr": 0}
    for q in enumerate_classes(p):
        cs = to_cycle_set(q)
        rep = check_cycle_set(cs)
        if not rep.ok:
            return tally, f"{q}: axiom check failed ({rep})"
        if not is_indecomposable(cs):
            return tally, f"{q}: decomposable"
        lvl = multipermutation_level(cs)
        if isinstance(q, CyclicParams):
            want, key = 1, "cyclic"
        elif isinstance(q, Mpl2Params):
            want, key = 2, "mpl2"
        else:
            want, key = None, "irr"
        if lvl != want or (want is None and not is_irretractable(cs)):
            return tally, f"{q}: retraction profile {lvl}, expected {want}"
        srep = check_solution(to_solution(cs))
        if not srep.ok:
            return tally, f"{q}: solution check failed ({srep})"
        tally[key] += 1
    return tally, None


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5])
    args = ap.parse_args(argv)
    for p in args.primes:
        t0 = time.monotonic()
        tally, err = sweep(p)
        dt = time.monotonic() - t0
        if err is not None:
            print(f"p={p}: FAILED after {tally} -- {err}", file=sys.stderr)
            return 1
        total = sum(tally.values())
        print(f"p={p}: {total} classes ok "
              f"(cyclic {tally['cyclic']}, level-2 {tally['mpl2']}, "
              f"irretractable {tally['irr']}) in {dt:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
