#!/usr/bin/env python3
"""Full verification run: reproduces every headline computation in one go.

Prints a sectioned report and exits nonzero if anything fails.  All
randomness is seeded, so two runs produce identical output.
"""

from __future__ import annotations

import argparse
import sys
import time

from blockdet.conditions import cond_f, cond_f_down, cond_f_side, cond_named
from blockdet.ncdet import bourbaki_trace
from blockdet.ring import PrimeField, ZZ
from blockdet.traces import (
    check_colswap_identity,
    check_rowswap_identity,
    check_transpose_identity,
)
from blockdet.verify import (
    builtin_matrix,
    check_identity,
    classify_size2,
    gen_satisfying,
    optimality_scan,
    run_campaign,
    silvester_check,
    trial_seed,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200, help="trials per campaign")
    parser.add_argument("--seed", type=int, default=20161004)
    args = parser.parse_args()

    ring = PrimeField(10007)
    trials, seed = args.trials, args.seed
    failures = 0
    t_start = time.perf_counter()

    def section(title):
        print(f"\n== {title}")

    def expect(ok, text):
        nonlocal failures
        print(f"  [{'ok' if ok else 'FAIL'}] {text}")
        if not ok:
            failures += 1

    section("deterministic counterexamples")
    for name, lhs, rhs in [("m1", -128, 0), ("m2", 128, 0), ("m3", 1152, 1872)]:
        r = check_identity(builtin_matrix(name))
        expect(
            (str(r.lhs), str(r.rhs), r.equal) == (str(lhs), str(rhs), False),
            f"{name}: lhs={r.lhs} rhs={r.rhs}",
        )

    section("size-2 classification")
    cls = classify_size2()
    n_scc = sum(1 for r in cls.records if r.is_scc)
    expect(n_scc == 48 and len(cls.records) == 64, f"{n_scc} sufficient / {64 - n_scc} falsified")

    section("identity campaigns (sufficient families)")
    jobs = [("f", cond_f(2), 4), ("f", cond_f(3), 6), ("f", cond_f(4), 8)]
    jobs += [(f"side:{j}", cond_f_side(j, n), 2 * n) for n in (2, 3) for j in range(1, n + 1)]
    jobs += [(f"down:{i}", cond_f_down(i, n), 2 * n) for n in (2, 3) for i in range(1, n + 1)]
    jobs += [("g5", cond_named("g5"), 4)]
    for idx, (cid, cond, m) in enumerate(jobs):
        rep = run_campaign(cond, m, ring, trials, trial_seed(seed, idx), condition_id=cid)
        expect(rep.failures == 0, f"n={cond.n} {rep.summary_line()} generator={rep.generator}")

    section("identity campaigns (insufficient conditions, failures expected)")
    for idx, name in enumerate(("h1", "h2", "h3", "h4")):
        rep = run_campaign(cond_named(name), 3, ring, trials, trial_seed(seed, 100 + idx),
                           condition_id=name)
        expect(rep.failures > 0, rep.summary_line())

    section("two-block determinant formulas")
    for variant in ("a", "b", "c"):
        rep = silvester_check(variant, 3, ring, trials, trial_seed(seed, 200))
        expect(rep.failures == 0, rep.summary_line())
    rep = silvester_check("c", 3, ring, trials, trial_seed(seed, 201), enforce_hypothesis=False)
    expect(rep.failures > 0, f"negative control: {rep.summary_line()}")

    section("symbolic ordering identities")
    for n in (2, 3, 4):
        for k in range(1, n):
            expect(check_colswap_identity(n, k), f"colswap n={n} k={k}")
    for n in (1, 2, 3):
        for c in range(1, n + 1):
            expect(check_transpose_identity(n, c), f"transpose n={n} c={c}")
    expect(check_rowswap_identity(3, 2, 3, ((2, 1), (2, 2))), "rowswap same-row pair")
    expect(check_rowswap_identity(4, 3, 4, ((2, 1), (3, 2))), "rowswap order-preserving relocation")
    expect(not check_rowswap_identity(3, 2, 3, ((2, 1), (3, 2))),
           "rowswap order-reversing case is honestly false")

    section("optimality of the row-one-free family")
    for n in (2, 3, 4):
        rep = optimality_scan(n, campaign_trials=min(trials, 60), seed=seed)
        expect(rep.all_ok, f"scan n={n}: {len(rep.edge_cases)} withheld edges all falsified")

    section("polynomial-extension induction trace")
    for n in (2, 3):
        ok = True
        for i in range(20):
            bm = gen_satisfying(cond_f(n), 2 * n, ZZ, trial_seed(seed, 300 + 50 * n + i))
            if not bourbaki_trace(bm).checks.all_pass:
                ok = False
                break
        expect(ok, f"n={n}: 20 integer samples, all five checks")

    print(f"\n{'ALL CHECKS PASSED' if failures == 0 else f'{failures} CHECKS FAILED'} "
          f"in {time.perf_counter() - t_start:.1f}s")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
