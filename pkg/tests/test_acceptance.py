"""Acceptance criteria, each run at its stated size and tolerance.

Every criterion prints one ``criterion N: PASS|FAIL (...)`` line; the lines are
also collected into the pytest terminal summary. Run this file directly with
``python tests/test_acceptance.py`` to get just those lines.
"""
from __future__ import annotations

import csv
import math
import random
import sys
import tempfile
import time
from fractions import Fraction as Fr
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mogames import (  # noqa: E402
    MixedProfile,
    NormalFormGame,
    SymmetricGame,
    approx_mocr,
    check_theorem1,
    configuration_of,
    configurations,
    divide_set,
    estimate_Z_moments,
    gen_graphical,
    gen_potential_game,
    gen_uniform_normal,
    gen_uniform_symmetric,
    grid_scopes,
    is_def4_equilibrium,
    is_def5_equilibrium,
    mocr,
    mocr_oracle,
    ones,
    pareto_nash,
    ratio_member,
    scale_set,
    scalarized_nash,
    simplex_front_size,
    to_normal_form,
    vector_set,
    weakly_dominates,
    wst,
    zeros,
)
from mogames.cli import main as cli_main  # noqa: E402
from oracles import all_profiles, exact_antichain, naive_eff, naive_pn, naive_wst, rand_vectors, welfare  # noqa: E402

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # running as a script
    ACCEPTANCE_LINES = []


def report(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def _instances_small(seed=3, count=100):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(1, 3)
        E = wst(rand_vectors(rng, rng.randint(1, 4), d))
        F = vector_set(rand_vectors(rng, rng.randint(1, 4), d))
        out.append((E, F))
    return out


def _instances_large(seed=4, count=100):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(1, 3)
        out.append((vector_set(exact_antichain(rng, rng.randint(1, 12), d)),
                    vector_set(exact_antichain(rng, rng.randint(1, 12), d))))
    return out


def criterion_1():
    t0 = time.perf_counter()
    g = NormalFormGame(1, 2, [3], [[(1, 4), (2, 2), (4, 1)]])
    pure = lambda a: MixedProfile.pure((a,), g.actions)  # noqa: E731
    checks = {
        "pn = all three": pareto_nash(g).pn == ((0,), (1,), (2,)),
        "def4(2,2) false": is_def4_equilibrium(g, pure(1)) is False,
        "def5(2,2) true": is_def5_equilibrium(g, pure(1)) is True,
        "def4(1,4) true": is_def4_equilibrium(g, pure(0)) is True,
    }
    dt = time.perf_counter() - t0
    bad = [k for k, v in checks.items() if not v]
    return report(1, not bad and dt < 1, f"{len(checks) - len(bad)}/4 checks, {dt:.3f}s < 1s" + (f"; failed {bad}" if bad else ""))


def criterion_2():
    rng = random.Random(2)
    t0 = time.perf_counter()
    good = 0
    for seed in range(100):
        game, phi = gen_potential_game(rng.randint(1, 4), rng.randint(1, 3), rng.randint(1, 3), seed=seed)
        r = check_theorem1(game, phi)
        good += r.equal and r.nonempty
    dt = time.perf_counter() - t0
    return report(2, good == 100 and dt < 10, f"PN = LOC and nonempty in {good}/100, {dt:.2f}s < 10s")


def criterion_3():
    inst = _instances_small()
    t0 = time.perf_counter()
    good = sum(mocr(E, F) == mocr_oracle(E, F) for E, F in inst)
    dt = time.perf_counter() - t0
    return report(3, good == 100 and dt < 10, f"mocr == oracle in {good}/100, {dt:.2f}s < 10s")


def criterion_4():
    inst = _instances_small() + _instances_large()
    violations, worst = 0, 0.0
    for E, F in inst:
        d = len(F[0])
        bound = (len(wst(E)) * len(F)) ** (d - 1)
        size = len(mocr(E, F))
        violations += size > bound
        worst = max(worst, size / bound)
    return report(4, violations == 0, f"{violations} violations over {len(inst)} instances, max |out|/bound = {worst:.2f}")


def criterion_5():
    rng = random.Random(5)
    fails = {"zero": 0, "scale_E": 0, "scale_F": 0, "subset": 0, "non_subset": 0}
    for _ in range(200):
        d = rng.randint(1, 3)
        E = rand_vectors(rng, rng.randint(1, 4), d)
        F = rand_vectors(rng, rng.randint(1, 4), d)
        r = rand_vectors(rng, 1, d, lo=1, hi=5)[0]
        fails["zero"] += mocr([zeros(d)], F) != (zeros(d),)
        fails["scale_E"] += mocr(scale_set(r, E), F) != scale_set(r, mocr(E, F))
        fails["scale_F"] += mocr(E, scale_set(r, F)) != divide_set(mocr(E, F), r)
    for _ in range(50):
        d = rng.randint(2, 3)
        F = exact_antichain(rng, rng.randint(1, 6), d)
        E = rng.sample(F, rng.randint(1, len(F)))
        fails["subset"] += ones(d) not in mocr(wst(E), F)
        y = list(rng.choice(E))
        k = rng.randrange(d)
        y[k] = y[k] * Fr(rng.randint(1, 9), 10)
        E2 = E + [tuple(y)]
        fails["non_subset"] += set(E2) <= set(F) or ones(d) in mocr(wst(E2), F)
    total = sum(fails.values())
    return report(5, total == 0, "failures " + ", ".join(f"{k}={v}" for k, v in fails.items()) + " (200/200/200/50/50 trials)")


def criterion_6():
    t0 = time.perf_counter()
    m = estimate_Z_moments(5, 4, 2, 2000, seed=20260)
    dt = time.perf_counter() - t0
    freq = m.tail_freq(0.5)
    ok = 28.8 <= m.mean <= 35.2 and m.variance <= 40 and freq >= 0.875 and dt < 60
    return report(6, ok, f"mean {m.mean:.3f} in [28.8, 35.2], variance {m.variance:.2f} <= 40, "
                         f"P(16<=Z<=48) = {freq:.4f} >= 0.875, {dt:.1f}s < 60s")


def criterion_7():
    rng = random.Random(7)
    e1, e2 = Fr(13, 200), Fr(7, 200)
    sound = complete = total_rho = total_exact = 0
    t0 = time.perf_counter()
    for _ in range(50):
        F = exact_antichain(rng, rng.randint(1, 50), 2, total=400)
        W = exact_antichain(rng, rng.randint(1, 50), 2, total=300)
        extra = [tuple(c + rng.randint(1, 30) for c in rng.choice(W)) for _ in range(rng.randint(0, 20))]
        E = W + extra
        wE = wst(E)
        assert len(wE) <= 50 and len(F) <= 50
        approx, g = approx_mocr(wE, F, e1, e2)
        exact = mocr(wE, F)
        total_rho += len(approx)
        total_exact += len(exact)
        sound += sum(ratio_member(rho, E, F) for rho in approx)
        complete += sum(any(weakly_dominates(tuple(g * c for c in a), rho) for a in approx) for rho in exact)
    dt = time.perf_counter() - t0
    ok = sound == total_rho and complete == total_exact and dt < 60
    return report(7, ok, f"sound {sound}/{total_rho}, covered {complete}/{total_exact}, {dt:.1f}s < 60s")


def _approx_rows(args):
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "t.csv"
        code = cli_main([str(a) for a in args] + ["--no-timing", "-o", str(out)])
        assert code == 0
        with open(out, newline="", encoding="utf-8") as fh:
            return list(csv.DictReader(fh))


def criterion_8():
    notes, ok = [], True
    for n2, n1s in ((1, "4,8,12"), (2, "2,4,6")):
        rows = _approx_rows(["approx", "--kind", "graphical-grid", "--grid-n1-values", n1s, "--grid-n2", n2,
                             "--d", 2, "--repeat", 5, "--seed", 8, "--eps1", "0.065", "--eps2", "0.035"])
        m = [float(r["m"]) for r in rows]
        q = [float(r["q"]) for r in rows]
        me = [float(r["m_ε"]) for r in rows]
        qe = [float(r["q_ε"]) for r in rows]
        part = max(me) <= 10 and max(qe) <= 10 and m[-1] > m[0] and q[-1] > q[0]
        ok &= part
        notes.append(f"n2={n2}: n={[r['n'] for r in rows]} m={m} q={q} m_eps={me} q_eps={qe}")
    # exact MO-CR on normal forms up to n = 12
    sizes = []
    for n in (4, 8, 12):
        seed = 0
        while True:
            res = pareto_nash(gen_uniform_normal(n, 2, 2, 1, 16, seed=1000 * n + seed))
            if res.wst_E:
                break
            seed += 1
        sizes.append(len(mocr(res.wst_E, res.frontier_F)))
    notes.append(f"exact normal-form |MO-CR| at n=4,8,12: {sizes}")
    return report(8, ok, "; ".join(notes))


def criterion_9():
    t0 = time.perf_counter()
    mean = simplex_front_size(1000, 2, 200, seed=9)
    dt = time.perf_counter() - t0
    target = math.sqrt(2) * math.sqrt(1000)
    rel = abs(mean - target) / target
    return report(9, rel <= 0.15 and dt < 60, f"mean front size {mean:.2f} vs {target:.2f}, "
                                                f"relative error {rel:.3f} (limit 0.15), {dt:.1f}s < 60s")


def _random_game(rng, seed):
    kind = rng.choice(["normal", "symmetric", "graphical"])
    d = rng.randint(1, 3)
    hi = rng.choice([3, 16])
    if kind == "normal":
        while True:
            n, alpha = rng.randint(1, 5), rng.randint(1, 4)
            if alpha ** n <= 2000:
                return gen_uniform_normal(n, alpha, d, 1, hi, seed)
    if kind == "symmetric":
        while True:
            n, alpha = rng.randint(1, 6), rng.randint(1, 3)
            if alpha ** n <= 2000:
                return gen_uniform_symmetric(n, alpha, d, 1, hi, seed)
    n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
    return gen_graphical(grid_scopes(n1, n2), 2, d, 1, hi, seed)


def criterion_10():
    rng = random.Random(10)
    agree = subset = 0
    for seed in range(200):
        g = _random_game(rng, seed)
        nf = to_normal_form(g)
        res = pareto_nash(g)
        pn = naive_pn(nf)
        outcomes = [welfare(nf, p) for p in pn]
        if isinstance(g, SymmetricGame):
            same_pn = list(res.pn) == sorted({configuration_of(p, g.alpha) for p in pn})
            profiles = {p for p in all_profiles(nf.actions) if configuration_of(p, g.alpha) in set(res.pn)}
        else:
            same_pn = list(res.pn) == pn
            profiles = set(res.pn)
        same = (
            same_pn
            and list(res.outcomes_E) == sorted(set(outcomes))
            and list(res.eff_E) == naive_eff(outcomes)
            and list(res.wst_E) == naive_wst(outcomes)
            and list(res.frontier_F) == naive_eff(welfare(nf, p) for p in all_profiles(nf.actions))
        )
        agree += same
        w = [[rng.randint(1, 9) for _ in range(g.d)] for _ in range(g.n)]
        subset += set(scalarized_nash(g, w)) <= profiles
    return report(10, agree == 200 and subset == 200, f"solver == oracle in {agree}/200, scalarized subset in {subset}/200")


def criterion_11():
    bad = [(n, a) for n in range(1, 21) for a in range(1, 6) if len(configurations(n, a)) != comb(n + a - 1, a - 1)]
    return report(11, not bad, f"{100 - len(bad)}/100 (n, alpha) pairs match the binomial count")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 12)])
def test_acceptance(criterion):
    assert criterion()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
