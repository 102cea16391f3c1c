"""Brute-force reference implementations used only by the tests.

Nothing here calls into the library's solvers; each oracle restates the
definition directly so that agreement is meaningful.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction


def geq(x, y):
    return all(a >= b for a, b in zip(x, y))


def dom(x, y):
    return geq(x, y) and any(a > b for a, b in zip(x, y))


def naive_eff(X):
    X = set(map(tuple, X))
    return sorted(x for x in X if not any(dom(y, x) for y in X))


def naive_wst(X):
    X = set(map(tuple, X))
    return sorted(x for x in X if not any(dom(x, y) for y in X))


def all_profiles(actions):
    return list(itertools.product(*(range(a) for a in actions)))


def naive_pn(game):
    """Profiles where no unilateral deviation yields a dominating payoff."""
    out = []
    for p in all_profiles(game.actions):
        ok = True
        for i in range(game.n):
            cur = game.payoff(p, i)
            for b in range(game.actions[i]):
                q = p[:i] + (b,) + p[i + 1:]
                if dom(game.payoff(q, i), cur):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(p)
    return out


def welfare(game, p):
    return tuple(sum(c) for c in zip(*(game.payoff(p, i) for i in range(game.n))))


def naive_loc(phi, actions):
    out = []
    for p in all_profiles(actions):
        v = phi(p)
        hood = [phi(p[:i] + (b,) + p[i + 1:]) for i in range(len(actions)) for b in range(actions[i])]
        if not any(dom(w, v) for w in hood):
            out.append(p)
    return out


def simplex_grid(k, res):
    """All k-vectors of multiples of 1/res summing to 1."""
    for cuts in itertools.combinations(range(res + k - 1), k - 1):
        parts, prev = [], -1
        for c in cuts + (res + k - 1,):
            parts.append(Fraction(c - prev - 1, res))
            prev = c
        yield tuple(parts)


def grid_dominating_mixture(rows, target, res=64):
    d = len(target)
    for q in simplex_grid(len(rows), res):
        v = tuple(sum(qa * r[k] for qa, r in zip(q, rows)) for k in range(d))
        if dom(v, target):
            return q
    return None


def naive_ratio_member(rho, E, F):
    return all(any(all(Fraction(y[k]) / z[k] >= rho[k] for k in range(len(rho))) for z in F) for y in E)


def rand_rational(rng: random.Random, lo=1, hi=20, den=6):
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


def rand_vectors(rng: random.Random, count, d, **kw):
    return [tuple(rand_rational(rng, **kw) for _ in range(d)) for _ in range(count)]


def rand_antichain(rng: random.Random, count, d, **kw):
    """A nonempty antichain of at most ``count`` positive vectors."""
    return naive_eff(rand_vectors(rng, count, d, **kw))


def exact_antichain(rng: random.Random, count, d, total=None):
    """``count`` distinct positive integer vectors with a common component sum.

    Equal sums rule out strict dominance, so the result is an antichain of
    exactly ``count`` members (for d >= 2 and a large enough total).
    """
    if d == 1:
        return [(rng.randint(1, 50),)]
    total = total or max(4 * count, 60)
    out = set()
    while len(out) < count:
        cuts = sorted(rng.sample(range(1, total), d - 1))
        v = tuple(b - a for a, b in zip([0] + cuts, cuts + [total]))
        out.add(v)
    return sorted(out)
