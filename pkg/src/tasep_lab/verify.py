"""Named verification campaigns over the other modules.

Each check returns a :class:`CheckReport`.  Checks look transition maps up on
the :mod:`tasep_lab.kernel` module at call time, so replacing a rule there
(for mutation tests) is seen by every campaign.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

from . import chain, enumeration, excursion, kernel, weights
from .config import B, W, X, Boundary, CompleteConfig, is_valid, serialize
from .enumeration import Space, count_closed, count_enumerated, enumerate_space
from .weights import RateParams, wall_rate, weight


class VerifyError(ValueError):
    pass


@dataclass
class CheckReport:
    name: str
    bounds: dict
    passed: bool
    counterexample: str | None
    runtime: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} {json.dumps(self.bounds, sort_keys=True)} {self.runtime:.2f}s"
        if self.detail:
            text += f" {self.detail}"
        if self.counterexample:
            text += f"\n  counterexample: {self.counterexample}"
        return text

    def to_dict(self) -> dict:
        return asdict(self)


class Failure(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


def expect(ok: bool, message: str | Callable[[], str]) -> None:
    if not ok:
        raise Failure(message() if callable(message) else message)


def _pairs(states, walls: Callable[[CompleteConfig], range]) -> Iterator[tuple[CompleteConfig, int]]:
    for s in states:
        for i in walls(s):
            yield s, i


def _open_walls(s: CompleteConfig) -> range:
    return range(s.n + 1)


def _circle_walls(s: CompleteConfig) -> range:
    return range(s.n)


def _fmt(s, i=None) -> str:
    return serialize(s) if i is None else f"({serialize(s)}, {i})"


def random_params(
    rng: random.Random, count: int, epsilons=(Fraction(0),), bounded: bool = False
) -> list[RateParams]:
    """Small-denominator rational rate points.

    Points with ``epsilon > 0``, and all points when ``bounded`` is set, respect
    the three-species rate bound.
    """
    out = []
    while len(out) < count:
        vals = [Fraction(rng.randint(1, 10), rng.randint(1, 10)) for _ in range(3)]
        if any(v > 1 for v in vals):
            continue
        eps = epsilons[len(out) % len(epsilons)]
        p = RateParams(*vals, eps)
        if (eps or bounded) and p.neutral_border_rate > 1:
            continue
        out.append(p)
    return out


def _all_hat_spaces(n: int, min_l: int = 1) -> Iterator[Space]:
    for k in range(n + 1):
        for l in range(min_l, n + 1 - k):
            yield Space("omega_hat", n, k, l, n - k - l)


# --------------------------------------------------------------------------
# checks


def check_counts(b, rng) -> str:
    for n in range(b["omega0"] + 1):
        s = Space("omega0", n)
        expect(count_enumerated(s) == count_closed(s) == enumeration.catalan(n + 1), f"|{s}|")
    for n in range(b["omega0_km"] + 1):
        for k in range(n + 1):
            s = Space("omega0", n, k, 0, n - k)
            expect(count_enumerated(s) == count_closed(s), f"|{s}|")
    for n in range(b["omega"] + 1):
        s = Space("omega", n)
        expect(count_enumerated(s) == comb(2 * n + 2, n + 1) // 2, f"|{s}|")
    for n in range(b["omega_l"] + 1):
        for l in range(n + 1):
            s = Space("omega", n, None, l, None)
            expect(count_enumerated(s) == count_closed(s), f"|{s}|")
            for k in range(n - l + 1):
                s = Space("omega", n, k, l, n - k - l)
                expect(count_enumerated(s) == count_closed(s), f"|{s}|")
    for n in range(1, b["omega_hat"] + 1):
        for s in _all_hat_spaces(n):
            expect(count_enumerated(s) == comb(n, s.k) * comb(n, s.m), f"|{s}|")
    return ""


def _check_permutation(states, walls, f, finv, name) -> int:
    universe = set(states)
    seen: dict = {}
    count = 0
    for s, i in _pairs(states, walls):
        out = f(s, i)
        expect(out.state in universe, lambda: f"{name}{_fmt(s, i)} = {_fmt(*out)} leaves the space")
        key = (out.state, out.exit_wall)
        expect(key not in seen, lambda: f"{name}{_fmt(s, i)} = {name}{_fmt(*seen[key])} = {_fmt(*out)}")
        seen[key] = (s, i)
        back = finv(*out)
        expect(tuple(back) == (s, i), lambda: f"{name}^-1{_fmt(*out)} = {_fmt(*back)}, expected {_fmt(s, i)}")
        count += 1
    return count


def check_bijection_T(b, rng) -> str:
    total = 0
    for n in range(b["n"] + 1):
        sts = list(enumerate_space(Space("omega0", n)))
        total += _check_permutation(sts, _open_walls, kernel.bar_T, kernel.bar_T_inv, "T")
    return f"{total} pairs"


def check_bijection_T1T2(b, rng) -> str:
    total = 0
    for n in range(b["n"] + 1):
        sts = list(enumerate_space(Space("omega", n)))
        total += _check_permutation(sts, _open_walls, kernel.bar_T1, kernel.bar_T1_inv, "T1")
        _check_permutation(sts, _open_walls, kernel.bar_T2, kernel.bar_T2_inv, "T2")
        for s, i in _pairs(sts, _open_walls):
            yy = kernel.Y(*kernel.Y(s, i))
            expect(tuple(yy) == (s, i), lambda: f"Y(Y{_fmt(s, i)}) = {_fmt(*yy)}")
            t2 = kernel.bar_T2(s, i).state.top
            expect(t2 == kernel.theta3(s.top, i, 2), lambda: f"top of T2{_fmt(s, i)} is {t2}")
            border_neutral = n and ((i == 0 and s.top[0] == X) or (i == n and s.top[-1] == X))
            if not border_neutral:
                t1 = kernel.bar_T1(s, i).state.top
                expect(t1 == kernel.theta3(s.top, i, 1), lambda: f"top of T1{_fmt(s, i)} is {t1}")
    for n in range(1, b["n_hat"] + 1):
        for sp in _all_hat_spaces(n):
            sts = list(enumerate_space(sp))
            _check_permutation(sts, _circle_walls, kernel.hat_T, kernel.hat_T_inv, "hatT")
            for s, i in _pairs(sts, _circle_walls):
                out = kernel.hat_T(s, i)
                expect(
                    out.state.top == kernel.theta_periodic(s.top, i),
                    lambda: f"top of hatT{_fmt(s, i)} is {out.state.top}",
                )
    return f"{total} pairs"


def check_sweep_equivalence(b, rng) -> str:
    total = 0
    for n in range(b["n"] + 1):
        for s, i in _pairs(enumerate_space(Space("omega0", n)), _open_walls):
            a = kernel.bar_T(s, i).state
            c = kernel.T_sweep(s, i)
            expect(a == c, lambda: f"T{_fmt(s, i)}: insert/delete gives {_fmt(a)}, sweeps give {_fmt(c)}")
            expect(a.top == kernel.theta(s.top, i), lambda: f"top of T{_fmt(s, i)} is {a.top}")
            total += 1
    return f"{total} pairs"


def _boundary_rate(n: int, i: int, p: RateParams):
    return p.beta if i == 0 else p.gamma if i == n else p.alpha


def check_weight_transport_2(b, rng) -> str:
    pts = random_params(rng, b["points"])
    for p in pts:
        for n in range(b["n"] + 1):
            for s, i in _pairs(enumerate_space(Space("omega0", n)), _open_walls):
                out = kernel.bar_T(s, i)
                if tuple(out) == (s, i):
                    continue
                lhs = _boundary_rate(n, i, p) * weight(s, p)
                rhs = _boundary_rate(n, out.exit_wall, p) * weight(out.state, p)
                expect(lhs == rhs, lambda: f"{p}: {_fmt(s, i)} -> {_fmt(*out)}: {lhs} != {rhs}")
    return f"{len(pts)} parameter points"


def _split(s: CompleteConfig, i: int, p: RateParams):
    return chain.split_rates(s.top, i, p)


def check_weight_transport_3(b, rng) -> str:
    pts = random_params(rng, b["points"], tuple(Fraction(e) for e in b["epsilons"]))
    for p in pts:
        for n in range(b["n"] + 1):
            for s, j in _pairs(enumerate_space(Space("omega", n)), _open_walls):
                one = kernel.bar_T1_inv(s, j)
                two = kernel.bar_T2_inv(s, j)
                lhs = _split(*one, p)[0] * weight(one.state, p) + _split(*two, p)[1] * weight(two.state, p)
                rhs = sum(_split(s, j, p)) * weight(s, p)
                expect(lhs == rhs, lambda: f"{p}: at {_fmt(s, j)} inflow {lhs} != {rhs}")
    return f"{len(pts)} parameter points"


def check_weight_transport_periodic(b, rng) -> str:
    pts = random_params(rng, b["points"])
    for p in pts:
        for n in range(1, b["n"] + 1):
            for sp in _all_hat_spaces(n):
                for s, i in _pairs(enumerate_space(sp), _circle_walls):
                    out = kernel.hat_T(s, i)
                    lhs = wall_rate(s.top, i, p, periodic=True) * weight(s, p)
                    rhs = wall_rate(out.state.top, out.exit_wall, p, periodic=True) * weight(out.state, p)
                    expect(lhs == rhs, lambda: f"{p}: {_fmt(s, i)} -> {_fmt(*out)}: {lhs} != {rhs}")
    return f"{len(pts)} parameter points"


def _uniform(dist: chain.Distribution, size: int) -> bool:
    return all(p == Fraction(1, size) for p in dist.probabilities) and len(dist.support) == size


def check_stationary_uniform(b, rng) -> str:
    for n in range(b["n"] + 1):
        d = chain.stationary_exact(chain.ChainSpec("x0", n))
        expect(_uniform(d, enumeration.catalan(n + 1)), f"x0 n={n} is not uniform")
    half = RateParams(epsilon=Fraction(1, 2))
    for n in range(b["n3"] + 1):
        d = chain.stationary_exact(chain.ChainSpec("x", n, half))
        size = comb(2 * n + 2, n + 1) // 2
        expect(_uniform(d, size), f"x n={n} eps=1/2 is not uniform")
        by_counts: dict = {}
        for s, pr in zip(d.support, d.probabilities):
            by_counts[s.counts()] = by_counts.get(s.counts(), 0) + pr
        for (k, l, m), pr in by_counts.items():
            want = Fraction((l + 1) * comb(n + 1, k) * comb(n + 1, m), n + 1) / size
            expect(pr == want, f"x n={n}: P(k={k}, l={l}, m={m}) = {pr}, expected {want}")
    for n in range(1, b["n_hat"] + 1):
        for sp in _all_hat_spaces(n):
            d = chain.stationary_exact(chain.ChainSpec("x_hat", n, RateParams(), sp.k, sp.l, sp.m))
            size = comb(n, sp.k) * comb(n, sp.m)
            expect(_uniform(d, size), f"x_hat {sp} is not uniform")
            srt = enumeration.sorted_periodic(sp.k, sp.l, sp.m)
            expect(d[srt] == Fraction(1, size), f"sorted circle {_fmt(srt)} has probability {d[srt]}")
    return ""


def _proportional(d: chain.Distribution, p: RateParams) -> str | None:
    q = [weight(s, p) for s in d.support]
    z = sum(q)
    for s, pr, w in zip(d.support, d.probabilities, q):
        if pr != w / z:
            return f"{p}: pi({_fmt(s)}) = {pr}, q/Z = {w / z}"
    return None


def check_stationary_q(b, rng) -> str:
    for p in random_params(rng, b["points"]):
        for n in range(b["n"] + 1):
            bad = _proportional(chain.stationary_exact(chain.ChainSpec("x0", n, p)), p)
            expect(bad is None, lambda: f"x0 n={n} {bad}")
        for n in range(1, b["n_hat"] + 1):
            for sp in _all_hat_spaces(n):
                bad = _proportional(chain.stationary_exact(chain.ChainSpec("x_hat", n, p, sp.k, sp.l, sp.m)), p)
                expect(bad is None, lambda: f"x_hat {sp} {bad}")
    pts3 = random_params(rng, b["points"] * len(b["epsilons"]), tuple(Fraction(e) for e in b["epsilons"]))
    for p in pts3:
        for n in range(b["n3"] + 1):
            bad = _proportional(chain.stationary_exact(chain.ChainSpec("x", n, p)), p)
            expect(bad is None, lambda: f"x n={n} {bad}")
    return ""


def _restricted_stationary(spec: chain.ChainSpec, keep: Callable) -> chain.Distribution:
    tm = chain.transition_matrix(spec)
    idx = [a for a, s in enumerate(tm.states) if keep(s)]
    pos = {a: r for r, a in enumerate(idx)}
    rows = []
    for a in idx:
        row = tm.rows[a]
        expect(all(b in pos for b in row), f"the kept states of {spec.model.value} are not closed")
        rows.append({pos[b]: v for b, v in row.items()})
    sub = chain.TransitionMatrix([tm.states[a] for a in idx], rows, True)
    return chain.Distribution(sub.states, chain.solve_elimination(sub))


def check_marginal_consistency(b, rng) -> str:
    pts = [RateParams()] + random_params(rng, b["points"])
    for p in pts:
        for n in range(b["n"] + 1):
            rows = chain.stationary_exact(chain.ChainSpec("s0", n, p))
            top = chain.marginal_top(chain.stationary_exact(chain.ChainSpec("x0", n, p)))
            expect(rows.as_dict() == top.as_dict(), f"{p}: s0 and top(x0) differ at n={n}")
        for n in range(1, b["n_hat"] + 1):
            for sp in _all_hat_spaces(n):
                rows = chain.stationary_exact(chain.ChainSpec("s_hat", n, p, sp.k, sp.l, sp.m))
                top = chain.marginal_top(chain.stationary_exact(chain.ChainSpec("x_hat", n, p, sp.k, sp.l, sp.m)))
                expect(rows.as_dict() == top.as_dict(), f"{p}: s_hat and top(x_hat) differ on {sp}")
    for p in random_params(rng, b["points"], (Fraction(1, 4), Fraction(1, 2))):
        for n in range(b["n3"] + 1):
            rows = chain.stationary_exact(chain.ChainSpec("s", n, p))
            top = chain.marginal_top(chain.stationary_exact(chain.ChainSpec("x", n, p)))
            expect(rows.as_dict() == top.as_dict(), f"{p}: s and top(x) differ at n={n}")
    for n in range(b["n_narayana"] + 1):
        top = chain.marginal_top(chain.stationary_exact(chain.ChainSpec("x0", n)))
        cat = enumeration.catalan(n + 1)
        expect(top["W" * n] == Fraction(1, cat), f"P(no black) at n={n}")
        by_k: dict = {}
        for row, pr in zip(top.support, top.probabilities):
            by_k[row.count(B)] = by_k.get(row.count(B), 0) + pr
        for k in range(n + 1):
            want = Fraction(enumeration.narayana_count(n, k, n - k), cat)
            expect(by_k.get(k, 0) == want, f"P({k} black) at n={n} is {by_k.get(k)}, expected {want}")
    for p0 in random_params(rng, b["points"], bounded=True):
        for n in range(b["n_eps0"] + 1):
            free = _restricted_stationary(chain.ChainSpec("s", n, p0), lambda r: X not in r)
            two = chain.stationary_exact(chain.ChainSpec("s0", n, p0))
            expect(free.as_dict() == two.as_dict(), f"{p0}: s at epsilon=0 differs from s0 at n={n}")
    return ""



def check_irreducibility(b, rng) -> str:
    p = random_params(rng, 1)[0]
    for n in range(b["n"] + 1):
        tm = chain.transition_matrix(chain.ChainSpec("x0", n, p))
        expect(bool(chain.check_irreducible(tm)), f"x0 n={n} is reducible")
        expect(chain.period(tm) == 1, f"x0 n={n} is periodic")
    p3 = random_params(rng, 1, (Fraction(1, 3),))[0]
    for n in range(b["n3"] + 1):
        tm = chain.transition_matrix(chain.ChainSpec("x", n, p3))
        expect(bool(chain.check_irreducible(tm)), f"x n={n} eps={p3.epsilon} is reducible")
        expect(chain.period(tm) == 1, f"x n={n} is periodic")
    for n in range(1, b["n_hat"] + 1):
        for sp in _all_hat_spaces(n):
            tm = chain.transition_matrix(chain.ChainSpec("x_hat", n, p, sp.k, sp.l, sp.m))
            expect(bool(chain.check_irreducible(tm)), f"x_hat {sp} is reducible")
            expect(chain.period(tm) == 1, f"x_hat {sp} is periodic")
    p0 = RateParams(p.alpha, p.beta, p.gamma, Fraction(0))
    for n in range(b["n_eps0"] + 1):
        comps = chain.components_of(chain.transition_matrix(chain.ChainSpec("x", n, p0)))
        ells = [sorted({s.ell for s in c}) for c in comps]
        expect(all(len(e) == 1 for e in ells), f"x n={n} eps=0: a component mixes l values {ells}")
        expect(sorted(e[0] for e in ells) == list(range(n + 1)), f"x n={n} eps=0: components {ells}")
    return ""


def _s_sets(n: int) -> dict[CompleteConfig, set]:
    """Reduced configuration of size ``n - 1`` -> its pairs, from the full cycles."""
    out = {}
    for r in enumerate_space(Space("omega", n - 1)):
        out[r] = {tuple(p) for p in kernel.orbit(r, "T2")}
    return out


def check_orbits(b, rng) -> str:
    for n in range(1, b["n"] + 1):
        every = {(s, i) for s, i in _pairs(enumerate_space(Space("omega", n)), _open_walls)}
        unstable = {pr for pr in every if not kernel.is_stable(*pr)}
        seen_full: set = set()
        seen_short: set = set()
        for r in enumerate_space(Space("omega", n - 1)):
            full = [tuple(p) for p in kernel.orbit(r, "T2")]
            short = [tuple(p) for p in kernel.orbit(r, "T1")]
            expect(len(full) == len(short) + 2, f"|S| != |S0| + 2 for {_fmt(r)}")
            expect(len(set(full)) == len(full), f"T2 cycle of {_fmt(r)} repeats")
            r3 = CompleteConfig(r.top, r.bottom, Boundary.OPEN3)
            for s, i in full:
                red = kernel.reduce(s, i)
                expect(
                    (red.top, red.bottom) == (r3.top, r3.bottom),
                    f"{_fmt(s, i)} lies on the cycle of {_fmt(r)} but reduces to {_fmt(red)}",
                )
            expect(set(short) <= set(full), f"T1 cycle of {_fmt(r)} leaves the T2 cycle")
            missing = set(full) - set(short)
            expect(
                missing == {(r3.with_rows(X + r.top, X + r.bottom), 0), (r3.with_rows(r.top + X, r.bottom + X), n)},
                f"T1 cycle of {_fmt(r)} misses {sorted(map(str, missing))}",
            )
            expect(not (set(full) & seen_full), f"cycles overlap at {_fmt(r)}")
            seen_full |= set(full)
            seen_short |= set(short)
        expect(seen_full == unstable, f"cycles miss unstable pairs at n={n}")
        two = set()
        for r in enumerate_space(Space("omega0", n - 1)):
            cyc = [tuple(p) for p in kernel.orbit(r, "T")]
            expect(all(s.boundary is Boundary.OPEN2 for s, _ in cyc), "T cycle leaves omega0")
            expect(not (set(cyc) & two), f"two-species cycles overlap at {_fmt(r)}")
            two |= set(cyc)
        free = {pr for pr in _pairs(enumerate_space(Space("omega0", n)), _open_walls) if not kernel.is_stable(*pr)}
        expect(two == free, f"two-species cycles miss pairs at n={n}")
    return ""


def _lift_exists(small, small_img, sets, step, n) -> bool:
    target = sets[small_img]
    for (w, k) in sets[small]:
        for ip in range(n + 1):
            out = step(w, ip)
            if (out.state, k) in target:
                return True
    return False


def check_lifting(b, rng) -> str:
    count = 0
    for n in range(2, b["n"] + 1):
        sets = _s_sets(n)
        for name, step in (("T1", kernel.bar_T1), ("T2", kernel.bar_T2)):
            for s, i in _pairs(enumerate_space(Space("omega", n - 1)), _open_walls):
                out = step(s, i)
                if out.state == s:
                    continue
                expect(
                    _lift_exists(s, out.state, sets, step, n),
                    f"{name}{_fmt(s, i)} = {_fmt(*out)} has no lift to size {n}",
                )
                count += 1
    return f"{count} transitions"


def check_split_join(b, rng) -> str:
    for n in range(b["n"] + 1):
        seen = set()
        for s in enumerate_space(Space("omega0", n)):
            wp = excursion.walks(s)
            bt = [0]
            for t in s.top:
                bt.append(bt[-1] + (t == B))
            expect(wp.e[0] == wp.e[-1] == 0 and min(wp.e) >= 0, f"e of {_fmt(s)} is not an excursion")
            for i in range(1, n + 1):
                expect(abs(wp.e[i] - wp.e[i - 1]) + abs(wp.b[i] - wp.b[i - 1]) == 1, f"step {i} of {_fmt(s)}")
            expect(all(wp.e[i] + wp.b[i] == 2 * bt[i] - i for i in range(n + 1)), f"e + b identity on {_fmt(s)}")
            sw = excursion.split(s)
            expect(excursion.join(sw) == s, f"join(split({_fmt(s)})) differs")
            seen.add(sw)
        expect(len(seen) == excursion.split_count(n), f"split is not onto at n={n}")
    for n in range(b["n_count"] + 1):
        expect(excursion.split_count(n) == enumeration.catalan(n + 1), f"counting identity at n={n}")
    return ""


def check_narayana(b, rng) -> str:
    for n in range(b["n"] + 1):
        for k in range(n + 1):
            a = count_enumerated(Space("omega0", n, k, 0, n - k))
            c = count_enumerated(Space("omega0", n, n - k, 0, k))
            want = Fraction(comb(n + 1, k) * comb(n + 1, n - k), n + 1)
            expect(a == c == want, f"n={n} k={k}: {a}, mirror {c}, formula {want}")
    return ""


def check_counting_bijections(b, rng) -> str:
    for n in range(b["n"] + 1):
        image = set()
        for s in enumerate_space(Space("omega", n)):
            pair = enumeration.phi_gamma(s)
            image.add(pair)
            back = enumeration.psi_gamma(*pair)
            expect((back.top, back.bottom) == (s.top, s.bottom), f"psi(phi({_fmt(s)})) = {_fmt(back)}")
        expect(image == set(enumeration.gamma_bar_pairs(n + 1)), f"phi is not onto at n={n}")
        for k in range(n + 1):
            for l in range(n + 1 - k):
                m = n - k - l
                target = {(s.top, s.bottom, i) for s in enumerate_space(Space("omega", n, k, l, m)) for i in range(n + 1)}
                got = set()
                for t, bb, j in enumeration.marked_delta_pairs(n, k, l, m):
                    cfg, i = enumeration.cycle_lemma_map(t, bb, j)
                    expect(is_valid(cfg), f"cycle lemma image {_fmt(cfg)} invalid")
                    got.add((cfg.top, cfg.bottom, i))
                    expect(enumeration.cycle_lemma_inverse(cfg, i) == (t, bb, j), f"cycle lemma round trip {t}/{bb} at {j}")
                expect(got == target, f"cycle lemma map is not onto for k={k} l={l} m={m}")
                if l >= 1:
                    hat = set(enumerate_space(Space("omega_hat", n, k, l, m)))
                    got = set()
                    for t, bb in enumeration.delta_pairs(n, k, m):
                        cfg = enumeration.periodic_map(t, bb)
                        got.add(cfg)
                        expect(enumeration.periodic_inverse(cfg) == (t, bb), f"periodic round trip {t}/{bb}")
                    expect(got == hat, f"periodic map is not onto for k={k} l={l} m={m}")
    return ""


# --------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class CheckDef:
    run: Callable
    quick: dict
    full: dict
    limits: dict = field(default_factory=dict)


CHECKS: dict[str, CheckDef] = {
    "counts": CheckDef(
        check_counts,
        {"omega0": 9, "omega0_km": 8, "omega": 7, "omega_l": 7, "omega_hat": 6},
        {"omega0": 12, "omega0_km": 10, "omega": 10, "omega_l": 9, "omega_hat": 8},
        {"omega0": 14, "omega0_km": 12, "omega": 11, "omega_l": 11, "omega_hat": 10},
    ),
    "bijection-T": CheckDef(check_bijection_T, {"n": 6}, {"n": 7}, {"n": 9}),
    "bijection-T1T2": CheckDef(check_bijection_T1T2, {"n": 5, "n_hat": 5}, {"n": 6, "n_hat": 6}, {"n": 8, "n_hat": 7}),
    "sweep-equivalence": CheckDef(check_sweep_equivalence, {"n": 6}, {"n": 7}, {"n": 9}),
    "weight-transport-2": CheckDef(check_weight_transport_2, {"n": 5, "points": 4}, {"n": 6, "points": 20}, {"n": 8}),
    "weight-transport-3": CheckDef(
        check_weight_transport_3,
        {"n": 3, "points": 4, "epsilons": ["1/4", "1/2"]},
        {"n": 4, "points": 10, "epsilons": ["1/4", "1/3", "1/2", "3/4"]},
        {"n": 6},
    ),
    "weight-transport-periodic": CheckDef(
        check_weight_transport_periodic, {"n": 4, "points": 3}, {"n": 5, "points": 10}, {"n": 7}
    ),
    "stationary-uniform": CheckDef(
        check_stationary_uniform, {"n": 4, "n3": 3, "n_hat": 5}, {"n": 6, "n3": 5, "n_hat": 6}, {"n": 8, "n3": 5, "n_hat": 7}
    ),
    "stationary-q": CheckDef(
        check_stationary_q,
        {"n": 4, "n3": 3, "n_hat": 4, "points": 2, "epsilons": ["1/4", "1/2"]},
        {"n": 5, "n3": 4, "n_hat": 5, "points": 5, "epsilons": ["1/4", "1/2"]},
        {"n": 6, "n3": 5, "n_hat": 6},
    ),
    "marginal-consistency": CheckDef(
        check_marginal_consistency,
        {"n": 4, "n3": 3, "n_hat": 4, "n_narayana": 6, "n_eps0": 4, "points": 1},
        {"n": 5, "n3": 5, "n_hat": 5, "n_narayana": 8, "n_eps0": 5, "points": 3},
        {"n": 7, "n3": 5, "n_hat": 6, "n_narayana": 8, "n_eps0": 6},
    ),
    "irreducibility": CheckDef(
        check_irreducibility,
        {"n": 5, "n3": 4, "n_hat": 5, "n_eps0": 4},
        {"n": 6, "n3": 5, "n_hat": 6, "n_eps0": 4},
        {"n": 8, "n3": 6, "n_hat": 7, "n_eps0": 6},
    ),
    "orbits": CheckDef(check_orbits, {"n": 4}, {"n": 5}, {"n": 7}),
    "lifting": CheckDef(check_lifting, {"n": 4}, {"n": 5}, {"n": 6}),
    "split-join": CheckDef(check_split_join, {"n": 6, "n_count": 10}, {"n": 7, "n_count": 10}, {"n": 10}),
    "narayana": CheckDef(check_narayana, {"n": 8}, {"n": 10}, {"n": 12}),
    "counting-bijections": CheckDef(check_counting_bijections, {"n": 5}, {"n": 6}, {"n": 7}),
}

NAMES = tuple(CHECKS)


def run_check(name: str, bounds: dict | None = None, *, seed: int = 0, profile: str = "quick") -> CheckReport:
    if name not in CHECKS:
        raise VerifyError(f"unknown check {name!r}; known: {', '.join(NAMES)}")
    if profile not in ("quick", "full"):
        raise VerifyError(f"unknown profile {profile!r}")
    d = CHECKS[name]
    eff = dict(d.quick if profile == "quick" else d.full)
    eff.update(bounds or {})
    for key, value in eff.items():
        limit = d.limits.get(key)
        if limit is not None and value > limit:
            raise VerifyError(f"{name}: bound {key}={value} exceeds the enumeration limit {limit}")
    rng = random.Random(f"{name}:{seed}")
    start = time.perf_counter()
    try:
        detail = d.run(eff, rng) or ""
        passed, cex = True, None
    except Failure as exc:
        detail, passed, cex = "", False, exc.message
    except (kernel.KernelError, ValueError) as exc:
        detail, passed, cex = "", False, f"{type(exc).__name__}: {exc}"
    return CheckReport(name, eff, passed, cex, time.perf_counter() - start, detail)


def run_all(profile: str = "quick", *, seed: int = 0) -> list[CheckReport]:
    return [run_check(name, seed=seed, profile=profile) for name in NAMES]


def report_text(reports: list[CheckReport]) -> str:
    lines = [r.line() for r in reports]
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines)


def report_json(reports: list[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


__all__ = [
    "CHECKS",
    "CheckReport",
    "NAMES",
    "VerifyError",
    "random_params",
    "report_json",
    "report_text",
    "run_all",
    "run_check",
]
