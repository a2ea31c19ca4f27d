"""Markov chains on rows and complete configurations.

Six chains are available: the two-species row chain ``s0`` and its complete
lift ``x0``, the three-species pair ``s``/``x`` and the circular pair
``s_hat``/``x_hat``.  At each step a wall is drawn uniformly, then one of the
moves attached to that wall fires with its rate, otherwise nothing happens.

Three-species rates are split between the two complete maps as follows.  At
an exit wall with a black or white particle the first map gets
``(1 - epsilon) * rate`` and the second ``epsilon * rate``.  At a border next to
a neutral particle the first map fixes the configuration, so the full rate
goes to the second map, which performs the same row move as the row chain.
In the interior both maps agree.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from scipy.sparse.linalg import spsolve

from . import kernel
from .config import B, W, X, Boundary, CompleteConfig, ConfigError, check, parse, serialize
from .enumeration import Space, enumerate_space
from .weights import Number, RateParams, wall_rate

DEFAULT_CAP = 200_000
ELIMINATION_LIMIT = 700


class ChainError(ValueError):
    pass


class ReducibleChainError(ChainError):
    def __init__(self, components: list[list]):
        self.components = components
        sizes = sorted((len(c) for c in components), reverse=True)
        super().__init__(f"chain is reducible: {len(components)} components of sizes {sizes}")


class Model(str, enum.Enum):
    S0 = "s0"
    X0 = "x0"
    S = "s"
    X = "x"
    S_HAT = "s_hat"
    X_HAT = "x_hat"

    @property
    def complete(self) -> bool:
        return self in (Model.X0, Model.X, Model.X_HAT)

    @property
    def periodic(self) -> bool:
        return self in (Model.S_HAT, Model.X_HAT)

    @property
    def row_model(self) -> "Model":
        return {Model.X0: Model.S0, Model.X: Model.S, Model.X_HAT: Model.S_HAT}.get(self, self)


@dataclass(frozen=True)
class ChainSpec:
    model: Model
    n: int
    params: RateParams = field(default_factory=RateParams)
    k: int | None = None
    l: int | None = None
    m: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "model", Model(self.model))
        if self.n < 0:
            raise ChainError("n must be nonnegative")
        if self.model.periodic:
            if None in (self.k, self.l, self.m):
                raise ChainError("periodic chains need k, l and m")
            if self.k + self.l + self.m != self.n:
                raise ChainError(f"k + l + m = {self.k + self.l + self.m} but n = {self.n}")
            if self.n == 0:
                raise ChainError("a circle needs at least one cell")
            if self.model is Model.X_HAT and self.l == 0:
                raise ChainError("the complete circular chain needs l >= 1")
        if self.model in (Model.S0, Model.X0, Model.S_HAT, Model.X_HAT) and self.params.epsilon:
            raise ChainError(f"epsilon has no meaning for model {self.model.value}")
        if self.model in (Model.S, Model.X):
            self.params.check_three_species()

    @property
    def walls(self) -> int:
        return self.n if self.model.periodic else self.n + 1

    def with_model(self, model: Model) -> "ChainSpec":
        return ChainSpec(model, self.n, self.params, self.k, self.l, self.m)


State = Hashable


def state_key(state) -> str:
    return serialize(state) if isinstance(state, CompleteConfig) else str(state)


def states(spec: ChainSpec) -> list:
    """The state space in canonical (serialization) order."""
    n, model = spec.n, spec.model
    if model is Model.S0:
        out = ["".join(t) for t in itertools.product(B + W, repeat=n)]
    elif model is Model.S:
        out = ["".join(t) for t in itertools.product(B + W + X, repeat=n)]
    elif model is Model.S_HAT:
        out = sorted(
            {"".join(p) for p in itertools.permutations(B * spec.k + X * spec.l + W * spec.m)}
        )
    elif model is Model.X0:
        out = list(enumerate_space(Space("omega0", n)))
    elif model is Model.X:
        out = list(enumerate_space(Space("omega", n)))
    else:
        out = list(enumerate_space(Space("omega_hat", n, spec.k, spec.l, spec.m)))
    return sorted(out, key=state_key)


def space_size(spec: ChainSpec) -> int:
    n = spec.n
    if spec.model is Model.S0:
        return 2**n
    if spec.model is Model.S:
        return 3**n
    if spec.model is Model.S_HAT:
        return math.factorial(n) // (
            math.factorial(spec.k) * math.factorial(spec.l) * math.factorial(spec.m)
        )
    from .enumeration import count_closed

    kind = {Model.X0: "omega0", Model.X: "omega", Model.X_HAT: "omega_hat"}[spec.model]
    return count_closed(Space(kind, n, spec.k, spec.l, spec.m))


def validate_state(spec: ChainSpec, state) -> object:
    """Check that ``state`` belongs to the chain's space; returns it normalized."""
    model = spec.model
    if model.complete:
        if isinstance(state, str):
            state = parse(state if "@" in state else state + "@" + _boundary(model).value)
        if not isinstance(state, CompleteConfig):
            raise ChainError(f"expected a complete configuration, got {state!r}")
        if state.boundary is not _boundary(model):
            state = CompleteConfig(state.top, state.bottom, _boundary(model))
        check(state)
        if state.n != spec.n:
            raise ChainError(f"state has size {state.n}, chain has n = {spec.n}")
        if model is Model.X_HAT and state.counts() != (spec.k, spec.l, spec.m):
            raise ChainError(f"state has counts {state.counts()}, chain expects {(spec.k, spec.l, spec.m)}")
        return state
    if not isinstance(state, str):
        raise ChainError(f"expected a row, got {state!r}")
    allowed = set(B + W) if model is Model.S0 else set(B + W + X)
    if len(state) != spec.n or set(state) - allowed:
        raise ChainError(f"row {state!r} does not fit model {model.value} with n = {spec.n}")
    if model is Model.S_HAT and (state.count(B), state.count(X), state.count(W)) != (spec.k, spec.l, spec.m):
        raise ChainError(f"row {state!r} has the wrong particle counts")
    return state


def _boundary(model: Model) -> Boundary:
    return {Model.X0: Boundary.OPEN2, Model.X: Boundary.OPEN3, Model.X_HAT: Boundary.PERIODIC}[model]


# --------------------------------------------------------------------------
# moves


def split_rates(top: str, i: int, params: RateParams) -> tuple[Number, Number]:
    """Rates of the first and second three-species maps at wall ``i``."""
    n = len(top)
    lam = wall_rate(top, i, params)
    if 0 < i < n:
        return lam, 0 * lam
    if n and ((i == 0 and top[0] == X) or (i == n and top[-1] == X)):
        return 0 * lam, lam
    eps = params.epsilon
    return (1 - eps) * lam, eps * lam


def branches(spec: ChainSpec, state, i: int) -> list[tuple[Number, object]]:
    """Moves available at wall ``i``: ``(rate, image)`` pairs, zero rates dropped."""
    p = spec.params
    model = spec.model
    # the kernel is looked up at call time so that tests can swap rules in
    if model is Model.S0:
        out = [(wall_rate(state, i, p), kernel.theta(state, i))]
    elif model is Model.X0:
        out = [(wall_rate(state.top, i, p), kernel.bar_T(state, i).state)]
    elif model is Model.S:
        r1, r2 = split_rates(state, i, p)
        out = [(r1, kernel.theta3(state, i, 1)), (r2, kernel.theta3(state, i, 2))]
    elif model is Model.X:
        r1, r2 = split_rates(state.top, i, p)
        out = []
        if r1:
            out.append((r1, kernel.bar_T1(state, i).state))
        if r2:
            out.append((r2, kernel.bar_T2(state, i).state))
    elif model is Model.S_HAT:
        out = [(wall_rate(state, i, p, periodic=True), kernel.theta_periodic(state, i))]
    else:
        out = [(wall_rate(state.top, i, p, periodic=True), kernel.hat_T(state, i).state)]
    return [(r, s) for r, s in out if r]


# --------------------------------------------------------------------------
# transition matrix


@dataclass
class TransitionMatrix:
    states: list
    rows: list[dict[int, Number]]
    exact: bool

    def __len__(self) -> int:
        return len(self.states)

    def index(self) -> dict:
        return {s: a for a, s in enumerate(self.states)}

    def to_dense(self) -> np.ndarray:
        out = np.zeros((len(self), len(self)))
        for a, row in enumerate(self.rows):
            for b, v in row.items():
                out[a, b] = float(v)
        return out

    def to_sparse(self) -> csr_matrix:
        data, ri, ci = [], [], []
        for a, row in enumerate(self.rows):
            for b, v in row.items():
                ri.append(a)
                ci.append(b)
                data.append(float(v))
        return csr_matrix((data, (ri, ci)), shape=(len(self), len(self)))

    def column_sums(self) -> list[Number]:
        sums: list[Number] = [0] * len(self)
        for row in self.rows:
            for b, v in row.items():
                sums[b] += v
        return sums


def transition_matrix(spec: ChainSpec, *, exact: bool | None = None, cap: int = DEFAULT_CAP) -> TransitionMatrix:
    if exact is None:
        exact = spec.params.exact
    size = space_size(spec)
    if size > cap:
        raise ChainError(f"state space has {size} states, above the cap of {cap}")
    params = spec.params if exact else spec.params.as_float()
    if exact and not params.exact:
        raise ChainError("exact mode needs rational parameters")
    sp = ChainSpec(spec.model, spec.n, params, spec.k, spec.l, spec.m)
    sts = states(sp)
    idx = {s: a for a, s in enumerate(sts)}
    one = Fraction(1) if exact else 1.0
    pick = one / sp.walls
    rows: list[dict[int, Number]] = []
    for a, s in enumerate(sts):
        row: dict[int, Number] = {}
        stay = one
        for i in range(sp.walls):
            for rate, img in branches(sp, s, i):
                b = idx[img]
                row[b] = row.get(b, 0) + pick * rate
                stay -= pick * rate
        if stay:
            row[a] = row.get(a, 0) + stay
        rows.append({b: v for b, v in row.items() if v})
    return TransitionMatrix(sts, rows, exact)


# --------------------------------------------------------------------------
# distributions


@dataclass
class Distribution:
    support: list
    probabilities: list[Number]

    def __post_init__(self) -> None:
        if len(self.support) != len(self.probabilities):
            raise ChainError("support and probabilities differ in length")

    def as_dict(self) -> dict:
        return dict(zip(self.support, self.probabilities))

    def __getitem__(self, state) -> Number:
        return self.as_dict().get(state, 0)

    @property
    def exact(self) -> bool:
        return all(isinstance(p, Fraction) for p in self.probabilities)

    def total(self) -> Number:
        return sum(self.probabilities, Fraction(0) if self.exact else 0.0)

    def to_lines(self) -> list[str]:
        return [f"{state_key(s)} {format_probability(p)}" for s, p in zip(self.support, self.probabilities)]

    def to_json(self) -> str:
        return json.dumps(
            [{"state": state_key(s), "probability": format_probability(p)} for s, p in zip(self.support, self.probabilities)]
        )

    @classmethod
    def point_mass(cls, state) -> "Distribution":
        return cls([state], [Fraction(1)])


def format_probability(p: Number) -> str:
    if isinstance(p, Fraction):
        return f"{p.numerator}/{p.denominator}"
    return repr(float(p))


def tv_distance(d1: Distribution, d2: Distribution) -> Number:
    a, b = d1.as_dict(), d2.as_dict()
    total = sum(abs(a.get(s, 0) - b.get(s, 0)) for s in set(a) | set(b))
    return total / 2


def marginal_top(dist: Distribution) -> Distribution:
    """Push a distribution on complete configurations forward to top rows."""
    acc: dict[str, Number] = {}
    for s, p in zip(dist.support, dist.probabilities):
        top = s.top if isinstance(s, CompleteConfig) else s
        acc[top] = acc.get(top, 0) + p
    keys = sorted(acc)
    return Distribution(keys, [acc[k] for k in keys])


# --------------------------------------------------------------------------
# graph structure


@dataclass(frozen=True)
class Irreducibility:
    irreducible: bool
    components: list[list]

    def __bool__(self) -> bool:
        return self.irreducible


def _graph(tm: TransitionMatrix) -> csr_matrix:
    ri, ci = [], []
    for a, row in enumerate(tm.rows):
        for b in row:
            ri.append(a)
            ci.append(b)
    size = len(tm)
    return csr_matrix((np.ones(len(ri), dtype=np.int8), (ri, ci)), shape=(size, size))


def components_of(tm: TransitionMatrix) -> list[list]:
    count, labels = connected_components(_graph(tm), directed=True, connection="strong")
    groups: list[list] = [[] for _ in range(count)]
    for a, lab in enumerate(labels):
        groups[lab].append(tm.states[a])
    groups.sort(key=lambda g: state_key(g[0]))
    return groups


def check_irreducible(spec_or_matrix, *, cap: int = DEFAULT_CAP) -> Irreducibility:
    tm = spec_or_matrix if isinstance(spec_or_matrix, TransitionMatrix) else transition_matrix(spec_or_matrix, cap=cap)
    comps = components_of(tm)
    return Irreducibility(len(comps) == 1, comps)


def period(tm: TransitionMatrix) -> int:
    """Period of an irreducible chain (1 means aperiodic)."""
    level = {0: 0}
    frontier = [0]
    g = 0
    while frontier:
        nxt = []
        for a in frontier:
            for b in tm.rows[a]:
                if b not in level:
                    level[b] = level[a] + 1
                    nxt.append(b)
                else:
                    g = math.gcd(g, level[a] + 1 - level[b])
        frontier = nxt
    return abs(g) if g else 0


# --------------------------------------------------------------------------
# stationary distributions


def _solve_fraction_system(rows: list[dict[int, Fraction]], rhs: list[Fraction], size: int) -> list[Fraction]:
    """Sparse Gaussian elimination over the rationals.

    Pivots are chosen greedily: the variable of lowest column count, then its
    shortest remaining row, which keeps fill-in small on these chains.
    """
    rows = [dict(r) for r in rows]
    rhs = list(rhs)
    col_rows: dict[int, set[int]] = {}
    for r, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(r)
    active = set(range(len(rows)))
    pivots: list[tuple[int, int]] = []
    remaining = set(range(size))
    while remaining:
        c = min(remaining, key=lambda v: (len(col_rows.get(v, ())), v))
        cand = [r for r in col_rows.get(c, ()) if r in active]
        if not cand:
            raise ChainError("singular system")
        r = min(cand, key=lambda x: (len(rows[x]), x))
        prow = rows[r]
        pv = prow[c]
        for other in cand:
            if other == r:
                continue
            orow = rows[other]
            f = orow[c] / pv
            for cc, v in prow.items():
                nv = orow.get(cc, 0) - f * v
                if nv:
                    if cc not in orow:
                        col_rows.setdefault(cc, set()).add(other)
                    orow[cc] = nv
                elif cc in orow:
                    del orow[cc]
                    col_rows[cc].discard(other)
            rhs[other] -= f * rhs[r]
        active.discard(r)
        for cc in prow:
            col_rows[cc].discard(r)
        remaining.discard(c)
        pivots.append((r, c))
    x: list[Fraction] = [Fraction(0)] * size
    for r, c in reversed(pivots):
        row = rows[r]
        acc = rhs[r]
        for cc, v in row.items():
            if cc != c:
                acc -= v * x[cc]
        x[c] = acc / row[c]
    return x


def _balance_system(tm: TransitionMatrix) -> tuple[list[dict[int, Number]], int]:
    """Rows of ``pi (P - I) = 0`` indexed by target state."""
    size = len(tm)
    eqs: list[dict[int, Number]] = [dict() for _ in range(size)]
    for a, row in enumerate(tm.rows):
        for b, v in row.items():
            eqs[b][a] = eqs[b].get(a, 0) + v
    for a in range(size):
        eqs[a][a] = eqs[a].get(a, 0) - 1
        if not eqs[a][a]:
            del eqs[a][a]
    return eqs, size


def solve_elimination(tm: TransitionMatrix) -> list[Fraction]:
    """Exact solve: pin the first probability to one, drop its redundant equation, normalize."""
    eqs, size = _balance_system(tm)
    if size == 1:
        return [Fraction(1)]
    rows = []
    rhs = []
    for eq in eqs[1:]:
        rhs.append(-eq.get(0, Fraction(0)))
        rows.append({c - 1: v for c, v in eq.items() if c != 0})
    x = [Fraction(1)] + _solve_fraction_system(rows, rhs, size - 1)
    total = sum(x)
    return [v / total for v in x]


def solve_float(tm: TransitionMatrix) -> np.ndarray:
    size = len(tm)
    if size == 1:
        return np.ones(1)
    a = (tm.to_sparse().T - _identity(size)).tolil()
    a[0, :] = np.ones(size)
    b = np.zeros(size)
    b[0] = 1.0
    x = spsolve(a.tocsr(), b)
    return np.asarray(x, dtype=float)


def _identity(size: int) -> csr_matrix:
    return csr_matrix((np.ones(size), (np.arange(size), np.arange(size))), shape=(size, size))


def is_stationary(tm: TransitionMatrix, pi: Sequence[Number]) -> bool:
    """Exact test of ``pi P = pi`` and total mass one."""
    out: list[Number] = [0] * len(tm)
    for a, row in enumerate(tm.rows):
        pa = pi[a]
        if not pa:
            continue
        for b, v in row.items():
            out[b] += pa * v
    return sum(pi) == 1 and all(x == y for x, y in zip(out, pi))


def solve_certified(tm: TransitionMatrix, max_denominator: int = 10**9) -> list[Fraction] | None:
    """Rationalize a floating solve and keep it only if it is exactly stationary."""
    x = solve_float(tm)
    ref = x.max()
    if not np.isfinite(ref) or ref <= 0:
        return None
    ratios = [Fraction(float(v / ref)).limit_denominator(max_denominator) for v in x]
    total = sum(ratios)
    pi = [r / total for r in ratios]
    return pi if is_stationary(tm, pi) else None


def stationary_exact(
    spec: ChainSpec,
    *,
    exact: bool | None = None,
    method: str = "auto",
    cap: int = DEFAULT_CAP,
) -> Distribution:
    """Unique stationary distribution of an irreducible chain.

    Exact mode solves over the rationals.  ``method`` selects sparse
    elimination, a certified rational reconstruction of a floating solve
    (the exact stationarity test plus irreducibility makes the answer the
    unique one), or ``auto``, which eliminates on small spaces and tries the
    certified route first on larger ones.
    """
    tm = transition_matrix(spec, exact=exact, cap=cap)
    irr = check_irreducible(tm)
    if not irr:
        raise ReducibleChainError(irr.components)
    if not tm.exact:
        x = solve_float(tm)
        return Distribution(tm.states, [float(v) for v in x])
    if method not in ("auto", "elimination", "certified"):
        raise ChainError(f"unknown method {method!r}")
    pi = None
    if method == "certified" or (method == "auto" and len(tm) > ELIMINATION_LIMIT):
        pi = solve_certified(tm)
        if pi is None and method == "certified":
            raise ChainError("certified solve failed; use elimination")
    if pi is None:
        pi = solve_elimination(tm)
    return Distribution(tm.states, pi)


# --------------------------------------------------------------------------
# simulation


@dataclass
class StepRecord:
    wall: int
    branch: int  # index of the move that fired, -1 when nothing happened
    state: object


@dataclass
class SimulationResult:
    seed: int
    steps: int
    burn_in: int
    visits: dict
    final_state: object
    trajectory: list[StepRecord] | None = None

    def empirical(self) -> Distribution:
        total = sum(self.visits.values())
        keys = sorted(self.visits, key=state_key)
        return Distribution(keys, [Fraction(self.visits[k], total) for k in keys])

    def empirical_float(self) -> Distribution:
        total = sum(self.visits.values())
        keys = sorted(self.visits, key=state_key)
        return Distribution(keys, [self.visits[k] / total for k in keys])


CHUNK = 1 << 16


def make_rng(seed: int) -> np.random.Generator:
    """The one generator used for simulation: PCG64 seeded through a SeedSequence."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _draws(rng: np.random.Generator, walls: int, count: int) -> tuple[np.ndarray, np.ndarray]:
    return rng.integers(0, walls, size=count, dtype=np.int64), rng.random(count)


def default_burn_in(steps: int) -> int:
    return steps // 100


class _Table:
    """Precomputed moves of an enumerable chain as integer/float arrays."""

    def __init__(self, spec: ChainSpec):
        fp = spec.params.as_float()
        sp = ChainSpec(spec.model, spec.n, fp, spec.k, spec.l, spec.m)
        self.states = states(sp)
        idx = {s: a for a, s in enumerate(self.states)}
        nb = 2
        size, walls = len(self.states), sp.walls
        self.images = np.full((size, walls, nb), -1, dtype=np.int64)
        self.cum = np.zeros((size, walls, nb))
        for a, s in enumerate(self.states):
            for i in range(walls):
                acc = 0.0
                brs = _branches_with_slots(sp, s, i)
                for slot, (rate, img) in enumerate(brs):
                    acc += float(rate)
                    self.images[a, i, slot] = idx[img]
                    self.cum[a, i, slot] = acc
                for slot in range(len(brs), nb):
                    self.cum[a, i, slot] = acc
        self.index = idx


def _branches_with_slots(spec: ChainSpec, state, i: int) -> list[tuple[Number, object]]:
    """Like :func:`branches` but zero-rate moves keep their slot (identity image)."""
    p = spec.params
    model = spec.model
    if model is Model.S:
        r1, r2 = split_rates(state, i, p)
        return [(r1, kernel.theta3(state, i, 1)), (r2, kernel.theta3(state, i, 2))]
    if model is Model.X:
        r1, r2 = split_rates(state.top, i, p)
        return [(r1, kernel.bar_T1(state, i).state), (r2, kernel.bar_T2(state, i).state)]
    brs = branches(spec, state, i)
    return brs if brs else [(0.0, state)]


def _run_table(images, cum, start, steps, burn_in, walls, rng, counts, record):
    cur = start
    if burn_in == 0:
        counts[cur] += 1
    done = 0
    while done < steps:
        m = min(CHUNK, steps - done)
        ws, us = _draws(rng, walls, m)
        cur = _table_kernel(images, cum, cur, ws, us, done, burn_in, counts, record)
        done += m
    return cur


try:  # pragma: no cover - exercised implicitly when numba is present
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        def wrap(f):
            return f
        return wrap if not args or not callable(args[0]) else args[0]


@njit(cache=True)
def _table_kernel_nb(images, cum, cur, ws, us, offset, burn_in, counts):
    nb = images.shape[2]
    for t in range(ws.shape[0]):
        i = ws[t]
        u = us[t]
        for slot in range(nb):
            if u < cum[cur, i, slot]:
                cur = images[cur, i, slot]
                break
        if offset + t + 1 >= burn_in:
            counts[cur] += 1
    return cur


def _table_kernel(images, cum, cur, ws, us, offset, burn_in, counts, record):
    if record is None:
        return int(_table_kernel_nb(images, cum, cur, ws, us, offset, burn_in, counts))
    nb = images.shape[2]
    for t in range(ws.shape[0]):
        i = int(ws[t])
        u = us[t]
        fired = -1
        for slot in range(nb):
            if u < cum[cur, i, slot]:
                cur = int(images[cur, i, slot])
                fired = slot
                break
        if offset + t + 1 >= burn_in:
            counts[cur] += 1
        record.append((i, fired, cur))
    return cur


def _run_direct(spec, start, steps, burn_in, rng, record):
    fp = spec.params.as_float()
    sp = ChainSpec(spec.model, spec.n, fp, spec.k, spec.l, spec.m)
    visits: Counter = Counter()
    cur = start
    if burn_in == 0:
        visits[cur] += 1
    done = 0
    walls = sp.walls
    while done < steps:
        m = min(CHUNK, steps - done)
        ws, us = _draws(rng, walls, m)
        for t in range(m):
            i = int(ws[t])
            u = float(us[t])
            acc = 0.0
            fired = -1
            for slot, (rate, img) in enumerate(_branches_with_slots(sp, cur, i)):
                acc += float(rate)
                if u < acc:
                    cur = img
                    fired = slot
                    break
            if done + t + 1 >= burn_in:
                visits[cur] += 1
            if record is not None:
                record.append(StepRecord(i, fired, cur))
        done += m
    return cur, visits


def simulate(
    spec: ChainSpec,
    steps: int,
    seed: int,
    initial=None,
    *,
    burn_in: int | None = None,
    record: bool = False,
    table_limit: int = 20_000,
) -> SimulationResult:
    """Run the chain for ``steps`` steps.

    Visits are counted for the states at times ``burn_in..steps``; with zero
    steps the result is a point mass on the initial state.  Enumerable chains
    run on a precomputed move table, larger ones apply the maps directly; both
    consume the random stream identically.
    """
    if steps < 0:
        raise ChainError("steps must be nonnegative")
    if burn_in is None:
        burn_in = default_burn_in(steps)
    if not 0 <= burn_in <= steps:
        raise ChainError("burn-in must lie between 0 and the number of steps")
    start = validate_state(spec, initial if initial is not None else default_initial(spec))
    rng = make_rng(seed)
    size = space_size(spec)
    trajectory: list[StepRecord] | None = [] if record else None
    if size <= table_limit:
        table = _Table(spec)
        counts = np.zeros(len(table.states), dtype=np.int64)
        raw: list | None = [] if record else None
        final = _run_table(table.images, table.cum, table.index[start], steps, burn_in, spec.walls, rng, counts, raw)
        visits = {table.states[a]: int(c) for a, c in enumerate(counts) if c}
        if record:
            trajectory = [StepRecord(i, f, table.states[s]) for i, f, s in raw]
        return SimulationResult(seed, steps, burn_in, visits, table.states[final], trajectory)
    final, visits = _run_direct(spec, start, steps, burn_in, rng, trajectory)
    return SimulationResult(seed, steps, burn_in, dict(visits), final, trajectory)


def default_initial(spec: ChainSpec):
    """A canonical starting state: all black over all white, or the sorted circle."""
    n = spec.n
    if spec.model in (Model.S0, Model.S):
        return W * n
    if spec.model is Model.X0:
        return CompleteConfig(W * n, B * n, Boundary.OPEN2)
    if spec.model is Model.X:
        return CompleteConfig(W * n, B * n, Boundary.OPEN3)
    if spec.model is Model.S_HAT:
        return X * spec.l + W * spec.m + B * spec.k
    from .enumeration import sorted_periodic

    return sorted_periodic(spec.k, spec.l, spec.m)


# --------------------------------------------------------------------------
# fast two-species row simulation for large n


@njit(cache=True)
def _row_kernel(row, ws, us, alpha, beta, gamma, offset, burn_in, density):
    n = row.shape[0]
    for t in range(ws.shape[0]):
        i = ws[t]
        u = us[t]
        if i == 0:
            if n > 0 and row[0] == 0 and u < beta:
                row[0] = 1
        elif i == n:
            if row[n - 1] == 1 and u < gamma:
                row[n - 1] = 0
        elif row[i - 1] == 1 and row[i] == 0 and u < alpha:
            row[i - 1] = 0
            row[i] = 1
        if offset + t + 1 >= burn_in:
            for c in range(n):
                density[c] += row[c]


def simulate_row_density(
    n: int, steps: int, seed: int, params: RateParams | None = None, *, burn_in: int | None = None
) -> np.ndarray:
    """Time-averaged black density per cell of the two-species row chain, started empty."""
    params = params or RateParams()
    if burn_in is None:
        burn_in = default_burn_in(steps)
    if not 0 <= burn_in <= steps:
        raise ChainError("burn-in must lie between 0 and the number of steps")
    rng = make_rng(seed)
    row = np.zeros(n, dtype=np.int64)
    density = np.zeros(n)
    a, b, g = float(params.alpha), float(params.beta), float(params.gamma)
    done = 0
    while done < steps:
        m = min(CHUNK, steps - done)
        ws, us = _draws(rng, n + 1, m)
        _row_kernel(row, ws, us, a, b, g, done, burn_in, density)
        done += m
    samples = steps - max(burn_in, 1) + 1 + (burn_in == 0)
    return density / samples


__all__ = [
    "ChainError",
    "ChainSpec",
    "Distribution",
    "Irreducibility",
    "Model",
    "ReducibleChainError",
    "SimulationResult",
    "StepRecord",
    "TransitionMatrix",
    "branches",
    "check_irreducible",
    "components_of",
    "default_initial",
    "format_probability",
    "is_stationary",
    "make_rng",
    "marginal_top",
    "period",
    "simulate",
    "simulate_row_density",
    "solve_elimination",
    "solve_float",
    "space_size",
    "split_rates",
    "state_key",
    "states",
    "stationary_exact",
    "transition_matrix",
    "tv_distance",
    "validate_state",
]
