"""State-space generation, closed-form counts and the counting bijections.

Generation fixes the top row first (in lexicographic order) and then
combines, segment by segment, the admissible bottom rows of each neutral-free
stretch.  Because the text form is ``TOP/BOTTOM@boundary`` and rows have equal
length, this yields configurations in the lexicographic order of their
serialization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .config import B, W, X, Boundary, CompleteConfig, ConfigError, excess


class SpaceError(ValueError):
    pass


KINDS = ("omega0", "omega", "omega_hat")


@dataclass(frozen=True)
class Space:
    """A state space.

    ``omega0``: open two-species configurations, optionally with ``k``
    black and ``m`` white top particles.  ``omega``: open configurations with
    neutral columns, optionally with fixed ``l`` and/or ``(k, l, m)``.
    ``omega_hat``: circular configurations with ``(k, l, m)`` fixed.
    """

    kind: str
    n: int
    k: int | None = None
    l: int | None = None
    m: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise SpaceError(f"unknown space {self.kind!r}; expected one of {KINDS}")
        if self.n < 0:
            raise SpaceError("n must be nonnegative")
        for name in ("k", "l", "m"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise SpaceError(f"{name} must be nonnegative")
        k, l, m = self.k, self.l, self.m
        if self.kind == "omega0":
            if l not in (None, 0):
                raise SpaceError("omega0 carries no neutral columns")
            if (k is None) != (m is None):
                raise SpaceError("omega0 needs both k and m or neither")
            if k is not None and k + m != self.n:
                raise SpaceError(f"k + m = {k + m} but n = {self.n}")
        elif self.kind == "omega":
            if (k is None) != (m is None) or (k is not None and l is None):
                raise SpaceError("omega takes l alone, or all of k, l, m")
            if l is not None and l > self.n:
                raise SpaceError("l exceeds n")
            if k is not None and k + l + m != self.n:
                raise SpaceError(f"k + l + m = {k + l + m} but n = {self.n}")
        else:
            if None in (k, l, m):
                raise SpaceError("omega_hat needs k, l and m")
            if k + l + m != self.n:
                raise SpaceError(f"k + l + m = {k + l + m} but n = {self.n}")

    @property
    def boundary(self) -> Boundary:
        return {
            "omega0": Boundary.OPEN2,
            "omega": Boundary.OPEN3,
            "omega_hat": Boundary.PERIODIC,
        }[self.kind]

    def __str__(self) -> str:
        extra = ",".join(
            f"{name}={getattr(self, name)}" for name in ("k", "l", "m") if getattr(self, name) is not None
        )
        return f"{self.kind}(n={self.n}{',' + extra if extra else ''})"


def omega0(n: int, k: int | None = None, m: int | None = None) -> Space:
    return Space("omega0", n, k, None if k is None else 0, m)


def omega(n: int, l: int | None = None, k: int | None = None, m: int | None = None) -> Space:
    return Space("omega", n, k, l, m)


def omega_hat(n: int, k: int, l: int, m: int) -> Space:
    return Space("omega_hat", n, k, l, m)


# --------------------------------------------------------------------------
# generation


@lru_cache(maxsize=None)
def segment_bottoms(top: str) -> tuple[str, ...]:
    """All bottom rows that make ``top`` (neutral-free) a balanced positive stretch."""
    n = len(top)
    out: list[str] = []
    buf: list[str] = []

    def rec(p: int, e: int) -> None:
        if e < 0 or e > 2 * (n - p):
            return
        if p == n:
            if e == 0:
                out.append("".join(buf))
            return
        base = e + (1 if top[p] == B else -1)
        for d, step in ((B, 1), (W, -1)):
            buf.append(d)
            rec(p + 1, base + step)
            buf.pop()

    rec(0, 0)
    return tuple(out)


def _tops(n: int, counts: tuple[int, int, int] | None, alphabet: str) -> Iterator[str]:
    if counts is None:
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)
        return
    need = dict(zip((B, X, W), counts))
    buf: list[str] = []

    def rec(p: int) -> Iterator[str]:
        if p == n:
            yield "".join(buf)
            return
        for s in alphabet:
            if need[s]:
                need[s] -= 1
                buf.append(s)
                yield from rec(p + 1)
                buf.pop()
                need[s] += 1

    yield from rec(0)


def _open_bottoms(top: str) -> list[str]:
    parts = top.split(X)
    choices = [segment_bottoms(p) for p in parts]
    if any(not c for c in choices):
        return []
    return [X.join(combo) for combo in itertools.product(*choices)]


def _periodic_bottoms(top: str) -> list[str]:
    n = len(top)
    xs = [c for c, t in enumerate(top) if t == X]
    if not xs:
        return list(segment_bottoms(top))
    arcs = []
    for a, x in enumerate(xs):
        nxt = xs[(a + 1) % len(xs)]
        span = (nxt - x - 1) % n if len(xs) > 1 else n - 1
        arcs.append([(x + 1 + t) % n for t in range(span)])
    choices = [segment_bottoms("".join(top[c] for c in arc)) for arc in arcs]
    if any(not c for c in choices):
        return []
    out = []
    for combo in itertools.product(*choices):
        cells = [X] * n
        for arc, bot in zip(arcs, combo):
            for c, d in zip(arc, bot):
                cells[c] = d
        out.append("".join(cells))
    out.sort()
    return out


def enumerate_space(space: Space) -> Iterator[CompleteConfig]:
    """Every configuration of ``space`` exactly once, in serialization order."""
    n = space.n
    bnd = space.boundary
    if space.kind == "omega0":
        counts = None if space.k is None else (space.k, 0, space.m)
        alphabet = B + W
    elif space.kind == "omega":
        counts = None if space.k is None else (space.k, space.l, space.m)
        alphabet = B + W + X
    else:
        counts = (space.k, space.l, space.m)
        alphabet = B + W + X
    fixed_l = space.l if space.kind == "omega" and space.k is None else None
    for top in _tops(n, counts, alphabet):
        if fixed_l is not None and top.count(X) != fixed_l:
            continue
        bottoms = _periodic_bottoms(top) if bnd is Boundary.PERIODIC else _open_bottoms(top)
        for bot in bottoms:
            yield CompleteConfig(top, bot, bnd)


def count_enumerated(space: Space) -> int:
    return sum(1 for _ in enumerate_space(space))


# --------------------------------------------------------------------------
# closed forms


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def narayana_count(n: int, k: int, m: int) -> int:
    """Open two-species configurations with ``k`` black and ``m`` white top particles."""
    return comb(n + 1, k) * comb(n + 1, m) // (n + 1)


def count_closed(space: Space) -> int:
    n, k, l, m = space.n, space.k, space.l, space.m
    if space.kind == "omega0":
        if k is None:
            return catalan(n + 1)
        return narayana_count(n, k, m)
    if space.kind == "omega":
        if l is None:
            return comb(2 * n + 2, n + 1) // 2
        if k is None:
            return (l + 1) * comb(2 * n + 2, n - l) // (n + 1)
        return (l + 1) * comb(n + 1, k) * comb(n + 1, m) // (n + 1)
    if l == 0:
        # a neutral-free circle is read as an open row from wall 0
        return narayana_count(n, k, m)
    return comb(n, k) * comb(n, m)


# --------------------------------------------------------------------------
# unconstrained pairs


def gamma_pairs(size: int) -> Iterator[tuple[str, str]]:
    """Rows of length ``size`` with ``size`` black and ``size`` white particles in total."""
    for cells in itertools.combinations(range(2 * size), size):
        chosen = set(cells)
        both = "".join(B if p in chosen else W for p in range(2 * size))
        yield both[:size], both[size:]


def gamma_bar_pairs(size: int) -> Iterator[tuple[str, str]]:
    """The half of :func:`gamma_pairs` whose top row ends with a black particle."""
    for top, bot in gamma_pairs(size):
        if size and top[-1] == B:
            yield top, bot


def delta_pairs(length: int, k: int, m: int) -> Iterator[tuple[str, str]]:
    """Rows of ``length`` cells: ``k`` black on top, ``m`` black below, white elsewhere."""
    def rows(b: int) -> list[str]:
        return [
            "".join(B if p in set(c) else W for p in range(length))
            for c in itertools.combinations(range(length), b)
        ]

    for top in rows(k):
        for bot in rows(m):
            yield top, bot


# --------------------------------------------------------------------------
# phi / psi


def phi_gamma(cfg: CompleteConfig) -> tuple[str, str]:
    """Open configuration of size ``n`` to a pair of ``n+1``-cell rows with top ending black."""
    if cfg.boundary is Boundary.PERIODIC:
        raise SpaceError("phi_gamma acts on open configurations")
    top, bot = cfg.top, cfg.bottom
    if cfg.ell % 2 == 0:
        top, bot = top + B, bot + W
    else:
        top, bot = top + X, bot + X
    xs = [c for c, t in enumerate(top) if t == X]
    half = len(xs) // 2
    t, b = list(top), list(bot)
    for r, c in enumerate(xs):
        t[c] = b[c] = W if r < half else B
    return "".join(t), "".join(b)


def psi_gamma(top: str, bottom: str) -> CompleteConfig:
    if len(top) != len(bottom) or not top:
        raise SpaceError("psi_gamma needs two nonempty rows of equal length")
    if top[-1] != B:
        raise SpaceError("psi_gamma needs a top row ending with a black particle")
    e = excess(top, bottom)
    d = min(e)
    t, b = list(top), list(bottom)
    for i in range(1, -d // 2 + 1):
        j = min(p for p, v in enumerate(e) if v == -2 * i)
        jp = max(p for p in range(1, len(e)) if e[p - 1] == -2 * i)
        for c in (j - 1, jp - 1):
            t[c] = b[c] = X
    last = t[-1] + b[-1]
    if last not in ("BW", "XX"):
        raise SpaceError(f"pair {top}/{bottom} is not an image of phi_gamma")
    bnd = Boundary.OPEN3 if X in t[:-1] else Boundary.OPEN2
    return CompleteConfig("".join(t[:-1]), "".join(b[:-1]), bnd)


# --------------------------------------------------------------------------
# cycle lemma map


def marked_walls(top: str, bottom: str, count: int) -> list[int]:
    """First walls where the excess reaches ``d, d+2, ..., d+2(count-1)`` (``d`` the minimum)."""
    e = excess(top, bottom)
    d = min(e)
    return [min(p for p, v in enumerate(e) if v == d + 2 * i) for i in range(count)]


def _first_hits(top: str, bottom: str, levels: list[int]) -> list[int]:
    e = excess(top, bottom)
    return [min(p for p, v in enumerate(e) if v == lv) - 1 for lv in levels]


def cycle_lemma_map(top: str, bottom: str, j: int) -> tuple[CompleteConfig, int]:
    """Marked pair of ``n+1``-cell rows to a configuration of size ``n`` and a wall."""
    size = len(top)
    e = excess(top, bottom)
    final = e[-1]
    if final > -2 or final % 2:
        raise SpaceError("pair has the wrong particle counts for the cycle lemma map")
    ell = -final // 2 - 1
    if j not in marked_walls(top, bottom, ell + 1):
        raise SpaceError(f"wall {j} is not a marked wall")
    t, b = top[j:] + top[:j], bottom[j:] + bottom[:j]
    cols = _first_hits(t, b, [-2 * (r + 1) for r in range(ell + 1)])
    tl, bl = list(t), list(b)
    for c in cols:
        tl[c] = bl[c] = X
    if tl[-1] != X:
        raise SpaceError("conjugate does not end with a neutral column")
    bnd = Boundary.OPEN3 if ell else Boundary.OPEN2
    return CompleteConfig("".join(tl[:-1]), "".join(bl[:-1]), bnd), size - j


def cycle_lemma_inverse(cfg: CompleteConfig, i: int) -> tuple[str, str, int]:
    size = cfg.n + 1
    if not 0 <= i < size:
        raise SpaceError(f"wall {i} out of range 0..{size - 1}")
    t = (cfg.top + X).replace(X, W)
    b = (cfg.bottom + X).replace(X, W)
    return t[i:] + t[:i], b[i:] + b[:i], size - i


def marked_delta_pairs(n: int, k: int, l: int, m: int) -> Iterator[tuple[str, str, int]]:
    for top, bot in delta_pairs(n + 1, k, m):
        for j in marked_walls(top, bot, l + 1):
            yield top, bot, j


# --------------------------------------------------------------------------
# periodic map


def periodic_map(top: str, bottom: str) -> CompleteConfig:
    n = len(top)
    e = excess(top, bottom)
    if e[-1] >= 0 or e[-1] % 2:
        raise SpaceError("periodic_map needs at least one neutral column's worth of white excess")
    ell = -e[-1] // 2
    cols = [w - 1 for w in marked_walls(top, bottom, ell)]
    t, b = list(top), list(bottom)
    for c in cols:
        t[c] = b[c] = X
    return CompleteConfig("".join(t), "".join(b), Boundary.PERIODIC)


def periodic_inverse(cfg: CompleteConfig) -> tuple[str, str]:
    if cfg.boundary is not Boundary.PERIODIC or cfg.ell == 0:
        raise SpaceError("periodic_inverse needs a circular configuration with a neutral column")
    return cfg.top.replace(X, W), cfg.bottom.replace(X, W)


def sorted_periodic(k: int, l: int, m: int) -> CompleteConfig:
    """The circle whose top row reads ``X^l W^m B^k`` with its unique bottom."""
    top = X * l + W * m + B * k
    bots = _periodic_bottoms(top)
    if len(bots) != 1:
        raise ConfigError(f"expected a unique bottom for {top}, found {len(bots)}")
    return CompleteConfig(top, bots[0], Boundary.PERIODIC)


__all__ = [
    "KINDS",
    "Space",
    "SpaceError",
    "catalan",
    "count_closed",
    "count_enumerated",
    "cycle_lemma_inverse",
    "cycle_lemma_map",
    "delta_pairs",
    "enumerate_space",
    "gamma_bar_pairs",
    "gamma_pairs",
    "marked_delta_pairs",
    "marked_walls",
    "narayana_count",
    "omega",
    "omega0",
    "omega_hat",
    "periodic_inverse",
    "periodic_map",
    "phi_gamma",
    "psi_gamma",
    "segment_bottoms",
    "sorted_periodic",
]
