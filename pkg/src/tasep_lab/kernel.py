"""Transition maps on rows and on complete configurations.

Row maps (``theta``, ``theta3``) are the visible TASEP moves.  The complete
chain moves come in two independent formulations for the two-species open
case: ``bar_T`` moves columns and diagonals around (insert/delete form) and
``T_sweep`` performs bottom-row sweeps.  They must agree on every pair.

The insert/delete maps are written once for open boundaries with or without
neutral columns (``bar_T1``) and once for the circle (``hat_T``).  Both are
phrased as a cyclic shift of one index range per row: deleting a particle at
one end of the range and inserting another at the other end.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .config import B, W, X, Boundary, CompleteConfig, ConfigError, check


class KernelError(ValueError):
    pass


class TransitionOutcome(NamedTuple):
    state: CompleteConfig
    exit_wall: int


class ClassTag(str, enum.Enum):
    A_PRIME = "a'"
    A_SECOND = "a''"
    B_PRIME = "b'"
    B_SECOND = "b''"
    C_PRIME = "c'"
    C_SECOND = "c''"
    D = "d"

    @property
    def two_species_name(self) -> str:
        return {"b'": "b", "c'": "c"}.get(self.value, self.value)


@dataclass(frozen=True)
class Classification:
    tag: ClassTag
    j1: int | None = None
    j2: int | None = None


# --------------------------------------------------------------------------
# row maps


def _check_wall(n: int, i: int) -> None:
    if not 0 <= i <= n:
        raise KernelError(f"wall {i} out of range 0..{n}")


def theta(row: str, i: int) -> str:
    """Two-species TASEP move at wall ``i``."""
    if X in row:
        raise KernelError("theta acts on two-species rows")
    n = len(row)
    _check_wall(n, i)
    if 0 < i < n and row[i - 1] == B and row[i] == W:
        return row[: i - 1] + W + B + row[i + 1 :]
    if i == 0 and n and row[0] == W:
        return B + row[1:]
    if i == n and n and row[-1] == B:
        return row[:-1] + W
    return row


_INTERIOR3 = {"BW": "WB", "XW": "WX", "BX": "XB"}


def theta3(row: str, i: int, variant: int) -> str:
    """Three-species move; variant 2 neutralizes exiting particles."""
    if variant not in (1, 2):
        raise KernelError("variant must be 1 or 2")
    n = len(row)
    _check_wall(n, i)
    if 0 < i < n:
        pair = row[i - 1 : i + 1]
        if pair in _INTERIOR3:
            return row[: i - 1] + _INTERIOR3[pair] + row[i + 1 :]
        return row
    if n == 0:
        return row
    if i == 0:
        if row[0] == W:
            return (B if variant == 1 else X) + row[1:]
        if row[0] == X:
            return B + row[1:]
        return row
    if row[-1] == B:
        return row[:-1] + (W if variant == 1 else X)
    if row[-1] == X:
        return row[:-1] + W
    return row


def theta_periodic(row: str, i: int) -> str:
    """Move at wall ``i`` of a circular row (wall 0 joins the last and first cells)."""
    n = len(row)
    if not 0 <= i < max(n, 1):
        raise KernelError(f"wall {i} out of range 0..{n - 1}")
    if n < 2:
        return row
    a, b = (i - 1) % n, i
    pair = row[a] + row[b]
    if pair not in _INTERIOR3:
        return row
    cells = list(row)
    cells[a], cells[b] = _INTERIOR3[pair]
    return "".join(cells)


# --------------------------------------------------------------------------
# range shifts


def _shift_right(cells: list[str], start: int, length: int, value: str) -> None:
    """Drop the last cell of the range, insert ``value`` at its start."""
    n = len(cells)
    idx = [(start + t) % n for t in range(length)]
    vals = [value] + [cells[p] for p in idx[:-1]]
    for p, v in zip(idx, vals):
        cells[p] = v


def _shift_left(cells: list[str], start: int, length: int, value: str) -> None:
    """Drop the first cell of the range, insert ``value`` at its end."""
    n = len(cells)
    idx = [(start + t) % n for t in range(length)]
    vals = [cells[p] for p in idx[1:]] + [value]
    for p, v in zip(idx, vals):
        cells[p] = v


def _run(row: str, start: int, step: int, colour: str, limit: int, wrap: bool) -> int:
    """Length of the run of ``colour`` starting at ``start`` and moving by ``step``."""
    n = len(row)
    count = 0
    p = start
    while count < limit:
        if wrap:
            p %= n
        elif not 0 <= p < n:
            break
        if row[p] != colour:
            break
        count += 1
        p += step
    return count


def _rebuild(cfg: CompleteConfig, top: list[str], bot: list[str]) -> CompleteConfig:
    return CompleteConfig("".join(top), "".join(bot), cfg.boundary)


# --------------------------------------------------------------------------
# classification


def classify(cfg: CompleteConfig, i: int) -> Classification:
    """Class of the pair ``(cfg, i)`` together with the distinguished walls."""
    if cfg.boundary is Boundary.PERIODIC:
        raise KernelError("use classify_periodic for circular configurations")
    n = cfg.n
    _check_wall(n, i)
    top, bot = cfg.top, cfg.bottom
    left = top[i - 1] if i > 0 else None
    right = top[i] if i < n else None

    def j1() -> int:
        return i - 1 - _run(top, i - 2, -1, W, n, wrap=False)

    def j2() -> int:
        return i + 1 + _run(top, i + 1, 1, B, n, wrap=False)

    if 0 < i < n:
        if right == W and left == X:
            return Classification(ClassTag.A_PRIME, j1=j1())
        if right == W and left == B:
            if bot[i] == B:
                return Classification(ClassTag.A_PRIME, j1=j1(), j2=j2())
            return Classification(ClassTag.A_SECOND, j1=j1(), j2=j2())
        if right == X and left == B:
            return Classification(ClassTag.A_SECOND, j2=j2())
        return Classification(ClassTag.D)
    if n == 0:
        return Classification(ClassTag.D)
    if i == 0:
        if right == W:
            return Classification(ClassTag.B_PRIME, j2=j2())
        if right == X:
            return Classification(ClassTag.B_SECOND, j2=j2())
        return Classification(ClassTag.D)
    if left == B:
        return Classification(ClassTag.C_PRIME, j1=j1())
    if left == X:
        return Classification(ClassTag.C_SECOND, j1=j1())
    return Classification(ClassTag.D)


# --------------------------------------------------------------------------
# open insert/delete maps


def _move_left(cfg: CompleteConfig, i: int, j1: int, col: str) -> CompleteConfig:
    """Delete column ``i`` (or the last one) and put ``col`` right of wall ``j1``."""
    top, bot = list(cfg.top), list(cfg.bottom)
    length = i - j1 + 1
    _shift_right(top, j1, length, col[0])
    _shift_right(bot, j1, length, col[1])
    return _rebuild(cfg, top, bot)


def _move_right(cfg: CompleteConfig, top_start: int, bot_start: int, j2: int) -> CompleteConfig:
    """Delete one top and one bottom particle and reinsert a black/white pair at wall ``j2``.

    The pair lands as a diagonal (black left of the wall on top, white right
    of it below) when a white top cell follows the wall, else as a column.
    """
    n = cfg.n
    top, bot = list(cfg.top), list(cfg.bottom)
    diagonal = j2 < n and cfg.top[j2] == W
    bot_end = j2 if diagonal else j2 - 1
    _shift_left(top, top_start, j2 - top_start, B)
    _shift_left(bot, bot_start, bot_end - bot_start + 1, W)
    return _rebuild(cfg, top, bot)


def bar_T1(cfg: CompleteConfig, i: int) -> TransitionOutcome:
    """Insert/delete bijection on open configurations, neutral columns allowed."""
    n = cfg.n
    cls = classify(cfg, i)
    tag = cls.tag
    if tag is ClassTag.A_PRIME:
        return TransitionOutcome(_move_left(cfg, i, cls.j1, cfg.column(i)), cls.j1)
    if tag is ClassTag.A_SECOND:
        bot_start = i if cfg.top[i] == W else i - 1
        return TransitionOutcome(_move_right(cfg, i - 1, bot_start, cls.j2), cls.j2)
    if tag is ClassTag.B_PRIME:
        return TransitionOutcome(_move_right(cfg, 0, 0, cls.j2), cls.j2)
    if tag is ClassTag.C_PRIME:
        return TransitionOutcome(_move_left(cfg, n - 1, cls.j1, W + B), cls.j1)
    return TransitionOutcome(cfg, i)


def bar_T1_inv(cfg: CompleteConfig, j: int) -> TransitionOutcome:
    n = cfg.n
    _check_wall(n, j)
    top, bot = cfg.top, cfg.bottom
    if n == 0:
        return TransitionOutcome(cfg, j)
    # images of column moves to the left: a |W/B| column right after the wall
    if j < n and top[j] == W and bot[j] == B and (j == 0 or top[j - 1] in (B, X)):
        c = _run(top, j, 1, W, n, wrap=False)
        t, b = list(top), list(bot)
        if j + c == n:
            _shift_left(t, j, n - j, B)
            _shift_left(b, j, n - j, W)
            return TransitionOutcome(_rebuild(cfg, t, b), n)
        i = j + c
        _shift_left(t, j, i - j + 1, W)
        _shift_left(b, j, i - j + 1, B)
        return TransitionOutcome(_rebuild(cfg, t, b), i)
    # images of pair moves to the right
    if j > 0 and top[j - 1] == B and (j == n or top[j] + bot[j] in ("WW", "XX")):
        c = _run(top, j - 1, -1, B, n, wrap=False)
        s0 = j - c
        diagonal = j < n and top[j] == W
        bot_end = j if diagonal else j - 1
        t, b = list(top), list(bot)
        if s0 == 0:
            _shift_right(t, 0, j, W)
            _shift_right(b, 0, bot_end + 1, B)
            return TransitionOutcome(_rebuild(cfg, t, b), 0)
        i = s0
        r = i if top[i - 1] == W else i - 1
        _shift_right(t, i - 1, j - i + 1, B)
        _shift_right(b, r, bot_end - r + 1, W)
        return TransitionOutcome(_rebuild(cfg, t, b), i)
    return TransitionOutcome(cfg, j)


def Y(cfg: CompleteConfig, i: int) -> TransitionOutcome:
    """Border involution swapping a ``W/B`` (left) or ``B/W`` (right) column with ``X/X``."""
    if cfg.boundary is Boundary.PERIODIC:
        raise KernelError("Y acts on open configurations")
    n = cfg.n
    _check_wall(n, i)
    if n == 0 or 0 < i < n:
        return TransitionOutcome(cfg, i)
    c = 0 if i == 0 else n - 1
    col = cfg.column(c)
    swap = {"WB": "XX", "XX": "WB"} if i == 0 else {"BW": "XX", "XX": "BW"}
    if col not in swap:
        return TransitionOutcome(cfg, i)
    new = swap[col]
    top = cfg.top[:c] + new[0] + cfg.top[c + 1 :]
    bot = cfg.bottom[:c] + new[1] + cfg.bottom[c + 1 :]
    return TransitionOutcome(CompleteConfig(top, bot, Boundary.OPEN3), i)


def bar_T2(cfg: CompleteConfig, i: int) -> TransitionOutcome:
    return bar_T1(*Y(cfg, i))


def bar_T2_inv(cfg: CompleteConfig, j: int) -> TransitionOutcome:
    return Y(*bar_T1_inv(cfg, j))


def _require_open2(cfg: CompleteConfig) -> None:
    if cfg.boundary is not Boundary.OPEN2:
        raise KernelError("bar_T acts on open two-species configurations")


def bar_T(cfg: CompleteConfig, i: int) -> TransitionOutcome:
    """Two-species bijection on configurations times walls."""
    _require_open2(cfg)
    return bar_T1(cfg, i)


def bar_T_inv(cfg: CompleteConfig, j: int) -> TransitionOutcome:
    _require_open2(cfg)
    return bar_T1_inv(cfg, j)


# --------------------------------------------------------------------------
# sweeps


def _white_sweep(bot: list[str], lo: int, hi: int) -> None:
    """Bottom cells ``lo..hi-1`` move one step right, a black particle enters at ``lo``."""
    bot[lo : hi + 1] = [B] + bot[lo:hi]


def _black_sweep(bot: list[str], lo: int, hi: int) -> None:
    """Bottom cells ``lo+1..hi`` move one step left, a white particle enters at ``hi``."""
    bot[lo : hi + 1] = bot[lo + 1 : hi + 1] + [W]


def T_sweep(cfg: CompleteConfig, i: int) -> CompleteConfig:
    """Sweep formulation of the two-species complete chain move."""
    _require_open2(cfg)
    n = cfg.n
    _check_wall(n, i)
    top, bot = cfg.top, list(cfg.bottom)
    new_top = theta(top, i)
    if new_top == top:
        return cfg
    j1 = i - 1
    while j1 - 1 >= 0 and top[j1 - 1] == W:
        j1 -= 1
    j2 = i + 1
    while j2 < n and top[j2] == B:
        j2 += 1
    if 0 < i < n:
        if bot[i] == B:
            _white_sweep(bot, j1, i)
        else:
            _black_sweep(bot, i, min(j2, n - 1))
    elif i == 0:
        bot[0] = W  # the border column swaps its particles first
        _black_sweep(bot, 0, min(j2, n - 1))
    else:
        bot[n - 1] = B
        _white_sweep(bot, j1, n - 1)
    return CompleteConfig(new_top, "".join(bot), cfg.boundary)


# --------------------------------------------------------------------------
# periodic map


def classify_periodic(cfg: CompleteConfig, i: int) -> Classification:
    n = cfg.n
    if not 0 <= i < n:
        raise KernelError(f"wall {i} out of range 0..{n - 1}")
    top, bot = cfg.top, cfg.bottom
    p, q = top[(i - 1) % n], top[i]
    if n >= 2 and q == W and (p == X or (p == B and bot[i] == B)):
        L = _run(top, i - 2, -1, W, n - 2, wrap=True)
        return Classification(ClassTag.A_PRIME, j1=(i - 1 - L) % n)
    if n >= 2 and p == B and (q == X or (q == W and bot[i] == W)):
        L = _run(top, i + 1, 1, B, n - 2, wrap=True)
        return Classification(ClassTag.A_SECOND, j2=(i + 1 + L) % n)
    return Classification(ClassTag.D)


def hat_T(cfg: CompleteConfig, i: int) -> TransitionOutcome:
    """Bijection on circular configurations with at least one neutral column."""
    if cfg.boundary is not Boundary.PERIODIC:
        raise KernelError("hat_T acts on periodic configurations")
    if cfg.ell == 0:
        raise KernelError("hat_T needs at least one neutral column")
    n = cfg.n
    top, bot = list(cfg.top), list(cfg.bottom)
    tag = classify_periodic(cfg, i).tag
    if tag is ClassTag.A_PRIME:
        L = _run(cfg.top, i - 2, -1, W, n - 2, wrap=True)
        j1 = i - 1 - L
        _shift_right(top, j1, L + 2, cfg.top[i])
        _shift_right(bot, j1, L + 2, cfg.bottom[i])
        return TransitionOutcome(_rebuild(cfg, top, bot), j1 % n)
    if tag is ClassTag.A_SECOND:
        L = _run(cfg.top, i + 1, 1, B, n - 2, wrap=True)
        j2 = i + 1 + L
        nxt = i if L == n - 2 else j2 % n
        diagonal = cfg.top[nxt] == W
        r = i if cfg.top[i] == W else i - 1
        s = j2 if diagonal else j2 - 1
        _shift_left(top, i - 1, L + 2, B)
        _shift_left(bot, r, s - r + 1, W)
        return TransitionOutcome(_rebuild(cfg, top, bot), j2 % n)
    return TransitionOutcome(cfg, i)


def hat_T_inv(cfg: CompleteConfig, j: int) -> TransitionOutcome:
    if cfg.boundary is not Boundary.PERIODIC or cfg.ell == 0:
        raise KernelError("hat_T_inv acts on periodic configurations with a neutral column")
    n = cfg.n
    if not 0 <= j < n:
        raise KernelError(f"wall {j} out of range 0..{n - 1}")
    top, bot = cfg.top, cfg.bottom
    left = top[(j - 1) % n]
    if n < 2:
        return TransitionOutcome(cfg, j)
    if top[j] + bot[j] == "WB" and left in (B, X):
        c = _run(top, j, 1, W, n - 1, wrap=True)
        t, b = list(top), list(bot)
        _shift_left(t, j, c + 1, W)
        _shift_left(b, j, c + 1, B)
        return TransitionOutcome(_rebuild(cfg, t, b), (j + c) % n)
    if left == B and top[j] + bot[j] in ("WW", "XX"):
        c = _run(top, j - 1, -1, B, n - 1, wrap=True)
        i = j - c
        r = i if top[(i - 1) % n] == W else i - 1
        diagonal = top[j] == W
        s = j if diagonal else j - 1
        t, b = list(top), list(bot)
        _shift_right(t, i - 1, c + 1, B)
        _shift_right(b, r, s - r + 1, W)
        return TransitionOutcome(_rebuild(cfg, t, b), i % n)
    return TransitionOutcome(cfg, j)


# --------------------------------------------------------------------------
# reduced configurations and orbits


def reduce(cfg: CompleteConfig, i: int) -> CompleteConfig:
    """Remove the two particles that make wall ``i`` unstable (size drops by one)."""
    if cfg.boundary is Boundary.PERIODIC:
        raise KernelError("reduce acts on open configurations")
    n = cfg.n
    _check_wall(n, i)
    top, bot = cfg.top, cfg.bottom
    right = top[i] + bot[i] if i < n else None
    left = top[i - 1] + bot[i - 1] if i > 0 else None

    def drop_column(c: int) -> CompleteConfig:
        return cfg.with_rows(top[:c] + top[c + 1 :], bot[:c] + bot[c + 1 :])

    if right == "WB" and (left is None or left[0] in (B, X)):
        return drop_column(i)
    if right == "WW" and left is not None and left[0] == B:
        return cfg.with_rows(top[: i - 1] + top[i:], bot[:i] + bot[i + 1 :])
    if left == "BW" and (right is None or right == "XX"):
        return drop_column(i - 1)
    if (i == 0 and right == "XX") or (i == n and left == "XX"):
        return drop_column(0 if i == 0 else n - 1)
    raise KernelError(f"no reduced configuration: wall {i} of {cfg} is stable")


def is_stable(cfg: CompleteConfig, i: int) -> bool:
    return classify(cfg, i).tag is ClassTag.D


_MAPS = {"T": bar_T1, "T1": bar_T1, "T2": bar_T2}


def orbit(reduced: CompleteConfig, which: str = "T1") -> list[TransitionOutcome]:
    """Cycle of pairs sharing the reduced configuration ``reduced``.

    ``"T"`` and ``"T1"`` return the cycle that skips the two border-neutral
    pairs, ``"T2"`` the full cycle through them.
    """
    if which not in _MAPS:
        raise KernelError(f"unknown map {which!r}")
    check(reduced)
    step = _MAPS[which]
    if which == "T":
        if reduced.boundary is not Boundary.OPEN2:
            raise KernelError("the two-species orbit needs an open2 reduced configuration")
        start = TransitionOutcome(reduced.with_rows(W + reduced.top, B + reduced.bottom), 0)
    else:
        bnd = Boundary.OPEN3
        base = CompleteConfig(reduced.top, reduced.bottom, bnd)
        start = TransitionOutcome(base.with_rows(W + base.top, B + base.bottom), 0)
    cycle = [start]
    cur = step(*start)
    while cur != start:
        cycle.append(cur)
        if len(cycle) > 4 * (reduced.n + 2) ** 2:
            raise KernelError("orbit failed to close")
        cur = step(*cur)
    return cycle


__all__ = [
    "ClassTag",
    "Classification",
    "ConfigError",
    "KernelError",
    "TransitionOutcome",
    "T_sweep",
    "Y",
    "bar_T",
    "bar_T1",
    "bar_T1_inv",
    "bar_T2",
    "bar_T2_inv",
    "bar_T_inv",
    "classify",
    "classify_periodic",
    "hat_T",
    "hat_T_inv",
    "is_stable",
    "orbit",
    "reduce",
    "theta",
    "theta3",
    "theta_periodic",
]
