"""Complete configurations: types, validity, prefix statistics, factorization.

A configuration is two aligned rows of cells.  Cells hold one of three
particles, written ``B`` (black), ``W`` (white) and ``X`` (neutral).  Rows are
plain strings over that alphabet, which keeps configurations hashable, cheap
to slice and trivially ordered by their text form.

Walls are numbered ``0..n``: wall ``j`` sits between column ``j-1`` and
column ``j`` (0-based columns), wall ``0`` is the left border and wall ``n``
the right border.  On a periodic circle walls ``0`` and ``n`` coincide.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

B = "B"
W = "W"
X = "X"

PARTICLES = (B, W, X)


class Boundary(str, enum.Enum):
    OPEN2 = "open2"
    OPEN3 = "open3"
    PERIODIC = "periodic"


class ConfigError(ValueError):
    """Raised for malformed or invalid configurations."""


@dataclass(frozen=True, order=True)
class CompleteConfig:
    top: str
    bottom: str
    boundary: Boundary = field(default=Boundary.OPEN2, compare=True)

    def __post_init__(self) -> None:
        if len(self.top) != len(self.bottom):
            raise ConfigError(
                f"row lengths differ: {len(self.top)} != {len(self.bottom)}"
            )
        for row in (self.top, self.bottom):
            bad = set(row) - set(PARTICLES)
            if bad:
                raise ConfigError(f"unknown particle symbols {sorted(bad)!r}")
        if not isinstance(self.boundary, Boundary):
            object.__setattr__(self, "boundary", Boundary(self.boundary))

    @property
    def n(self) -> int:
        return len(self.top)

    def column(self, c: int) -> str:
        return self.top[c] + self.bottom[c]

    def columns(self) -> list[str]:
        return [t + b for t, b in zip(self.top, self.bottom)]

    @property
    def ell(self) -> int:
        """Number of neutral columns."""
        return self.top.count(X)

    def counts(self) -> tuple[int, int, int]:
        """(k, ell, m): black, neutral and white particles in the top row."""
        return self.top.count(B), self.top.count(X), self.top.count(W)

    def with_rows(self, top: str, bottom: str) -> "CompleteConfig":
        return CompleteConfig(top, bottom, self.boundary)

    def __str__(self) -> str:
        return serialize(self)


def from_columns(cols: Sequence[str], boundary: Boundary = Boundary.OPEN2) -> CompleteConfig:
    """Build a configuration from two-character column strings like ``"BW"``."""
    return CompleteConfig(
        "".join(c[0] for c in cols), "".join(c[1] for c in cols), Boundary(boundary)
    )


def empty(boundary: Boundary = Boundary.OPEN2) -> CompleteConfig:
    return CompleteConfig("", "", boundary)


# --------------------------------------------------------------------------
# prefix statistics


class PrefixStats(NamedTuple):
    B: tuple[int, ...]
    W: tuple[int, ...]
    E: tuple[int, ...]


def prefix_stats(cfg: CompleteConfig) -> PrefixStats:
    """Black/white counts over both rows left of each wall ``0..n``."""
    b = [0]
    w = [0]
    for t, d in zip(cfg.top, cfg.bottom):
        b.append(b[-1] + (t == B) + (d == B))
        w.append(w[-1] + (t == W) + (d == W))
    return PrefixStats(tuple(b), tuple(w), tuple(x - y for x, y in zip(b, w)))


def excess(top: str, bottom: str) -> list[int]:
    """E(j) for a pair of plain rows (no validity assumed)."""
    e = [0]
    for t, d in zip(top, bottom):
        e.append(e[-1] + (t == B) + (d == B) - (t == W) - (d == W))
    return e


# --------------------------------------------------------------------------
# segments


def neutral_positions(cfg: CompleteConfig) -> list[int]:
    return [c for c, t in enumerate(cfg.top) if t == X]


def segments(cfg: CompleteConfig) -> list[list[int]]:
    """Column index lists of the maximal neutral-free stretches.

    Open boundaries give ``ell + 1`` (possibly empty) segments in left to
    right order.  On the circle with ``ell >= 1`` there are ``ell`` arcs, each
    read clockwise starting right after a neutral column, so an arc may wrap
    through the apex.  A neutral-free circle is read from wall 0 as one
    segment.
    """
    n = cfg.n
    xs = neutral_positions(cfg)
    if cfg.boundary is Boundary.PERIODIC and xs:
        arcs = []
        for a, x in enumerate(xs):
            nxt = xs[(a + 1) % len(xs)]
            span = (nxt - x - 1) % n if len(xs) > 1 else n - 1
            arcs.append([(x + 1 + t) % n for t in range(span)])
        return arcs
    out: list[list[int]] = [[]]
    for c in range(n):
        if cfg.top[c] == X:
            out.append([])
        else:
            out[-1].append(c)
    return out


# --------------------------------------------------------------------------
# validation


class Violation(NamedTuple):
    wall: int | None
    condition: str
    detail: str

    def __str__(self) -> str:
        where = "" if self.wall is None else f" at wall {self.wall}"
        return f"{self.condition}{where}: {self.detail}"


def _segment_violations(cfg: CompleteConfig, cols: list[int]) -> list[Violation]:
    out: list[Violation] = []
    e = 0
    blacks = whites = 0
    for c in cols:
        t, d = cfg.top[c], cfg.bottom[c]
        if d == X:
            out.append(Violation(c, "neutral", "neutral particle below a non-neutral one"))
            continue
        blacks += (t == B) + (d == B)
        whites += (t == W) + (d == W)
        e = blacks - whites
        if e < 0:
            wall = (c + 1) % cfg.n if cfg.boundary is Boundary.PERIODIC else c + 1
            out.append(Violation(wall, "positivity", f"E = {e}"))
    if blacks != whites:
        out.append(
            Violation(None, "balance", f"{blacks} black and {whites} white particles")
        )
    return out


def validate(cfg: CompleteConfig) -> list[Violation]:
    """Return every broken invariant; an empty list means the configuration is valid."""
    out: list[Violation] = []
    for c in range(cfg.n):
        if (cfg.top[c] == X) != (cfg.bottom[c] == X):
            out.append(Violation(c, "neutral", "neutral particles must form full columns"))
    if cfg.boundary is Boundary.OPEN2 and cfg.ell:
        out.append(Violation(None, "neutral", "open2 configurations carry no neutral particles"))
    if out:
        return out
    for seg in segments(cfg):
        out.extend(_segment_violations(cfg, seg))
    return out


def is_valid(cfg: CompleteConfig) -> bool:
    return not validate(cfg)


def check(cfg: CompleteConfig) -> CompleteConfig:
    problems = validate(cfg)
    if problems:
        raise ConfigError(f"invalid configuration {serialize(cfg)}: " + "; ".join(map(str, problems)))
    return cfg


# --------------------------------------------------------------------------
# prime factorization


@dataclass(frozen=True)
class BWColumn:
    pass


@dataclass(frozen=True)
class WBColumn:
    pass


@dataclass(frozen=True)
class NeutralColumn:
    pass


@dataclass(frozen=True)
class Block:
    inside: CompleteConfig


Factor = BWColumn | WBColumn | NeutralColumn | Block


def _factor_columns(top: str, bottom: str) -> Iterator[Factor]:
    start = 0
    e = 0
    for c, (t, d) in enumerate(zip(top, bottom)):
        e += (t == B) + (d == B) - (t == W) - (d == W)
        if e == 0:
            piece = top[start : c + 1] + "/" + bottom[start : c + 1]
            if c == start:
                if piece == "B/W":
                    yield BWColumn()
                elif piece == "W/B":
                    yield WBColumn()
                else:
                    raise ConfigError(f"unexpected prime column {piece}")
            else:
                inside = CompleteConfig(top[start + 1 : c], bottom[start + 1 : c])
                yield Block(inside)
            start = c + 1


def prime_factorize(cfg: CompleteConfig) -> list[Factor]:
    """Unique factorization into prime columns, blocks and neutral columns."""
    if cfg.boundary is Boundary.PERIODIC:
        raise ConfigError("prime factorization is defined for open configurations")
    check(cfg)
    out: list[Factor] = []
    seg_top: list[str] = []
    seg_bot: list[str] = []
    for t, d in zip(cfg.top + X, cfg.bottom + X):
        if t == X:
            out.extend(_factor_columns("".join(seg_top), "".join(seg_bot)))
            out.append(NeutralColumn())
            seg_top, seg_bot = [], []
        else:
            seg_top.append(t)
            seg_bot.append(d)
    out.pop()  # sentinel
    return out


def concat_factors(factors: Sequence[Factor], boundary: Boundary = Boundary.OPEN2) -> CompleteConfig:
    top: list[str] = []
    bot: list[str] = []
    for f in factors:
        if isinstance(f, BWColumn):
            top.append(B)
            bot.append(W)
        elif isinstance(f, WBColumn):
            top.append(W)
            bot.append(B)
        elif isinstance(f, NeutralColumn):
            top.append(X)
            bot.append(X)
        else:
            top.append(B + f.inside.top + W)
            bot.append(B + f.inside.bottom + W)
    return CompleteConfig("".join(top), "".join(bot), boundary)


# --------------------------------------------------------------------------
# text format

_TEXT = re.compile(r"^([BWX]*)/([BWX]*)(?:@(open2|open3|periodic))?$")


def parse(text: str, *, validate_: bool = True) -> CompleteConfig:
    """Parse ``TOP/BOTTOM[@boundary]``.

    Without a suffix the boundary is ``open2``, or ``open3`` when neutral
    particles are present.
    """
    m = _TEXT.match(text.strip())
    if not m:
        raise ConfigError(f"malformed configuration text {text!r}")
    top, bottom, bnd = m.groups()
    if len(top) != len(bottom):
        raise ConfigError(f"row lengths differ in {text!r}")
    if bnd is None:
        bnd = "open3" if X in top + bottom else "open2"
    cfg = CompleteConfig(top, bottom, Boundary(bnd))
    return check(cfg) if validate_ else cfg


def serialize(cfg: CompleteConfig) -> str:
    return f"{cfg.top}/{cfg.bottom}@{cfg.boundary.value}"


# --------------------------------------------------------------------------
# Motzkin view

_MOTZKIN = {"BB": "U", "WW": "D", "BW": "L", "WB": "R"}
_FROM_MOTZKIN = {v: k for k, v in _MOTZKIN.items()}


def to_motzkin(cfg: CompleteConfig) -> str:
    """Bicolored Motzkin word: U/D for ``BB``/``WW`` columns, L/R for the level colors."""
    if cfg.ell:
        raise ConfigError("Motzkin words encode neutral-free configurations")
    return "".join(_MOTZKIN[c] for c in cfg.columns())


def from_motzkin(word: str) -> CompleteConfig:
    return from_columns([_FROM_MOTZKIN[s] for s in word])
