"""Excursion and walk encodings of two-species configurations, density profiles."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Sequence

from .config import B, W, Boundary, CompleteConfig, ConfigError, check, prefix_stats


class WalkError(ValueError):
    pass


@dataclass(frozen=True)
class WalkPair:
    e: tuple[int, ...]
    b: tuple[int, ...]


@dataclass(frozen=True)
class SplitWalks:
    """Positions (1-based) of the ``BB``/``WW`` columns and the two step sequences."""

    I_e: tuple[int, ...]
    e_prime: tuple[int, ...]
    b_prime: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.e_prime) + len(self.b_prime)

    def e_path(self) -> tuple[int, ...]:
        return (0, *accumulate(self.e_prime))

    def b_path(self) -> tuple[int, ...]:
        return (0, *accumulate(self.b_prime))


def _require_open2(cfg: CompleteConfig) -> None:
    if cfg.boundary is not Boundary.OPEN2:
        raise WalkError("walk encodings are defined for open two-species configurations")
    check(cfg)


def walks(cfg: CompleteConfig) -> WalkPair:
    _require_open2(cfg)
    e = tuple(v // 2 for v in prefix_stats(cfg).E)
    b = [0]
    for t, d in zip(cfg.top, cfg.bottom):
        b.append(b[-1] + (t == B) - (d == B))
    return WalkPair(e, tuple(b))


_E_STEP = {"BB": 1, "WW": -1}
_B_STEP = {"BW": 1, "WB": -1}


def split(cfg: CompleteConfig) -> SplitWalks:
    _require_open2(cfg)
    ie, ep, bp = [], [], []
    for c, col in enumerate(cfg.columns(), start=1):
        if col in _E_STEP:
            ie.append(c)
            ep.append(_E_STEP[col])
        else:
            bp.append(_B_STEP[col])
    return SplitWalks(tuple(ie), tuple(ep), tuple(bp))


def join(sw: SplitWalks) -> CompleteConfig:
    n = sw.n
    if len(sw.I_e) != len(sw.e_prime):
        raise WalkError("I_e and e' differ in length")
    if list(sw.I_e) != sorted(set(sw.I_e)) or any(not 1 <= c <= n for c in sw.I_e):
        raise WalkError("I_e must be an increasing set of columns in 1..n")
    if any(s not in (1, -1) for s in sw.e_prime + sw.b_prime):
        raise WalkError("steps must be +1 or -1")
    path = sw.e_path()
    if min(path) < 0 or path[-1] != 0:
        raise WalkError("e' must be a nonnegative excursion")
    ie = set(sw.I_e)
    es, bs = iter(sw.e_prime), iter(sw.b_prime)
    cols = []
    for c in range(1, n + 1):
        if c in ie:
            cols.append("BB" if next(es) == 1 else "WW")
        else:
            cols.append("BW" if next(bs) == 1 else "WB")
    return CompleteConfig("".join(x[0] for x in cols), "".join(x[1] for x in cols), Boundary.OPEN2)


def excursion_count(length: int) -> int:
    """Nonnegative simple excursions with ``length`` steps."""
    if length % 2:
        return 0
    h = length // 2
    from math import comb

    return comb(2 * h, h) // (h + 1)


def split_count(n: int) -> int:
    """Number of triples ``(I_e, e', b')`` of size ``n``."""
    from math import comb

    return sum(excursion_count(p) * 2 ** (n - p) * comb(n, p) for p in range(n + 1))


# --------------------------------------------------------------------------
# densities


def _weighted_tops(source) -> Iterable[tuple[str, object]]:
    from .chain import Distribution, SimulationResult

    if isinstance(source, SimulationResult):
        for s, v in source.visits.items():
            yield (s.top if isinstance(s, CompleteConfig) else s), v
    elif isinstance(source, Distribution):
        for s, p in zip(source.support, source.probabilities):
            yield (s.top if isinstance(s, CompleteConfig) else s), p
    else:
        raise TypeError("expected a Distribution or a SimulationResult")


def density_profile(source) -> list:
    """Expected indicator of a black top particle in each cell.

    Exact distributions give exact expectations; simulated runs give
    visit-weighted averages.
    """
    items = list(_weighted_tops(source))
    if not items:
        return []
    n = len(items[0][0])
    exact = all(isinstance(w, Fraction) for _, w in items)
    total = sum(w for _, w in items)
    acc = [0] * n
    for top, w in items:
        for c, t in enumerate(top):
            if t == B:
                acc[c] += w
    if exact:
        return [Fraction(a) / total for a in acc]
    return [a / total for a in acc]


def segment_density(profile: Sequence, i: int, j: int):
    """Average density between walls ``i < j``."""
    if not 0 <= i < j <= len(profile):
        raise WalkError(f"need 0 <= i < j <= {len(profile)}")
    return sum(profile[i:j]) / (j - i)


def ie_histogram(source) -> dict[Fraction, object]:
    """Distribution of the fraction of ``BB``/``WW`` columns."""
    from .chain import Distribution, SimulationResult

    if isinstance(source, SimulationResult):
        items = source.visits.items()
    elif isinstance(source, Distribution):
        items = zip(source.support, source.probabilities)
    else:
        raise TypeError("expected a Distribution or a SimulationResult")
    hist: dict[Fraction, object] = {}
    total = 0
    for s, w in items:
        if not isinstance(s, CompleteConfig):
            raise WalkError("the histogram needs complete configurations")
        frac = Fraction(len(split(s).I_e), max(s.n, 1))
        hist[frac] = hist.get(frac, 0) + w
        total += w
    return {k: hist[k] / total for k in sorted(hist)}


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _cell(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def walks_csv(cfg: CompleteConfig) -> str:
    wp = walks(cfg)
    return to_csv(("index", "e", "b"), ((i, e, b) for i, (e, b) in enumerate(zip(wp.e, wp.b))))


def profile_csv(profile: Sequence) -> str:
    return to_csv(("cell", "density"), enumerate(profile))


__all__ = [
    "SplitWalks",
    "WalkError",
    "WalkPair",
    "density_profile",
    "excursion_count",
    "ie_histogram",
    "join",
    "profile_csv",
    "segment_density",
    "split",
    "split_count",
    "to_csv",
    "walks",
    "walks_csv",
]
