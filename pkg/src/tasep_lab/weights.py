"""Bottom-row labels, configuration weights and partition sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .config import (
    B,
    W,
    X,
    Block,
    Boundary,
    BWColumn,
    CompleteConfig,
    ConfigError,
    WBColumn,
    check,
    segments,
    _factor_columns,
)

Number = Union[Fraction, float]


class ParamError(ValueError):
    pass


def parse_number(text: str | int | float | Fraction) -> Fraction:
    """Exact rational from ``"p/q"``, an integer or a decimal string."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, float):
        return Fraction(text).limit_denominator(10**12)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParamError(f"not a rational number: {text!r}") from exc


@dataclass(frozen=True)
class RateParams:
    alpha: Number = Fraction(1)
    beta: Number = Fraction(1)
    gamma: Number = Fraction(1)
    epsilon: Number = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma", "epsilon"):
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, Fraction(v))
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if not 0 < v <= 1:
                raise ParamError(f"{name} must lie in (0, 1], got {v}")
        if not 0 <= self.epsilon <= 1:
            raise ParamError(f"epsilon must lie in [0, 1], got {self.epsilon}")

    @classmethod
    def parse(cls, alpha="1", beta="1", gamma="1", epsilon="0") -> "RateParams":
        return cls(*(parse_number(v) for v in (alpha, beta, gamma, epsilon)))

    def as_float(self) -> "RateParams":
        return RateParams(float(self.alpha), float(self.beta), float(self.gamma), float(self.epsilon))

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in (self.alpha, self.beta, self.gamma, self.epsilon))

    @property
    def neutral_border_rate(self) -> Number:
        """Rate of a border move involving a neutral particle."""
        return (1 - self.epsilon) * self.beta * self.gamma / self.alpha

    def check_three_species(self) -> "RateParams":
        if self.neutral_border_rate > 1:
            raise ParamError(
                "(1 - epsilon) * beta * gamma / alpha must not exceed 1 "
                f"(got {self.neutral_border_rate})"
            )
        return self


@dataclass(frozen=True)
class LabelReport:
    n_y: int
    n_z: int
    y_positions: frozenset[int]
    z_positions: frozenset[int]
    ell: int


def _label_segment(cfg: CompleteConfig, cols: list[int], ys: set[int], zs: set[int]) -> None:
    top = "".join(cfg.top[c] for c in cols)
    bot = "".join(cfg.bottom[c] for c in cols)
    pos = 0
    seen_z = False
    for factor in _factor_columns(top, bot):
        if isinstance(factor, BWColumn):
            zs.add(cols[pos])
            seen_z = True
            pos += 1
        elif isinstance(factor, WBColumn):
            if not seen_z:
                ys.add(cols[pos])
            pos += 1
        elif isinstance(factor, Block):
            if not seen_z:
                ys.add(cols[pos])
            pos += factor.inside.n + 2
        else:  # pragma: no cover - segments contain no neutral column
            raise ConfigError("neutral column inside a segment")


def label(cfg: CompleteConfig) -> LabelReport:
    """Put ``y``/``z`` labels on the bottom row, independently in each segment."""
    check(cfg)
    ys: set[int] = set()
    zs: set[int] = set()
    for cols in segments(cfg):
        _label_segment(cfg, cols, ys, zs)
    return LabelReport(len(ys), len(zs), frozenset(ys), frozenset(zs), cfg.ell)


def weight(cfg: CompleteConfig, params: RateParams) -> Number:
    rep = label(cfg)
    a, b, g, eps = params.alpha, params.beta, params.gamma, params.epsilon
    n = cfg.n
    one = Fraction(1) if params.exact else 1.0
    if cfg.boundary is Boundary.OPEN2:
        if eps:
            raise ParamError("epsilon has no meaning for two-species configurations")
        return one * a ** (rep.n_y + rep.n_z) * b ** (n - rep.n_y) * g ** (n - rep.n_z)
    if cfg.boundary is Boundary.PERIODIC:
        if eps:
            raise ParamError("epsilon has no meaning on the circle")
        return one * b**n * g**n * (a / b) ** rep.n_y * (a / g) ** rep.n_z
    if eps == 1:
        raise ParamError("epsilon = 1 makes the three-species weight undefined")
    return (
        one
        * b**n
        * g**n
        * (1 - eps) ** n
        * (a / b) ** rep.n_y
        * (a / g) ** rep.n_z
        * (a * a * eps / (b * g * (1 - eps))) ** rep.ell
    )


def partition_sum(states: Iterable[CompleteConfig], params: RateParams) -> Number:
    total: Number = Fraction(0) if params.exact else 0.0
    for s in states:
        total += weight(s, params)
    return total


def wall_rate(top: str, i: int, params: RateParams, periodic: bool = False) -> Number:
    """Activation rate of the local configuration around wall ``i`` of a row."""
    n = len(top)
    if periodic:
        left, right = top[(i - 1) % n], top[i]
    else:
        left = top[i - 1] if i > 0 else None
        right = top[i] if i < n else None
    if left is None:
        return params.beta if right == W else (params.neutral_border_rate if right == X else 0)
    if right is None:
        return params.gamma if left == B else (params.neutral_border_rate if left == X else 0)
    return {(B, W): params.alpha, (X, W): params.beta, (B, X): params.gamma}.get((left, right), 0)


__all__ = [
    "LabelReport",
    "ParamError",
    "RateParams",
    "label",
    "parse_number",
    "partition_sum",
    "wall_rate",
    "weight",
]
