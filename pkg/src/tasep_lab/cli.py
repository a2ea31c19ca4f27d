"""Command-line front end: ``tasep-lab <command> [flags]``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import chain, enumeration, excursion, verify
from .config import ConfigError, parse, serialize
from .weights import ParamError, RateParams, parse_number

SPACES = ("omega0", "omega", "omega_hat")
MODELS = tuple(m.value for m in chain.Model)


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_number(text)
    except ParamError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=_rational, default=Fraction(1))
    p.add_argument("--beta", type=_rational, default=Fraction(1))
    p.add_argument("--gamma", type=_rational, default=Fraction(1))
    p.add_argument("--epsilon", type=_rational, default=Fraction(0))


def _add_klm(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)


def _add_output(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", help="write machine output to this file instead of stdout")


def _add_mode(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", dest="exact", action="store_true", default=True)
    g.add_argument("--float", dest="exact", action="store_false")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tasep-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every configuration of a space")
    p.add_argument("--space", choices=SPACES, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_klm(p)
    _add_output(p, ("text", "json"))

    p = sub.add_parser("count", help="size of a space")
    p.add_argument("--space", choices=SPACES, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_klm(p)
    p.add_argument("--method", choices=("closed", "enumerate"), default="closed")
    _add_output(p, ("text", "json"))

    p = sub.add_parser("stationary", help="exact or floating stationary distribution")
    p.add_argument("--model", choices=MODELS, default="x0")
    p.add_argument("--n", type=int, required=True)
    _add_params(p)
    _add_klm(p)
    _add_mode(p)
    p.add_argument("--marginal", action="store_true", help="report the top-row marginal")
    _add_output(p, ("text", "json"))

    p = sub.add_parser("simulate", help="Monte Carlo run, reports visit frequencies")
    p.add_argument("--model", choices=MODELS, default="x0")
    p.add_argument("--n", type=int, required=True)
    _add_params(p)
    _add_klm(p)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--burn-in", type=int)
    p.add_argument("--initial", help="starting state (row or TOP/BOTTOM)")
    _add_mode(p)
    _add_output(p, ("text", "json"))

    p = sub.add_parser("verify", help="run verification checks")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--check", action="append", choices=verify.NAMES, help="run only these checks")
    p.add_argument("--seed", type=int, default=0)
    _add_output(p, ("text", "json"))

    p = sub.add_parser("excursion", help="walk encoding of a configuration as CSV")
    p.add_argument("--config", required=True, help="TOP/BOTTOM, two-species")
    p.add_argument("--split", action="store_true", help="emit the (I_e, e', b') triple instead")
    _add_output(p, ("csv", "json"))

    p = sub.add_parser("density", help="black density profile of the top row as CSV")
    p.add_argument("--model", choices=MODELS, default="x0")
    p.add_argument("--n", type=int, required=True)
    _add_params(p)
    _add_klm(p)
    p.add_argument("--steps", type=int, help="simulate instead of solving exactly")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--burn-in", type=int)
    p.add_argument("--histogram", action="store_true", help="emit the |I_e|/n histogram instead")
    _add_mode(p)
    _add_output(p, ("csv", "json"))
    return parser


def _space(args) -> enumeration.Space:
    k, l, m = args.k, args.l, args.m
    if args.space == "omega0" and k is not None and m is None:
        m = args.n - k
    if args.space == "omega0" and k is not None:
        l = 0
    return enumeration.Space(args.space, args.n, k, l, m)


def _spec(args) -> chain.ChainSpec:
    params = RateParams(args.alpha, args.beta, args.gamma, args.epsilon)
    if not args.exact:
        params = params.as_float()
    return chain.ChainSpec(args.model, args.n, params, args.k, args.l, args.m)


def _dist_output(dist: chain.Distribution, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        payload = json.loads(dist.to_json())
        if extra:
            return json.dumps({**extra, "distribution": payload})
        return json.dumps(payload)
    return "\n".join(dist.to_lines())


def cmd_enumerate(args) -> tuple[str, int]:
    items = [serialize(c) for c in enumeration.enumerate_space(_space(args))]
    return (json.dumps(items) if args.format == "json" else "\n".join(items)), 0


def cmd_count(args) -> tuple[str, int]:
    sp = _space(args)
    value = enumeration.count_closed(sp) if args.method == "closed" else enumeration.count_enumerated(sp)
    return (json.dumps({"space": str(sp), "count": value}) if args.format == "json" else str(value)), 0


def cmd_stationary(args) -> tuple[str, int]:
    dist = chain.stationary_exact(_spec(args), exact=args.exact)
    if args.marginal:
        dist = chain.marginal_top(dist)
    return _dist_output(dist, args.format), 0


def cmd_simulate(args) -> tuple[str, int]:
    spec = _spec(args)
    res = chain.simulate(spec, args.steps, args.seed, args.initial, burn_in=args.burn_in)
    dist = res.empirical() if args.exact else res.empirical_float()
    extra = {
        "seed": res.seed,
        "steps": res.steps,
        "burn_in": res.burn_in,
        "final_state": chain.state_key(res.final_state),
    }
    return _dist_output(dist, args.format, extra), 0


def cmd_verify(args) -> tuple[str, int]:
    names = args.check or list(verify.NAMES)
    reports = [verify.run_check(n, seed=args.seed, profile=args.profile) for n in names]
    text = verify.report_json(reports) if args.format == "json" else verify.report_text(reports)
    return text, 0 if all(r.passed for r in reports) else 1


def cmd_excursion(args) -> tuple[str, int]:
    cfg = parse(args.config)
    if args.split:
        sw = excursion.split(cfg)
        if args.format == "json":
            return json.dumps({"I_e": sw.I_e, "e_prime": sw.e_prime, "b_prime": sw.b_prime}), 0
        rows = [("I_e", *sw.I_e), ("e_prime", *sw.e_prime), ("b_prime", *sw.b_prime)]
        return excursion.to_csv(("part", "values"), rows).rstrip("\n"), 0
    if args.format == "json":
        wp = excursion.walks(cfg)
        return json.dumps({"e": wp.e, "b": wp.b}), 0
    return excursion.walks_csv(cfg).rstrip("\n"), 0


def cmd_density(args) -> tuple[str, int]:
    spec = _spec(args)
    if args.histogram:
        if not spec.model.complete or spec.model is not chain.Model.X0:
            raise UsageError("--histogram needs --model x0")
        source = (
            chain.simulate(spec, args.steps, args.seed, burn_in=args.burn_in)
            if args.steps is not None
            else chain.stationary_exact(spec, exact=args.exact)
        )
        hist = excursion.ie_histogram(source)
        if args.format == "json":
            return json.dumps({excursion._cell(k): excursion._cell(v) for k, v in hist.items()}), 0
        return excursion.to_csv(("fraction", "probability"), hist.items()).rstrip("\n"), 0
    if args.steps is None:
        profile = excursion.density_profile(chain.stationary_exact(spec, exact=args.exact))
    elif spec.model in (chain.Model.S0, chain.Model.X0) and chain.space_size(spec) > 20_000:
        # the top row of the complete chain is the row chain, which is much cheaper
        profile = list(chain.simulate_row_density(spec.n, args.steps, args.seed, spec.params, burn_in=args.burn_in))
    else:
        profile = excursion.density_profile(chain.simulate(spec, args.steps, args.seed, burn_in=args.burn_in))
        profile = [float(v) for v in profile]
    if args.format == "json":
        return json.dumps([excursion._cell(v) for v in profile]), 0
    return excursion.profile_csv(profile).rstrip("\n"), 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "stationary": cmd_stationary,
    "simulate": cmd_simulate,
    "verify": cmd_verify,
    "excursion": cmd_excursion,
    "density": cmd_density,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"tasep-lab: usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ConfigError) as exc:
        print(f"tasep-lab: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
