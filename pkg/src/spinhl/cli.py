"""Command line entry point.

Subcommands:

  verify        run the identity suite; JSON-lines reports, exit 1 on failure
  sample-field  sample the half-space partition field, write JSON
  ds6v          sample the dynamic six-vertex height field, write CSV
  particles     run the dual particle system, write CSV + currents JSON
  compare       paired field-length vs height marginals, chi-square report

Configuration is a single JSON document (--config FILE) with rationals as
strings, e.g. {"q": "1/3", "s": "-1/2", "u": "1/2", "x": ["1/4", "1/5"],
"seed": 7, "T": 8, "cap": 30}; command line flags override it.  Exit
codes: 0 pass, 1 check failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .exact import ConfigError, InvalidParams, ModelParams, RandomSource, default_spectral, frac
from . import ds6v as ds6v_mod
from . import field as field_mod
from . import identities


def _load_config(path):
    if path is None:
        return {}
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}")


def _resolve(args, cfg, name, default=None):
    """Command line flag wins; then the config document; then the default."""
    val = getattr(args, name, None)
    if val is not None:
        return val
    if name in cfg:
        return cfg[name]
    if default is not None:
        return default
    raise ConfigError(f"missing required option {name!r} (flag or config)")


def _params_from(cfg, T):
    try:
        q = frac(cfg.get("q", "1/3"))
        s = frac(cfg.get("s", "-1/2"))
        u = frac(cfg.get("u", "1/2"))
        xs = cfg.get("x")
        if xs is None:
            xs = default_spectral(max(T + 1, 4))
        else:
            xs = tuple(frac(v) for v in xs)
        if len(xs) < T + 1:
            raise ConfigError(f"need at least {T + 1} spectral values, got {len(xs)}")
        return ModelParams(q, s, u, tuple(xs))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad parameters: {exc}")


def cmd_verify(args):
    cfg = _load_config(args.config)
    corrupt = bool(os.environ.get("SPINHL_TEST_CORRUPT"))
    points = identities.FIXTURE_POINTS
    if args.point is not None:
        if not 0 <= args.point < len(points):
            raise ConfigError(f"--point must be in 0..{len(points) - 1}")
        points = (points[args.point],)
    if "q" in cfg or "s" in cfg:
        points = (_params_from(cfg, 3),)
    reports = identities.run_suite(points, cap=int(cfg.get("cap", args.cap)),
                                   only=args.only, corrupt=corrupt)
    out = sys.stdout if args.out is None else open(args.out, "w")
    failed = 0
    for rep in reports:
        out.write(rep.to_json() + "\n")
        if not rep.passed:
            failed += 1
    if out is not sys.stdout:
        out.close()
    if failed:
        print(f"{failed}/{len(reports)} checks FAILED", file=sys.stderr)
        return 1
    print(f"all {len(reports)} checks passed", file=sys.stderr)
    return 0


def cmd_sample_field(args):
    cfg = _load_config(args.config)
    T = int(_resolve(args, cfg, "T"))
    seed = int(_resolve(args, cfg, "seed", 0))
    params = _params_from(cfg, T)
    rng = RandomSource(seed, 0)
    field = field_mod.sample_field(T, rng, params)
    field_mod.check_field_invariants(field)
    text = field_mod.field_to_json(field)
    with open(args.out, "w") as fh:
        fh.write(text + "\n")
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def cmd_ds6v(args):
    cfg = _load_config(args.config)
    T = int(_resolve(args, cfg, "T"))
    seed = int(_resolve(args, cfg, "seed", 0))
    params = _params_from(cfg, T)
    rng = RandomSource(seed, 1)
    h = ds6v_mod.ds6v_sample(T, rng, params)
    ds6v_mod.check_heights(h)
    with open(args.out, "w") as fh:
        fh.write(ds6v_mod.heights_to_csv(h))
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def cmd_particles(args):
    cfg = _load_config(args.config)
    T = int(_resolve(args, cfg, "T"))
    seed = int(_resolve(args, cfg, "seed", 0))
    params = _params_from(cfg, T)
    rng = RandomSource(seed, 2)
    states = ds6v_mod.particle_trajectory(T, rng, params)
    with open(args.out, "w") as fh:
        fh.write(ds6v_mod.particles_to_csv(states))
    currents_path = args.out + ".currents.json"
    with open(currents_path, "w") as fh:
        fh.write(ds6v_mod.currents_to_json(states) + "\n")
    print(f"wrote {args.out} and {currents_path}", file=sys.stderr)
    return 0


def cmd_compare(args):
    from collections import Counter

    from scipy.stats import chi2_contingency

    cfg = _load_config(args.config)
    params = _params_from(cfg, args.T)
    counts_field = {pt: Counter() for pt in _sites(args.T)}
    counts_h = {pt: Counter() for pt in _sites(args.T)}
    for k in range(args.samples):
        fld = field_mod.sample_field(args.T, RandomSource(args.seed, 0).substream(k), params)
        hts = ds6v_mod.ds6v_sample(args.T, RandomSource(args.seed, 1).substream(k), params)
        for pt in counts_field:
            counts_field[pt][len(fld[pt])] += 1
            counts_h[pt][hts[pt]] += 1
    worst = 1.0
    report = {}
    for pt in counts_field:
        keys = sorted(set(counts_field[pt]) | set(counts_h[pt]))
        if len(keys) < 2:
            pv = 1.0
        else:
            table = [
                [counts_field[pt][k] for k in keys],
                [counts_h[pt][k] for k in keys],
            ]
            pv = float(chi2_contingency(table).pvalue)
        report[f"{pt}"] = pv
        worst = min(worst, pv)
    print(json.dumps({"samples": args.samples, "p_values": report, "worst": worst}))
    return 0 if worst > 1e-3 else 1


def _sites(T):
    return [(i, j) for j in range(1, T + 1) for i in range(1, j + 1)]


def main(argv=None):
    ap = argparse.ArgumentParser(prog="spinhl")
    ap.add_argument("--config", help="JSON configuration file", default=None)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the exact identity suite")
    p.add_argument("--only", default=None, help="restrict to checks whose name contains this")
    p.add_argument("--point", type=int, default=None, help="fixture parameter point index")
    p.add_argument("--cap", type=int, default=30, help="largest-part truncation cap")
    p.add_argument("--out", default=None, help="write JSON-lines reports here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample-field", help="sample the half-space partition field")
    p.add_argument("--T", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sample_field)

    p = sub.add_parser("ds6v", help="sample the dynamic six-vertex height field")
    p.add_argument("--T", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_ds6v)

    p = sub.add_parser("particles", help="run the dual particle system")
    p.add_argument("--T", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_particles)

    p = sub.add_parser("compare", help="paired field vs height marginal comparison")
    p.add_argument("--T", type=int, default=4)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_compare)

    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (InvalidParams,) as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
