"""Command-line front end.

Subcommands: tree, critical, ec (specialize-e24 / specialize-e222 / order /
torsion / curve-244), model, search, verify-paper.  Exit codes: 0 success,
1 check or verification failure, 2 usage error.  Structured output mode
emits one JSON object per line; every line parses back into the emitting
data type.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import __version__, dynamics, elliptic, models, search, verify
from .exactmath import QPoly, RatParseError, format_rat, parse_rat
from .factor import DEFAULT_RHO_STEPS, DEFAULT_TRIAL_BOUND, FactorBudgetExceeded

CHECKPOINT_DIR_ENV = "QUADPREIM_CHECKPOINT_DIR"
CONFIG_ENV = "QUADPREIM_CONFIG"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except RatParseError as exc:
        raise UsageError(str(exc))


def load_config(path: str | None) -> dict:
    """Simple key = value configuration (comments with #); recognized keys:
    height_bound, depth, trial_bound, rho_steps, display_digits."""
    if path is None:
        path = os.environ.get(CONFIG_ENV)
    settings: dict[str, str] = {}
    if not path:
        return settings
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError("config %s line %d: expected key = value"
                                     % (path, lineno))
                key, value = line.split("=", 1)
                settings[key.strip()] = value.strip()
    except OSError as exc:
        raise UsageError("cannot read config %s: %s" % (path, exc))
    return settings


def _print_json(obj):
    print(json.dumps(obj, sort_keys=True))


def _poly_json(poly: QPoly) -> list[str]:
    return [format_rat(c) for c in poly.coeffs]


def _display_float(q: Fraction, digits: int) -> str:
    # display-only convenience; the core never floats
    return ("%%.%dg" % digits) % float(q)


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_tree(args, config) -> int:
    c = _rat(args.c)
    a = _rat(args.a)
    if args.depth < 1:
        raise UsageError("depth must be at least 1")
    tree = dynamics.preimage_tree(c, a, args.depth)
    if args.format == "structured":
        _print_json(tree.as_json())
        return EXIT_OK
    print("c = %s, a = %s, depth %d" % (format_rat(c), format_rat(a), args.depth))
    for k, level in enumerate(tree.levels, start=1):
        values = ", ".join(format_rat(n.value) for n in level) or "(none)"
        print("  level %d: %s" % (k, values))
    print("signature: %s" % ",".join(str(s) for s in tree.signature()))
    print("distinct values across levels: %d" % tree.union_count())
    return EXIT_OK


def cmd_critical(args, config) -> int:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    data = dynamics.critical_avalues(args.n)
    if args.format == "structured":
        _print_json({
            "n": args.n,
            "critical_poly_c": _poly_json(data.crit_poly_c),
            "avalue_minpoly": _poly_json(data.avalue_minpoly),
        })
        return EXIT_OK
    print("critical parameter polynomial (in c): %s"
          % data.crit_poly_c.format("c"))
    print("critical value polynomial (in a):     %s"
          % data.avalue_minpoly.format("a"))
    return EXIT_OK


def cmd_model(args, config) -> int:
    if args.tag in ("224", "242", "2222"):
        model = models.arrangement_curve(args.tag)
    else:
        try:
            depth = int(args.tag)
        except ValueError:
            raise UsageError("--tag must be 224, 242, 2222, or a depth >= 2")
        if depth < 2:
            raise UsageError("model depth must be at least 2")
        model = models.ideal_j(depth)
    if args.format == "structured":
        _print_json({
            "tag": args.tag,
            "variables": list(model.var_names),
            "generators": [g.format(model.var_names) for g in model.generators],
        })
        return EXIT_OK
    print(model.export_text())
    return EXIT_OK


def _curve_payload(fiber) -> dict:
    out = fiber.as_json()
    out["equation"] = str(fiber.curve)
    return out


def cmd_ec(args, config) -> int:
    digits = int(config.get("display_digits", "6"))
    trial_bound = int(config.get("trial_bound", DEFAULT_TRIAL_BOUND))
    rho_steps = int(config.get("rho_steps", DEFAULT_RHO_STEPS))

    if args.ec_command == "specialize-e24":
        fiber = elliptic.specialize_e24(_rat(args.a))
        if args.format == "structured":
            _print_json(_curve_payload(fiber))
        else:
            print(fiber.curve)
            print("section T = %s" % fiber.torsion_point)
            print("delta = %s, singular = %s" % (format_rat(fiber.delta),
                                                 fiber.singular))
            if fiber.j is not None:
                print("j = %s (~%s)" % (format_rat(fiber.j),
                                        _display_float(fiber.j, digits)))
        return EXIT_OK

    if args.ec_command == "specialize-e222":
        fiber = elliptic.specialize_e222(_rat(args.a))
        if args.format == "structured":
            _print_json(_curve_payload(fiber))
        else:
            print(fiber.curve)
            print("sections P = %s, Q = %s" % (fiber.p_point, fiber.q_point))
            print("delta = %s, singular = %s" % (format_rat(fiber.delta),
                                                 fiber.singular))
            if fiber.j is not None:
                print("j = %s (~%s)" % (format_rat(fiber.j),
                                        _display_float(fiber.j, digits)))
        return EXIT_OK

    if args.ec_command == "curve-244":
        curve, point = elliptic.curve_244()
        if args.format == "structured":
            _print_json({"curve": curve.as_json(), "point": point.as_json()})
        else:
            print(curve)
            print("infinite-order point: %s" % point)
        return EXIT_OK

    curve = elliptic.WeierstrassCurve.from_coeffs(
        _rat(args.a1), _rat(args.a2), _rat(args.a3), _rat(args.a4), _rat(args.a6))

    if args.ec_command == "order":
        point = elliptic.ECPoint.affine(_rat(args.x), _rat(args.y))
        try:
            order = elliptic.point_order(curve, point)
        except elliptic.OffCurveError as exc:
            raise UsageError(str(exc))
        if args.format == "structured":
            _print_json({"order": order})
        else:
            print("order: %s" % ("infinite" if order is None else order))
        return EXIT_OK

    if args.ec_command == "torsion":
        try:
            group = elliptic.torsion_subgroup(curve, trial_bound=trial_bound,
                                              rho_steps=rho_steps,
                                              method=args.method)
        except FactorBudgetExceeded as exc:
            print("error: %s" % exc, file=sys.stderr)
            return EXIT_CHECK_FAILED
        if args.format == "structured":
            _print_json({
                "invariants": list(group.invariants),
                "generators": [p.as_json() for p in group.generators],
                "points": [p.as_json() for p in group.points],
            })
        else:
            print("torsion subgroup: %s (order %d)" % (group, group.order))
            for gen in group.generators:
                print("  generator %s" % gen)
        return EXIT_OK

    raise UsageError("unknown ec subcommand %r" % args.ec_command)


def _default_checkpoint(strategy: str, target: str, shard_index: int):
    directory = os.environ.get(CHECKPOINT_DIR_ENV)
    if not directory:
        return None
    name = "%s-%s-%d.ckpt" % (strategy, target.replace(",", ""), shard_index)
    return os.path.join(directory, name)


def _search_worker(payload: dict) -> list[dict]:
    """One shard, run in a worker process; returns record JSON dicts."""
    cfg = search.SearchConfig(
        height_bound=payload["height_bound"], depth=payload["depth"],
        target=tuple(payload["target"]), shard=tuple(payload["shard"]),
        checkpoint_path=payload["checkpoint"])
    scan = {"thirdpair": search.scan_thirdpair,
            "forward": search.scan_forward}[payload["strategy"]]
    return [record.as_json() for record in scan(cfg, resume=payload["resume"])]


def cmd_search(args, config) -> int:
    target = tuple(int(part) for part in args.target.split(","))
    if args.shard:
        try:
            index, total = args.shard.split("/")
            shard = (int(index), int(total))
        except ValueError:
            raise UsageError("--shard expects INDEX/TOTAL")
    else:
        shard = (0, 1)
    height_bound = args.height_bound or int(config.get("height_bound", "0"))
    if height_bound < 1:
        raise UsageError("--height-bound must be at least 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if args.jobs > 1 and args.shard:
        raise UsageError("--jobs partitions the scan itself; drop --shard")

    def emit(record_json: dict, count: int):
        if args.format == "structured":
            _print_json(record_json)
        else:
            print("hit %d: c = %s, a = %s, signature %s" %
                  (count, record_json["c"], record_json["a"],
                   ",".join(map(str, record_json["signature"]))))

    count = 0
    if args.jobs == 1:
        checkpoint = args.checkpoint or _default_checkpoint(
            args.strategy, args.target, shard[0])
        try:
            cfg = search.SearchConfig(height_bound=height_bound,
                                      depth=args.depth, target=target,
                                      shard=shard, checkpoint_path=checkpoint)
            scan = {"thirdpair": search.scan_thirdpair,
                    "forward": search.scan_forward}[args.strategy]
            for record in scan(cfg, resume=args.resume):
                count += 1
                emit(record.as_json(), count)
        except ValueError as exc:
            raise UsageError(str(exc))
    else:
        # independent shard workers; merging is a set union re-sorted by (c, a)
        import multiprocessing

        payloads = []
        for idx in range(args.jobs):
            checkpoint = None
            if args.checkpoint:
                checkpoint = "%s.shard%d" % (args.checkpoint, idx)
            else:
                checkpoint = _default_checkpoint(args.strategy, args.target, idx)
            payloads.append({
                "strategy": args.strategy, "height_bound": height_bound,
                "depth": args.depth, "target": list(target),
                "shard": [idx, args.jobs], "checkpoint": checkpoint,
                "resume": args.resume,
            })
        with multiprocessing.Pool(processes=args.jobs) as pool:
            shards = pool.map(_search_worker, payloads)
        merged: dict[tuple, dict] = {}
        for records in shards:
            for payload in records:
                key = (parse_rat(payload["c"]), parse_rat(payload["a"]))
                if key in merged:
                    merged[key]["provenance"].extend(payload["provenance"])
                else:
                    merged[key] = payload
        for key in sorted(merged):
            count += 1
            emit(merged[key], count)
    if args.format == "human":
        print("%d record(s)" % count)
    return EXIT_OK


def cmd_verify_paper(args, config) -> int:
    try:
        results = verify.run_checks(args.section)
    except ValueError as exc:
        raise UsageError(str(exc))
    failed = 0
    for result in results:
        if args.format == "structured":
            _print_json(result.as_json())
        else:
            print(result.line())
        failed += 0 if result.passed else 1
    if args.format == "human":
        print("%d/%d checks passed" % (len(results) - failed, len(results)))
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


# --------------------------------------------------------------------------
# argument wiring
# --------------------------------------------------------------------------

_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def _rational_friendly(parser: argparse.ArgumentParser):
    """Let option values like -24361/14400 pass as values, not flags, on the
    parser and every subparser under it."""
    parser._negative_number_matcher = _NEGATIVE_RATIONAL
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for child in action.choices.values():
                _rational_friendly(child)
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadpreim",
        description="rational pre-image trees, pre-image curve models, and "
                    "arrangement searches for x^2 + c")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="key = value settings file")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = dict(choices=("human", "structured"), default="human")

    p_tree = sub.add_parser("tree", help="rational pre-image tree of a under f_c")
    p_tree.add_argument("--c", required=True)
    p_tree.add_argument("--a", required=True)
    p_tree.add_argument("--depth", type=int, required=True)
    p_tree.add_argument("--format", **fmt)
    p_tree.set_defaults(func=cmd_tree)

    p_crit = sub.add_parser("critical", help="critical parameter and value polynomials")
    p_crit.add_argument("--n", type=int, required=True)
    p_crit.add_argument("--format", **fmt)
    p_crit.set_defaults(func=cmd_critical)

    p_model = sub.add_parser("model", help="projective pre-image curve models")
    p_model.add_argument("--tag", required=True,
                         help="224, 242, 2222, or a tree depth for the full model")
    p_model.add_argument("--format", **fmt)
    p_model.set_defaults(func=cmd_model)

    p_ec = sub.add_parser("ec", help="elliptic curve operations")
    ec_sub = p_ec.add_subparsers(dest="ec_command", required=True)

    for name in ("specialize-e24", "specialize-e222"):
        p = ec_sub.add_parser(name)
        p.add_argument("--a", required=True)
        p.add_argument("--format", **fmt)
        p.set_defaults(func=cmd_ec)

    p_244 = ec_sub.add_parser("curve-244")
    p_244.add_argument("--format", **fmt)
    p_244.set_defaults(func=cmd_ec)

    p_order = ec_sub.add_parser("order")
    for coeff in ("a1", "a2", "a3", "a4", "a6"):
        p_order.add_argument("--" + coeff, default="0")
    p_order.add_argument("--x", required=True)
    p_order.add_argument("--y", required=True)
    p_order.add_argument("--format", **fmt)
    p_order.set_defaults(func=cmd_ec)

    p_tors = ec_sub.add_parser("torsion")
    for coeff in ("a1", "a2", "a3", "a4", "a6"):
        p_tors.add_argument("--" + coeff, default="0")
    p_tors.add_argument("--method", choices=("auto", "lutz-nagell", "division"),
                        default="auto")
    p_tors.add_argument("--format", **fmt)
    p_tors.set_defaults(func=cmd_ec)

    p_search = sub.add_parser("search", help="height-bounded arrangement search")
    p_search.add_argument("--strategy", choices=("thirdpair", "forward"),
                          default="thirdpair")
    p_search.add_argument("--height-bound", type=int, default=0)
    p_search.add_argument("--depth", type=int, required=True)
    p_search.add_argument("--target", required=True,
                          help="comma-separated per-level counts, e.g. 2,4,6")
    p_search.add_argument("--shard", help="INDEX/TOTAL")
    p_search.add_argument("--jobs", type=int, default=1,
                          help="run this many shards in worker processes "
                               "and merge the results")
    p_search.add_argument("--checkpoint", help="checkpoint file path")
    p_search.add_argument("--resume", action="store_true")
    p_search.add_argument("--format", **fmt)
    p_search.set_defaults(func=cmd_search)

    p_verify = sub.add_parser("verify-paper",
                              help="replay the published reference values")
    p_verify.add_argument("--section", default=None,
                          help="one of: %s (default: all fast sections)"
                               % ", ".join(verify.available_sections()))
    p_verify.add_argument("--format", **fmt)
    p_verify.set_defaults(func=cmd_verify_paper)

    return _rational_friendly(parser)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed the message; normalize the usage exit code
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        config = load_config(args.config)
        return args.func(args, config)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except search.CheckpointError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
