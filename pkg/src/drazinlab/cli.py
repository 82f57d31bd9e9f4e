"""``drazinlab`` command line: compute, verify, search, lemmas.

Machine-readable JSON goes to stdout (or ``--out``); the human summary goes
to stderr.  Exit codes: 0 pass, 1 identity failure, 2 parse error,
3 dimension/field error, 4 conditions not met, 5 search space too large,
6 sampling exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from importlib.metadata import PackageNotFoundError, version

from .drazin import drazin
from .errors import (
    ConditionsNotMet,
    DimensionMismatch,
    ExhaustedAttempts,
    FieldMismatch,
    ParseError,
    SpaceTooLarge,
)
from .identities import DEFAULT_IDENTITIES, all_hold, lemma_suite, verify_pair
from .scalar import FieldTag
from .serialize import (
    drazin_result_to_json,
    matrix_from_json,
    pair_to_json,
    pairs_from_json,
    report_to_json,
)
from .witness import MODES, SearchSpec, generate

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_CONDITIONS = 4
EXIT_SPACE = 5
EXIT_SAMPLING = 6


def tool_version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        from . import __version__

        return __version__


def manifest(command: str, inputs=(), seed=None) -> dict:
    return {
        "command": command,
        "inputs": list(inputs),
        "seed": seed,
        "started_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "tool_version": tool_version(),
    }


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from None


def _emit(payload: dict, out: str | None):
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _say(msg: str):
    print(msg, file=sys.stderr)


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    return max(1, int(os.environ.get("DRAZINLAB_JOBS", "1")))


def _verify_one(job):
    pair, identities, depth = job
    return verify_pair(pair, identities, depth)


def _verify_many(pairs, identities, depth, jobs):
    work = [(p, identities, depth) for p in pairs]
    if jobs <= 1 or len(work) < 2:
        return [_verify_one(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_one, work, chunksize=max(1, len(work) // (4 * jobs))))


def _parse_identities(text: str | None):
    if not text:
        return DEFAULT_IDENTITIES
    names = tuple(x.strip() for x in text.split(",") if x.strip())
    unknown = set(names) - set(DEFAULT_IDENTITIES)
    if unknown:
        raise ParseError(f"unknown identities: {', '.join(sorted(unknown))}")
    return names


# -- commands -------------------------------------------------------------------


def cmd_compute(args) -> int:
    A = matrix_from_json(_load_json(args.input))
    res = drazin(A)
    payload = drazin_result_to_json(res)
    payload["manifest"] = manifest("compute", [args.input])
    _emit(payload, args.out)
    _say(f"index {res.index}; Drazin inverse written to {args.out or 'stdout'}")
    return EXIT_OK


def cmd_verify(args) -> int:
    pairs = pairs_from_json(_load_json(args.input))
    identities = _parse_identities(args.identities)
    unmet = [i for i, p in enumerate(pairs) if not p.satisfied]
    if unmet and not args.allow_unconditioned:
        payload = {
            "manifest": manifest("verify", [args.input]),
            "results": [{"pair": pair_to_json(p), "reports": []} for p in pairs],
        }
        _emit(payload, args.out)
        for i in unmet:
            _say(f"pair {i}: conditions not met {pairs[i].flags}")
        return EXIT_CONDITIONS
    todo = [p for p in pairs if p.satisfied]
    verdicts = iter(_verify_many(todo, identities, args.lemmas_depth, _jobs(args)))
    results, ok = [], True
    for i, p in enumerate(pairs):
        reports = next(verdicts) if p.satisfied else []
        ok &= all_hold(reports)
        results.append({"pair": pair_to_json(p), "reports": [report_to_json(r) for r in reports]})
        status = "conditions not met; flags only" if not p.satisfied else ("all hold" if all_hold(reports) else "FAILURE")
        _say(f"pair {i} {p.flags}: {status}")
        for r in reports:
            _say(f"  {'ok  ' if r.holds else 'FAIL'} {r.identity_name}{' (informational)' if r.informational else ''}")
    _emit({"manifest": manifest("verify", [args.input]), "results": results}, args.out)
    return EXIT_OK if ok else EXIT_IDENTITY


def cmd_search(args) -> int:
    spec = SearchSpec(
        field=FieldTag.parse(args.field),
        dimension=args.dim,
        mode=args.mode,
        count=args.count,
        seed=args.seed,
        require_noncommuting=args.noncommuting,
    )
    pairs = generate(spec)
    payload = {
        "manifest": manifest("search", seed=spec.seed),
        "spec": {
            "field": str(spec.field), "dimension": spec.dimension, "mode": spec.mode,
            "count": spec.count, "seed": spec.seed, "require_noncommuting": spec.require_noncommuting,
        },
        "pairs": [pair_to_json(p) for p in pairs],
    }
    ok = True
    if args.verify:
        verdicts = []
        for i, reports in enumerate(_verify_many(pairs, DEFAULT_IDENTITIES, args.lemmas_depth, _jobs(args))):
            holds = all_hold(reports)
            ok &= holds
            verdicts.append({
                "index": i,
                "holds": holds,
                "identities": {r.identity_name: r.holds for r in reports},
                "failures": [report_to_json(r) for r in reports if not r.holds and not r.informational],
            })
        payload["verdicts"] = verdicts
    _emit(payload, args.out)
    _say(f"{len(pairs)} pairs from {spec.mode} search over {spec.field}, n={spec.dimension}, seed={spec.seed}")
    if args.verify:
        _say(f"verification: {'all pass' if ok else 'FAILURES present'}")
    return EXIT_OK if ok else EXIT_IDENTITY


def _lemma_group(name: str) -> str:
    head = name.split()[0]
    return head.split("[")[0]


def cmd_lemmas(args) -> int:
    pairs = pairs_from_json(_load_json(args.input))
    for p in pairs:
        if not p.satisfied:
            _say(f"conditions not met {p.flags}")
            return EXIT_CONDITIONS
    results, ok = [], True
    for i, p in enumerate(pairs):
        reports = lemma_suite(p, max(args.depth, p.a.rows))
        table: dict[str, list[int]] = {}
        for r in reports:
            cell = table.setdefault(_lemma_group(r.identity_name), [0, 0])
            cell[0 if r.holds else 1] += 1
        ok &= all(r.holds for r in reports)
        results.append({
            "pair": pair_to_json(p),
            "table": {k: {"hold": v[0], "fail": v[1]} for k, v in table.items()},
            "reports": [report_to_json(r) for r in reports],
        })
        _say(f"pair {i}:")
        for k, (h, f) in table.items():
            _say(f"  {k:<6} {'hold' if not f else 'FAIL'}  ({h} hold, {f} fail)")
    _emit({"manifest": manifest("lemmas", [args.input]), "results": results}, args.out)
    return EXIT_OK if ok else EXIT_IDENTITY


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drazinlab", description="Exact Drazin inverses and pair identities")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Drazin inverse, index and spectral idempotent of a matrix")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="verify the product/sum identities for pairs")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.add_argument("--identities", help=f"comma list from {','.join(DEFAULT_IDENTITIES)}")
    p.add_argument("--lemmas-depth", type=int, default=None)
    p.add_argument("--allow-unconditioned", action="store_true")
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="generate condition pairs")
    p.add_argument("--field", default="gf:2")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--mode", choices=MODES, default="exhaustive")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--noncommuting", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--lemmas-depth", type=int, default=None)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("lemmas", help="run the supporting-lemma predicates on pairs")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lemmas)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _say(f"parse error: {exc}")
        return EXIT_PARSE
    except (DimensionMismatch, FieldMismatch) as exc:
        _say(f"dimension/field error: {exc}")
        return EXIT_DIMENSION
    except ConditionsNotMet as exc:
        _say(f"conditions not met: {exc}")
        return EXIT_CONDITIONS
    except SpaceTooLarge as exc:
        _say(f"search space too large: {exc}")
        return EXIT_SPACE
    except ExhaustedAttempts as exc:
        _say(f"sampling exhausted: {exc}")
        return EXIT_SAMPLING
    except ValueError as exc:
        _say(f"invalid arguments: {exc}")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
