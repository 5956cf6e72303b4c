"""Command-line driver, result cache, and report emitter.

Subcommands: ``list``, ``verify``, ``cong``, ``integrality``, ``constants``,
``report``.  Exit codes: 0 all PASS, 1 at least one FAIL, 2 at least one
INCONCLUSIVE (and no FAIL), 64 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional

from . import runner
from .registry import Catalog, ConjectureEntry, load_catalog

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 64, not argparse's default 2
        raise UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="conjseries", description=__doc__)
    sub = p.add_subparsers(dest="command")

    def common(sp, ids=True):
        if ids:
            sp.add_argument("ids", nargs="*", help="entry ids")
            sp.add_argument("--all", action="store_true", dest="all_entries")
        sp.add_argument("--catalog", default=None,
                        help="path to a catalog JSON (default: built-in)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--jobs", type=int, default=None)

    sp = sub.add_parser("list", description="List catalog entries.")
    sp.add_argument("--kind", default=None)
    sp.add_argument("--status", default=None)
    sp.add_argument("--catalog", default=None)

    sp = sub.add_parser("verify",
                        description="Verify series entries numerically.")
    common(sp)
    sp.add_argument("--digits", type=int, default=None)
    sp.add_argument("--max-terms", type=int, default=None)

    sp = sub.add_parser("cong", description="Check congruence entries.")
    common(sp)
    sp.add_argument("--pmax", type=int, default=runner.DEFAULT_PRIME_MAX)

    sp = sub.add_parser("integrality",
                        description="Check integrality entries.")
    common(sp)
    sp.add_argument("--nmax", type=int, default=runner.DEFAULT_N_MAX)

    sp = sub.add_parser("constants",
                        description="Print supported constants.")
    sp.add_argument("--digits", type=int, required=True)

    sp = sub.add_parser("report",
                        description="Run every suite and emit a full report.")
    common(sp, ids=False)
    sp.add_argument("--digits", type=int, default=None)
    sp.add_argument("--max-terms", type=int, default=None)
    sp.add_argument("--pmax", type=int, default=runner.DEFAULT_PRIME_MAX)
    sp.add_argument("--nmax", type=int, default=runner.DEFAULT_N_MAX)
    return p


# ---------------------------------------------------------------------------
# cache

def _cache_dir() -> Optional[Path]:
    d = os.environ.get("CONJSERIES_CACHE")
    if not d:
        return None
    path = Path(d)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _cache_key(task: dict) -> str:
    blob = json.dumps(task, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def _cache_get(cache: Optional[Path], key: str) -> Optional[dict]:
    if cache is None:
        return None
    f = cache / f"{key}.json"
    if not f.exists():
        return None
    try:
        return json.loads(f.read_text())
    except (OSError, json.JSONDecodeError):
        return None


def _cache_put(cache: Optional[Path], key: str, result: dict) -> None:
    if cache is None:
        return
    tmp = cache / f".{key}.tmp"
    tmp.write_text(json.dumps(result, sort_keys=True))
    tmp.replace(cache / f"{key}.json")


# ---------------------------------------------------------------------------
# workers (module-level, picklable for the process pool)

def _run_task(arg):
    entry_dict, mode, params = arg
    entry = ConjectureEntry.from_dict(entry_dict)
    t0 = time.perf_counter()
    if mode == "verify":
        rep = runner.verify_entry(entry, digits=params.get("digits"),
                                  max_terms=params.get("max_terms"))
        out = rep.as_dict()
    elif mode == "cong":
        rep = runner.check_congruence_entry(entry, prime_max=params["pmax"],
                                            keep_details=True)
        out = rep.as_dict()
    else:
        rep = runner.check_integrality_entry(entry, n_max=params["nmax"])
        out = rep.as_dict()
    out["kind"] = entry.kind
    out["anomalies"] = list(entry.anomalies)
    out["expected_verdict"] = entry.expected_verdict
    out["t_ms"] = round((time.perf_counter() - t0) * 1000, 1)
    return out


def _run_all(tasks: List[tuple], jobs: Optional[int],
             cache: Optional[Path]) -> List[dict]:
    """Order-stable execution with cache lookup in the parent process."""
    results: List[Optional[dict]] = [None] * len(tasks)
    keys: List[str] = []
    pending = []
    for i, (entry_dict, mode, params) in enumerate(tasks):
        key = _cache_key({"engine": runner.ENGINE_VERSION, "mode": mode,
                          "id": entry_dict["id"], "params": params})
        keys.append(key)
        hit = _cache_get(cache, key)
        if hit is not None:
            results[i] = hit
        else:
            pending.append(i)
    if pending:
        if jobs and jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                fresh = list(ex.map(_run_task, [tasks[i] for i in pending]))
        else:
            fresh = [_run_task(tasks[i]) for i in pending]
        for i, out in zip(pending, fresh):
            results[i] = out
            _cache_put(cache, keys[i], out)
    return results  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# rendering

def _exit_code(results: List[dict]) -> int:
    verdicts = {r["verdict"] for r in results}
    if "FAIL" in verdicts:
        return EXIT_FAIL
    if "INCONCLUSIVE" in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _text_line(r: dict) -> str:
    tags = ",".join(r.get("anomalies", ()))
    tags = f"  [{tags}]" if tags else ""
    t_ms = r.get("t_ms", 0)
    if r["kind"] in ("series", "derivative-series"):
        bound = r.get("delta_bound") or "n/a"
        terms = r.get("terms_used")
        line = (f"{r['id']:<14} {r['verdict']:<13} |lhs-rhs|<={bound:<10} "
                f"terms={terms}  t={t_ms}ms{tags}")
        if r["verdict"] != "PASS" and r.get("reason"):
            line += f"\n{'':14}   reason: {r['reason']}"
        return line
    if r["kind"] == "congruence":
        line = (f"{r['id']:<14} {r['verdict']:<13} checked={r['checked']} "
                f"skipped={r['skipped']}  t={t_ms}ms{tags}")
        wit = [f"p={d['p']}:(x,y)=({d['witness'][0]},{d['witness'][1]})"
               for d in r.get("details", ()) if d.get("witness")]
        if wit:
            line += "\n" + _wrap_indent("witnesses: " + " ".join(wit))
        for f in r.get("failures", ()):
            line += f"\n{'':14}   FAIL p={f['p']}: {f['reason']}"
        return line
    line = (f"{r['id']:<14} {r['verdict']:<13} checked={r['checked']} "
            f"skipped={r['skipped']}  t={t_ms}ms{tags}")
    for f in r.get("failures", ()):
        line += f"\n{'':14}   FAIL n={f['n']}: {f['reason']}"
    return line


def _wrap_indent(text: str, width: int = 100, indent: int = 17) -> str:
    import textwrap
    return textwrap.fill(text, width=width, initial_indent=" " * indent,
                         subsequent_indent=" " * indent)


def _emit(results: List[dict], fmt: str, command: str, out) -> None:
    if fmt == "json":
        doc = {"engine_version": runner.ENGINE_VERSION,
               "command": command,
               "results": results}
        json.dump(doc, out, indent=1, sort_keys=True)
        out.write("\n")
    else:
        for r in results:
            out.write(_text_line(r) + "\n")


# ---------------------------------------------------------------------------
# subcommands

def _select(cat: Catalog, args, kinds) -> List[ConjectureEntry]:
    entries = [e for e in cat.entries if e.kind in kinds]
    if getattr(args, "all_entries", False):
        if args.ids:
            raise UsageError("give entry ids or --all, not both")
        return entries
    if not args.ids:
        raise UsageError("no entry ids given (or use --all)")
    by_id = {e.id: e for e in entries}
    out = []
    for eid in args.ids:
        if eid not in by_id:
            raise UsageError(f"unknown or wrong-kind entry id {eid!r}")
        out.append(by_id[eid])
    return out


def _cmd_list(args, out) -> int:
    cat = load_catalog(args.catalog)
    for e in cat.select(kind=args.kind, status=args.status):
        out.write(f"{e.id:<14} {e.kind:<18} {e.status:<17} {e.source}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    cat = load_catalog(args.catalog)
    entries = _select(cat, args, ("series", "derivative-series"))
    params = {"digits": args.digits, "max_terms": args.max_terms}
    tasks = [(e.as_dict(), "verify", params) for e in entries]
    results = _run_all(tasks, args.jobs, _cache_dir())
    _emit(results, args.format, "verify", out)
    return _exit_code(results)


def _cmd_cong(args, out) -> int:
    cat = load_catalog(args.catalog)
    entries = _select(cat, args, ("congruence",))
    tasks = [(e.as_dict(), "cong", {"pmax": args.pmax}) for e in entries]
    results = _run_all(tasks, args.jobs, _cache_dir())
    _emit(results, args.format, "cong", out)
    return _exit_code(results)


def _cmd_integrality(args, out) -> int:
    cat = load_catalog(args.catalog)
    entries = _select(cat, args, ("integrality",))
    tasks = [(e.as_dict(), "integrality", {"nmax": args.nmax})
             for e in entries]
    results = _run_all(tasks, args.jobs, _cache_dir())
    _emit(results, args.format, "integrality", out)
    return _exit_code(results)


_CONSTANTS = [
    ("pi", ["pi"]),
    ("euler_gamma", ["gamma"]),
    ("sqrt(2)", ["sqrt", 2]),
    ("sqrt(3)", ["sqrt", 3]),
    ("log(2)", ["log", [2, 1]]),
    ("log(3)", ["log", [3, 1]]),
    ("zeta(2)", ["zeta", 2]),
    ("zeta(3)", ["zeta", 3]),
    ("zeta(4)", ["zeta", 4]),
    ("zeta(5)", ["zeta", 5]),
    ("zeta(6)", ["zeta", 6]),
    ("zeta(7)", ["zeta", 7]),
    ("zeta(8)", ["zeta", 8]),
    ("zeta(9)", ["zeta", 9]),
    ("beta(2)", ["beta", 2]),
    ("beta(4)", ["beta", 4]),
    ("Lm3(2)", ["lm3", 2]),
    ("Lm3(4)", ["lm3", 4]),
    ("zeta(5,3)", ["zeta53"]),
]


def _cmd_constants(args, out) -> int:
    from .balls import decimal_str
    from .constants import eval_const_expr

    if args.digits < 5:
        raise UsageError("digits must be >= 5")
    prec = 4 * args.digits + 64
    for name, expr in _CONSTANTS:
        val = eval_const_expr(expr, prec)
        out.write(f"{name:<12} {decimal_str(val.re, args.digits)}\n")
    return EXIT_OK


def _cmd_report(args, out) -> int:
    cat = load_catalog(args.catalog)
    tasks = []
    for e in cat.entries:
        if e.kind in ("series", "derivative-series"):
            tasks.append((e.as_dict(), "verify",
                          {"digits": args.digits,
                           "max_terms": args.max_terms}))
        elif e.kind == "congruence":
            tasks.append((e.as_dict(), "cong", {"pmax": args.pmax}))
        else:
            tasks.append((e.as_dict(), "integrality", {"nmax": args.nmax}))
    results = _run_all(tasks, args.jobs, _cache_dir())
    _emit(results, args.format, "report", out)
    return _exit_code(results)


_DISPATCH = {
    "list": _cmd_list,
    "verify": _cmd_verify,
    "cong": _cmd_cong,
    "integrality": _cmd_integrality,
    "constants": _cmd_constants,
    "report": _cmd_report,
}


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
        if getattr(args, "digits", None) is not None and args.digits < 5:
            raise UsageError("digits must be >= 5")
        if getattr(args, "jobs", None) is not None and args.jobs < 1:
            raise UsageError("jobs must be >= 1")
        return _DISPATCH[args.command](args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
