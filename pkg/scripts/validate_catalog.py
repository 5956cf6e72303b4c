#!/usr/bin/env python3
"""Numerically validate every catalog entry through the engine.

Usage: validate_catalog.py [--only PREFIX ...] [--kind KIND] [--pmax P]
                           [--nmax N] [--digits D]
Prints one line per entry and exits nonzero on any unexpected verdict.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from conjseries.registry import load_catalog
from conjseries import runner


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", nargs="*", default=None)
    ap.add_argument("--kind", default=None)
    ap.add_argument("--pmax", type=int, default=runner.DEFAULT_PRIME_MAX)
    ap.add_argument("--nmax", type=int, default=runner.DEFAULT_N_MAX)
    ap.add_argument("--digits", type=int, default=None)
    args = ap.parse_args()

    cat = load_catalog(str(Path(__file__).resolve().parents[1]
                           / "src" / "conjseries" / "data" / "catalog.json"))
    bad = 0
    for entry in cat.entries:
        if args.kind and entry.kind != args.kind:
            continue
        if args.only and not any(entry.id == o or entry.id.startswith(o)
                                 for o in args.only):
            continue
        t0 = time.perf_counter()
        if entry.kind in ("series", "derivative-series"):
            rep = runner.verify_entry(entry, digits=args.digits)
            verdict = rep.verdict
            extra = (f"terms={rep.terms_used} prec={rep.precision_bits} "
                     f"lhs={rep.lhs}")
        elif entry.kind == "congruence":
            rep = runner.check_congruence_entry(entry, prime_max=args.pmax)
            verdict = rep.verdict
            extra = f"checked={rep.checked} skipped={rep.skipped}"
            if rep.failures:
                extra += f" first_fail={rep.failures[0]}"
        else:
            rep = runner.check_integrality_entry(entry, n_max=args.nmax)
            verdict = rep.verdict
            extra = f"checked={rep.checked} skipped={rep.skipped}"
            if rep.failures:
                extra += f" first_fail={rep.failures[0]}"
        dt = time.perf_counter() - t0
        ok = verdict == entry.expected_verdict
        if not ok:
            bad += 1
        mark = "ok " if ok else "BAD"
        print(f"{mark} {entry.id:<12} {verdict:<13} t={dt:6.2f}s  {extra}",
              flush=True)
    print(f"unexpected verdicts: {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
