"""Command-line front end.

Two subcommands:

  run   execute a registered verification campaign deterministically
        (exit 0 pass, 1 predicate failure, 2 usage error, 3 budget exceeded)
  gen   write an exact instance file for one of the generator families,
        re-verifying the target type's invariants before anything is written

Reports are deterministic for a fixed configuration: identical flags produce
byte-identical output in both formats (timings are never embedded).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional

from . import generators as gen
from . import ringlab, spectra
from .campaigns import (
    EXIT_BUDGET,
    EXIT_FAIL,
    EXIT_USAGE,
    BadCampaignConfig,
    CampaignConfig,
    UnknownTheorem,
    list_theorems,
    run_campaign,
)
from .errors import BudgetExceeded, FormatError, OsdrazinError
from .intertwine import IntertwinePair
from .matrix import SquareMatrix
from .rings import QQI, IntegersMod, ring_from_name
from .transfer import JacobsonQuad

GEN_FAMILIES = (
    "classical-quad",
    "solved-quad",
    "case-II-quad",
    "idempotent-pair",
    "planted-jordan",
    "exhaustive-ring",
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="osdrazin",
        description=(
            "Exact verification of one-sided Drazin-type inverses: "
            "constructions, transfers, spectra, and finite-ring audits."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser(
        "run",
        help="run a verification campaign",
        epilog="registered theorem ids:\n"
        + "\n".join(f"  {tid:24s} {text}" for tid, text in list_theorems()),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    run_p.add_argument("--theorem", required=True, help="registered theorem id")
    run_p.add_argument("--trials", type=int, default=100)
    run_p.add_argument("--dim", type=int, default=3)
    run_p.add_argument(
        "--scalar",
        default="rational",
        help="rational | gaussian | mod:<m>",
    )
    run_p.add_argument("--seed", type=int, default=0)
    run_p.add_argument("--family", default="default")
    run_p.add_argument("--budget-seconds", type=float, default=None)
    run_p.add_argument("--out", default=None, help="write the report here")
    run_p.add_argument("--format", choices=("text", "structured"), default="text")

    gen_p = sub.add_parser("gen", help="generate an exact instance file")
    gen_p.add_argument("--family", required=True, choices=GEN_FAMILIES)
    gen_p.add_argument("--dim", type=int, default=3)
    gen_p.add_argument("--scalar", default="rational")
    gen_p.add_argument("--seed", type=int, default=0)
    gen_p.add_argument(
        "--plant",
        type=int,
        default=None,
        help="planted index for the quad families",
    )
    gen_p.add_argument(
        "--level", type=int, default=1, help="pair level n for idempotent-pair"
    )
    gen_p.add_argument(
        "--rank",
        type=int,
        default=None,
        help="idempotent rank r (0 gives the zero pair)",
    )
    gen_p.add_argument(
        "--jordan",
        default=None,
        help="planted structure 'ev:size;ev:size' for planted-jordan",
    )
    gen_p.add_argument("--out", default=None, help="write the instance here")
    return parser


# -- report rendering -----------------------------------------------------------


def _render_matrix(lines: list, name: str, doc: dict, indent: str) -> None:
    lines.append(f"{indent}{name} (scalar {doc['scalar']}):")
    for row in doc["entries"]:
        lines.append(indent + "  [" + ", ".join(row) + "]")


def _render_text(doc: dict) -> str:
    lines = []
    lines.append(f"campaign {doc['theorem']}")
    lines.append(f"statement: {doc['statement']}")
    cfg = doc["config"]
    lines.append(
        "config: trials={trials} dim={dim} scalar={scalar} seed={seed} "
        "family={family} budget_seconds={budget_seconds}".format(**cfg)
    )
    verdict = "PASS" if doc["exit_status"] == 0 else (
        "BUDGET-EXCEEDED" if doc["budget_exhausted"] else "FAIL"
    )
    lines.append(
        f"result: {verdict} ({doc['passes']}/{doc['trials_run']} trials passed, "
        f"{doc['trials_requested']} requested)"
    )
    if doc["indices_observed"]:
        lines.append("indices observed:")
        for key, hist in doc["indices_observed"].items():
            spread = " ".join(f"{v}x{n}" for v, n in hist.items())
            lines.append(f"  {key}: {spread}")
    for note in doc["notes"]:
        lines.append(f"note: {note}")
    if doc["failure_details"]:
        lines.append(f"failures ({len(doc['failure_details'])}):")
        for item in doc["failure_details"]:
            rep = item["report"]
            failed = [name for name, ok in rep["checks"] if not ok]
            lines.append(
                f"  trial {item['trial']} [{rep['instance']}] "
                f"failed: {', '.join(failed)}"
            )
            for note in rep.get("notes", []):
                lines.append(f"    note: {note}")
            for name, mdoc in rep.get("matrices", {}).items():
                _render_matrix(lines, name, mdoc, "    ")
    else:
        lines.append("failures: none")
    return "\n".join(lines) + "\n"


def _emit(payload: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = CampaignConfig(
        theorem=args.theorem,
        trials=args.trials,
        dim=args.dim,
        scalar=args.scalar,
        seed=args.seed,
        family=args.family,
        budget_seconds=args.budget_seconds,
    )
    try:
        doc, status = run_campaign(cfg)
    except (UnknownTheorem, BadCampaignConfig) as exc:
        sys.stderr.write(f"osdrazin: {exc}\n")
        return EXIT_USAGE
    if args.format == "structured":
        payload = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        payload = _render_text(doc)
    _emit(payload, args.out)
    return status


# -- instance generation ---------------------------------------------------------


def _parse_jordan(raw: str, ring) -> spectra.JordanSpec:
    blocks = []
    for chunk in raw.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        value, _, size = chunk.rpartition(":")
        if not value:
            raise BadCampaignConfig(
                f"bad jordan block {chunk!r}; expected 'eigenvalue:size'"
            )
        try:
            parsed = ring.parse(value)
        except FormatError:
            # a complex eigenvalue promotes the whole structure to the
            # Gaussian rationals (JordanSpec normalizes the scalar domain)
            parsed = QQI.parse(value)
        blocks.append((parsed, int(size)))
    if not blocks:
        raise BadCampaignConfig("empty jordan structure")
    return spectra.JordanSpec(tuple(blocks))


def _gen_instance(args: argparse.Namespace) -> dict:
    ring = ring_from_name(args.scalar)
    rng = random.Random(args.seed)
    family = args.family
    seed_stamp = {"family": family, "seed": args.seed}

    if family in ("classical-quad", "solved-quad", "case-II-quad"):
        maker = {
            "classical-quad": gen.classical_quad,
            "solved-quad": gen.solved_quad,
            "case-II-quad": gen.case_ii_quad,
        }[family]
        quad = maker(rng, ring, args.dim, args.plant)
        doc = quad.to_doc()
        JacobsonQuad.from_doc(doc)  # invariants re-verified on the parse path
        return {"kind": "jacobson-quad", **seed_stamp, **doc}

    if family == "idempotent-pair":
        if args.rank == 0:
            zero = SquareMatrix.zeros(ring, args.dim)
            pair = IntertwinePair(zero, zero, args.level)
        elif args.rank is not None:
            s1 = gen.random_invertible(rng, ring, args.dim)
            s2 = gen.random_invertible(rng, ring, args.dim)
            if not 0 < args.rank <= args.dim:
                raise BadCampaignConfig("rank must lie in 0..dim")
            a = gen.projection_onto_columns(s1, args.rank)
            rows = [
                list(s1.rows[i][: args.rank]) + list(s2.rows[i][args.rank :])
                for i in range(args.dim)
            ]
            frame = SquareMatrix(ring, rows)
            if frame.try_inverse() is None:
                raise OsdrazinError("sampled column frame was singular; reseed")
            b = gen.projection_onto_columns(frame, args.rank)
            pair = IntertwinePair(a, b, args.level)
        else:
            pair = gen.idempotent_pair(rng, ring, args.dim, args.level)
        doc = pair.to_doc()
        IntertwinePair.from_doc(doc)
        return {"kind": "intertwined-pair", **seed_stamp, **doc}

    if family == "planted-jordan":
        if args.jordan:
            spec = _parse_jordan(args.jordan, ring)
        else:
            blocks = []
            remaining = args.dim
            while remaining:
                size = rng.randint(1, min(2, remaining))
                blocks.append((rng.randint(-2, 2), size))
                remaining -= size
            spec = spectra.JordanSpec(tuple(blocks))
        matrix = spectra.jordan_realize(spec, rng)
        for ev in spec.eigenvalues():
            if spectra.point_index(matrix, ev) != spec.max_block_size(ev):
                raise OsdrazinError(
                    "planted point index failed re-verification; generator bug"
                )
        return {
            "kind": "planted-jordan",
            **seed_stamp,
            "spec": spec.to_doc(),
            "matrix": matrix.to_doc(),
            "point_indices": {
                spec.ring.format(ev): spec.max_block_size(ev)
                for ev in spec.eigenvalues()
            },
        }

    if family == "exhaustive-ring":
        if not isinstance(ring, IntegersMod):
            raise BadCampaignConfig("exhaustive-ring needs --scalar mod:m")
        spec = ringlab.FiniteRingSpec(args.dim, ring.modulus)
        spec.check_budget()
        return {
            "kind": "exhaustive-ring",
            **seed_stamp,
            **spec.to_doc(),
            "element_count": spec.element_count,
            "index_bound": spec.index_bound,
        }

    raise BadCampaignConfig(f"unknown generator family {family!r}")


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        doc = _gen_instance(args)
    except (BadCampaignConfig, UnknownTheorem) as exc:
        sys.stderr.write(f"osdrazin: {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        sys.stderr.write(f"osdrazin: {exc}\n")
        return EXIT_BUDGET
    except OsdrazinError as exc:
        sys.stderr.write(f"osdrazin: invariant violation: {exc}\n")
        return EXIT_FAIL
    payload = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    _emit(payload, args.out)
    return 0


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command == "run":
            return _cmd_run(args)
        return _cmd_gen(args)
    except OsdrazinError as exc:
        sys.stderr.write(f"osdrazin: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
