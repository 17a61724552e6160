# vim: ts=4:sw=4:sts=4:et:ft=python
# -*- mode: python; tab-width: 4; indent-tabs-mode: nil; -*-
#
# GNU General Public License v3.0+
# SPDX-License-Identifier: GPL-3.0-or-later
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
#
# Copyright (c) 2026 oØ.o (@o0-o)
#
# This file is part of the o0_o.agcode Ansible Collection.

"""
Command-line front end.

Run as::

    python -m ansible_collections.o0_o.agcode.plugins.filter_utils.cli \\
        verify --family as --q 8 --m 3 --r 20 --samples 10000 --seed 1

Exit codes: 0 success, 1 I/O failure, 2 invalid input (a violated
hypothesis or bad field parameters), 3 a failed check.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from ansible.utils.display import Display

from ansible_collections.o0_o.agcode.plugins.filter_utils import families
from ansible_collections.o0_o.agcode.plugins.filter_utils.distance import (
    DEFAULT_BUDGET,
    DEFAULT_DUAL_BUDGET,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.errors import (
    FieldError,
    HypothesisError,
    ShapeError,
    VerificationError,
)
from ansible_collections.o0_o.agcode.plugins.filter_utils.report import (
    VerificationReport,
    dump_json,
    format_matrix,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_INPUT = 2
EXIT_FAILED = 3

display = Display()


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )


def _family_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--family",
        required=True,
        choices=[variant.value for variant in families.Variant],
    )
    parser.add_argument("--q", type=int, required=True, help="Prime power")
    parser.add_argument("--m", type=int, help="Exponent of x (as)")
    parser.add_argument("--s", type=int, help="Subgroup order (herm-mult)")
    parser.add_argument(
        "--k", type=int, help="Subspace dimension (herm-add)"
    )
    parser.add_argument(
        "--modulus",
        type=_int_list,
        help="Modulus of GF(q^2) as c_k,...,c_0",
    )
    parser.add_argument(
        "--subspace-basis",
        type=_int_list,
        help="Basis of V_k as representation integers (herm-add)",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Increase verbosity (-vvv traces every build)",
    )


def _budget_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--extended",
        action="store_true",
        help="Sweep every radius 0 .. n+2g-2",
    )
    parser.add_argument(
        "--distance-budget", type=int, default=DEFAULT_BUDGET
    )
    parser.add_argument(
        "--dual-distance-budget", type=int, default=DEFAULT_DUAL_BUDGET
    )
    parser.add_argument(
        "--samples",
        type=int,
        default=0,
        help="Sampled codewords when exhaustion is over budget",
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--json", type=Path, help="Write the report here, not to stdout"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agcode",
        description=(
            "Build and verify self-orthogonal AG codes on y^q + y = x^m."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser(
        "build", help="Write a generator matrix and a JSON sidecar"
    )
    _family_options(build)
    build.add_argument("--r", type=int, required=True)
    build.add_argument(
        "--out", type=Path, help="Matrix file; stdout when omitted"
    )

    verify = commands.add_parser("verify", help="Verify one radius")
    _family_options(verify)
    verify.add_argument("--r", type=int, required=True)
    _budget_options(verify)

    sweep = commands.add_parser("sweep", help="Verify every radius")
    _family_options(sweep)
    _budget_options(sweep)

    quantum = commands.add_parser(
        "quantum", help="Quantum code parameters of an 'as' code"
    )
    _family_options(quantum)
    quantum.add_argument("--r", type=int, required=True)
    quantum.add_argument("--json", type=Path)
    return parser


def _spec(args: argparse.Namespace) -> families.FamilySpec:
    return families.validate(
        args.family,
        args.q,
        m=args.m,
        s=args.s,
        k=args.k,
        subspace_basis=args.subspace_basis,
        modulus=args.modulus,
    )


def _emit(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def cmd_build(args: argparse.Namespace) -> int:
    spec = _spec(args)
    code, predicted = families.build(spec, args.r)
    _emit(
        format_matrix(spec.field, code.generator, args.r, spec.variant.value),
        args.out,
    )
    if args.out is not None:
        sidecar = args.out.with_name(args.out.name + ".json")
        data = {
            "spec": spec.echo(),
            "n": code.n,
            "k": code.k,
            "r": args.r,
            "basis": [str(mono) for mono in code.basis.monomials],
            "predicted": predicted.to_dict(),
        }
        sidecar.write_text(dump_json(data), encoding="utf-8")
    display.v(f"agcode: wrote {code} for {spec} at r={args.r}")
    return EXIT_OK


def _report_exit(report: VerificationReport, path: Optional[Path]) -> int:
    _emit(dump_json(report.to_dict()), path)
    for r, check in report.failures():
        sys.stderr.write(
            f"FAILED r={r} {check.name}: predicted {check.predicted}, "
            f"observed {check.observed} {check.detail}\n"
        )
    return EXIT_OK if report.passed else EXIT_FAILED


def _budget(args: argparse.Namespace) -> families.SweepBudget:
    return families.SweepBudget(
        distance_budget=args.distance_budget,
        dual_distance_budget=args.dual_distance_budget,
        samples=args.samples,
        seed=args.seed,
        extended=args.extended,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    report = families.verify(_spec(args), args.r, _budget(args))
    return _report_exit(report, args.json)


def cmd_sweep(args: argparse.Namespace) -> int:
    report = families.sweep(_spec(args), _budget(args))
    return _report_exit(report, args.json)


def cmd_quantum(args: argparse.Namespace) -> int:
    spec = _spec(args)
    params = families.quantum_params(spec, args.r)
    data = params.to_dict()
    data["spec"] = spec.echo()
    data["r"] = args.r
    _emit(dump_json(data), args.json)
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "quantum": cmd_quantum,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    display.verbosity = args.verbose
    try:
        return COMMANDS[args.command](args)
    except (HypothesisError, FieldError) as e:
        sys.stderr.write(f"agcode: {e}\n")
        return EXIT_INPUT
    except VerificationError as e:
        sys.stderr.write(f"agcode: verification failed: {e}\n")
        return EXIT_FAILED
    except (OSError, ShapeError) as e:
        sys.stderr.write(f"agcode: {e}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
