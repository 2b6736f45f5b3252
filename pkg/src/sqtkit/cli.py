"""Command-line interface: analyze, check, teleport, gen.

State files are single JSON documents:

    {"n": 3, "amplitudes": [[re, im], ...], "bob": 2, "label": "ghz(3)"}

with exactly 2^n [re, im] pairs. Amplitude index k corresponds to the bit
pattern of k with qubit 0 as the most significant bit; "bob" (optional, the
receiver qubit) defaults to n − 1 and "label" is free text.

Exit codes: 0 success (for `check`: conditions hold), 1 `check` conditions
fail, 2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import families
from .conditions import check_3qubit, check_general
from .errors import ConstraintViolated, InvalidDocument, SqtError
from .protocol import InfoQubit, average_fidelity_mc, haar_random_info, outcome_table
from .schmidt import concurrence_via_density, maf, schmidt_form
from .statevec import StateVector, new_state


def load_document(path: str) -> tuple[StateVector, int, str | None]:
    """Read and validate a state document; returns (state, bob, label)."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidDocument(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise InvalidDocument(f"{path}: top-level value must be an object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidDocument(f"{path}: field 'n' must be an integer")
    pairs = doc.get("amplitudes")
    if not isinstance(pairs, list):
        raise InvalidDocument(f"{path}: field 'amplitudes' must be a list of [re, im] pairs")
    try:
        amps = np.array([complex(float(p[0]), float(p[1])) for p in pairs])
    except (TypeError, ValueError, IndexError) as exc:
        raise InvalidDocument(f"{path}: amplitudes must be [re, im] number pairs") from exc
    sv = new_state(n, amps)
    bob = doc.get("bob", n - 1)
    if not isinstance(bob, int) or isinstance(bob, bool):
        raise InvalidDocument(f"{path}: field 'bob' must be an integer")
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise InvalidDocument(f"{path}: field 'label' must be a string")
    return sv, bob, label


def document_dict(sv: StateVector, bob: int, label: str | None) -> dict:
    doc = {
        "n": sv.n,
        "amplitudes": [[float(a.real), float(a.imag)] for a in sv.amps],
        "bob": bob,
    }
    if label is not None:
        doc["label"] = label
    return doc


def _resolve_bob(sv: StateVector, doc_bob: int, override) -> int:
    return doc_bob if override is None else override


def cmd_analyze(args) -> int:
    sv, bob, label = load_document(args.input)
    bob = _resolve_bob(sv, bob, args.bob)
    form = schmidt_form(sv, bob)
    oracle = concurrence_via_density(sv, bob)
    delta = abs(form.concurrence - oracle)
    if delta > args.tol:
        print(f"internal error: concurrence routes disagree by {delta}", file=sys.stderr)
        return 3
    fields = {
        "n": sv.n,
        "bob": bob,
        "label": label,
        "coeff0": form.coeff0,
        "coeff1": form.coeff1,
        "z": [form.z.real, form.z.imag],
        "concurrence": form.concurrence,
        "oracle_concurrence": oracle,
        "agreement_delta": delta,
        "maf": maf(form.concurrence),
    }
    if args.format == "json":
        print(json.dumps(fields))
    else:
        print(f"state: {label or args.input} (n={sv.n}), receiver qubit {bob}")
        print(f"schmidt coeff 0:    {form.coeff0:.6f}")
        print(f"schmidt coeff 1:    {form.coeff1:.6f}")
        print(f"rotation z:         {form.z.real:.6f}{form.z.imag:+.6f}j")
        print(f"concurrence:        {form.concurrence:.6f}")
        print(f"oracle concurrence: {oracle:.6f}")
        print(f"agreement delta:    {delta:.6f}")
        print(f"max avg fidelity:   {maf(form.concurrence):.6f}")
    return 0


def cmd_check(args) -> int:
    sv, bob, label = load_document(args.input)
    bob = _resolve_bob(sv, bob, args.bob)
    general = check_general(sv, bob, args.tol)
    fields = {
        "n": sv.n,
        "bob": bob,
        "label": label,
        "residual_balance": general.residual_balance,
        "residual_overlap": general.residual_overlap,
        "tolerance": general.tolerance,
        "verdict": general.verdict,
    }
    if sv.n == 3:
        amp_form = check_3qubit(sv, bob, args.tol)
        fields["amp_residual_balance"] = amp_form.residual_balance
        fields["amp_residual_overlap"] = amp_form.residual_overlap
    if args.format == "json":
        print(json.dumps(fields))
    else:
        print(f"state: {label or args.input} (n={sv.n}), receiver qubit {bob}")
        print(f"residual balance:   {general.residual_balance:.6f}")
        print(f"residual overlap:   {general.residual_overlap:.6f}")
        if sv.n == 3:
            print(f"amp form balance:   {fields['amp_residual_balance']:.6f}")
            print(f"amp form overlap:   {fields['amp_residual_overlap']:.6f}")
        print(f"tolerance:          {general.tolerance:.1e}")
        print(f"verdict:            {'perfect' if general.verdict else 'not perfect'}")
    return 0 if general.verdict else 1


def _parse_info(args) -> InfoQubit:
    if args.info is not None:
        parts = args.info.split(",")
        if len(parts) != 4:
            raise InvalidDocument("--info needs four comma-separated numbers: re0,im0,re1,im1")
        try:
            vals = [float(p) for p in parts]
        except ValueError as exc:
            raise InvalidDocument(f"--info values must be numbers: {args.info}") from exc
        return InfoQubit(complex(vals[0], vals[1]), complex(vals[2], vals[3]))
    return haar_random_info(args.seed)


def cmd_teleport(args) -> int:
    sv, bob, label = load_document(args.input)
    bob = _resolve_bob(sv, bob, args.bob)
    name = label or args.input
    if args.samples:
        est = average_fidelity_mc(sv, bob, args.samples, args.seed)
        form = schmidt_form(sv, bob)
        closed = maf(form.concurrence)
        fields = {
            "n": sv.n,
            "bob": bob,
            "label": label,
            "samples": est.samples,
            "estimate": est.mean,
            "stderr": est.stderr,
            "closed_form": closed,
            "concurrence": form.concurrence,
        }
        if args.format == "json":
            print(json.dumps(fields))
        else:
            print(f"state: {name} (n={sv.n}), receiver qubit {bob}")
            print(f"samples:            {est.samples}")
            print(f"mc estimate:        {est.mean:.6f} ± {est.stderr:.6f}")
            print(f"closed form (2+C)/3: {closed:.6f}")
        return 0
    if args.info is None and not args.haar:
        raise InvalidDocument("teleport needs --info re0,im0,re1,im1 or --haar (or --samples N)")
    info = _parse_info(args)
    form = schmidt_form(sv, bob)
    records = outcome_table(info, form)
    total = sum(rec.prob * rec.fidelity for rec in records)
    fields = {
        "n": sv.n,
        "bob": bob,
        "label": label,
        "info": [[info.amp0.real, info.amp0.imag], [info.amp1.real, info.amp1.imag]],
        "outcomes": [
            {
                "r": rec.outcome,
                "prob": rec.prob,
                "correction": rec.correction,
                "fidelity": rec.fidelity,
            }
            for rec in records
        ],
        "sum_pf": total,
    }
    if args.format == "json":
        print(json.dumps(fields))
    else:
        print(f"state: {name} (n={sv.n}), receiver qubit {bob}")
        print(
            f"info qubit: amp0={info.amp0.real:.6f}{info.amp0.imag:+.6f}j "
            f"amp1={info.amp1.real:.6f}{info.amp1.imag:+.6f}j"
        )
        print("r  P(r)      correction  F(r)")
        for rec in records:
            print(f"{rec.outcome}  {rec.prob:.6f}  {rec.correction:<10}  {rec.fidelity:.6f}")
        print(f"sum P(r)F(r): {total:.6f}")
    return 0


FAMILY_PARAMS = {
    "ghz": ("n",),
    "w": ("a100", "a010", "a001"),
    "separable": ("a", "b"),
    "schmidt": ("a", "b", "beta", "kappa"),
    "acin": ("k0", "k1", "k2", "k3", "k4"),
    "acinalt": ("a", "b", "c", "d", "f"),
    "counterexample": ("a", "b"),
    "random": ("n",),
}


def _build_family(args) -> StateVector:
    family = args.family
    names = FAMILY_PARAMS[family]
    if len(args.params) != len(names):
        raise ConstraintViolated(
            f"family '{family}' takes {len(names)} parameter(s) {names}, got {len(args.params)}"
        )
    if family in ("ghz", "random"):
        n = int(args.params[0])
        if n != args.params[0]:
            raise ConstraintViolated(f"qubit count must be an integer, got {args.params[0]}")
        return families.ghz(n) if family == "ghz" else families.random_state(n, args.seed)
    p = args.params
    if family == "w":
        return families.w_general(p[0], p[1], p[2])
    if family == "separable":
        return families.separable_branch_family(p[0], p[1])
    if family == "schmidt":
        return families.schmidt_branch_family(p[0], p[1], p[2], p[3])
    if family == "acin":
        return families.acin_canonical(p[0], p[1], p[2], p[3], p[4], args.theta)
    if family == "acinalt":
        return families.acin_alternative(p[0], p[1], p[2], p[3], p[4], args.theta)
    return families.zha_counterexample(p[0], p[1], args.theta, args.delta, args.gamma)


def cmd_gen(args) -> int:
    sv = _build_family(args)
    shown = [str(int(p)) if args.family in ("ghz", "random") else repr(p) for p in args.params]
    label = f"{args.family}({', '.join(shown)})"
    doc = document_dict(sv, sv.n - 1, label)
    text = json.dumps(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqtkit",
        description=(
            "Analyze n-qubit resource states for teleporting one qubit: Schmidt "
            "form toward the receiver, concurrence, maximal average fidelity "
            "(2+C)/3, perfect-teleportation conditions, and protocol simulation. "
            "Amplitude index k encodes the bit pattern of k with qubit 0 as the "
            "most significant bit."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, with_tol=True):
        p.add_argument("input", help="path to a state document (JSON)")
        p.add_argument("--bob", type=int, default=None, help="receiver qubit (default: document's, else n-1)")
        if with_tol:
            p.add_argument("--tol", type=float, default=1e-9, help="verdict tolerance (default 1e-9)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_analyze = sub.add_parser("analyze", help="Schmidt form, concurrence, and (2+C)/3")
    add_io(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_check = sub.add_parser("check", help="perfect-teleportation conditions (exit 0 iff they hold)")
    add_io(p_check)
    p_check.set_defaults(func=cmd_check)

    p_tel = sub.add_parser("teleport", help="outcome table for a given info qubit, or MC average fidelity")
    add_io(p_tel, with_tol=False)
    p_tel.add_argument("--info", default=None, metavar="RE0,IM0,RE1,IM1",
                       help="information qubit amplitudes")
    p_tel.add_argument("--haar", action="store_true", help="draw a Haar-random information qubit")
    p_tel.add_argument("--samples", type=int, default=0,
                       help="Monte Carlo sample count for the average fidelity")
    p_tel.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p_tel.set_defaults(func=cmd_teleport)

    p_gen = sub.add_parser("gen", help="generate a named family state document")
    p_gen.add_argument("family", choices=sorted(FAMILY_PARAMS))
    p_gen.add_argument("params", type=float, nargs="*", help="family parameters (see README)")
    p_gen.add_argument("--theta", type=float, default=0.0, help="phase parameter (radians)")
    p_gen.add_argument("--delta", type=float, default=0.0, help="phase parameter (radians)")
    p_gen.add_argument("--gamma", type=float, default=0.0, help="phase parameter (radians)")
    p_gen.add_argument("--seed", type=int, default=0, help="RNG seed for family 'random'")
    p_gen.add_argument("-o", "--output", default=None, help="output path (default: stdout)")
    p_gen.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SqtError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # anything else is a broken internal invariant
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
