"""Command-line front end.

Instances are JSON documents

    {"n": 2, "summands": [[1, 1, 1], [1, 2, 1], [2, 2, 1]], "e": [1, 1]}

with summands given as (i, j, multiplicity) triples, read from a file path
argument, from stdin, or generated with ``--family NAME N``.  Every
subcommand prints a plain-text report by default and a JSON object with
``--json``.  Output is deterministic.

Exit codes: 0 success, 1 input error, 2 not catenoid, 3 enumeration guard
exceeded, 4 verification or cross-method mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .families import FAMILIES, complexes_chain_string
from .poincare import (
    euler_characteristic,
    poincare_cells,
    poincare_formula,
    QPolynomial,
)
from .reps import (
    EmptyInstanceError,
    NotCatenoidError,
    Representation,
    catenoid_chain,
    catenoid_witness,
    decompose_simple,
    dimension_vector,
    is_nonempty,
    is_simple,
    minimal_resolution,
)
from .schubert import (
    DEFAULT_GUARD,
    GuardExceededError,
    NotIrreducibleError,
    NotSimpleError,
    build_frame,
    cell_dimension,
    components,
    enumerate_fixed_points,
    is_irreducible,
    parabolic_blocks,
    staircase,
    subrep_type,
    weyl_word,
)
from .verify import verify_corpus


class InputError(ValueError):
    """Malformed instance document or command line."""


@dataclass(frozen=True)
class InstanceSpec:
    """Validated instance data as it appears on the wire."""

    n: int
    summands: tuple[tuple[int, int, int], ...]
    e: tuple[int, ...]

    def to_instance(self) -> tuple[Representation, tuple[int, ...]]:
        return Representation.from_triples(self.n, self.summands), self.e

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "summands": [list(t) for t in self.summands],
            "e": list(self.e),
        }


def parse_instance(text: str) -> InstanceSpec:
    """Parse and validate a JSON instance document.

    Rejects unknown fields and reports the offending field on error.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"syntax error: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("instance document must be a JSON object")
    unknown = set(data) - {"n", "summands", "e"}
    if unknown:
        raise InputError(f"unknown field {sorted(unknown)[0]!r}")
    for key in ("n", "summands", "e"):
        if key not in data:
            raise InputError(f"missing field {key!r}")
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n: expected a positive integer, got {n!r}")
    raw = data["summands"]
    if not isinstance(raw, list):
        raise InputError("summands: expected a list of [i, j, multiplicity] triples")
    triples: list[tuple[int, int, int]] = []
    for k, item in enumerate(raw):
        path = f"summands[{k}]"
        if (
            not isinstance(item, list)
            or len(item) != 3
            or not all(isinstance(x, int) for x in item)
        ):
            raise InputError(f"{path}: expected an [i, j, multiplicity] integer triple")
        i, j, m = item
        if i > j:
            raise InputError(f"{path}: i > j ({i} > {j})")
        if not 1 <= i <= j <= n:
            raise InputError(f"{path}: interval [{i}, {j}] out of range for n = {n}")
        if m < 1:
            raise InputError(f"{path}: multiplicity must be positive, got {m}")
        triples.append((i, j, m))
    e_raw = data["e"]
    if not isinstance(e_raw, list) or not all(isinstance(x, int) for x in e_raw):
        raise InputError("e: expected a list of integers")
    if len(e_raw) != n:
        raise InputError(f"e: expected {n} entries, got {len(e_raw)}")
    for k, x in enumerate(e_raw):
        if x < 0:
            raise InputError(f"e[{k}]: negative entry {x}")
    merged: dict[tuple[int, int], int] = {}
    for i, j, m in triples:
        merged[(i, j)] = merged.get((i, j), 0) + m
    canonical = tuple((i, j, m) for (i, j), m in sorted(merged.items()))
    return InstanceSpec(n=n, summands=canonical, e=tuple(e_raw))


def family(name: str, n: int) -> InstanceSpec:
    """The named built-in instance family at size n."""
    if name not in FAMILIES:
        raise InputError(f"unknown family {name!r} (choose from {sorted(FAMILIES)})")
    if n < 1:
        raise InputError(f"family size must be positive, got {n}")
    M, e = FAMILIES[name](n)
    triples = tuple((i, j, m) for (i, j), m in M.summands)
    return InstanceSpec(n=M.n, summands=triples, e=e)


def _load_spec(args: argparse.Namespace) -> InstanceSpec:
    if args.family:
        name, size = args.family
        try:
            size = int(size)
        except ValueError:
            raise InputError(f"family size must be an integer, got {size!r}")
        return family(name, size)
    if args.instance and args.instance != "-":
        try:
            with open(args.instance, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.instance}: {exc}") from exc
    else:
        text = sys.stdin.read()
    return parse_instance(text)


def _poly_json(p: QPolynomial) -> list[int]:
    return list(p.coefficients)


def _chain_json(chain) -> list[list[int]]:
    return [list(K) for K in chain]


def _fmt_chain(chain) -> str:
    return " <= ".join("{" + ",".join(map(str, K)) + "}" for K in chain)


def _base_report(spec: InstanceSpec) -> dict:
    return {"instance": spec.to_json_obj()}


def cmd_catenoid(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, _ = spec.to_instance()
    chain = catenoid_chain(M)
    report = _base_report(spec)
    if chain is None:
        witness = catenoid_witness(M)
        report["catenoid"] = False
        report["witness"] = [list(witness[0]), list(witness[1])]
        lines = [f"catenoid: no (incomparable summands {witness[0]} and {witness[1]})"]
        return report, lines, 2
    report["catenoid"] = True
    report["chain"] = [list(iv) for iv in chain]
    lines = ["catenoid: yes", "chain: " + " <= ".join(str(iv) for iv in chain)]
    return report, lines, 0


def cmd_resolve(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    frame = build_frame(M, e)
    report = _base_report(spec)
    report.update(
        {
            "catenoid": True,
            "N": frame.N,
            "q": list(frame.q),
            "r": list(frame.r),
            "f": list(frame.f),
            "sorted_summands": [list(iv) for iv in frame.summands],
        }
    )
    lines = [
        f"N = {frame.N}",
        f"q = {frame.q}",
        f"r = {frame.r}",
        f"f = {frame.f}",
        "sorted summands: " + ", ".join(str(iv) for iv in frame.summands),
    ]
    return report, lines, 0


def cmd_nonempty(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    value = is_nonempty(M, e)
    report = _base_report(spec)
    report["nonempty"] = value
    return report, [f"nonempty: {'yes' if value else 'no'}"], 0


def cmd_simple(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    value = is_simple(M, e)
    report = _base_report(spec)
    report["simple"] = value
    return report, [f"simple: {'yes' if value else 'no'}"], 0


def cmd_decompose(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    factors = decompose_simple(M, e)
    report = _base_report(spec)
    report["factors"] = [
        {
            "n": Mf.n,
            "summands": [[i, j, m] for (i, j), m in Mf.summands],
            "e": list(ef),
        }
        for Mf, ef in factors
    ]
    lines = [f"factors: {len(factors)}"]
    for k, (Mf, ef) in enumerate(factors, start=1):
        desc = " + ".join(f"{m}*M{list(iv)}" for iv, m in Mf.summands) or "0"
        lines.append(f"  factor {k}: n={Mf.n}, M = {desc}, e = {tuple(ef)}")
    return report, lines, 0


def cmd_irreducible(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    report = _base_report(spec)
    if not is_nonempty(M, e):
        report["nonempty"] = False
        report["irreducible"] = None
        return report, ["nonempty: no (empty instances have no components)"], 0
    value = is_irreducible(M, e)
    report["nonempty"] = True
    report["irreducible"] = value
    return report, [f"irreducible: {'yes' if value else 'no'}"], 0


def cmd_components(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    frame = build_frame(M, e)
    chains = enumerate_fixed_points(frame, args.guard)
    comps = components(frame, args.guard)
    simple = is_simple(M, e)
    irr = bool(chains) and is_irreducible(M, e)
    is_complexes = args.family and args.family[0] == "complexes"
    report = _base_report(spec)
    report["fixed_points"] = len(chains)
    report["irreducible"] = irr if chains else None
    entries = []
    lines = [
        f"fixed points: {len(chains)}",
        f"irreducible components (Bruhat-maximal fixed points): {len(comps)}",
    ]
    if len(comps) < len(chains):
        lines.append(
            "note: the remaining fixed points lie in the closures of the "
            "maximal cells; only the maximal ones index components"
        )
    for K in comps:
        entry = {
            "chain": _chain_json(K),
            "dim": cell_dimension(K),
            "subrep": [[i, j, m] for (i, j), m in subrep_type(frame, K).summands],
        }
        text = f"  chain {_fmt_chain(K)}: dim {entry['dim']}"
        if is_complexes:
            entry["string"] = complexes_chain_string(K)
            text += f", string {entry['string']}"
        if irr and simple and staircase(M, e):
            perm, word = weyl_word(M, e)
            entry["weyl_word"] = list(word)
            entry["one_line"] = list(perm)
            text += f", weyl word {list(word)}, one-line {list(perm)}"
        entries.append(entry)
        lines.append(text)
    if is_complexes:
        total_strings = sum(
            1 for K in chains if "11" not in complexes_chain_string(K)
        )
        lines.append(
            f"note: all {len(chains)} fixed points carry binary strings with no "
            f"two adjacent 1s (a Fibonacci count); the {len(comps)} components "
            "are the maximal such strings and each dimension is its number of 1s"
        )
        report["strings_without_adjacent_ones"] = total_strings
    report["components"] = entries
    return report, lines, 0


def cmd_weyl(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    perm, word = weyl_word(M, e)
    report = _base_report(spec)
    report["weyl_word"] = list(word)
    report["one_line"] = list(perm)
    lines = [
        "weyl word: " + " ".join(f"s{i}" for i in word),
        f"one-line: {list(perm)}",
        f"length: {len(word)}",
    ]
    return report, lines, 0


def cmd_fixed_points(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    frame = build_frame(M, e)
    chains = enumerate_fixed_points(frame, args.guard)
    report = _base_report(spec)
    report["fixed_points"] = [_chain_json(K) for K in chains]
    report["count"] = len(chains)
    lines = [f"fixed points: {len(chains)}"]
    lines.extend(
        f"  {_fmt_chain(K)} (cell dim {cell_dimension(K)})" for K in chains
    )
    return report, lines, 0


def cmd_subrep_types(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    frame = build_frame(M, e)
    chains = enumerate_fixed_points(frame, args.guard)
    report = _base_report(spec)
    entries = []
    lines = [f"fixed points: {len(chains)}"]
    for K in chains:
        rep = subrep_type(frame, K)
        entries.append(
            {
                "chain": _chain_json(K),
                "subrep": [[i, j, m] for (i, j), m in rep.summands],
            }
        )
        desc = " + ".join(f"{m}*M{list(iv)}" for iv, m in rep.summands) or "0"
        lines.append(f"  {_fmt_chain(K)}: {desc}")
    report["subrep_types"] = entries
    return report, lines, 0


def cmd_poincare(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    report = _base_report(spec)
    lines = []
    code = 0
    poincare: dict = {}
    if args.method in ("formula", "both"):
        p_formula = poincare_formula(M, e, args.guard)
        poincare["formula"] = _poly_json(p_formula)
        lines.append(f"formula: {p_formula}")
    if args.method in ("cells", "both"):
        p_cells = poincare_cells(build_frame(M, e), args.guard)
        poincare["cells"] = _poly_json(p_cells)
        lines.append(f"cells:   {p_cells}")
    if args.method == "both":
        if poincare["formula"] == poincare["cells"]:
            lines.append("methods agree")
        else:
            lines.append("MISMATCH between formula and cell methods")
            code = 4
    report["poincare"] = poincare
    return report, lines, code


def cmd_euler(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, e = spec.to_instance()
    value = euler_characteristic(M, e, args.guard)
    report = _base_report(spec)
    report["euler"] = value
    return report, [f"euler characteristic: {value}"], 0


def cmd_blocks(spec: InstanceSpec, args) -> tuple[dict, list[str], int]:
    M, _ = spec.to_instance()
    blocks = parabolic_blocks(M)
    report = _base_report(spec)
    report["blocks"] = list(blocks)
    return report, [f"parabolic block sizes: {list(blocks)}"], 0


def cmd_verify(args) -> tuple[dict, list[str], int]:
    samples = args.samples
    if samples is None:
        samples = 25 if args.seed is not None else 0
    result = verify_corpus(
        args.max_n, args.max_summands, samples=samples, seed=args.seed
    )
    report = {
        "max_n": result.max_n,
        "max_summands": result.max_summands,
        "representations": result.representations,
        "instances": result.instances,
        "nonempty_instances": result.nonempty_instances,
        "chains_checked": result.chains_checked,
        "samples": result.samples,
        "ok": result.ok,
        "failures": result.failures,
    }
    lines = [result.summary()]
    lines.extend(f"FAIL: {msg}" for msg in result.failures)
    return report, lines, 0 if result.ok else 4


COMMANDS = {
    "catenoid": cmd_catenoid,
    "resolve": cmd_resolve,
    "nonempty": cmd_nonempty,
    "simple": cmd_simple,
    "decompose": cmd_decompose,
    "irreducible": cmd_irreducible,
    "components": cmd_components,
    "weyl": cmd_weyl,
    "fixed-points": cmd_fixed_points,
    "subrep-types": cmd_subrep_types,
    "poincare": cmd_poincare,
    "euler": cmd_euler,
    "blocks": cmd_blocks,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "instance",
        nargs="?",
        help="path of a JSON instance document ('-' or omitted reads stdin)",
    )
    common.add_argument(
        "--family",
        nargs=2,
        metavar=("NAME", "N"),
        help="use a built-in family instead of an instance document "
        f"(names: {', '.join(sorted(FAMILIES))})",
    )
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument(
        "--guard",
        type=int,
        default=DEFAULT_GUARD,
        help="refuse enumerations predicted to exceed this size "
        f"(default {DEFAULT_GUARD})",
    )

    parser = argparse.ArgumentParser(
        prog="quivergrass",
        description="Exact Schubert-side computations for quiver Grassmannians "
        "of catenoid representations over the equioriented A_n quiver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "catenoid": "test the catenoid property and print the chain or a witness",
        "resolve": "print the resolution frame (N, q, r, f, sorted summands)",
        "nonempty": "decide whether the quiver Grassmannian is nonempty",
        "simple": "decide whether the instance is simple",
        "decompose": "split the instance into simple factors",
        "irreducible": "decide irreducibility",
        "components": "list the irreducible components as Schubert data",
        "weyl": "print the reduced Weyl word of an irreducible simple instance",
        "fixed-points": "enumerate the torus fixed points",
        "subrep-types": "print the subrepresentation type at each fixed point",
        "poincare": "compute the Poincare polynomial",
        "euler": "compute the Euler characteristic",
        "blocks": "print the parabolic block sizes",
    }
    for name, handler in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "poincare":
            p.add_argument(
                "--method",
                choices=("formula", "cells", "both"),
                default="both",
                help="stratification formula, cell enumeration, or both "
                "(both asserts equality; default both)",
            )

    p_verify = sub.add_parser(
        "verify", help="exhaustively cross-check all methods on small instances"
    )
    p_verify.add_argument("--max-n", type=int, default=3)
    p_verify.add_argument("--max-summands", type=int, default=5)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument(
        "--seed", type=int, default=None, help="also check random larger samples"
    )
    p_verify.add_argument("--samples", type=int, default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            report, lines, code = cmd_verify(args)
        else:
            spec = _load_spec(args)
            report, lines, code = COMMANDS[args.command](spec, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NotCatenoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NotSimpleError, NotIrreducibleError, EmptyInstanceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
