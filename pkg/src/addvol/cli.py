"""Command-line interface: ``addvol <subcommand> ...``.

Exit codes: 0 success, 2 invalid input, 3 constraint violation, 4 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import AddvolError, InvalidInput, ParseError
from .extremal import (
    APPROX_T_NOTE,
    ApproxGroupParams,
    ExtremalParams,
    L_m_formula,
    approx_compose_T,
    basic_extremal,
    gen_approx_group,
    gen_extremal,
)
from .geometry import hull_lattice_count, volume_1d
from .morphisms import PairingMap, check_homomorphism, check_isomorphism, freiman_dim, relation_matrix
from .reduction import reduce_dim
from .search import BANDS, SearchBudget, conjecture_scan, exists_isomorphism, min_volume_search
from .sets import Set1D, Set2D, bounding_box, normalize, sumset


# ----------------------------------------------------------------------
# literals
# ----------------------------------------------------------------------

def _read(text: str) -> str:
    if text.startswith("@"):
        try:
            with open(text[1:]) as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {text[1:]}: {exc.strerror}") from None
    return text


def parse_set_literal(text: str):
    """``0,1,3`` -> Set1D; ``[[0,0],[1,2]]`` -> Set2D; ``[0,1,3]`` -> Set1D."""
    text = _read(text).strip()
    if not text:
        raise ParseError("empty set literal", 0)
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc.msg}", exc.pos) from None
        if not isinstance(data, list) or not data:
            raise ParseError("expected a non-empty JSON array", 0)
        if all(isinstance(v, int) and not isinstance(v, bool) for v in data):
            return Set1D(data)
        for i, v in enumerate(data):
            if not (isinstance(v, list) and len(v) == 2
                    and all(isinstance(c, int) and not isinstance(c, bool) for c in v)):
                raise ParseError(f"element {i} is not an integer pair", i)
        return Set2D(data)
    values = []
    pos = 0
    for chunk in text.split(","):
        token = chunk.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f"not an integer: {token!r}", pos) from None
        pos += len(chunk) + 1
    return Set1D(values)


def _parse_map(text: str) -> PairingMap:
    text = _read(text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON map: {exc.msg}", exc.pos) from None
    if not isinstance(data, list) or any(not isinstance(p, list) or len(p) != 2 for p in data):
        raise ParseError("a map is a JSON array of [source, target] pairs", 0)
    return PairingMap(data)


def _want(obj, kind, flag):
    if not isinstance(obj, kind):
        raise InvalidInput(f"{flag} expects a {kind.__name__} literal")
    return obj


def _set_json(A):
    return A.tolist()


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

@dataclass
class CommandRequest:
    subcommand: str
    args: argparse.Namespace
    out: str = "json"


def _input_set(args, required=True):
    lit = getattr(args, "set", None) or getattr(args, "set2d", None)
    if lit is None:
        if required:
            raise InvalidInput("give --set or --set2d")
        return None
    A = parse_set_literal(lit)
    if getattr(args, "set2d", None) is not None:
        _want(A, Set2D, "--set2d")
    return A


def cmd_sumset(args):
    A = _input_set(args)
    B = parse_set_literal(args.other) if args.other else A
    if type(A) is not type(B):
        raise InvalidInput("both sets must be of the same kind")
    S = sumset(A, B)
    return {"k": S.k, "set": _set_json(S)}


def cmd_dim(args):
    A = _input_set(args)
    R = relation_matrix(A)
    return {"dim": freiman_dim(A), "k": A.k, "lambda": R.lam if A.k > 1 else 0}


def cmd_volume(args):
    A = _input_set(args)
    if isinstance(A, Set1D):
        res = {"k": A.k, "normalized": normalize(A).tolist(), "volume": volume_1d(A)}
        if args.min:
            budget = SearchBudget(args.max_length, max(A.k, 7), args.max_nodes)
            length, witness = min_volume_search(A, budget)
            res.update(min_volume=length, min_witness=witness.tolist())
        return res
    box = bounding_box(A)
    return {"k": A.k, "hull_count": hull_lattice_count(A), "box_count": box.count,
            "box": {"a1": box.a1, "a2": box.a2, "h1": box.h1, "h2": box.h2}}


def cmd_reduce(args):
    A = _want(_input_set(args), Set2D, "--set2d")
    return reduce_dim(A).to_dict()


def cmd_iso(args):
    A = parse_set_literal(args.a)
    B = parse_set_literal(args.b)
    if args.map:
        phi = _parse_map(args.map)
        return {"homomorphism": check_homomorphism(A, B, phi),
                "isomorphism": check_isomorphism(A, B, phi)}
    budget = SearchBudget(max_nodes=args.max_nodes)
    phi = exists_isomorphism(A, B, budget)
    return {"isomorphic": phi is not None, "map": None if phi is None else phi.tolist()}


def cmd_extremal(args):
    P = ExtremalParams(args.k, args.c, args.b)
    core = parse_set_literal(args.core) if args.core else None
    A = gen_extremal(args.k, args.c, args.b, core=core)
    return {"ref": "extremal-set lower-bound construction",
            "elements": A.tolist(), "k": A.k, "T": A.T, "max": A.max,
            "params": {"c": P.c, "b": P.b, "k1": P.k1, "k2": P.k2, "k3": P.k3, "p": P.p},
            "core": (core or basic_extremal(P.k1, P.b)).tolist()}


def cmd_approx_group(args):
    P = ApproxGroupParams(args.kbar1, args.kbar2, args.b)
    A = gen_approx_group(P)
    T_formula = approx_compose_T(P.k, P.c, P.b)
    return {"ref": "symmetric approximate-group construction",
            "elements": A.tolist(), "k": A.k, "T": A.T, "max": A.max,
            "span": A.max - A.min + 1, "L_formula": L_m_formula(P.k, P.c, P.b),
            "T_formula": T_formula, "T_matches_formula": A.T == T_formula,
            "params": P.todict(), "note": APPROX_T_NOTE}


def cmd_conjecture_scan(args):
    budget = SearchBudget(args.max_length, max(args.kmax, 3), args.max_nodes)
    progress = None
    if args.progress:
        def progress(row):
            print(f"k={row['k']} T={row['T']} done", file=sys.stderr, flush=True)
    rows = conjecture_scan(args.kmax, args.band, kmin=args.kmin, budget=budget,
                           workers=args.workers, progress=progress)
    return {"ref": "extremal length conjecture scan", "band": args.band,
            "max_length": args.max_length, "rows": rows}


def render_grid(A: Set2D) -> str:
    """ASCII picture, top row first; '#' marks a point, '.' an empty lattice point."""
    box = bounding_box(A)
    lines = []
    for y in range(box.y_max, box.a2 - 1, -1):
        row = "".join("#" if (x, y) in A else "." for x in range(box.a1, box.x_max + 1))
        lines.append(f"{y:>4} {row}")
    lines.append(f"     x from {box.a1} to {box.x_max}")
    return "\n".join(lines)


def cmd_render(args):
    A = _want(_input_set(args), Set2D, "--set2d")
    return {"grid": render_grid(A)}


COMMANDS = {
    "sumset": cmd_sumset,
    "dim": cmd_dim,
    "volume": cmd_volume,
    "reduce": cmd_reduce,
    "iso": cmd_iso,
    "extremal": cmd_extremal,
    "approx-group": cmd_approx_group,
    "conjecture-scan": cmd_conjecture_scan,
    "render": cmd_render,
}


# ----------------------------------------------------------------------
# output
# ----------------------------------------------------------------------

def to_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def to_text(name: str, result: dict) -> str:
    if name == "render":
        return result["grid"]
    if name == "conjecture-scan":
        cols = ["k", "T", "c", "b", "formula_a_m", "brute_a_m", "match"]
        lines = ["\t".join(cols)]
        for row in result["rows"]:
            lines.append("\t".join("NA" if row[c] is None else str(row[c]) for c in cols))
        return "\n".join(lines)
    return "\n".join(f"{k}: {to_json(v) if isinstance(v, (dict, list)) else v}"
                     for k, v in sorted(result.items()))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="addvol", description=__doc__.splitlines()[0])
    parser.add_argument("--out", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_set(p, two_d_only=False):
        g = p.add_mutually_exclusive_group(required=True)
        if not two_d_only:
            g.add_argument("--set", help="1D literal like 0,1,3 (or @file)")
        g.add_argument("--set2d", help="2D literal like [[0,0],[1,2]] (or @file)")
        return p

    p = with_set(sub.add_parser("sumset", help="A + B (B defaults to A)"))
    p.add_argument("--other", help="second set literal")
    with_set(sub.add_parser("dim", help="Freiman dimension and relation rank"))
    p = with_set(sub.add_parser("volume", help="1D length or planar lattice-point count"))
    p.add_argument("--min", action="store_true", help="also search the shortest isomorphic image")
    p.add_argument("--max-length", type=int, default=64)
    p.add_argument("--max-nodes", type=int, default=10 ** 8)
    with_set(sub.add_parser("reduce", help="certified reduction of a planar set to a line"), True)
    p = sub.add_parser("iso", help="check a map, or search for an isomorphism")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--map", help="JSON array of [source, target] pairs")
    p.add_argument("--max-nodes", type=int, default=10 ** 8)
    p = sub.add_parser("extremal", help="extremal set for (k, c, b)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--core", help="alternative core set literal")
    p = sub.add_parser("approx-group", help="symmetric approximate-group construction")
    p.add_argument("--kbar1", type=int, required=True)
    p.add_argument("--kbar2", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p = sub.add_parser("conjecture-scan", help="brute-force a_m against the formula")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--kmin", type=int, default=3)
    p.add_argument("--band", choices=BANDS, default="c3")
    p.add_argument("--max-length", type=int, default=64)
    p.add_argument("--max-nodes", type=int, default=10 ** 8)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--progress", action="store_true", help="progress lines on stderr")
    with_set(sub.add_parser("render", help="ASCII grid of a planar set"), True)
    return parser


def execute(req: CommandRequest) -> tuple[int, str]:
    try:
        result = COMMANDS[req.subcommand](req.args)
    except AddvolError as exc:
        err = {"error": exc.code, "message": str(exc)}
        return exc.exit_code, to_json(err) if req.out == "json" else f"error: {exc.code}: {exc}"
    text = to_json(result) if req.out == "json" else to_text(req.subcommand, result)
    return 0, text


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    code, text = execute(CommandRequest(args.command, args, args.out))
    print(text, file=sys.stdout if code == 0 else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
