"""``hyperlat`` command line.

Exit codes: 0 success, 2 invalid input, 3 inconclusive or not found within
bounds, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import group as grp
from .algebraic import DEFAULT_WIDTH
from .errors import HyperlatError, MalformedError
from .formats import (GroupDoc, IsometryDoc, LatticeDoc, algebraic_json,
                      document_to_dict, dumps, interval_json, load,
                      matrix_to_json, parse_width, real_vector_json)
from .isometry import (classify, entropy, perron_ray, salem_kind,
                       spectral_radius)

EXIT_OK, EXIT_INVALID, EXIT_UNDECIDED, EXIT_MALFORMED = 0, 2, 3, 4


class Undecided(Exception):
    """Carries a report whose outcome is Inconclusive / NotFoundWithin."""

    def __init__(self, report: dict):
        super().__init__("undecided")
        self.report = report


def _width(args) -> Fraction:
    if getattr(args, "precision", None):
        return parse_width(args.precision)
    env = os.environ.get("HYPERLAT_PRECISION")
    return parse_width(env) if env else DEFAULT_WIDTH


def _load_kind(path: str, kind):
    doc = load(path)
    if not isinstance(doc, kind):
        raise HyperlatError(f"{path}: expected {kind.__name__.replace('Doc', '').lower()} file")
    return doc


def classify_report(doc: IsometryDoc, path: str, width: Fraction, perron: bool) -> dict:
    g = doc.isometry
    cls = classify(g)
    lo, hi = entropy(g, width)
    rho = spectral_radius(g)
    out = {
        "command": "classify",
        "input": {"file": path, "name": doc.name, "matrix": matrix_to_json(g.m)},
        "char_poly": list(g.charpoly),
        "class": cls.kind,
        "rho_min_poly": list(rho.min_poly),
        "rho": algebraic_json(rho, width),
        "entropy": interval_json(lo, hi),
    }
    if cls.kind == "elliptic":
        out["order"] = cls.order
    if cls.is_loxodromic:
        out["salem_kind"] = salem_kind(g).kind
        if perron:
            pd = perron_ray(g)
            out["perron"] = {"position": pd.position.value, "vector": real_vector_json(pd.ray, width)}
    return out


def _ray_report_json(report) -> dict | None:
    if report is None:
        return None
    return {
        "ray": list(report.ray),
        "position": report.position.value,
        "lambdas": ["1" for _ in report.lambdas],
        "fixed_dimension": report.fixed_dimension,
        "radical_dimension": report.radical_dimension,
    }


def group_report(doc: GroupDoc, path: str, sub: str, args, width: Fraction) -> dict:
    g = doc.group
    out: dict = {
        "command": "group",
        "subcommand": sub,
        "input": {"file": path, "name": doc.name, "generators": len(g.generators)},
    }
    if sub == "null-entropy":
        v = grp.null_entropy_decide(g, args.word_bound)
        out["verdict"] = v.kind
        if v.ray is not None:
            out["ray"] = _ray_report_json(v.ray)
        if v.orbit_size is not None:
            out["orbit_size"] = v.orbit_size
        if v.witness is not None:
            out["witness_word"] = list(v.witness)
        if v.kind == "inconclusive":
            out["word_bound"] = v.word_bound
            raise Undecided(out)
    elif sub == "invariant-ray":
        out["ray"] = _ray_report_json(grp.common_fixed_ray(g))
    elif sub == "fibration-class":
        fc = grp.invariant_fibration_class(g)
        out["class_vector"] = list(fc.vector) if fc.vector is not None else None
        if fc.note:
            out["note"] = fc.note
    elif sub == "null-subset":
        elems = grp.null_subset_enumerate(g, args.word_bound)
        out["word_bound"] = args.word_bound
        out["count"] = len(elems)
        out["elements"] = [
            {"word": list(w), "matrix": matrix_to_json(h.m), "class": classify(h).kind} for w, h in elems
        ]
    elif sub == "phi":
        ray, source = _phi_ray(g)
        out["ray_source"] = source
        out["ray"] = real_vector_json(ray, width)
        res = grp.phi_map(g, ray, args.exponent_bound)
        out["lambdas"] = [algebraic_json(x, width) for x in res.lambdas]
        out["is_discrete_cyclic"] = res.is_discrete_cyclic
        out["exponent_bound"] = res.exponent_bound
        if res.is_discrete_cyclic:
            out["image_generator"] = (
                "one" if res.image_generator is None else algebraic_json(res.image_generator, width))
            out["exponents"] = list(res.exponents)
        else:
            raise Undecided(out)
    return out


def _phi_ray(g):
    from .isometry import RealVector

    fixed = grp.common_fixed_ray(g)
    if fixed is not None:
        return RealVector.rational(fixed.ray), "common fixed ray"
    for i, h in enumerate(g.generators):
        if classify(h).is_loxodromic:
            return perron_ray(h).ray, f"Perron ray of generator {i}"
    raise HyperlatError("no common fixed ray and no loxodromic generator to take a ray from")


def equal_powers_report(a: IsometryDoc, b: IsometryDoc, paths, args) -> dict:
    res = grp.equal_up_to_powers(a.isometry, b.isometry, args.exponent_bound, args.pigeonhole_bound)
    out = {
        "command": "equal-powers",
        "input": {"a": paths[0], "b": paths[1]},
        "exponent_bound": args.exponent_bound,
        "pigeonhole_bound": args.pigeonhole_bound,
        "found": res.kind == "found",
    }
    if res.kind == "found":
        from .isometry import power

        out["t1"], out["t2"] = res.t1, res.t2
        out["power_matrix"] = matrix_to_json(power(a.isometry, res.t1).m)
        return out
    out["reason"] = res.reason or "not found within bounds"
    if res.kind == "not_found":
        raise Undecided(out)
    return out


def validate_report(path: str) -> dict:
    doc = load(path)
    kind = {LatticeDoc: "lattice", IsometryDoc: "isometry", GroupDoc: "group"}[type(doc)]
    return {"command": "validate", "input": {"file": path}, "valid": True, "kind": kind,
            "document": document_to_dict(doc)}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperlat", description="Dynamics of isometries of hyperbolic lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify an isometry file")
    c.add_argument("file")
    c.add_argument("--perron", action="store_true", help="also emit the exact Perron eigenray")
    c.add_argument("--precision", help="interval width, e.g. 1e-12 or 1/1000")

    g = sub.add_parser("group", help="group computations on a group file")
    g.add_argument("file")
    g.add_argument("subcommand", choices=["null-entropy", "invariant-ray", "fibration-class", "null-subset", "phi"])
    g.add_argument("--word-bound", type=int, default=grp.DEFAULT_WORD_BOUND)
    g.add_argument("--exponent-bound", type=int, default=grp.DEFAULT_EXPONENT_BOUND)
    g.add_argument("--precision")

    e = sub.add_parser("equal-powers", help="search t1, t2 with A^t1 = B^t2")
    e.add_argument("a")
    e.add_argument("b")
    e.add_argument("--exponent-bound", type=int, default=grp.DEFAULT_EXPONENT_BOUND)
    e.add_argument("--pigeonhole-bound", type=int, default=grp.DEFAULT_PIGEONHOLE_BOUND)

    v = sub.add_parser("validate", help="parse and validate any input file")
    v.add_argument("file")
    return p


def run(argv=None) -> tuple[int, str]:
    """Execute a command; returns (exit code, stdout text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("word_bound", "exponent_bound", "pigeonhole_bound"):
        if getattr(args, name, 1) < 1:
            parser.error(f"--{name.replace('_', '-')} must be at least 1")
    try:
        if args.command == "classify":
            report = classify_report(_load_kind(args.file, IsometryDoc), args.file, _width(args), args.perron)
        elif args.command == "group":
            report = group_report(_load_kind(args.file, GroupDoc), args.file, args.subcommand, args, _width(args))
        elif args.command == "equal-powers":
            a, b = _load_kind(args.a, IsometryDoc), _load_kind(args.b, IsometryDoc)
            if a.isometry.lat != b.isometry.lat:
                raise HyperlatError("the two isometries act on different lattices")
            report = equal_powers_report(a, b, (args.a, args.b), args)
        else:
            report = validate_report(args.file)
    except Undecided as u:
        return EXIT_UNDECIDED, dumps(u.report)
    except MalformedError as exc:
        print(f"hyperlat: internal error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED, ""
    except HyperlatError as exc:
        print(f"hyperlat: {exc}", file=sys.stderr)
        return EXIT_INVALID, ""
    return EXIT_OK, dumps(report)


def main(argv=None) -> int:
    code, text = run(argv)
    if text:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
