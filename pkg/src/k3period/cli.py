"""Command-line interface: one JSON document on stdout per invocation.

Exit status 0 on success, 1 on domain errors (JSON error object on stderr),
2 on usage errors.
"""
import argparse
import json
import sys

from . import grassmann, serialize
from .ade import ade_classify
from .errors import K3Error, PreconditionError
from .isometry import (
    DEFAULT_TOL,
    Isometry,
    certify_generators,
    classify_component,
    fixed_plane,
    orbit,
    reflection,
)
from .lattice import Lattice, LatticeVector, builtin_lattice
from .linalg import signature
from .period import period_check
from .reduction import EnumerationStats, enumerate_norm

BUILTINS = ("k3", "e8", "-e8", "u", "a1", "-a1")


def _lattice(args):
    if getattr(args, "gram", None):
        doc = serialize.validate(serialize.load_json(args.gram), "gram")
        return Lattice(doc["gram"], "custom")
    return builtin_lattice(getattr(args, "name", None) or "k3")


def _plane(spec, L, heuristic_denominator=None):
    if spec == "p0":
        return grassmann.p0(L), False
    return serialize.plane_from_json(serialize.load_json(spec), L, heuristic_denominator)


def _vectors(spec, L):
    """A ``--root``/``--vector`` value: one vector or a list of vectors."""
    doc = serialize.load_json(spec)
    if isinstance(doc, list) and doc and all(isinstance(x, list) for x in doc):
        return [LatticeVector(serialize.vector_from_json(x), L) for x in doc]
    return [LatticeVector(serialize.vector_from_json(doc), L)]


def _all_vectors(specs, L):
    return [v for s in specs or [] for v in _vectors(s, L)]


def cmd_lattice_info(args):
    L = _lattice(args)
    p, n, z = L.signature
    return {
        "rank": L.rank,
        "signature": [p, n] if z == 0 else [p, n, z],
        "det": L.det,
        "even": L.even,
        "unimodular": L.unimodular,
    }


def cmd_roots_enum(args):
    L = _lattice(args)
    p, n, z = signature(L.gram)
    if z or (p and n):
        raise PreconditionError(f"lattice is not definite (signature {p},{n},{z})")
    sign = 1 if p else -1
    stats = EnumerationStats()
    sols = enumerate_norm(sign * L.gram, 2, stats=stats, jobs=args.jobs) if L.rank else []
    roots = [LatticeVector(v, L) for v in sols]
    return {
        "norm": 2 * sign,
        "count": len(roots),
        "vectors": [list(v.coords) for v in roots],
        "ade": serialize.ade_to_json(ade_classify(roots)),
        "stats": stats.as_dict(),
    }


def cmd_reflect(args):
    L = _lattice(args)
    (delta,) = _vectors(args.root, L)
    s = reflection(delta)
    if args.vector is None:
        return serialize.isometry_to_json(s)
    images = [list(s(v).coords) for v in _vectors(args.vector, L)]
    return images[0] if len(images) == 1 else images


def cmd_isometry_classify(args):
    L = _lattice(args)
    doc = serialize.validate(serialize.load_json(args.matrix), "isometry")
    return classify_component(Isometry(doc["matrix"], L)).as_dict()


def cmd_plane_check(args):
    L = _lattice(args)
    P, heuristic = _plane(args.plane, L, args.heuristic_denominator)
    out = serialize.plane_to_json(P)
    out["valid"] = True
    out["restricted_gram"] = serialize.rat_matrix_to_json(P.restricted_gram())
    out["chart_dimension"] = grassmann.chart_dimension(L)
    if heuristic:
        out["heuristic"] = True
    return out


def cmd_period_check(args):
    L = _lattice(args)
    P, heuristic = _plane(args.plane, L, args.heuristic_denominator)
    out = serialize.verdict_to_json(period_check(P, jobs=args.jobs))
    if heuristic:
        out["heuristic"] = True
        out["plane"] = serialize.plane_to_json(P)
    return out


def cmd_fixed_plane(args):
    L = _lattice(args)
    (delta,) = _vectors(args.root, L)
    (cert,) = certify_generators([delta], tol=args.tol)
    return serialize.certificate_to_json(cert)


def cmd_certify(args):
    L = _lattice(args)
    roots = _all_vectors(args.root, L)
    return [serialize.certificate_to_json(c) for c in certify_generators(roots, tol=args.tol)]


def cmd_distance(args):
    L = _lattice(args)
    if len(args.plane) != 2:
        raise PreconditionError("distance needs exactly two --plane arguments")
    P, _ = _plane(args.plane[0], L)
    Q, _ = _plane(args.plane[1], L)
    return serialize.distance_to_json(grassmann.distance(P, Q))


def cmd_orbit(args):
    L = _lattice(args)
    (v,) = _vectors(args.vector, L)
    gens = [reflection(r) for r in _all_vectors(args.root, L)]
    for spec in args.matrix or []:
        doc = serialize.validate(serialize.load_json(spec), "isometry")
        gens.append(Isometry(doc["matrix"], L))
    res = orbit(v, gens, cap=args.cap)
    return {
        "size": len(res.vectors),
        "truncated": res.truncated,
        "vectors": [list(x.coords) for x in res.vectors],
    }


def _add_lattice(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--name", choices=BUILTINS, help="built-in lattice (default k3)")
    g.add_argument("--gram", help='JSON file (or inline JSON) {"gram": [[...]]}')


def build_parser():
    parser = argparse.ArgumentParser(prog="k3period", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        _add_lattice(p)
        p.set_defaults(func=func)
        return p

    command("lattice-info", cmd_lattice_info, "rank, signature, determinant, parity")

    p = command("roots-enum", cmd_roots_enum, "all vectors of norm +-2 in a definite lattice")
    p.add_argument("--jobs", type=int, default=1)

    p = command("reflect", cmd_reflect, "reflection in a vector of norm +-2")
    p.add_argument("--root", required=True)
    p.add_argument("--vector")

    p = command("isometry-classify", cmd_isometry_classify, "component of O(p,q) of an isometry")
    p.add_argument("--matrix", required=True)

    p = command("plane-check", cmd_plane_check, "validate a positive plane")
    p.add_argument("--plane", required=True)
    p.add_argument("--heuristic-denominator", type=int)

    p = command("period-check", cmd_period_check, "smooth or orbifold verdict for a plane")
    p.add_argument("--plane", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--heuristic-denominator", type=int)

    p = command("fixed-plane", cmd_fixed_plane, "fixed-plane certificate for one reflection")
    p.add_argument("--root", required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = command("certify", cmd_certify, "fixed-plane certificates for many reflections")
    p.add_argument("--root", action="append", required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = command("distance", cmd_distance, "symmetric-space distance between two planes")
    p.add_argument("--plane", action="append", required=True)

    p = command("orbit", cmd_orbit, "orbit of a vector under reflections/isometries")
    p.add_argument("--vector", required=True)
    p.add_argument("--root", action="append")
    p.add_argument("--matrix", action="append")
    p.add_argument("--cap", type=int, default=10000)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        doc = args.func(args)
    except K3Error as exc:
        stderr.write(json.dumps({"error": exc.code, "detail": str(exc)}) + "\n")
        return 1
    except ValueError as exc:
        stderr.write(json.dumps({"error": "invalid-input", "detail": str(exc)}) + "\n")
        return 1
    stdout.write(serialize.dumps(doc) + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
