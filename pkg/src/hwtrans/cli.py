"""Command-line front end.  Standard output carries JSON only.

Exit codes: 0 success, 2 constraint error, 3 verification failure,
64 unknown subcommand, 65 malformed JSON input.
"""

import argparse
import json
import sys

from .combinatorics import (SkewDiagram, enumerate_tableaux, kostka_polynomial, partition,
                            skew_from_json, skew_to_json, tableau_to_json)
from .config import BoundError
from .hwv import (ConstraintError, build_u, enumerate_labels, label_to_json, pullback_phi,
                  pullback_psi)
from .oracle import (DEFAULT_DEGREE_MAP, fitted_degree_map, graded_nilcone_dim, kronecker,
                     lowest_degree, nilcone_instances, qpoly_to_json)
from .pictures import PreconditionError, enumerate_admissible, mapping_to_json
from .polyring import (InhomogeneousError, multidegree, poly_from_json, poly_to_json, torus_weight,
                       unipotent_invariance_proof)
from .specht import coinvariants_basis, ga_to_json, homspace_basis, homspace_rank, verify_coinvariants
from .verify import reproduce_data_point_a, reproduce_data_point_b, verify_labels

EXIT_OK, EXIT_CONSTRAINT, EXIT_VERIFY, EXIT_USAGE, EXIT_JSON = 0, 2, 3, 64, 65


class MalformedInput(ValueError):
    pass


def progress(msg):
    print(msg, file=sys.stderr, flush=True)


# ----------------------------------------------------------------- parsing

def parse_ints(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def parse_partition(text):
    return partition(parse_ints(text))


def parse_shape(text):
    """'3,2/1' or a JSON object {"outer":..,"inner":..} or a JSON list."""
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(str(exc)) from exc
        try:
            return skew_from_json(obj)
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"not a skew diagram: {text}") from exc
    outer, _, inner = text.partition("/")
    return SkewDiagram(parse_partition(outer), parse_partition(inner))


def read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInput(str(exc)) from exc


# ---------------------------------------------------------------- handlers

def cmd_tableaux(a):
    shape = parse_shape(a.shape)
    weight = parse_ints(a.weight) if a.weight else None
    tabs = enumerate_tableaux(shape, a.flavor, weight=weight, max_entry=a.max_entry)
    return {"shape": skew_to_json(shape), "flavor": a.flavor, "count": len(tabs),
            "tableaux": [tableau_to_json(T) for T in tabs]}, EXIT_OK


def cmd_pictures(a):
    F, E = parse_shape(a.F), parse_shape(a.E)
    pics = enumerate_admissible(F, E)
    return {"F": skew_to_json(F), "E": skew_to_json(E), "count": len(pics),
            "pictures": [{"S": tableau_to_json(S), "alpha": mapping_to_json(al)} for S, al in pics]}, EXIT_OK


def cmd_specht_hom(a):
    E, F = parse_shape(a.E), parse_shape(a.F)
    count = len(enumerate_admissible(F, E))
    rk = homspace_rank(E, F)
    out = {"E": skew_to_json(E), "F": skew_to_json(F), "pictures": count, "rank": rk,
           "ok": rk == count}
    if a.elements:
        out["basis"] = [ga_to_json(x) for x in homspace_basis(E, F)]
    return out, EXIT_OK if out["ok"] else EXIT_VERIFY


def cmd_coinvariants(a):
    E, F = parse_partition(a.E), parse_partition(a.F)
    nu = parse_ints(a.nu)
    count, dim, independent = verify_coinvariants(E, F, nu)
    pairs = coinvariants_basis(E, F, nu)
    out = {"E": list(E), "F": list(F), "nu": list(nu), "count": count, "dimension": dim,
           "independent": independent, "ok": count == dim and independent,
           "pairs": [[tableau_to_json(P), tableau_to_json(T)] for P, T in pairs]}
    return out, EXIT_OK if out["ok"] else EXIT_VERIFY


def _labels(a):
    lam, mu = parse_partition(a.lam), parse_partition(a.mu)
    nu = parse_ints(a.nu) if a.nu else None
    return lam, mu, enumerate_labels(lam, mu, a.m, a.r, a.s, nu=nu)


def cmd_hwv_build(a):
    lam, mu, labels = _labels(a)
    items = []
    for k, L in enumerate(labels):
        progress(f"building label {k + 1}/{len(labels)}")
        items.append({"label": label_to_json(L), "poly": poly_to_json(build_u(L, a.r, a.s, a.m))})
    return {"lambda": list(lam), "mu": list(mu), "m": a.m, "r": a.r, "s": a.s,
            "count": len(items), "labels": items}, EXIT_OK


def cmd_hwv_verify(a):
    if a.poly:
        try:
            p = poly_from_json(read_json(a.poly))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"not a polynomial: {exc}") from exc
        res = unipotent_invariance_proof(p)
        try:
            wt = torus_weight(p)
            md = multidegree(p)
        except InhomogeneousError as exc:
            return {"invariant": bool(res), "homogeneous": False, "error": str(exc), "ok": False}, EXIT_VERIFY
        out = {"invariant": bool(res), "witness": res.witness, "homogeneous": True,
               "weight": [list(wt[0]), list(wt[1])], "multidegree": list(md), "ok": bool(res)}
        return out, EXIT_OK if out["ok"] else EXIT_VERIFY
    progress("verifying labels against oracles")
    out = verify_labels(parse_partition(a.lam), parse_partition(a.mu), a.m, a.r, a.s,
                              seed=a.seed, brute_force=not a.no_brute_force)
    return out, EXIT_OK if out["ok"] else EXIT_VERIFY


def cmd_pullback(a):
    lam, mu, labels = _labels(a)
    items = []
    for k, L in enumerate(labels):
        progress(f"pulling back label {k + 1}/{len(labels)}")
        p = build_u(L, a.r, a.s, a.m)
        if a.tuple_length:
            q = pullback_psi(p, a.n, a.tuple_length, a.max_word_len)
        else:
            q = pullback_phi(p, a.n)
        items.append({"label": label_to_json(L), "poly": poly_to_json(q)})
    return {"lambda": list(lam), "mu": list(mu), "n": a.n, "count": len(items), "pullbacks": items}, EXIT_OK


def cmd_oracle_kostka(a):
    lam, mu = parse_partition(a.lam), parse_partition(a.mu)
    poly = kostka_polynomial(lam, mu)
    return {"lambda": list(lam), "mu": list(mu), "coeffs": [[d, c] for d, c in sorted(poly.items())],
            "value": sum(poly.values())}, EXIT_OK


def cmd_oracle_kronecker(a):
    return {"value": kronecker(parse_partition(a.lam), parse_partition(a.mu), parse_partition(a.eta))}, EXIT_OK


def cmd_oracle_graded(a):
    chi = parse_ints(a.chi)
    dm = DEFAULT_DEGREE_MAP
    calibrated = False
    if a.calibrate:
        progress("calibrating the degree map on brute-force instances")
        inst = nilcone_instances(a.calibrate_n, a.calibrate_d)
        closed = [c for _, c, _ in inst if c and c[-1] >= -1]
        dm = fitted_degree_map(inst, closed, a.calibrate_d)
        calibrated = True
    poly = graded_nilcone_dim(chi, dm)
    out = qpoly_to_json(poly, dm)
    d, c = lowest_degree(poly)
    out.update({"chi": list(chi), "lowest_degree": d, "lowest_dimension": c, "calibrated": calibrated})
    return out, EXIT_OK


def cmd_reproduce(a):
    progress(f"reproducing {a.target}")
    if a.target == "remark3-a":
        out = reproduce_data_point_a()
    elif a.target == "remark3-b":
        out = reproduce_data_point_b()
    else:
        checks = [reproduce_data_point_a(), reproduce_data_point_b()]
        out = {"check": "remark3", "checks": checks, "ok": all(c["ok"] for c in checks)}
    return out, EXIT_OK if out["ok"] else EXIT_VERIFY


# ------------------------------------------------------------------ parser

def _label_args(p):
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--nu", default=None, help="restrict to one multidegree")


def build_parser():
    ap = argparse.ArgumentParser(prog="hwtrans", description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--indent", type=int, default=None, help="pretty-print the JSON output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tableaux", help="enumerate tableaux of a flavor")
    p.add_argument("--shape", required=True, help="'3,2/1' or JSON")
    p.add_argument("--flavor", default="semistandard",
                   choices=["ordered", "semistandard", "row_semistandard", "standard"])
    p.add_argument("--weight", default=None)
    p.add_argument("--max-entry", type=int, default=None)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("pictures", help="admissible semi-standard tableaux of shape F for E")
    p.add_argument("--F", required=True)
    p.add_argument("--E", required=True)
    p.set_defaults(func=cmd_pictures)

    p = sub.add_parser("specht-hom", help="hom-space rank against the picture count")
    p.add_argument("--E", required=True)
    p.add_argument("--F", required=True)
    p.add_argument("--elements", action="store_true", help="emit the basis elements")
    p.set_defaults(func=cmd_specht_hom)

    p = sub.add_parser("coinvariants", help="coinvariant basis against the quotient dimension")
    p.add_argument("--E", required=True)
    p.add_argument("--F", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_coinvariants)

    p = sub.add_parser("hwv-build", help="labels and highest weight vectors")
    _label_args(p)
    p.set_defaults(func=cmd_hwv_build)

    p = sub.add_parser("hwv-verify", help="verify labels against oracles, or one polynomial")
    p.add_argument("--lambda", dest="lam", default="")
    p.add_argument("--mu", default="")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--poly", default=None, help="polynomial JSON file ('-' for stdin)")
    p.add_argument("--no-brute-force", action="store_true")
    p.set_defaults(func=cmd_hwv_verify)

    p = sub.add_parser("pullback", help="pull labels back to n x n matrices")
    _label_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tuple-length", type=int, default=0, help="use words in an l-tuple")
    p.add_argument("--max-word-len", type=int, default=1)
    p.set_defaults(func=cmd_pullback)

    p = sub.add_parser("oracle-kostka", help="Kostka-Foulkes polynomial via charge")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_oracle_kostka)

    p = sub.add_parser("oracle-kronecker", help="Kronecker coefficient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--eta", required=True)
    p.set_defaults(func=cmd_oracle_kronecker)

    p = sub.add_parser("oracle-graded", help="graded dimension on the nilpotent cone")
    p.add_argument("--chi", required=True, help="signed list, e.g. --chi=1,0,-1")
    p.add_argument("--calibrate", action="store_true", help="fit the degree map first")
    p.add_argument("--calibrate-n", type=int, default=3)
    p.add_argument("--calibrate-d", type=int, default=4)
    p.set_defaults(func=cmd_oracle_graded)

    p = sub.add_parser("reproduce", help="reproduce published data points")
    p.add_argument("target", choices=["remark3", "remark3-a", "remark3-b"])
    p.set_defaults(func=cmd_reproduce)
    return ap


SUBCOMMANDS = ("tableaux", "pictures", "specht-hom", "coinvariants", "hwv-build", "hwv-verify",
               "pullback", "oracle-kostka", "oracle-kronecker", "oracle-graded", "reproduce")


def _first_positional(argv):
    skip = False
    for x in argv:
        if skip:
            skip = False
            continue
        if x in ("--seed", "--indent"):
            skip = True
            continue
        if x.startswith("-"):
            continue
        return x
    return None


def run(argv=None, out=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    cmd = _first_positional(argv)
    if cmd is not None and cmd not in SUBCOMMANDS:
        print(f"unknown subcommand: {cmd}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else (EXIT_USAGE if cmd is None else EXIT_CONSTRAINT)
    try:
        doc, code = args.func(args)
    except MalformedInput as exc:
        print(f"malformed JSON input: {exc}", file=sys.stderr)
        return EXIT_JSON
    except (ConstraintError, BoundError, PreconditionError, ValueError) as exc:
        print(f"constraint error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    json.dump(doc, out, indent=args.indent)
    out.write("\n")
    return code


def main():
    sys.exit(run())
