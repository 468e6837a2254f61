"""Command-line entry point: every check prints one JSON report on stdout.

Exit codes: 0 when all checks pass, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys

from .clifford import literal_conjugate_failures, similarity_check, verify_clifford
from .covariance import induced_S, minkowski_metric, spin_to_lorentz
from .dforms import PolySyntaxError, d3_check, parse_polyfn, random_poly
from .hilbert import hilbert_report
from .linalg import Matrix, SingularMatrixError, parse_matrix
from .oracle import DegreeCapError, ideal_contains, nonhomogeneous_collapse_check, quotient_basis
from .poly import UnknownGeneratorError, format_word, parse_poly
from .presentation import AlgebraType, PresentationError, make_presentation
from .rewrite import RewriteUnsupportedError, normalize, six_sum
from .scalars import J, J2, ScalarSyntaxError, parse_scalar, zeta_power

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_SEED = 20240601

# (source, target): the quotient map source -> target exists
HOMOMORPHISMS = (
    ("s", "s1"), ("s1", "s0"),
    ("sbar", "s1"),
    ("lambda0", "lambda1"), ("lambda1", "lambda"), ("lambda1", "lambdabar"),
)


class UsageError(Exception):
    pass


def _report(command, inputs, results, passed):
    return {"command": command, "inputs": inputs, "results": results, "passed": bool(passed)}


def _algebra(text):
    try:
        return AlgebraType.parse(text)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc


def _terms_json(p):
    return [{"word": format_word(w), "coeff": str(c)} for w, c in p.terms()]


# -- subcommands ---------------------------------------------------------------


def cmd_normalize(args):
    kw = {}
    if args.omega:
        kw["omega"] = parse_scalar(args.omega)
    if args.theta_theta_bar:
        kw["theta_theta_bar"] = parse_scalar(args.theta_theta_bar)
    pres = make_presentation(_algebra(args.algebra), args.N, args.n, **kw)
    nf = normalize(parse_poly(args.word), pres)
    inputs = {"algebra": pres.algebra_type.value, "N": args.N, "n": args.n, "word": args.word}
    return _report("normalize", inputs, {"terms": _terms_json(nf), "text": str(nf)}, True)


def cmd_basis(args):
    pres = make_presentation(_algebra(args.algebra), args.N, args.n)
    qb = quotient_basis(pres, args.degree)
    inputs = {"algebra": pres.algebra_type.value, "N": args.N, "n": args.n, "degree": args.degree}
    return _report("basis", inputs, qb.to_json(), True)


def cmd_hilbert(args):
    rep = hilbert_report(_algebra(args.algebra), args.N, args.dmax, n=args.n)
    inputs = {"algebra": rep["algebra"], "N": args.N, "n": args.n, "dmax": args.dmax}
    # algebras without a closed form only report their table
    return _report("hilbert", inputs, rep, rep["match"] or rep["closed_form"] is None)


def check_homomorphisms(N=2, degree=3):
    pres = {}
    for pair in HOMOMORPHISMS:
        for name in pair:
            pres.setdefault(name, make_presentation(name, N))
    rows = []
    for src, dst in HOMOMORPHISMS:
        rows.append({
            "source": src,
            "target": dst,
            "surjection": ideal_contains(pres[dst], pres[src], degree),
            "reverse_surjection": ideal_contains(pres[src], pres[dst], degree),
        })
    return rows


def check_omega_scan():
    from .poly import Gen

    t1, t2, x1, x2 = Gen("theta", 1), Gen("theta", 2), Gen("xi", 1), Gen("xi", 2)
    rows = []
    for k in range(12):
        omega = zeta_power(k)
        pres = make_presentation(AlgebraType.CombinedZ6, 2, 2, omega=omega)
        rows.append({
            "power": k,
            "omega": str(omega),
            "theta_xi_theta": not six_sum(t1, x1, t2, pres) and not six_sum(t1, x1, t1, pres),
            "xi_theta_xi": not six_sum(x1, t1, x2, pres),
        })
    return rows


def check_sixsum(N=2, n=2):
    """Six-permutation sums of generator triples that involve at most two kinds."""
    pres = make_presentation(AlgebraType.CombinedZ6, N, n)
    covered, uncovered = [], []
    for triple in itertools.combinations_with_replacement(pres.generators, 3):
        kinds = {g.kind for g in triple}
        entry = {"factors": format_word(triple), "vanishes": not six_sum(*triple, pres)}
        (covered if len(kinds) <= 2 else uncovered).append(entry)
    return covered, uncovered


def cmd_check(args):
    name = args.which
    if name == "homomorphisms":
        rows = check_homomorphisms(args.N or 2, args.degree)
        return _report("check homomorphisms", {"N": args.N or 2, "degree": args.degree},
                       rows, all(r["surjection"] for r in rows))
    if name == "omega-scan":
        rows = check_omega_scan()
        pass_set = [r["omega"] for r in rows if r["theta_xi_theta"]]
        ok = set(pass_set) == {str(J), str(J2)} and all(r["xi_theta_xi"] for r in rows)
        return _report("check omega-scan", {}, {"scan": rows, "pass_set": pass_set}, ok)
    if name == "nonhomogeneous":
        res = {
            "theta_xi": nonhomogeneous_collapse_check(),
            "theta_bar_xi_bar": nonhomogeneous_collapse_check(conjugate=True),
        }
        return _report("check nonhomogeneous", {"rho": "canonical"}, res, all(res.values()))
    if name == "sixsum":
        N = args.N or 2
        covered, uncovered = check_sixsum(N, args.n or 2)
        res = {"checked": covered, "three_kinds": uncovered}
        return _report("check sixsum", {"N": N, "n": args.n or 2}, res,
                       all(e["vanishes"] for e in covered))
    raise UsageError(f"unknown check {name!r}")


def cmd_clifford(args):
    report = verify_clifford()
    rng = random.Random(args.seed)
    sims = []
    while len(sims) < args.trials:
        P = Matrix([[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
        if P.det():
            sims.append(similarity_check(P).passed)
    res = report.to_json()
    res["similarity"] = {"trials": len(sims), "passed": all(sims)}
    res["literal_conjugate_eta_failures"] = ["".join(map(str, t)) for t in literal_conjugate_failures()]
    return _report("clifford-verify", {"seed": args.seed, "trials": args.trials}, res,
                   report.passed and all(sims))


def cmd_dforms(args):
    if args.poly:
        polys = [parse_polyfn(args.poly)]
    else:
        if args.vars < 1 or args.degree < 0 or args.trials < 0:
            raise UsageError("--vars must be >= 1 and --degree, --trials >= 0")
        rng = random.Random(args.seed)
        polys = [random_poly(rng, args.vars, args.degree) for _ in range(args.trials)]
    failures = [str(f) for f in polys if not d3_check(f)]
    inputs = {"vars": args.vars, "degree": args.degree, "trials": args.trials,
              "seed": args.seed, "poly": args.poly}
    return _report("dforms d3-check", inputs, {"checked": len(polys), "failures": failures},
                   not failures)


def cmd_lorentz(args):
    U = parse_matrix(args.u)
    if U.shape != (2, 2):
        raise UsageError("--u must be a 2x2 matrix")
    S = induced_S(U)
    Lam = spin_to_lorentz(U)
    g = minkowski_metric()
    res = {
        "S": S.to_strings(),
        "detS": str(S.det()),
        "detU": str(U.det()),
        "Lambda": Lam.to_strings(),
        "detLambda": str(Lam.det()),
        "metric_preserved": Lam.T @ g @ Lam == g,
    }
    return _report("lorentz", {"u": args.u}, res, res["metric_preserved"])


# -- parser --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ternalg", description="Exact checks for Z3-graded and Z6-graded algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("normalize", help="normal form of a word or polynomial")
    s.add_argument("--algebra", required=True)
    s.add_argument("-N", type=int, required=True)
    s.add_argument("-n", type=int, default=0)
    s.add_argument("--word", required=True)
    s.add_argument("--omega", help="xi/theta phase (scalar syntax)")
    s.add_argument("--theta-theta-bar", help="theta/theta-bar phase (scalar syntax)")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("basis", help="oracle basis of one degree")
    s.add_argument("--algebra", required=True)
    s.add_argument("-N", type=int, required=True)
    s.add_argument("-n", type=int, default=0)
    s.add_argument("--degree", type=int, required=True)
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("hilbert", help="per-degree dimensions and closed-form comparison")
    s.add_argument("--algebra", required=True)
    s.add_argument("-N", type=int, required=True)
    s.add_argument("-n", type=int, default=0)
    s.add_argument("--dmax", type=int, required=True)
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("check", help="named structural checks")
    s.add_argument("which", choices=["homomorphisms", "omega-scan", "nonhomogeneous", "sixsum"])
    s.add_argument("-N", type=int, default=None)
    s.add_argument("-n", type=int, default=None)
    s.add_argument("--degree", type=int, default=3)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("clifford-verify", help="ternary Clifford identities")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--trials", type=int, default=20)
    s.set_defaults(func=cmd_clifford)

    s = sub.add_parser("dforms", help="Z3-graded differential forms")
    dsub = s.add_subparsers(dest="dcommand", required=True, parser_class=_Parser)
    t = dsub.add_parser("d3-check", help="check d^3 f = 0")
    t.add_argument("--vars", type=int, default=3)
    t.add_argument("--degree", type=int, default=4)
    t.add_argument("--trials", type=int, default=50)
    t.add_argument("--seed", type=int, default=DEFAULT_SEED)
    t.add_argument("--poly", help="check one polynomial, e.g. 'x1^2*x2 + 3*x3'")
    t.set_defaults(func=cmd_dforms)

    s = sub.add_parser("lorentz", help="induced xi and four-vector transformations of U")
    s.add_argument("--u", required=True, help="2x2 matrix 'a,b;c,d' in scalar syntax")
    s.set_defaults(func=cmd_lorentz)
    return p


_INPUT_ERRORS = (
    UsageError, ScalarSyntaxError, UnknownGeneratorError, PolySyntaxError,
    PresentationError, DegreeCapError, RewriteUnsupportedError, SingularMatrixError,
)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        report = args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"ternalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return EXIT_OK if report["passed"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
