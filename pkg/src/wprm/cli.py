"""Command-line front end: points, params, verify and table."""
import argparse
import csv
import io
import json
import os
import sys
import tempfile
from math import inf

from .errors import BudgetError, DomainError, LambdaFieldError, PreconditionError

EXIT_OK, EXIT_FAIL, EXIT_PRE, EXIT_BUDGET = 0, 1, 2, 3

SUITES = ("recursive", "dual", "ssc", "wprs", "hull", "dual-monomial", "schur", "idp",
          "delta", "prm-dual", "bounds-sandwich")


def parse_weights(s):
    try:
        w = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers, got {s!r}")
    if not w or min(w) < 1:
        raise argparse.ArgumentTypeError(f"weights must be positive, got {s!r}")
    return w


def parse_range(s):
    """'a..b' (inclusive) or a single integer."""
    try:
        if ".." in s:
            a, b = s.split("..")
            a, b = int(a), int(b)
        else:
            a = b = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"degree must be an integer or a..b, got {s!r}")
    if b < a:
        raise argparse.ArgumentTypeError(f"empty degree range {s!r}")
    return list(range(a, b + 1))


def parse_exponents(s):
    return [tuple(int(x) for x in part.split(",")) for part in s.split(";")]


def _clean(x):
    if isinstance(x, float) and x == inf:
        return None
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if hasattr(x, "item") and not isinstance(x, (str, bytes)):
        return x.item()
    return x


def dumps(obj):
    return json.dumps(_clean(obj), sort_keys=True, indent=2) + "\n"


def write_atomic(path, text):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".wprm-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(args, text):
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)


# commands

def cmd_points(args):
    from .space import enumerate_points
    S = enumerate_points(args.q, args.w, args.layout)
    if args.json:
        out = S.to_json()
        out["n"] = S.n
        emit(args, dumps(out))
    else:
        lines = [f"# q={args.q} w={','.join(map(str, args.w))} layout={args.layout} n={S.n}"]
        lines += [" ".join(str(int(x)) for x in p) for p in S.points]
        emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_params(args):
    from .codes import weight_hierarchy
    from .construct import build_wprm
    out = []
    status = EXIT_OK
    for d in args.d:
        C = build_wprm(args.q, args.w, d, layout=args.layout)
        rec = {"q": args.q, "w": list(args.w), "d": d, "n": C.n, "k": C.k,
               "d1": None, "hierarchy": None, "partial": False}
        try:
            h = weight_hierarchy(C.code, budget=args.ghw_budget)
            rec["hierarchy"] = list(h)
            rec["d1"] = h[0] if h else None
        except BudgetError as e:
            rec["partial"] = True
            rec["error"] = str(e)
            status = EXIT_BUDGET
        out.append(rec)
    emit(args, dumps(out[0] if len(out) == 1 else out))
    return status


def _need(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise PreconditionError(f"--{n.replace('_', '-')} is required for this suite")


def _degrees(args):
    _need(args, "d")
    return args.d


def _verify_one(suite, args):
    """Return a list of (ok, report) pairs."""
    q, w = args.q, args.w
    if suite == "recursive":
        from .construct import recursive_decomposition
        return [(r.ok, r.to_json()) for r in (recursive_decomposition(q, w, d) for d in _degrees(args))]
    if suite == "dual":
        from .construct import dual_recursive
        return [(r.ok, r.to_json()) for r in (dual_recursive(q, w, d) for d in _degrees(args))]
    if suite == "ssc":
        from .construct import ssc_recursive
        _need(args, "qprime")
        out = []
        for d in _degrees(args):
            r = ssc_recursive(q, args.qprime, w, d)
            out.append((r["equal"] and r["additive"], r))
        return out
    if suite == "wprs":
        from .construct import wprs_check
        if len(w) != 2:
            raise PreconditionError("the wprs suite needs exactly two weights")
        out = []
        for d in _degrees(args):
            r = wprs_check(q, w[0], w[1], d)
            out.append((r["ok"], r))
        return out
    if suite == "hull":
        from .duals import hull_check
        out = []
        for d in _degrees(args):
            r = hull_check(q, w, d)
            if not r["applicable"]:
                raise PreconditionError(f"hull check not applicable at d={d}: {r['reason']} (D={r['D']})")
            out.append((r["agree"] and r["unique_ok"], r))
        return out
    if suite == "dual-monomial":
        from .duals import dual_monomial_description
        from .field import field
        from .monomials import wdeg
        out = []
        for d in _degrees(args):
            cand = None
            r0 = dual_monomial_description(q, w, d, args.dstar)
            ds = r0["dstar"]
            terms = parse_exponents(args.binomial) if args.binomial else [(116, 4, 4), (0, 28, 20)]
            if len(terms) == 2 and all(len(t) == len(w) and wdeg(t, w) == ds for t in terms):
                cand = [[(1, terms[0]), (field(q).neg(1), terms[1])]]
            r = dual_monomial_description(q, w, d, ds, candidates=cand) if cand else r0
            r.pop("span")
            r.pop("dual")
            ok = True
            if len(r["B"]) == 1:
                ok = r["complete"] and r["divides_all"] and r["excluded_size_ok"]
            if cand:
                r["binomial"] = [list(t) for t in terms]
                c = r["candidates"][0]
                ok = ok and c["in_dual"]
            out.append((ok, r))
        return out
    if suite == "schur":
        from .lattice import idp_pair_check, schur_check
        _need(args, "d1", "d2")
        r = schur_check(q, w, args.d1, args.d2, seed=args.seed)
        idp = idp_pair_check(args.d1, args.d2, w)
        r["idp_holds"] = idp["holds"]
        ok = r.get("direct_agrees", True) and (r["equal"] or r.get("witnesses_complete", False))
        if args.d1 + args.d2 < min(w) * q:
            ok = ok and r["equal"] == idp["holds"]
        r["strict_inclusion"] = not r["equal"]
        return [(ok, r)]
    if suite == "idp":
        from .lattice import idp_check, idp_pair_check
        if args.d1 is not None and args.d2 is not None:
            r = idp_pair_check(args.d1, args.d2, w)
        else:
            _need(args, "delta")
            r = idp_check(args.delta, w, args.ell_max)
        return [(True, r)]
    if suite == "delta":
        from .construct import compare_delta
        out = []
        for d in _degrees(args):
            r = compare_delta(q, w, d)
            out.append(((not r["sufficient"]) or r["comparison"], r))
        return out
    if suite == "prm-dual":
        from .duals import prm_dual_structure
        _need(args, "m")
        ds = args.d if args.d is not None else list(range(1, args.m * (q - 1) + 1))
        return [(r["equal"], r) for r in (prm_dual_structure(q, args.m, d) for d in ds)]
    if suite == "bounds-sandwich":
        return [_sandwich(q, w, d) for d in _degrees(args)]
    raise DomainError(f"unknown suite {suite!r}")


def _sandwich(q, w, d):
    from .bounds import lower_bound_hierarchy, upper_bound_components, upper_bound_lowdeg
    from .codes import weight_hierarchy
    from .construct import build_wprm
    from .monomials import denumerant
    exact = weight_hierarchy(build_wprm(q, w, d).code)
    lower = lower_bound_hierarchy(q, w, d)
    ok = len(lower) == len(exact) and all(a <= b for a, b in zip(lower, exact))
    upper = []
    for r in range(1, len(exact) + 1):
        try:
            u = upper_bound_components(q, w, d, r)
        except DomainError:
            u = None
        upper.append(u)
        if u is not None:
            ok = ok and exact[r - 1] <= u
    lowdeg = []
    if 1 <= d <= min(w) * q:
        for r in range(1, min(len(exact), denumerant(d, w)) + 1):
            try:
                u = upper_bound_lowdeg(q, w, d, r)
            except PreconditionError:
                u = None
            lowdeg.append(u)
            if u is not None:
                ok = ok and exact[r - 1] <= u
    return ok, {"q": q, "w": list(w), "d": d, "exact": list(exact), "lower": list(lower),
                "upper_components": upper, "upper_lowdeg": lowdeg}


def cmd_verify(args):
    needs_qw = args.suite not in ("idp",)
    if needs_qw:
        _need(args, "q")
    if args.suite != "prm-dual":
        _need(args, "w")
    results = _verify_one(args.suite, args)
    ok = all(r[0] for r in results)
    reps = []
    for good, rep in results:
        rep = dict(rep)
        rep["pass"] = bool(good)
        reps.append(rep)
    emit(args, dumps({"suite": args.suite, "pass": ok, "seed": args.seed, "results": reps}))
    return EXIT_OK if ok else EXIT_FAIL


# tables

TABLE_FIELDS = ["label", "kind", "q", "w", "d", "n", "k", "hierarchy"]


def _table_row(row):
    from .bounds import best_over_orderings
    from .codes import weight_hierarchy
    from .construct import build_wprm, build_wrm, build_wrm_congruence, prs_code
    from .space import canonical_points
    kind = row.get("kind", "wprm")
    q, d = int(row["q"]), int(row["d"])
    w = tuple(int(x) for x in row["w"])
    label = row.get("label", "")
    if kind == "bounds":
        best, traces = best_over_orderings(q, w, d, row.get("provider", "exact"))
        out = [{"label": label, "kind": "bound", "q": q, "w": list(p), "d": d,
                "hierarchy": list(v)} for p, v in traces.items()]
        out.append({"label": label, "kind": "bound-max", "q": q, "w": list(w), "d": d,
                    "hierarchy": list(best)})
        C = build_wprm(q, w, d).code
        out.append({"label": label, "kind": "exact", "q": q, "w": list(w), "d": d,
                    "n": C.n, "k": C.k, "hierarchy": list(weight_hierarchy(C))})
        return out
    if kind == "wprm":
        C = build_wprm(q, w, d).code
    elif kind == "wrm":
        C = build_wrm(q, w, d)
    elif kind == "wrm-congruence":
        C = build_wrm_congruence(q, w[0], w[1:], d)
    elif kind == "prs":
        C = prs_code(q, d, canonical_points(q, (1, 1)))
    else:
        raise DomainError(f"unknown table row kind {kind!r}")
    return [{"label": label, "kind": kind, "q": q, "w": list(w), "d": d, "n": C.n, "k": C.k,
             "hierarchy": list(weight_hierarchy(C))}]


def cmd_table(args):
    with open(args.specfile) as fh:
        text = fh.read()
    spec = json.loads(text) if text.strip() else {}
    if isinstance(spec, list):
        spec = {"rows": spec}
    fmt = args.format or spec.get("format", "csv")
    rows = []
    for r in spec.get("rows", []):
        rows.extend(_table_row(r))
    if fmt == "json":
        emit(args, dumps(rows))
    elif fmt == "csv":
        buf = io.StringIO()
        wr = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
        if rows:
            wr.writeheader()
        for r in rows:
            r = dict(r)
            r["w"] = ",".join(map(str, r["w"]))
            r["hierarchy"] = " ".join(map(str, r["hierarchy"]))
            wr.writerow(r)
        emit(args, buf.getvalue())
    else:
        raise DomainError(f"unknown table format {fmt!r}")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="wprm", description="Weighted projective Reed-Muller codes.")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled rank checks (default 0)")
    p.add_argument("--out", help="write output here (atomically) instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("points", help="list the representatives of P(w)(F_q)")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--w", type=parse_weights, required=True)
    sp.add_argument("--layout", choices=("canonical", "standard", "structured"), default="canonical")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_points)

    sp = sub.add_parser("params", help="length, dimension and weight hierarchy")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--w", type=parse_weights, required=True)
    sp.add_argument("--d", type=parse_range, required=True)
    sp.add_argument("--layout", choices=("canonical", "standard", "structured"), default="canonical")
    sp.add_argument("--ghw-budget", type=lambda s: int(float(s)), default=None)
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--q", type=int)
    sp.add_argument("--w", type=parse_weights)
    sp.add_argument("--d", type=parse_range)
    sp.add_argument("--qprime", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--d1", type=int)
    sp.add_argument("--d2", type=int)
    sp.add_argument("--delta", type=int)
    sp.add_argument("--ell-max", type=int)
    sp.add_argument("--dstar", type=int)
    sp.add_argument("--binomial", help="x^A - x^B given as 'A;B' with comma-separated exponents")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="build a CSV/JSON table from a JSON row spec")
    sp.add_argument("specfile")
    sp.add_argument("--format", choices=("csv", "json"))
    sp.set_defaults(func=cmd_table)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "q", None) is not None:
        from .field import factor_prime_power
        try:
            factor_prime_power(args.q)
        except DomainError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_PRE
    try:
        return args.func(args)
    except BudgetError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except LambdaFieldError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (PreconditionError, DomainError) as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        return EXIT_PRE


if __name__ == "__main__":
    sys.exit(main())
