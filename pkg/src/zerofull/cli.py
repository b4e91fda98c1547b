"""Command-line frontend: ``zerofull {regime,verdict,classify,census,predict,check}``.

Every run echoes its full configuration first (a ``#`` header in human and
CSV output, a ``config`` record in JSON lines) using canonical flag values, so
a JSON config record can be written back as a ``key=value`` file and replayed
with ``--config`` to reproduce the output byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
import time
from fractions import Fraction

from zerofull import ballgeom, cantor, census, laws, oracles, regime
from zerofull.cantor import CantorParams
from zerofull.errors import DegenerateFitError, DomainError, PreconditionError, ResourceError
from zerofull.exactnum import format_rational, parse_rational

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2
EXIT_INCONCLUSIVE = 3
EXIT_UNDECIDED = 4


# ------------------------------------------------------------ value parsing

def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _number(text: str) -> Fraction:
    """Rational or exact decimal (0.43 -> 43/100)."""
    return parse_rational(text, allow_decimal=True)


def parse_digits(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise DomainError(f"digit set must be comma-separated integers, got {text!r}") from None


def parse_range(text: str) -> list[int]:
    """``7`` or an inclusive range ``2:10``."""
    try:
        if ":" in text:
            a, b = text.split(":", 1)
            lo, hi = int(a), int(b)
            if hi < lo:
                raise DomainError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise DomainError(f"expected an integer or a:b range, got {text!r}") from None


def _kv(body: str, what: str) -> dict[str, str]:
    out = {}
    for part in filter(None, (p.strip() for p in body.split(","))):
        if "=" not in part:
            raise DomainError(f"{what}: expected key=value, got {part!r}")
        k, v = part.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _only(kv: dict, allowed: set[str], what: str) -> None:
    extra = set(kv) - allowed
    if extra:
        raise DomainError(f"{what}: unknown key(s) {', '.join(sorted(extra))}")


def parse_psi(text: str) -> laws.Family:
    """``pow:c=1/4,theta=1,base=5``, ``log:theta=1,beta=2`` or ``table:1/2,1/4``."""
    kind, _, body = text.partition(":")
    if kind == "table":
        return laws.Table(tuple(_number(v) for v in body.split(",") if v.strip()))
    kv = _kv(body, "--psi")
    base = int(kv["base"]) if "base" in kv else None
    if base is not None and base < 2:
        raise DomainError("--psi: base must be >= 2")
    theta = _number(kv.get("theta", "1"))
    if kind == "pow":
        _only(kv, {"c", "theta", "base"}, "--psi pow")
        return laws.PowerDecay(theta, _number(kv.get("c", "1")), base)
    if kind == "log":
        _only(kv, {"theta", "beta", "base"}, "--psi log")
        return laws.LogModified(theta, _number(kv.get("beta", "0")), base)
    raise DomainError(f"--psi: unknown family {kind!r} (pow, log, table)")


def format_psi(fam: laws.Family) -> str:
    if isinstance(fam, laws.Table):
        return "table:" + ",".join(format_rational(v) for v in fam.values)
    if isinstance(fam, laws.PowerDecay):
        parts = [f"c={format_rational(fam.c)}", f"theta={format_rational(fam.theta)}"]
        kind = "pow"
    else:
        parts = [f"theta={format_rational(fam.theta)}", f"beta={format_rational(fam.beta)}"]
        kind = "log"
    if fam.base is not None:
        parts.append(f"base={fam.base}")
    return f"{kind}:" + ",".join(parts)


def _exponent(text: str) -> tuple[Fraction, Fraction]:
    """``0.43``, ``gamma/2``, ``3/4*gamma``, ``1/10+gamma`` -> (rational, gamma coefficient)."""
    rat = gam = Fraction(0)
    for term in filter(None, (t.strip() for t in text.replace("γ", "gamma").split("+"))):
        if "gamma" not in term:
            rat += _number(term)
            continue
        before, _, after = term.partition("gamma")
        before = before.strip().rstrip("*").strip()
        coef = _number(before) if before else Fraction(1)
        after = after.strip()
        if after.startswith("/"):
            coef /= _number(after[1:])
        elif after:
            raise DomainError(f"--f: cannot parse exponent term {term!r}")
        gam += coef
    return rat, gam


def parse_f(text: str) -> laws.DimensionFunctionSpec:
    """``s=0.43``, ``s=gamma/2,c=1``: f(r) = r^s log(1/r)^c."""
    kv = _kv(text, "--f")
    _only(kv, {"s", "c"}, "--f")
    s, sg = _exponent(kv.get("s", "0"))
    return laws.DimensionFunctionSpec(s=s, c=_number(kv.get("c", "0")), s_gamma=sg)


def format_f(f: laws.DimensionFunctionSpec) -> str:
    terms = []
    if f.s or not f.s_gamma:
        terms.append(format_rational(f.s))
    if f.s_gamma:
        terms.append("gamma" if f.s_gamma == 1 else f"{format_rational(f.s_gamma)}*gamma")
    return f"s={'+'.join(terms)},c={format_rational(f.c)}"


def parse_A(text: str) -> laws.SequenceSpec:
    """``id``, ``affine:u=2,v=0`` (a_n = floor(u n + v)) or ``table:1,1,2``."""
    kind, _, body = text.partition(":")
    if kind in ("id", "identity"):
        return laws.IDENTITY
    if kind == "affine":
        kv = _kv(body, "--A")
        _only(kv, {"u", "v"}, "--A affine")
        return laws.SequenceSpec("affine", _number(kv.get("u", "1")), _number(kv.get("v", "0")))
    if kind == "table":
        try:
            vals = tuple(int(v) for v in body.split(",") if v.strip())
        except ValueError:
            raise DomainError("--A table values must be integers") from None
        return laws.SequenceSpec("table", values=vals)
    raise DomainError(f"--A: unknown sequence {kind!r} (id, affine, table)")


def format_A(A: laws.SequenceSpec) -> str:
    if A.kind == "identity":
        return "id"
    if A.kind == "affine":
        return f"affine:u={format_rational(A.u)},v={format_rational(A.v)}"
    return "table:" + ",".join(map(str, A.values))


# ------------------------------------------------------------------- output

def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return ",".join(_cell(x) for x in v)
    return str(v)


def _json_value(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, float):
        return v if math.isfinite(v) else repr(v)
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    return _cell(v)


class Report:
    """Collects the config echo and result records of one run."""

    def __init__(self, command: str, config: dict):
        self.command = command
        self.config = {"command": command, **config}
        self.records: list[dict] = []

    def add(self, record: str, /, **fields) -> None:
        self.records.append({"record": record, **fields})

    def render(self, fmt: str) -> str:
        if fmt == "json":
            lines = [json.dumps({"record": "config", **{k: _json_value(v) for k, v in self.config.items()}},
                                ensure_ascii=False)]
            lines += [json.dumps({k: _json_value(v) for k, v in r.items()}, ensure_ascii=False)
                      for r in self.records]
            return "\n".join(lines) + "\n"
        header = [f"# {k}={_cell(v)}" for k, v in self.config.items()]
        if fmt == "csv":
            cols: list[str] = []
            for r in self.records:
                cols += [k for k in r if k not in cols]
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(cols)
            for r in self.records:
                w.writerow([_cell(r.get(c)) for c in cols])
            return "\n".join(header) + "\n" + buf.getvalue()
        return "\n".join(header + self._human()) + "\n"

    def _human(self) -> list[str]:
        out = []
        groups: list[list[dict]] = []
        for r in self.records:
            if groups and groups[-1][0]["record"] == r["record"] and groups[-1][0].keys() == r.keys():
                groups[-1].append(r)
            else:
                groups.append([r])
        for group in groups:
            out.append("")
            out.append(f"[{group[0]['record']}]")
            keys = [k for k in group[0] if k != "record"]
            if len(group) == 1:
                width = max((len(k) for k in keys), default=0)
                out += [f"  {k.ljust(width)}  {_cell(group[0][k])}" for k in keys]
                continue
            rows = [keys] + [[_cell(r[k]) for k in keys] for r in group]
            widths = [max(len(row[j]) for row in rows) for j in range(len(keys))]
            out += ["  " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows]
        return out


def write_plot_data(path: str, pairs, header: str) -> None:
    """Whitespace-separated two-column text for external plotting tools."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# {header}\n")
        for x, y in pairs:
            fh.write(f"{_cell(x)} {_cell(y)}\n")


# ----------------------------------------------------------------- commands

def _params(args) -> CantorParams:
    if args.b is None or args.D is None:
        raise DomainError("-b and -D are required")
    return CantorParams(args.b, parse_digits(args.D))


def _digits(params: CantorParams) -> str:
    return ",".join(map(str, params.D))


def cmd_regime(args) -> tuple[Report, int]:
    pos = args.pair or []
    if len(pos) not in (0, 2):
        raise DomainError("regime takes two positional integers: b t")
    b = pos[0] if pos else args.b
    t = pos[1] if pos else args.t
    if b is None or t is None:
        raise DomainError("regime needs b and t")
    rep = regime.analyze(b, t)
    report = Report("regime", {"b": b, "t": t, "format": args.format})
    for q, (vb, vt) in rep.valuations.items():
        report.add("valuation", q=q, v_b=vb, v_t=vt, ratio=Fraction(vt, vb) if vb else None)
    dep = regime.dependence_exponents(b, t)
    report.add("regime", b=b, t=t, regime=rep.regime, same_primes=rep.same_primes,
               mult_dependent=rep.mult_dependent, alpha1=rep.alpha1, alpha2=rep.alpha2,
               log_ratio=rep.log_ratio, dependence=f"{b}^{dep[0]}={t}^{dep[1]}" if dep else None)
    return report, EXIT_OK


def _auto_law(params: CantorParams, t: int, spec: laws.PsiSpec) -> str:
    if t == params.b:
        return "base"
    rep = regime.analyze(params.b, t)
    if rep.mult_dependent and params.touches_ends and spec.A.kind == "identity":
        return "dependent"
    if rep.same_primes:
        return "main"
    return "none"


def cmd_verdict(args) -> tuple[Report, int]:
    params = _params(args)
    t = args.t or params.b
    if args.psi is None or args.f is None:
        raise DomainError("verdict needs --psi and --f")
    fam = parse_psi(args.psi)
    f = parse_f(args.f)
    spec = laws.PsiSpec(fam, parse_A(args.A))
    law = args.law if args.law != "auto" else _auto_law(params, t, spec)
    report = Report("verdict", {
        "b": params.b, "D": _digits(params), "t": t, "psi": format_psi(fam), "f": format_f(f),
        "A": format_A(spec.A), "law": args.law, "terms": args.terms, "format": args.format,
    })
    mono, grid = f.monotonicity(params)
    report.add("dimension_function", f=format_f(f), exponent=float(f.exponent(params)),
               gamma=params.gamma, ratio_monotonic=mono, grid=grid)
    lam = laws.lambda_psi(spec, t)
    report.add("lambda", value=lam.value, basis=lam.basis, oscillating=lam.oscillating, note=lam.note)
    if law == "none":
        report.add("verdict", outcome=laws.Outcome.UNDECIDED, law="none",
                   notes="b and t have different prime divisors: no zero-full law is known; see predict")
        return report, EXIT_UNDECIDED
    run = {"base": lambda: laws.verdict_base_equal(params, f, spec, args.terms),
           "dependent": lambda: laws.verdict_dependent(params, t, f, spec, args.terms),
           "main": lambda: laws.verdict_main(params, t, f, spec, args.terms)}[law]
    if law == "base" and t != params.b:
        raise PreconditionError(f"the base-equal law needs t = b, got t={t}", marker="Regime")
    verdict = run()
    if not mono:
        verdict.notes.append("r^-gamma f(r) is not monotonic on the test grid; the law's hypothesis may fail")
    pairs = []
    for d in verdict.series:
        report.add("series", name=d.name, converges=d.converges, basis=d.decision_basis,
                   ratio=d.closed_form_ratio, growth_exponent=d.growth_exponent,
                   pseries_exponent=d.pseries_exponent, qualifying=d.qualifying,
                   last_partial_sum=d.partial_sums[-1][1] if d.partial_sums else None, note=d.note)
        for i, v in d.partial_sums:
            report.add("partial_sum", series=d.name, i=i, value=v)
            pairs.append((i, v))
    report.add("verdict", outcome=verdict.outcome, law=verdict.law, notes="; ".join(verdict.notes))
    if args.plot_data:
        write_plot_data(args.plot_data, pairs, "i partial_sum")
    code = {laws.Outcome.ZERO: EXIT_OK, laws.Outcome.FULL: EXIT_OK,
            laws.Outcome.INCONCLUSIVE: EXIT_INCONCLUSIVE, laws.Outcome.UNDECIDED: EXIT_UNDECIDED}
    return report, code[verdict.outcome]


def cmd_classify(args) -> tuple[Report, int]:
    params = _params(args)
    if args.n is None or args.r is None:
        raise DomainError("classify needs -n and -r")
    ns = parse_range(args.n)
    report = Report("classify", {"b": params.b, "D": _digits(params), "p": args.p or "all",
                                 "n": args.n, "r": args.r, "format": args.format})
    if args.verbose:
        print(ballgeom.CASE3_NOTE, file=sys.stderr)
    for n in ns:
        N = params.b**n
        ps = range(N + 1) if args.p in (None, "all") else parse_range(args.p)
        d_l, d_r = ballgeom.shifts(params, n)
        tally = {"Empty": 0, "Left": 0, "Right": 0, "Pair": 0}
        for p in ps:
            form = ballgeom.classify(params, p, n, args.r)
            tally[form.variant] += 1
            if len(ps) <= args.list_max:
                report.add("form", n=n, p=p, variant=form.variant,
                           left_endpoint=cantor.is_left_endpoint(params, p, n),
                           right_endpoint=cantor.is_right_endpoint(params, p, n),
                           balls=";".join(f"B({format_rational(x.center)},{format_rational(x.radius)})"
                                          for x in form.balls))
        report.add("summary", n=n, d_l=d_l, d_r=d_r, points=len(ps), **tally)
    return report, EXIT_OK


def cmd_census(args) -> tuple[Report, int]:
    params = _params(args)
    t = args.t or params.b
    if args.n is None:
        raise DomainError("census needs -n")
    if (args.r is None) == (args.theta is None):
        raise DomainError("census needs exactly one of -r (fixed radius) or --theta (radius t^-theta n)")
    ns = parse_range(args.n)
    report = Report("census", {
        "b": params.b, "D": _digits(params), "t": t, "n": args.n,
        "r": args.r, "theta": args.theta, "method": args.method, "workers": args.workers,
        "parts": args.parts, "cap": args.cap, "fit": args.fit, "timing": args.timing, "format": args.format,
    })

    def radius(n):
        return args.r if args.r is not None else census.power_radius(t, args.theta, n)

    methods = ["exact", "brute"] if args.method == "both" else [args.method]
    rows, code = [], EXIT_OK
    for n in ns:
        counts, elapsed = {}, 0.0
        for m in methods:
            row = census.count_surviving(params, t, n, radius(n), m, workers=args.workers,
                                         parts=args.parts, cap=args.cap)
            counts[m] = row
            elapsed += row.elapsed
        row = counts[methods[0]]
        rows.append(row)
        rec = {"n": n, "t": t, "radius": row.radius}
        if len(methods) == 2:
            rec.update(exact=counts["exact"].count, brute=counts["brute"].count,
                       agree=counts["exact"].count == counts["brute"].count)
            if not rec["agree"]:
                code = EXIT_CHECK_FAILED
        else:
            rec.update(count=row.count, method=row.method)
        if args.timing:
            rec["elapsed"] = round(elapsed, 3)
        report.add("row", **rec)
    if args.plot_data:
        write_plot_data(args.plot_data, [(r.n, r.count) for r in rows], "n count")
    if args.fit:
        fit = census.growth_fit(rows, t)
        report.add("fit", exponent=fit.exponent, r2=fit.r2, prefactor=fit.prefactor, rows=fit.rows)
        if args.theta is not None:
            report.add("heuristic", exponent=laws.heuristic_count_exponent(params, args.theta),
                       deviation=fit.exponent - laws.heuristic_count_exponent(params, args.theta),
                       formula="1 - theta (1 - gamma)")
            rep = regime.analyze(params.b, t)
            if args.theta > 1 and (rep.mult_dependent or t == params.b):
                report.add("natural_cover", s_star=fit.exponent / float(args.theta),
                           prediction=params.gamma / float(args.theta), formula="gamma/theta")
    return report, code


def cmd_predict(args) -> tuple[Report, int]:
    params = _params(args)
    t = args.t or params.b
    theta = None
    if args.lam is not None:
        lam = args.lam
        basis = "given"
        note = ""
    elif args.psi is not None:
        fam = parse_psi(args.psi)
        est = laws.lambda_psi(laws.PsiSpec(fam).with_base(t), t)
        lam, basis, note = est.value, est.basis, est.note
        if not isinstance(fam, laws.Table) and (fam.base or t) == t:
            theta = fam.theta
            lam = fam.theta
    else:
        raise DomainError("predict needs --lambda or --psi")
    report = Report("predict", {"b": params.b, "D": _digits(params), "t": t,
                                "lambda": args.lam, "psi": args.psi, "format": args.format})
    report.add("lambda", value=float(lam), basis=basis, note=note)
    pred = laws.predict_dimension(params, t, lam, theta=theta)
    report.add("regime", regime=pred.regime, gamma=params.gamma)
    for e in pred.entries:
        report.add("prediction", kind=e.kind, value=e.value, grade=e.grade, formula=e.formula)
    for note in pred.notes:
        report.add("note", text=note)
    return report, EXIT_OK


def _check_example31(args, report: Report) -> bool:
    params = CantorParams(5, [1, 2])
    ok = True
    for n in range(1, args.nmax + 1):
        r = Fraction(1, 4 * 5**n)
        nonempty = sum(1 for p in range(5**n + 1) if ballgeom.survives(params, p, n, r))
        count = census.count_surviving(params, 5, n, r).count
        ok &= nonempty == 0 and count == 0
        report.add("example31", n=n, radius=r, points=5**n + 1, nonempty_forms=nonempty, census=count)
    return ok


def _check_oracles(args, report: Report) -> bool:
    rng = random.Random(args.seed)
    bad_cls = sum(bool(oracles.classifier_mismatches(oracles.random_classifier_case(rng)))
                  for _ in range(args.cases))
    report.add("oracle", name="classifier", cases=args.cases, failures=bad_cls)
    bad_dist = 0
    for _ in range(args.cases):
        params = oracles.random_params(rng, rng.randint(3, 7))
        x = Fraction(rng.randint(0, 10**6), 10**6)
        d = cantor.distance(params, x)
        lo, hi = oracles.distance_bounds(params, x, rng.randint(1, 5))
        bad_dist += not lo <= d <= hi
    report.add("oracle", name="distance", cases=args.cases, failures=bad_dist)
    bad_census = cases = 0
    for _ in range(max(1, args.cases // 10)):
        params = oracles.random_params(rng, rng.randint(3, 6))
        t, n = rng.randint(2, 5), rng.randint(1, 5)
        radii = oracles.random_radii(rng, params, t, n)
        cases += len(radii)
        bad_census += len(oracles.census_disagreements(params, t, n, radii))
    report.add("oracle", name="census", cases=cases, failures=bad_census)
    return bad_cls == bad_dist == bad_census == 0


def cmd_check(args) -> tuple[Report, int]:
    if args.target not in ("example31", "oracles"):
        raise DomainError(f"check target must be example31 or oracles, got {args.target!r}")
    report = Report("check", {"target": args.target, "seed": args.seed, "cases": args.cases,
                              "nmax": args.nmax, "format": args.format})
    ok = _check_example31(args, report) if args.target == "example31" else _check_oracles(args, report)
    report.add("result", target=args.target, passed=ok)
    return report, EXIT_OK if ok else EXIT_CHECK_FAILED


# ------------------------------------------------------------------- parser

def _common(p: argparse.ArgumentParser, *, cantor_set=True, lattice=True) -> None:
    if cantor_set:
        p.add_argument("-b", "--base", dest="b", type=int, help="Cantor base b >= 3")
        p.add_argument("-D", "--digits", dest="D", help="digit set, comma separated (e.g. 0,2)")
    if lattice:
        p.add_argument("-t", "--lattice", dest="t", type=int, help="approximation base t (default b)")
    p.add_argument("--format", choices=["human", "json", "csv"], default="human")
    p.add_argument("--config", help="key=value file; command-line flags take precedence")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerofull",
        description="Exact experiments on well-approximable points in generalized Cantor sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("regime", help="classify the pair (b, t) by prime valuations")
    p.add_argument("pair", nargs="*", type=int, metavar="b t")
    _common(p, cantor_set=False)
    p.add_argument("-b", "--base", dest="b", type=int)

    p = sub.add_parser("verdict", help="zero-full verdict for H^f(W cap C)")
    _common(p)
    p.add_argument("--psi", help="pow:c=1/4,theta=1[,base=5] | log:theta=1,beta=2 | table:1/2,1/4")
    p.add_argument("--f", help="dimension function, e.g. s=3/10 or s=gamma/2,c=1")
    p.add_argument("--A", default="id", help="exponent sequence: id | affine:u=2,v=0 | table:1,1,2")
    p.add_argument("--law", choices=["auto", "base", "dependent", "main"], default="auto")
    p.add_argument("--terms", type=int, default=None, help="partial-sum terms (diagnostics only)")
    p.add_argument("--plot-data", dest="plot_data", help="write (i, partial sum) pairs to this file")

    p = sub.add_parser("classify", help="rewrite B(p/b^n, r) cap C as balls centred in C")
    _common(p, lattice=False)
    p.add_argument("-p", "--point", dest="p", help="p, a:b range, or all (default)")
    p.add_argument("-n", "--level", dest="n", help="level n or a:b range")
    p.add_argument("-r", "--radius", dest="r", type=_rational, help="radius num/den")
    p.add_argument("--list-max", dest="list_max", type=int, default=200,
                   help="list individual forms when at most this many points")
    p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("census", help="count lattice balls B(p/t^n, r) meeting C")
    _common(p)
    p.add_argument("-n", "--level", dest="n", help="level n or a:b range")
    p.add_argument("-r", "--radius", dest="r", type=_rational, help="fixed radius num/den")
    p.add_argument("--theta", type=_rational, help="use radius 1/ceil(t^(theta n))")
    p.add_argument("--method", choices=["exact", "brute", "both"], default="exact")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--parts", type=int, default=None, help="range partitions (default: workers)")
    p.add_argument("--cap", type=int, default=cantor.DEFAULT_ENUM_CAP, help="interval enumeration cap")
    p.add_argument("--fit", action="store_true", help="fit the count growth exponent")
    p.add_argument("--plot-data", dest="plot_data", help="write (n, count) pairs to this file")
    p.add_argument("--timing", action="store_true", help="include wall-clock times (not reproducible)")

    p = sub.add_parser("predict", help="predicted Hausdorff dimension of W cap C")
    _common(p)
    p.add_argument("--lambda", dest="lam", type=_number, help="decay rate lambda_psi >= 1")
    p.add_argument("--psi", help="estimate lambda from psi instead")

    p = sub.add_parser("check", help="rerun the built-in reproduction and oracle suites")
    p.add_argument("target", nargs="?", choices=["example31", "oracles"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--nmax", type=int, default=7)
    _common(p, cantor_set=False, lattice=False)
    return parser


COMMANDS = {"regime": cmd_regime, "verdict": cmd_verdict, "classify": cmd_classify,
            "census": cmd_census, "predict": cmd_predict, "check": cmd_check}


def _config_tokens(parser: argparse.ArgumentParser, command: str, path: str) -> tuple[list[str], dict]:
    """Turn a key=value file into flags for ``command``, plus positional
    values to use where the command line gave none."""
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction)).choices[command]
    by_dest = {a.dest: a for a in sub._actions if a.option_strings}
    for a in sub._actions:
        for opt in a.option_strings:
            if opt.startswith("--"):
                by_dest.setdefault(opt[2:], a)
    positional = {a.dest for a in sub._actions if not a.option_strings and a.dest != "help"}
    tokens, fill = [], {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key in ("command", "record", "config"):
                continue
            if key in positional:
                fill[key] = value
                continue
            action = by_dest.get(key)
            if action is None:
                raise DomainError(f"{path}:{lineno}: unknown key {key!r} for {command}")
            if value in ("", "None", "null"):
                continue
            flag = action.option_strings[-1]
            if action.nargs == 0:
                if value.lower() in ("1", "true", "yes"):
                    tokens.append(flag)
            else:
                tokens += [flag, value]
    return tokens, fill


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config:
            tokens, fill = _config_tokens(parser, args.command, args.config)
            at = argv.index(args.command)
            args = parser.parse_args([args.command] + tokens + argv[at + 1:])
            for key, value in fill.items():
                if getattr(args, key) is None:
                    setattr(args, key, value)
        t0 = time.perf_counter()
        report, code = COMMANDS[args.command](args)
        sys.stdout.write(report.render(args.format))
        if getattr(args, "timing", False):
            print(f"elapsed {time.perf_counter() - t0:.3f}s", file=sys.stderr)
        return code
    except (DomainError, PreconditionError, ResourceError, DegenerateFitError) as exc:
        marker = getattr(exc, "marker", None)
        print(f"zerofull: error: {exc}" + (f" [{marker}]" if marker else ""), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
