"""Approximation functions, series verdicts and dimension predictions.

Every verdict reduces to the convergence of a series

    sum over i in I(A) with psi_A(i) > K b^-k(i) of
        f(psi_A(i) - K b^-k(i)) * |D|^(w i)          (K = m / (b-1))

whose weight |D|^(w i) equals b^(i w gamma).  For the closed-form families
the dominant factor of the terms is exp(E i) * i^kappa, and both the sign
of E and the comparison kappa < -1 are decided exactly by comparing
integer powers.  Finite tables only ever produce numeric evidence.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Union

import mpmath

from zerofull.cantor import CantorParams, gamma
from zerofull.errors import DomainError, PreconditionError
from zerofull.exactnum import exact_power
from zerofull.regime import Regime, analyze, dependence_exponents

WORK_PREC = 160
DEFAULT_TERMS = 10**4
FAMILY_TERMS = 1000


# ---------------------------------------------------------------- exact logs

def log_sign(terms) -> int:
    """Sign of sum(coef * log(x)) over (coef, x) pairs, coef rational, x > 0 rational."""
    clean = []
    for coef, x in terms:
        coef, x = Fraction(coef), Fraction(x)
        if x <= 0:
            raise DomainError(f"log of non-positive {x}")
        if coef and x != 1:
            clean.append((coef, x))
    if not clean:
        return 0
    approx = scale = 0.0
    for coef, x in clean:
        v = float(coef) * (math.log(x.numerator) - math.log(x.denominator))
        approx += v
        scale += abs(v)
    if abs(approx) > 1e-9 * max(1.0, scale):
        return 1 if approx > 0 else -1
    L = math.lcm(*(coef.denominator for coef, _ in clean))
    num = den = 1
    for coef, x in clean:
        e = int(coef * L)
        if e > 0:
            num *= x.numerator**e
            den *= x.denominator**e
        else:
            num *= x.denominator ** (-e)
            den *= x.numerator ** (-e)
    return (num > den) - (num < den)


# ------------------------------------------------------------ psi and A specs

@dataclass(frozen=True)
class PowerDecay:
    """psi(n) = c * base^(-theta n)."""

    theta: Fraction
    c: Fraction = Fraction(1)
    base: int | None = None

    def __post_init__(self):
        if self.c <= 0 or self.theta <= 0:
            raise DomainError("PowerDecay needs c > 0 and theta > 0")

    beta = Fraction(0)


@dataclass(frozen=True)
class LogModified:
    """psi(n) = base^(-theta n) * n^(-beta)."""

    theta: Fraction
    beta: Fraction = Fraction(0)
    base: int | None = None

    def __post_init__(self):
        if self.theta <= 0:
            raise DomainError("LogModified needs theta > 0")

    c = Fraction(1)


@dataclass(frozen=True)
class Table:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise DomainError("psi table is empty")
        if any(v <= 0 for v in self.values):
            raise DomainError("psi table values must be positive")


Family = Union[PowerDecay, LogModified, Table]


@dataclass(frozen=True)
class SequenceSpec:
    """The exponent sequence A: identity, a_n = floor(u n + v), or a table."""

    kind: str = "identity"
    u: Fraction = Fraction(1)
    v: Fraction = Fraction(0)
    values: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind == "affine":
            if self.u <= 0:
                raise DomainError("affine A needs slope u > 0")
            if math.floor(self.u + self.v) < 1:
                raise DomainError("affine A must take positive integer values (a_1 >= 1)")
        elif self.kind == "table":
            vals = self.values
            if not vals or vals[0] < 1 or any(x > y for x, y in zip(vals, vals[1:])):
                raise DomainError("A table must be a non-decreasing list of positive integers")
        elif self.kind != "identity":
            raise DomainError(f"unknown sequence kind {self.kind!r}")

    @property
    def closed_form(self) -> bool:
        return self.kind != "table"

    @property
    def slope(self) -> Fraction:
        return self.u if self.kind == "affine" else Fraction(1)

    def a(self, n: int) -> int:
        if self.kind == "identity":
            return n
        if self.kind == "affine":
            return math.floor(self.u * n + self.v)
        return self.values[n - 1]

    def length(self) -> int | None:
        return len(self.values) if self.kind == "table" else None

    def fiber(self, i: int) -> list[int]:
        """{n >= 1 : a_n = i}."""
        if self.kind == "identity":
            return [i] if i >= 1 else []
        if self.kind == "affine":
            lo = max(1, math.ceil((i - self.v) / self.u))
            hi = math.ceil((i + 1 - self.v) / self.u) - 1
            return [n for n in range(lo, hi + 1) if self.a(n) == i]
        return [n for n, x in enumerate(self.values, 1) if x == i]

    def index_set(self, cutoff: int) -> list[int]:
        """I(A) cap [1, cutoff]."""
        if self.kind == "identity":
            return list(range(1, cutoff + 1))
        if self.kind == "affine":
            out, n = [], 1
            while True:
                x = self.a(n)
                if x > cutoff:
                    return out
                if not out or out[-1] != x:
                    out.append(x)
                n += 1
        return sorted({x for x in self.values if x <= cutoff})


IDENTITY = SequenceSpec()


@dataclass(frozen=True)
class PsiSpec:
    family: Family
    A: SequenceSpec = IDENTITY

    @property
    def closed_form(self) -> bool:
        return not isinstance(self.family, Table) and self.A.closed_form

    def with_base(self, base: int) -> "PsiSpec":
        """Fill in a missing family base with ``base``."""
        fam = self.family
        if isinstance(fam, Table) or fam.base is not None:
            return self
        return replace(self, family=replace(fam, base=base))

    def domain(self) -> int | None:
        """Largest n where psi is defined (None for closed forms)."""
        if isinstance(self.family, Table):
            return len(self.family.values)
        return None

    def log_terms(self, n: int) -> list[tuple[Fraction, Fraction]]:
        """log psi(n) as (coef, x) pairs for :func:`log_sign`."""
        fam = self.family
        if isinstance(fam, Table):
            return [(Fraction(1), fam.values[n - 1])]
        out = [(-fam.theta * n, Fraction(fam.base))]
        if isinstance(fam, PowerDecay):
            out.append((Fraction(1), fam.c))
        else:
            out.append((-fam.beta, Fraction(n)))
        return out

    def psi(self, n: int) -> Fraction | mpmath.mpf:
        """psi(n), exact when it is rational."""
        fam = self.family
        if isinstance(fam, Table):
            if not 1 <= n <= len(fam.values):
                raise DomainError(f"psi table has no entry for n = {n}")
            return fam.values[n - 1]
        if fam.base is None:
            raise DomainError("psi family base is unresolved")
        e = fam.theta * n
        if isinstance(fam, PowerDecay):
            exact = exact_power(Fraction(fam.base), -e)
            if exact is not None:
                return fam.c * exact
            with mpmath.workprec(WORK_PREC):
                return mpmath.mpf(fam.c.numerator) / fam.c.denominator * mpmath.power(fam.base, -mpmath.mpf(e.numerator) / e.denominator)
        head, tail = exact_power(Fraction(fam.base), -e), exact_power(Fraction(n), -fam.beta)
        if head is not None and tail is not None:
            return head * tail
        with mpmath.workprec(WORK_PREC):
            return mpmath.power(fam.base, -mpmath.mpf(e.numerator) / e.denominator) * mpmath.power(n, -mpmath.mpf(fam.beta.numerator) / fam.beta.denominator)

    def argmax_fiber(self, i: int) -> int:
        """The n in the fiber of i maximizing psi(n)."""
        fib = self.A.fiber(i)
        dom = self.domain()
        if dom is not None:
            fib = [n for n in fib if n <= dom]
        if not fib:
            raise DomainError(f"i = {i} is not in I(A)")
        best = fib[0]
        for n in fib[1:]:
            diff = [(c, x) for c, x in self.log_terms(n)] + [(-c, x) for c, x in self.log_terms(best)]
            if log_sign(diff) > 0:
                best = n
        return best


def psi_A(spec: PsiSpec, i: int) -> Fraction | mpmath.mpf:
    """max{psi(n) : a_n = i}."""
    return spec.psi(spec.argmax_fiber(i))


def index_set(spec: PsiSpec, cutoff: int) -> list[int]:
    """I(A) cap [1, cutoff], restricted to where psi is defined."""
    idx = spec.A.index_set(cutoff)
    dom = spec.domain()
    if dom is None:
        return idx
    return [i for i in idx if any(n <= dom for n in spec.A.fiber(i))]


# ------------------------------------------------------- dimension functions

@dataclass(frozen=True)
class DimensionFunctionSpec:
    """f(r) = r^s * log(1/r)^c with s = s_rational + s_gamma * gamma."""

    s: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    s_gamma: Fraction = Fraction(0)

    def __post_init__(self):
        if self.s < 0 or self.s_gamma < 0 or (self.s == 0 and self.s_gamma == 0 and self.c >= 0):
            raise DomainError("f must vanish at 0: need s > 0, or s = 0 with c < 0")

    def exponent(self, params: CantorParams) -> mpmath.mpf:
        with mpmath.workprec(WORK_PREC):
            return self.s + self.s_gamma * gamma(params, WORK_PREC)

    def rationalized(self, params: CantorParams) -> "DimensionFunctionSpec":
        """Fold s_gamma into s when gamma is rational (|D|^l = b^k)."""
        if not self.s_gamma:
            return self
        dep = dependence_exponents(params.b, params.size, limit=64)
        if dep is None:
            return self
        k, l = dep
        return DimensionFunctionSpec(s=self.s + self.s_gamma * Fraction(k, l), c=self.c)

    def __call__(self, r, params: CantorParams):
        with mpmath.workprec(WORK_PREC):
            r = mpmath.mpf(r.numerator) / r.denominator if isinstance(r, Fraction) else mpmath.mpf(r)
            out = mpmath.power(r, self.exponent(params))
            if self.c and r < 1:
                out *= mpmath.power(mpmath.log(1 / r), mpmath.mpf(self.c.numerator) / self.c.denominator)
            return out

    def monotonicity(self, params: CantorParams, kmax: int = 400) -> tuple[bool, str]:
        """Whether r^-gamma f(r) is monotonic on the grid r = 2^-k, 2 <= k <= kmax."""
        with mpmath.workprec(WORK_PREC):
            g = gamma(params, WORK_PREC)
            s = self.exponent(params)
            c = mpmath.mpf(self.c.numerator) / self.c.denominator
            ln2 = mpmath.log(2)
            vals = [(g - s) * k * ln2 + c * mpmath.log(k * ln2) for k in range(2, kmax + 1)]
        diffs = [y - x for x, y in zip(vals, vals[1:])]
        mono = all(d >= 0 for d in diffs) or all(d <= 0 for d in diffs)
        return mono, f"r = 2^-k, 2 <= k <= {kmax}"


# ----------------------------------------------------------------- verdicts

class Outcome(enum.Enum):
    ZERO = "Zero"
    FULL = "Full"
    INCONCLUSIVE = "Inconclusive"
    UNDECIDED = "Undecided"

    def __str__(self):
        return self.value


SYMBOLIC = "Symbolic"
NUMERIC = "NumericAdvisory"


@dataclass(frozen=True)
class Series:
    """sum_i f(psi_A(i) - shift_m/((b-1) b^k(i))) |D|^(weight * i), k(i) = round(shift_alpha * i)."""

    name: str
    weight: Fraction
    shift_m: int
    shift_alpha: Fraction = Fraction(1)
    rounding: str = "exact"

    def k(self, i: int) -> int:
        x = self.shift_alpha * i
        if self.rounding == "ceil":
            return math.ceil(x)
        if self.rounding == "floor":
            return math.floor(x)
        if x.denominator != 1:
            raise DomainError("exact rounding needs an integral exponent")
        return int(x)


@dataclass
class SeriesDiagnostic:
    name: str
    converges: bool | None
    decision_basis: str
    closed_form_ratio: float | None = None
    growth_exponent: float | None = None
    pseries_exponent: float | None = None
    qualifying: str = "all"
    partial_sums: list[tuple[int, float]] = field(default_factory=list)
    note: str = ""

    @property
    def diverges(self) -> bool | None:
        return None if self.converges is None else not self.converges


@dataclass
class Verdict:
    outcome: Outcome
    law: str
    series: list[SeriesDiagnostic]
    notes: list[str] = field(default_factory=list)


def _infinitely_often(spec: PsiSpec, K: Fraction, B: int, alpha: Fraction, rounding: str,
                      strict: bool) -> bool:
    """Whether psi_A(i) > K B^-k(i) (>= if not strict) for infinitely many i in I(A).

    Closed forms only.  psi_A(i) decays like base^(-theta i / u) and the
    bound like B^(-alpha i); on an exact tie the ratio is periodic in the
    index and one full period is checked exactly.
    """
    fam, A = spec.family, spec.A
    u = A.slope
    rate = log_sign([(fam.theta, fam.base), (-alpha * u, B)])
    if rate < 0:
        return True
    if rate > 0:
        return False
    if fam.beta > 0:
        return False
    if fam.beta < 0:
        return True
    series = Series("", Fraction(0), 0, alpha, rounding)
    period = u.denominator * u.numerator * alpha.denominator
    start = A.a(1) + u.numerator + 1
    for i in range(start, start + period):
        if not A.fiber(i):
            continue
        n = spec.argmax_fiber(i)
        sign = log_sign(spec.log_terms(n) + [(-1, K), (series.k(i), B)])
        if sign > 0 or (sign == 0 and not strict):
            return True
    return False


def _qualifies(spec: PsiSpec, i: int, n: int, K: Fraction, b: int, k: int) -> bool:
    if K == 0:
        return True
    return log_sign(spec.log_terms(n) + [(-1, K), (k, b)]) > 0


def _growth_sign(params: CantorParams, f: DimensionFunctionSpec, spec: PsiSpec,
                 weight: Fraction) -> int | None:
    """Sign of E = weight u log|D| - s theta log(base), the exponential rate of the terms."""
    fam = spec.family
    u = spec.A.slope
    if not f.s_gamma:
        return log_sign([(weight * u, params.size), (-f.s * fam.theta, fam.base)])
    if not f.s:
        return log_sign([(weight * u, params.b), (-f.s_gamma * fam.theta, fam.base)])
    with mpmath.workprec(256):
        iv = mpmath.iv
        iv.prec = 256
        g = iv.log(params.size) / iv.log(params.b)
        s = iv.mpf(f.s.numerator) / f.s.denominator + iv.mpf(f.s_gamma.numerator) / f.s_gamma.denominator * g
        E = (iv.mpf(weight.numerator) / weight.denominator * iv.mpf(u.numerator) / u.denominator * iv.log(params.size)
             - s * iv.mpf(fam.theta.numerator) / fam.theta.denominator * iv.log(fam.base))
        if E.a > 0:
            return 1
        if E.b < 0:
            return -1
    return None


def _pseries_converges(params: CantorParams, f: DimensionFunctionSpec, beta: Fraction) -> bool:
    """Whether sum n^(c - beta s) converges, i.e. c - beta s < -1."""
    if beta == 0 or not f.s_gamma:
        return f.c - beta * f.s < -1
    # (c + 1 - beta s_r) log b - beta s_g log|D| < 0
    return log_sign([(f.c + 1 - beta * f.s, params.b), (-beta * f.s_gamma, params.size)]) < 0


def _partial_sums(params: CantorParams, f: DimensionFunctionSpec, spec: PsiSpec, series: Series,
                  terms: int) -> list[tuple[int, float]]:
    K = Fraction(series.shift_m, params.b - 1)
    idx = index_set(spec, terms)
    checkpoints = {len(idx)}
    x = 10
    while x < len(idx):
        checkpoints.add(x)
        x *= 10
    out = []
    with mpmath.workprec(WORK_PREC):
        total = mpmath.mpf(0)
        for count, i in enumerate(idx, 1):
            n = spec.argmax_fiber(i)
            k = series.k(i)
            if _qualifies(spec, i, n, K, params.b, k):
                psi = spec.psi(n)
                psi = mpmath.mpf(psi.numerator) / psi.denominator if isinstance(psi, Fraction) else psi
                r = psi - mpmath.mpf(K.numerator) / K.denominator * mpmath.power(params.b, -k)
                if r <= 0:
                    continue
                total += f(r, params) * mpmath.power(params.size, mpmath.mpf(series.weight.numerator) / series.weight.denominator * i)
            if count in checkpoints:
                out.append((i, float(total)))
    return out


def analyze_series(params: CantorParams, f: DimensionFunctionSpec, spec: PsiSpec, series: Series,
                   terms: int | None = None) -> SeriesDiagnostic:
    """Decide convergence of ``series`` and collect diagnostics."""
    f = f.rationalized(params)
    if not spec.closed_form:
        sums = _partial_sums(params, f, spec, series, terms or DEFAULT_TERMS)
        return SeriesDiagnostic(
            series.name, None, NUMERIC, partial_sums=sums,
            note="finite data: partial sums are evidence only, not a decision",
        )
    fam = spec.family
    K = Fraction(series.shift_m, params.b - 1)
    sums = _partial_sums(params, f, spec, series, terms or FAMILY_TERMS)
    s_val = float(f.exponent(params))
    u = spec.A.slope
    E = float(series.weight) * math.log(params.size) - s_val * float(fam.theta) * math.log(fam.base) / float(u)
    diag = SeriesDiagnostic(series.name, None, SYMBOLIC, closed_form_ratio=math.exp(E),
                            growth_exponent=E, partial_sums=sums)
    diag.pseries_exponent = float(f.c) - float(fam.beta) * s_val
    if K and not _infinitely_often(spec, K, params.b, series.shift_alpha, series.rounding, strict=True):
        diag.converges = True
        diag.qualifying = "finite"
        diag.note = "only finitely many indices satisfy psi_A(i) > shift; the sum is finite"
        return diag
    if K:
        diag.qualifying = "infinite"
    sign = _growth_sign(params, f, spec, series.weight)
    if sign is None:
        diag.converges = None
        diag.decision_basis = NUMERIC
        diag.note = "growth exponent indistinguishable from 0 at 256 bits; no symbolic decision"
        return diag
    if sign < 0:
        diag.converges = True
        diag.note = "geometric decay of the dominant factor"
    elif sign > 0:
        diag.converges = False
        diag.note = "geometric growth of the dominant factor"
    else:
        diag.converges = _pseries_converges(params, f, fam.beta)
        diag.note = f"ratio exactly 1; p-series with exponent {diag.pseries_exponent:.6g}"
    return diag


def _escape(spec: PsiSpec, lattice_base: int) -> bool:
    """psi_A(i) >= lattice_base^-i / 2 infinitely often, so W = [0, 1]."""
    if not spec.closed_form:
        return False
    return _infinitely_often(spec, Fraction(1, 2), lattice_base, Fraction(1), "exact", strict=False)


def _combine(law: str, zero: SeriesDiagnostic, full: SeriesDiagnostic, escape: bool) -> Verdict:
    series = [zero] if zero is full else [zero, full]
    notes = []
    if escape:
        notes.append("psi_A(i) >= t^-i/2 infinitely often, so W = [0,1] and W cap C = C")
        if any(d.decision_basis == SYMBOLIC and d.converges is False for d in series):
            return Verdict(Outcome.FULL, law, series, notes)
        notes.append("series converges: H^f(C) = 0 and the Zero/Full alternatives coincide")
        return Verdict(Outcome.UNDECIDED, law, series, notes)
    if zero.decision_basis == SYMBOLIC and zero.converges:
        return Verdict(Outcome.ZERO, law, series, notes)
    if full.decision_basis == SYMBOLIC and full.converges is False:
        return Verdict(Outcome.FULL, law, series, notes)
    if zero is not full and zero.decision_basis == SYMBOLIC and full.decision_basis == SYMBOLIC:
        notes.append("convergence series diverges while divergence series converges")
        return Verdict(Outcome.INCONCLUSIVE, law, series, notes)
    notes.append("no symbolic decision for the controlling series")
    return Verdict(Outcome.UNDECIDED, law, series, notes)


def verdict_base_equal(params: CantorParams, f: DimensionFunctionSpec, spec: PsiSpec,
                       terms: int | None = None) -> Verdict:
    """Zero-full law for approximation by p/b^(a_n)."""
    spec = spec.with_base(params.b)
    series = Series("shifted", Fraction(1), params.m)
    diag = analyze_series(params, f, spec, series, terms)
    return _combine("base-equal", diag, diag, _escape(spec, params.b))


def verdict_dependent(params: CantorParams, t: int, f: DimensionFunctionSpec, spec: PsiSpec,
                      terms: int | None = None) -> Verdict:
    """Zero-full law sum f(psi(n)) t^(n gamma) for t multiplicatively dependent on b."""
    rep = analyze(params.b, t)
    if not rep.mult_dependent:
        raise PreconditionError(f"b={params.b} and t={t} are not multiplicatively dependent", marker="Regime")
    if not params.touches_ends:
        raise PreconditionError(
            "D must contain 0 or b-1 for the dependent law; use verdict_main", marker="DigitSet")
    if spec.A.kind != "identity":
        raise PreconditionError("the dependent law is stated for A = (n)", marker="Sequence")
    spec = spec.with_base(t)
    series = Series("dependent", rep.alpha1, 0)
    diag = analyze_series(params, f, spec, series, terms)
    return _combine("dependent", diag, diag, _escape(spec, t))


def verdict_main(params: CantorParams, t: int, f: DimensionFunctionSpec, spec: PsiSpec,
                 terms: int | None = None) -> Verdict:
    """Two-series law when b and t share their prime divisors."""
    rep = analyze(params.b, t)
    if not rep.same_primes:
        raise PreconditionError(
            f"b={params.b} and t={t} have different prime divisors; only the conjectural "
            "series sum f(psi(n)) t^n psi(n)^(1-gamma) applies (see predict)", marker="Regime")
    spec = spec.with_base(t)
    zero = analyze_series(params, f, spec, Series("convergence", rep.alpha2, params.m, rep.alpha2, "ceil"), terms)
    if rep.alpha1 == rep.alpha2 and (params.m == 0 or rep.alpha1.denominator == 1):
        # ceil and floor give the same series
        full = zero
    else:
        full = analyze_series(params, f, spec, Series("divergence", rep.alpha1, params.m, rep.alpha1, "floor"), terms)
    return _combine("same-primes", zero, full, _escape(spec, t))


# ---------------------------------------------------------------- lambda_psi

@dataclass
class LambdaEstimate:
    value: float
    basis: str
    window: int | None = None
    oscillating: bool = False
    note: str = ""

    @property
    def trivial(self) -> bool:
        return self.value < 1


def lambda_psi(spec: PsiSpec, t: int, window: int | None = None) -> LambdaEstimate:
    """liminf of -log psi(n) / (n log t)."""
    fam = spec.family
    if not isinstance(fam, Table):
        base = fam.base or t
        val = float(fam.theta) * math.log(base) / math.log(t)
        return LambdaEstimate(val, "closed-form")
    vals = fam.values[: window] if window else fam.values
    N = len(vals)
    ratios = [-(math.log(v.numerator) - math.log(v.denominator)) / (n * math.log(t))
              for n, v in enumerate(vals, 1)]
    tail = ratios[N // 2:] or ratios
    lo, hi = min(tail), max(tail)
    osc = hi - lo > 0.05 * max(abs(hi), abs(lo), 1e-300)
    note = "minimum over the last half of the window"
    if osc:
        note += "; ratios vary by more than 5%, liminf estimate unreliable"
    if lo < 1:
        note += "; lambda < 1 (trivial regime)"
    return LambdaEstimate(lo, "window", window=N, oscillating=osc, note=note)


# --------------------------------------------------------------- predictions

@dataclass
class PredictionEntry:
    kind: str          # value | lower | upper | point | threshold
    value: float
    grade: str         # theorem | conjecture
    formula: str


@dataclass
class Prediction:
    b: int
    t: int
    lam: float
    regime: Regime
    entries: list[PredictionEntry]
    notes: list[str] = field(default_factory=list)

    def get(self, kind: str) -> PredictionEntry:
        for e in self.entries:
            if e.kind == kind:
                return e
        raise KeyError(kind)


def predict_dimension(params: CantorParams, t: int, lam, theta: Fraction | None = None) -> Prediction:
    """Hausdorff dimension of W_t(psi) cap C(b, D) as a function of lambda_psi."""
    lam_f = float(lam)
    if lam_f < 1:
        raise DomainError(f"lambda = {lam_f} < 1: the situation is trivial (W_t(psi) has full measure)")
    rep = analyze(params.b, t)
    notes = []
    grade = "theorem"
    if not params.touches_ends:
        grade = "conjecture"
        notes.append("D contains neither 0 nor b-1: the theorem-grade formulas do not apply")
    with mpmath.workprec(WORK_PREC):
        g = gamma(params, WORK_PREC)
        lam_m = mpmath.mpf(lam.numerator) / lam.denominator if isinstance(lam, Fraction) else mpmath.mpf(lam)
        entries = []
        if rep.regime is Regime.MULT_DEPENDENT:
            entries.append(PredictionEntry("value", float(g / lam_m), grade, "gamma/lambda"))
            if theta is not None and params.touches_ends and Fraction(theta) > 1:
                th = Fraction(theta)
                entries.append(PredictionEntry(
                    "threshold", float(g * th.denominator / th.numerator), "theorem",
                    "large intersection class G^s(C) for every s < gamma/theta"))
        elif rep.regime is Regime.SAME_PRIMES:
            scale = mpmath.log(params.b) / mpmath.log(t)
            a1 = mpmath.mpf(rep.alpha1.numerator) / rep.alpha1.denominator
            a2 = mpmath.mpf(rep.alpha2.numerator) / rep.alpha2.denominator
            entries.append(PredictionEntry("lower", float(a1 * scale * g / lam_m), grade,
                                           "alpha1 log b/log t * gamma/lambda"))
            entries.append(PredictionEntry("upper", float(a2 * scale * g / lam_m), grade,
                                           "alpha2 log b/log t * gamma/lambda"))
            entries.append(PredictionEntry("point", float(g / lam_m), "conjecture", "gamma/lambda"))
        else:
            val = max(1 / lam_m + g - 1, mpmath.mpf(0))
            entries.append(PredictionEntry("value", float(val), "conjecture",
                                           "max(1/lambda + gamma - 1, 0)"))
    return Prediction(params.b, t, lam_f, rep.regime, entries, notes)


def heuristic_count_exponent(params: CantorParams, theta) -> float:
    """Exponent e with about t^(e n) balls B(p/t^n, t^(-theta n)) meeting C(b, D),
    assuming lattice points fall randomly with respect to C."""
    return 1 - float(theta) * (1 - params.gamma)
