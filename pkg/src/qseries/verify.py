"""Registry of congruence identities and the engine that re-checks them.

Each registry item is a declarative record: a series identity (possibly
preceded by a dissection pipeline), a whole chain of such links, a
modular coefficient scan over an arithmetic progression, or the
prime-power coefficient congruence f_p = f_1^p (mod p).  Running an item
produces a :class:`VerificationReport` stating how far equality was
checked and, on failure, the first mismatching coefficient.

Chains deserve a note: iterating a dissection k times directly would
need a seed series of order ~ final_order * p^k, which is astronomically
large for the eleven-step chain.  Instead each link feeds the *stated*
right-hand side of the previous link in as its seed, so every link is a
cheap independent identity while the composition still certifies the
full chain; reports carry the label "chain verified link-wise".
Families indexed by an unbounded parameter are certified by their
induction link plus base-case scans and labelled "induction-link
verified".
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Union

from .qexpr import EvalContext, EvalError, QSyntaxError, evaluate, parse_expr
from .qfunctions import bipartition_series, euler_f
from .series import (EXACT, SeriesError, TruncatedSeries, mod_ring)

CHAIN_NOTE = "chain verified link-wise"
INDUCTION_NOTE = "induction-link verified"


# --------------------------------------------------------------------------
# Declarative check records
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class DissectionPipeline:
    """A seed expression followed by (step, residue) coefficient extractions."""

    seed: str
    steps: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class IdentityCheck:
    """Claim: lhs = rhs as series, in the given ring, to the given order."""

    name: str
    lhs: Union[str, DissectionPipeline]
    rhs: str
    modulus: int = 0
    order: int = 500


@dataclass(frozen=True)
class CongruenceCheck:
    """Claim: family(A1*n+B1) = multiplier * family(A2*n+B2) (mod m) for
    n below the scan count; a missing right progression means = 0."""

    name: str
    family: tuple[int, int]
    lhs: tuple[int, int]
    rhs: tuple[int, int] | None
    modulus: int
    count: int
    multiplier: int = 1

    def __post_init__(self) -> None:
        if self.lhs[0] < 1 or self.lhs[1] < 0:
            raise ValueError("left progression needs step >= 1, offset >= 0")


@dataclass(frozen=True)
class BinomialCheck:
    """Claim: f_p = f_1^p (mod p) to the given order, for each prime."""

    name: str
    primes: tuple[int, ...]
    order: int = 500


Check = Union[IdentityCheck, CongruenceCheck, BinomialCheck]


@dataclass(frozen=True)
class RegistryItem:
    id: str
    kind: str  # "identity" | "chain" | "scan" | "binomial"
    description: str
    tags: tuple[str, ...]
    checks: tuple[Check, ...]
    note: str | None = None


@dataclass
class VerificationReport:
    """Outcome of one registry item (or standalone check)."""

    id: str
    status: str                 # "pass" | "fail"
    order: int                  # order checked, or scan count
    mismatch: dict | None
    millis: float
    note: str | None = None

    def as_dict(self) -> dict:
        d = {"id": self.id, "status": self.status, "order": self.order,
             "mismatch": self.mismatch, "millis": round(self.millis, 3)}
        if self.note is not None:
            d["note"] = self.note
        return d


@dataclass
class RegistryRun:
    reports: list[VerificationReport] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return not self.warnings and all(r.status == "pass" for r in self.reports)


# --------------------------------------------------------------------------
# Check execution
# --------------------------------------------------------------------------

def run_pipeline(pipeline: DissectionPipeline, ring, order: int) -> TruncatedSeries:
    """Evaluate the seed at the given order, then apply each extraction.

    Every step divides the available order by its step size, so callers
    must budget order >= desired_final_order * product(steps); an
    over-extraction that leaves nothing raises ValuationError.
    """
    series = evaluate(parse_expr(pipeline.seed), EvalContext(order, ring))
    for p, r in pipeline.steps:
        series = series.extract(p, r)
    return series


def seed_order_for(final_order: int, steps: tuple[tuple[int, int], ...]) -> int:
    """Smallest seed order whose pipeline output reaches final_order."""
    needed = final_order
    for p, r in reversed(steps):
        needed = (needed - 1) * p + r + 1
    return needed


def _bump(series: TruncatedSeries, index: int) -> TruncatedSeries:
    """Add one unit to a single coefficient (used by sensitivity tests)."""
    coeffs = list(series.coeffs)
    coeffs[index] += 1
    return TruncatedSeries(series.ring, coeffs)


def _error_report(name: str, message: str, t0: float) -> VerificationReport:
    mismatch = {"index": -1, "lhs": None, "rhs": None, "error": message}
    return VerificationReport(name, "fail", 0, mismatch,
                              (time.perf_counter() - t0) * 1000.0)


def check_identity(check: IdentityCheck, order: int | None = None,
                   perturb: int | None = None) -> VerificationReport:
    """Evaluate both sides of an identity and compare coefficientwise."""
    t0 = time.perf_counter()
    n = order if order is not None else check.order
    ring = mod_ring(check.modulus) if check.modulus else EXACT
    try:
        if isinstance(check.lhs, DissectionPipeline):
            seed_order = seed_order_for(n, check.lhs.steps)
            lhs = run_pipeline(check.lhs, ring, seed_order)
        else:
            lhs = evaluate(parse_expr(check.lhs), EvalContext(n, ring))
        rhs = evaluate(parse_expr(check.rhs), EvalContext(n, ring))
        if perturb is not None:
            rhs = _bump(rhs, perturb)
    except (SeriesError, QSyntaxError, EvalError) as exc:
        return _error_report(check.name, str(exc), t0)
    checked = min(lhs.order, rhs.order, n)
    diff = lhs.truncate(checked).first_mismatch(rhs.truncate(checked))
    millis = (time.perf_counter() - t0) * 1000.0
    if diff is None:
        return VerificationReport(check.name, "pass", checked, None, millis)
    index, lv, rv = diff
    return VerificationReport(check.name, "fail", checked,
                              {"index": index, "lhs": lv, "rhs": rv}, millis)


def check_vanishing(series: TruncatedSeries, p: int, r: int,
                    count: int) -> VerificationReport:
    """Assert coefficient p*n + r of the series vanishes for n < count."""
    if series.order < p * count + r:
        raise ValueError(
            f"insufficient order: scanning ({p}n+{r}) for n < {count} needs "
            f"order >= {p * count + r}, have {series.order}")
    t0 = time.perf_counter()
    zero = 0
    for n in range(count):
        v = series.coeffs[p * n + r]
        if v != zero:
            millis = (time.perf_counter() - t0) * 1000.0
            return VerificationReport(
                f"vanishing({p}n+{r})", "fail", count,
                {"index": n, "lhs": v, "rhs": 0,
                 "coefficient_index": p * n + r}, millis)
    millis = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(f"vanishing({p}n+{r})", "pass", count, None, millis)


# Modular bipartition series are reused across many scans; cache the
# largest one computed per (s, t, modulus).
_family_cache: dict[tuple[int, int, int], TruncatedSeries] = {}


def family_series(s: int, t: int, modulus: int, order: int) -> TruncatedSeries:
    key = (s, t, modulus)
    cached = _family_cache.get(key)
    if cached is None or cached.order < order:
        cached = bipartition_series(s, t, order, mod_ring(modulus))
        _family_cache[key] = cached
    return cached


def clear_family_cache() -> None:
    _family_cache.clear()


def check_congruence(check: CongruenceCheck, count: int | None = None,
                     perturb: int | None = None) -> VerificationReport:
    """Scan a congruence between two arithmetic progressions of a family."""
    t0 = time.perf_counter()
    cnt = count if count is not None else check.count
    s, t_idx = check.family
    m = check.modulus
    a1, b1 = check.lhs
    need = a1 * (cnt - 1) + b1 + 1
    if check.rhs is not None:
        a2, b2 = check.rhs
        need = max(need, a2 * (cnt - 1) + b2 + 1)
    series = family_series(s, t_idx, m, need)
    coeffs = series.coeffs
    c = check.multiplier % m
    for n in range(cnt):
        lv = coeffs[a1 * n + b1]
        rv = c * coeffs[a2 * n + b2] % m if check.rhs is not None else 0
        if perturb is not None and n == perturb:
            rv = (rv + 1) % m
        if lv != rv:
            millis = (time.perf_counter() - t0) * 1000.0
            return VerificationReport(
                check.name, "fail", cnt,
                {"index": n, "lhs": lv, "rhs": rv,
                 "coefficient_index": a1 * n + b1}, millis)
    millis = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(check.name, "pass", cnt, None, millis)


def check_binomial(check: BinomialCheck, order: int | None = None,
                   perturb: int | None = None) -> VerificationReport:
    """Check f_p = f_1^p coefficientwise mod p for each configured prime."""
    t0 = time.perf_counter()
    n = order if order is not None else check.order
    for i, p in enumerate(check.primes):
        ring = mod_ring(p)
        lhs = euler_f(p, n, ring)
        rhs = euler_f(1, n, ring) ** p
        if perturb is not None and i == 0:
            rhs = _bump(rhs, perturb)
        diff = lhs.first_mismatch(rhs)
        if diff is not None:
            index, lv, rv = diff
            millis = (time.perf_counter() - t0) * 1000.0
            return VerificationReport(
                check.name, "fail", n,
                {"index": index, "lhs": lv, "rhs": rv, "prime": p}, millis)
    millis = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(check.name, "pass", n, None, millis)


def run_item(item: RegistryItem, order: int | None = None,
             count: int | None = None,
             perturb: int | None = None) -> VerificationReport:
    """Run all checks of a registry item, aggregating into one report.

    A multi-link item passes only if every link passes; the reported
    order is the smallest order any link achieved, and a failure carries
    the failing link's name.
    """
    t0 = time.perf_counter()
    min_order: int | None = None
    for check in item.checks:
        if isinstance(check, IdentityCheck):
            rep = check_identity(check, order=order, perturb=perturb)
        elif isinstance(check, CongruenceCheck):
            rep = check_congruence(check, count=count, perturb=perturb)
        else:
            rep = check_binomial(check, order=order, perturb=perturb)
        if rep.status != "pass":
            mismatch = dict(rep.mismatch or {})
            if len(item.checks) > 1:
                mismatch["link"] = check.name
            return VerificationReport(item.id, "fail", rep.order, mismatch,
                                      (time.perf_counter() - t0) * 1000.0,
                                      item.note)
        min_order = rep.order if min_order is None else min(min_order, rep.order)
    millis = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(item.id, "pass", min_order or 0, None, millis,
                              item.note)


# --------------------------------------------------------------------------
# The registry
# --------------------------------------------------------------------------

def _triple(alpha: int, beta: int, gamma: int) -> str:
    """Expression for alpha*f7*f1^9 + beta*q*f7^5*f1^5 + gamma*q^2*f7^9*f1."""
    parts = []
    if alpha:
        parts.append(f"{alpha}*f7*f1^9")
    if beta:
        parts.append(f"{beta}*q*f7^5*f1^5")
    if gamma:
        parts.append(f"{gamma}*q^2*f7^9*f1")
    return " + ".join(parts) if parts else "0"


# The eleven successive images of f7*f1^9 under the (7,4) extraction,
# working mod 11; the final one has support only on the q^2 term.
_SEPTIC_CHAIN_TRIPLES = [
    (1, 0, 0),
    (9, 9, 8), (9, 5, 6), (4, 7, 6), (1, 5, 10), (5, 1, 8), (3, 6, 7),
    (3, 2, 2), (1, 4, 2), (3, 7, 8), (1, 7, 2), (0, 0, 8),
]

_EQ9_RHS = "a(q)^3*f1^3*f9 + 6*q*f9*f3^9"
_EQ10_RHS = "6*f1^9*f3 + 4*a(q)^3*f3^4 + q*f3^13/f1^3"
_EQ10K_RHS = "8*a(q)^2*f1^3*f3^3"

_G2_RHS = "5*a(q)^3*f1^3*f3^6*f81 + 12*q*f3^15*f81"
_G3_RHS = "12*f1^15*f27 + 7*a(q)^3*f1^6*f3^3*f27 + 7*q*f1^3*f3^12*f27"
_G4_RHS = "13*f1^12*f3^3*f9 + 4*a(q)^3*f1^3*f3^6*f9 + 16*q*f3^15*f9"
_G5_RHS = "16*q*f3^15*f9 + 6*q*a(q^3)^3*f3^6*f9^4 + 8*q^4*f3^3*f9^13"

_B3_RHS = "4*f2^2*f6^3/f1"
_B5_RHS = "4*f6^2*f2^3/f3"
_B6_RHS = "3*f2^2*f6^3/f1"


def _identity(item_id, description, lhs, rhs, *, modulus=0, order=500,
              tags=(), note=None) -> RegistryItem:
    check = IdentityCheck(item_id, lhs, rhs, modulus=modulus, order=order)
    return RegistryItem(item_id, "identity", description, tuple(tags),
                        (check,), note)


def _chain(item_id, description, links, *, modulus, order, tags,
           note) -> RegistryItem:
    checks = tuple(
        IdentityCheck(name, lhs, rhs, modulus=modulus, order=order)
        for name, lhs, rhs in links)
    return RegistryItem(item_id, "chain", description, tuple(tags), checks, note)


def _scan(item_id, description, family, lhs, rhs, modulus, count,
          multiplier=1, *, tags=(), note=None) -> RegistryItem:
    check = CongruenceCheck(item_id, family, lhs, rhs, modulus, count,
                            multiplier)
    return RegistryItem(item_id, "scan", description, tuple(tags), (check,),
                        note)


def _build_registry() -> dict[str, RegistryItem]:
    items: list[RegistryItem] = []

    # --- classical single identities -----------------------------------
    items.append(RegistryItem(
        "eq-k1", "binomial",
        "prime-power coefficient congruence f_p = f_1^p (mod p)",
        ("classical",),
        (BinomialCheck("eq-k1", (2, 3, 5, 7, 11, 13, 17), order=500),)))
    items.append(_identity(
        "eq-j1", "partition numbers on 5n+4 as an eta quotient",
        DissectionPipeline("1/f1", ((5, 4),)), "5*f5^5/f1^6",
        tags=("classical",)))
    items.append(_identity(
        "eq-j2", "partition numbers on 7n+5 as a two-term eta quotient",
        DissectionPipeline("1/f1", ((7, 5),)),
        "7*f7^3/f1^4 + 49*q*f7^7/f1^8", tags=("classical",)))

    # --- quotient lemmas -------------------------------------------------
    items.append(_identity(
        "eq-4w", "3-dissection of f2^2/f1",
        "f2^2/f1", "f6*f9^2/(f3*f18) + q*f18^2/f9", tags=("lemmas",)))
    items.append(_identity(
        "eq-a5", "3-dissection of f2/f1^2",
        "f2/f1^2",
        "f6^4*f9^6/(f3^8*f18^3) + 2*q*f6^3*f9^3/f3^7 + 4*q^2*f6^2*f18^3/f3^6",
        tags=("lemmas",)))
    items.append(_identity(
        "eq-3k", "cube of f1 via the cubic theta",
        "f1^3", "f3*a(q^3) - 3*q*f9^3", tags=("lemmas",)))
    items.append(_identity(
        "eq-2k", "cubic theta 3-dissection",
        "a(q)", "a(q^3) + 6*q*f9^3/f3", tags=("lemmas",)))
    items.append(_identity(
        "eq-6k", "reciprocal cube of f1 via the cubic theta",
        "1/f1^3",
        "a(q^3)^2*f9^3/f3^10 + 3*q*a(q^3)*f9^6/f3^11 + 9*q^2*f9^9/f3^12",
        tags=("lemmas",)))
    items.append(_identity(
        "eq-b52", "cube of f2 via the cubic theta (q -> q^2 substitution)",
        "f2^3", "f6*a(q^6) - 3*q^2*f18^3", tags=("lemmas",)))
    items.append(_identity(
        "eq-4", "7-dissection of f1 via the septic theta quotients",
        "f1",
        "f49*(B(q^7)/C(q^7) - q*A(q^7)/B(q^7) - q^2 + q^5*C(q^7)/A(q^7))",
        order=300, tags=("lemmas",)))
    items.append(_identity(
        "eq-8p", "degree-5 septic quotient combination collapsing to 3q",
        "B^5/(A*C^4) - A^5/(B^4*C) - q^3*C^5/(A^4*B)", "3*q",
        order=300, tags=("lemmas",)))
    items.append(_identity(
        "eq-9p", "degree-3 septic quotient combination, first kind",
        "A*B^2/C^3 + q*A^2*C/B^3 - q^2*B*C^2/A^3", "f1^4/f7^4 + 8*q",
        order=300, tags=("lemmas",)))
    items.append(_identity(
        "eq-10p", "degree-3 septic quotient combination, second kind",
        "A^3/(B*C^2) - q*B^3/(A^2*C) - q^2*C^3/(A*B^2)", "f1^4/f7^4 + 5*q",
        order=300, tags=("lemmas",)))
    items.append(_identity(
        "eq-11p", "degree-7 septic quotient combination",
        "B^7/C^7 - q*A^7/B^7 + q^5*C^7/A^7",
        "14*q*f1^4/f7^4 + f1^8/f7^8 + 57*q^2", order=300, tags=("lemmas",)))
    items.append(_identity(
        "eq-15", "f1^5 on 7n+3 in terms of the septic quotient combinations",
        DissectionPipeline("f1^5", ((7, 3),)),
        "f7^5*(20*(A*B^2/C^3 + q*A^2*C/B^3 - q^2*B*C^2/A^3)"
        " - 10*(A^3/(B*C^2) - q*B^3/(A^2*C) - q^2*C^3/(A*B^2)) - 61*q)",
        order=300, tags=("lemmas",)))
    items.append(_identity(
        "lemma-1.2", "f1^5 on 7n+3, simplified two-term form",
        DissectionPipeline("f1^5", ((7, 3),)), "10*f1^4*f7 + 49*q*f7^5",
        tags=("lemmas",)))
    items.append(_identity(
        "lemma-0.2", "f1^7 on 7n, two-term form",
        DissectionPipeline("f1^7", ((7, 0),)), "f1^8/f7 + 49*q*f7^3*f1^4",
        tags=("lemmas",)))
    items.append(_identity(
        "lemma-1.1", "f1^9 on 7n+4, three-term form",
        DissectionPipeline("f1^9", ((7, 4),)),
        "-90*f1^8*f7 - 882*q*f1^4*f7^5 - 2401*q^2*f7^9", tags=("lemmas",)))

    # --- (2,15)-regular bipartitions mod 5 -------------------------------
    items.append(_scan(
        "b215-b1", "B_{2,15}(9n+8) = 0 (mod 5)",
        (2, 15), (9, 8), None, 5, 1000, tags=("b215",)))
    items.append(_scan(
        "b215-b2", "B_{2,15}(27n+14) = 0 (mod 5)",
        (2, 15), (27, 14), None, 5, 1000, tags=("b215",)))
    items.append(_scan(
        "b215-b3", "B_{2,15}(27n+23) = 2*B_{2,15}(3n+2) (mod 5)",
        (2, 15), (27, 23), (3, 2), 5, 1000, multiplier=2, tags=("b215",)))
    items.append(_chain(
        "b215-chain",
        "ternary dissection chain for B_{2,15} mod 5, each link an identity",
        [
            ("b215-chain/3n+2",
             DissectionPipeline("f2*f15/f1^2", ((3, 2),)), _B3_RHS),
            ("b215-chain/9n+5",
             DissectionPipeline(_B3_RHS, ((3, 1),)), _B5_RHS),
            ("b215-chain/9n+8-vanishes",
             DissectionPipeline(_B3_RHS, ((3, 2),)), "0"),
            ("b215-chain/27n+23",
             DissectionPipeline(_B5_RHS, ((3, 2),)), _B6_RHS),
            ("b215-chain/27n+14-vanishes",
             DissectionPipeline(_B5_RHS, ((3, 1),)), "0"),
        ],
        modulus=5, order=200, tags=("b215",),
        note=f"{CHAIN_NOTE}; {INDUCTION_NOTE} for the unbounded-parameter "
             "progression families"))
    items.append(_scan(
        "thm-y-m0", "odd-power progression family at its base parameter",
        (2, 15), (3, 2), (3, 2), 5, 500, multiplier=1, tags=("b215",)))
    items.append(_scan(
        "thm-y-m1", "odd-power progression family one induction step up",
        (2, 15), (27, 23), (3, 2), 5, 1000, multiplier=2, tags=("b215",)))

    # --- (7,11)-regular bipartitions mod 11 --------------------------------
    for k in range(1, 12):
        seed = _triple(*_SEPTIC_CHAIN_TRIPLES[k - 1])
        rhs = _triple(*_SEPTIC_CHAIN_TRIPLES[k])
        items.append(_chain(
            f"b711-chain-{k:02d}",
            f"septic extraction link {k} of the B_{{7,11}} chain mod 11",
            [(f"b711-chain-{k:02d}/(7n+4)",
              DissectionPipeline(seed, ((7, 4),)), rhs)],
            modulus=11, order=200, tags=("b711",),
            note=CHAIN_NOTE))
    items.append(_chain(
        "b711-a4",
        "final-step residues 1, 5, 6 of the B_{7,11} chain vanish mod 11",
        [
            ("b711-a4/7n+1",
             DissectionPipeline(_triple(0, 0, 8), ((7, 1),)), "0"),
            ("b711-a4/7n+5",
             DissectionPipeline(_triple(0, 0, 8), ((7, 5),)), "0"),
            ("b711-a4/7n+6",
             DissectionPipeline(_triple(0, 0, 8), ((7, 6),)), "0"),
        ],
        modulus=11, order=200, tags=("b711",),
        note=f"{CHAIN_NOTE}; {INDUCTION_NOTE} for the vanishing families"))
    items.append(_identity(
        "b711-a3",
        "final-step residue 4 closes the B_{7,11} chain onto 3x its start",
        DissectionPipeline(_triple(0, 0, 8), ((7, 4),)), "3*" + _triple(1, 0, 0),
        modulus=11, order=200, tags=("b711",),
        note=f"{INDUCTION_NOTE}: multiplier-3 step extends the scanned base "
             "cases to all parameters"))

    # --- (27,11)-regular bipartitions mod 11 -------------------------------
    items.append(_chain(
        "b2711-chain",
        "ternary dissection chain for B_{27,11} mod 11",
        [
            ("b2711-chain/3n",
             DissectionPipeline("f27*f1^9", ((3, 0),)), _EQ9_RHS),
            ("b2711-chain/9n+3",
             DissectionPipeline(_EQ9_RHS, ((3, 1),)), _EQ10_RHS),
            ("b2711-chain/27n+12",
             DissectionPipeline(_EQ10_RHS, ((3, 1),)), _EQ10K_RHS),
        ],
        modulus=11, order=200, tags=("b2711",), note=CHAIN_NOTE))
    items.append(_identity(
        "b2711-eq11", "B_{27,11}(81n+66) family vanishes mod 11",
        DissectionPipeline(_EQ10K_RHS, ((3, 2),)), "0",
        modulus=11, order=200, tags=("b2711",),
        note=f"{INDUCTION_NOTE} with b2711-eq12 for all parameters m >= 4"))
    items.append(_identity(
        "b2711-eq12", "B_{27,11}(81n+39) family is 9x the 27n+12 family mod 11",
        DissectionPipeline(_EQ10K_RHS, ((3, 1),)), f"9*({_EQ10K_RHS})",
        modulus=11, order=200, tags=("b2711",),
        note=f"{INDUCTION_NOTE}: multiplier-9 step extends the scanned base "
             "cases to all parameters"))
    items.append(_scan(
        "b2711-m4", "B_{27,11}(81n+66) = 0 (mod 11)",
        (27, 11), (81, 66), None, 11, 400, tags=("b2711",)))
    items.append(_scan(
        "b2711-m5", "B_{27,11}(243n+201) = 0 (mod 11)",
        (27, 11), (243, 201), None, 11, 400, tags=("b2711",)))

    # --- (243,17)-regular bipartitions mod 17 ------------------------------
    items.append(_chain(
        "b24317-chain",
        "ternary dissection chain for B_{243,17} mod 17, ending in a form "
        "supported only on exponents = 1 mod 3",
        [
            ("b24317-chain/3n+2",
             DissectionPipeline("f243*f1^15", ((3, 2),)), _G2_RHS),
            ("b24317-chain/9n+5",
             DissectionPipeline(_G2_RHS, ((3, 1),)), _G3_RHS),
            ("b24317-chain/27n+23",
             DissectionPipeline(_G3_RHS, ((3, 2),)), _G4_RHS),
            ("b24317-chain/final-form", _G4_RHS, _G5_RHS),
            ("b24317-chain/3n-component-vanishes",
             DissectionPipeline(_G5_RHS, ((3, 0),)), "0"),
            ("b24317-chain/3n+2-component-vanishes",
             DissectionPipeline(_G5_RHS, ((3, 2),)), "0"),
        ],
        modulus=17, order=200, tags=("b24317",),
        note=f"{CHAIN_NOTE}; {INDUCTION_NOTE} for all n beyond the scanned "
             "range"))
    items.append(_scan(
        "b24317-23", "B_{243,17}(81n+23) = 0 (mod 17)",
        (243, 17), (81, 23), None, 17, 300, tags=("b24317",)))
    items.append(_scan(
        "b24317-77", "B_{243,17}(81n+77) = 0 (mod 17)",
        (243, 17), (81, 77), None, 17, 300, tags=("b24317",)))

    return {item.id: item for item in items}


REGISTRY: dict[str, RegistryItem] = _build_registry()


def registry_ids() -> list[str]:
    return sorted(REGISTRY)


def select_items(filter_text: str | None) -> list[RegistryItem]:
    """Items whose id equals/starts with the filter or whose tags contain it."""
    if filter_text is None:
        matched = list(REGISTRY.values())
    else:
        matched = [item for item in REGISTRY.values()
                   if item.id == filter_text
                   or item.id.startswith(filter_text)
                   or filter_text in item.tags]
    return sorted(matched, key=lambda item: item.id)


def run_registry(filter_text: str | None = None, order: int | None = None,
                 count: int | None = None) -> RegistryRun:
    """Run all (or filtered) registry items, reports ordered by id."""
    run = RegistryRun()
    items = select_items(filter_text)
    if not items:
        run.warnings.append(f"no registry items match filter {filter_text!r}")
        return run
    for item in items:
        run.reports.append(run_item(item, order=order, count=count))
    return run
