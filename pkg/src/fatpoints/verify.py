"""Computational checks of the identities relating a fat point scheme to
its image under the coordinate-padding embedding.

Every check recomputes both sides of an identity independently; the
embedded side is always an honest rank computation on the embedded
conditions matrix, never the identity being tested.  Reports carry the
integer values of both sides, so a failing run is a self-contained
counterexample certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    DegreeOutOfRange,
    NotOnRationalNormalCurve,
    SchemeFormatError,
    TargetTooSmall,
    TooFewPoints,
)
from .exactlinalg import _rank_of_int_rows, _sparse_nullspace, binomial
from .hilbert import (
    _column_index,
    _conditions_int_rows,
    _exponent_tuples,
    hilbert_function,
    ideal_dim,
    regularity_index,
)
from .scheme import (
    FatPointScheme,
    embed,
    multiplicity,
    scheme_fingerprint,
    truncate,
)

__all__ = [
    "CheckRecord",
    "VerificationReport",
    "check_reg_invariance",
    "check_stable_range",
    "transfer_rhs",
    "check_transfer",
    "check_cor46",
    "check_prop44",
    "check_prop44_displayed",
    "check_restriction",
    "check_restriction_range",
    "check_lemma23",
    "rnc_reg_formula",
    "check_rnc",
    "points_on_rnc",
    "run_checks",
    "report_to_json_dict",
    "report_to_json",
    "report_from_json",
    "DIAGNOSTIC_CHECKS",
    "CHECK_NAMES",
]


@dataclass(frozen=True)
class CheckRecord:
    """One compared pair of integers; t is None for whole-scheme records."""

    t: int | None
    lhs: int
    rhs: int
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    check: str
    scheme_fingerprint: str
    target_dim: int | None
    records: tuple[CheckRecord, ...]
    passed: bool
    note: str = ""


def _report(check, scheme, target_dim, records, note="") -> VerificationReport:
    return VerificationReport(
        check=check,
        scheme_fingerprint=scheme_fingerprint(scheme),
        target_dim=target_dim,
        records=tuple(records),
        passed=all(r.passed for r in records),
        note=note,
    )


def _require_larger_target(scheme: FatPointScheme, target_dim: int) -> None:
    if target_dim <= scheme.ambient_dim:
        raise TargetTooSmall(
            f"target dimension {target_dim} must exceed ambient {scheme.ambient_dim}"
        )


def check_reg_invariance(scheme: FatPointScheme, target_dim: int) -> VerificationReport:
    """Regularity index before and after embedding, by two full rank scans."""
    if target_dim < scheme.ambient_dim:
        raise TargetTooSmall(
            f"target dimension {target_dim} is below ambient {scheme.ambient_dim}"
        )
    reg_source = regularity_index(scheme)
    reg_image = regularity_index(embed(scheme, target_dim))
    rec = CheckRecord(
        t=None,
        lhs=reg_source,
        rhs=reg_image,
        passed=reg_source == reg_image,
        note="reg of scheme vs reg of embedded scheme",
    )
    return _report("reg_invariance", scheme, target_dim, [rec])


def check_stable_range(scheme: FatPointScheme, target_dim: int) -> VerificationReport:
    """In the stable range both Hilbert functions equal their multiplicity
    formulas, and the embedded one dominates, strictly unless all m_i = 1."""
    _require_larger_target(scheme, target_dim)
    n, m = scheme.ambient_dim, target_dim
    image = embed(scheme, m)
    e_n = multiplicity(scheme)
    e_m = multiplicity(image)
    all_simple = all(mi == 1 for mi in scheme.multiplicities)
    reg = regularity_index(scheme)
    records = []
    for t in (reg, reg + 1):
        h_n = hilbert_function(scheme, t)
        h_m = hilbert_function(image, t)
        records.append(
            CheckRecord(t, h_m, e_m, h_m == e_m, "embedded H equals its multiplicity")
        )
        records.append(CheckRecord(t, h_n, e_n, h_n == e_n, "H equals its multiplicity"))
        if all_simple:
            records.append(
                CheckRecord(t, h_m, h_n, h_m == h_n, "equality (all multiplicities 1)")
            )
        else:
            records.append(
                CheckRecord(t, h_m, h_n, h_m > h_n, "strict inequality (some m_i >= 2)")
            )
    return _report("stable_range", scheme, target_dim, records)


def transfer_rhs(scheme: FatPointScheme, target_dim: int, t: int) -> int:
    """Right-hand side of the transfer formula for the embedded Hilbert value:

        H(t) + C(t+m, m) - C(t+n, n)
             - sum_{i=0}^{t-1} C(m-n-1+t-i, t-i) * (C(i+n, n) - H_trunc(t-i)(i))

    where H_trunc(k) is the Hilbert function of the scheme with all
    multiplicities lowered by k (zero for the unit ideal).  Defined for
    0 <= t < reg only.
    """
    _require_larger_target(scheme, target_dim)
    reg = regularity_index(scheme)
    if t < 0 or t >= reg:
        raise DegreeOutOfRange(f"transfer formula needs 0 <= t < reg = {reg}, got {t}")
    n, m = scheme.ambient_dim, target_dim
    total = hilbert_function(scheme, t) + binomial(t + m, m) - binomial(t + n, n)
    for i in range(t):
        drop = t - i
        missing = binomial(i + n, n) - hilbert_function(truncate(scheme, drop), i)
        total -= binomial(m - n - 1 + drop, drop) * missing
    return total


def check_transfer(scheme: FatPointScheme, target_dim: int) -> VerificationReport:
    """Embedded Hilbert value vs the transfer formula, for every t below reg."""
    _require_larger_target(scheme, target_dim)
    image = embed(scheme, target_dim)
    reg = regularity_index(scheme)
    records = []
    for t in range(reg):
        lhs = hilbert_function(image, t)
        rhs = transfer_rhs(scheme, target_dim, t)
        records.append(CheckRecord(t, lhs, rhs, lhs == rhs, "embedded H vs transfer formula"))
    note = "" if records else "no degrees below the regularity index"
    return _report("transfer", scheme, target_dim, records, note)


def check_cor46(scheme: FatPointScheme, target_dim: int) -> VerificationReport:
    """Single-step additive identity (when m = n+1), monotonicity, and
    strictness of the embedded Hilbert function when some m_i >= 2.

    Strictness is asserted for t >= 1 only: at t = 0 both sides are 1, so
    the record there checks that boundary equality instead.
    """
    _require_larger_target(scheme, target_dim)
    n, m = scheme.ambient_dim, target_dim
    image = embed(scheme, m)
    reg = regularity_index(scheme)
    records = []
    if m == n + 1:
        for t in range(reg):
            rhs = hilbert_function(scheme, t) + sum(
                hilbert_function(truncate(scheme, t - i), i) for i in range(t)
            )
            lhs = hilbert_function(image, t)
            records.append(
                CheckRecord(t, lhs, rhs, lhs == rhs, "single-step additive identity")
            )
    for t in range(reg + 2):
        h_m = hilbert_function(image, t)
        h_n = hilbert_function(scheme, t)
        records.append(CheckRecord(t, h_m, h_n, h_m >= h_n, "embedded H dominates"))
    some_fat = any(mi >= 2 for mi in scheme.multiplicities)
    note = ""
    if some_fat:
        h_m0 = hilbert_function(image, 0)
        h_n0 = hilbert_function(scheme, 0)
        records.append(
            CheckRecord(
                0,
                h_m0,
                h_n0,
                h_m0 == 1 and h_n0 == 1,
                "statement boundary: both sides equal 1 at t = 0",
            )
        )
        for t in range(1, reg + 2):
            h_m = hilbert_function(image, t)
            h_n = hilbert_function(scheme, t)
            records.append(
                CheckRecord(t, h_m, h_n, h_m > h_n, "strict dominance (some m_i >= 2)")
            )
    else:
        note = "strictness vacuous: all multiplicities are 1"
    return _report("cor46", scheme, target_dim, records, note)


def _dimension_identity_records(scheme, target_dim, upper_shift):
    """Records for the ideal-dimension identity with new-variable coefficient
    C(m - n - 1 + upper_shift + d, d); upper_shift selects the variant."""
    n, m = scheme.ambient_dim, target_dim
    image = embed(scheme, m)
    reg = regularity_index(scheme)
    records = []
    for t in range(reg):
        rhs = ideal_dim(scheme, t)
        for i in range(t):
            drop = t - i
            rhs += binomial(m - n - 1 + upper_shift + drop, drop) * ideal_dim(
                truncate(scheme, drop), i
            )
        lhs = ideal_dim(image, t)
        records.append(
            CheckRecord(t, lhs, rhs, lhs == rhs, "embedded ideal dimension vs sum")
        )
    return records


def check_prop44(scheme: FatPointScheme, target_dim: int) -> VerificationReport:
    """Ideal-dimension identity with coefficient C(m-n-1+t-i, t-i), the
    number of degree-(t-i) monomials in the m-n new variables."""
    _require_larger_target(scheme, target_dim)
    records = _dimension_identity_records(scheme, target_dim, 0)
    note = "" if records else "no degrees below the regularity index"
    return _report("prop44", scheme, target_dim, records, note)


def check_prop44_displayed(scheme: FatPointScheme, target_dim: int) -> VerificationReport:
    """Diagnostic: the same identity with the coefficient C(m-n+t-i, t-i).

    This variant is expected to fail as soon as the sum has a nonzero term;
    a failing report here is evidence for resolving the coefficient in
    favour of C(m-n-1+t-i, t-i).
    """
    _require_larger_target(scheme, target_dim)
    records = _dimension_identity_records(scheme, target_dim, 1)
    return _report(
        "prop44_displayed_variant",
        scheme,
        target_dim,
        records,
        "diagnostic variant; failure indicates the displayed coefficient is off by one",
    )


def _restriction_records(scheme: FatPointScheme, target_dim: int, t: int) -> list[CheckRecord]:
    n, m = scheme.ambient_dim, target_dim
    image = embed(scheme, m)
    big_rows, big_cols = _conditions_int_rows(image, t)
    small_rows, small_cols = _conditions_int_rows(scheme, t)

    # columns of the big matrix indexed by monomials in the old variables only
    big_index = _column_index(m + 1, t)
    pad = (0,) * (m - n)
    old_cols = {
        big_index[beta + pad]: k for k, beta in enumerate(_exponent_tuples(n + 1, t))
    }

    # (i) substituting 0 for the new variables maps the degree-t ideal of the
    # image into the degree-t ideal of the source: every nullspace vector,
    # restricted to old-variable columns, must be annihilated by the small matrix
    annihilated = 0
    vectors = _sparse_nullspace(big_rows, big_cols)
    for vec in vectors:
        restricted = {old_cols[c]: v for c, v in vec.items() if c in old_cols}
        if all(
            sum(coeff * restricted.get(c, 0) for c, coeff in row.items()) == 0
            for row in small_rows
        ):
            annihilated += 1
    membership = CheckRecord(
        t,
        annihilated,
        len(vectors),
        annihilated == len(vectors),
        "restricted ideal members vanish on the source scheme",
    )

    # (ii) the intersection of the embedded ideal with the old-variable span
    # has exactly the dimension of the source ideal
    restricted_rows = [
        {old_cols[c]: v for c, v in row.items() if c in old_cols} for row in big_rows
    ]
    inter_dim = small_cols - _rank_of_int_rows(restricted_rows, small_cols)
    dimension = CheckRecord(
        t,
        inter_dim,
        ideal_dim(scheme, t),
        inter_dim == ideal_dim(scheme, t),
        "intersection dimension equals source ideal dimension",
    )
    return [membership, dimension]


def check_restriction(scheme: FatPointScheme, target_dim: int, t: int) -> VerificationReport:
    """Degree-t restriction checks: ideal membership after substituting zeros,
    and the intersection-dimension identity."""
    _require_larger_target(scheme, target_dim)
    if t < 0:
        raise DegreeOutOfRange(f"degree must be nonnegative, got {t}")
    return _report("restriction", scheme, target_dim, _restriction_records(scheme, target_dim, t))


def check_restriction_range(
    scheme: FatPointScheme, target_dim: int, max_degree: int | None = None
) -> VerificationReport:
    """Restriction checks for every degree up to reg + 1 (or max_degree)."""
    _require_larger_target(scheme, target_dim)
    if max_degree is None:
        max_degree = regularity_index(scheme) + 1
    records = []
    for t in range(max_degree + 1):
        records.extend(_restriction_records(scheme, target_dim, t))
    return _report("restriction", scheme, target_dim, records)


def check_lemma23(scheme: FatPointScheme) -> VerificationReport:
    """reg is at least m1 + m2 - 1 for the two largest multiplicities."""
    if scheme.num_points < 2:
        return _report(
            "lemma23", scheme, None, [], note="not applicable: scheme has a single point"
        )
    m1, m2 = sorted(scheme.multiplicities, reverse=True)[:2]
    reg = regularity_index(scheme)
    rec = CheckRecord(
        t=None,
        lhs=reg,
        rhs=m1 + m2 - 1,
        passed=reg >= m1 + m2 - 1,
        note="reg vs lower bound from the two largest multiplicities",
    )
    return _report("lemma23", scheme, None, [rec])


def rnc_reg_formula(mults, n: int) -> int:
    """Closed-form regularity index for points on a rational normal curve:

        max(m1 + m2 - 1, floor((sum m_i + n - 2) / n))

    with m1 >= m2 the two largest multiplicities.  Input order does not
    matter; the list is sorted internally.
    """
    if len(mults) < 2:
        raise TooFewPoints("the formula references the two largest multiplicities")
    ordered = sorted(mults, reverse=True)
    return max(ordered[0] + ordered[1] - 1, (sum(ordered) + n - 2) // n)


def points_on_rnc(scheme: FatPointScheme) -> bool:
    """True when every point lies on the standard rational normal curve.

    A point (a_0 : ... : a_n) lies on the curve exactly when the 2 x n
    matrix with rows (a_0 ... a_{n-1}) and (a_1 ... a_n) has rank at most
    one; in P^1 that is every point.
    """
    n = scheme.ambient_dim
    for point in scheme.points:
        a = point.coords
        for i in range(n):
            for j in range(i + 1, n):
                if a[i] * a[j + 1] - a[j] * a[i + 1] != 0:
                    return False
    return True


def check_rnc(scheme: FatPointScheme, target_dim: int) -> VerificationReport:
    """Regularity of a curve configuration, before and after embedding,
    against the closed-form formula."""
    if scheme.num_points < 2:
        raise TooFewPoints("the curve formula needs at least two points")
    if not points_on_rnc(scheme):
        raise NotOnRationalNormalCurve(
            "a point is off the rational normal curve; the formula does not apply"
        )
    if target_dim < scheme.ambient_dim:
        raise TargetTooSmall(
            f"target dimension {target_dim} is below ambient {scheme.ambient_dim}"
        )
    expected = rnc_reg_formula(scheme.multiplicities, scheme.ambient_dim)
    reg_source = regularity_index(scheme)
    reg_image = regularity_index(embed(scheme, target_dim))
    records = [
        CheckRecord(None, reg_source, expected, reg_source == expected, "reg vs formula"),
        CheckRecord(
            None, reg_image, expected, reg_image == expected, "embedded reg vs formula"
        ),
    ]
    return _report("rnc", scheme, target_dim, records)


CHECK_NAMES = (
    "reg",
    "stable",
    "transfer",
    "cor46",
    "prop44",
    "restriction",
    "lemma23",
    "rnc",
)

DIAGNOSTIC_CHECKS = frozenset({"prop44_displayed_variant"})


def run_checks(
    scheme: FatPointScheme,
    target_dim: int,
    names=("all",),
    prop44_diagnostic: bool = False,
    explicit: bool = False,
) -> list[VerificationReport]:
    """Run the selected checks in a fixed order and return their reports.

    With the default selection ("all"), checks whose preconditions the
    scheme does not meet (rnc off the curve or with one point) come back as
    passing not-applicable reports; explicitly selected checks raise
    instead.  ``prop44_diagnostic`` appends the displayed-coefficient
    variant, which is expected to fail and is listed in DIAGNOSTIC_CHECKS.
    """
    requested = list(names)
    if "all" in requested:
        requested = list(CHECK_NAMES)
    unknown = sorted(set(requested) - set(CHECK_NAMES))
    if unknown:
        raise SchemeFormatError(f"unknown checks: {', '.join(unknown)}")
    reports = []
    for name in CHECK_NAMES:
        if name not in requested:
            continue
        if name == "reg":
            reports.append(check_reg_invariance(scheme, target_dim))
        elif name == "stable":
            reports.append(check_stable_range(scheme, target_dim))
        elif name == "transfer":
            reports.append(check_transfer(scheme, target_dim))
        elif name == "cor46":
            reports.append(check_cor46(scheme, target_dim))
        elif name == "prop44":
            reports.append(check_prop44(scheme, target_dim))
            if prop44_diagnostic:
                reports.append(check_prop44_displayed(scheme, target_dim))
        elif name == "restriction":
            reports.append(check_restriction_range(scheme, target_dim))
        elif name == "lemma23":
            reports.append(check_lemma23(scheme))
        elif name == "rnc":
            if scheme.num_points >= 2 and points_on_rnc(scheme):
                reports.append(check_rnc(scheme, target_dim))
            elif explicit:
                check_rnc(scheme, target_dim)  # raises with the precise reason
            else:
                why = (
                    "fewer than two points"
                    if scheme.num_points < 2
                    else "points are not on the rational normal curve"
                )
                reports.append(
                    _report("rnc", scheme, target_dim, [], note=f"not applicable: {why}")
                )
    return reports


def report_to_json_dict(report: VerificationReport) -> dict:
    doc = {
        "check": report.check,
        "scheme_fingerprint": report.scheme_fingerprint,
        "target_dim": report.target_dim,
        "pass": report.passed,
        "records": [
            {"t": r.t, "lhs": r.lhs, "rhs": r.rhs, "pass": r.passed, "note": r.note}
            for r in report.records
        ],
    }
    if report.note:
        doc["note"] = report.note
    if report.check in DIAGNOSTIC_CHECKS:
        doc["diagnostic"] = True
    return doc


def report_to_json(report: VerificationReport) -> str:
    return json.dumps(report_to_json_dict(report), sort_keys=True, separators=(", ", ": "))


def report_from_json(text: str) -> VerificationReport:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemeFormatError(f"invalid JSON: {exc}") from None
    try:
        records = tuple(
            CheckRecord(r["t"], r["lhs"], r["rhs"], r["pass"], r.get("note", ""))
            for r in doc["records"]
        )
        return VerificationReport(
            check=doc["check"],
            scheme_fingerprint=doc["scheme_fingerprint"],
            target_dim=doc["target_dim"],
            records=records,
            passed=doc["pass"],
            note=doc.get("note", ""),
        )
    except (KeyError, TypeError) as exc:
        raise SchemeFormatError(f"malformed report document: {exc}") from None
