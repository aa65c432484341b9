"""Exclusion sets, exceptional-parameter sweeps, and equivalence reports.

Given a bivariate polynomial P and auxiliary monic polynomials S (one per
conjugacy class of maximal subgroups of the generic Galois group), this
module computes the exclusion set D, tests every bounded-height parameter
outside D for the root-witness equivalence, and enumerates exceptional
parameters together with the curve points that certify them.

Indeterminate Galois identifications (the degree-5/6 sieve cannot always
separate groups) are a third verdict: they are reported and counted, never
silently passed or failed.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import DomainError, FixtureError, InconclusiveError
from .factorq import factorization_type, rational_roots
from .galois import (
    GaloisId,
    groups_match,
    identify_galois,
    label_for_group,
    table_entry,
    transitive_table,
)
from .permgroups import PermGroup, maximal_classes
from .polys import (
    BiPoly,
    bipoly_str,
    discriminant_in_x,
    leading_coeff_in_x,
    parse_poly,
)
from .rationals import height, rationals_up_to_height, sample_rationals

DEFAULT_PRIME_BUDGET = 24


@dataclass(frozen=True)
class HitData:
    """A polynomial family with its exclusion set and auxiliary polynomials."""

    name: str
    P: BiPoly
    D: frozenset[Fraction]
    S: tuple[BiPoly, ...]
    provenance: dict = field(default_factory=dict)
    g_label: str | None = None
    g_order: int | None = None
    notes: str = ""


@dataclass(frozen=True)
class SpecializationRecord:
    t: Fraction
    in_d: bool
    witness: tuple[int, Fraction] | None
    factorization: tuple[int, ...]
    galois: GaloisId | None
    verdict: str  # excluded | exceptional | generic | indeterminate

    def sort_key(self):
        return (height(self.t), self.t.numerator, self.t.denominator)


@dataclass
class EquivalenceReport:
    kind: str
    fixture: str
    height_bound: int
    prime_budget: int
    reference_label: str | None
    reference_order: int | None
    reference_provenance: str
    checked: int
    counts: dict[str, int]
    violations: list[SpecializationRecord]
    indeterminates: list[SpecializationRecord]
    invalid_configuration: bool = False
    records: list[SpecializationRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.invalid_configuration

    def indeterminate_fraction(self) -> float:
        if not self.checked:
            return 0.0
        return len(self.indeterminates) / self.checked


def compute_exclusion_set(P: BiPoly, S) -> frozenset[Fraction]:
    """Rational roots of the leading coefficient, the discriminant of P,
    and the discriminant of every auxiliary polynomial."""
    if P.degree_x < 1:
        raise DomainError("P must involve X")
    disc = discriminant_in_x(P)
    if disc.is_zero():
        raise DomainError("P is not separable over Q(T)")
    out: set[Fraction] = set()
    lead = leading_coeff_in_x(P)
    if lead.degree >= 1:
        out |= rational_roots(lead)
    out |= rational_roots(disc)
    for i, f in enumerate(S):
        df = discriminant_in_x(f)
        if df.is_zero():
            raise DomainError(f"auxiliary polynomial {i} is not separable")
        if df.degree >= 1:
            out |= rational_roots(df)
    return frozenset(out)


def _find_witness(S, t: Fraction) -> tuple[int, Fraction] | None:
    for i, f in enumerate(S):
        roots = rational_roots(f.specialize(t))
        if roots:
            return (i, min(roots))
    return None


def exceptional_test(
    t,
    data: HitData,
    reference: PermGroup | None = None,
    budget: int = DEFAULT_PRIME_BUDGET,
) -> SpecializationRecord:
    """Classify one parameter value, with audit fields always populated."""
    t = Fraction(t)
    in_d = t in data.D
    witness = _find_witness(data.S, t)
    pt = data.P.specialize(t)
    ftype: tuple[int, ...] = ()
    gid: GaloisId | None = None
    if pt.degree >= 1:
        ftype = factorization_type(pt)
        gid = identify_galois(pt, budget)
    if in_d:
        verdict = "excluded"
    elif witness is not None:
        verdict = "exceptional"
    else:
        if reference is not None and gid is not None:
            verdict = "indeterminate" if groups_match(gid, reference) is None else "generic"
        else:
            verdict = "generic" if gid is not None and gid.mode == "definitive" else "indeterminate"
    return SpecializationRecord(
        t=t, in_d=in_d, witness=witness, factorization=ftype, galois=gid, verdict=verdict
    )


# -- reference group ------------------------------------------------------------


@dataclass(frozen=True)
class GenericGroupSummary:
    order: int
    attained_at: Fraction
    identification: GaloisId
    note: str = "derived reference, not a proof"


def generic_group(P: BiPoly, samples, budget: int = 48) -> GenericGroupSummary:
    """Largest Galois group order attained on the sample parameters.

    Outside a thin set the specialization attains the generic group, so the
    maximum over a handful of samples is the working reference order; the
    result is flagged as derived evidence, never as a proof.
    """
    samples = [Fraction(s) for s in samples]
    if len(samples) < 5:
        raise DomainError("need at least 5 sample parameters")
    best: tuple[int, Fraction, GaloisId] | None = None
    for t in samples:
        pt = P.specialize(t)
        if pt.degree < 1:
            continue
        gid = identify_galois(pt, budget)
        if gid.mode == "definitive":
            attained = gid.order
        elif gid.mode == "sieved":
            attained = min(gid.candidate_orders())
        else:
            continue
        if best is None or attained > best[0]:
            best = (attained, t, gid)
    if best is None:
        raise InconclusiveError("every sample parameter was degenerate")
    return GenericGroupSummary(order=best[0], attained_at=best[1], identification=best[2])


def resolve_reference(
    data: HitData, budget: int = 48, samples=None
) -> tuple[PermGroup, str]:
    """Reference group for equivalence checks, with its provenance.

    Preference order: fixture label, fixture order, then an order derived
    by specialization sampling.  When auxiliary polynomials are present
    their X-degrees must match the maximal-subgroup indices of the
    resolved group.
    """
    deg = data.P.degree_x
    sdegs = sorted(f.degree_x for f in data.S)
    if data.g_label is not None:
        e = table_entry(data.g_label)
        if e.degree != deg:
            raise FixtureError(f"reference degree {e.degree} != {deg}", "G_label")
        if data.g_order is not None and e.order != data.g_order:
            raise FixtureError("G_order contradicts G_label", "G_order")
        ref, prov = e.group, f"fixture label {data.g_label}"
    else:
        if data.g_order is not None:
            order, prov = data.g_order, f"fixture order {data.g_order}"
        else:
            if samples is None:
                samples = sample_rationals(5, exclude=data.D | {Fraction(0)})
            summary = generic_group(data.P, samples, budget)
            order = summary.order
            prov = "order derived from specialization sampling (not a proof)"
        cands = [e for e in transitive_table(deg) if e.order == order]
        if len(cands) > 1 and sdegs:
            cands = [
                e
                for e in cands
                if sorted(c.index for c in maximal_classes(e.group)) == sdegs
            ]
        if len(cands) != 1:
            raise FixtureError(
                f"cannot pin a transitive group of degree {deg} and order {order}"
            )
        ref, prov = cands[0].group, prov + f", matched {cands[0].label}"
    if sdegs:
        idx = sorted(c.index for c in maximal_classes(ref))
        if idx != sdegs:
            raise FixtureError(
                f"auxiliary X-degrees {sdegs} do not match maximal subgroup "
                f"indices {idx} of the reference group"
            )
    return ref, prov


# -- sweeps ----------------------------------------------------------------------


def _sweep_values(data: HitData, height_bound: int) -> list[Fraction]:
    return [t for t in rationals_up_to_height(height_bound) if t not in data.D]


def _record_chunk(args) -> list[SpecializationRecord]:
    data, reference, ts, budget = args
    return [exceptional_test(t, data, reference, budget) for t in ts]


def _sweep_records(
    data: HitData,
    reference: PermGroup | None,
    values,
    budget: int,
    workers: int,
) -> list[SpecializationRecord]:
    values = list(values)
    if workers <= 1 or len(values) < 64:
        return [exceptional_test(t, data, reference, budget) for t in values]
    chunks = [values[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_record_chunk, [(data, reference, c, budget) for c in chunks]))
    records = [r for part in parts for r in part]
    records.sort(key=SpecializationRecord.sort_key)
    return records


def default_workers() -> int:
    env = os.environ.get("HITBOX_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def verify_equivalence(
    data: HitData,
    reference: PermGroup,
    height_bound: int,
    budget: int = DEFAULT_PRIME_BUDGET,
    workers: int | None = None,
    keep_records: bool = False,
) -> EquivalenceReport:
    """Check (some f in S has a rational root at t) <=> (G_t differs from G)
    for every t outside D up to the height bound."""
    workers = default_workers() if workers is None else workers
    records = _sweep_records(data, reference, _sweep_values(data, height_bound), budget, workers)
    violations = []
    indeterminates = []
    counts: dict[str, int] = {}
    for rec in records:
        counts[rec.verdict] = counts.get(rec.verdict, 0) + 1
        match = groups_match(rec.galois, reference) if rec.galois else None
        if match is None:
            indeterminates.append(rec)
        elif (rec.witness is not None) == match:
            violations.append(rec)
    invalid = not data.S and reference.order > 1
    return EquivalenceReport(
        kind="equivalence",
        fixture=data.name,
        height_bound=height_bound,
        prime_budget=budget,
        reference_label=label_for_group(reference),
        reference_order=reference.order,
        reference_provenance=data.provenance.get("reference", ""),
        checked=len(records),
        counts=counts,
        violations=violations,
        indeterminates=indeterminates,
        invalid_configuration=invalid,
        records=records if keep_records else [],
    )


def generic_factorization_type(
    data: HitData, attempts: int = 40
) -> tuple[int, ...]:
    """Factorization type of P over Q(T), certified by one specialization
    that stays irreducible at full degree (sound: factors specialize)."""
    deg = data.P.degree_x
    for t in sample_rationals(attempts, exclude=data.D):
        pt = data.P.specialize(t)
        if pt.degree == deg and factorization_type(pt) == (deg,):
            return (deg,)
    raise InconclusiveError(
        "no sampled specialization certifies irreducibility of P over Q(T)"
    )


def verify_factorization_implication(
    data: HitData,
    height_bound: int,
    budget: int = DEFAULT_PRIME_BUDGET,
    workers: int | None = None,
    keep_records: bool = False,
) -> EquivalenceReport:
    """Check: factorization type changed at t => some f in S has a root at t."""
    workers = default_workers() if workers is None else workers
    generic_type = generic_factorization_type(data)
    records = _sweep_records(data, None, _sweep_values(data, height_bound), budget, workers)
    violations = []
    counts: dict[str, int] = {}
    changed = 0
    for rec in records:
        counts[rec.verdict] = counts.get(rec.verdict, 0) + 1
        if rec.factorization != generic_type:
            changed += 1
            if rec.witness is None:
                violations.append(rec)
    counts["type_changed"] = changed
    return EquivalenceReport(
        kind="factorization",
        fixture=data.name,
        height_bound=height_bound,
        prime_budget=budget,
        reference_label=None,
        reference_order=None,
        reference_provenance="generic type " + str(list(generic_type)),
        checked=len(records),
        counts=counts,
        violations=violations,
        indeterminates=[],
        records=records if keep_records else [],
    )


def _witness_chunk(args) -> list[Fraction]:
    data, ts = args
    return [t for t in ts if _find_witness(data.S, t) is not None]


def enumerate_exceptional(
    data: HitData,
    height_bound: int,
    budget: int = DEFAULT_PRIME_BUDGET,
    workers: int | None = None,
) -> list[SpecializationRecord]:
    """All exceptional parameters up to the height bound, with witnesses.

    Each witness (i, x) is an exact rational point (t, x) on the plane
    curve cut out by the i-th auxiliary polynomial.  The sweep scans for
    witnesses first and only builds full audit records for the hits.
    """
    workers = default_workers() if workers is None else workers
    values = _sweep_values(data, height_bound)
    if workers <= 1 or len(values) < 64:
        hits = [t for t in values if _find_witness(data.S, t) is not None]
    else:
        chunks = [values[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_witness_chunk, [(data, c) for c in chunks]))
        hits = sorted(
            (t for part in parts for t in part),
            key=lambda t: (height(t), t.numerator, t.denominator),
        )
    return [exceptional_test(t, data, None, budget) for t in hits]


# -- fixtures ---------------------------------------------------------------------

_FIXTURE_FIELDS = {"name", "P", "D", "S", "G_label", "G_order", "notes"}


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("hitbox") / "fixtures" / f"{name}.json"))


def bundled_fixtures() -> list[str]:
    base = resources.files("hitbox") / "fixtures"
    return sorted(p.name[:-5] for p in base.iterdir() if p.name.endswith(".json"))


def load_fixture(source) -> HitData:
    """Load and validate a fixture from a path, bundled name, or dict."""
    if isinstance(source, dict):
        raw, name = source, source.get("name", "inline")
    else:
        path = Path(source)
        if not path.exists() and Path(str(source)).suffix == "" and "/" not in str(source):
            path = fixture_path(str(source))
        if not path.exists():
            raise FixtureError(f"no such fixture: {source}")
        raw = json.loads(path.read_text())
        name = raw.get("name", path.stem)
    unknown = set(raw) - _FIXTURE_FIELDS
    if unknown:
        raise FixtureError(f"unknown fields {sorted(unknown)}")
    for key in ("P", "D", "S"):
        if key not in raw:
            raise FixtureError("missing field", key)
    try:
        P = parse_poly(raw["P"])
    except Exception as e:
        raise FixtureError(str(e), "P")
    if P.degree_x < 1:
        raise FixtureError("P must involve X", "P")
    S = []
    for i, text in enumerate(raw["S"]):
        try:
            f = parse_poly(text)
        except Exception as e:
            raise FixtureError(str(e), f"S[{i}]")
        if not f.is_monic_in_x():
            raise FixtureError("auxiliary polynomial is not monic in X", f"S[{i}]")
        if f.degree_x < 2:
            raise FixtureError("auxiliary polynomial needs X-degree >= 2", f"S[{i}]")
        S.append(f)
    try:
        declared_d = frozenset(Fraction(s) for s in raw["D"])
    except ValueError as e:
        raise FixtureError(str(e), "D")
    try:
        computed_d = compute_exclusion_set(P, S)
    except DomainError as e:
        raise FixtureError(str(e), "P")
    if not declared_d <= computed_d:
        missing = sorted(declared_d - computed_d)
        raise FixtureError(f"declared values {missing} are not in the computed set", "D")
    notes = raw.get("notes", "")
    if not S:
        notes = (notes + " " if notes else "") + "no maximal subgroup data"
    return HitData(
        name=name,
        P=P,
        D=computed_d,
        S=tuple(S),
        provenance={"P": "fixture", "S": "fixture", "D": "computed"},
        g_label=raw.get("G_label"),
        g_order=raw.get("G_order"),
        notes=notes,
    )


# -- report serialization -----------------------------------------------------------


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def record_to_dict(rec: SpecializationRecord) -> dict:
    gal = None
    if rec.galois is not None:
        gal = {
            "mode": rec.galois.mode,
            "label": rec.galois.label,
            "kind": rec.galois.kind,
            "order": rec.galois.order,
            "candidates": list(rec.galois.candidates),
            "factor_degrees": list(rec.galois.factor_degrees),
        }
    return {
        "t": _frac_str(rec.t),
        "height": height(rec.t),
        "in_d": rec.in_d,
        "verdict": rec.verdict,
        "witness": None
        if rec.witness is None
        else {"index": rec.witness[0], "root": _frac_str(rec.witness[1])},
        "factorization_type": list(rec.factorization),
        "galois": gal,
    }


def report_to_dict(report: EquivalenceReport) -> dict:
    out = {
        "kind": report.kind,
        "fixture": report.fixture,
        "height_bound": report.height_bound,
        "prime_budget": report.prime_budget,
        "reference": {
            "label": report.reference_label,
            "order": report.reference_order,
            "provenance": report.reference_provenance,
        },
        "checked": report.checked,
        "counts": dict(sorted(report.counts.items())),
        "passed": report.passed,
        "invalid_configuration": report.invalid_configuration,
        "indeterminate_count": len(report.indeterminates),
        "indeterminate_fraction": round(report.indeterminate_fraction(), 6),
        "violations": [record_to_dict(r) for r in report.violations],
        "indeterminate_ts": [_frac_str(r.t) for r in report.indeterminates],
    }
    if report.records:
        out["records"] = [record_to_dict(r) for r in report.records]
    return out


def report_to_json(report: EquivalenceReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, separators=(",", ":"))


def records_table(records) -> str:
    rows = [("t", "verdict", "witness", "type", "galois")]
    for rec in records:
        wit = "-" if rec.witness is None else f"f{rec.witness[0] + 1} @ {_frac_str(rec.witness[1])}"
        gal = "-" if rec.galois is None else rec.galois.describe()
        rows.append(
            (
                _frac_str(rec.t),
                rec.verdict,
                wit,
                "{" + ",".join(map(str, rec.factorization)) + "}",
                gal,
            )
        )
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    lines = []
    for i, r in enumerate(rows):
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def report_table(report: EquivalenceReport) -> str:
    head = [
        f"fixture: {report.fixture}",
        f"kind: {report.kind}   height <= {report.height_bound}   primes: {report.prime_budget}",
        f"reference: {report.reference_label or '-'} (order {report.reference_order or '-'}) "
        f"[{report.reference_provenance}]",
        f"checked: {report.checked}   counts: {dict(sorted(report.counts.items()))}",
        f"indeterminate: {len(report.indeterminates)} "
        f"({100 * report.indeterminate_fraction():.1f}%)",
        f"violations: {len(report.violations)}   passed: {report.passed}",
    ]
    body = ""
    if report.violations:
        body = "\nviolations:\n" + records_table(report.violations)
    if report.records:
        body += "\nrecords:\n" + records_table(report.records)
    return "\n".join(head) + body
