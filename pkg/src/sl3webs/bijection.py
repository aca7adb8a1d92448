"""End-to-end pipeline from fillings to webs, and the verification harness.

Mathematical failures are recorded in a :class:`VerificationReport` rather
than raised, so a sweep always finishes and every counterexample can be read
back afterwards.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import islice

from .errors import IndexOutOfRange, Sl3WebsError
from .mdiagram import MDiagram, build_m_diagram
from .signs_tableaux import (
    PairMap,
    SignString,
    Tableau,
    conjugate,
    enumerate_fillings,
    jdt_promote,
    shuffle,
    shuffled_sign,
    sign_strings,
    standardize,
    tau_set,
)
from .web import (
    Web,
    canonical_code,
    contract_minus_pairs,
    is_non_elliptic,
    join,
    rotate,
    validate_web,
    web_from_m_diagram,
    web_to_tableau,
)


@dataclass(frozen=True)
class Pipeline:
    """Every intermediate object of the filling-to-web construction."""

    tableau: Tableau
    sign: SignString
    standard: Tableau
    pair_map: PairMap
    conjugate: Tableau
    m_diagram: MDiagram
    full_web: Web
    web: Web


def build_pipeline(T: Tableau, s: str) -> Pipeline:
    s = SignString(s)
    standard, pm = standardize(T, s)
    conj = conjugate(standard)
    m = build_m_diagram(conj)
    full = web_from_m_diagram(m)
    return Pipeline(T, s, standard, pm, conj, m, full, contract_minus_pairs(full, pm, s))


def tableau_to_web(T: Tableau, s: str) -> Web:
    return build_pipeline(T, s).web


@dataclass
class VerificationReport:
    sign: str
    filling_count: int = 0
    web_count: int = 0
    round_trip_failures: list[str] = field(default_factory=list)
    distinctness_collisions: list[str] = field(default_factory=list)
    ellipticity_violations: list[str] = field(default_factory=list)
    validation_failures: list[str] = field(default_factory=list)
    tau_failures: list[str] = field(default_factory=list)
    rotation_mismatches: list[str] = field(default_factory=list)
    lemma_failures: list[str] = field(default_factory=list)
    join_mismatches: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    kind: str = "bijection"
    codes: dict[str, str] = field(default_factory=dict, repr=False)

    FAILURE_FIELDS = (
        "round_trip_failures", "distinctness_collisions", "ellipticity_violations",
        "validation_failures", "tau_failures", "rotation_mismatches", "lemma_failures",
        "join_mismatches", "errors",
    )

    @property
    def success(self) -> bool:
        return self.filling_count == self.web_count and not any(
            getattr(self, f) for f in self.FAILURE_FIELDS)

    def merge(self, other: VerificationReport) -> VerificationReport:
        out = VerificationReport(self.sign, kind=self.kind)
        out.filling_count = self.filling_count + other.filling_count
        for name in self.FAILURE_FIELDS:
            setattr(out, name, getattr(self, name) + getattr(other, name))
        out.codes = dict(self.codes)
        for code, t in other.codes.items():
            if code in out.codes:
                out.distinctness_collisions.append(f"{out.codes[code]} and {t}")
            else:
                out.codes[code] = t
        out.web_count = len(out.codes) if out.kind == "bijection" else self.web_count + other.web_count
        out.elapsed = self.elapsed + other.elapsed
        return out

    def to_json(self) -> dict:
        data = {k: v for k, v in asdict(self).items() if k != "codes"}
        data["success"] = self.success
        return data

    def table(self) -> str:
        rows = [("check", self.kind), ("sign", self.sign or "(empty)"),
                ("fillings", str(self.filling_count)), ("webs", str(self.web_count))]
        for name in self.FAILURE_FIELDS:
            rows.append((name.replace("_", " "), str(len(getattr(self, name)))))
        rows += [("elapsed", f"{self.elapsed:.3f}s"), ("result", "PASS" if self.success else "FAIL")]
        width = max(len(a) for a, _ in rows)
        lines = [f"{a.ljust(width)}  {b}" for a, b in rows]
        for name in self.FAILURE_FIELDS:
            for item in getattr(self, name)[:10]:
                lines.append(f"  {name}: {item}")
        return "\n".join(lines)


def _check_filling(T: Tableau, s: SignString, report: VerificationReport) -> None:
    report.filling_count += 1
    try:
        p = build_pipeline(T, s)
    except Sl3WebsError as exc:
        report.errors.append(f"{T}: {exc}")
        if exc.code == "PairNotCoincident":
            report.tau_failures.append(f"{T}: {exc}")
        return
    w = p.web
    code = canonical_code(w)
    if code in report.codes:
        report.distinctness_collisions.append(f"{report.codes[code]} and {T}")
    else:
        report.codes[code] = str(T)
    report.web_count = len(report.codes)
    problems = validate_web(w) + validate_web(p.full_web)
    if problems:
        report.validation_failures.append(f"{T}: " + "; ".join(map(str, problems)))
    bad = is_non_elliptic(w) + is_non_elliptic(p.full_web)
    if bad:
        report.ellipticity_violations.append(f"{T}: " + ", ".join(map(str, bad)))
    if str(w.signs) != str(s):
        report.round_trip_failures.append(f"{T}: boundary {w.signs} != {s}")
    try:
        back = web_to_tableau(w)
    except Sl3WebsError as exc:
        report.round_trip_failures.append(f"{T}: inverse failed: {exc}")
    else:
        if back != T:
            report.round_trip_failures.append(f"{T} -> {back}")
    for a, b in tau_pair_failures(p.conjugate, p.full_web):
        report.tau_failures.append(f"{T}: pair ({a},{b}) not at a common vertex")


def tau_pair_failures(standard: Tableau, w: Web) -> list[tuple[int, int]]:
    """τ-pairs of a standard tableau whose boundary vertices do not share a neighbour."""
    return [(a, b) for a, b in sorted(tau_set(standard))
            if w.head(w.boundary_dart(a)) != w.head(w.boundary_dart(b))]


def _sign_chunk(args) -> VerificationReport:
    s, tableaux = args
    report = VerificationReport(s)
    for t in tableaux:
        _check_filling(Tableau.parse(t), SignString(s), report)
    return report


def _chunks(it, size):
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def verify_sign(s: str, workers: int = 1, chunk_size: int = 64) -> VerificationReport:
    """Check the bijection on every filling of content ``s``."""
    s = SignString(s)
    start = time.perf_counter()
    fillings = enumerate_fillings(s)
    if workers <= 1:
        report = VerificationReport(str(s))
        for T in fillings:
            _check_filling(T, s, report)
    else:
        jobs = [(str(s), [str(T) for T in c]) for c in _chunks(fillings, chunk_size)]
        report = VerificationReport(str(s))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_sign_chunk, jobs):
                report = report.merge(part)
    report.elapsed = time.perf_counter() - start
    return report


def promotion_lemma_holds(T: Tableau, s: str) -> bool:
    """Standardize-and-conjugate commutes with promotion, applied twice when
    the first sign is a minus."""
    s = SignString(s)
    after = conjugate(standardize(jdt_promote(T), s.rotated())[0])
    before = conjugate(standardize(T, s)[0])
    steps = 2 if s[0] == "-" else 1
    for _ in range(steps):
        before = jdt_promote(before)
    return after == before


def verify_rotation(s: str) -> VerificationReport:
    s = SignString(s)
    start = time.perf_counter()
    report = VerificationReport(str(s), kind="rotation")
    for T in enumerate_fillings(s):
        report.filling_count += 1
        try:
            w = tableau_to_web(T, s)
            P = jdt_promote(T)
            rotated, promoted = rotate(w), tableau_to_web(P, s.rotated())
            report.web_count += 1
            if canonical_code(rotated) != canonical_code(promoted):
                report.rotation_mismatches.append(f"{T}: rotate(w) != w({P})")
            if not promotion_lemma_holds(T, s):
                report.lemma_failures.append(f"{T}")
        except Sl3WebsError as exc:
            report.errors.append(f"{T}: {exc}")
    report.elapsed = time.perf_counter() - start
    return report


def verify_join(s: str, t: str, i: int) -> VerificationReport:
    s, t = SignString(s), SignString(t)
    if not 0 <= i <= len(s):
        raise IndexOutOfRange(f"join index {i} outside 0..{len(s)}")
    start = time.perf_counter()
    report = VerificationReport(f"{s}|{t}@{i}", kind="join")
    target = shuffled_sign(s, t, i)
    inner = [(Tp, tableau_to_web(Tp, t)) for Tp in enumerate_fillings(t)]
    for T in enumerate_fillings(s):
        w = tableau_to_web(T, s)
        for Tp, wp in inner:
            report.filling_count += 1
            try:
                joined = join(w, wp, i)
                mixed = shuffle(Tp, T, i)
                report.web_count += 1
                if canonical_code(joined) != canonical_code(tableau_to_web(mixed, target)):
                    report.join_mismatches.append(f"{Tp} into {T} at {i}")
            except Sl3WebsError as exc:
                report.errors.append(f"{Tp} into {T} at {i}: {exc}")
    report.elapsed = time.perf_counter() - start
    return report


def report_json(report: VerificationReport) -> str:
    return json.dumps(report.to_json(), indent=2)


@dataclass(frozen=True)
class SweepConfig:
    """Which sign strings an exhaustive sweep covers."""

    max_weight: int = 12
    rotation_weight: int = 9
    workers: int = 1
    checks: tuple[str, ...] = ("bijection", "rotation")


def sweep(config: SweepConfig = SweepConfig()) -> dict[str, list[VerificationReport]]:
    out: dict[str, list[VerificationReport]] = {k: [] for k in config.checks}
    for weight in range(0, config.max_weight + 1, 3):
        for s in sign_strings(weight):
            if "bijection" in out:
                out["bijection"].append(verify_sign(s, workers=config.workers))
            if "rotation" in out and s and weight <= config.rotation_weight:
                out["rotation"].append(verify_rotation(s))
    return out
