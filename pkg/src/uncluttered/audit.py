"""Exhaustive lemma audits over all small graphs up to isomorphism.

Each suite re-proves one structural statement empirically across every graph
whose size its cap allows, and any failure names the offending graph in
graph6 form.  Reports merge deterministically: the per-graph records are
folded in enumeration order no matter how many worker processes ran, and the
JSON form never contains timing, so equal inputs give byte-equal reports.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool

from .census import enumerate_graphs
from .chromatic import chromatic_number_exact, color_uncluttered, is_proper_coloring
from .decompose import ALL_CASES, classify, verify_certificate
from .errors import InputError, TheoremViolationError
from .graph import Graph, is_clique, is_dominating
from .graphio import from_graph6, to_graph6
from .modular import find_adjacent_simplicial_twins, find_nontrivial_homogeneous_set
from .patterns import _codes, _subset_code, has_induced, is_uncluttered
from .structure import detect_candled, is_line_graph_of_bipartite, recognize_line_graph_triangle_free

SUITE_CAPS = {
    "main-theorem": 8,
    "chi-bound": 8,
    "diamond": 7,
    "mixed-triangle": 7,
    "claw-anticlaw": 8,
    "no-homog": 7,
    "prime-linegraph": 7,
}
SUITE_NAMES = tuple(SUITE_CAPS)
HISTOGRAM_CASES = ALL_CASES + ("THEOREM_VIOLATION",)
MAX_STORED_FAILURES = 32


def _every_diamond_dominating(g: Graph) -> bool:
    table = _codes("diamond")
    for sub in combinations(range(g.n), 4):
        perm = table.get(_subset_code(g, sub))
        if perm is None:
            continue
        emb = tuple(sub[perm[i]] for i in range(4))
        if not is_dominating(g, emb):
            return False
        # The diamond's two triangles must be dominating as well.
        if not is_dominating(g, (emb[0], emb[1], emb[2])):
            return False
        if not is_dominating(g, (emb[1], emb[2], emb[3])):
            return False
    return True


def _every_triangle_dominating(g: Graph) -> bool:
    for sub in combinations(range(g.n), 3):
        if is_clique(g, sub) and not is_dominating(g, sub):
            return False
    return True


def _no_dominating_clique(g: Graph) -> bool:
    for size in range(1, g.n + 1):
        for sub in combinations(range(g.n), size):
            if is_clique(g, sub) and is_dominating(g, sub):
                return False
    return True


def _max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def audit_one(g6: str, suites: tuple[str, ...]) -> dict:
    """All selected suite checks for one graph; returns a mergeable record."""
    g = from_graph6(g6)
    n = g.n
    gc = g.complement()
    witness = is_uncluttered(g)
    uncl = witness is None
    record = {"n": n, "g6": g6, "uncluttered": uncl, "case": None,
              "checked": [], "fails": [], "ratio": None}

    prime = None

    def is_prime() -> bool:
        nonlocal prime
        if prime is None:
            prime = find_nontrivial_homogeneous_set(g) is None
        return prime

    if "main-theorem" in suites and n <= SUITE_CAPS["main-theorem"]:
        record["checked"].append("main-theorem")
        try:
            cert = classify(g)
            record["case"] = cert.case
            if not verify_certificate(g, cert):
                record["fails"].append("main-theorem")
        except TheoremViolationError:
            record["case"] = "THEOREM_VIOLATION"
            record["fails"].append("main-theorem")

    if "chi-bound" in suites and n <= SUITE_CAPS["chi-bound"] and uncl:
        record["checked"].append("chi-bound")
        coloring = color_uncluttered(g)
        omega = coloring.omega_used
        chi = chromatic_number_exact(g)
        ok = (is_proper_coloring(g, coloring.colors)
              and coloring.num_colors <= 2 * omega
              and chi <= 2 * omega)
        if not ok:
            record["fails"].append("chi-bound")
        record["ratio"] = (chi, omega)

    if "diamond" in suites and n <= SUITE_CAPS["diamond"] and uncl and is_prime():
        record["checked"].append("diamond")
        if not _every_diamond_dominating(g):
            record["fails"].append("diamond")

    if ("mixed-triangle" in suites and n <= SUITE_CAPS["mixed-triangle"]
            and uncl and is_prime() and not is_line_graph_of_bipartite(g)):
        record["checked"].append("mixed-triangle")
        if not (_every_triangle_dominating(g) or _no_dominating_clique(g)):
            record["fails"].append("mixed-triangle")

    if ("claw-anticlaw" in suites and n <= SUITE_CAPS["claw-anticlaw"]
            and not has_induced(g, "claw") and not has_induced(g, "anticlaw")):
        record["checked"].append("claw-anticlaw")
        ok = False
        for h in (g, gc):
            if _max_degree(h) <= 2:
                ok = True
                break
            if h.n <= 9 and is_line_graph_of_bipartite(h):
                ok = True
                break
        if not ok:
            record["fails"].append("claw-anticlaw")

    if ("no-homog" in suites and n <= SUITE_CAPS["no-homog"] and uncl
            and g.is_connected() and gc.is_connected()
            and find_adjacent_simplicial_twins(g) is None
            and find_adjacent_simplicial_twins(gc) is None
            and detect_candled(g, exhaustive=True) is None
            and detect_candled(gc, exhaustive=True) is None):
        record["checked"].append("no-homog")
        if not is_prime():
            record["fails"].append("no-homog")

    if ("prime-linegraph" in suites and n <= SUITE_CAPS["prime-linegraph"]
            and uncl and is_prime()):
        record["checked"].append("prime-linegraph")
        if (recognize_line_graph_triangle_free(g) is None
                and recognize_line_graph_triangle_free(gc) is None):
            record["fails"].append("prime-linegraph")

    return record


@dataclass
class AuditReport:
    n_max: int
    suites: tuple[str, ...]
    graphs_scanned: int = 0
    per_n: dict = field(default_factory=dict)
    uncluttered_count: int = 0
    case_histogram: dict = field(default_factory=dict)
    suite_results: dict = field(default_factory=dict)
    max_ratio: tuple[int, int] | None = None
    max_ratio_graph6: str | None = None
    wall_seconds: float = 0.0

    @property
    def failed(self) -> bool:
        return any(r["failed"] for r in self.suite_results.values())

    def to_json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "suites": list(self.suites),
            "graphs_scanned": self.graphs_scanned,
            "per_n": {str(k): self.per_n[k] for k in sorted(self.per_n)},
            "uncluttered_count": self.uncluttered_count,
            "case_histogram": {c: self.case_histogram.get(c, 0)
                               for c in HISTOGRAM_CASES},
            "suite_results": {name: self.suite_results[name]
                              for name in self.suites},
            "max_ratio": list(self.max_ratio) if self.max_ratio else None,
            "max_ratio_graph6": self.max_ratio_graph6,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    def to_text(self) -> str:
        lines = [f"audited {self.graphs_scanned} graphs "
                 f"({', '.join(f'n={k}: {v}' for k, v in sorted(self.per_n.items()))}), "
                 f"{self.uncluttered_count} uncluttered"]
        counted = {c: v for c, v in self.case_histogram.items() if v}
        if counted:
            lines.append("cases: " + ", ".join(f"{c} {v}" for c, v in counted.items()))
        for name in self.suites:
            r = self.suite_results[name]
            line = f"suite {name}: {r['checked']} checked, {r['failed']} failed"
            if r["failures"]:
                line += " [" + " ".join(r["failures"]) + "]"
            lines.append(line)
        if self.max_ratio:
            a, b = self.max_ratio
            lines.append(f"max chi/omega ratio: {a}/{b} = {a / b:.4f} "
                         f"on {self.max_ratio_graph6}")
        lines.append(f"wall time: {self.wall_seconds:.1f}s")
        return "\n".join(lines)


def audit(n_max: int, suites=None, jobs: int = 1, graphs=None,
          allow_large: bool = False) -> AuditReport:
    """Run the selected suites over all graphs with 1 <= n <= n_max.

    ``graphs`` (an iterable of graph6 strings) replaces the built-in
    enumeration when given; each graph is still gated by the per-suite size
    caps.  Raising n_max past 8 needs allow_large, and past the census cap is
    refused outright.
    """
    t0 = time.monotonic()
    if suites is None:
        suites = SUITE_NAMES
    suites = tuple(suites)
    for s in suites:
        if s not in SUITE_CAPS:
            raise InputError(f"unknown suite {s!r}; known: {', '.join(SUITE_NAMES)}")
    if graphs is None:
        if n_max < 1:
            raise InputError("audit needs n_max >= 1")
        if n_max > 8 and not allow_large:
            raise InputError("audit past n_max=8 needs allow_large")
        work = [to_graph6(g) for n in range(1, n_max + 1)
                for g in enumerate_graphs(n)]
    else:
        work = [line.strip() for line in graphs if line.strip()]
        for g6 in work:
            from_graph6(g6)
    report = AuditReport(n_max=n_max, suites=suites)
    report.case_histogram = {c: 0 for c in HISTOGRAM_CASES}
    report.suite_results = {s: {"checked": 0, "passed": 0, "failed": 0,
                                "failures": []} for s in suites}
    if jobs <= 1:
        _merge(report, (audit_one(g6, suites) for g6 in work))
    else:
        chunk = max(1, len(work) // (jobs * 8))
        with Pool(jobs) as pool:
            _merge(report, pool.imap(_Worker(suites), work, chunksize=chunk))
    report.wall_seconds = time.monotonic() - t0
    return report


def _merge(report: AuditReport, records) -> None:
    """Fold per-graph records into the report, in enumeration order."""
    best = None
    for rec in records:
        report.graphs_scanned += 1
        report.per_n[rec["n"]] = report.per_n.get(rec["n"], 0) + 1
        if rec["uncluttered"]:
            report.uncluttered_count += 1
        if rec["case"] is not None:
            report.case_histogram[rec["case"]] += 1
        for s in rec["checked"]:
            result = report.suite_results[s]
            result["checked"] += 1
            if s in rec["fails"]:
                result["failed"] += 1
                if len(result["failures"]) < MAX_STORED_FAILURES:
                    result["failures"].append(rec["g6"])
            else:
                result["passed"] += 1
        if rec["ratio"] is not None:
            chi, om = rec["ratio"]
            if best is None or chi * best[1] > best[0] * om:
                best = (chi, om)
                report.max_ratio_graph6 = rec["g6"]
    report.max_ratio = best


class _Worker:
    """Picklable callable binding the suite selection for pool workers."""

    def __init__(self, suites: tuple[str, ...]):
        self.suites = suites

    def __call__(self, g6: str) -> dict:
        return audit_one(g6, self.suites)
