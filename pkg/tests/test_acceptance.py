"""Acceptance criteria 1-13, each at its stated bound and time budget.

Every test prints one ``criterion N PASS|FAIL`` line; the lines are also
repeated in the pytest terminal summary.
"""
import subprocess
import sys
import time

import pytest

from skewtca import brauer, koszul, periplectic, phi, schur, tca
from skewtca.partition import Partition, partitions

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, elapsed: float, budget: float, note: str = "") -> None:
    within = elapsed <= budget
    status = "PASS" if ok and within else "FAIL"
    line = f"criterion {number:2} {status}  {title}  ({elapsed:.1f}s of {budget:.0f}s)"
    if note:
        line += f"  {note}"
    if not within:
        line += "  over time budget"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert within, line


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_criterion_01_q1_decomposition():
    with Timer() as t:
        r = schur.q1_support_scan(max_size=12, ranks=range(2, 7))
    record(1, "exterior powers of Sym^2 are multiplicity-free over Q1", r.passed, t.elapsed, 120,
           f"{r.details['cases']} cases")


def test_criterion_02_top_y_component():
    with Timer() as t:
        reports = [tca.verify_pn_top(n) for n in range(1, 5)]
    ok = all(r.passed and r.details["dimension"] == 1 for r in reports)
    record(2, "top y-only component is spanned by y(n), n <= 4", ok, t.elapsed, 10)


def test_criterion_03_unit_ideal():
    with Timer() as t:
        reports = [tca.unit_ideal_report(n) for n in range(1, 4)]
    residues = {r.params["n"]: str(r.details["residue"]) for r in reports}
    ok = all(r.passed and r.details["residue"] != 0 for r in reports)
    record(3, "constructed element has nonzero residue, n <= 3", ok, t.elapsed, 120,
           f"residues {residues}")


def test_criterion_04_highest_weight_vectors():
    with Timer() as t:
        cases = [(n, lam) for n in (1, 2) for m in range(4) for lam in partitions(m) if len(lam) <= n]
        reports = [tca.hwv_check(tca.RankContext(n), lam) for n, lam in cases]
    bad = [(r.params["n"], str(r.params["lambda"])) for r in reports if not r.passed]
    record(4, "y-product times x-minor is a highest weight vector of the right weight", not bad, t.elapsed, 60,
           f"{len(reports)} cases" + (f", failing {bad}" if bad else ""))


def test_criterion_05_borel_decomposition():
    with Timer() as t:
        reports = [periplectic.iwasawa_check(n) for n in range(1, 7)]
    ok = all(r.passed and r.details["dim_sum"] == 4 * n * n and r.details["dim_intersection"] == n
             for n, r in zip(range(1, 7), reports))
    record(5, "dim(b + pe) = 4n^2 and dim(b ∩ pe) = n, n <= 6", ok, t.elapsed, 5)


def test_criterion_06_rectangle_lr():
    with Timer() as t:
        reports = [schur.rect_lr_scan(n, k) for n in range(1, 5) for k in range(1, 5)]
    record(6, "rectangle LR coefficients are complement indicators, n,k <= 4",
           all(r.passed for r in reports), t.elapsed, 120)


def test_criterion_07_signed_brauer_category():
    with Timer() as t:
        sign = brauer.sign_relation_check(6)
        assoc = brauer.associativity_check(6)
        functor = brauer.functor_check(n=2, max_size=6, trials=200, seed=0, exhaustive_size=4)
    ok = sign.passed and assoc.passed and functor.passed
    record(7, "sign relation, associativity |L| <= 6, functoriality", ok, t.elapsed, 180,
           f"{assoc.details['triples']} triples, {functor.details['exhaustive_cases']} exhaustive rank-1 cases")


def test_criterion_08_leading_terms():
    with Timer() as t:
        table_bad = [w for n in (1, 2, 3) for w in phi.leading_term_table_check(phi.BbarContext(n))]
        scans = [phi.injectivity_scan(2, 4), phi.injectivity_scan(3, 3)]
    ok = not table_bad and all(r.passed for r in scans)
    record(8, "generator leading terms and distinct leading terms of monomials", ok, t.elapsed, 180,
           f"{sum(r.details['monomials'] for r in scans)} monomials scanned")


def test_criterion_09_localization_identities():
    with Timer() as t:
        reports = [phi.localization_identities_check(n) for n in (1, 2, 3)]
    record(9, "cleared-denominator identities, n <= 3", all(r.passed for r in reports), t.elapsed, 30,
           f"{sum(r.details['identities'] for r in reports)} identities")


def test_criterion_10_extension_contraction():
    with Timer() as t:
        reports = [phi.extension_contraction_check(n, 6) for n in (1, 2)]
    record(10, "kernel of the composite to the point equals the maximal ideal, degree <= 6",
           all(r.passed for r in reports), t.elapsed, 120)


def test_criterion_11_ext_counts():
    with Timer() as t:
        r = koszul.remark_report(6)
    lines = {line["check"]: line for line in r.details["lines"]}
    pieri = all(lines[f"Pieri S(1^{d}) x S(2)"]["ok"] for d in range(1, 7))
    sym2 = lines["Sym2(Sym2) = S(4) + S(2,2)"]["ok"]
    count = lines["degree 2 at the empty partition: 2 simples vs 4 simples"]
    wedge2 = next(line for name, line in lines.items() if name.startswith("Wedge2(Sym2)"))
    flagged = wedge2["ok"] or (wedge2["computed"] == "S(3,1)" and wedge2["check"] in r.details["discrepancies"])
    ok = r.status != "fail" and pieri and sym2 and count["ok"] and flagged
    record(11, "Ext counting claims reproduced, exterior-square discrepancy flagged", ok, t.elapsed, 60,
           f"status {r.status}, Wedge2(Sym2) computed {wedge2['computed']}")


def test_criterion_12_dimension_consistency():
    with Timer() as t:
        r = tca.dimension_scan(max_size=10, ranks=range(1, 5))
    record(12, "binomial, monomial and Q1 Schur dimension counts agree", r.passed, t.elapsed, 30,
           f"{r.details['cases']} cases")


def test_criterion_13_determinism():
    cmd = [sys.executable, "-m", "skewtca", "verify-all", "--profile", "quick", "--seed", "0",
           "--format", "json"]
    with Timer() as t:
        first = subprocess.run(cmd, capture_output=True)
        second = subprocess.run(cmd, capture_output=True)
    ok = first.returncode == second.returncode == 0 and first.stdout == second.stdout and first.stdout
    record(13, "two quick verify-all runs give byte-identical JSON", bool(ok), t.elapsed, 120,
           f"{len(first.stdout)} bytes")
