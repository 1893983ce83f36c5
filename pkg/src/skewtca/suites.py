"""Named verification jobs and the quick/full profiles that schedule them."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from skewtca import brauer, koszul, periplectic, phi, schur, tca
from skewtca.partition import Partition, partitions
from skewtca.reports import Report

SCHEMA = 1

JOBS: dict[str, Callable[..., Report]] = {
    "q1": schur.q1_support_scan,
    "dimensions": tca.dimension_scan,
    "rect": schur.rect_lr_scan,
    "pn-top": tca.verify_pn_top,
    "unit-ideal": tca.unit_ideal_report,
    "hwv": lambda n, lam: tca.hwv_check(tca.RankContext(n), Partition.parse(lam)),
    "ess-bound": lambda lam, n0: tca.ess_bound_check(Partition.parse(lam), n0),
    "nzd": tca.nzd_check,
    "iwasawa": periplectic.iwasawa_check,
    "brauer-sign": brauer.sign_relation_check,
    "brauer-associativity": brauer.associativity_check,
    "brauer-functor": brauer.functor_check,
    "phi-inject": phi.injectivity_scan,
    "phi-t-invariance": phi.t_invariance_check,
    "phi-localize": phi.localization_identities_check,
    "phi-extend": phi.extension_contraction_check,
    "remark": koszul.remark_report,
}


def hwv_cases(max_rank: int, max_size: int) -> list[tuple[int, str]]:
    return [(n, str(lam)) for n in range(1, max_rank + 1) for m in range(max_size + 1)
            for lam in partitions(m) if len(lam) <= n]


def plan(profile: str, seed: int = 0) -> list[tuple[str, dict]]:
    """Jobs for a profile, in report order."""
    if profile == "quick":
        jobs = [("q1", {"max_size": 8, "ranks": [2, 3, 4]}),
                ("dimensions", {"max_size": 8, "ranks": [1, 2]})]
        jobs += [("rect", {"n": n, "k": k}) for n in (1, 2, 3) for k in (1, 2, 3)]
        jobs += [("pn-top", {"n": n}) for n in (1, 2)]
        jobs += [("unit-ideal", {"n": n}) for n in (1, 2)]
        jobs += [("hwv", {"n": n, "lam": lam}) for n, lam in hwv_cases(2, 3)]
        jobs += [("ess-bound", {"lam": lam, "n0": 1}) for lam in ("2", "3,1", "3,3")]
        jobs += [("nzd", {"n": 2, "degree_bound": 6, "seed": seed})]
        jobs += [("iwasawa", {"n": n}) for n in (1, 2)]
        jobs += [("brauer-sign", {"max_size": 6}),
                 ("brauer-associativity", {"max_size": 4}),
                 ("brauer-functor", {"n": 2, "max_size": 6, "trials": 100, "seed": seed})]
        jobs += [("phi-inject", {"n": 1, "degree_bound": 2}), ("phi-inject", {"n": 2, "degree_bound": 4})]
        jobs += [("phi-t-invariance", {"n": n}) for n in (1, 2)]
        jobs += [("phi-localize", {"n": n}) for n in (1, 2)]
        jobs += [("phi-extend", {"n": n, "degree_bound": 6}) for n in (1, 2)]
        jobs += [("remark", {"dmax": 4})]
        return jobs
    if profile == "full":
        jobs = [("q1", {"max_size": 12, "ranks": [2, 3, 4, 5, 6]}),
                ("dimensions", {"max_size": 10, "ranks": [1, 2, 3, 4]})]
        jobs += [("rect", {"n": n, "k": k}) for n in range(1, 5) for k in range(1, 5)]
        jobs += [("pn-top", {"n": n}) for n in range(1, 5)]
        jobs += [("unit-ideal", {"n": n}) for n in range(1, 4)]
        jobs += [("hwv", {"n": n, "lam": lam}) for n, lam in hwv_cases(2, 3)]
        jobs += [("ess-bound", {"lam": lam, "n0": n0})
                 for lam, n0 in (("2", 1), ("3,1", 1), ("4,1,1", 1), ("3,3", 1), ("4,3,1", 1),
                                 ("3,3", 2), ("4,3,1", 2))]
        jobs += [("nzd", {"n": n, "degree_bound": 6, "seed": seed}) for n in (1, 2)]
        jobs += [("iwasawa", {"n": n}) for n in range(1, 7)]
        jobs += [("brauer-sign", {"max_size": 6}),
                 ("brauer-associativity", {"max_size": 6}),
                 ("brauer-functor", {"n": 2, "max_size": 6, "trials": 200, "seed": seed})]
        jobs += [("phi-inject", {"n": 2, "degree_bound": 4}), ("phi-inject", {"n": 3, "degree_bound": 3})]
        jobs += [("phi-t-invariance", {"n": n}) for n in (1, 2, 3)]
        jobs += [("phi-localize", {"n": n}) for n in (1, 2, 3)]
        jobs += [("phi-extend", {"n": n, "degree_bound": 6}) for n in (1, 2)]
        jobs += [("remark", {"dmax": 6})]
        return jobs
    raise ValueError(f"unknown profile {profile!r}")


def run_job(job: tuple[str, dict]) -> tuple[Report, float]:
    name, kwargs = job
    start = time.perf_counter()
    report = JOBS[name](**kwargs)
    return report, time.perf_counter() - start


def workers() -> int:
    try:
        return max(1, int(os.environ.get("SKEWTCA_WORKERS", "1")))
    except ValueError:
        return 1


def run_plan(jobs: list[tuple[str, dict]], timing: bool = False) -> list[Report]:
    """Run jobs (in a process pool when ``SKEWTCA_WORKERS > 1``); results keep plan order."""
    count = workers()
    if count > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=count) as pool:
            results = list(pool.map(run_job, jobs))
    else:
        results = [run_job(j) for j in jobs]
    out = []
    for report, elapsed in results:
        report.timing = round(elapsed, 4) if timing else None
        out.append(report)
    return out


def document(reports: list[Report], **meta) -> dict:
    return {"schema": SCHEMA, **meta, "suites": [r.to_dict() for r in reports]}
