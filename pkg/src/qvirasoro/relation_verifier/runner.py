"""Run suites and write the newline-delimited JSON report."""

import json
import sys
from concurrent.futures import ProcessPoolExecutor

from ..report import CheckReport
from .suites import Context, execute, suite_checks

SPOT_CHECK_STRIDE = 10

_worker = {}


def _init_worker(cfg):
    _worker["cfg"] = cfg
    _worker["ctx"] = {}
    _worker["checks"] = {}


def _run_indexed(task):
    suite, idx, mode = task
    cfg = _worker["cfg"]
    checks = _worker["checks"].setdefault(suite, suite_checks(suite, cfg))
    ctx = _worker["ctx"].get(mode)
    if ctx is None:
        ctx = _worker["ctx"][mode] = Context(cfg, mode)
    return execute(checks[idx], ctx, cfg.timings)


def _tasks(cfg):
    tasks = []
    for suite in cfg.suites:
        n = len(suite_checks(suite, cfg))
        tasks.extend((suite, i, cfg.param_mode) for i in range(n))
        if cfg.param_mode == "sampled":
            tasks.extend((suite, i, "symbolic") for i in range(0, n, SPOT_CHECK_STRIDE))
    return tasks


def run_checks(cfg):
    """All reports in suite order, independent of worker scheduling.

    In sampled mode every tenth check of each suite is repeated over the
    symbolic domain and a spot-check report compares the two statuses.
    """
    tasks = _tasks(cfg)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs, initializer=_init_worker, initargs=(cfg,)) as pool:
            results = list(pool.map(_run_indexed, tasks, chunksize=1))
    else:
        _init_worker(cfg)
        results = [_run_indexed(t) for t in tasks]
    by_task = dict(zip(tasks, results))
    reports = []
    for suite in cfg.suites:
        n = len(suite_checks(suite, cfg))
        suite_reports = [by_task[(suite, i, cfg.param_mode)] for i in range(n)]
        reports.extend(suite_reports)
        if cfg.param_mode == "sampled":
            reports.append(_spot_check(suite, suite_reports, by_task, n))
    return reports


def _spot_check(suite, reports, by_task, n):
    checked = []
    witness = None
    for i in range(0, n, SPOT_CHECK_STRIDE):
        sym = by_task[(suite, i, "symbolic")]
        checked.append(reports[i].check)
        if sym.status != reports[i].status and witness is None:
            witness = {"check": reports[i].check, "sampled": reports[i].status,
                       "symbolic": sym.status}
    return CheckReport(suite, "symbolic-spot-check", "consistency.symbolic-vs-sampled",
                       {"checked": checked}, "pass" if witness is None else "fail", witness)


def summarize(cfg, reports):
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    failed = [f"{r.suite}:{r.check}" for r in reports if r.status != "pass"]
    return {
        "summary": {
            "config": cfg.describe(),
            "checks": len(reports),
            "counts": dict(sorted(counts.items())),
            "failed": failed,
            "ok": not failed,
        }
    }


def write_report(cfg, reports, stream=None):
    lines = [r.to_json(cfg.timings) for r in reports]
    lines.append(json.dumps(summarize(cfg, reports), separators=(",", ":")))
    text = "\n".join(lines) + "\n"
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        (stream or sys.stdout).write(text)
    return text


def run(cfg, stream=None):
    """Run the configured suites, write the report and return (exit code, reports)."""
    reports = run_checks(cfg)
    write_report(cfg, reports, stream)
    return (0 if all(r.passed for r in reports) else 1), reports
