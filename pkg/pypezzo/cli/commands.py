import logging
import random
from fractions import Fraction
from pypezzo.cli.config import settings as config_settings
from pypezzo.forms.quartic import KLEIN_QUARTIC, loadForm
from pypezzo.poisson.check import poissonCheck
from pypezzo.sieve import budget, count, detector, fit, mainsum, plan
from pypezzo.sums import scan
from pypezzo.utils.errors import budgetExceeded, configError, pezzoError
from pypezzo.utils.helpers import defaultWorkers, phaseTimer

logger = logging.getLogger(__name__)

settings = {
    "identityTolerance": 1e-9,
    "poissonTolerance": 1e-6,
    "trivialTolerance": 1e-8,
    "doublingTolerance": 1e-8,
    "detectorSamples": 100,
    "sweepHeader": ["B", "N", "sieve_rhs", "ratio", "seconds"],
    "charsumHeader": ["p", "x1", "x2", "x3", "re", "im", "ratio_to_p32"],
}


def _form(config):
    if config.form is None:
        return KLEIN_QUARTIC
    return loadForm(config.form)


def _workers(config):
    return config.workers or defaultWorkers()


def cmdCount(config):
    """
    N(B) on every B of the grid.

    :return tuple: (report, csv tables, passed)
    """
    if not config.grid:
        raise configError("B", "count needs --B or --B-grid")
    F = _form(config)
    reports = count.countGrid(F, config.grid, _workers(config))
    rows = [
        {"B": r.B, "N": r.exact_count, "seconds": round(r.wall_time["count"], 6)} for r in reports
    ]
    ordered = sorted(reports, key=lambda r: r.B)
    monotone = all(a.exact_count <= b.exact_count for a, b in zip(ordered, ordered[1:]))
    report = {
        "form": F.toJson(),
        "counts": [{"B": r.B, "N": r.exact_count} for r in reports],
        "checks": {"monotone": monotone},
    }
    return report, {None: (settings["sweepHeader"], rows)}, monotone


def _detectorOracle(sieve_plan, seed: int):
    rng = random.Random(seed)
    span = 10 ** 6
    for _ in range(settings["detectorSamples"]):
        n = rng.randrange(-span, span)
        if detector.detectorSum(n, sieve_plan) != detector.detectorDirect(n, sieve_plan):
            return False
    return True


def cmdSieve(config):
    """
    Sieve bound against the exact count for every B of the grid. Tiny plans also get the main sum
    and its four term split.
    """
    if not config.grid:
        raise configError("B", "sieve needs --B or --B-grid")
    F = _form(config)
    workers = _workers(config)
    cells = []
    rows = []
    passed = True
    for B in config.grid:
        timer = phaseTimer()
        with timer.phase("plan"):
            sieve_plan = plan.makePlan(B, config.eps, config.C, config.primes1, config.primes2, F)
        if not config.force:
            sieve_plan.require()
        with timer.phase("sieve"):
            rhs = detector.sieveRhs(F, sieve_plan, workers)
        with timer.phase("count"):
            exact = count.bruteCount(F, B, workers).exact_count
        ratio = rhs.total / exact if exact else None

        checks = {
            "squares_detected": rhs.squares_detected,
            "lower_bound": rhs.total >= rhs.lower_bound,
            "detector_factorization": _detectorOracle(sieve_plan, config.seed),
        }
        cell = {
            "plan": sieve_plan.toJson(),
            "sieve": rhs.toJson(),
            "exact_count": exact,
            "ratio": ratio,
        }
        try:
            with timer.phase("mainsum"):
                main, terms = mainsum.mainsumSplit(F, sieve_plan, workers=workers)
            cell["mainsum"] = main.toJson()
            cell["sharp_terms"] = terms.toJson()
            limit = settings["identityTolerance"] * max(abs(main.sharp), abs(terms.S1), 1.0)
            checks["partition"] = abs(main.sharp + main.flat - main.total) <= limit
            checks["sharp_identity"] = terms.identity_error <= settings["identityTolerance"]
            checks["sharp_factorized"] = abs(main.sharp - main.sharp_factorized) <= limit
            checks["diagonal_bound"] = main.diagonal <= main.diagonal_bound
        except budgetExceeded as e:
            logger.info("Skipping the main sum at B=%d: %s", B, e)
        cell["checks"] = checks
        cell["timing"] = dict(timer)
        cells.append(cell)
        passed &= all(checks.values())
        rows.append(
            {
                "B": B,
                "N": exact,
                "sieve_rhs": rhs.total,
                "ratio": ratio,
                "seconds": round(timer.total, 6),
            }
        )
    report = {"form": F.toJson(), "cells": cells}
    return report, {None: (settings["sweepHeader"], rows)}, passed


def cmdCharsum(config):
    """
    The character sum suites. Every suite writes its own table and contributes one summary.
    """
    F = _form(config)
    suites = {
        "oracle": lambda: scan.oracleGrid(F),
        "katz": lambda: scan.katzScan(F, samples=config.samples, seed=config.seed),
        "dual": lambda: scan.dualCollapse(F, samples=config.samples, seed=config.seed),
        "multiplicative": lambda: scan.multiplicativity(F, samples=config.samples, seed=config.seed),
        "prime-square": lambda: scan.primeSquare(),
    }
    summaries = []
    tables = {}
    passed = True
    for name in config.suites:
        try:
            rows, summary = suites[name]()
        except pezzoError as e:
            logger.error("Suite %s failed: %s", name, e)
            summary = {"suite": name, "passed": False, "error": str(e)}
            rows = []
        summaries.append(summary)
        header = settings["charsumHeader"] if name in ("oracle", "katz") else sorted(rows[0]) if rows else []
        tables[name] = (header, rows)
        passed &= summary["passed"]
    return {"form": F.toJson(), "suites": summaries}, tables, passed


def cmdPoisson(config):
    """
    The Poisson identity on every (q, q') pair and B of the matrix.
    """
    grid = config.grid or list(config_settings["poissonGrid"])
    if not config.pairs or not grid:
        raise configError("pairs", "the Poisson matrix is empty")
    F = _form(config)
    limit = settings["trivialTolerance"] if config.trivial else settings["poissonTolerance"]
    cells = []
    passed = True
    for q, q_prime in config.pairs:
        for B in grid:
            try:
                result = poissonCheck(
                    F, q, q_prime, B, truncation=config.truncation, tol=config.tol, trivial=config.trivial
                )
            except pezzoError as e:
                logger.error("Poisson cell q=%d q'=%d B=%d failed: %s", q, q_prime, B, e)
                cells.append({"q": q, "q_prime": q_prime, "B": B, "error": str(e), "passed": False})
                passed = False
                continue
            cell = result.toJson()
            cell["passed"] = result.rel_error <= limit and (
                result.doubling_change is None or result.doubling_change <= settings["doublingTolerance"]
            )
            passed &= cell["passed"]
            cells.append(cell)
    errors = [c["rel_error"] for c in cells if "rel_error" in c]
    report = {
        "form": F.toJson(),
        "cells": cells,
        "max_rel_error": max(errors) if errors else None,
        "trivial": config.trivial,
    }
    header = ["q", "q_prime", "B", "lhs", "rhs_re", "rhs_im", "rel_error", "truncation", "quadrature_tol"]
    return report, {None: (header, cells)}, passed


def cmdBudget(config):
    """
    The optimizer trace over P2 = B^b with P1 = P2^2, plus the terms at the optimal choice.
    """
    trace, argmin, best = budget.optimizeBudget()
    B = config.B or config_settings["budgetB"]
    P1 = B ** (0.6 - config.eps)
    choice = budget.termBudget(B, P1, P1 ** (0.5 + config.eps))
    exponents = budget.exponentBudget(Fraction(3, 5), Fraction(3, 10))
    checks = {
        "argmin": abs(argmin - Fraction(3, 10)) <= budget.settings["gridStep"],
        "t1_equals_t2": exponents[0] == exponents[1] == max(exponents),
        "exponent": max(exponents) == Fraction(21, 10),
    }
    report = {
        "argmin_b": float(argmin),
        "min_exponent": float(best),
        "choice": choice.toJson(),
        "exponents": [float(e) for e in exponents],
        "checks": checks,
    }
    header = ["b", "a", "e1", "e2", "e3", "e4", "max_exponent"]
    return report, {None: (header, trace)}, all(checks.values())


def cmdFit(config):
    """
    Growth exponent of N(B) over the grid.
    """
    F = _form(config)
    result = fit.exponentFit(F, config.grid, _workers(config))
    rows = [
        {"B": B, "N": N, "residual": r} for B, N, r in zip(result.grid, result.counts, result.residuals)
    ]
    report = {"form": F.toJson(), "fit": result.toJson()}
    return report, {None: (["B", "N", "residual"], rows)}, True


COMMANDS = {
    "count": cmdCount,
    "sieve": cmdSieve,
    "charsum": cmdCharsum,
    "poisson": cmdPoisson,
    "budget": cmdBudget,
    "fit": cmdFit,
}
