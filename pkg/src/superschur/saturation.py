"""Direct saturation test of a support set, independent of the hook polyhedron.

For every lattice point of a candidate superset that is missing from the
support, decide whether it lies in the convex hull of the support.  Linear
programs (HiGHS through SciPy) only propose answers; each answer is then
certified exactly:

* inside: a convex combination with nonnegative rational weights that
  reproduces the point;
* outside: a rational vector ``c`` with ``c . (s - p) < 0`` for every
  support point ``s``.

A point for which neither certificate can be produced is reported as
uncertified rather than guessed.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linprog

from .exact import bareiss_det, solve_any
from .partitions import as_partition
from .polynomials import schur_super_tableau
from .polytopes import build_system, enumerate_lattice
from .reports import VerificationReport

__all__ = ["hull_contains", "saturation_gaps", "direct_saturation"]

_EPS = 1e-9


def _rank_grows(columns: list[Sequence[int]], col: Sequence[int]) -> bool:
    trial = columns + [col]
    gram = [[sum(a * b for a, b in zip(u, v)) for v in trial] for u in trial]
    return bareiss_det(gram) != 0


def _certify_inside(points: Sequence[Sequence[int]], p: Sequence[int], weights: np.ndarray) -> bool:
    lifted = [tuple(s) + (1,) for s in points]
    basis: list[int] = []
    for i in np.argsort(-weights):
        if weights[i] <= _EPS:
            break
        if _rank_grows([lifted[j] for j in basis], lifted[i]):
            basis.append(int(i))
    if not basis:
        return False
    a = [[lifted[j][r] for j in basis] for r in range(len(p) + 1)]
    sol = solve_any(a, list(p) + [1])
    if sol is None or any(w < 0 for w in sol):
        return False
    return all(sum(w * lifted[j][r] for w, j in zip(sol, basis)) == (list(p) + [1])[r] for r in range(len(p) + 1))


def _certify_outside(points: Sequence[Sequence[int]], p: Sequence[int]) -> bool:
    d = len(p)
    diffs = np.array([[s[i] - p[i] for i in range(d)] for s in points], dtype=float)
    res = linprog(
        np.zeros(d),
        A_ub=diffs,
        b_ub=-np.ones(len(points)),
        bounds=[(-1e4, 1e4)] * d,
        method="highs",
    )
    if res.status != 0:
        return False
    c = [Fraction(float(x)).limit_denominator(10**6) for x in res.x]
    return all(sum(ci * (s[i] - p[i]) for i, ci in enumerate(c)) < 0 for s in points)


def hull_contains(points: Sequence[Sequence[int]], p: Sequence[int]) -> bool | None:
    """Exactly certified answer to "is p in Conv(points)?", or ``None``."""
    points = [tuple(s) for s in points]
    if not points:
        return False
    d = len(p)
    if d == 0:
        return True
    m = len(points)
    a_eq = np.vstack([np.array(points, dtype=float).T, np.ones((1, m))])
    b_eq = np.array(list(p) + [1], dtype=float)
    res = linprog(np.zeros(m), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if res.status == 0:
        if _certify_inside(points, p, res.x):
            return True
        return False if _certify_outside(points, p) else None
    if _certify_outside(points, p):
        return False
    return None


def saturation_gaps(support: Iterable[Sequence[int]], candidates: Iterable[Sequence[int]]) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Candidates outside ``support`` that lie in its hull, and those left undecided."""
    supp = sorted({tuple(s) for s in support})
    supp_set = set(supp)
    gaps, undecided = [], []
    for p in sorted({tuple(c) for c in candidates} - supp_set):
        verdict = hull_contains(supp, p)
        if verdict is True:
            gaps.append(p)
        elif verdict is None:
            undecided.append(p)
    return gaps, undecided


def direct_saturation(lam: Sequence[int], k: int, l: int) -> VerificationReport:
    """Is Conv(Supp S_lambda) ∩ Z^d = Supp S_lambda?

    The lattice points of the hook polyhedron H are a valid candidate
    superset because H is convex and contains the support.
    """
    start = time.perf_counter()
    lam = as_partition(lam)
    supp = schur_super_tableau(lam, k, l).support()
    candidates = enumerate_lattice(build_system(lam, k, l)).as_set()
    gaps, undecided = saturation_gaps(supp, candidates)
    report = VerificationReport(
        kind="snp-direct",
        params={"shape": list(lam), "k": k, "l": l},
        checks={"saturated": not gaps and not undecided},
        counts={"supp": len(supp), "candidates": len(candidates - supp), "gaps": len(gaps), "undecided": len(undecided)},
    )
    if gaps:
        report.counterexample, report.counterexample_check = list(gaps[0]), "saturated"
    elif undecided:
        report.counterexample, report.counterexample_check = list(undecided[0]), "saturated"
    report.seconds = time.perf_counter() - start
    return report
