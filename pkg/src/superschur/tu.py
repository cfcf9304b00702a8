"""Total unimodularity: exhaustive minors, interval matrices and row-sign scaling."""

from __future__ import annotations

import itertools
import json
import time
from typing import Sequence

from .errors import CapExceededError
from .reports import CertReport

__all__ = [
    "IntMatrix",
    "as_matrix",
    "find_bad_minor",
    "is_totally_unimodular",
    "is_interval",
    "row_sign_normalize",
    "atilde_signs",
    "certify_atilde_tu",
    "certify_matrix",
    "load_matrix",
]

IntMatrix = tuple[tuple[int, ...], ...]

DEFAULT_TU_CAP = 8


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    mat = tuple(tuple(int(v) for v in row) for row in rows)
    if mat and any(len(row) != len(mat[0]) for row in mat):
        raise ValueError("ragged matrix")
    return mat


def load_matrix(text: str) -> IntMatrix:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("a matrix serializes as a JSON array of row arrays")
    if not all(isinstance(v, int) and not isinstance(v, bool) for r in data for v in r):
        raise ValueError("matrix entries must be integers")
    return as_matrix(data)


def _shape(m: IntMatrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def find_bad_minor(m: Sequence[Sequence[int]], cap: int = DEFAULT_TU_CAP) -> tuple[tuple[int, ...], tuple[int, ...], int] | None:
    """First square submatrix whose determinant lies outside {-1, 0, 1}.

    Returns ``(rows, cols, det)`` or ``None``.  Minors of order r are
    obtained from the stored nonzero minors of order r-1 by expansion along
    the last chosen column, so each one costs at most r multiplications.
    """
    m = as_matrix(m)
    p, q = _shape(m)
    if min(p, q) > cap:
        raise CapExceededError(f"exhaustive TU test of a {p}x{q} matrix exceeds cap {cap}")
    for i in range(p):
        for j in range(q):
            if m[i][j] not in (-1, 0, 1):
                return (i,), (j,), m[i][j]
    prev = {((i,), (j,)): m[i][j] for i in range(p) for j in range(q) if m[i][j]}
    for r in range(2, min(p, q) + 1):
        cur = {}
        for cols in itertools.combinations(range(q), r):
            head, last = cols[:-1], cols[-1]
            for rows in itertools.combinations(range(p), r):
                det = 0
                for pos, i in enumerate(rows):
                    entry = m[i][last]
                    if entry:
                        sub = prev.get((rows[:pos] + rows[pos + 1:], head), 0)
                        if sub:
                            det += (-1) ** (pos + r - 1) * entry * sub
                if det:
                    if det not in (-1, 1):
                        return rows, cols, det
                    cur[(rows, cols)] = det
        prev = cur
        if not prev:
            break
    return None


def is_totally_unimodular(m: Sequence[Sequence[int]], cap: int = DEFAULT_TU_CAP) -> bool:
    return find_bad_minor(m, cap) is None


def _rows_contiguous(m: IntMatrix, order: Sequence[int]) -> bool:
    for row in m:
        ones = [pos for pos, j in enumerate(order) if row[j] == 1]
        if ones and ones[-1] - ones[0] + 1 != len(ones):
            return False
    return True


def is_interval(m: Sequence[Sequence[int]], permute: bool = False) -> bool:
    """Ones of every row form one contiguous block in the given column order.

    With ``permute=True`` every column order is tried (at most 8 columns).
    """
    m = as_matrix(m)
    _, q = _shape(m)
    if any(v not in (0, 1) for row in m for v in row):
        raise ValueError("interval test needs a 0/1 matrix")
    if _rows_contiguous(m, range(q)):
        return True
    if not permute:
        return False
    if q > 8:
        raise CapExceededError("column permutation search is limited to 8 columns")
    return any(_rows_contiguous(m, order) for order in itertools.permutations(range(q)))


def row_sign_normalize(m: Sequence[Sequence[int]], signs: Sequence[int]) -> IntMatrix:
    """The product diag(signs) @ m."""
    m = as_matrix(m)
    if len(signs) != len(m):
        raise ValueError(f"{len(signs)} signs for {len(m)} rows")
    if any(s not in (-1, 1) for s in signs):
        raise ValueError("signs must be +1 or -1")
    return tuple(tuple(s * v for v in row) for s, row in zip(signs, m))


def atilde_signs(k: int, l: int) -> tuple[int, ...]:
    """diag(I_{k+l}, 1, -1, -I_d) for the stacked hook system."""
    d = k + l
    return (1,) * (k + l) + (1, -1) + (-1,) * d


def certify_atilde_tu(lam: Sequence[int], k: int, l: int, cap: int = 6) -> CertReport:
    """Certify the stacked hook-system matrix is TU.

    Flipping the rows of ``-e`` and ``-I`` must leave a 0/1 interval matrix
    (TU by Heller-Tompkins); when ``d <= cap`` every minor is also checked
    directly.  ``checks["exhaustive"]`` is ``None`` when that was skipped.
    """
    from .polytopes import build_system

    start = time.perf_counter()
    system = build_system(lam, k, l)
    atilde = system.atilde
    normalized = row_sign_normalize(atilde, atilde_signs(k, l))
    zero_one = all(v in (0, 1) for row in normalized for v in row)
    report = CertReport(
        kind="tu",
        params={"shape": list(system.shape), "k": k, "l": l},
        checks={"normalized_zero_one": zero_one, "interval": None, "exhaustive": None},
        counts={"rows": len(atilde), "cols": system.d},
    )
    if zero_one:
        report.checks["interval"] = is_interval(normalized)
        if not report.checks["interval"]:
            report.fail("interval", None)
    else:
        report.fail("normalized_zero_one", None)
    if system.d > cap:
        report.skipped.append("exhaustive")
    else:
        bad = find_bad_minor(atilde, cap)
        report.checks["exhaustive"] = bad is None
        if bad is not None:
            report.fail("exhaustive", {"rows": list(bad[0]), "cols": list(bad[1]), "det": bad[2]})
    report.seconds = time.perf_counter() - start
    return report


def certify_matrix(m: Sequence[Sequence[int]], cap: int = DEFAULT_TU_CAP) -> CertReport:
    """Standalone exhaustive check of an arbitrary integer matrix.

    The column-order interval verdict is recorded in ``params`` for 0/1
    matrices; it is informational, since a non-interval matrix may still be TU.
    Past the cap the exhaustive check is skipped and listed in ``skipped``.
    """
    start = time.perf_counter()
    m = as_matrix(m)
    p, q = _shape(m)
    entries_ok = all(v in (-1, 0, 1) for row in m for v in row)
    report = CertReport(
        kind="tu-matrix",
        params={"rows": p, "cols": q, "interval": None},
        checks={"entries": entries_ok, "exhaustive": None},
        counts={"rows": p, "cols": q},
    )
    if not entries_ok:
        report.fail("entries", None)
    if all(v in (0, 1) for row in m for v in row):
        report.params["interval"] = is_interval(m)
    if min(p, q) > cap:
        report.skipped.append("exhaustive")
    else:
        bad = find_bad_minor(m, cap)
        report.checks["exhaustive"] = bad is None
        if bad is not None:
            report.fail("exhaustive", {"rows": list(bad[0]), "cols": list(bad[1]), "det": bad[2]})
    report.seconds = time.perf_counter() - start
    return report
