"""The hook polyhedron H = {u : Atilde u <= btilde} and what is checked on it.

Everything here is exact: integers and :class:`fractions.Fraction`, never
floats.
"""

from __future__ import annotations

import itertools
import json
import numbers
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import CapExceededError, ContractError, DimensionError, NotHookError
from .exact import bareiss_det, solve_square
from .partitions import Partition, as_partition, col_prefix_sums, is_hook, row_prefix_sums, size
from .polynomials import _compositions, schur_classical, schur_super_tableau
from .reports import VerificationReport
from .tableaux import satisfies_hook

__all__ = [
    "HookSystem",
    "LatticePointSet",
    "build_system",
    "membership",
    "enumerate_lattice",
    "enumerate_vertices",
    "hook_set",
    "verify_snp",
    "rado_check",
    "maximize_linear",
    "DEFAULT_VERTEX_CAP",
]

DEFAULT_VERTEX_CAP = 6

Point = tuple[int, ...]


@dataclass(frozen=True)
class HookSystem:
    """Rows of ``atilde``: the k+l initial-segment rows ``A``, then ``e``, ``-e``, ``-I_d``."""

    k: int
    l: int
    shape: Partition
    a: tuple[tuple[int, ...], ...]
    atilde: tuple[tuple[int, ...], ...]
    btilde: tuple[int, ...]

    @property
    def d(self) -> int:
        return self.k + self.l

    @property
    def row_bounds(self) -> tuple[int, ...]:
        return self.btilde[: self.k]

    @property
    def col_bounds(self) -> tuple[int, ...]:
        return self.btilde[self.k : self.k + self.l]

    @property
    def total(self) -> int:
        return self.btilde[self.k + self.l]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "Atilde": [list(r) for r in self.atilde],
            "btilde": list(self.btilde),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class LatticePointSet:
    d: int
    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(sorted(set(tuple(int(x) for x in p) for p in self.points)))
        if any(len(p) != self.d or min(p, default=0) < 0 for p in pts):
            raise ValueError("lattice points must be nonnegative vectors of length d")
        object.__setattr__(self, "points", pts)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: object) -> bool:
        return tuple(p) in set(self.points)  # type: ignore[arg-type]

    def as_set(self) -> frozenset[Point]:
        return frozenset(self.points)

    def to_json(self) -> str:
        return json.dumps([list(p) for p in self.points])


def build_system(lam: Sequence[int], k: int, l: int) -> HookSystem:
    lam = as_partition(lam)
    if not is_hook(lam, k, l):
        raise NotHookError(lam, k, l)
    d = k + l
    a_rows = [tuple(1 if c < r else 0 for c in range(d)) for r in range(1, k + 1)]
    a_rows += [tuple(1 if k <= c < k + s else 0 for c in range(d)) for s in range(1, l + 1)]
    e = (1,) * d
    neg_e = (-1,) * d
    neg_id = [tuple(-1 if c == i else 0 for c in range(d)) for i in range(d)]
    atilde = tuple(a_rows) + (e, neg_e) + tuple(neg_id)
    n = size(lam)
    btilde = row_prefix_sums(lam, k) + col_prefix_sums(lam, l) + (n, -n) + (0,) * d
    return HookSystem(k, l, lam, tuple(a_rows), atilde, btilde)


def _as_rational(v: object) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise TypeError(f"expected an exact rational, got {v!r}")
    if isinstance(v, (numbers.Rational, str)):
        return Fraction(v)  # type: ignore[arg-type]
    raise TypeError(f"expected an exact rational, got {v!r}")


def _satisfies(system: HookSystem, u: Sequence[Fraction | int]) -> bool:
    return all(sum(c * x for c, x in zip(row, u)) <= b for row, b in zip(system.atilde, system.btilde))


def membership(system: HookSystem, u: Sequence[object]) -> bool:
    """Exact test of ``Atilde u <= btilde``; entries may be ints, Fractions or ``"p/q"`` strings."""
    if len(u) != system.d:
        raise DimensionError(f"point has length {len(u)}, expected {system.d}")
    return _satisfies(system, [_as_rational(x) for x in u])


def enumerate_lattice(system: HookSystem) -> LatticePointSet:
    """Integer points of H by depth-first search over the coordinates.

    Each coordinate is bounded by its prefix-sum slack and by what is left
    of the total; a branch is cut when the remaining coordinates cannot
    absorb the rest of the total.
    """
    k, l, d, n = system.k, system.l, system.d, system.total
    lrow, lcol = system.row_bounds, system.col_bounds
    cap_a = lrow[-1] if k else 0
    cap_b = lcol[-1] if l else 0
    out: list[Point] = []
    cur = [0] * d

    def rec(pos: int, used: int, prefix: int) -> None:
        if pos == d:
            if used == n:
                out.append(tuple(cur))
            return
        rest = n - used
        if pos < k:
            hi = min(lrow[pos] - prefix, rest)
            for x in range(hi, -1, -1):
                new_prefix = prefix + x
                # later a's absorb at most cap_a - new_prefix, all b's at most cap_b
                if rest - x > (cap_a - new_prefix) + cap_b:
                    break
                cur[pos] = x
                rec(pos + 1, used + x, new_prefix if pos + 1 < k else 0)
        else:
            hi = min(lcol[pos - k] - prefix, rest)
            for x in range(hi, -1, -1):
                new_prefix = prefix + x
                if rest - x > cap_b - new_prefix:
                    break
                cur[pos] = x
                rec(pos + 1, used + x, new_prefix)
        cur[pos] = 0

    if n >= 0:
        rec(0, 0, 0)
    return LatticePointSet(d, tuple(p for p in out if _satisfies(system, p)))


def _equality_pairs(system: HookSystem) -> list[int]:
    """Indices of rows r with a partner row equal to ``-(row r, b_r)``: implicit equalities."""
    seen = {}
    reps = []
    for idx, (row, b) in enumerate(zip(system.atilde, system.btilde)):
        neg = (tuple(-v for v in row), -b)
        if neg in seen:
            reps.append(seen[neg])
        seen.setdefault((row, b), idx)
    return reps


def enumerate_vertices(system: HookSystem, cap: int = DEFAULT_VERTEX_CAP) -> frozenset[tuple[Fraction, ...]]:
    """Exact vertex set of H from all nonsingular d-row subsystems.

    Rows that pair up into an equality are tight at every point, so every
    vertex has a basis containing one row of each such pair; only those
    subsets are solved.
    """
    d = system.d
    if d > cap:
        raise CapExceededError(f"vertex enumeration in dimension {d} exceeds cap {cap}")
    if d == 0:
        return frozenset({()}) if all(b >= 0 for b in system.btilde) else frozenset()
    rows = system.atilde
    forced: list[int] = []
    for r in _equality_pairs(system):
        if _independent([rows[i] for i in forced + [r]]):
            forced.append(r)
    partners = {i for i, row in enumerate(rows) for f in forced if row == tuple(-v for v in rows[f])}
    free = [i for i in range(len(rows)) if i not in forced and i not in partners]
    vertices = set()
    for extra in itertools.combinations(free, d - len(forced)):
        idx = forced + list(extra)
        sol = solve_square([rows[i] for i in idx], [system.btilde[i] for i in idx])
        if sol is not None and _satisfies(system, sol):
            vertices.add(sol)
    return frozenset(vertices)


def _independent(vectors: Sequence[Sequence[int]]) -> bool:
    """Linear independence via a nonzero Gram determinant."""
    gram = [[sum(a * b for a, b in zip(u, v)) for v in vectors] for u in vectors]
    return bareiss_det(gram) != 0


def sorted_vertices(vertices: frozenset[tuple[Fraction, ...]]) -> list[tuple[Fraction, ...]]:
    return sorted(vertices)


def hook_set(lam: Sequence[int], k: int, l: int) -> frozenset[Point]:
    """B_lambda from the hook predicate over all nonnegative vectors of total |lam|."""
    lam = as_partition(lam)
    return frozenset(c for c in _compositions(size(lam), k + l) if satisfies_hook(c, lam, k, l))


def _first(points) -> list | None:
    return list(min(points)) if points else None


def verify_snp(lam: Sequence[int], k: int, l: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> VerificationReport:
    """Run the hook-polyhedron certificate chain for saturation of S_lambda.

    Checks, each with a witnessing point on failure:

    * ``supp_eq_B``: support of the tableau polynomial equals the hook set;
    * ``B_eq_lattice``: the hook set equals the DFS lattice points of H;
    * ``vertices_integral`` and ``vertices_in_supp``: every vertex of H is a
      lattice point and an exponent of S_lambda;
    * ``supp_in_H``: every exponent satisfies Atilde u <= btilde.

    When all pass, Supp is contained in H and H's vertices lie in Supp, so
    Conv(Supp) = H and Supp = H ∩ Z^d is saturated.
    """
    start = time.perf_counter()
    lam = as_partition(lam)
    system = build_system(lam, k, l)
    poly = schur_super_tableau(lam, k, l)
    supp = poly.support()
    hook = hook_set(lam, k, l)
    lattice = enumerate_lattice(system).as_set()
    vertices = enumerate_vertices(system, vertex_cap)

    report = VerificationReport(
        kind="snp",
        params={"shape": list(lam), "k": k, "l": l},
        checks={
            "supp_eq_B": True,
            "B_eq_lattice": True,
            "vertices_integral": True,
            "vertices_in_supp": True,
            "supp_in_H": True,
        },
        counts={
            "supp": len(supp),
            "B": len(hook),
            "lattice": len(lattice),
            "vertices": len(vertices),
            "tableaux": sum(c for _, c in poly.items()),
        },
    )
    if supp != hook:
        report.fail("supp_eq_B", _first(supp ^ hook))
    if hook != lattice:
        report.fail("B_eq_lattice", _first(hook ^ lattice))
    fractional = [v for v in vertices if any(x.denominator != 1 for x in v)]
    if fractional:
        report.fail("vertices_integral", [str(x) for x in min(fractional)])
    outside = {tuple(int(x) for x in v) for v in vertices if v not in fractional} - supp
    if fractional or outside:
        witness = _first(outside) if outside else [str(x) for x in min(fractional)]
        report.fail("vertices_in_supp", witness)
    not_in_h = [p for p in supp if not _satisfies(system, p)]
    if not_in_h:
        report.fail("supp_in_H", _first(not_in_h))
    report.seconds = time.perf_counter() - start
    return report


def rado_check(mu: Sequence[int], k: int) -> VerificationReport:
    """Classical specialisation: Supp(s_mu) against the l = 0 hook system."""
    start = time.perf_counter()
    mu = as_partition(mu)
    if k < len(mu):
        raise ContractError(f"need k >= len(mu) = {len(mu)}, got k = {k}")
    supp = schur_classical(mu, k).support()
    system = build_system(mu, k, 0)
    lattice = enumerate_lattice(system).as_set()
    predicate = hook_set(mu, k, 0)
    report = VerificationReport(
        kind="rado",
        params={"shape": list(mu), "k": k},
        checks={"supp_eq_B": True, "B_eq_lattice": True},
        counts={"supp": len(supp), "B": len(predicate), "lattice": len(lattice)},
    )
    if supp != predicate:
        report.fail("supp_eq_B", _first(supp ^ predicate))
    if predicate != lattice:
        report.fail("B_eq_lattice", _first(predicate ^ lattice))
    report.seconds = time.perf_counter() - start
    return report


def maximize_linear(system: HookSystem, c: Sequence[int]) -> tuple[Point, int]:
    """Maximise ``c . u`` over the lattice points of H; ties go to the smallest point."""
    if len(c) != system.d:
        raise DimensionError(f"objective has length {len(c)}, expected {system.d}")
    c = [int(x) for x in c]
    best: tuple[Point, int] | None = None
    for p in enumerate_lattice(system):
        val = sum(a * b for a, b in zip(c, p))
        if best is None or val > best[1]:
            best = (p, val)
    if best is None:
        raise ContractError("H has no lattice points")
    return best
