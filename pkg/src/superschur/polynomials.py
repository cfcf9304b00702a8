"""Exact sparse integer polynomials and the symmetric functions built on them.

Coordinates ``0 .. k-1`` are the x-variables and ``k .. k+l-1`` the
y-variables, everywhere in the package.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ContractError, DimensionError
from .partitions import Partition, as_partition, conjugate, contains, is_hook
from .tableaux import content_counts

__all__ = [
    "SparsePolynomial",
    "support",
    "h_complete",
    "e_elementary",
    "h_super",
    "schur_super_tableau",
    "schur_super_det",
    "schur_classical",
    "schur_skew",
    "check_expansion",
    "check_cancellation",
    "check_bisymmetry",
]

Exponent = tuple[int, ...]


class SparsePolynomial:
    """Map from exponent vectors of length ``dims`` to nonzero Python ints."""

    __slots__ = ("dims", "_terms")

    def __init__(self, dims: int, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        self.dims = int(dims)
        acc: dict[Exponent, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.dims:
                raise DimensionError(f"exponent {exp} does not have length {self.dims}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            acc[exp] += int(coef)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def zero(cls, dims: int) -> "SparsePolynomial":
        return cls(dims)

    @classmethod
    def one(cls, dims: int) -> "SparsePolynomial":
        return cls(dims, {(0,) * dims: 1})

    @classmethod
    def variable(cls, i: int, dims: int) -> "SparsePolynomial":
        exp = [0] * dims
        exp[i] = 1
        return cls(dims, {tuple(exp): 1})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._terms.items())

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "SparsePolynomial") -> None:
        if not isinstance(other, SparsePolynomial):
            raise TypeError(f"cannot combine SparsePolynomial with {type(other).__name__}")
        if other.dims != self.dims:
            raise DimensionError(f"dims {self.dims} and {other.dims} differ")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.dims == other.dims and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.dims, tuple(self._terms.items())))

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.dims, {e: -c for e, c in self._terms.items()})

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check(other)
        return SparsePolynomial(self.dims, itertools.chain(self._terms.items(), other._terms.items()))

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check(other)
        return self + (-other)

    def __mul__(self, other: "SparsePolynomial | int") -> "SparsePolynomial":
        if isinstance(other, int):
            return SparsePolynomial(self.dims, {e: c * other for e, c in self._terms.items()})
        self._check(other)
        acc: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return SparsePolynomial(self.dims, acc)

    __rmul__ = __mul__

    def embed(self, dims: int, offset: int = 0) -> "SparsePolynomial":
        """Place the variables at coordinates ``offset .. offset+self.dims-1`` of a larger ring."""
        if offset < 0 or offset + self.dims > dims:
            raise DimensionError(f"cannot embed {self.dims} variables at offset {offset} in {dims}")
        pad_left, pad_right = (0,) * offset, (0,) * (dims - offset - self.dims)
        return SparsePolynomial(dims, {pad_left + e + pad_right: c for e, c in self._terms.items()})

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.dims:
            raise DimensionError(f"point has length {len(point)}, expected {self.dims}")
        total = 0
        for exp, coef in self._terms.items():
            term = coef
            for v, e in zip(point, exp):
                term *= v**e
            total += term
        return total

    def format(self, k: int | None = None) -> str:
        """Human-readable form with ``x1..xk`` then ``y1..``; highest exponents first."""
        if k is None:
            k = self.dims
        if not self._terms:
            return "0"
        names = [f"x{i + 1}" for i in range(k)] + [f"y{j + 1}" for j in range(self.dims - k)]
        pieces = []
        for exp, coef in sorted(self._terms.items(), reverse=True):
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e)
            mag = abs(coef)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            pieces.append(("- " if coef < 0 else "+ ") + body)
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.dims}, {self.format()!r})"

    def to_dict(self) -> dict:
        return {
            "dims": self.dims,
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self._terms.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "SparsePolynomial":
        return cls(data["dims"], [(t["exp"], int(t["coef"])) for t in data["terms"]])

    @classmethod
    def from_json(cls, text: str) -> "SparsePolynomial":
        return cls.from_dict(json.loads(text))


def support(p: SparsePolynomial) -> frozenset[Exponent]:
    return p.support()


def _compositions(total: int, parts: int) -> Iterator[Exponent]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def h_complete(i: int, k: int) -> SparsePolynomial:
    """Complete homogeneous symmetric polynomial h_i(x1..xk)."""
    if i < 0:
        return SparsePolynomial.zero(k)
    return SparsePolynomial(k, {e: 1 for e in _compositions(i, k)})


def e_elementary(r: int, l: int) -> SparsePolynomial:
    """Elementary symmetric polynomial e_r(y1..yl)."""
    if r < 0 or r > l:
        return SparsePolynomial.zero(l)
    terms = {}
    for cols in itertools.combinations(range(l), r):
        exp = [0] * l
        for c in cols:
            exp[c] = 1
        terms[tuple(exp)] = 1
    return SparsePolynomial(l, terms)


@lru_cache(maxsize=None)
def h_super(r: int, k: int, l: int) -> SparsePolynomial:
    """H_r(x; y) = sum_i h_i(x) e_{r-i}(y) in k+l variables; zero for r < 0."""
    d = k + l
    if r < 0:
        return SparsePolynomial.zero(d)
    total = SparsePolynomial.zero(d)
    for i in range(r + 1):
        hx = h_complete(i, k)
        ey = e_elementary(r - i, l)
        if hx and ey:
            total = total + hx.embed(d, 0) * ey.embed(d, k)
    return total


def schur_super_tableau(lam: Sequence[int], k: int, l: int) -> SparsePolynomial:
    """Generating polynomial of (k, l)-semistandard tableaux of shape ``lam``."""
    lam = as_partition(lam)
    if not is_hook(lam, k, l):
        return SparsePolynomial.zero(k + l)
    return SparsePolynomial(k + l, content_counts(lam, k, l))


def _det(matrix: Sequence[Sequence[SparsePolynomial]], dims: int) -> SparsePolynomial:
    """Laplace expansion along rows, memoized on the set of columns still free."""
    n = len(matrix)
    if n == 0:
        return SparsePolynomial.one(dims)

    @lru_cache(maxsize=None)
    def minor(cols: tuple[int, ...]) -> SparsePolynomial:
        row = n - len(cols)
        if not cols:
            return SparsePolynomial.one(dims)
        acc = SparsePolynomial.zero(dims)
        for pos, j in enumerate(cols):
            entry = matrix[row][j]
            if not entry:
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = entry * sub
            acc = acc - term if pos % 2 else acc + term
        return acc

    return minor(tuple(range(n)))


def schur_super_det(lam: Sequence[int], k: int, l: int) -> SparsePolynomial:
    """det(H_{lam_i + j - i})_{1 <= i, j <= len(lam)}."""
    lam = as_partition(lam)
    n = len(lam)
    matrix = [[h_super(lam[i] + j - i, k, l) for j in range(n)] for i in range(n)]
    return _det(matrix, k + l)


def schur_classical(mu: Sequence[int], k: int) -> SparsePolynomial:
    mu = as_partition(mu)
    if len(mu) > k:
        return SparsePolynomial.zero(k)
    return SparsePolynomial(k, content_counts(mu, k, 0))


def schur_skew(lam: Sequence[int], mu: Sequence[int], k: int) -> SparsePolynomial:
    """Classical skew Schur polynomial s_{lam/mu}(x1..xk) from skew SSYT."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ContractError(f"{list(mu)} is not contained in {list(lam)}")
    cells = [(i, j) for i, p in enumerate(lam) for j in range(mu.part(i + 1), p)]
    if not cells:
        return SparsePolynomial.one(k)
    if k == 0:
        return SparsePolynomial.zero(0)
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * k
    acc: dict[Exponent, int] = defaultdict(int)
    last = len(cells)

    def rec(c: int) -> None:
        i, j = cells[c]
        lo = 0
        if (i, j - 1) in grid:
            lo = grid[(i, j - 1)]
        if (i - 1, j) in grid:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for z in range(lo, k):
            grid[(i, j)] = z
            counts[z] += 1
            if c + 1 == last:
                acc[tuple(counts)] += 1
            else:
                rec(c + 1)
            counts[z] -= 1
        grid.pop((i, j), None)

    rec(0)
    return SparsePolynomial(k, acc)


def expansion_rhs(lam: Sequence[int], k: int, l: int) -> SparsePolynomial:
    """sum over mu ⊆ lam of s_mu(x) * s_{lam'/mu'}(y), in k+l variables."""
    lam = as_partition(lam)
    lam_c = conjugate(lam)
    d = k + l
    total = SparsePolynomial.zero(d)
    # every mu ⊆ lam: choose mu_i <= lam_i, weakly decreasing
    for parts in itertools.product(*(range(p + 1) for p in lam)):
        if any(a < b for a, b in zip(parts, parts[1:])):
            continue
        mu = Partition(parts)
        sx = schur_classical(mu, k)
        if not sx:
            continue
        sy = schur_skew(lam_c, conjugate(mu), l)
        if not sy:
            continue
        total = total + sx.embed(d, 0) * sy.embed(d, k)
    return total


def check_expansion(lam: Sequence[int], k: int, l: int) -> bool:
    return schur_super_tableau(lam, k, l) == expansion_rhs(lam, k, l)


def _check_dims(p: SparsePolynomial, k: int, l: int) -> None:
    if p.dims != k + l:
        raise DimensionError(f"polynomial has {p.dims} variables, expected k+l = {k + l}")


def cancellation_image(p: SparsePolynomial, k: int, l: int) -> SparsePolynomial:
    """Substitute x_k = t, y_l = -t; t is the last coordinate of the result."""
    _check_dims(p, k, l)
    if k < 1 or l < 1:
        raise ContractError("cancellation needs k >= 1 and l >= 1")
    xk, yl = k - 1, k + l - 1
    terms = []
    for exp, coef in p.items():
        rest = exp[:xk] + exp[xk + 1:yl]
        sign = -1 if exp[yl] % 2 else 1
        terms.append((rest + (exp[xk] + exp[yl],), sign * coef))
    return SparsePolynomial(p.dims - 1, terms)


def check_cancellation(p: SparsePolynomial, k: int, l: int) -> bool:
    """True iff p(x_k = t, y_l = -t) does not depend on t."""
    return all(exp[-1] == 0 for exp, _ in cancellation_image(p, k, l).items())


def check_bisymmetry(p: SparsePolynomial, k: int, l: int) -> bool:
    """Invariance under adjacent swaps within the x-block and within the y-block."""
    _check_dims(p, k, l)
    swaps = [i for i in range(k - 1)] + [k + j for j in range(l - 1)]
    terms = p.terms
    for i in swaps:
        for exp, coef in terms.items():
            swapped = exp[:i] + (exp[i + 1], exp[i]) + exp[i + 2:]
            if terms.get(swapped, 0) != coef:
                return False
    return True
