"""Poincare polynomials of catenoid quiver Grassmannians, two ways.

The cell route sums q^(cell dimension) over the fixed-point chains of the
frame.  The stratification route decomposes e over the distinct summand
intervals: each admissible decomposition contributes an affine fibration
of computable dimension over a product of partial flag varieties, so its
term is q^(fiber dimension) times a product of q-multinomials.  The two
routes must agree coefficientwise on every instance; the verify harness
enforces this exhaustively on small instances.

Coefficients count cells by complex dimension.  The topological Poincare
polynomial (cells are complex affine spaces, so odd Betti numbers vanish)
is obtained by substituting q -> t^2.

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import comb
from typing import Iterator, Sequence

from .reps import (
    DimVector,
    NotCatenoidError,
    Representation,
    _check_dim_vector,
    catenoid_chain,
    catenoid_witness,
)
from .schubert import (
    DEFAULT_GUARD,
    Chain,
    GuardExceededError,
    ResolutionFrame,
    _check_guard,
    cell_dimension,
    iter_fixed_points,
)

Decomposition = tuple[DimVector, ...]


@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in q with nonnegative integer coefficients, index = degree.

    Stored in canonical form (no trailing zeros); the zero polynomial has
    an empty coefficient tuple.

    >>> QPolynomial((1, 2, 0)) + QPolynomial((0, 1))
    QPolynomial(coefficients=(1, 3))
    >>> QPolynomial((1, 1)) * QPolynomial((1, 1, 1))
    QPolynomial(coefficients=(1, 2, 2, 1))
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if any(c < 0 for c in coeffs):
            raise ValueError(f"negative coefficient in {coeffs}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "QPolynomial":
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b) :])

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(tuple(out))

    def __call__(self, value: int) -> int:
        result = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("q" if c == 1 else f"{c}*q")
            else:
                terms.append(f"q^{k}" if c == 1 else f"{c}*q^{k}")
        return " + ".join(terms)


@cache
def _q_binomial_coeffs(n: int, k: int) -> tuple[int, ...]:
    # Gaussian binomial via the q-Pascal recurrence; no division needed.
    if k < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return (1,)
    a = _q_binomial_coeffs(n - 1, k - 1)
    b = _q_binomial_coeffs(n - 1, k)
    out = [0] * max(len(a), k + len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[k + i] += x
    return tuple(out)


def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial coefficient as a polynomial in q.

    >>> str(q_binomial(2, 1))
    '1 + q'
    """
    return QPolynomial(_q_binomial_coeffs(n, k))


def _mul_coeffs(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


@cache
def _q_multinomial_coeffs(m: int, dims: tuple[int, ...]) -> tuple[int, ...]:
    poly: tuple[int, ...] = (1,)
    upper = m
    for t in reversed(dims):
        poly = _mul_coeffs(poly, _q_binomial_coeffs(upper, t))
        upper = t
    return poly


def q_multinomial(m: int, dims: Sequence[int]) -> QPolynomial:
    """Poincare polynomial of the partial flag variety Fl(dims; C^m).

    ``dims`` must be weakly increasing with last entry <= m; an empty
    ``dims`` gives 1 (the point).

    >>> str(q_multinomial(3, (1, 2)))
    '1 + 2*q + 2*q^2 + q^3'
    """
    if m < 0:
        raise ValueError(f"ambient dimension must be nonnegative, got {m}")
    dims = tuple(dims)
    for t, u in zip(dims, dims[1:]):
        if t > u:
            raise ValueError(f"flag type {dims} is not weakly increasing")
    if dims and (dims[0] < 0 or dims[-1] > m):
        raise ValueError(f"flag type {dims} does not fit in dimension {m}")
    return QPolynomial(_q_multinomial_coeffs(m, dims))


def multinomial(m: int, dims: Sequence[int]) -> int:
    """Ordinary multinomial of the same flag type (the q = 1 value)."""
    total = 1
    upper = m
    for t in reversed(tuple(dims)):
        total *= comb(upper, t)
        upper = t
    return total


def _distinct_blocks(M: Representation) -> list[tuple[tuple[int, int], int]]:
    chain = catenoid_chain(M)
    if chain is None:
        raise NotCatenoidError(catenoid_witness(M))
    return [(iv, M.multiplicity(iv)) for iv in chain]


def iter_strata(M: Representation, e: Sequence[int]) -> Iterator[Decomposition]:
    """Yield all decompositions of e over the distinct summands of M.

    A decomposition assigns to each distinct summand interval p_l (in
    ascending chain order) a vector e(l) supported on p_l, weakly
    increasing there and bounded by the multiplicity of p_l, such that
    the e(l) sum to e.  Yielded in lexicographic order.
    """
    e = _check_dim_vector(e, M.n)
    n = M.n
    blocks = _distinct_blocks(M)
    r = len(blocks)
    # coverable[l][v]: some block >= l supports vertex v+1.
    coverable = [[False] * n for _ in range(r + 1)]
    for l in range(r - 1, -1, -1):
        (i, j), _ = blocks[l]
        for v in range(n):
            coverable[l][v] = coverable[l + 1][v] or (i - 1 <= v <= j - 1)

    def block_choices(l: int, remaining: tuple[int, ...]) -> Iterator[DimVector]:
        (i, j), mult = blocks[l]

        def grow(v: int, prev: int, acc: tuple[int, ...]) -> Iterator[DimVector]:
            if v > j:
                vec = [0] * n
                vec[i - 1 : j] = acc
                yield tuple(vec)
                return
            hi = min(mult, remaining[v - 1])
            for x in range(prev, hi + 1):
                yield from grow(v + 1, x, acc + (x,))

        yield from grow(i, 0, ())

    def rec(l: int, remaining: tuple[int, ...], acc: Decomposition) -> Iterator[Decomposition]:
        if any(
            remaining[v] > 0 and not coverable[l][v] for v in range(n)
        ):
            return
        if l == r:
            if all(x == 0 for x in remaining):
                yield acc
            return
        for vec in block_choices(l, remaining):
            rest = tuple(x - y for x, y in zip(remaining, vec))
            yield from rec(l + 1, rest, acc + (vec,))

    yield from rec(0, e, ())


def strata(
    M: Representation, e: Sequence[int], guard: int | None = DEFAULT_GUARD
) -> list[Decomposition]:
    """All decompositions as a list, lexicographically ordered."""
    out: list[Decomposition] = []
    for dec in iter_strata(M, e):
        out.append(dec)
        if guard is not None and len(out) > guard:
            raise GuardExceededError(len(out), guard)
    return out


def fiber_dim(M: Representation, dec: Decomposition) -> int:
    """Dimension of the affine fiber over the stratum of a decomposition.

    The unipotent automorphisms move the chosen subrepresentation of block
    l along Hom spaces into the earlier blocks, but moves landing inside
    the already-chosen subreps of those blocks stabilize the point.  So
    beta(l) is the dimension vector of the quotient of the blocks before l
    by their chosen subreps,

        beta(l)_v = sum over s < l of (m(p_s) dim M(p_s)_v - e(s)_v),

    and the fiber dimension is the sum over the support of block l of
    (e(l)_v - e(l)_{v-1}) beta(l)_v.  (Taking the quotient is what makes
    this agree with the cell oracle; the plain block dimensions overcount
    as soon as some Hom(subrep_l, subrep_s) is nonzero.)
    """
    blocks = _distinct_blocks(M)
    n = M.n
    beta = [0] * n
    total = 0
    for l, ((i, j), mult) in enumerate(blocks):
        vec = dec[l]
        prev = 0
        for v in range(i, j + 1):
            total += (vec[v - 1] - prev) * beta[v - 1]
            prev = vec[v - 1]
        for v in range(i - 1, j):
            beta[v] += mult - vec[v]
    return total


def poincare_formula(
    M: Representation, e: Sequence[int], guard: int | None = DEFAULT_GUARD
) -> QPolynomial:
    """Poincare polynomial via the stratification over decompositions.

    Each decomposition contributes q^(fiber dimension) times the product
    of the q-multinomials of its blocks.  Agrees with
    :func:`poincare_cells` on every catenoid instance.
    """
    blocks = _distinct_blocks(M)
    acc: list[int] = []
    count = 0
    for dec in iter_strata(M, e):
        count += 1
        if guard is not None and count > guard:
            raise GuardExceededError(count, guard)
        term: tuple[int, ...] = (1,)
        for ((i, j), mult), vec in zip(blocks, dec):
            term = _mul_coeffs(term, _q_multinomial_coeffs(mult, vec[i - 1 : j]))
        shift = fiber_dim(M, dec)
        need = shift + len(term)
        if len(acc) < need:
            acc.extend([0] * (need - len(acc)))
        for k, c in enumerate(term):
            acc[shift + k] += c
    return QPolynomial(tuple(acc))


def poincare_cells(
    frame: ResolutionFrame, guard: int | None = DEFAULT_GUARD
) -> QPolynomial:
    """Poincare polynomial as the cell-dimension generating function.

    The independent oracle for :func:`poincare_formula`; the zero
    polynomial iff the instance is empty.
    """
    _check_guard(frame, guard)
    acc: list[int] = []
    for chain in iter_fixed_points(frame):
        d = cell_dimension(chain)
        if len(acc) <= d:
            acc.extend([0] * (d + 1 - len(acc)))
        acc[d] += 1
    return QPolynomial(tuple(acc))


def euler_characteristic(
    M: Representation, e: Sequence[int], guard: int | None = DEFAULT_GUARD
) -> int:
    """Euler characteristic, the number of torus fixed points."""
    return poincare_formula(M, e, guard)(1)


def _block_ranges(
    summands: tuple[tuple[int, int], ...]
) -> list[tuple[tuple[int, int], int, int]]:
    # Runs of equal intervals as (interval, lo, hi) with 1-based inclusive
    # basis-index bounds.
    ranges = []
    pos = 0
    while pos < len(summands):
        iv = summands[pos]
        hi = pos
        while hi + 1 < len(summands) and summands[hi + 1] == iv:
            hi += 1
        ranges.append((iv, pos + 1, hi + 1))
        pos = hi + 1
    return ranges


def _stratum_from_ranges(
    ranges: list[tuple[tuple[int, int], int, int]], chain: Chain, n: int
) -> Decomposition:
    dec: list[DimVector] = []
    for (i, j), lo, hi in ranges:
        vec = [0] * n
        for a in range(i, j + 1):
            vec[a - 1] = sum(1 for x in chain[a - 1] if lo <= x <= hi)
        dec.append(tuple(vec))
    return tuple(dec)


def stratum_of_chain(frame: ResolutionFrame, chain: Chain) -> Decomposition:
    """The decomposition refined by a fixed point.

    Basis indices are grouped by distinct summand interval; the part of
    e(l) at vertex a counts the chosen indices of block l, except that a
    block contributes nothing beyond the right end of its interval (the
    quotient map kills those vectors).
    """
    return _stratum_from_ranges(_block_ranges(frame.summands), chain, frame.n)
