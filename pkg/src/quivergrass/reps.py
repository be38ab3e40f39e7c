"""Interval calculus for representations of the equioriented type A quiver.

The quiver is ``1 -> 2 -> ... -> n``.  Every finite-dimensional
representation decomposes as a direct sum of interval modules ``M[i,j]``
(``1 <= i <= j <= n``): the representation with a one-dimensional space at
each vertex of ``[i, j]``, identity maps inside the interval and zero
elsewhere.  A representation is therefore a finite multiset of intervals.

Conventions used throughout the package:

- an interval is a plain pair ``(i, j)`` of 1-based vertex indices, i <= j;
- a dimension vector is a tuple of n nonnegative integers;
- ``(i, n)`` is the projective cover of the simple at vertex i, and
  ``(1, j)`` is the injective envelope of the simple at vertex j;
- intervals are ordered by ``(i, j) <= (k, l)  iff  i <= k and j <= l``;
  a representation whose distinct summands are pairwise comparable in this
  order is called catenoid, and its distinct summands then sort into a
  unique ascending chain.

All values are immutable and all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

Interval = tuple[int, int]
DimVector = tuple[int, ...]


class NotCatenoidError(ValueError):
    """A catenoid representation was required; carries an incomparable pair."""

    def __init__(self, witness: tuple[Interval, Interval]):
        self.witness = witness
        p, s = witness
        super().__init__(f"not catenoid: summands {p} and {s} are incomparable")


class EmptyInstanceError(ValueError):
    """The quiver Grassmannian of the given instance is empty."""


def _check_interval(interval: Interval, n: int) -> None:
    i, j = interval
    if not (1 <= i <= j <= n):
        raise ValueError(f"invalid interval {interval} for quiver length {n}")


def _check_dim_vector(e: Sequence[int], n: int) -> DimVector:
    e = tuple(e)
    if len(e) != n:
        raise ValueError(f"dimension vector {e} has length {len(e)}, expected {n}")
    for a, x in enumerate(e, start=1):
        if x < 0:
            raise ValueError(f"dimension vector entry e_{a} = {x} is negative")
    return e


@dataclass(frozen=True)
class Representation:
    """A representation of the A_n quiver, as a multiset of intervals.

    ``summands`` is normalized to ``((i, j), multiplicity)`` pairs with
    distinct intervals and positive multiplicities, sorted by ``(i, j)``.
    The constructor accepts any iterable of such pairs, or a mapping
    ``interval -> multiplicity``.

    >>> M = Representation(2, {(1, 2): 2, (1, 1): 1})
    >>> M.summands
    (((1, 1), 1), ((1, 2), 2))
    >>> M.total_summands
    3
    """

    n: int
    summands: tuple[tuple[Interval, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"quiver length must be positive, got {self.n}")
        items: Iterable
        if isinstance(self.summands, Mapping):
            items = self.summands.items()
        else:
            items = self.summands
        merged: dict[Interval, int] = {}
        for interval, mult in items:
            interval = (int(interval[0]), int(interval[1]))
            _check_interval(interval, self.n)
            if mult < 1:
                raise ValueError(f"multiplicity of {interval} must be positive, got {mult}")
            merged[interval] = merged.get(interval, 0) + int(mult)
        object.__setattr__(self, "summands", tuple(sorted(merged.items())))

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[Sequence[int]]) -> "Representation":
        """Build a representation from ``(i, j, multiplicity)`` triples."""
        return cls(n, [((i, j), m) for i, j, m in triples])

    @property
    def distinct(self) -> tuple[Interval, ...]:
        """The distinct summand intervals, sorted by ``(i, j)``."""
        return tuple(iv for iv, _ in self.summands)

    @property
    def total_summands(self) -> int:
        """Number of indecomposable summands counted with multiplicity."""
        return sum(m for _, m in self.summands)

    def multiplicity(self, interval: Interval) -> int:
        for iv, m in self.summands:
            if iv == interval:
                return m
        return 0


RepOrInterval = Union[Representation, Interval]


def interval_leq(p: Interval, s: Interval) -> bool:
    """Componentwise order on intervals.

    >>> interval_leq((1, 1), (1, 2))
    True
    >>> interval_leq((2, 2), (1, 3)), interval_leq((1, 3), (2, 2))
    (False, False)
    """
    return p[0] <= s[0] and p[1] <= s[1]


def interval_dimension(interval: Interval, n: int) -> DimVector:
    """Dimension vector of the interval module ``M[i,j]`` on n vertices."""
    i, j = interval
    return tuple(1 if i <= a <= j else 0 for a in range(1, n + 1))


def dimension_vector(M: Representation) -> DimVector:
    """Dimension vector of M: entry a counts the summands covering vertex a."""
    dims = [0] * M.n
    for (i, j), mult in M.summands:
        for a in range(i - 1, j):
            dims[a] += mult
    return tuple(dims)


def _as_pairs(x: RepOrInterval) -> tuple[tuple[Interval, int], ...]:
    if isinstance(x, Representation):
        return x.summands
    return ((x, 1),)


def _hom_interval(x: Interval, y: Interval) -> int:
    # A nonzero map M[a,b] -> M[c,d] exists iff the target interval starts
    # inside [a,b]'s shadow and ends no later: c <= a <= d <= b.
    a, b = x
    c, d = y
    return 1 if c <= a <= d <= b else 0


def _ext_interval(x: Interval, y: Interval, n: int) -> int:
    # Dimension of Ext^1(M[a,b], M[c,d]) from the two-step projective
    # resolution P(b+1) -> P(a) of M[a,b]; always 0 or 1.
    a, b = x
    c, d = y
    val = -(1 if c <= a <= d else 0) + (1 if c <= a <= d <= b else 0)
    if b < n and c <= b + 1 <= d:
        val += 1
    return val


def hom_dim(x: RepOrInterval, y: RepOrInterval) -> int:
    """dim Hom(x, y), biadditive over direct sums.

    Arguments may be intervals or representations (on the same quiver).

    >>> hom_dim((1, 2), (1, 1))
    1
    >>> hom_dim((1, 2), (2, 2))
    0
    """
    total = 0
    for xv, xm in _as_pairs(x):
        for yv, ym in _as_pairs(y):
            total += xm * ym * _hom_interval(xv, yv)
    return total


def ext_dim(x: RepOrInterval, y: RepOrInterval, n: int | None = None) -> int:
    """dim Ext^1(x, y), biadditive over direct sums.

    ``n`` (the quiver length) is needed when both arguments are bare
    intervals; it decides which intervals are projective.
    """
    if n is None:
        if isinstance(x, Representation):
            n = x.n
        elif isinstance(y, Representation):
            n = y.n
        else:
            raise ValueError("quiver length n is required for interval arguments")
    total = 0
    for xv, xm in _as_pairs(x):
        for yv, ym in _as_pairs(y):
            total += xm * ym * _ext_interval(xv, yv, n)
    return total


def euler_form(x: Sequence[int], y: Sequence[int]) -> int:
    """Euler form of dimension vectors: sum x_a y_a - sum x_a y_{a+1}.

    Satisfies hom_dim(X, Y) - ext_dim(X, Y) = euler_form(dim X, dim Y).

    >>> euler_form((1, 2), (2, 1))
    3
    """
    if len(x) != len(y):
        raise ValueError(f"dimension vectors have different lengths {len(x)} and {len(y)}")
    return sum(xa * ya for xa, ya in zip(x, y)) - sum(
        xa * yb for xa, yb in zip(x, y[1:])
    )


def catenoid_witness(M: Representation) -> tuple[Interval, Interval] | None:
    """A pair of incomparable summand intervals, or None if M is catenoid."""
    distinct = M.distinct
    for idx, p in enumerate(distinct):
        for s in distinct[idx + 1 :]:
            if not (interval_leq(p, s) or interval_leq(s, p)):
                return (p, s)
    return None


def catenoid_chain(M: Representation) -> tuple[Interval, ...] | None:
    """The distinct summands sorted into an ascending chain, or None.

    Returns None exactly when some pair of distinct summands is
    incomparable (see :func:`catenoid_witness` for the pair).
    """
    if catenoid_witness(M) is not None:
        return None
    # Pairwise comparable intervals sort into a chain by either coordinate;
    # the lexicographic summand order is already that chain.
    return M.distinct


def is_catenoid(M: Representation) -> bool:
    return catenoid_witness(M) is None


def minimal_resolution(M: Representation) -> tuple[DimVector, DimVector]:
    """Dimension vectors (q, r) of the projective resolution 0 -> Q -> R -> M -> 0.

    Each summand M[i,j] contributes the projective cover P(i) to R and,
    when j < n, the kernel P(j+1) to Q.  Hence r_a counts summands with
    left endpoint <= a, and q_a counts summands with right endpoint < a.

    >>> minimal_resolution(Representation(2, {(1, 1): 1, (1, 2): 1, (2, 2): 1}))
    ((0, 1), (1, 3))
    """
    q = [0] * M.n
    r = [0] * M.n
    for (i, j), mult in M.summands:
        for a in range(i - 1, M.n):
            r[a] += mult
        for a in range(j, M.n):
            q[a] += mult
    return tuple(q), tuple(r)


def is_nonempty(M: Representation, e: Sequence[int]) -> bool:
    """Whether M has a subrepresentation of dimension vector e.

    Closed form: e <= dim M pointwise and f = e + q weakly increasing.
    Cross-checked against fixed-point enumeration by the verify harness.
    """
    e = _check_dim_vector(e, M.n)
    d = dimension_vector(M)
    if any(ea > da for ea, da in zip(e, d)):
        return False
    q, _ = minimal_resolution(M)
    f = [ea + qa for ea, qa in zip(e, q)]
    return all(f[a] <= f[a + 1] for a in range(M.n - 1))


def is_simple(M: Representation, e: Sequence[int]) -> bool:
    """No vertex is forced: 0 < e_a < d_a everywhere and r_a > q_{a+1}."""
    e = _check_dim_vector(e, M.n)
    d = dimension_vector(M)
    if any(not 0 < ea < da for ea, da in zip(e, d)):
        return False
    q, r = minimal_resolution(M)
    return all(r[a] > q[a + 1] for a in range(M.n - 1))


def restrict_left(M: Representation, a: int) -> Representation:
    """M restricted to the vertices 1..a (summands truncated to (i, min(j, a)))."""
    return Representation(
        a, [((i, min(j, a)), m) for (i, j), m in M.summands if i <= a]
    )


def restrict_right(M: Representation, a: int) -> Representation:
    """M restricted to the vertices a+1..n, relabeled to start at 1."""
    return Representation(
        M.n - a,
        [((max(i, a + 1) - a, j - a), m) for (i, j), m in M.summands if j > a],
    )


def quotient_right(M: Representation, a: int) -> Representation:
    """The quotient of M restricted to a+1..n by the image of M_a.

    The image of vertex a sweeps out every summand crossing a, so only the
    summands starting strictly after a survive.
    """
    return Representation(
        M.n - a, [((i - a, j - a), m) for (i, j), m in M.summands if i > a]
    )


def _crossing_count(M: Representation, a: int, b: int) -> int:
    # Summands covering both vertex a and vertex b, with multiplicity.
    return sum(m for (i, j), m in M.summands if i <= a and j >= b)


def decompose_simple(
    M: Representation, e: Sequence[int]
) -> list[tuple[Representation, DimVector]]:
    """Split (M, e) at every forced vertex into independent factors.

    A cut happens after vertex a whenever e_a = 0, e_a = d_a, or
    r_a <= q_{a+1} (the map M_a -> M_{a+1} is zero).  The fixed-point
    poset of (M, e) is the product of the factors' posets.  At a cut with
    e_a = d_a the right factor is the quotient by the image of M_a, and
    its dimension vector drops by the number of summands crossing the cut.
    """
    e = _check_dim_vector(e, M.n)
    if not is_nonempty(M, e):
        raise EmptyInstanceError(f"Gr_{e}(M) is empty")
    factors: list[tuple[Representation, DimVector]] = []
    while True:
        n = M.n
        d = dimension_vector(M)
        q, r = minimal_resolution(M)
        cut = None
        for a in range(1, n):
            if e[a - 1] == 0 or e[a - 1] == d[a - 1] or r[a - 1] <= q[a]:
                cut = a
                break
        if cut is None:
            factors.append((M, e))
            return factors
        a = cut
        factors.append((restrict_left(M, a), e[:a]))
        if e[a - 1] == d[a - 1] and d[a - 1] > 0:
            right_e = tuple(
                e[b - 1] - _crossing_count(M, a, b) for b in range(a + 1, n + 1)
            )
            M = quotient_right(M, a)
        else:
            right_e = e[a:]
            M = restrict_right(M, a)
        e = right_e
