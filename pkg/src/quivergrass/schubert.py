"""Schubert-side combinatorics of a catenoid instance (M, e).

The projective resolution 0 -> Q -> R -> M -> 0 of a catenoid M turns the
quiver Grassmannian Gr_e(M) into a union of Schubert varieties inside the
partial flag variety of type f = e + dim Q on C^N, where N is the number
of indecomposable summands of M.  This module works entirely with the
combinatorial shadow of that picture:

- a *frame* records (n, N, q, r, f) together with the N summand intervals
  sorted ascending, so that basis vector k of C^N belongs to summand k and
  both the R-flag and the Q-flag are coordinate flags;
- a torus fixed point is a chain ``K_1 <= ... <= K_n`` of subsets of
  {1..N} with ``|K_a| = f_a`` and ``{1..q_a} <= K_a <= {1..r_a}``,
  represented as a tuple of sorted tuples;
- the Bruhat order compares chains componentwise on sorted entries; its
  maximal elements index the irreducible components.

The Borel here is upper triangular (it stabilizes the coordinate flag
``span{v_1..v_k}``), so larger index sets mean larger cells.  Permutations
are tuples ``(w(1), ..., w(N))`` in one-line notation with 1-based values,
and words in the simple reflections ``s_i = (i, i+1)`` multiply with the
rightmost factor applied first.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .reps import (
    DimVector,
    EmptyInstanceError,
    Interval,
    NotCatenoidError,
    Representation,
    _check_dim_vector,
    catenoid_chain,
    catenoid_witness,
    dimension_vector,
    euler_form,
    hom_dim,
    interval_dimension,
    is_nonempty,
    is_simple,
    minimal_resolution,
)

Chain = tuple[tuple[int, ...], ...]
Permutation = tuple[int, ...]

DEFAULT_GUARD = 10**7


class GuardExceededError(RuntimeError):
    """Predicted enumeration size exceeds the configured guard."""

    def __init__(self, predicted: int, guard: int):
        self.predicted = predicted
        self.guard = guard
        super().__init__(
            f"predicted enumeration size {predicted} exceeds guard {guard}"
        )


class NotSimpleError(ValueError):
    """The operation requires a simple instance."""


class NotIrreducibleError(ValueError):
    """The operation requires an irreducible instance."""


@dataclass(frozen=True)
class ResolutionFrame:
    """Numeric frame (n, N, q, r, f) of an instance plus its sorted summands."""

    n: int
    N: int
    q: DimVector
    r: DimVector
    f: DimVector
    summands: tuple[Interval, ...]

    @property
    def e(self) -> DimVector:
        return tuple(fa - qa for fa, qa in zip(self.f, self.q))

    @property
    def d(self) -> DimVector:
        return tuple(ra - qa for ra, qa in zip(self.r, self.q))


def build_frame(M: Representation, e: Sequence[int]) -> ResolutionFrame:
    """Frame of the instance (M, e); requires M catenoid.

    Summands are expanded with multiplicity and sorted ascending, which
    makes both bounding flags coordinate flags: summand k spans basis
    vector k, ``R_a = span{v_1..v_{r_a}}`` and ``Q_a = span{v_1..v_{q_a}}``.
    """
    e = _check_dim_vector(e, M.n)
    chain = catenoid_chain(M)
    if chain is None:
        raise NotCatenoidError(catenoid_witness(M))
    sorted_summands: list[Interval] = []
    for iv in chain:
        sorted_summands.extend([iv] * M.multiplicity(iv))
    q, r = minimal_resolution(M)
    f = tuple(ea + qa for ea, qa in zip(e, q))
    return ResolutionFrame(
        n=M.n, N=M.total_summands, q=q, r=r, f=f, summands=tuple(sorted_summands)
    )


def predicted_fixed_point_bound(frame: ResolutionFrame) -> int:
    """Upper bound for the number of chains: prod of binomial(d_a, e_a)."""
    bound = 1
    for qa, ra, fa in zip(frame.q, frame.r, frame.f):
        if not qa <= fa <= ra:
            return 0
        bound *= comb(ra - qa, fa - qa)
    return bound


def _check_guard(frame: ResolutionFrame, guard: int | None) -> None:
    if guard is not None:
        predicted = predicted_fixed_point_bound(frame)
        if predicted > guard:
            raise GuardExceededError(predicted, guard)


def iter_fixed_points(frame: ResolutionFrame) -> Iterator[Chain]:
    """Yield every fixed-point chain of the frame, in lexicographic order."""

    def rec(a: int, prev: tuple[int, ...], acc: Chain) -> Iterator[Chain]:
        if a > frame.n:
            yield acc
            return
        qa, ra, fa = frame.q[a - 1], frame.r[a - 1], frame.f[a - 1]
        forced = set(prev)
        forced.update(range(1, qa + 1))
        free = fa - len(forced)
        if free < 0:
            return
        pool = [x for x in range(1, ra + 1) if x not in forced]
        if free > len(pool):
            return
        base = sorted(forced)
        for extra in combinations(pool, free):
            K = tuple(sorted(base + list(extra)))
            yield from rec(a + 1, K, acc + (K,))

    yield from rec(1, (), ())


def enumerate_fixed_points(
    frame: ResolutionFrame, guard: int | None = DEFAULT_GUARD
) -> list[Chain]:
    """All fixed-point chains as a list; empty iff the instance is empty."""
    _check_guard(frame, guard)
    return list(iter_fixed_points(frame))


def bruhat_leq(K: Chain, L: Chain) -> bool:
    """Componentwise comparison of the sorted index sets of two chains."""
    if len(K) != len(L):
        raise ValueError("chains have different lengths")
    for Ka, La in zip(K, L):
        if len(Ka) != len(La):
            raise ValueError("chains belong to different frames")
        if any(x > y for x, y in zip(Ka, La)):
            return False
    return True


def minimum_chain(frame: ResolutionFrame) -> Chain:
    """The Bruhat-minimal chain K_a = {1..f_a} (valid iff nonempty)."""
    return tuple(tuple(range(1, fa + 1)) for fa in frame.f)


def maximal_chains(chains) -> list[Chain]:
    """Bruhat-maximal elements of an iterable of chains, sorted lex.

    Keeps a running frontier; transitivity makes comparing against the
    frontier alone sufficient.
    """
    maxima: list[Chain] = []
    for K in chains:
        if any(bruhat_leq(K, m) for m in maxima):
            continue
        maxima = [m for m in maxima if not bruhat_leq(m, K)]
        maxima.append(K)
    return sorted(maxima)


def components(
    frame: ResolutionFrame, guard: int | None = DEFAULT_GUARD
) -> list[Chain]:
    """Bruhat-maximal chains, in lexicographic order.

    Each one is the biggest cell of one irreducible component, a Schubert
    variety of dimension :func:`cell_dimension` of the chain.
    """
    _check_guard(frame, guard)
    return maximal_chains(iter_fixed_points(frame))


def cell_dimension(chain: Chain) -> int:
    """Dimension of the upper-Borel orbit through the fixed point.

    Each index x entering at stage a contributes the number of smaller
    indices missing from K_a.

    >>> cell_dimension(((2,),))
    1
    >>> cell_dimension(((3,), (1, 3, 4)))
    3
    """
    total = 0
    prev: frozenset[int] = frozenset()
    for K in chain:
        for pos, x in enumerate(K):
            if x not in prev:
                total += x - 1 - pos
        prev = frozenset(K)
    return total


def _subrep_mults(frame: ResolutionFrame, chain: Chain) -> dict[Interval, int]:
    n, q, f = frame.n, frame.q, frame.f

    def rho(a: int, b: int) -> int:
        if a == 0 or b == n + 1:
            return 0
        return f[a - 1] - bisect_right(chain[a - 1], q[b - 1])

    mults: dict[Interval, int] = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            m = rho(i, j) - rho(i - 1, j) - rho(i, j + 1) + rho(i - 1, j + 1)
            if m < 0:
                raise RuntimeError(
                    f"negative multiplicity for interval ({i}, {j}) at chain {chain}"
                )
            if m:
                mults[(i, j)] = m
    return mults


def subrep_type(frame: ResolutionFrame, chain: Chain) -> Representation:
    """Isomorphism class of the subrepresentation at a fixed point.

    Ranks of the composites U_a -> M_b are read off the chain as
    ``rho(a, b) = f_a - |K_a n {1..q_b}|``; interval multiplicities then
    come out by inclusion-exclusion over the rank table.
    """
    rep = Representation(frame.n, _subrep_mults(frame, chain))
    if dimension_vector(rep) != frame.e:
        raise RuntimeError(f"subrepresentation type of {chain} has wrong dimension")
    return rep


def dominant_chain(frame: ResolutionFrame) -> Chain | None:
    """The Bruhat-maximum chain of a nonempty frame, or None if none exists.

    For every level a and threshold x, every chain obeys the mass bounds

        |K_a n [1..x]|  >=  f_a - max(r_a - x, 0)              (r-box at a)
        |K_a n [1..x]|  >=  f_a - f_b + min(x, q_b),  b >= a   (q-prefix at b)
        |K_a n [1..x]|  >=  |K_{a-1} n [1..x]|                 (nesting)

    and the running maximum m(a, x) of these is itself the counting
    function of a set K*_a of size f_a inside the frame's box (it grows by
    0 or 1 per threshold, hits the q-prefix, and tops out at x = r_a).
    If the K*_a nest they form a chain whose counting function is a
    pointwise lower bound for every chain, i.e. the Bruhat maximum; if
    they do not nest, no chain dominates all others.  Both directions are
    cross-checked against enumeration by the verify harness.
    """
    n, N = frame.n, frame.N
    prev_counts = [0] * (N + 1)
    prev_set: tuple[int, ...] = ()
    chain: list[tuple[int, ...]] = []
    for a in range(1, n + 1):
        fa, ra = frame.f[a - 1], frame.r[a - 1]
        counts = [0] * (N + 1)
        level: list[int] = []
        for x in range(1, N + 1):
            best = prev_counts[x]
            box = fa - max(ra - x, 0)
            if box > best:
                best = box
            for b in range(a, n + 1):
                bound = fa - frame.f[b - 1] + min(x, frame.q[b - 1])
                if bound > best:
                    best = bound
            counts[x] = best
            if best > counts[x - 1]:
                level.append(x)
        K = tuple(level)
        if not set(prev_set) <= set(K):
            return None
        chain.append(K)
        prev_counts = counts
        prev_set = K
    return tuple(chain)


def is_irreducible(M: Representation, e: Sequence[int]) -> bool:
    """Whether the (nonempty) quiver Grassmannian is irreducible.

    Equivalent to its fixed-point poset having a unique maximal chain,
    decided in closed form by :func:`dominant_chain`.  Note the naive
    inequality (r - e weakly decreasing) is sufficient but not necessary:
    for M[1,1] + M[1,2]^2 and e = (2, 1) the two flag steps coincide and
    the Grassmannian is a P^1 although r - e = (1, 2) increases.
    """
    e = _check_dim_vector(e, M.n)
    if not is_nonempty(M, e):
        raise EmptyInstanceError(f"Gr_{e}(M) is empty")
    return dominant_chain(build_frame(M, e)) is not None


def staircase(M: Representation, e: Sequence[int]) -> bool:
    """Whether r - e is weakly decreasing (the staircase inequality).

    For simple instances this implies irreducibility, and exactly then the
    levelwise-maximal sets {1..q_a} u {r_a-e_a+1..r_a} nest into the top
    chain.  The converse fails when flag steps coincide (f_a = f_{a+1}):
    those instances can be irreducible without the inequality, but their
    top cell is not the full staircase cell.
    """
    e = _check_dim_vector(e, M.n)
    _, r = minimal_resolution(M)
    return all(r[a] - e[a] >= r[a + 1] - e[a + 1] for a in range(M.n - 1))


def hom_criterion(M: Representation, e: Sequence[int]) -> bool:
    """Hom bound against the Euler form, over non-injective indecomposables.

    True iff dim Hom(M, U) <= <e, dim U> for every interval module
    U = M[i,j] with i >= 2.  Equivalent to the staircase inequality on
    every instance (specialize U to the simples for one direction), hence
    sufficient but not necessary for irreducibility of simple instances.
    """
    e = _check_dim_vector(e, M.n)
    n = M.n
    for i in range(2, n + 1):
        for j in range(i, n + 1):
            u = (i, j)
            if hom_dim(M, u) > euler_form(e, interval_dimension(u, n)):
                return False
    return True


def permutation_from_word(word: Sequence[int], N: int) -> Permutation:
    """Evaluate a word in the simple reflections, rightmost letter first.

    >>> permutation_from_word((2, 3, 1), 4)
    (3, 1, 4, 2)
    """
    images = list(range(1, N + 1))
    for i in word:
        if not 1 <= i <= N - 1:
            raise ValueError(f"letter s_{i} out of range for N = {N}")
        images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def inversions(perm: Permutation) -> int:
    """Coxeter length of a permutation (number of inversions)."""
    return sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )


def chain_of_permutation(frame: ResolutionFrame, perm: Permutation) -> Chain:
    """The fixed-point chain ``K_a = w({1..f_a})`` induced by a permutation."""
    return tuple(tuple(sorted(perm[x] for x in range(fa))) for fa in frame.f)


def weyl_word(
    M: Representation, e: Sequence[int]
) -> tuple[Permutation, tuple[int, ...]]:
    """Reduced word and permutation of the top cell of an irreducible simple SQG.

    With m_a = (d_a - e_a) - (d_{a+1} - e_{a+1}) (and m_n = d_n - e_n),
    the factor for vertex a is the product of e_a descending runs

        s_{q_a+m_a+t} s_{q_a+m_a+t-1} ... s_{q_a+t+1},   t = 0..e_a-1,

    and the full word concatenates the factors for a = n down to 1.  The
    word has length sum e_a m_a = <e, d - e> and its permutation maps
    {1..f_a} onto {1..q_a} u {r_a-e_a+1..r_a} for every a.
    """
    e = _check_dim_vector(e, M.n)
    frame = build_frame(M, e)
    if not is_simple(M, e):
        raise NotSimpleError(f"instance (M, {e}) is not simple")
    if not is_irreducible(M, e):
        raise NotIrreducibleError(f"Gr_{e}(M) is not irreducible")
    if not staircase(M, e):
        # Irreducible only through coinciding flag steps; then the top
        # cell is smaller than the full staircase cell and this word
        # formula does not describe it.
        raise NotIrreducibleError(
            f"Gr_{e}(M) is irreducible but r - e is not weakly decreasing; "
            "no staircase Schubert word exists"
        )
    d = dimension_vector(M)
    n = M.n
    m = [
        (d[a] - e[a]) - (d[a + 1] - e[a + 1]) if a < n - 1 else d[a] - e[a]
        for a in range(n)
    ]
    word: list[int] = []
    for a in range(n, 0, -1):
        qa, ma, ea = frame.q[a - 1], m[a - 1], e[a - 1]
        for t in range(ea):
            word.extend(range(qa + ma + t, qa + t, -1))
    return permutation_from_word(word, frame.N), tuple(word)


def exists_P_I(
    M: Representation, e: Sequence[int]
) -> tuple[Representation, Representation] | None:
    """Projective P and injective I with 0 -> P -> M -> I -> 0 and dim P = e.

    Defined for irreducible simple instances, where e is weakly increasing
    and d - e weakly decreasing; returns None if either monotonicity fails
    (which would signal a criterion bug).
    """
    e = _check_dim_vector(e, M.n)
    if not is_simple(M, e):
        raise NotSimpleError(f"instance (M, {e}) is not simple")
    if not is_irreducible(M, e):
        raise NotIrreducibleError(f"Gr_{e}(M) is not irreducible")
    d = dimension_vector(M)
    n = M.n
    p_mult = [e[0]] + [e[a] - e[a - 1] for a in range(1, n)]
    i_mult = [
        (d[a] - e[a]) - (d[a + 1] - e[a + 1]) if a < n - 1 else d[a] - e[a]
        for a in range(n)
    ]
    if any(x < 0 for x in p_mult) or any(x < 0 for x in i_mult):
        return None
    P = Representation(n, {(a + 1, n): x for a, x in enumerate(p_mult) if x})
    I = Representation(n, {(1, a + 1): x for a, x in enumerate(i_mult) if x})
    assert dimension_vector(P) == tuple(e)
    assert dimension_vector(I) == tuple(da - ea for da, ea in zip(d, e))
    return P, I


def parabolic_blocks(M: Representation) -> tuple[int, ...]:
    """Multiplicities of the distinct summands in ascending chain order.

    These are the block sizes of the standard parabolic subgroup of GL_N
    induced by the automorphisms of M; they sum to N.
    """
    chain = catenoid_chain(M)
    if chain is None:
        raise NotCatenoidError(catenoid_witness(M))
    return tuple(M.multiplicity(iv) for iv in chain)
