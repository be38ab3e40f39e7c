"""Exhaustive cross-verification of the library against itself.

For every catenoid instance in a bounded corpus (all catenoid M up to a
summand budget, all e <= dim M) this harness runs every dual-route check
the package promises:

- the nonemptiness closed form against actual chain existence;
- the stratification Poincare polynomial against the cell oracle, and its
  value at 1 against the fixed-point count;
- the closed-form irreducibility test against the count of Bruhat-maximal
  chains, the hom bound against the staircase inequality, and the
  staircase implication for simple instances;
- chain invariants, the lexicographic enumeration order, and the unique
  Bruhat minimum;
- the fixed-point refinement of the strata: per-chain subrepresentation
  types computed two independent ways, and stratum sizes against ordinary
  multinomials;
- the product rule for decompositions into simple factors;
- Weyl word length/reducedness/top-chain identities on staircase simple
  instances, together with the projective/injective extension pair.

A report collects counts and any failures; an empty failure list is the
pass condition.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from random import Random

from .families import (
    catenoid_representations,
    dimension_vectors_upto,
    random_catenoid_instance,
)
from .poincare import (
    _block_ranges,
    _mul_coeffs,
    _q_multinomial_coeffs,
    _stratum_from_ranges,
    fiber_dim,
    iter_strata,
    multinomial,
    poincare_formula,
)
from .reps import (
    DimVector,
    Representation,
    decompose_simple,
    dimension_vector,
    euler_form,
    ext_dim,
    hom_dim,
    is_nonempty,
    is_simple,
    minimal_resolution,
)
from .schubert import (
    ResolutionFrame,
    _subrep_mults,
    build_frame,
    cell_dimension,
    chain_of_permutation,
    dominant_chain,
    exists_P_I,
    hom_criterion,
    inversions,
    iter_fixed_points,
    maximal_chains,
    parabolic_blocks,
    staircase,
    subrep_type,
    weyl_word,
)

MAX_REPORTED_FAILURES = 25


@dataclass
class VerifyReport:
    max_n: int
    max_summands: int
    representations: int = 0
    instances: int = 0
    nonempty_instances: int = 0
    chains_checked: int = 0
    samples: int = 0
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return (
            f"verify: n <= {self.max_n}, summands <= {self.max_summands}: "
            f"{self.representations} representations, {self.instances} instances "
            f"({self.nonempty_instances} nonempty, {self.chains_checked} chains), "
            f"{self.samples} random samples, {self.seconds:.1f}s: {status}"
        )


def _record(report: VerifyReport, message: str) -> None:
    if len(report.failures) < MAX_REPORTED_FAILURES:
        report.failures.append(message)
    elif len(report.failures) == MAX_REPORTED_FAILURES:
        report.failures.append("... more failures suppressed")


class _RepContext:
    """Per-representation precomputation shared across all e."""

    def __init__(self, M: Representation):
        self.M = M
        self.n = M.n
        self.d = dimension_vector(M)
        self.q, self.r = minimal_resolution(M)
        self.N = M.total_summands
        summands: list[tuple[int, int]] = []
        for iv, mult in M.summands:
            summands.extend([iv] * mult)
        summands.sort()
        self.summands = tuple(summands)
        self.ranges = _block_ranges(self.summands)
        self.blocks = [(iv, hi - lo + 1) for iv, lo, hi in self.ranges]

    def frame(self, e: DimVector) -> ResolutionFrame:
        f = tuple(ea + qa for ea, qa in zip(e, self.q))
        return ResolutionFrame(
            n=self.n, N=self.N, q=self.q, r=self.r, f=f, summands=self.summands
        )


def _chain_valid(frame: ResolutionFrame, chain) -> bool:
    prev: tuple[int, ...] = ()
    prevset: frozenset[int] = frozenset()
    for a in range(1, frame.n + 1):
        K = chain[a - 1]
        qa = frame.q[a - 1]
        if len(K) != frame.f[a - 1]:
            return False
        if any(x >= y for x, y in zip(K, K[1:])):
            return False
        if K and (K[0] < 1 or K[-1] > frame.r[a - 1]):
            return False
        if K[:qa] != tuple(range(1, qa + 1)):
            return False
        Kset = frozenset(K)
        if not prevset <= Kset:
            return False
        prev, prevset = K, Kset
    return True


def _entry_subrep_mults(ctx: _RepContext, chain) -> dict[tuple[int, int], int]:
    # Independent route to the subrepresentation type: basis index k joins
    # the flag at its entry vertex and survives to the right end of its
    # summand interval; everything entering later than that end is killed.
    entry: dict[int, int] = {}
    for a in range(ctx.n, 0, -1):
        for k in chain[a - 1]:
            entry[k] = a
    mults: dict[tuple[int, int], int] = {}
    for k, a in entry.items():
        j = ctx.summands[k - 1][1]
        if a <= j:
            key = (a, j)
            mults[key] = mults.get(key, 0) + 1
    return mults


def _check_instance(ctx: _RepContext, e: DimVector, report: VerifyReport) -> None:
    M = ctx.M
    frame = ctx.frame(e)
    chains = list(iter_fixed_points(frame))
    report.chains_checked += len(chains)

    closed = is_nonempty(M, e)
    if closed != bool(chains):
        _record(report, f"nonempty mismatch for {M.summands} e={e}")
        return
    if not chains:
        return
    report.nonempty_instances += 1

    minimum = tuple(tuple(range(1, fa + 1)) for fa in frame.f)
    if chains[0] != minimum:
        _record(report, f"lex-minimal chain is not the telescope for {M.summands} e={e}")
    flat_min = [x for K in minimum for x in K]
    prev = None
    cell_acc: list[int] = []
    stratum_sizes: Counter = Counter()
    for K in chains:
        if not _chain_valid(frame, K):
            _record(report, f"invalid chain {K} for {M.summands} e={e}")
            return
        if prev is not None and not prev < K:
            _record(report, f"enumeration out of order for {M.summands} e={e}")
            return
        prev = K
        flat = [x for Ka in K for x in Ka]
        if any(x < y for x, y in zip(flat, flat_min)):
            _record(report, f"chain below the minimum for {M.summands} e={e}")
        d = cell_dimension(K)
        if len(cell_acc) <= d:
            cell_acc.extend([0] * (d + 1 - len(cell_acc)))
        cell_acc[d] += 1
        mults_a = _subrep_mults(frame, K)
        mults_b = _entry_subrep_mults(ctx, K)
        if mults_a != mults_b:
            _record(report, f"subrep type mismatch at {K} for {M.summands} e={e}")
            return
        dims = [0] * ctx.n
        for (i, j), m in mults_a.items():
            for a in range(i - 1, j):
                dims[a] += m
        if tuple(dims) != e:
            _record(report, f"subrep dimension mismatch at {K} for {M.summands} e={e}")
        dec = _stratum_from_ranges(ctx.ranges, K, ctx.n)
        sums = tuple(sum(vec[a] for vec in dec) for a in range(ctx.n))
        if sums != e:
            _record(report, f"stratum of chain does not sum to e at {K}")
        stratum_sizes[dec] += 1

    # One pass over the strata computes both the stratification polynomial
    # and the expected multinomial weight of each stratum.
    formula_acc: list[int] = []
    expected: dict = {}
    for dec in iter_strata(M, e):
        term: tuple[int, ...] = (1,)
        weight = 1
        for ((i, j), mult), vec in zip(ctx.blocks, dec):
            dims_l = vec[i - 1 : j]
            term = _mul_coeffs(term, _q_multinomial_coeffs(mult, dims_l))
            weight *= multinomial(mult, dims_l)
        shift = fiber_dim(M, dec)
        need = shift + len(term)
        if len(formula_acc) < need:
            formula_acc.extend([0] * (need - len(formula_acc)))
        for k, c in enumerate(term):
            formula_acc[shift + k] += c
        expected[dec] = weight
    while formula_acc and formula_acc[-1] == 0:
        formula_acc.pop()
    if formula_acc != cell_acc:
        _record(
            report,
            f"poincare mismatch for {M.summands} e={e}: "
            f"formula {formula_acc} cells {cell_acc}",
        )
    if sum(formula_acc) != len(chains):
        _record(report, f"euler characteristic mismatch for {M.summands} e={e}")
    if dict(stratum_sizes) != expected:
        _record(report, f"strata refinement mismatch for {M.summands} e={e}")

    comps = maximal_chains(chains)
    irr = dominant_chain(frame) is not None
    if (len(comps) == 1) != irr:
        _record(
            report,
            f"irreducibility disagrees with component count "
            f"({len(comps)}) for {M.summands} e={e}",
        )
    if irr and comps[0] != dominant_chain(frame):
        _record(report, f"dominant chain is not the maximal chain for {M.summands} e={e}")
    top = len(cell_acc) - 1
    if max(cell_dimension(K) for K in comps) != top:
        _record(report, f"degree/top-cell mismatch for {M.summands} e={e}")

    simple = is_simple(M, e)
    stair = staircase(M, e)
    if hom_criterion(M, e) != stair:
        _record(report, f"hom criterion != staircase inequality for {M.summands} e={e}")
    if simple and stair and not irr:
        _record(report, f"staircase holds but reducible for simple {M.summands} e={e}")

    # Fixed points multiply over the simple factors.
    product_count = 1
    for Mf, ef in decompose_simple(M, e):
        sub = build_frame(Mf, ef)
        product_count *= sum(1 for _ in iter_fixed_points(sub))
    if product_count != len(chains):
        _record(report, f"factor product count mismatch for {M.summands} e={e}")

    if irr and simple and stair:
        perm, word = weyl_word(M, e)
        dim_expected = euler_form(e, tuple(x - y for x, y in zip(ctx.d, e)))
        if len(word) != dim_expected or inversions(perm) != len(word):
            _record(report, f"weyl word not reduced for {M.summands} e={e}")
        if chain_of_permutation(frame, perm) != comps[0]:
            _record(report, f"weyl chain is not the top chain for {M.summands} e={e}")
        if cell_dimension(comps[0]) != dim_expected:
            _record(report, f"top cell dimension mismatch for {M.summands} e={e}")
        pair = exists_P_I(M, e)
        if pair is None:
            _record(report, f"missing P/I pair for staircase simple {M.summands} e={e}")
        else:
            P, I = pair
            if dimension_vector(P) != e or subrep_type(frame, comps[0]) != P:
                _record(report, f"open-cell subrep is not P for {M.summands} e={e}")


def _check_representation(ctx: _RepContext, report: VerifyReport) -> None:
    M = ctx.M
    if tuple(ra - qa for ra, qa in zip(ctx.r, ctx.q)) != ctx.d:
        _record(report, f"r - q != dim M for {M.summands}")
    if sum(parabolic_blocks(M)) != ctx.N and ctx.N > 0:
        _record(report, f"parabolic blocks do not sum to N for {M.summands}")
    for X in M.distinct:
        for Y in M.distinct:
            lhs = hom_dim(X, Y) - ext_dim(X, Y, M.n)
            rhs = euler_form(
                dimension_vector(Representation(M.n, {X: 1})),
                dimension_vector(Representation(M.n, {Y: 1})),
            )
            if lhs != rhs:
                _record(report, f"hom - ext != euler form for {X}, {Y} on n={M.n}")


def verify_corpus(
    max_n: int,
    max_summands: int,
    samples: int = 0,
    seed: int | None = None,
    progress=None,
) -> VerifyReport:
    """Run every cross-check over the exhaustive corpus, then random samples."""
    report = VerifyReport(max_n=max_n, max_summands=max_summands)
    start = time.perf_counter()
    for n in range(1, max_n + 1):
        for M in catenoid_representations(n, max_summands):
            report.representations += 1
            ctx = _RepContext(M)
            _check_representation(ctx, report)
            for e in dimension_vectors_upto(ctx.d):
                report.instances += 1
                _check_instance(ctx, e, report)
            if progress is not None and report.representations % 500 == 0:
                progress(report)
    if samples and seed is not None:
        rng = Random(seed)
        for _ in range(samples):
            M, e = random_catenoid_instance(rng, max_n + 2, max_summands + 2)
            report.samples += 1
            report.instances += 1
            _check_instance(_RepContext(M), e, report)
    # Spot-check that the public formula agrees with the harness's inline
    # accumulation (the main loop runs the same helpers directly).
    for n in range(1, min(max_n, 3) + 1):
        M = Representation(n, {(1, n): 2})
        e = tuple(1 for _ in range(n))
        if poincare_formula(M, e).coefficients != _q_multinomial_coeffs(2, e):
            _record(report, "poincare_formula drifted from the harness accumulation")
    report.seconds = time.perf_counter() - start
    return report
