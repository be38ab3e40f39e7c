"""Acceptance suite: one test per criterion, exact arithmetic, timed.

Every check is exact (integer/polynomial equality, tolerance zero); each
test prints one summary line.  Criterion 4 is split in two: the oracle
equivalences that hold are asserted in one test, and the classical claim
that the Hom bound is equivalent to irreducibility on simple instances
is asserted verbatim in another.  That claim is mathematically false
(the bound is equivalent to the staircase inequality, which is
sufficient but not necessary for irreducibility once flag steps may
coincide), so its test fails, printing the counterexamples; the failure
is expected and documented rather than patched over.
"""

from __future__ import annotations

import time

import pytest

from quivergrass.families import (
    catenoid_representations,
    complexes_chain_string,
    complexes_instance,
    degflag_instance,
    dimension_vectors_upto,
)
from quivergrass.poincare import (
    poincare_cells,
    poincare_formula,
    q_multinomial,
)
from quivergrass.reps import (
    Representation,
    dimension_vector,
    euler_form,
    ext_dim,
    hom_dim,
    interval_dimension,
    is_nonempty,
    is_simple,
)
from quivergrass.schubert import (
    build_frame,
    bruhat_leq,
    cell_dimension,
    components,
    enumerate_fixed_points,
    hom_criterion,
    inversions,
    is_irreducible,
    minimum_chain,
    staircase,
    weyl_word,
)
from quivergrass.verify import verify_corpus
from quivergrass.cli import main as cli_main

from oracles import (
    brute_chains,
    ext_dim_resolution,
    fibonacci,
    hom_dim_linalg,
    maximal_strings_without_adjacent_ones,
)


def _report(k: int, elapsed: float, message: str) -> None:
    print(f"ACCEPTANCE {k}: PASS ({elapsed:.1f}s) - {message}")


def test_acceptance_1_degflag_irreducibility_and_weyl_words():
    start = time.perf_counter()
    for n in range(1, 6):
        M, e = degflag_instance(n)
        assert is_irreducible(M, e)
        assert staircase(M, e)  # r - e is weakly decreasing, r_a - e_a = n
        perm, word = weyl_word(M, e)
        closed_form = tuple(
            r // 2 if r % 2 == 0 else n + 1 + r // 2 for r in range(1, 2 * n + 1)
        )
        assert perm == closed_form
        d = dimension_vector(M)
        de = tuple(x - y for x, y in zip(d, e))
        frame = build_frame(M, e)
        comp = components(frame)
        assert len(comp) == 1
        expected = n * (n + 1) // 2
        assert len(word) == expected
        assert cell_dimension(comp[0]) == expected
        assert euler_form(e, de) == expected
        assert inversions(perm) == expected
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _report(1, elapsed, "degflag n=1..5 irreducible, closed-form words, dims n(n+1)/2")


def test_acceptance_2_degflag_euler_characteristics():
    start = time.perf_counter()
    expected_chi = {1: 2, 2: 7, 3: 38}
    for n, chi in expected_chi.items():
        M, e = degflag_instance(n)
        frame = build_frame(M, e)
        # brute-force chain oracle, independent of the package enumerator
        brute = brute_chains(frame.n, frame.N, frame.q, frame.r, frame.f)
        assert len(brute) == chi
        assert len(enumerate_fixed_points(frame)) == chi
        formula = poincare_formula(M, e)
        cells = poincare_cells(frame)
        assert formula == cells
        assert formula(1) == chi
    M2, e2 = degflag_instance(2)
    assert poincare_formula(M2, e2).coefficients == (1, 2, 3, 1)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    _report(2, elapsed, "degflag Euler characteristics 2, 7, 38; formula = cells")


def test_acceptance_3_complexes_fibonacci_and_components(capsys):
    start = time.perf_counter()
    for n in range(1, 9):
        M, e = complexes_instance(n)
        frame = build_frame(M, e)
        chains = enumerate_fixed_points(frame)
        assert len(chains) == fibonacci(n + 2)
        comps = components(frame)
        expected = sorted(maximal_strings_without_adjacent_ones(n))
        assert sorted(complexes_chain_string(K) for K in comps) == expected
        for K in comps:
            assert cell_dimension(K) == complexes_chain_string(K).count("1")
    # the front-end report presents both counts side by side
    code = cli_main(["components", "--family", "complexes", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "fixed points: 5" in out
    assert "components (Bruhat-maximal fixed points): 2" in out
    assert "no two adjacent 1s" in out
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _report(
        3,
        elapsed,
        "complexes n=1..8: F_{n+2} fixed points, maximal-string components, "
        "dimension = number of 1s; both counts reported",
    )


def test_acceptance_4_oracle_equivalences_exhaustive():
    # n <= 4, at most 6 summands with multiplicity, every e <= dim M:
    # poincare_formula = poincare_cells, nonemptiness closed form = chain
    # existence, and |components| = 1 iff is_irreducible, plus the other
    # cross-properties wired into the harness.
    start = time.perf_counter()
    report = verify_corpus(4, 6)
    elapsed = time.perf_counter() - start
    assert report.ok, "\n".join(report.failures)
    assert report.representations == 5227
    assert report.instances == 795734
    assert elapsed < 300.0
    _report(
        4,
        elapsed,
        f"{report.instances} instances: formula = cells, nonempty = existence, "
        "irreducible iff one component",
    )


def test_acceptance_4_hom_criterion_iff_irreducible_on_simple():
    # Verbatim clause: hom_criterion <=> is_irreducible on every simple
    # instance of the same corpus.  The Hom bound is equivalent to the
    # staircase inequality (r - e weakly decreasing), which is sufficient
    # but NOT necessary for irreducibility: when consecutive flag steps
    # coincide (f_a = f_{a+1}) an instance can be irreducible while the
    # bound fails.  Smallest counterexample: M[1,1] + M[1,2]^2 with
    # e = (2, 1), a projective line.  The clause is therefore expected to
    # fail; it is asserted as stated, and the disagreements are listed.
    start = time.perf_counter()
    mismatches = []
    for n in range(1, 5):
        for M in catenoid_representations(n, 6):
            d = dimension_vector(M)
            for e in dimension_vectors_upto(d):
                if not is_simple(M, e) or not is_nonempty(M, e):
                    continue
                hom = hom_criterion(M, e)
                irr = is_irreducible(M, e)
                if hom != irr:
                    mismatches.append((M.summands, e, hom, irr))
    elapsed = time.perf_counter() - start
    assert elapsed < 300.0
    if not mismatches:
        _report(4, elapsed, "hom criterion iff irreducible on simple instances")
    assert not mismatches, (
        f"hom_criterion <=> is_irreducible fails on {len(mismatches)} simple "
        f"instances (all irreducible with the Hom bound false); first five: "
        f"{mismatches[:5]}.  The Hom bound equals the staircase inequality, "
        "which coinciding flag steps render non-necessary."
    )


def test_acceptance_5_hom_ext_euler_consistency():
    start = time.perf_counter()
    for n in range(1, 7):
        ivs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
        for x in ivs:
            for y in ivs:
                lhs = hom_dim(x, y) - ext_dim(x, y, n)
                rhs = euler_form(
                    interval_dimension(x, n), interval_dimension(y, n)
                )
                assert lhs == rhs
                if n <= 4:
                    assert hom_dim(x, y) == hom_dim_linalg(x, y, n)
                    assert ext_dim(x, y, n) == ext_dim_resolution(x, y, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _report(5, elapsed, "hom - ext = euler form (n <= 6); intertwiner oracle (n <= 4)")


def test_acceptance_6_cell_dimensions_against_flag_multinomials():
    # With the lower-bound constraint dropped (q = 0, r = N: the frame of
    # P_1^N), the cell-dimension generating function over all chains must
    # be the q-multinomial of the ambient flag type.
    start = time.perf_counter()

    def flag_types(N, n):
        if n == 0:
            yield ()
            return
        for rest in flag_types(N, n - 1):
            lo = rest[-1] if rest else 0
            for t in range(lo, N + 1):
                yield rest + (t,)

    checked = 0
    for n in range(1, 4):
        for N in range(0, 8):
            M = (
                Representation(n, {(1, n): N}) if N else Representation(n)
            )
            for f in flag_types(N, n):
                frame = build_frame(M, f)
                assert poincare_cells(frame) == q_multinomial(N, f)
                checked += 1
    elapsed = time.perf_counter() - start
    assert checked > 300
    assert elapsed < 30.0
    _report(6, elapsed, f"{checked} ambient flag types: cell sums = q-multinomials")


def test_acceptance_7_combinatorial_shadows_of_the_geometry():
    # The scheme-level statements are represented by their combinatorial
    # shadows: complete cell decompositions (coefficients sum to the
    # fixed-point count), a unique Bruhat minimum, and the top-cell
    # dimension identity for staircase instances.
    start = time.perf_counter()
    cases = [
        degflag_instance(3),
        complexes_instance(4),
        (Representation(3, {(1, 2): 2, (2, 3): 1, (3, 3): 1}), (1, 2, 1)),
    ]
    for M, e in cases:
        frame = build_frame(M, e)
        chains = enumerate_fixed_points(frame)
        cells = poincare_cells(frame)
        assert cells(1) == len(chains)
        bottom = minimum_chain(frame)
        assert all(bruhat_leq(bottom, K) for K in chains)
        if is_simple(M, e) and staircase(M, e):
            d = dimension_vector(M)
            de = tuple(x - y for x, y in zip(d, e))
            assert cells.degree == euler_form(e, de)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _report(7, elapsed, "cell totals, unique Bruhat minimum, top-cell dimensions")
