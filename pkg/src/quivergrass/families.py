"""Built-in instance families and generators for exhaustive/random corpora.

Two named families recur everywhere as worked examples and test anchors:

- ``degflag n``: the sum of all projectives and all injectives with
  e = (1, 2, ..., n).  Irreducible, with frame r_a = n + a, q_a = a - 1;
  its Euler characteristics are 2, 7, 38, 295, ... for n = 1, 2, 3, 4.
- ``complexes n``: M[1,1] + M[1,2] + M[2,3] + ... + M[n-1,n] + M[n,n]
  with e = (1, ..., 1), the two-term-complex family with frame
  q_a = a - 1, r_a = a + 1.  Its fixed points biject with binary strings
  of length n avoiding two adjacent ones (a Fibonacci count); the
  components are the Bruhat-maximal strings and each component dimension
  is the number of ones in its string.
"""

from __future__ import annotations

from itertools import product
from random import Random
from typing import Iterator

from .reps import DimVector, Interval, Representation, interval_leq

Instance = tuple[Representation, DimVector]


def degflag_instance(n: int) -> Instance:
    """Sum of all projectives (i, n) and injectives (1, j); e = (1..n)."""
    if n < 1:
        raise ValueError(f"family size must be positive, got {n}")
    summands: dict[Interval, int] = {}
    for a in range(1, n + 1):
        for iv in ((a, n), (1, a)):
            summands[iv] = summands.get(iv, 0) + 1
    return Representation(n, summands), tuple(range(1, n + 1))


def complexes_instance(n: int) -> Instance:
    """M[1,1] + sum of M[i,i+1] + M[n,n]; e = (1, ..., 1)."""
    if n < 1:
        raise ValueError(f"family size must be positive, got {n}")
    summands: dict[Interval, int] = {(1, 1): 1}
    for i in range(1, n):
        summands[(i, i + 1)] = summands.get((i, i + 1), 0) + 1
    summands[(n, n)] = summands.get((n, n), 0) + 1
    return Representation(n, summands), (1,) * n


FAMILIES = {
    "degflag": degflag_instance,
    "complexes": complexes_instance,
}


def complexes_chain_string(chain) -> str:
    """Binary-string label of a complexes-family fixed point.

    Bit a is 0 when K_a = {1..a} (the flag step stays low) and 1 when the
    step jumps to {1..a-1, a+1}.  No two adjacent bits can both be 1.
    """
    bits = []
    for a, K in enumerate(chain, start=1):
        bits.append("0" if K == tuple(range(1, a + 1)) else "1")
    return "".join(bits)


def catenoid_representations(n: int, max_summands: int) -> Iterator[Representation]:
    """All catenoid representations on n vertices with at most the given
    number of summands counted with multiplicity, including the zero
    representation.  Deterministic order.
    """
    intervals = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]

    def rec(
        prefix: tuple[tuple[Interval, int], ...], last: Interval | None, budget: int
    ) -> Iterator[Representation]:
        yield Representation(n, prefix)
        if budget == 0:
            return
        for iv in intervals:
            if last is not None and (iv == last or not interval_leq(last, iv)):
                continue
            for mult in range(1, budget + 1):
                yield from rec(prefix + ((iv, mult),), iv, budget - mult)

    yield from rec((), None, max_summands)


def dimension_vectors_upto(d: DimVector) -> Iterator[DimVector]:
    """All e with 0 <= e_a <= d_a, in lexicographic order."""
    yield from product(*(range(x + 1) for x in d))


def random_catenoid_instance(
    rng: Random, max_n: int, max_summands: int
) -> Instance:
    """A random catenoid instance, for sampled verification runs."""
    n = rng.randint(1, max_n)
    total = rng.randint(1, max_summands)
    summands: dict[Interval, int] = {}
    i = rng.randint(1, n)
    j = rng.randint(i, n)
    while total > 0:
        take = rng.randint(1, total)
        summands[(i, j)] = summands.get((i, j), 0) + take
        total -= take
        # Move strictly up in the interval order when possible.
        choices = [
            (k, l)
            for k in range(i, n + 1)
            for l in range(max(j, k), n + 1)
            if (k, l) != (i, j)
        ]
        if not choices or total == 0:
            break
        i, j = rng.choice(choices)
    M = Representation(n, summands)
    d = [0] * n
    for (i, j), m in M.summands:
        for a in range(i - 1, j):
            d[a] += m
    e = tuple(rng.randint(0, x) for x in d)
    return M, e
