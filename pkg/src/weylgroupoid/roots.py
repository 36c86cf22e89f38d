"""Reflection application, root generation, rank-two data, inversion sets.

Real roots are the images of simple roots under arbitrary reflection
words; generation enumerates them breadth-first up to a height cutoff and
certifies the result "finite" exactly when every reflection maps the
computed sets onto each other, so a cutoff that is too small can never be
mistaken for a complete system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from .intmat import (
    Vector,
    basis_vector,
    height,
    is_nonneg,
    is_nonpos,
    mat_mul,
    mat_vec,
    neg,
)
from .scheme import (
    FINITE,
    GENERATED,
    TRUNCATED,
    RootGroupoidScheme,
    check_generator,
    check_object,
    reflection_matrix,
)


def reflect(s: RootGroupoidScheme, i: int, a: int, r: Vector) -> Vector:
    """Apply the reflection at (i, a) to a vector in a-coordinates.

    Coordinate i becomes -r[i] plus the coefficient-weighted sum of the
    other coordinates; the rest are unchanged.  The result is expressed in
    (i |> a)-coordinates.
    """
    check_generator(s, i)
    check_object(s, a)
    if len(r) != s.rank:
        raise ValueError(f"vector has {len(r)} coordinates, expected {s.rank}")
    coeffs = s.coefficients[i][a]
    new_i = -r[i] + sum(coeffs[j] * r[j] for j in range(s.rank) if j != i)
    return tuple(new_i if j == i else r[j] for j in range(s.rank))


def generate_roots(s: RootGroupoidScheme, cutoff: int) -> RootGroupoidScheme:
    """Materialize the real-root sets of a generated-mode scheme.

    Sweeps reflections over the accumulated per-object vector sets,
    keeping every image of height at most ``cutoff``, until a full sweep
    adds nothing.  The returned scheme stores the positive halves and is
    marked "finite" if every reflection maps the accumulated sets
    bijectively onto each other, "truncated" otherwise.
    """
    if s.mode != GENERATED:
        raise ValueError("root generation applies to generated-mode schemes")
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")

    found: list[set[Vector]] = [
        {basis_vector(s.rank, j) for j in range(s.rank)} for _ in range(s.n_objects)
    ]
    changed = True
    while changed:
        changed = False
        for i in range(s.rank):
            for a in range(s.n_objects):
                target = s.action[i][a]
                for r in list(found[a]):
                    v = reflect(s, i, a, r)
                    if height(v) <= cutoff and v not in found[target]:
                        found[target].add(v)
                        changed = True

    positive = tuple(tuple(sorted(v for v in vs if is_nonneg(v))) for vs in found)

    status = FINITE
    sets = [frozenset(pos) | frozenset(neg(r) for r in pos) for pos in positive]
    for a in range(s.n_objects):
        if len(sets[a]) != len(found[a]):
            status = TRUNCATED  # some orbit vector had mixed signs
    for i in range(s.rank):
        for a in range(s.n_objects):
            mat = reflection_matrix(s, i, a)
            if frozenset(mat_vec(mat, r) for r in sets[a]) != sets[s.action[i][a]]:
                status = TRUNCATED
    return replace(s, positive_roots=positive, status=status, cutoff=cutoff)


def _chain_walk(s: RootGroupoidScheme, i: int, j: int, a: int) -> Iterator[Vector]:
    """Yield the alternating rank-two chain roots at a, in a-coordinates.

    The m-th root is the image of the next simple root of the zigzag
    i, j, i, ... under the first m reflections of the zigzag anchored at
    a.  In a finite rank-two cone the walk produces exactly the cone and
    reaches the j-th simple root last; the caller decides when to stop.
    """
    letters = (i, j)
    transform = None  # identity until the first step
    obj = a
    m = 0
    while True:
        letter = letters[m % 2]
        simple = basis_vector(s.rank, letter)
        yield simple if transform is None else mat_vec(transform, simple)
        obj = s.action[letter][obj]
        mat = reflection_matrix(s, letter, obj)
        transform = mat if transform is None else mat_mul(transform, mat)
        m += 1


def _require_two_generators(s: RootGroupoidScheme, i: int, j: int, a: int) -> None:
    check_generator(s, i)
    check_generator(s, j)
    check_object(s, a)
    if i == j:
        raise ValueError("rank-two data requires two distinct generators")
    if s.positive_roots is None:
        raise ValueError("root sets are not materialized")


def _max_height(s: RootGroupoidScheme) -> int:
    return max(height(r) for pos in s.positive_roots for r in pos)


def rank_two_count(s: RootGroupoidScheme, i: int, j: int, a: int) -> int | float:
    """Number of positive roots of an object supported on two generators.

    For finite schemes this is a straight count over the stored set.  For
    truncated schemes the alternating chain is walked instead, and
    ``math.inf`` is returned when the chain escapes the generation cutoff
    before closing.
    """
    _require_two_generators(s, i, j, a)
    if s.status == FINITE:
        return sum(
            1
            for r in s.positive_roots[a]
            if all(r[k] == 0 for k in range(s.rank) if k not in (i, j))
        )
    bound = s.cutoff if s.cutoff is not None else 4 * _max_height(s)
    last = basis_vector(s.rank, j)
    seen: set[Vector] = set()
    d = 0
    for root in _chain_walk(s, i, j, a):
        if height(root) > bound:
            return math.inf
        if root in seen:
            raise ValueError("rank-two chain cycles without closing; scheme data is inconsistent")
        seen.add(root)
        d += 1
        if root == last:
            return d


def rank_two_positive_chain(s: RootGroupoidScheme, i: int, j: int, a: int) -> tuple[Vector, ...]:
    """The rank-two cone of positive roots at a, in chain order.

    Starts at the i-th simple root and ends at the j-th; the chain length
    equals the rank-two count.  Raises if the rank-two component does not
    close (infinite, or beyond the generation cutoff).
    """
    _require_two_generators(s, i, j, a)
    bound = _max_height(s)
    if s.cutoff is not None:
        bound = max(bound, s.cutoff)
    last = basis_vector(s.rank, j)
    chain: list[Vector] = []
    seen: set[Vector] = set()
    for root in _chain_walk(s, i, j, a):
        if height(root) > bound or root in seen:
            raise ValueError("rank-two component at this object is infinite or truncated")
        seen.add(root)
        chain.append(root)
        if root == last:
            return tuple(chain)


@dataclass(frozen=True)
class InversionSet:
    """Positive roots of the source object inverted by a word.

    Entries are (position, root) pairs ordered by position, where
    position r (1-based from the left) is the letter whose application
    turns the root negative for good.  For a reduced word of length m the
    positions are exactly 1..m.
    """

    entries: tuple[tuple[int, Vector], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def roots(self) -> frozenset[Vector]:
        return frozenset(r for _, r in self.entries)


def inversion_set(s: RootGroupoidScheme, letters: Sequence[int], a: int) -> InversionSet:
    """Positive roots of object a sent to negative roots by the word."""
    check_object(s, a)
    if s.positive_roots is None:
        raise ValueError("root sets are not materialized")
    if s.status != FINITE:
        raise ValueError("inversion sets require finite root data")
    letters = tuple(letters)
    for i in letters:
        check_generator(s, i)
    m = len(letters)
    entries = []
    for beta in s.positive_roots[a]:
        v = beta
        obj = a
        negative_after = []  # after applying the last t letters, t = 1..m
        for t in range(m):
            letter = letters[m - 1 - t]
            v = reflect(s, letter, obj, v)
            obj = s.action[letter][obj]
            negative_after.append(is_nonpos(v))
        if m > 0 and negative_after[-1]:
            t_star = m  # start of the final negative run, as an application step
            while t_star > 1 and negative_after[t_star - 2]:
                t_star -= 1
            entries.append((m - t_star + 1, beta))
    entries.sort()
    return InversionSet(tuple(entries))
