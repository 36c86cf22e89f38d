"""Braid-move rewriting on words and the weak exchange factorization.

A braid move replaces an alternating two-letter segment of a word by the
opposite alternation, where the segment length equals the rank-two count
of the letter pair at the object the segment acts from.  Moves preserve
base, length, and evaluation.  Any two reduced words of the same element
are connected by such moves, so braid search decides the word problem for
reduced words; the search enforces this as a runtime assertion and fails
hard if it would have to leave the element's reduced-word set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groupoid import (
    GroupoidElement,
    Word,
    c_element,
    canonical_reduced_word,
    compose,
    element_of_word,
    generator_element,
    inverse,
    length,
    word_target,
)
from .intmat import basis_vector, mat_col
from .roots import rank_two_count
from .scheme import RootGroupoidScheme, act, act_word, check_generator, check_object


@dataclass(frozen=True)
class BraidMove:
    """One application of a rank-two relation inside a word.

    position  index (0-based) of the leftmost letter of the segment
    first     letter the segment currently starts with
    second    the alternating partner letter
    m         segment length, the rank-two count of the pair
    anchor    object the segment's rightmost letter acts from
    """

    position: int
    first: int
    second: int
    m: int
    anchor: int


@dataclass(frozen=True)
class MoveChain:
    start: Word
    moves: tuple[BraidMove, ...]
    end: Word


def _sources_along(s: RootGroupoidScheme, w: Word) -> list[int]:
    """Object each letter acts from; entry k is for letters[k]."""
    n = len(w.letters)
    src = [0] * n if n else []
    obj = w.base
    for k in range(n - 1, -1, -1):
        src[k] = obj
        obj = s.action[w.letters[k]][obj]
    return src


def applicable_moves(s: RootGroupoidScheme, w: Word) -> list[BraidMove]:
    """All braid moves applicable to the word, ordered by position.

    A segment qualifies when it alternates between two distinct letters
    and its length equals the (finite) rank-two count of the pair at the
    object its rightmost letter acts from.
    """
    check_object(s, w.base)
    for i in w.letters:
        check_generator(s, i)
    n = len(w.letters)
    src = _sources_along(s, w)
    moves = []
    for p in range(n - 1):
        x, y = w.letters[p], w.letters[p + 1]
        if x == y:
            continue
        m = rank_two_count(s, x, y, src[p])
        if not isinstance(m, int) or p + m > n:
            continue
        if all(w.letters[p + t] == (x if t % 2 == 0 else y) for t in range(m)):
            moves.append(BraidMove(p, x, y, m, src[p + m - 1]))
    return moves


def apply_move(s: RootGroupoidScheme, w: Word, mv: BraidMove) -> Word:
    """Replace the segment by the opposite alternation.

    The result has the same base, length, and evaluation.  Applying the
    induced move at the same position again restores the original word.
    """
    if mv not in applicable_moves(s, w):
        raise ValueError("move is not applicable to this word")
    swapped = tuple(
        mv.second if t % 2 == 0 else mv.first for t in range(mv.m)
    )
    letters = w.letters[: mv.position] + swapped + w.letters[mv.position + mv.m :]
    return Word(w.base, letters)


def _neighbors(s: RootGroupoidScheme, w: Word) -> list[Word]:
    return [apply_move(s, w, mv) for mv in applicable_moves(s, w)]


def _word_key(w: Word):
    return (w.letters, w.base)


def braid_connect(s: RootGroupoidScheme, u: Word, v: Word) -> MoveChain:
    """A shortest chain of braid moves transforming u into v.

    Both words must be reduced, share their base, and evaluate to the
    same element; the chain then exists.  Bidirectional breadth-first
    search with deterministic tie-breaking; exhausting the reduced-word
    set without meeting indicates inconsistent scheme data and raises.
    """
    if u.base != v.base:
        raise ValueError("words have different bases")
    gu = element_of_word(s, u)
    gv = element_of_word(s, v)
    if gu != gv:
        if gu.target != gv.target:
            raise ValueError(
                "words evaluate to different elements: target mismatch: "
                f"{s.objects[gu.target]} != {s.objects[gv.target]}"
            )
        raise ValueError("words evaluate to different elements")
    if length(s, gu) != len(u.letters):
        raise ValueError("first word is not reduced")
    if length(s, gv) != len(v.letters):
        raise ValueError("second word is not reduced")

    if u == v:
        return MoveChain(u, (), v)

    parent_u: dict[Word, tuple[Word, BraidMove] | None] = {u: None}
    parent_v: dict[Word, tuple[Word, BraidMove] | None] = {v: None}
    frontier_u, frontier_v = [u], [v]

    meet = None
    while meet is None:
        if not frontier_u and not frontier_v:
            raise RuntimeError(
                "braid search exhausted the reduced words without connecting; "
                "scheme data is inconsistent"
            )
        # expand the smaller frontier; ties expand the u side
        if frontier_u and (not frontier_v or len(frontier_u) <= len(frontier_v)):
            side, other = parent_u, parent_v
            frontier = frontier_u
        else:
            side, other = parent_v, parent_u
            frontier = frontier_v
        nxt = []
        meets = []
        for w in sorted(frontier, key=_word_key):
            for mv in applicable_moves(s, w):
                w2 = apply_move(s, w, mv)
                if w2 not in side:
                    side[w2] = (w, mv)
                    nxt.append(w2)
                    if w2 in other:
                        meets.append(w2)
        if side is parent_u:
            frontier_u = nxt
        else:
            frontier_v = nxt
        if meets:
            meet = min(meets, key=_word_key)

    def path_to(parents, w):
        steps = []
        while parents[w] is not None:
            prev, mv = parents[w]
            steps.append((prev, mv, w))
            w = prev
        steps.reverse()
        return steps

    forward = path_to(parent_u, meet)  # u -> meet
    backward = path_to(parent_v, meet)  # v -> meet

    moves = [mv for _, mv, _ in forward]
    # reverse the v-side path: the inverse of a move is the move at the
    # same position with the letters swapped
    for prev, mv, child in reversed(backward):
        moves.append(BraidMove(mv.position, mv.second, mv.first, mv.m, mv.anchor))

    # the chain is self-checked before being returned
    w = u
    for mv in moves:
        w = apply_move(s, w, mv)
    if w != v:
        raise RuntimeError("assembled move chain does not reach the target word")
    return MoveChain(u, tuple(moves), v)


def all_reduced_words(s: RootGroupoidScheme, g: GroupoidElement) -> set[Word]:
    """Braid-move closure of the canonical reduced word of g.

    By braid connectivity this is the set of all reduced words of g.
    """
    if g.is_zero:
        raise ValueError("the zero element has no reduced words")
    start = canonical_reduced_word(s, g)
    seen = {start}
    frontier = [start]
    while frontier:
        w = frontier.pop()
        for w2 in _neighbors(s, w):
            if w2 not in seen:
                seen.add(w2)
                frontier.append(w2)
    return seen


@dataclass(frozen=True)
class WeakExchangeFactorization:
    """Normal form of a reduced word as a product of relation blocks.

    The element of the factored word equals the product of the blocks
    C[t] over t = 1..r, where block t is the alternating word on the
    letter pair (j[t], k[t]) of length m(j[t], k[t]; anchor) - 1 based at
    anchors[t].  k has r + 1 entries; the trailing one is the absorbed
    letter.  Multiplying the word by that letter on the right equals
    multiplying the emitted letter k[0] on the left of the same blocks at
    shifted anchors.
    """

    r: int
    j: tuple[int, ...]
    k: tuple[int, ...]
    anchors: tuple[int, ...]


def _product_of_blocks(s: RootGroupoidScheme, words: list[Word]) -> GroupoidElement:
    result = element_of_word(s, words[-1])
    for w in reversed(words[:-1]):
        result = compose(element_of_word(s, w), result)
        if result.is_zero:
            raise RuntimeError("relation blocks do not compose; factorization is invalid")
    return result


def weak_exchange_factor(
    s: RootGroupoidScheme, w: Word, j: int
) -> WeakExchangeFactorization:
    """Factor a reduced word into relation blocks that absorb a letter.

    Requires the word to be reduced and to map the j-th simple root of
    its base to a simple root at its target (the weak exchange
    hypothesis).  Blocks are extracted greedily from the left; the
    returned factorization is re-verified by matrix products before being
    returned, including the absorption identities in both directions and
    the block-size bookkeeping.
    """
    check_generator(s, j)
    m = len(w.letters)
    if m < 1:
        raise ValueError("word must have at least one letter")
    g = element_of_word(s, w)
    if length(s, g) != m:
        raise ValueError("word is not reduced")
    image = mat_col(g.matrix, j)
    simple_index = None
    for i0 in range(s.rank):
        if image == basis_vector(s.rank, i0):
            simple_index = i0
            break
    if simple_index is None:
        raise ValueError(
            "weak exchange hypothesis fails: the word does not send the chosen "
            "simple root to a simple root at its target"
        )

    a = w.base
    js: list[int] = []
    ks: list[int] = []
    anchors: list[int] = []
    block_sizes: list[int] = []

    tail = w
    k_current = simple_index
    while tail.letters:
        jt = tail.letters[0]
        if jt == k_current:
            raise RuntimeError("block letters coincide; factorization is invalid")
        tail_target = word_target(s, tail)
        d = rank_two_count(s, jt, k_current, tail_target)
        if not isinstance(d, int):
            raise RuntimeError("rank-two count is infinite; factorization is invalid")
        blk_letters = tuple(jt if t % 2 == 0 else k_current for t in range(d - 1))
        blk_base = act_word(s, tuple(reversed(blk_letters)), tail_target)
        blk = Word(blk_base, blk_letters)
        blk_el = element_of_word(s, blk)
        rest = compose(inverse(blk_el), element_of_word(s, tail))
        if rest.is_zero:
            raise RuntimeError("block does not divide the word; factorization is invalid")
        rest_len = length(s, rest)
        if rest_len != len(tail.letters) - (d - 1):
            raise RuntimeError("block stripping did not shorten as required")
        js.append(jt)
        ks.append(k_current)
        anchors.append(blk_base)
        block_sizes.append(d)
        k_next = jt if d % 2 == 1 else k_current
        tail = canonical_reduced_word(s, rest)
        # invariant: the tail still sends the j-th simple root of the base
        # to the simple root k_next at its own target
        if mat_col(rest.matrix, j) != basis_vector(s.rank, k_next):
            raise RuntimeError("exchange invariant broken while stripping blocks")
        k_current = k_next

    if k_current != j:
        raise RuntimeError("trailing absorbed letter does not match; factorization is invalid")
    ks.append(k_current)
    r = len(js)
    if anchors and anchors[-1] != a:
        raise RuntimeError("last block is not anchored at the base")
    if sum(block_sizes) - r != m:
        raise RuntimeError("block sizes do not add up to the word length")
    if js[0] != w.letters[0] or ks[0] != simple_index:
        raise RuntimeError("leading block does not start the word")

    # full re-verification by matrix products
    blocks = [c_element(s, js[t], ks[t], anchors[t]) for t in range(r)]
    if _product_of_blocks(s, blocks) != g:
        raise RuntimeError("block product does not reproduce the element")
    shifted = [
        c_element(s, js[t], ks[t], act(s, ks[t + 1], anchors[t])) for t in range(r)
    ]
    shifted_prod = _product_of_blocks(s, shifted)
    # absorption: (blocks) s_{j, j|>a} = s_{k1} (shifted blocks)
    lhs1 = compose(g, generator_element(s, j, act(s, j, a)))
    rhs1 = compose(
        generator_element(s, simple_index, shifted_prod.target), shifted_prod
    )
    if lhs1.is_zero or lhs1 != rhs1:
        raise RuntimeError("absorption identity fails on the shifted blocks")
    # and back: (shifted blocks) s_{j, a} = s_{k1} (blocks)
    lhs2 = compose(shifted_prod, generator_element(s, j, a))
    rhs2 = compose(generator_element(s, simple_index, g.target), g)
    if lhs2.is_zero or lhs2 != rhs2:
        raise RuntimeError("reverse absorption identity fails")

    return WeakExchangeFactorization(r, tuple(js), tuple(ks), tuple(anchors))
