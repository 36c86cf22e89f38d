import itertools
import random

import pytest

import weylgroupoid as wg
from weylgroupoid import Word
from weylgroupoid.groupoid import generator_element
from weylgroupoid.rewriting import BraidMove

A, B, C, D, E = range(5)

DISPLAY = [
    Word(A, (0, 1, 0, 2, 1, 2, 0, 2, 1, 0)),
    Word(A, (0, 1, 0, 1, 2, 1, 0, 2, 1, 0)),
    Word(A, (1, 0, 1, 0, 2, 1, 0, 2, 1, 0)),
    Word(A, (1, 0, 1, 2, 0, 1, 0, 2, 1, 0)),
    Word(A, (1, 0, 1, 2, 1, 0, 1, 2, 1, 0)),
    Word(A, (1, 0, 1, 2, 1, 0, 2, 1, 2, 0)),
    Word(A, (1, 0, 1, 2, 1, 0, 2, 1, 0, 2)),
]
COUNTEREXAMPLE = Word(A, (1, 0, 2, 1, 2, 0, 2, 1, 0, 2))


# ---------------------------------------------------------------------------
# moves


def test_moves_on_commuting_pair(ex5):
    moves = wg.applicable_moves(ex5, Word(A, (0, 2)))
    assert len(moves) == 1
    assert wg.apply_move(ex5, Word(A, (0, 2)), moves[0]) == Word(A, (2, 0))


def test_no_moves_on_empty_word(ex5):
    assert wg.applicable_moves(ex5, Word(A, ())) == []


def test_move_on_four_term_relation(ex5):
    w = Word(A, (1, 2, 1, 2))
    moves = wg.applicable_moves(ex5, w)
    assert len(moves) == 1
    assert moves[0].m == 4
    assert wg.apply_move(ex5, w, moves[0]) == Word(A, (2, 1, 2, 1))


def test_move_on_three_term_relation(ex5):
    w = Word(A, (0, 1, 0))
    moves = [m for m in wg.applicable_moves(ex5, w) if m.m == 3]
    assert len(moves) == 1
    assert wg.apply_move(ex5, w, moves[0]) == Word(A, (1, 0, 1))


def _assert_moves_preserve(s, w):
    g = wg.element_of_word(s, w)
    count = 0
    for mv in wg.applicable_moves(s, w):
        w2 = wg.apply_move(s, w, mv)
        assert w2.base == w.base
        assert len(w2.letters) == len(w.letters)
        assert wg.element_of_word(s, w2) == g
        count += 1
    return count


def test_moves_preserve_base_length_evaluation(ex5):
    # exhaustive through length six
    checked = 0
    for m in range(1, 7):
        for base in range(5):
            for letters in itertools.product(range(3), repeat=m):
                checked += _assert_moves_preserve(ex5, Word(base, letters))
    assert checked > 0
    # sampled reduced words up to length ten
    rng = random.Random(77)
    sampled = 0
    while sampled < 40:
        letters = tuple(rng.randrange(3) for _ in range(rng.randint(7, 10)))
        w = Word(rng.randrange(5), letters)
        if wg.length(ex5, wg.element_of_word(ex5, w)) != len(letters):
            continue
        _assert_moves_preserve(ex5, w)
        sampled += 1


def test_applying_move_twice_restores(ex5):
    w = Word(A, (1, 2, 1, 2))
    mv = wg.applicable_moves(ex5, w)[0]
    w2 = wg.apply_move(ex5, w, mv)
    back = BraidMove(mv.position, mv.second, mv.first, mv.m, mv.anchor)
    assert wg.apply_move(ex5, w2, back) == w


def test_apply_rejects_inapplicable_move(ex5):
    with pytest.raises(ValueError):
        wg.apply_move(ex5, Word(A, (0, 2)), BraidMove(0, 0, 1, 3, A))


# ---------------------------------------------------------------------------
# braid connectivity


def test_connect_word_to_itself(ex5):
    w = Word(A, (0, 2))
    chain = wg.braid_connect(ex5, w, w)
    assert chain.moves == ()


def test_connect_three_term_pair(ex5):
    chain = wg.braid_connect(ex5, Word(A, (0, 1, 0)), Word(A, (1, 0, 1)))
    assert len(chain.moves) == 1


def test_connect_display_endpoints(ex5):
    chain = wg.braid_connect(ex5, DISPLAY[0], DISPLAY[-1])
    assert len(chain.moves) == 6
    w = DISPLAY[0]
    for mv in chain.moves:
        w = wg.apply_move(ex5, w, mv)
        assert wg.element_of_word(ex5, w) == wg.element_of_word(ex5, DISPLAY[0])
    assert w == DISPLAY[-1]


def test_connect_rejects_counterexample_pair(ex5):
    with pytest.raises(ValueError, match="target mismatch: d != e"):
        wg.braid_connect(ex5, DISPLAY[0], COUNTEREXAMPLE)


def test_connect_rejects_unreduced(ex5):
    with pytest.raises(ValueError, match="not reduced"):
        wg.braid_connect(ex5, Word(A, (1, 1, 0, 0)), Word(A, ()))


def test_connect_rejects_different_bases(ex5):
    with pytest.raises(ValueError, match="bases"):
        wg.braid_connect(ex5, Word(A, (0,)), Word(B, (0,)))


# ---------------------------------------------------------------------------
# reduced-word sets


def test_reduced_words_of_identity(ex5):
    from weylgroupoid.groupoid import identity_element

    assert wg.all_reduced_words(ex5, identity_element(ex5, A)) == {Word(A, ())}


def test_reduced_words_of_commuting_pair(ex5):
    g = wg.element_of_word(ex5, Word(A, (0, 2)))
    assert wg.all_reduced_words(ex5, g) == {Word(A, (0, 2)), Word(A, (2, 0))}


def test_reduced_words_of_a2_longest(a2):
    g = wg.longest_element(a2, 0)
    assert wg.all_reduced_words(a2, g) == {Word(0, (0, 1, 0)), Word(0, (1, 0, 1))}


def test_reduced_words_match_brute_force_sample(ex5):
    # exhaustive cross-check at short lengths
    for m in range(0, 5):
        by_element = {}
        for base in range(5):
            for letters in itertools.product(range(3), repeat=m):
                w = Word(base, letters)
                g = wg.element_of_word(ex5, w)
                if wg.length(ex5, g) == m:
                    by_element.setdefault(g, set()).add(w)
        for g, brute in by_element.items():
            assert wg.all_reduced_words(ex5, g) == brute


# ---------------------------------------------------------------------------
# weak exchange


def test_weak_exchange_single_letter(ex5):
    # the generator-1 reflection at a fixes alpha_3, a simple root
    fact = wg.weak_exchange_factor(ex5, Word(A, (0,)), 2)
    assert fact.r == 1
    assert fact.j == (0,)
    assert fact.k == (2, 2)
    assert fact.anchors == (A,)


def test_weak_exchange_display_pair(ex5):
    # stripping the leading letter of the second display line gives a
    # reduced word satisfying the hypothesis for the trailing letter of
    # the last display line
    u = Word(A, (1, 0, 1, 2, 1, 0, 2, 1, 0))
    fact = wg.weak_exchange_factor(ex5, u, 2)
    assert fact.r == 5
    assert fact.j == (1, 2, 1, 2, 0)
    assert fact.k == (0, 0, 0, 1, 2, 2)
    assert fact.anchors == (D, C, E, C, A)
    sizes = [wg.rank_two_count(ex5, fact.j[t], fact.k[t], fact.anchors[t]) for t in range(5)]
    assert sum(sizes) - fact.r == len(u.letters)
    # the shifted blocks concatenate to the same letters, re-based, and
    # absorbing the trailing letter emits the leading letter of line two
    shifted = [
        wg.c_element(ex5, fact.j[t], fact.k[t], wg.act(ex5, fact.k[t + 1], fact.anchors[t]))
        for t in range(fact.r)
    ]
    concat = sum((w.letters for w in shifted), ())
    assert concat == u.letters
    assert shifted[-1].base == B
    shifted_el = wg.element_of_word(ex5, Word(B, concat))
    lhs = wg.compose(shifted_el, generator_element(ex5, 2, A))
    assert lhs == wg.element_of_word(ex5, DISPLAY[-1])
    gu = wg.element_of_word(ex5, u)
    rhs = wg.compose(generator_element(ex5, 0, gu.target), gu)
    assert rhs == wg.element_of_word(ex5, DISPLAY[1])
    assert lhs == rhs


def test_weak_exchange_rejects_failed_hypothesis(ex5):
    # the generator-2 reflection at a sends alpha_3 to a non-simple root
    with pytest.raises(ValueError, match="hypothesis"):
        wg.weak_exchange_factor(ex5, Word(A, (1,)), 2)


def test_weak_exchange_rejects_unreduced(ex5):
    with pytest.raises(ValueError, match="not reduced"):
        wg.weak_exchange_factor(ex5, Word(A, (0, 0, 2)), 1)


def test_weak_exchange_rejects_empty(ex5):
    with pytest.raises(ValueError, match="at least one"):
        wg.weak_exchange_factor(ex5, Word(A, ()), 0)
