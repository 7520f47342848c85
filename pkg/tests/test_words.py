import pytest
from hypothesis import given, strategies as st

from surfkernel import words
from surfkernel.words import (
    EMPTY,
    MissingImage,
    Symbol,
    Word,
    WordError,
    commutator,
    conjugate,
    cyclic_reduce,
    free_reduce,
    substitute,
    sym,
)

A11 = sym("a", 1, 1)
B11 = sym("b", 1, 1)
B21 = sym("b", 2, 1)
D = sym("d")


def W(*letters):
    return Word(letters)


class TestReduce:
    def test_cancellation(self):
        assert free_reduce([(A11, 1), (A11, -1), (B11, 1)]) == W((B11, 1))

    def test_empty_is_identity(self):
        assert free_reduce([]) == EMPTY
        assert not EMPTY

    def test_nested_cancellation(self):
        got = free_reduce([(A11, 1), (B11, 1), (B11, -1), (A11, -1), (D, 1)])
        assert got == W((D, 1))

    def test_rejects_bad_exponent(self):
        with pytest.raises(WordError):
            Word([(A11, 2)])


class TestInvert:
    def test_reverses_and_inverts(self):
        w = W((A11, 1), (B21, 1))
        assert w.inverse() == W((B21, -1), (A11, -1))

    def test_empty(self):
        assert EMPTY.inverse() == EMPTY

    def test_single(self):
        assert W((D, 1)).inverse() == W((D, -1))


class TestReverse:
    def test_three_letters(self):
        w = W((A11, 1), (B11, 1), (D, 1))
        assert w.reverse() == W((D, 1), (B11, 1), (A11, 1))

    def test_single_letter(self):
        w = words.f(1, 2)
        assert w.reverse() == w

    def test_keeps_exponents(self):
        w = W((A11, 1), (B11, -1))
        assert w.reverse() == W((B11, -1), (A11, 1))


class TestSubstitute:
    def test_renames_alphabet(self):
        # w = aba over {a, b}, images a -> a', b -> b'
        a, bb = sym("a", 1, 1), sym("b", 1, 1)
        a2, b2 = sym("a", 1, 2), sym("b", 1, 2)
        w = W((a, 1), (bb, 1), (a, 1))
        got = substitute(w, {a: Word.gen(a2), bb: Word.gen(b2)})
        assert got == W((a2, 1), (b2, 1), (a2, 1))

    def test_identity_images_reduce(self):
        w = W((A11, 1), (A11, -1), (D, 1))
        got = substitute(w, {A11: Word.gen(A11), D: Word.gen(D)})
        assert got == W((D, 1))

    def test_kernel_generator_expansion(self):
        # c_1 expands to a_1 b_1^-1 in the first factor
        got = substitute(words.c(1), {sym("c", 1, 1): words.a(1, 1) * words.b(1, 1).inverse()})
        assert got == words.a(1, 1) * words.b(1, 1).inverse()

    def test_missing_image(self):
        with pytest.raises(MissingImage):
            substitute(W((A11, 1)), {})


class TestConjugateCommutator:
    def test_self_commutator_trivial(self):
        w = words.x(1)
        assert commutator(w, w) == EMPTY

    def test_conjugate_by_identity(self):
        w = W((A11, 1), (B11, 1))
        assert conjugate(w, EMPTY) == w

    def test_commutator_definition(self):
        got = commutator(words.a(1, 1), words.b(1, 1))
        assert got == W((A11, 1), (B11, 1), (A11, -1), (B11, -1))


class TestCyclicReduce:
    def test_conjugated_relator(self):
        core = W((B11, 1), (D, 1))
        w = conjugate(core, words.a(1, 1))
        got_core, got_conj = cyclic_reduce(w)
        assert got_core == core
        assert got_conj == words.a(1, 1)

    def test_already_reduced(self):
        w = W((A11, 1), (B11, 1))
        assert cyclic_reduce(w) == (w, EMPTY)

    def test_aba_inverse(self):
        w = W((A11, 1), (B11, 1), (A11, -1))
        assert cyclic_reduce(w) == (W((B11, 1)), words.a(1, 1))


class TestExponentSum:
    def test_signed_count(self):
        w = W((A11, 1), (A11, 1), (B11, -1))
        assert w.exponent_sum(A11) == 2
        assert w.exponent_sum(B11) == -1
        assert w.exponent_sum(D) == 0

    def test_inverse_letter(self):
        assert W((D, -1)).exponent_sum(D) == -1


class TestSymbols:
    def test_arity_validation(self):
        with pytest.raises(WordError):
            sym("d", 1)
        with pytest.raises(WordError):
            sym("x", 1, 2)
        with pytest.raises(WordError):
            sym("f", 1)
        with pytest.raises(WordError):
            sym("q", 1, 1)

    def test_total_order(self):
        order = [sym("a", 1, 1), sym("a", 2, 1), sym("b", 1, 1), sym("d"),
                 sym("del"), sym("f", 1, 2), sym("x", 1)]
        assert order == sorted(order, key=Symbol.key)


# -- property tests ----------------------------------------------------------

SYMBOLS = [sym("a", 1, 1), sym("a", 2, 1), sym("b", 1, 1), sym("b", 2, 1),
           sym("d"), sym("f", 1, 2), sym("g", 2, 3), sym("x", 1)]

letters = st.tuples(st.sampled_from(SYMBOLS), st.sampled_from([1, -1]))
raw_words = st.lists(letters, max_size=30).map(Word)


@given(raw_words, raw_words)
def test_reduce_is_congruence(u, v):
    assert (u * v) == Word(u.letters + v.letters)


@given(raw_words)
def test_reduce_idempotent(w):
    assert Word(w.letters) == w


@given(raw_words, raw_words)
def test_invert_antihomomorphism(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()


@given(raw_words)
def test_invert_involution(w):
    assert w.inverse().inverse() == w


@given(raw_words)
def test_reverse_commutes_with_invert(w):
    assert w.inverse().reverse() == w.reverse().inverse()


@given(raw_words, raw_words)
def test_commutator_exponent_sums_vanish(u, v):
    c = commutator(u, v)
    for s in SYMBOLS:
        assert c.exponent_sum(s) == 0


@given(raw_words)
def test_cyclic_reduce_reassembles(w):
    core, conj = cyclic_reduce(w)
    assert conjugate(core, conj) == w
    if core:
        first, last = core.letters[0], core.letters[-1]
        assert not (first[0] == last[0] and first[1] == -last[1])


@given(raw_words, raw_words)
def test_substitution_is_homomorphism(u, v):
    images = {s: words.f(1, 2) * Word.gen(s) * words.f(1, 2).inverse() for s in SYMBOLS}
    images[sym("f", 1, 2)] = Word.gen(sym("f", 1, 2))
    assert substitute(u * v, images) == substitute(u, images) * substitute(v, images)
