import itertools
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from borsuk_lab.freegroup import (PARITY, GroupAlgebraElement, Permutation, Word, build_cover_automaton,
                                  build_s3_partition, check_partition_axiom, commutator_b, convolve,
                                  count_reduced_words, evaluate_quotient, homogeneous_components, multiply,
                                  reduce, reduced_words)

letters = st.lists(st.integers(0, 3), max_size=20)


def random_deletion_reduce(seq, rng):
    """Reduce by cancelling adjacent inverse pairs in random order (an independent reduction path)."""
    seq = list(seq)
    while True:
        spots = [k for k in range(len(seq) - 1) if seq[k] == seq[k + 1] ^ 1]
        if not spots:
            return tuple(seq)
        k = spots[int(rng.integers(len(spots)))]
        del seq[k:k + 2]


def test_confluence_random_strings():
    rng = np.random.default_rng(0)
    for _ in range(2000):
        s = rng.integers(0, 4, 30)
        assert reduce(s).letters == random_deletion_reduce(s, rng)


def test_word_parse_and_print():
    b = commutator_b()
    assert str(b) == "yxYX" and len(b) == 4
    assert Word.parse("xX").is_identity
    assert str(b.inverse()) == "xyXY"
    with pytest.raises(ValueError):
        Word((0, 1))
    with pytest.raises(ValueError):
        Word.parse("xz")


@pytest.mark.parametrize("r", range(0, 7))
def test_reduced_word_counts(r):
    words = list(reduced_words(r))
    assert len(words) == count_reduced_words(r) == 1 + 2 * (3**r - 1)
    assert len(set(words)) == len(words)


@settings(max_examples=200, deadline=None)
@given(u=letters, v=letters, w=letters)
def test_multiply_group_axioms(u, v, w):
    a, b, c = reduce(u), reduce(v), reduce(w)
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, a.inverse()).is_identity
    assert multiply(a, reduce([])) == a


def test_hand_composed_permutations():
    s = Permutation.from_cycles(3, (0, 1))
    t = Permutation.from_cycles(3, (0, 2))
    # (s * t)(k) = s(t(k)): 0 -> 2 -> 2, 1 -> 1 -> 0, 2 -> 0 -> 1
    assert (s * t).images == (2, 0, 1)
    assert (s * t).order() == 3
    assert s.inverse() == s and (s * s).is_identity


def test_quotient_images_of_b():
    q = build_cover_automaton()
    b = commutator_b()
    img = q.evaluate(b)
    # hand evaluation: y x y^-1 x^-1 = (02)(01)(02)(01)
    s, t = Permutation.from_cycles(3, (0, 1)), Permutation.from_cycles(3, (0, 2))
    assert img == t * s * t * s
    assert img.order() == 3 and img(0) != 0
    assert not q.in_stabilizer(b)
    assert q.orbit(0) == {0, 1, 2}
    assert q.image_group() == {Permutation(p) for p in permutations(range(3))}


def test_quotient_homomorphism_exhaustive_short():
    q = build_cover_automaton()
    words = list(reduced_words(3))
    for u, v in itertools.product(words, words):
        assert evaluate_quotient(q, multiply(u, v)) == evaluate_quotient(q, u) * evaluate_quotient(q, v)
    assert evaluate_quotient(q, Word()).is_identity


@pytest.mark.parametrize("part", [PARITY, build_s3_partition()], ids=["parity", "S3"])
def test_partition_axiom_length4(part):
    checked, failures = check_partition_axiom(part, 4)
    assert checked == count_reduced_words(4) ** 2 and failures == []


def test_bad_partition_detected():
    from borsuk_lab.freegroup import PartitionSpec
    bogus = PartitionSpec("first-letter", lambda w: int(bool(w.letters) and w.letters[0] == 0),
                          lambda a, b: (a + b) % 2, 0, (0, 1))
    _, failures = check_partition_axiom(bogus, 2)
    assert failures


def random_element(rng, terms=4, length=4):
    out = {}
    for _ in range(terms):
        w = reduce(rng.integers(0, 4, int(rng.integers(0, length + 1))))
        out[w] = complex(*rng.normal(size=2))
    return GroupAlgebraElement(out)


def test_group_algebra_basics():
    a = GroupAlgebraElement.parse("x + X + y + Y")
    assert len(a) == 4 and a.l1_norm() == 4 and a.adjoint() == a
    sq = a * a
    assert sq.terms[Word()] == 4
    assert GroupAlgebraElement.from_json(a.to_json_list()) == a
    assert (a - a).terms == {}


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_convolution_associative_and_adjoint(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (random_element(rng) for _ in range(3))
    lhs, rhs = convolve(convolve(a, b), c), convolve(a, convolve(b, c))
    assert lhs.terms.keys() == rhs.terms.keys()
    assert all(abs(lhs.terms[w] - rhs.terms[w]) < 1e-12 for w in lhs.terms)
    ab_star, b_star_a_star = (a * b).adjoint(), b.adjoint() * a.adjoint()
    assert all(abs(ab_star.terms[w] - b_star_a_star.terms.get(w, 0)) < 1e-12 for w in ab_star.terms)


@pytest.mark.parametrize("part", [PARITY, build_s3_partition()], ids=["parity", "S3"])
def test_homogeneous_components_grade(part):
    rng = np.random.default_rng(9)
    a, b = random_element(rng, 6), random_element(rng, 6)
    ca, cb = homogeneous_components(a, part), homogeneous_components(b, part)
    total = GroupAlgebraElement({})
    for c in ca.values():
        total = total + c
    assert total == a
    for (s, u), (t, v) in itertools.product(ca.items(), cb.items()):
        assert {part.classify(w) for w in (u * v).terms} <= {part.compose(s, t)}
