import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tckit import braid as br
from tckit.braid import BraidWord, Permutation
from tckit.errors import DegreeMismatch, IndexOutOfRange, RangeError
from tckit.garside import is_equal_garside
from wordgen import random_word, rewrite


def W(n, letters=()):
    return BraidWord(n, tuple(letters))


@st.composite
def words(draw, max_degree=6, max_len=40, degree=None):
    n = degree if degree is not None else draw(st.integers(1, max_degree))
    if n == 1:
        return W(1)
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    return W(n, draw(st.lists(gens, max_size=max_len)))


# -- construction -------------------------------------------------------------


def test_make_word_trefoil_braid():
    w = br.make_word(2, [1, 1, 1])
    assert w.degree == 2
    assert w.pairs() == [(1, 1), (1, 1), (1, 1)]


def test_make_word_empty():
    assert br.make_word(3, []).letters == ()


def test_make_word_rejects_missing_generator():
    with pytest.raises(IndexOutOfRange):
        br.make_word(2, [2])
    with pytest.raises(IndexOutOfRange):
        br.make_word(1, [1])


def test_compose_examples():
    assert br.compose(W(2, [1]), W(2, [-1])).letters == (1, -1)
    w = W(3, [1, -2, 2])
    assert br.compose(W(3), w) == w
    assert br.compose(W(2, [1] * 3), W(2, [1] * 3)) == W(2, [1] * 6)


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        br.compose(W(2, [1]), W(3, [1]))


def test_invert():
    assert br.invert(W(3, [1, 2])).letters == (-2, -1)
    assert br.invert(W(4)) == W(4)


def test_free_reduce():
    assert br.free_reduce(W(2, [1, -1])).letters == ()
    assert br.free_reduce(W(3, [1, 2, -2, -1])).letters == ()
    assert br.free_reduce(W(3, [1, 2, 1])).letters == (1, 2, 1)


def test_permutation_examples():
    assert br.permutation(W(2, [1, 1, 1])).images == (2, 1)
    assert br.permutation(W(3)).is_identity()
    # by hand: (12) then (23) then (12) sends 1->2->3->3, 2->1->1->2, 3->3->2->1
    assert br.permutation(br.garside_delta(3)).images == (3, 2, 1)


def test_permutation_ignores_signs_and_is_homomorphism():
    rng = random.Random(3)
    for _ in range(50):
        u, v = random_word(rng, 5, 12), random_word(rng, 5, 12)
        assert br.permutation(u * v) == br.permutation(u).then(br.permutation(v))
        flipped = W(5, [abs(x) for x in u.letters])
        assert br.permutation(flipped) == br.permutation(u)


def test_permutation_type_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation(3, (1, 1, 2))


def test_exponent_sum():
    assert br.exponent_sum(W(2, [1, 1, 1])) == 3
    assert br.exponent_sum(W(3, [1, -2])) == 0
    assert br.exponent_sum(br.build_theta(2)) == 4


def test_iota():
    assert br.iota(W(2, [1]), 2, 0) == W(4, [3])
    assert br.iota(W(2, [1]), 0, 2) == W(4, [1])
    assert br.iota(W(3, [-2, 1]), 1, 1) == W(5, [-3, 2])


@pytest.mark.parametrize("m", range(2, 6))
def test_iota_of_garside_delta_is_delta_m(m):
    shifted = br.iota(br.garside_delta(m), m, 0)
    assert shifted == br.build_delta(m)  # literally, not only up to equality
    assert br.is_equal(shifted, br.build_delta(m))


# -- builders ----------------------------------------------------------------


def test_build_pi():
    assert br.build_pi(2, 1) == W(4, [3])
    assert br.build_pi(3, 2) == W(6, [4, 5])
    assert br.build_pi(3, 2, primed=True) == W(6, [2, 1])


@pytest.mark.parametrize("m,i", [(1, 1), (3, 0), (3, 3), (0, 1)])
def test_build_pi_range(m, i):
    with pytest.raises(RangeError):
        br.build_pi(m, i)


def test_build_delta():
    assert br.build_delta(1) == W(2)
    assert br.build_delta(1, primed=True) == W(2)
    assert br.build_delta(2) == W(4, [3])
    assert br.build_delta(2, primed=True) == W(4, [1])
    assert br.build_delta(3) == W(6, [4, 5, 4])
    assert br.build_delta(3, primed=True) == W(6, [2, 1, 2])


def test_build_theta():
    assert br.build_theta(1) == W(2, [1])
    assert br.build_theta(2) == W(4, [2, 1, 3, 2])
    assert br.build_theta(3) == W(6, [3, 2, 1, 4, 5, 3, 2, 4, 3])


@pytest.mark.parametrize("m", range(1, 6))
def test_theta_has_m_middle_letters_all_positive(m):
    theta = br.build_theta(m)
    assert sum(1 for x in theta.letters if x == m) == m
    assert all(x > 0 for x in theta.letters)


def test_flip_star():
    assert br.flip_star(W(2, [-1, -1, -1])) == W(2, [-1, -1, -1])
    assert br.flip_star(W(3, [1, 1, -2])) == W(3, [2, 2, -1])


@given(words())
def test_flip_star_involution(w):
    assert br.flip_star(br.flip_star(w)) == w


@given(words(), words())
def test_flip_star_homomorphism(u, v):
    if u.degree == v.degree:
        assert br.flip_star(u * v) == br.flip_star(u) * br.flip_star(v)


@given(words())
def test_invert_involution(w):
    assert br.invert(br.invert(w)) == w


@given(words(max_len=30))
@settings(max_examples=60)
def test_invert_is_group_inverse(w):
    assert br.is_equal(w * br.invert(w), W(w.degree))


@given(words(max_len=30), st.integers(0, 3), st.integers(0, 3))
def test_iota_homomorphism(w, k, l):
    half = len(w) // 2
    u, v = W(w.degree, w.letters[:half]), W(w.degree, w.letters[half:])
    assert br.iota(u * v, k, l) == br.iota(u, k, l) * br.iota(v, k, l)


# -- word problem ------------------------------------------------------------


def test_is_equal_examples():
    assert br.is_equal(W(3, [1, 2, 1]), W(3, [2, 1, 2]))
    assert not br.is_equal(W(3, [1]), W(3, [2]))
    delta2 = br.power(br.garside_delta(3), 2)
    lhs, rhs = delta2 * W(3, [1]), W(3, [1]) * delta2
    assert br.is_equal(lhs, rhs)
    assert is_equal_garside(lhs, rhs)  # second, unrelated procedure


def test_is_equal_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        br.is_equal(W(2), W(3))


def test_cheap_invariants_do_not_decide_equality():
    # same permutation and exponent sum, different braids
    u, v = W(3, [1, 1, -2, -2]), W(3)
    assert br.permutation(u) == br.permutation(v)
    assert br.exponent_sum(u) == br.exponent_sum(v)
    assert not br.is_equal(u, v)
    assert not is_equal_garside(u, v)


def test_artin_images_of_generator():
    assert br.artin_images(W(2, [1])) == ((1, 2, -1), (1,))
    assert br.artin_images(W(2, [-1])) == ((2,), (-2, 1, 2))


def test_commute_examples():
    assert br.commute(W(2, [1, 1, 1]), W(2, [-1, -1, -1]))
    beta = W(3, [1, -2, 1])
    assert br.commute(br.power(beta, 2), beta)
    assert not br.commute(W(3, [1]), W(3, [2]))


def test_is_equal_relations_from_rewrites():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 6)
        u = random_word(rng, n, rng.randint(0, 40))
        v = rewrite(rng, u, 12)
        assert br.is_equal(u, v)
        assert br.is_equal(v, u)


@given(words(max_len=25), words(max_len=25))
@settings(max_examples=150)
def test_is_equal_symmetric_and_agrees_with_oracle(u, v):
    if u.degree != v.degree:
        return
    assert br.is_equal(u, v) == br.is_equal(v, u) == is_equal_garside(u, v)


def test_is_equal_transitive():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(2, 6)
        u = random_word(rng, n, rng.randint(0, 40))
        v = rewrite(rng, u, 8)
        w = rewrite(rng, v, 8)
        assert br.is_equal(u, v) and br.is_equal(v, w) and br.is_equal(u, w)
        x = random_word(rng, n, rng.randint(0, 40))
        assert br.is_equal(u, x) == br.is_equal(w, x)


@given(words(max_len=40))
@settings(max_examples=80)
def test_free_reduce_preserves_element(w):
    assert br.is_equal(br.free_reduce(w), w)


def test_equal_implies_same_cheap_invariants():
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(1, 6)
        u = random_word(rng, n, rng.randint(0, 40))
        v = rewrite(rng, u, 10)
        assert br.permutation(u) == br.permutation(v)
        assert br.exponent_sum(u) == br.exponent_sum(v)


# -- identities behind the 1-handle chain ------------------------------------


@pytest.mark.parametrize("m", range(2, 6))
def test_half_twists_on_disjoint_blocks_commute(m):
    d, dp = br.build_delta(m), br.build_delta(m, primed=True)
    assert br.is_equal(dp * d, d * dp)


@pytest.mark.parametrize("m", range(1, 6))
def test_cancellation_identity(m):
    d, dp = br.build_delta(m), br.build_delta(m, primed=True)
    word = br.compose(br.invert(dp), br.invert(d), dp, d)
    assert br.is_equal(word, W(2 * m))


@pytest.mark.parametrize("m", range(1, 6))
def test_erasing_middle_letters_of_theta(m):
    theta = br.build_theta(m)
    erased = W(2 * m, [x for x in theta.letters if x != m])
    target = br.build_delta(m, primed=True) * br.build_delta(m)
    assert br.is_equal(erased, target)
    assert is_equal_garside(erased, target)


@pytest.mark.parametrize("m", [2, 3])
def test_flip_star_is_half_twist_conjugation(m):
    rng = random.Random(m)
    dp_inv = br.invert(br.build_delta(m, primed=True))
    for _ in range(25):
        b = random_word(rng, m, rng.randint(0, 20))
        lhs = br.iota(b, 0, m) * dp_inv
        rhs = dp_inv * br.iota(br.flip_star(b), 0, m)
        assert br.is_equal(lhs, rhs)


def test_flip_star_is_the_only_choice_among_simple_candidates():
    # the naive mirror (index kept, sign flipped) breaks the conjugation identity
    m = 3
    b = W(3, [1, 1, -2])
    dp_inv = br.invert(br.build_delta(m, primed=True))
    naive = W(3, [-x for x in b.letters])
    assert not br.is_equal(br.iota(b, 0, m) * dp_inv, dp_inv * br.iota(naive, 0, m))
