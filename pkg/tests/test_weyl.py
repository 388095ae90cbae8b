import itertools

import pytest
from hypothesis import given, strategies as st

from flagq import weyl

perm5 = st.permutations(range(1, 6)).map(tuple)
perm_any = st.integers(2, 6).flatmap(
    lambda n: st.permutations(range(1, n + 1)).map(tuple)
)


def test_identity_and_simple_reflection():
    assert weyl.identity(4) == (1, 2, 3, 4)
    assert weyl.simple_reflection(2, 4) == (1, 3, 2, 4)
    with pytest.raises(ValueError):
        weyl.simple_reflection(4, 4)


def test_multiply_composes_as_functions():
    # (uv)(x) = u(v(x))
    u, v = (2, 3, 1), (1, 3, 2)
    uv = weyl.multiply(u, v)
    for x in range(1, 4):
        assert uv[x - 1] == u[v[x - 1] - 1]


def test_right_multiplication_swaps_positions():
    u = (3, 1, 4, 2)
    assert weyl.multiply(u, weyl.simple_reflection(2, 4)) == (3, 4, 1, 2)


@given(perm_any)
def test_inverse(u):
    n = len(u)
    assert weyl.multiply(u, weyl.inverse(u)) == weyl.identity(n)
    assert weyl.length(weyl.inverse(u)) == weyl.length(u)


@given(perm5, st.integers(1, 4))
def test_length_changes_by_one(u, i):
    assert abs(weyl.length(weyl.multiply(u, weyl.simple_reflection(i, 5))) - weyl.length(u)) == 1
    assert weyl.sgn_alpha(u, i) == (1 if u[i - 1] > u[i] else 0)


def test_from_word_and_longest():
    assert weyl.from_word([1, 2, 1], 3) == (3, 2, 1)
    assert weyl.longest_element(4) == (4, 3, 2, 1)
    assert weyl.length(weyl.longest_element(5)) == 10
    assert weyl.n_cycle(4) == (2, 3, 4, 1)
    assert weyl.hook(5, 3) == weyl.from_word([2, 3, 4], 5)


@given(perm_any)
def test_canonical_word_is_reduced_and_recovers(u):
    word = weyl.canonical_word(u)
    assert len(word) == weyl.length(u)
    assert weyl.from_word(word, len(u)) == u


def test_canonical_factorization_bounds():
    for u in weyl.all_permutations(4):
        js = weyl.canonical_factorization(u)
        assert len(js) == 3
        assert all(0 <= js[m - 1] <= m for m in range(1, 4))


def test_lambda_of_examples():
    # zero branch exactly when u fixes n
    for u in weyl.all_permutations(4):
        if u[-1] == 4:
            assert weyl.lambda_of(u) == (0, 0, 0)
        else:
            lam = weyl.lambda_of(u)
            ones = [i for i, a in enumerate(lam, start=1) if a]
            assert ones and ones[-1] == 3 and ones == list(range(ones[0], 4))
    assert weyl.lambda_of((4, 3, 5, 1, 2)) == (0, 0, 1, 1)


def test_u_up_and_cumulative():
    u = (4, 3, 5, 1, 2)
    assert weyl.u_up(u, 1) == weyl.multiply(weyl.n_cycle(5), u)
    assert weyl.u_up(u, 5) == u  # period n
    assert weyl.lambda_cumulative(u, 0) == (0, 0, 0, 0)
    # cumulative = sum of per-step degrees
    total = [0, 0, 0, 0]
    r = u
    for _ in range(3):
        total = [a + b for a, b in zip(total, weyl.lambda_of(r))]
        r = weyl.u_up(r, 1)
    assert weyl.lambda_cumulative(u, 3) == tuple(total)


def bruhat_leq_subword(u, v):
    """Oracle: u <= v iff some reduced word of v has a subword for u."""
    word = weyl.canonical_word(v)
    n = len(v)
    target = weyl.length(u)
    for keep in itertools.combinations(range(len(word)), target):
        if weyl.from_word([word[i] for i in keep], n) == u:
            return True
    return target == 0


def test_bruhat_matches_subword_oracle():
    perms = weyl.all_permutations(4)
    for u in perms:
        for v in perms:
            assert weyl.bruhat_leq(u, v) == bruhat_leq_subword(u, v), (u, v)


def test_grassmannian_type_and_partitions():
    assert weyl.is_grassmannian_type((1, 2, 3, 4)) == 0
    assert weyl.is_grassmannian_type((2, 4, 1, 3)) == 2
    assert weyl.is_grassmannian_type((2, 1, 4, 3)) is None
    u = weyl.partition_to_perm((2, 1), 2, 4)
    assert u == (3, 4, 1, 2)[:0] + u  # shape sanity
    assert weyl.perm_to_partition(u, 2) == (2, 1)
    for k in (1, 2, 3):
        for mu in itertools.product(range(4 - k + 1), repeat=k):
            if all(a >= b for a, b in zip(mu, mu[1:])):
                assert weyl.perm_to_partition(weyl.partition_to_perm(mu, k, 4), k) == mu


def test_serialization_round_trip():
    assert weyl.perm_from_string("43512") == (4, 3, 5, 1, 2)
    assert weyl.perm_from_string("4 3 5 1 2") == (4, 3, 5, 1, 2)
    assert weyl.perm_to_string((4, 3, 5, 1, 2)) == "43512"
    assert weyl.word_from_string("2,3,4") == (2, 3, 4)
    assert weyl.word_to_string((2, 3, 4)) == "2,3,4"
    with pytest.raises(ValueError):
        weyl.perm_from_string("4412")
