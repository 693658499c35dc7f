import itertools
import random
from math import gcd

import pytest

from denumerant.core import (
    CoinTriple,
    count,
    count_pairwise_coprime,
    count_sawtooth,
    count_two_var,
    is_pairwise_coprime,
    reduce_instance,
    residue_params,
)
from denumerant.errors import DomainError
from denumerant.oracle import brute_force_count, denumerant_table, naive_two_var


def test_coin_triple_gcds():
    t = CoinTriple(6, 10, 15)
    assert (t.g1, t.g2, t.g3, t.g) == (5, 3, 2, 1)
    assert not t.pairwise_coprime
    r = t.reduced()
    assert (r.a, r.b, r.c) == (1, 1, 1)
    with pytest.raises(DomainError):
        CoinTriple(0, 1, 2)
    with pytest.raises(DomainError):
        CoinTriple(2, 4, 6).reduced()


def test_pairwise_gcds_coprime_when_setwise_coprime():
    rng = random.Random(3)
    for _ in range(2000):
        t = CoinTriple(*(rng.randint(1, 200) for _ in range(3)))
        if t.g == 1:
            assert gcd(t.g1, t.g2) == gcd(t.g2, t.g3) == gcd(t.g3, t.g1) == 1


def test_residue_params_worked_example():
    r = residue_params(37, 23, 16, 2069614)
    assert (r.b1p, r.c1p, r.c2p, r.a2p, r.a3p, r.b3p) == (4, 13, 4, 11, 10, 3)
    r = residue_params(37, 23, 16, 2069613)
    assert (r.b1p, r.c2p, r.a3p) == (33, 17, 7)
    assert (r.c1p, r.a2p, r.b3p) == (13, 11, 3)


def test_residue_params_modulus_one():
    r = residue_params(1, 1, 1, 9)
    assert (r.b1p, r.c1p, r.c2p, r.a2p, r.a3p, r.b3p) == (1,) * 6


def test_residue_params_congruences():
    rng = random.Random(11)
    for _ in range(300):
        a, b, c = (rng.randint(1, 80) for _ in range(3))
        if not is_pairwise_coprime(a, b, c):
            continue
        n = rng.randint(0, 10**6)
        r = residue_params(a, b, c, n)
        assert 1 <= r.b1p <= a and 1 <= r.c1p <= a
        assert 1 <= r.c2p <= b and 1 <= r.a2p <= b
        assert 1 <= r.a3p <= c and 1 <= r.b3p <= c
        assert (r.b1p * b + n) % a == 0 and (r.c1p * c - b) % a == 0
        assert (r.c2p * c + n) % b == 0 and (r.a2p * a - c) % b == 0
        assert (r.a3p * a + n) % c == 0 and (r.b3p * b - a) % c == 0


def test_residue_params_rejects_shared_factor():
    with pytest.raises(DomainError):
        residue_params(6, 10, 15, 31)


@pytest.mark.parametrize(
    "a, b, c, n, expected",
    [
        (37, 23, 16, 2069614, 157295072),
        (37, 23, 16, 2069613, 157294920),
        (1, 1, 1, 2, 6),
        (1, 1, 1, 0, 1),
        (3, 4, 5, 6, 1),
    ],
)
def test_counters_known_values(a, b, c, n, expected):
    assert count_pairwise_coprime(a, b, c, n) == expected
    assert count(a, b, c, n) == expected
    assert count_sawtooth(a, b, c, n) == expected


def test_counterexample_count_inside_envelope():
    value = count_pairwise_coprime(191, 131, 117, 67529)
    assert 565 <= value <= 1003
    assert value > 360
    assert value == brute_force_count(191, 131, 117, 67529) == 784


def test_oracle_equivalence_sampled():
    # every pairwise-coprime a <= b <= c <= 30; n sampled from 0..2000
    rng = random.Random(2020)
    triples = [
        t for t in itertools.combinations_with_replacement(range(1, 31), 3)
        if is_pairwise_coprime(*t)
    ]
    for a, b, c in triples:
        table = denumerant_table((a, b, c), 2000)
        ns = rng.sample(range(2001), 100)
        for n in ns:
            assert count_pairwise_coprime(a, b, c, n) == table[n], (a, b, c, n)
        for n in ns[:15]:
            assert count_sawtooth(a, b, c, n) == table[n], (a, b, c, n)
            assert brute_force_count(a, b, c, n) == table[n], (a, b, c, n)


def test_permutation_invariance():
    rng = random.Random(5)
    for _ in range(200):
        a, b, c = (rng.randint(1, 40) for _ in range(3))
        n = rng.randint(0, 3000)
        values = {count(*p, n) for p in itertools.permutations((a, b, c))}
        assert len(values) == 1


def test_count_at_zero_is_one():
    rng = random.Random(9)
    for _ in range(500):
        a, b, c = (rng.randint(1, 10**6) for _ in range(3))
        assert count(a, b, c, 0) == 1


def test_recurrence_in_first_coefficient():
    rng = random.Random(13)
    checked = 0
    while checked < 300:
        a, b, c = (rng.randint(1, 50) for _ in range(3))
        if gcd(b, c) != 1:
            continue
        n = rng.randint(a, 4000)
        assert count(a, b, c, n) - count(a, b, c, n - a) == count_two_var(b, c, n)
        checked += 1


def test_count_two_var_examples():
    assert count_two_var(131, 117, 67529) == 4
    assert count_two_var(191, 117, 67529) == 3
    assert count_two_var(191, 131, 67529) == 3
    for n in range(50):
        assert count_two_var(1, 1, n) == n + 1
    with pytest.raises(DomainError):
        count_two_var(4, 6, 12)


def test_count_two_var_against_loop():
    rng = random.Random(17)
    for _ in range(3000):
        a, b = rng.randint(1, 60), rng.randint(1, 60)
        if gcd(a, b) != 1:
            continue
        n = rng.randint(0, 5000)
        assert count_two_var(a, b, n) == naive_two_var(a, b, n)


def test_reduce_instance_six_ten_fifteen():
    r = reduce_instance(6, 10, 15, 31)
    assert (r.g1, r.g2, r.g3) == (5, 3, 2)
    assert (r.A, r.B, r.C) == (1, 1, 1)
    assert 0 <= r.n1 < 5 and 0 <= r.n2 < 3 and 0 <= r.n3 < 2
    assert 6 * r.n1 + 10 * r.n2 + 15 * r.n3 + 30 * r.N == 31
    # 6x + 10y + 15z = 31 has the single solution (1, 1, 1)
    assert r.N == 0
    assert count_pairwise_coprime(1, 1, 1, r.N) == 1
    assert count(6, 10, 15, 31) == 1


def test_reduce_instance_identity_for_coprime():
    r = reduce_instance(37, 23, 16, 12345)
    assert (r.g1, r.g2, r.g3, r.n1, r.n2, r.n3) == (1, 1, 1, 0, 0, 0)
    assert (r.A, r.B, r.C, r.N) == (37, 23, 16, 12345)


def test_reduce_instance_requires_setwise_coprime():
    with pytest.raises(DomainError):
        reduce_instance(2, 4, 6, 10)


def test_reduce_negative_target_gives_zero():
    # 6x + 10y + 15z = 1: the reduction offsets exceed n
    r = reduce_instance(6, 10, 15, 1)
    assert r.N < 0
    assert count(6, 10, 15, 1) == 0


def test_reduction_preserves_count():
    rng = random.Random(23)
    done = 0
    while done < 500:
        t = CoinTriple(*(rng.randint(1, 60) for _ in range(3)))
        if t.g != 1 or t.pairwise_coprime:
            continue
        n = rng.randint(0, 5000)
        assert count(t.a, t.b, t.c, n) == brute_force_count(t.a, t.b, t.c, n)
        done += 1


def test_count_divisibility_short_circuit():
    assert count(2, 4, 6, 5) == 0
    assert count(2, 4, 6, 6) == count(1, 2, 3, 3)


def test_count_validates():
    with pytest.raises(DomainError):
        count(0, 1, 1, 3)
    with pytest.raises(DomainError):
        count(1, 1, 1, -1)


def test_brute_force_oracle():
    assert brute_force_count(1, 1, 1, 2) == 6
    assert brute_force_count(3, 5, 7, 10) == 2
    # both strategies agree across the switch-over point
    for n in range(150, 260):
        assert brute_force_count(4, 6, 9, n) == denumerant_table((4, 6, 9), n)[n]
    with pytest.raises(DomainError):
        brute_force_count(1, 2, 3, 10**7 + 1)
    with pytest.raises(DomainError):
        brute_force_count(1, 2, 3, 500, cap=100)


def test_large_n_escalates_precision():
    n = 10**18
    a, b, c = 999983, 999979, 1000000
    value = count(a, b, c, n)
    lo = n * (n + a + b + c) // (2 * a * b * c) - (a + b + c)
    assert lo < value < lo + 2 * (a + b + c) + 2
