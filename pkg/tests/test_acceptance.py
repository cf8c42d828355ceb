"""Acceptance gate: one test per acceptance criterion, each with its stated
time budget.  Run with -v to get one pass/fail line per criterion."""

import itertools
import json
import random
import time
from collections import Counter
from math import gcd, lcm

from sl2ab.abgroup import TRIVIAL_GROUP, AbelianGroup, canonicalize, from_order_statistics
from sl2ab.cli import run
from sl2ab.polyarith import IntPoly, factorint, primes_dividing
from sl2ab.splitting import GeneralPoly, PrimeAbove, SplittingData, rational_function_split
from sl2ab.theorems import (
    ArithmeticRingSpec,
    BetaFlags,
    SSet,
    compute,
    sl2ab_char0,
    sl2ab_charp,
    sl2ab_galois,
    sl2ab_quadratic_negative,
)
from sl2ab.verify import (
    suite_cyclotomic_table,
    suite_ge2,
    suite_oracle_local,
    suite_product_lemma,
    suite_quadratic_table,
)


def _assert_suite_green(cases):
    failures = [c for c in cases if not c.ok]
    assert not failures, "; ".join(f"{c.name}: {c.detail}" for c in failures)
    return len(cases)


def test_criterion_1_z_inv_n_via_cli(capsys):
    expected = {
        2: [3],
        3: [4],
        5: [12],
        6: [],
        7: [12],
        10: [3],
        11: [12],
        12: [],
        30: [],
    }
    start = time.perf_counter()
    for n, factors in expected.items():
        invert = ",".join(str(p) for p in primes_dividing(n))
        code = run(["compute", "--rational", "--invert", invert, "--json"])
        out = capsys.readouterr().out
        assert code == 0, (n, out)
        doc = json.loads(out)
        assert doc["group"]["invariant_factors"] == factors, f"n={n}"
        assert doc["group"]["free_rank"] == 0
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    print(f"ACCEPTANCE 1 (Z[1/n] structure via the CLI): PASS in {elapsed:.2f}s")


def test_criterion_2_quadratic_three_way():
    start = time.perf_counter()
    count = _assert_suite_green(suite_quadratic_table())
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"took {elapsed:.2f}s"
    print(
        f"ACCEPTANCE 2 (real quadratic, formula = residue table = factorization, "
        f"{count} radicands): PASS in {elapsed:.2f}s"
    )


def test_criterion_3_cyclotomic_agreement():
    start = time.perf_counter()
    count = _assert_suite_green(suite_cyclotomic_table())
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"took {elapsed:.2f}s"
    print(
        f"ACCEPTANCE 3 (cyclotomic classification + splitting agreement, "
        f"{count} cases): PASS in {elapsed:.2f}s"
    )


def test_criterion_4_named_examples():
    outcome = compute(ArithmeticRingSpec(GeneralPoly(IntPoly((-5, 0, 0, 1)))))
    assert outcome.group == AbelianGroup(0, (12,))
    at2, at3 = outcome.splittings
    assert [q.label for q in at2.primes] == ["(2, x+1)", "(2, x^2+x+1)"]
    assert [q.label for q in at3.primes] == ["(3, x+1)"]
    assert sl2ab_galois(4, 4, 1, 2, 1) == AbelianGroup(0, (6, 6))
    assert sl2ab_quadratic_negative(-15, BetaFlags((1, 0), (1,))) == AbelianGroup(
        0, (12,)
    )
    print("ACCEPTANCE 4 (named worked examples): PASS")


def test_criterion_5_oracle_matches_local_formula():
    start = time.perf_counter()
    count = _assert_suite_green(suite_oracle_local())
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"took {elapsed:.2f}s"
    print(
        f"ACCEPTANCE 5 (enumerated SL2 abelianization = local formula, "
        f"{count} rings): PASS in {elapsed:.2f}s"
    )


def test_criterion_6_elementary_generation():
    start = time.perf_counter()
    count = _assert_suite_green(suite_ge2())
    elapsed = time.perf_counter() - start
    print(
        f"ACCEPTANCE 6 (elementary matrices generate SL2, {count} rings): "
        f"PASS in {elapsed:.2f}s"
    )


def test_criterion_7_product_lemma_and_order_formula():
    start = time.perf_counter()
    count = _assert_suite_green(suite_product_lemma())
    elapsed = time.perf_counter() - start
    print(
        f"ACCEPTANCE 7 (product decomposition + |SL2(Z/n)| formula, "
        f"{count} cases): PASS in {elapsed:.2f}s"
    )


# --- criterion 8: randomized property suites ------------------------------


def _random_splitting(rng: random.Random, p: int, max_degree: int = 8) -> SplittingData:
    degree = rng.randint(1, max_degree)
    remaining = degree
    primes = []
    while remaining:
        ef = rng.randint(1, remaining)
        divisors = [e for e in range(1, ef + 1) if ef % e == 0]
        e = rng.choice(divisors)
        primes.append(PrimeAbove(p, e, ef // e, f"({p}, #{len(primes) + 1})"))
        remaining -= ef
    return SplittingData(p, degree, tuple(primes))


def _random_removals(rng: random.Random, data: SplittingData) -> frozenset:
    return frozenset(i for i in range(len(data.primes)) if rng.random() < 0.3)


def _partitions(n: int, mx: int | None = None):
    if n == 0:
        yield ()
        return
    if mx is None:
        mx = n
    for k in range(min(n, mx), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _abelian_groups_of_order(n: int):
    per_prime = [
        [(p, part) for part in _partitions(a)] for p, a in sorted(factorint(n).items())
    ]
    for combo in itertools.product(*per_prime):
        yield canonicalize([p**k for p, part in combo for k in part])


def _brute_profile(torsion):
    counts: Counter = Counter()
    for tup in itertools.product(*(range(d) for d in torsion)):
        o = 1
        for x, d in zip(tup, torsion):
            o = lcm(o, d // gcd(x, d))
        counts[o] += 1
    return dict(counts)


def test_criterion_8_property_suites():
    start = time.perf_counter()
    rng = random.Random(20260816)

    # (a) 1000 random char-0 inputs: the result is finite of exponent dividing 12
    for _ in range(1000):
        split2 = _random_splitting(rng, 2)
        split3 = _random_splitting(rng, 3)
        assert sum(q.e * q.f for q in split2.primes) == split2.degree
        assert sum(q.e * q.f for q in split3.primes) == split3.degree
        s = SSet(
            _random_removals(rng, split2),
            _random_removals(rng, split3),
            rng.randint(0, 2),
        )
        g = sl2ab_char0(split2, split3, s, infinite_places=rng.randint(2, 5))
        assert g.free_rank == 0
        assert 12 % g.exponent() == 0

    # (b) random char-p inputs: exponent divides 6
    for _ in range(300):
        q = rng.choice([2, 3, 4, 5, 8, 9, 16, 25])
        places = rational_function_split(q)
        n_places = sum(len(sp.primes) for sp in places)
        removed = frozenset(i for i in range(n_places) if rng.random() < 0.3)
        s = SSet(
            removed_above_2=removed if q % 2 == 0 and q <= 3 else frozenset(),
            removed_above_3=removed if q % 3 == 0 and q <= 3 else frozenset(),
            other_finite_primes=rng.randint(1, 3),
        )
        g = sl2ab_charp(q, places, s, infinite_places=1)
        assert g.free_rank == 0
        assert 6 % g.exponent() == 0

    # (c) canonicalize is idempotent
    for _ in range(200):
        factors = [rng.randint(2, 60) for _ in range(rng.randint(0, 6))]
        g = canonicalize(factors, free_rank=rng.randint(0, 2))
        assert canonicalize(g.torsion, g.free_rank) == g

    # (d) order statistics invert the invariant-factor form for every
    # abelian group of order <= 200 (profile taken by direct enumeration)
    checked = 0
    for n in range(1, 201):
        for g in _abelian_groups_of_order(n):
            assert g.order() == n
            assert from_order_statistics(_brute_profile(g.torsion)) == g
            checked += 1
    # known count: sum over n <= 200 of prod(partition(a)) over p^a || n
    assert checked == 389
    assert sum(1 for _ in _abelian_groups_of_order(8)) == 3
    assert sum(1 for _ in _abelian_groups_of_order(200)) == 6
    assert next(_abelian_groups_of_order(1)) == TRIVIAL_GROUP

    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"took {elapsed:.2f}s"
    print(
        f"ACCEPTANCE 8 (randomized property suites, exponent bounds + "
        f"round-trips): PASS in {elapsed:.2f}s"
    )
