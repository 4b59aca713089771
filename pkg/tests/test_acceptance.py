"""Acceptance suite.

One test per exit criterion, each asserting exact (tolerance-zero)
equality and printing a single PASS/FAIL line; run with `pytest -s
tests/test_acceptance.py` to see the lines.  The oracle comparisons of
criterion 5 rebuild their generator sets here so the quoted runtime is
honest; later criteria reuse the cached degree slices.
"""

import random
import time
from contextlib import contextmanager
from math import comb, factorial

import pytest

from symci.characters import decompose, inner_product, irreducible_character
from symci.classify import IrredMultiset, RepresentationType, classify
from symci.graded import (
    coinvariant_character,
    polynomial_ring_character,
    quotient_character,
    socle_analysis,
)
from symci.oracle import (
    GeneratorSet,
    is_regular_sequence,
    parse_poly,
    quotient_graded_character,
    quotient_trace,
    representative_permutation,
)
from symci.partitions import Partition, class_size, contains, is_hook, partitions_of
from symci.tableaux import (
    Tableau,
    TableauCombination,
    apply_transposition,
    kostka_foulkes,
    kostka_foulkes_tilde,
    standard_tableaux,
)

from golden import (
    CHARACTER_TABLE_S4,
    CLASS_ORDER_S4,
    CLASS_SIZES_S4,
    COINVARIANT_S4,
    KF_TILDE_S4,
    POLY_RING_S4,
    WORKED,
)

_GENERATOR_SETS: dict[str, GeneratorSet] = {}


def worked_generators(key):
    if key not in _GENERATOR_SETS:
        _GENERATOR_SETS[key] = GeneratorSet(
            tuple(parse_poly(s, 4) for s in WORKED[key]["gens"])
        )
    return _GENERATOR_SETS[key]


def rep_type(key):
    entry = WORKED[key]
    return RepresentationType(entry["case"], entry["d"], entry["c"])


def expected_coefficient(mults):
    return {Partition(k): v for k, v in mults.items()}


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d}: FAIL - {title}")
        raise
    print(f"criterion {number:2d}: PASS - {title}")


def test_criterion_01_coinvariant_expansion():
    with criterion(1, "coinvariant algebra character, seven exact coefficients"):
        start = time.perf_counter()
        g = coinvariant_character(4)
        elapsed = time.perf_counter() - start
        assert g.exact and g.top_degree() == 6
        for d, mults in enumerate(COINVARIANT_S4):
            assert decompose(g.coefficient(d)) == expected_coefficient(mults)
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_02_kostka_foulkes_tilde_table():
    with criterion(2, "modified Kostka-Foulkes column for the five shapes"):
        column = Partition([1, 1, 1, 1])
        for lam, coeffs in KF_TILDE_S4.items():
            got = kostka_foulkes_tilde(lam, column)
            assert got.coeffs == coeffs, lam


def test_criterion_03_polynomial_ring_low_degrees():
    with criterion(3, "polynomial ring character, degrees 0 through 4"):
        g = polynomial_ring_character(4, 4)
        for d, mults in enumerate(POLY_RING_S4):
            assert decompose(g.coefficient(d)) == expected_coefficient(mults)


def test_criterion_04_worked_quotient_expansions():
    with criterion(4, "the four worked quotient expansions, every coefficient"):
        for key, entry in sorted(WORKED.items()):
            g = quotient_character(rep_type(key), 4)
            assert g.exact
            assert g.top_degree() == len(entry["expansion"]) - 1, key
            for d, mults in enumerate(entry["expansion"]):
                assert decompose(g.coefficient(d)) == expected_coefficient(mults), (key, d)


def test_criterion_05_oracle_equivalence():
    with criterion(5, "brute-force oracle equals each formula on every degree"):
        start = time.perf_counter()
        for key, entry in sorted(WORKED.items()):
            gs = worked_generators(key)
            top = len(entry["expansion"]) - 1
            oracle = quotient_graded_character(gs, top + 1)
            formula = quotient_character(rep_type(key), 4)
            for d in range(top + 2):
                assert oracle.coefficient(d) == formula.coefficient(d), (key, d)
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0, f"took {elapsed:.1f}s"


def test_criterion_06_regular_sequence_checks():
    with criterion(6, "regular sequence verdicts, including the shared-factor refusal"):
        for key in sorted(WORKED):
            report = is_regular_sequence(worked_generators(key))
            assert report.ok and report.conclusive, key
        shared_factor = GeneratorSet(
            (
                parse_poly("(x1 - x2)*(x3 - x4)", 4),
                parse_poly("x1^2 - x2^2", 4),
                parse_poly("e2", 4),
                parse_poly("e1", 4),
            )
        )
        report = is_regular_sequence(shared_factor)
        assert not report.ok


def test_criterion_07_character_table():
    with criterion(7, "5x5 character table and class sizes"):
        assert [class_size(mu) for mu in CLASS_ORDER_S4] == CLASS_SIZES_S4
        for lam, row in CHARACTER_TABLE_S4.items():
            chi = irreducible_character(lam)
            assert [chi.value(mu) for mu in CLASS_ORDER_S4] == row


def test_criterion_08_property_suites():
    with criterion(8, "property suites on small symmetric groups"):
        # orthonormality of the irreducibles
        for n in range(1, 7):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    got = inner_product(
                        irreducible_character(lam), irreducible_character(mu)
                    )
                    assert got == (1 if lam == mu else 0)
        # dimensions: sum of squares is the group order
        for n in range(1, 7):
            assert sum(
                len(standard_tableaux(lam)) ** 2 for lam in partitions_of(n)
            ) == factorial(n)
        # Kostka-Foulkes support is the dominance order; diagonal is 1
        for n in range(1, 7):
            for lam in partitions_of(n):
                assert kostka_foulkes(lam, lam).coeffs == {0: 1}
                for mu in partitions_of(n):
                    assert bool(kostka_foulkes(lam, mu)) == _dominates(lam, mu)
        # hooks are exactly the shapes avoiding (2,2)
        for n in range(1, 11):
            for lam in partitions_of(n):
                assert is_hook(lam) == (not contains(lam, (2, 2)))
        # the gate accepts exactly the four admissible shapes
        rng = random.Random(20250809)
        for n in range(2, 8):
            pool = partitions_of(n)
            for _ in range(200):
                size = rng.randrange(5)
                summands = tuple(
                    (rng.choice(pool), rng.randrange(1, 7)) for _ in range(size)
                )
                accepted = isinstance(
                    classify(IrredMultiset(n, summands)), RepresentationType
                )
                assert accepted == _shape_oracle(n, summands), (n, summands)
        # all-trivial quotients match the product series through degree 20
        bound = 20
        for n, c in [(2, (3, 2)), (3, (2, 2)), (4, (2, 3, 3, 4)), (5, (2, 2, 3))]:
            g = quotient_character(RepresentationType("I", None, c), n, bound)
            dims = [g.coefficient(d).dimension() for d in range(bound + 1)]
            assert dims == _product_series(c, n, bound), (n, c)
        # traces do not depend on the choice of class representative
        gs = worked_generators("ex4")
        alternates = {
            (2, 1, 1): [(0, 1, 3, 2), (3, 1, 2, 0)],
            (2, 2): [(2, 3, 0, 1), (3, 2, 1, 0)],
            (3, 1): [(0, 2, 3, 1), (2, 1, 3, 0)],
            (4,): [(3, 0, 1, 2), (1, 3, 0, 2)],
        }
        for d in range(4):
            for mu, perms in alternates.items():
                reference = quotient_trace(gs, d, representative_permutation(mu))
                for perm in perms:
                    assert quotient_trace(gs, d, perm) == reference


def _dominates(lam, mu):
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def _shape_oracle(n, summands):
    if not summands:
        return False
    nontrivial = [tuple(lam) for lam, _ in summands if tuple(lam) != (n,)]
    m = len(summands) - len(nontrivial)
    if not nontrivial:
        return 1 <= m <= n
    if len(nontrivial) > 1:
        return False
    lam = nontrivial[0]
    if lam == (1,) * n:
        return m <= n - 1
    if lam == (n - 1, 1):
        return m <= 1
    return n == 4 and lam == (2, 2) and m <= 2


def _product_series(degrees, n, bound):
    num = [0] * (bound + 1)
    num[0] = 1
    for c in degrees:
        nxt = list(num)
        for d in range(c, bound + 1):
            nxt[d] -= num[d - c]
        num = nxt
    return [
        sum(num[k] * comb(n - 1 + d - k, d - k) for k in range(d + 1))
        for d in range(bound + 1)
    ]


def test_criterion_09_straightening_and_wedge_sign():
    with criterion(9, "transposition action on the square shape and its wedge sign"):
        t1 = Tableau([[1, 2], [3, 4]])
        t2 = Tableau([[1, 3], [2, 4]])
        r1 = apply_transposition(1, t1)
        r2 = apply_transposition(1, t2)
        assert r1 == TableauCombination({t1: 1, t2: -1})
        assert r2 == TableauCombination({t2: -1})
        det = r1.coefficient(t1) * r2.coefficient(t2) - r2.coefficient(t1) * r1.coefficient(t2)
        assert det == -1


def test_criterion_10_socle_verdicts():
    with criterion(10, "socle kinds of the four worked quotients"):
        expected = {"ex2": "alternating", "ex3": "trivial", "ex4": "trivial", "ex5": "trivial"}
        tops = {"ex2": 8, "ex3": 9, "ex4": 4, "ex5": 5}
        for key in sorted(WORKED):
            report = socle_analysis(quotient_character(rep_type(key), 4))
            assert report.top_degree == tops[key]
            kind = "alternating" if report.top_is_alternating else "trivial"
            assert report.top_is_trivial != report.top_is_alternating
            assert kind == expected[key]
