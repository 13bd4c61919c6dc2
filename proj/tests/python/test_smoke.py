"""Smoke tests for the _iprng extension module."""

import pytest

import iprng

TABLE_IV = {
    1: 870, 2: 60, 3: 900, 4: 1080, 5: 1650, 6: 720, 7: 420, 8: 1440,
    9: 540, 10: 1200, 14: 1680, 15: 3600, 16: 1920, 29: 3480, 30: 900,
    31: 7440,
}


def test_number_theory_basics():
    assert iprng.is_prime(31)
    assert not iprng.is_prime(1)
    assert iprng.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert iprng.divisors(30) == [1, 2, 3, 5, 6, 10, 15, 30]
    assert iprng.euler_phi(32) == 16


def test_sequence_matches_the_known_orbit():
    assert iprng.sequence(7, 1, 1, 1, 7) == [2, 5, 4, 3, 6, 0, 1]
    assert iprng.lfsr_sequence(7, 1, 1, 1, 5) == [1, 1, 2, 3, 5]
    assert iprng.step(7, 1, 1, 0) == 1


def test_measure_and_predict_agree():
    r = iprng.measure_period(7, 1, 1, 1)
    assert (r.preperiod, r.period, r.hits_zero) == (0, 7, True)
    c = iprng.predict_period(7, 1, 1, 1)
    assert c.tag == "INERT_HITS_ZERO"
    assert c.k == 8
    assert c.predicted_period == 7

    for a in range(7):
        for b in range(7):
            for x0 in range(7):
                assert (
                    iprng.predict_period(7, a, b, x0).predicted_period
                    == iprng.measure_period(7, a, b, x0).period
                )


def test_distribution_tables():
    assert iprng.analytic_distribution(31, "ab-zero") == {1: 1021, 2: 870}
    assert iprng.analytic_distribution(31, "units") == TABLE_IV
    assert iprng.brute_force_distribution(31, "units", workers=2) == TABLE_IV
    assert iprng.achievable_periods(31) == sorted(TABLE_IV)


def test_design_round_trip():
    for target in (1, 2, 7, 30, 31):
        triples = iprng.design(31, target, count=2)
        assert len(triples) == 2
        for a, b, x0 in triples:
            assert iprng.measure_period(31, a, b, x0).period == target
    assert iprng.design(31, 11) == []


def test_invalid_modulus_raises():
    with pytest.raises(ValueError):
        iprng.measure_period(9, 1, 1, 1)
    with pytest.raises(ValueError):
        iprng.analytic_distribution(3, "all")


def test_scatter_records_shape():
    records = iprng.scatter_records(5, "ab-zero")
    assert len(records) == 2 * 5 * 5 - 5
    assert records[0] == (0, 0, 0, 0, 1)
