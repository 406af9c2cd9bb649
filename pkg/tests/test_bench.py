import math

import pytest

from braidgwp.bench import BenchRecord, bench, fit_slopes, make_instance, run_trial, trial_seed
from braidgwp.core import power
from braidgwp.exponent import exp_sum
from braidgwp.normalform import equal


def test_instance_reproducible():
    seed = trial_seed(7, 5, 64, 0)
    assert make_instance(5, 64, seed) == make_instance(5, 64, seed)
    assert trial_seed(7, 5, 64, 0) != trial_seed(7, 5, 64, 1)


def test_instance_is_member():
    for t in range(5):
        x, y, c = make_instance(4, 40, trial_seed(1, 4, 40, t))
        assert exp_sum(x) != 0
        assert equal(power(x, c), y)


def test_record_fields():
    r = run_trial(4, 32, trial_seed(3, 4, 32, 0))
    assert r.verdict == "power"
    assert r.M >= 32 // 4
    assert r.factor_ops > 0 and r.wall_ns > 0
    assert r.L_min >= 0


def test_fit_slopes_recovers_exponents():
    recs = [BenchRecord(n=n, M=m, L_min=0, c=1, verdict="power", letters_scanned=0,
                        factor_ops=round(3 * m**2 * n), wall_ns=1, seed=0)
            for n in (3, 6, 12) for m in (10, 20, 40, 80)]
    a, b = fit_slopes(recs, "factor_ops")
    assert a == pytest.approx(2.0, abs=1e-3)
    assert b == pytest.approx(1.0, abs=1e-3)


def test_fit_slopes_single_n():
    recs = [BenchRecord(4, m, 0, 1, "power", 0, m**3, 1, 0) for m in (8, 16, 32)]
    a, b = fit_slopes(recs, "factor_ops")
    assert a == pytest.approx(3.0)
    assert math.isnan(b)


def test_bench_validation():
    with pytest.raises(ValueError):
        bench([], [16], 1, 0)
    with pytest.raises(ValueError):
        bench([4], [16], 0, 0)


def test_report():
    report = bench([3, 5], [16, 32], 2, 11)
    assert len(report.records) == 8
    assert all(r.verdict == "power" for r in report.records)
    assert [m for m, _ in report.cell_means(3)] == [16, 32]
    assert report.to_csv(wall_time=False) == bench([3, 5], [16, 32], 2, 11).to_csv(False)
