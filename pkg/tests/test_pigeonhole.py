import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schrodlab.errors import AllBelowFloor
from schrodlab.strichartz import dyadic_pigeonhole


def test_equal_values_form_one_class():
    sel = dyadic_pigeonhole(np.full(40, 3.7), R=1024)
    assert sel.n_classes == 1
    assert len(sel.selected) == 40
    assert sel.retained_fraction == pytest.approx(1.0)


def test_dyadic_ladder_retains_fair_share():
    k = 10
    values = 2.0 ** np.arange(k + 1)
    masses = np.ones(k + 1)
    sel = dyadic_pigeonhole(values, masses=masses, R=1024)
    assert sel.retained_mass >= masses.sum() / (k + 1)


def test_matches_exhaustive_grouping_oracle(rng):
    values = rng.lognormal(0, 3, size=300)
    masses = rng.random(300)
    sel = dyadic_pigeonhole(values, masses=masses, R=1024)
    # oracle: group by floor(log2), exhaustively
    groups = {}
    for v, m in zip(values, masses):
        groups.setdefault(int(np.floor(np.log2(v))), []).append(m)
    best = max(groups.values(), key=sum)
    assert sel.retained_mass == pytest.approx(sum(best), rel=1e-12)


def test_all_below_floor():
    with pytest.raises(AllBelowFloor):
        dyadic_pigeonhole(np.zeros(5), R=1024)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**31), n=st.integers(1, 400))
def test_retained_share_guarantee(seed, n):
    # the exact combinatorial guarantee behind the log-loss bookkeeping
    R = 1024
    rng = np.random.default_rng(seed)
    values = rng.lognormal(0, 5, size=n)
    sel = dyadic_pigeonhole(values, R=R, floor_exponent=20)
    assert sel.n_classes <= 2 * 20 * np.log2(R)
    assert sel.retained_mass >= (sel.total_mass + sel.dropped_mass) / (
        2 * np.log2(float(R) ** 20)
    )
