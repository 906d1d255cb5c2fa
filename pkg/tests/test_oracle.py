import math

import numpy as np
import pytest

from stablestrain import kinematics as kin
from stablestrain.errors import UndefinedRelativeError
from stablestrain.oracle import (
    SampleSpec,
    flatten,
    frobenius,
    promote,
    rel_error,
    relative_difference,
    sample_direction,
    scaled_input,
)
from stablestrain.precision import DOUBLE, EXTENDED, SINGLE, mp
from stablestrain.tensor import SymTensor3


def test_directions_are_deterministic_unit_and_nonnegative():
    for k in range(20):
        H = sample_direction(7, k)
        assert H == sample_direction(7, k)
        assert all(h >= 0 for row in H for h in row)
        assert math.isclose(math.fsum(h * h for row in H for h in row), 1.0, rel_tol=1e-15)
    assert sample_direction(7, 0) != sample_direction(7, 1)
    assert sample_direction(7, 0) != sample_direction(8, 0)


def test_directions_are_pinned():
    # guards the stream against silent generator changes
    H = sample_direction(1, 0)
    assert H[0][0] == pytest.approx(0.16513138148878184, rel=1e-12)


def test_sample_spec_validation():
    spec = SampleSpec.log_grid(1, 1e-8, 1e-1, 50, "double")
    assert len(spec.eps_grid) == 50
    assert spec.eps_grid[0] == 1e-8 and spec.eps_grid[-1] == 1e-1
    assert spec.precision_under_test is DOUBLE
    for bad in ((), (0.0, 0.1), (0.1, 0.01), (0.5, 1.5)):
        with pytest.raises(ValueError):
            SampleSpec(1, bad, "double")
    with pytest.raises(ValueError):
        SampleSpec.log_grid(1, 1e-1, 1e-8, 50, "double")
    with pytest.raises(ValueError):
        SampleSpec.log_grid(1, 1e-8, 1e-1, 1, "double")
    with pytest.raises(ValueError):
        SampleSpec(1, (0.1,), "quad")


def test_scaled_input_rounds_once_and_promotes_exactly():
    H = sample_direction(3)
    x = scaled_input(H, 1e-3, SINGLE)
    assert all(isinstance(v, np.float32) for row in x for v in row)
    assert x[0][0] == np.float32(1e-3 * H[0][0])
    xe = promote(x)
    assert xe[0][0] == mp.mpf(float(x[0][0]))
    assert scaled_input(0.5, 1e-3, DOUBLE) == 5e-4


def test_flatten_expands_symmetric_tensors():
    t = SymTensor3(1.0, 2.0, 3.0, 4.0, 5.0, 6.0)
    assert len(flatten(t)) == 9
    assert frobenius(t) == mp.sqrt(1 + 4 + 9 + 2 * (16 + 25 + 36))
    assert flatten([1.0, t]) == [1.0] + flatten(t)


def test_extended_self_check_is_zero():
    H = sample_direction(5)
    q = lambda H_, prec: kin.jm1(H_)
    assert rel_error(q, H, 1e-6, EXTENDED) == 0.0


def test_zero_reference_is_undefined():
    with pytest.raises(UndefinedRelativeError):
        relative_difference(1.0, 0.0)
    with pytest.raises(ValueError):
        relative_difference([1.0, 2.0], [1.0])


def test_jm1_errors_at_small_strain():
    H = sample_direction(1)
    stable = rel_error(lambda h, p: kin.jm1(h), H, 1e-8, DOUBLE)
    unstable = rel_error(lambda h, p: kin.jm1_unstable(h), H, 1e-8, DOUBLE)
    assert stable <= 50 * DOUBLE.eps
    assert 1e-10 <= unstable <= 1e-6


def test_external_reference_is_used():
    calls = []

    def ref(x, prec):
        calls.append(prec)
        return x

    assert rel_error(lambda x, p: x, 0.5, 1e-3, DOUBLE, ref) == 0.0
    assert calls == [EXTENDED]
