import numpy as np
import pytest

from stablestrain.errors import DomainError, InadmissibleStateError, PrecisionMismatchError
from stablestrain.kinematics import (
    StrainState,
    cauchy_green,
    deviatoric,
    green_euler,
    green_euler_unstable,
    green_lagrange,
    green_lagrange_unstable,
    invariants,
    j_helper,
    jm1,
    jm1_from_strain,
    jm1_unstable,
    log_j,
)
from stablestrain.oracle import rel_error, sample_direction
from stablestrain.precision import DOUBLE, EXTENDED, SINGLE, mp
from stablestrain.tensor import SymTensor3, deformation_gradient, matmul, transpose

from _support import random_h, rel, to_extended

ZERO = [[0.0] * 3 for _ in range(3)]


def test_green_lagrange_examples():
    assert green_lagrange(ZERO) == SymTensor3(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    d = 1e-3
    E = green_lagrange([[d, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    assert E.xx == d + d * d / 2 and E.yy == 0 and E.xy == 0
    t = 1e-4
    E = green_lagrange([[0.0, t, 0.0], [-t, 0.0, 0.0], [0.0, 0.0, 0.0]])
    assert E.components() == pytest.approx((t * t / 2, t * t / 2, 0, 0, 0, 0), rel=1e-15, abs=0)


def test_green_euler_examples():
    assert green_euler(ZERO).norm() == 0
    d = 0.25
    e = green_euler([[d, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    assert e.xx == d + d * d / 2


def test_green_euler_reconstructs_b():
    rng = np.random.default_rng(11)
    for _ in range(20):
        H = random_h(rng, 0.5, positive=True)
        b = cauchy_green(green_euler(H))
        F = deformation_gradient(to_extended(H))
        exact = matmul(F, transpose(F))
        for i in range(3):
            for j in range(3):
                assert abs(b[i, j] - exact[i][j]) <= 4 * DOUBLE.eps * abs(exact[i][j])


def test_strain_difference_identity():
    rng = np.random.default_rng(12)
    H = random_h(rng, 0.3)
    diff = green_lagrange(H) - green_euler(H)
    Hm = np.array(H)
    exact = (Hm.T @ Hm - Hm @ Hm.T) / 2
    scale = np.linalg.norm(Hm) ** 2
    assert np.max(np.abs(np.array(diff.matrix()) - exact)) <= 4 * DOUBLE.eps * scale


def test_unstable_strain_loses_digits():
    H = sample_direction(3)
    gl = lambda h, p: green_lagrange(h)
    gl_u = lambda h, p: green_lagrange_unstable(h)
    assert rel_error(gl, H, 1e-8, DOUBLE) <= 50 * DOUBLE.eps
    assert 1e-10 <= rel_error(gl_u, H, 1e-8, DOUBLE) <= 1e-6
    assert rel_error(gl_u, H, 0.1, DOUBLE, gl) <= 1e-14
    ge_u = lambda h, p: green_euler_unstable(h)
    assert rel_error(ge_u, H, 0.1, DOUBLE, lambda h, p: green_euler(h)) <= 1e-14


def test_jm1_examples():
    assert jm1(ZERO) == 0
    a, b, c, d = 0.1, -0.02, 0.03, 0.05
    H = [[a, b, 0.0], [c, d, 0.0], [0.0, 0.0, 0.0]]
    assert jm1(H) == pytest.approx(a + d + a * d - b * c, rel=4 * DOUBLE.eps)
    assert jm1_unstable(ZERO) == 0


def test_jm1_dichotomy():
    H = sample_direction(5)
    stable = lambda h, p: jm1(h)
    unstable = lambda h, p: jm1_unstable(h)
    assert rel_error(stable, H, 1e-8, DOUBLE) <= 50 * DOUBLE.eps
    assert 1e-10 <= rel_error(unstable, H, 1e-8, DOUBLE) <= 1e-6
    assert rel_error(unstable, H, 0.1, DOUBLE, stable) <= 1e-14


def test_jm1_unstable_slope():
    H = sample_direction(7)
    grid = np.geomspace(1e-8, 1e-4, 9)
    errs = [np.median([rel_error(lambda h, p: jm1_unstable(h), sample_direction(7, k), e, DOUBLE) for k in range(8)]) for e in grid]
    slope = np.polyfit(np.log10(grid), np.log10(errs), 1)[0]
    assert -1.3 <= slope <= -0.7
    stable = [rel_error(lambda h, p: jm1(h), H, e, DOUBLE) for e in grid]
    assert max(stable) <= 50 * DOUBLE.eps


def test_log_j():
    assert log_j(0.0) == 0
    assert abs(log_j(mp.e - 1) - 1) <= 4 * EXTENDED.eps
    x = 1e-12
    assert abs(log_j(x) - (x - x * x / 2)) <= 2 * np.spacing(x)
    with pytest.raises(DomainError):
        log_j(-1.0)


def test_j_helper():
    assert j_helper(SymTensor3.zeros()) == 0
    E = SymTensor3(0.01, 0.02, 0.0, 0.003, 0.0, 0.0)
    assert j_helper(E) == pytest.approx(4 * (0.01 * 0.02 - 0.003 * 0.003), rel=4 * DOUBLE.eps)
    rng = np.random.default_rng(13)
    for _ in range(20):
        E = green_lagrange(random_h(rng, 1e-6))
        Ee = E.map(EXTENDED.cast)
        exact = cauchy_green(Ee).det() - 1 - 2 * Ee.trace()
        assert abs(j_helper(E) - exact) <= 10 * DOUBLE.eps * abs(exact)


def test_volumetric_state_consistency():
    rng = np.random.default_rng(14)
    for norm in (1e-8, 1e-4, 0.1, 0.5):
        for _ in range(10):
            E = green_lagrange(random_h(rng, norm, EXTENDED))
            j = j_helper(E)
            d = (jm1_from_strain(E) + 1) ** 2 - 1 - 2 * E.trace()
            assert abs(d - j) <= 4 * EXTENDED.eps * max(1, abs(j))


def test_jm1_from_strain_agrees():
    rng = np.random.default_rng(15)
    for norm in np.geomspace(1e-8, 0.5, 12):
        H = random_h(rng, float(norm))
        a, b = jm1(H), jm1_from_strain(green_lagrange(H))
        assert abs(a - b) <= 10 * DOUBLE.eps * abs(a)


def test_jm1_from_strain_inadmissible():
    with pytest.raises(InadmissibleStateError):
        jm1_from_strain(SymTensor3(-0.6, -0.6, -0.6, 0.0, 0.0, 0.0))


def test_deviatoric():
    assert deviatoric(SymTensor3.identity().map(float)).norm() == 0
    dev = deviatoric(SymTensor3(1.0, 0.0, 0.0, 0.0, 0.0, 0.0))
    assert dev.components() == pytest.approx((2 / 3, -1 / 3, -1 / 3, 0, 0, 0), rel=DOUBLE.eps)
    rng = np.random.default_rng(16)
    A = green_lagrange(random_h(rng, 0.7))
    d1 = deviatoric(A)
    assert abs(d1.trace()) <= 4 * DOUBLE.eps * A.norm()
    assert (deviatoric(d1) - d1).norm() <= 4 * DOUBLE.eps * A.norm()


def test_cauchy_green():
    assert cauchy_green(SymTensor3.zeros()) == SymTensor3(1, 1, 1, 0, 0, 0)
    rng = np.random.default_rng(17)
    H = random_h(rng, 0.4, EXTENDED)
    C = cauchy_green(green_lagrange(H))
    F = deformation_gradient(H)
    exact = SymTensor3.from_matrix(matmul(transpose(F), F))
    assert rel(C, exact) <= 4 * EXTENDED.eps


def test_invariant_shift_identities():
    rng = np.random.default_rng(18)
    for norm in (1e-8, 1e-3, 0.3):
        E = green_lagrange(random_h(rng, norm, EXTENDED))
        i1, i2, _ = invariants(E)
        c1, c2, _ = invariants(cauchy_green(E))
        assert abs(c1 - (3 + 2 * i1)) <= 4 * EXTENDED.eps * 3
        assert abs(c2 - (3 + 4 * i1 + 4 * i2)) <= 8 * EXTENDED.eps * 3


def test_strain_state():
    rng = np.random.default_rng(19)
    H = random_h(rng, 0.2)
    s = StrainState.from_displacement_gradient(H)
    assert s.E == green_lagrange(H) and s.e == green_euler(H) and s.jm1 == jm1(H)
    assert rel(s.C_inv, cauchy_green(s.E).adjugate() / cauchy_green(s.E).det()) <= 20 * DOUBLE.eps
    assert s.J_unstable - 1 == pytest.approx(s.jm1, rel=1e-14)


def test_mixed_precision_rejected():
    H = [[0.1, 0.0, 0.0], [0.0, np.float32(0.1), 0.0], [0.0, 0.0, 0.0]]
    with pytest.raises(PrecisionMismatchError):
        StrainState.from_displacement_gradient(H)


@pytest.mark.parametrize("prec", [SINGLE, DOUBLE, EXTENDED], ids=str)
def test_precision_preserved(prec):
    H = random_h(np.random.default_rng(20), 0.1, prec)
    s = StrainState.from_displacement_gradient(H)
    assert type(s.jm1) is type(H[0][0])
    assert all(type(c) is type(H[0][0]) for c in s.E.components())


def test_inadmissible_state():
    H = [[-2.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]
    s = StrainState.from_displacement_gradient(H)
    with pytest.raises(InadmissibleStateError):
        s.check_admissible()
