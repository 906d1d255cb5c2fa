import math

import pytest

from stablestrain.harness import AxialConfig, homogeneous_axial, run_axial
from stablestrain.harness.axial import BlockMesh


def lateral(report, mesh):
    # y-displacement at the node (1, 1, 1)
    m = mesh.n
    node = mesh.nodes.index((m, m, m))
    return report.displacement[mesh.free.index((node, 1))]


def test_zero_strain_is_at_rest():
    for form in ("stable", "unstable"):
        rep = run_axial(AxialConfig(eps_axial=0.0, form=form))
        assert rep.residual_norms == [0.0]
        assert rep.converged and rep.iterations == 0
        assert rep.force_x0 == rep.force_x1 == 0.0


@pytest.mark.parametrize("eps", [1e-3, 0.05, -0.02])
def test_matches_homogeneous_oracle(eps):
    rep = run_axial(AxialConfig(eps_axial=eps))
    eta, force = homogeneous_axial(2.8, 0.4, eps)
    assert rep.converged
    assert lateral(rep, BlockMesh(1)) == pytest.approx(float(eta), rel=1e-10)
    assert rep.force_x1 == pytest.approx(float(force), rel=1e-10)
    assert rep.traction_x1 == pytest.approx(float(force), rel=1e-10)


def test_oracle_reduces_to_linear_elasticity():
    eta, force = homogeneous_axial(2.8, 0.4, 1e-12)
    assert float(eta) == pytest.approx(-0.4e-12, rel=1e-10)
    assert float(force) == pytest.approx(-2.8e-12, rel=1e-10)


@pytest.mark.parametrize("eps", [1e-12, 1e-9, 1e-6])
def test_small_strain_force_consistency(eps):
    rep = run_axial(AxialConfig(eps_axial=eps))
    assert abs(rep.force_x1 + 2.8 * eps) <= 1e-2 * 2.8 * eps


def test_stable_newton_converges_quadratically():
    rep = run_axial(AxialConfig())
    assert rep.converged and rep.iterations <= 2
    assert rep.residual_norms[-1] <= 1e-8 * rep.residual_norms[0]


def test_unstable_newton_stalls_at_roundoff_floor():
    rep = run_axial(AxialConfig(form="unstable"))
    assert not rep.converged
    assert rep.residual_norms[-1] > 1e-8 * rep.residual_norms[0]
    assert rep.residual_norms[-1] >= 1e-17


def test_reports_are_deterministic():
    a, b = run_axial(AxialConfig(form="unstable")), run_axial(AxialConfig(form="unstable"))
    assert a.residual_norms == b.residual_norms
    assert (a.force_x0, a.force_x1) == (b.force_x0, b.force_x1)


def test_refined_block_separates_the_forms():
    stable = run_axial(AxialConfig(elements=2))
    unstable = run_axial(AxialConfig(elements=2, form="unstable"))
    assert stable.converged
    assert abs(stable.force_imbalance) <= 1e-20
    assert abs(unstable.force_imbalance) >= 1e-18
    assert math.isclose(stable.force_x1, -2.8e-12, rel_tol=1e-6)


def test_mesh_bookkeeping():
    mesh = BlockMesh(2)
    assert len(mesh.nodes) == 27 and len(mesh.elements) == 8
    # x fixed on both faces, y on y = 0, z on z = 0
    assert len(mesh.free) == 9 + 18 + 18
    assert sum(1 for _ in mesh.face_elements(1)) == 4


def test_config_validation():
    for bad in (dict(poisson=0.5), dict(poisson=-1.0), dict(eps_axial=-1.0), dict(form="x"),
                dict(max_newton=0), dict(quadrature="1x1x1"), dict(elements=0)):
        with pytest.raises(ValueError):
            AxialConfig(**bad)
