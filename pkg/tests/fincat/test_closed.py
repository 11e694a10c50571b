import pytest

import preopt.fincat.closed as closed_module
from preopt.fincat import (
    closed_hom,
    closure_check,
    constant_presheaf,
    identity_effectful,
    presheaf_tensor,
    representable,
    walking_arrow_monoidal,
)


@pytest.fixture
def eff():
    """The walking arrow with tensor min, viewed as an effectful category."""
    return identity_effectful(walking_arrow_monoidal())


@pytest.mark.parametrize("d0", [0, 1])
@pytest.mark.parametrize("target", [0, 1])
def test_closed_hom_out_of_a_representable(eff, d0, target):
    # [y(d0), H](a) is H(a d0)
    h = representable(eff.c1, target)
    hom = closed_hom(representable(eff.c1, d0), h, eff)
    for a in eff.c0.objects:
        assert len(hom.value(a)) == len(h.value(eff.mon1.tensor[(a, d0)]))


def test_tensor_with_representables(eff):
    y0, y1 = representable(eff.c0, 0), representable(eff.c1, 1)
    tensor = presheaf_tensor(y0, y1, eff)
    assert {c: len(tensor.value(c)) for c in eff.c1.objects} == {0: 1, 1: 0}


@pytest.mark.parametrize("a", [0, 1])
def test_closure_bijection(eff, a):
    f = representable(eff.c0, a)
    g = representable(eff.c1, 1)
    h = representable(eff.c1, 0)
    assert closure_check(f, g, h, eff).ok
    assert closure_check(f, g, constant_presheaf(eff.c1, ["x", "y"]), eff).ok


def test_closure_check_rejects_a_wrong_right_adjoint(eff, monkeypatch):
    monkeypatch.setattr(
        closed_module, "closed_hom", lambda g, h, eff, budget=None: constant_presheaf(eff.c0, ["*"])
    )
    f, g = representable(eff.c0, 1), representable(eff.c1, 1)
    result = closure_check(f, g, g, eff)
    assert not result.ok
    assert result.law == "naturality"
