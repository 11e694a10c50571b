import pytest

from preopt.fincat import (
    FinCatError,
    LawViolationError,
    check_fincat,
    discrete_category,
    fincat_from_dict,
    fincat_to_dict,
    funny_tensor,
    identity_functor,
    make_fincat,
    make_functor,
    poset_category,
    product_category,
    terminal_category,
    walking_arrow,
)
from preopt.diagram import TypeMismatchError


@pytest.fixture
def arrow():
    """0 -> 1."""
    return walking_arrow()


def test_named_categories_pass_the_laws(arrow):
    for c in (terminal_category(), discrete_category(3), arrow):
        assert check_fincat(c).ok


def test_walking_arrow_homs(arrow):
    assert arrow.hom(0, 1) == ((0, 1),)
    assert arrow.hom(1, 0) == ()
    assert arrow.compose((0, 1), arrow.id(0)) == (0, 1)
    assert arrow.then(arrow.id(0), (0, 1), arrow.id(1)) == (0, 1)


def test_non_composable_pair_raises(arrow):
    with pytest.raises(FinCatError):
        arrow.compose(arrow.id(0), arrow.id(1))


def test_make_fincat_reports_the_failing_law():
    with pytest.raises(LawViolationError) as exc:
        make_fincat(
            [0],
            {"i": (0, 0), "f": (0, 0)},
            {("i", "i"): "i", ("f", "i"): "i", ("i", "f"): "f", ("f", "f"): "f"},
            {0: "i"},
        )
    assert exc.value.law == "unit"
    assert exc.value.exit_code == 1


def test_make_fincat_requires_total_composition():
    with pytest.raises(LawViolationError) as exc:
        make_fincat([0], {"i": (0, 0)}, {}, {0: "i"})
    assert exc.value.law == "totality"


def test_poset_category_is_thin():
    c = poset_category([1, 2, 3], lambda a, b: b % a == 0)
    assert len(c) == 5
    assert c.hom(1, 3) == ((1, 3),)
    assert c.hom(2, 3) == ()


def test_product_category(arrow):
    square = product_category(arrow, arrow)
    assert len(square.objects) == 4
    assert len(square) == 9


def test_functor_must_preserve_typing(arrow):
    with pytest.raises(LawViolationError):
        make_functor(arrow, arrow, {arrow.id(0): arrow.id(0), arrow.id(1): arrow.id(0), (0, 1): (0, 1)})
    assert make_functor(arrow, arrow, identity_functor(arrow).arrow_map).arrow_map[(0, 1)] == (0, 1)


def test_category_document_round_trip(arrow):
    data = fincat_to_dict(arrow)
    assert data["arrows"][0] == [[0, 0], 0, 0]
    restored = fincat_from_dict(data)
    assert restored.objects == arrow.objects
    assert restored.sorted_arrows == arrow.sorted_arrows


def test_category_document_missing_key():
    with pytest.raises(FinCatError):
        fincat_from_dict({"objects": [0]})


def test_funny_words_do_not_interchange(arrow):
    tensor = funny_tensor(arrow, arrow)
    lr = tensor.word((0, 0), [("L", (0, 1)), ("R", (0, 1))])
    rl = tensor.word((0, 0), [("R", (0, 1)), ("L", (0, 1))])
    assert lr.cod == rl.cod == (1, 1)
    assert lr.letters != rl.letters


def test_funny_reduction_drops_identities_and_merges(arrow):
    tensor = funny_tensor(arrow, arrow)
    letters = [("L", (0, 0)), ("L", (0, 1)), ("L", (1, 1)), ("R", (0, 0))]
    assert tensor.reduce(letters) == (("L", (0, 1)),)
    assert tensor.is_confluent(letters)


def test_funny_word_type_mismatch(arrow):
    tensor = funny_tensor(arrow, arrow)
    with pytest.raises(TypeMismatchError):
        tensor.word((1, 0), [("L", (0, 1))])
