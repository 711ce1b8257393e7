import os
from pathlib import Path

import pytest

import vkp

DATA = Path(os.environ.get("VKP_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))

HARROP = (
    "fun (w : ~B -> A1 \\/ A2) => hop (x : ~B). w x of "
    "{ y => inj1[~B -> A2] y | y => inj2[~B -> A1] y }"
)
HARROP_TYPE = "(~B -> A1 \\/ A2) -> (~B -> A1) \\/ (~B -> A2)"


def test_parse_and_print():
    t = vkp.parse_term("fun (x : A) => x")
    assert str(t) == "fun (x : A) => x"
    assert t == vkp.Term("fun (y : A) => y")
    assert str(vkp.parse_formula("~B -> A1 \\/ A2")) == "~B -> A1 \\/ A2"
    assert vkp.Term("f x").free_vars == {"f", "x"}


def test_parse_error():
    with pytest.raises(vkp.ParseError):
        vkp.parse_term("fun (x : A) =>")


def test_check_and_infer():
    assert str(vkp.infer(HARROP, "KP")) == HARROP_TYPE
    vkp.check(HARROP, HARROP_TYPE, "KP")
    with pytest.raises(vkp.TypeCheckError, match="hop"):
        vkp.check(HARROP, HARROP_TYPE, "IPC")
    assert str(vkp.infer("f a", ctx={"f": "A -> B", "a": "A"})) == "B"


def test_check_script():
    results = vkp.check_script((DATA / "harrop.vkp").read_text())
    assert [name for name, _ in results] == ["harrop", "harrop_left", "harrop_right", "harrop_absurd"]
    assert all(err is None for _, err in results)
    ipc = vkp.check_script((DATA / "harrop.vkp").read_text(), "IPC")
    assert all(err.startswith("CalculusViolation") for _, err in ipc)


def test_normalize_and_extract():
    t = "(fun (x : A) => x) ((fun (y : A) => y) a)"
    assert str(vkp.normalize(t, "KP", ctx={"a": "A"})) == "a"
    side, witness, disjunct = vkp.extract("inj1[B] (fun (x : A) => x)")
    assert side == "Left"
    assert witness == vkp.Term("fun (x : A) => x")
    assert str(disjunct) == "A -> A"
    with pytest.raises(vkp.NormalizeError):
        vkp.extract("inj1[B] a")


def test_eval_v_removes_visser_nodes():
    t = (
        "visser (x1 : B -> C). inj1[A2] x1 of { y => inj1[(B -> C) -> A2] y "
        "| y => inj2[(B -> C) -> B -> C] y | z => inj1[(B -> C) -> A2] (fun (h : B -> C) => h) }"
    )
    nf = vkp.eval_v(t)
    assert "visser" not in str(nf)
    vkp.check(nf, "((B -> C) -> B -> C) \\/ ((B -> C) -> A2)", "IPC")


def test_prove():
    ok, witness = vkp.prove("A -> B -> A")
    assert ok
    vkp.check(witness, "A -> B -> A")
    ok, model = vkp.prove(HARROP_TYPE)
    assert not ok
    assert model.startswith("worlds ")
