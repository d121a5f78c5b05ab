import pytest

import skewcal


def test_expr_arithmetic_and_diff():
    x = skewcal.Expr.parse("x", ["x", "y"])
    y = skewcal.Expr.parse("y", ["x", "y"])
    assert (x + y) ** 2 == x**2 + 2 * x * y + y**2
    assert str(x.diff("x")) == "1"
    assert (x**3).diff("x") == 3 * x**2
    assert (x * y - y * x).is_zero()
    assert x.coords == ["x", "y"]


def test_expr_exponentials_and_eval():
    e = skewcal.Expr.parse("exp(2*t)", ["t"])
    assert e.diff("t") == 2 * e
    p = skewcal.Expr.parse("1/2*x^2 + 3", ["x"])
    assert p.eval([2.0]) == pytest.approx(5.0)
    with pytest.raises(ValueError):
        skewcal.Expr.parse("x +", ["x"])


def test_examples_registry():
    names = [e["name"] for e in skewcal.examples()]
    assert "heisenberg-sasaki" in names and len(names) == 7
    for name in names:
        assert skewcal.parse_diagnostics(skewcal.example_text(name)) == []
    with pytest.raises(KeyError):
        skewcal.example_text("no-such-example")


def test_run_suite_verdicts():
    rep = skewcal.run_suite(skewcal.example_text("heisenberg-sasaki"), "theorem38")
    assert rep["suite"] == "theorem38"
    assert [c["verdict"] for c in rep["checks"]] == ["pass"] * 5
    assert all(c["paper_ref"] for c in rep["checks"])

    rep = skewcal.run_suite(skewcal.example_text("broken-jacobiator"), "lie")
    assert {c["verdict"] for c in rep["checks"]} == {"fail"}
    jac = next(c for c in rep["checks"] if c["name"] == "lie/jacobiator")
    assert jac["residual_nonzero_entries"] > 0 and "reason" in jac


def test_run_suite_determinism_and_errors():
    text = skewcal.example_text("aff1-point")
    a = skewcal.run_suite(text, "lie", seed=11)
    b = skewcal.run_suite(text, "lie", seed=11)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b
    with pytest.raises(RuntimeError):
        skewcal.run_suite(text, "not-a-suite")
    with pytest.raises(ValueError):
        skewcal.run_suite("[chart]\ncoords = 7bad\n", "lie")
    assert "all" in skewcal.suite_names()


def test_definition_transforms():
    canon = skewcal.canonical(skewcal.example_text("contact-r3"))
    assert skewcal.canonical(canon) == canon

    derived = skewcal.contactify(skewcal.example_text("contact-r3"))
    assert skewcal.run_suite(derived, "jacobi")["checks"][0]["verdict"] == "pass"

    lifted = skewcal.poissonize(derived)
    assert "exp(-t)" in lifted
    rep = skewcal.run_suite(lifted, "lie")
    assert all(c["verdict"] == "pass" for c in rep["checks"])

    with pytest.raises(ValueError):
        skewcal.poissonize(skewcal.example_text("trivial-abelian"))
    with pytest.raises(ValueError):
        skewcal.contactify(skewcal.example_text("trivial-abelian"))
