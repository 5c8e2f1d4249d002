"""Smoke test for the monocat extension module.

Run after `pip install -e crates/py --no-build-isolation`:

    python3 crates/py/python/smoke_test.py
"""

from fractions import Fraction

import monocat


def check_matrices():
    a = monocat.Matrix([[1, 2], ["1/2", 3]])
    inv = a.inverse()
    assert inv is not None
    assert a @ inv == monocat.Matrix.identity(2)
    assert [[Fraction(x) for x in row] for row in inv.tolist()] == [[Fraction(3, 2), -1], [Fraction(-1, 4), Fraction(1, 2)]]
    singular = monocat.Matrix([[1, 1], [1, 1]], characteristic=2)
    assert singular.rank() == 1 and singular.kernel().shape == (2, 1)
    assert (singular + singular).rank() == 0
    assert a.kron(a).shape == (4, 4)
    try:
        a @ singular
    except monocat.MonocatError:
        pass
    else:
        raise AssertionError("mixed fields should be rejected")


def check_fusion():
    assert "fibonacci" in monocat.fusion_names()
    fib = monocat.FusionData.bundled("fibonacci")
    assert fib.simples == ["1", "tau"] and fib.unit == "1"
    assert fib.validate().passed
    assert fib.tensor("tau", "tau") == "1 + tau"
    assert fib.parse("tau^3") == [1, 2]
    assert fib.format([2, 0]) == "2(1)"
    # dim End(tau^n) follows the Fibonacci numbers F(2n-1)
    _, rows = fib.growth_table("tau", 5)
    assert [r[1] for r in rows] == [1, 2, 5, 13, 34]
    assert all(end <= bound for _, end, bound in rows)
    image = fib.embed("tau")
    assert image["entries"] == [[0, 1], [1, 1]]

    broken = monocat.FusionData.bundled("fibonacci")
    broken.set_multiplicity("tau", "tau", "1", 0)
    report = broken.validate()
    assert not report.passed and report.failing()
    assert report.to_dict()["passed"] is False


def check_module_categories():
    fixtures = monocat.bundled_fixtures()
    assert any(kind == "watts" for _, kind, _, _ in fixtures)
    for name, kind, _, mutant in fixtures:
        if kind != "watts":
            continue
        fixture = monocat.WattsFixture.load(name)
        report = fixture.run("all", seed=0)
        assert report.passed != mutant, (name, report.failing())
        assert (fixture.mutation is not None) == mutant
    only_t = monocat.WattsFixture.load("strict-f3-z2").run("T")
    assert all(c["name"].startswith("T/") for c in only_t.to_dict()["checks"])


if __name__ == "__main__":
    check_matrices()
    check_fusion()
    check_module_categories()
    print("smoke test passed")
