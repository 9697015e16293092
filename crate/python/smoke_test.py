"""Smoke test for the lcs_workbench extension.

Build and expose the module first, e.g.
    cargo build --release -p lcs-python --features extension-module
    cp target/release/liblcs_workbench.so python/lcs_workbench.so
or `maturin develop -m crates/python/Cargo.toml`.
"""
from fractions import Fraction

import lcs_workbench as lw


def check_elements():
    x1, x2 = lw.Element(2, 0, [0]), lw.Element(2, 0, [1])
    br = x1.bracket(x2)
    assert br.terms() == {(0, 1): 1, (1, 0): -1}, br.terms()
    assert br.bracket(br).is_zero()
    # the commutator of two even letters maps to a nonzero 2-form
    assert "dx1*dx2" in br.phi(), br.phi()

    # odd letters anticommute: [y1, y1] = 2 y1^2
    y = lw.Element(0, 1, [0])
    assert y.bracket(y) == (y * y).scale(2, 1)
    assert y.star(y).terms() == {(0, 0): Fraction(1)}

    triple = lw.Element.nested([x1, x1, x2])
    assert triple.degree() == [2, 1]
    assert triple.parity() == 0


def check_dims():
    d = lw.dims(2, 0, 5)
    totals = {}
    for deg, v in d["B2"].items():
        totals[sum(deg)] = totals.get(sum(deg), 0) + v
    assert [totals.get(t, 0) for t in range(1, 6)] == [0, 1, 2, 3, 4], totals
    b3 = {}
    for deg, v in d["B3"].items():
        b3[sum(deg)] = b3.get(sum(deg), 0) + v
    assert [b3.get(t, 0) for t in (3, 4, 5)] == [2, 4, 6], b3


def check_schur():
    s = lw.schur([2, 1], 2, 0, 3)
    assert s == {(2, 1): 1, (1, 2): 1}, s


def check_jobs():
    r = lw.run_job("verify", 1, 1, 5, checks=["fs", "f3"])
    assert r["ok"], r
    assert len(r["manifest"]["digest"]) == 64
    again = lw.run_job("verify", 1, 1, 5, checks=["fs", "f3"])
    assert again["manifest"]["digest"] == r["manifest"]["digest"]

    fit = lw.run_job("conjecture", 2, 0, 6, target="fit")
    rows = [x for x in fit["rows"] if x["series_or_check"] == "g_lambda.B3"]
    assert [(x["degree"], x["value"]) for x in rows] == [([2, 1], 1)], rows


if __name__ == "__main__":
    print("lcs_workbench", lw.__version__)
    for check in (check_elements, check_dims, check_schur, check_jobs):
        check()
        print("ok", check.__name__)
