"""Acceptance criteria, one test per criterion; each records a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are printed
in the "acceptance criteria" section of the terminal summary.
"""

import time
from contextlib import contextmanager
from functools import lru_cache

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bourbaki import curve as curve_mod
from bourbaki.curve import (
    CurveInput,
    InputRejected,
    bourbaki,
    chart_tjurina,
    classify,
    cusp_family_member,
    family_conjecture_scan,
    initial_choices,
    radical_inclusion,
    syzygy_data,
    tjurina_total,
)
from bourbaki.groebner import Ideal
from bourbaki.hilbert import degree_or_length, hilbert_function_from_gb, hilbert_function_oracle
from bourbaki.resolution import resolve_ideal

from conftest import F3191, exact_in_degree, forms, homogeneous_ideals, poly, singular_curves

PROPERTY_CASES = 50


def _clear_caches():
    for name in dir(curve_mod):
        fn = getattr(curve_mod, name)
        if hasattr(fn, "cache_clear"):
            fn.cache_clear()


@contextmanager
def criterion(record, number, text, limit):
    _clear_caches()
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"runtime {elapsed:.2f}s exceeds {limit}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        record(number, f"{text} [{elapsed:.2f}s < {limit}s]", ok)


def q(text):
    return CurveInput.from_text(text)


def test_criterion_1_quintic(acceptance):
    with criterion(acceptance, 1, "quintic: syz [3,3,4,4], e=3, tau=8, shifts, numerator, Bour=5", 5):
        inp = q("x^5+x^4*y+x^3*z^2+y^2*z^3")
        syz = syzygy_data(inp)
        assert list(syz.degrees) == [3, 3, 4, 4] and syz.e == 3
        assert tjurina_total(inp) == 8
        b = bourbaki(inp)
        # R^2(-4) -> R^2(-3) + R(-2): internal degrees of F1 and F0
        assert sorted(b.resolution.shifts(2)) == [4, 4]
        assert sorted(b.resolution.shifts(1)) == [2, 3, 3]
        assert b.hilbert_numerator == {0: 1, 2: -1, 3: -2, 4: 2}
        assert b.bour == 5


def test_criterion_2_sextic(acceptance):
    with criterion(acceptance, 2, "sextic: syz [2,4,4], I=(y,z), Bour=1, tau=18, nearly free (2,4)", 5):
        inp = q("x*y^4*z+x^6+y^6")
        assert list(syzygy_data(inp).degrees) == [2, 4, 4]
        b = bourbaki(inp)
        assert Ideal(b.minors) == Ideal([poly("y"), poly("z")])
        assert b.bour == 1
        assert tjurina_total(inp) == 18
        r = classify(inp)
        assert r.nearly_free and r.nearly_free_exponents == [2, 4]


def test_criterion_3_cusp_family(acceptance):
    with criterion(acceptance, 3, "cusps d=2..6: e=1, I=(y,z), Bour=1, tau=d(d-1)", 10):
        for d in range(2, 7):
            inp = cusp_family_member(d)
            assert syzygy_data(inp).e == 1
            b = bourbaki(inp)
            assert Ideal(b.minors) == Ideal([poly("y"), poly("z")])
            assert b.bour == 1
            assert tjurina_total(inp) == d * (d - 1)


def test_criterion_4_nodal_family(acceptance):
    with criterion(acceptance, 4, "nodal f_d, d=2..6: tau=mu=#Sing=1, e=d, Bour=polar=d^2-1, conjecture shape", 60):
        for v in family_conjecture_scan(2, 6):
            d = v.d
            assert v.tau == v.mu == v.sing_count == 1
            assert v.e == d
            assert v.bour == v.polar_degree == d * d - 1
            assert v.checks["conjectured_shape"] and v.checks["max_syzygy_2d_minus_2"]


def test_criterion_5_homaloidal_cubics(acceptance):
    with criterion(acceptance, 5, "xyz free (1,1), Bour=0, mu=3, polar 1; x(y^2-xz) free, homaloidal", 5):
        r = classify(q("x*y*z"))
        assert r.free and r.free_exponents == [1, 1] and r.bour == 0
        assert r.mu == 3 and r.polar_degree == 1 and r.homaloidal
        r = classify(q("x*(y^2-x*z)"))
        assert r.free and r.bour == 0 and r.homaloidal


def test_criterion_6_fermat(acceptance):
    with criterion(acceptance, 6, "Fermat D=3..6: Bour=(D-1)^2", 10):
        for D in range(3, 7):
            assert bourbaki(q(f"x^{D}+y^{D}+z^{D}")).bour == (D - 1) ** 2


def test_criterion_7_radical_example(acceptance):
    with criterion(acceptance, 7, "radical quartic: two initial generators, inclusion strict for one, equal for other", 10):
        inp = q("x^2*y^2+x^2*z^2+y^2*z^2+2*x*y*z*(1/2*x+y+z)")
        choices = initial_choices(inp)
        assert len(choices) == 2
        results = [radical_inclusion(inp, c) for c in choices]
        assert all(r.included for r in results)
        assert sorted(r.equal for r in results) == [False, True]
        assert len({bourbaki(inp, c).bour for c in choices}) == 1


# criterion 8: randomized property suites -----------------------------------------


def _run_property(body, strategy):
    seen = []

    @settings(max_examples=PROPERTY_CASES, database=None)
    @given(strategy)
    def prop(case):
        body(case)
        seen.append(case)

    prop()
    return len(seen)


def _curve_or_skip(f):
    inp = CurveInput(f)
    try:
        syzygy_data(inp)
    except InputRejected:
        assume(False)
    return inp


def prop_hilbert_oracle(gens):
    gb = Ideal(gens).groebner()
    for n in range(11):
        assert hilbert_function_from_gb(gb, n) == hilbert_function_oracle(gens, n)


def prop_bour_formula(f):
    inp = _curve_or_skip(f)
    b = bourbaki(inp)
    d, e = inp.d, syzygy_data(inp).e
    tau = chart_tjurina(inp)  # affine route, independent of the resolution of J_f
    assert tau == tjurina_total(inp)
    if b.is_free:
        assert d * d + e * (e - d) - tau == 0
    else:
        dim, deg = degree_or_length(Ideal(b.minors))
        assert dim == 1 and deg == d * d + e * (e - d) - tau == b.bour


def prop_bounds(f):
    inp = _curve_or_skip(f)
    tau = tjurina_total(inp)
    assume(tau > 0)
    d, e = inp.d, syzygy_data(inp).e
    assert bourbaki(inp).bour <= e * e
    assert d * (d - e) <= tau <= d * d + e * (e - d)


def prop_resolution(gens):
    res = resolve_ideal(gens)
    assert res.is_complex() and res.is_minimal() and res.length <= 3
    top = max(max(d.col_shifts) for d in res.differentials)
    for n in range(top + 1):
        assert exact_in_degree(res, n)


@lru_cache(maxsize=None)
def _bour(f):
    return bourbaki(CurveInput(f)).bour


def prop_transversal(pair):
    f1, f2 = pair
    for f in (f1, f2):
        if f.total_degree() == 2:
            inp = _curve_or_skip(f)
            assume(tjurina_total(inp) == 0)  # smooth conic
    union = _curve_or_skip(f1 * f2)
    r = classify(union)
    n = f1.total_degree() * f2.total_degree()
    assume(r.nodal and r.sing_count == n)  # transversal: deg f1 * deg f2 nodes
    b1 = _bour(f1) if f1.total_degree() > 1 else 0
    b2 = _bour(f2) if f2.total_degree() > 1 else 0
    expected = b1 + b2 + (f1.total_degree() - 1) * (f2.total_degree() - 1)
    assert r.bour == expected


def _form(deg):
    return forms(deg, F3191, min_terms=deg + 2)


conic_pairs = st.one_of(st.tuples(_form(2), _form(2)), st.tuples(_form(2), _form(1)))
curves = st.one_of(singular_curves(3, 5), st.integers(3, 5).flatmap(lambda D: forms(D, F3191, min_terms=4)))

SUITES = [
    ("8a", "Groebner Hilbert function = Macaulay oracle, degrees <= 10", prop_hilbert_oracle, homogeneous_ideals(3, 5)),
    ("8b", "deg(R/I_eps) = d^2 + e(e-d) - tau", prop_bour_formula, curves),
    ("8c", "Bour <= e^2 and d(d-e) <= tau <= d^2+e(e-d) on singular curves", prop_bounds, singular_curves(3, 5)),
    ("8d", "resolutions are exact, minimal complexes", prop_resolution, homogeneous_ideals(3, 4)),
    ("8e", "transversal union formula on conic pairs and conic + line", prop_transversal, conic_pairs),
]

_suite_start = {}


@pytest.mark.parametrize("tag, text, body, strategy", SUITES, ids=[s[0] for s in SUITES])
def test_criterion_8_properties(acceptance, tag, text, body, strategy):
    _suite_start.setdefault("t", time.perf_counter())
    ok = False
    start = time.perf_counter()
    try:
        count = _run_property(body, strategy)
        assert count >= PROPERTY_CASES, f"only {count} cases ran"
        total = time.perf_counter() - _suite_start["t"]
        assert total < 600, f"property suites took {total:.0f}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        acceptance(tag, f"{text} [{elapsed:.2f}s]", ok)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
