import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bourbaki.polyring import QQ, PrimeField, Polynomial, monomials_of_degree, parse_poly

settings.register_profile(
    "default",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

F3191 = PrimeField(3191)

ACCEPTANCE_LINES = []


def poly(text, field=QQ):
    return parse_poly(text, field)


@st.composite
def forms(draw, degree, field=F3191, nvars=3, min_terms=1):
    """A nonzero homogeneous form of the given degree with random support."""
    monos = monomials_of_degree(degree, nvars)
    picks = draw(st.lists(st.sampled_from(monos), min_size=min_terms, max_size=len(monos), unique=True))
    coeffs = draw(st.lists(st.integers(1, 3190), min_size=len(picks), max_size=len(picks)))
    return Polynomial(dict(zip(picks, coeffs)), field, nvars)


@st.composite
def homogeneous_ideals(draw, max_gens=3, max_degree=5, field=F3191):
    k = draw(st.integers(1, max_gens))
    return [draw(forms(draw(st.integers(1, max_degree)), field)) for _ in range(k)]


@st.composite
def singular_curves(draw, min_degree=3, max_degree=5):
    """Forms singular at (0:0:1), or products of two forms."""
    D = draw(st.integers(min_degree, max_degree))
    if draw(st.booleans()):
        f = draw(forms(D, min_terms=3))
        f = Polynomial({m: c for m, c in f.terms.items() if m[2] < D - 1}, F3191)
    else:
        a = draw(st.integers(1, D - 1))
        f = draw(forms(a, min_terms=2)) * draw(forms(D - a, min_terms=2))
    return f


def seeded_form(seed, degree, field=F3191, density=1.0):
    rng = random.Random(seed)
    terms = {}
    for m in monomials_of_degree(degree):
        if rng.random() < density:
            terms[m] = rng.randint(1, (field.p or 50) - 1)
    return Polynomial(terms, field)


@pytest.fixture
def acceptance():
    def record(number, text, ok):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def exact_in_degree(res, n):
    """dim ker(d_i)_n == rank(d_{i+1})_n at every step, by Macaulay-matrix ranks."""
    from bourbaki.hilbert import macaulay_rank

    ranks = []
    for d in res.differentials:
        cols = [tuple(d.entries[i][j] for i in range(d.nrows)) for j in range(d.ncols)]
        ranks.append(macaulay_rank(cols, tuple(d.row_shifts), n))
    for i, d in enumerate(res.differentials):
        dim_src = sum(len(monomials_of_degree(n - s)) for s in d.col_shifts)
        image_next = ranks[i + 1] if i + 1 < len(ranks) else 0
        if dim_src - ranks[i] != image_next:
            return False
    return True
