import pytest
import sympy
from hypothesis import given, settings

from bourbaki.groebner import (
    GradingError,
    Ideal,
    NotZeroDimensional,
    buchberger,
    eliminate,
    ideal_quotient,
    intersect,
    is_groebner,
    kernel_of_map,
    krull_dimension,
    maximal_ideal,
    minimal_generators,
    normal_form,
    quotient_dimension,
    radical_membership,
    s_pair,
    saturate,
    standard_monomials,
    zero_dim_radical_and_count,
)
from bourbaki.hilbert import macaulay_rank
from bourbaki.polyring import QQ, Polynomial, grevlex, lex, monomials_of_degree, parse_poly
from bourbaki.resolution import GradedMatrix

from conftest import F3191, homogeneous_ideals, poly

X, Y, Z = sympy.symbols("x y z")


def sympy_gb(gens, modulus=None, order="grevlex"):
    exprs = [sympy.sympify(str(g).replace("^", "**")) for g in gens]
    kw = {"modulus": modulus} if modulus else {}
    G = sympy.groebner(exprs, X, Y, Z, order=order, **kw)
    return G


def ours_as_sympy(basis, modulus=None):
    out = set()
    for g in basis.gens:
        e = sympy.sympify(str(g).replace("^", "**"))
        q = sympy.Poly(e, X, Y, Z, modulus=modulus) if modulus else sympy.Poly(e, X, Y, Z, domain="QQ")
        out.add(q.monic())
    return out


def sympy_set(G, modulus=None):
    out = set()
    for e in G.exprs:
        p = sympy.Poly(e, X, Y, Z, modulus=modulus) if modulus else sympy.Poly(e, X, Y, Z, domain="QQ")
        out.add(p.monic())
    return out


def test_reduced_basis_matches_sympy_quintic_gradient():
    f = poly("x^5+x^4*y+x^3*z^2+y^2*z^3")
    J = [f.derivative(i) for i in range(3)]
    ours = buchberger(J, grevlex(3))
    assert ours_as_sympy(ours) == sympy_set(sympy_gb(J))
    assert is_groebner(ours)


def test_lex_basis_matches_sympy():
    gens = [poly("x^2+y*z-z^2"), poly("x*y-z^2"), poly("y^3-x*z^2")]
    ours = buchberger(gens, lex(3))
    assert ours_as_sympy(ours) == sympy_set(sympy_gb(gens, order="lex"))


@settings(max_examples=25)
@given(homogeneous_ideals(max_gens=3, max_degree=3))
def test_reduced_basis_matches_sympy_mod_p(gens):
    ours = buchberger(gens, grevlex(3))
    assert ours_as_sympy(ours, 3191) == sympy_set(sympy_gb(gens, 3191), 3191)


def test_normal_form_and_membership():
    I = Ideal([poly("x^2-y*z"), poly("y^2-x*z")])
    assert I.contains(poly("x^2*y-y^2*z"))
    assert not I.contains(poly("x*y"))
    gb = I.groebner()
    r = normal_form(poly("x^3"), gb)
    assert I.contains(poly("x^3") - r)
    with pytest.raises(ValueError):
        normal_form(poly("x"), gb, lex(3))


def test_s_pair_of_basis_reduces_to_zero():
    gb = buchberger([poly("x^2-y*z"), poly("y^2-x*z")])
    for a in gb.gens:
        for b in gb.gens:
            if a is not b:
                assert normal_form(s_pair(a, b), gb).is_zero()


def test_unit_ideal():
    I = Ideal([poly("x"), poly("x+1")])
    assert I.is_unit()
    assert krull_dimension(I) == -1


def test_krull_dimension():
    assert krull_dimension(Ideal([poly("x"), poly("y")])) == 1
    assert krull_dimension(maximal_ideal(QQ)) == 0
    assert krull_dimension(Ideal([poly("x*y")])) == 2


def test_kernel_of_koszul_row():
    x, y, z = (Polynomial.variable(i) for i in range(3))
    M = GradedMatrix([[x, y, z]], [0], [1, 1, 1])
    ker = kernel_of_map(M)
    assert [v.degree() for v in ker] == [2, 2, 2]
    for v in ker:
        assert (x * v.entries[0] + y * v.entries[1] + z * v.entries[2]).is_zero()


def test_kernel_rejects_bad_grading():
    x = Polynomial.variable(0)
    with pytest.raises(GradingError):
        kernel_of_map(GradedMatrix([[x, x * x]], [0], [1, 1]))


@settings(max_examples=20)
@given(homogeneous_ideals(max_gens=3, max_degree=3))
def test_kernel_dimension_matches_rank_oracle(gens):
    """dim ker_n = dim F_n - rank_n, with ranks from the Macaulay oracle."""
    shifts = [sum(next(iter(g.terms))) for g in gens]
    M = GradedMatrix([gens], [0], shifts)
    ker = kernel_of_map(M)
    for v in ker:
        s = Polynomial.zero(F3191)
        for a, g in zip(v.entries, gens):
            s = s + a * g
        assert s.is_zero()
    for n in range(max(shifts), max(shifts) + 4):
        dim_f = sum(len(monomials_of_degree(n - s)) for s in shifts)
        image = macaulay_rank(gens, (0,), n)
        kernel = macaulay_rank([tuple(v.entries) for v in ker], tuple(shifts), n)
        assert kernel == dim_f - image


def test_minimal_generators_drops_redundant():
    gens = [poly("x^2"), poly("x*y"), poly("x^2+x*y"), poly("x^3")]
    assert len(minimal_generators(gens)) == 2


def test_ideal_quotient_and_saturation():
    I = Ideal([poly("x^2"), poly("x*y")])
    assert ideal_quotient(I, poly("x")) == Ideal([poly("x"), poly("y")])
    assert ideal_quotient(I, poly("y")) == Ideal([poly("x")])
    m = maximal_ideal(QQ)
    assert saturate(Ideal([poly("x^2"), poly("x*y"), poly("x*z")]), m) == Ideal([poly("x")])
    assert saturate(m, m).is_unit()


def test_intersect():
    I = intersect(Ideal([poly("x")]), Ideal([poly("y")]))
    assert I == Ideal([poly("x*y")])


def test_eliminate_conic_parametrization():
    # (s^2, s t, t^2) parametrizes the conic y^2 = x z
    P = Polynomial
    x, y, z, s, t = (P.variable(i, QQ, 5) for i in range(5))
    gens = [x - s**2, y - s * t, z - t**2]
    E = eliminate(Ideal(gens), 2)
    assert E == Ideal([poly("y^2-x*z")])


def test_zero_dimensional_tools():
    T = parse_poly("x", QQ, ("x", "y"))
    U = parse_poly("y", QQ, ("x", "y"))
    one = Polynomial.constant(1, QQ, 2)
    I = Ideal([T * T - one, U * U - T])
    assert quotient_dimension(I) == 4
    assert len(standard_monomials(I)) == 4
    _, n = zero_dim_radical_and_count(Ideal([(T - one) ** 2, U**3]))
    assert n == 1
    with pytest.raises(NotZeroDimensional):
        standard_monomials(Ideal([T * U]))


def test_radical_membership():
    I = Ideal([poly("x^3"), poly("y^2")])
    assert radical_membership(poly("x+y"), I)
    assert not radical_membership(poly("z"), I)
