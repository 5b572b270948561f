"""Hilbert series, degree/length, and a Macaulay-matrix Hilbert function oracle.

Integer (Laurent) polynomials in t are plain dicts ``{exponent: coefficient}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polyring import homogeneous_degree, monomials_of_degree

DEFAULT_ORACLE_CAP = 12


class OracleCapExceeded(ValueError):
    pass


def _clean(p):
    return {k: v for k, v in p.items() if v}


def tpoly_str(p, var="t"):
    if not p:
        return "0"
    parts = []
    for k in sorted(p):
        c = p[k]
        mono = "1" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if k == 0:
            body = str(abs(c))
        else:
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((("-" if c < 0 else "") if not parts else sign) + body)
    return "".join(parts)


def tpoly_eval(p, x):
    return sum(c * x**k for k, c in p.items())


def tpoly_mul(a, b):
    out = {}
    for i, c in a.items():
        for j, d in b.items():
            out[i + j] = out.get(i + j, 0) + c * d
    return _clean(out)


def divide_one_minus_t(p):
    """Exact division of p by (1 - t); raises if p(1) != 0."""
    if tpoly_eval(p, 1) != 0:
        raise ValueError("not divisible by 1 - t")
    if not p:
        return {}
    lo, hi = min(p), max(p)
    # q(t) (1 - t) = p(t)  =>  q_k = sum_{i <= k} p_i
    out = {}
    acc = 0
    for k in range(lo, hi):
        acc += p.get(k, 0)
        if acc:
            out[k] = acc
    return out


def one_minus_t_power(n):
    return {k: (-1) ** k * comb(n, k) for k in range(n + 1)}


@dataclass(frozen=True)
class HilbertData:
    numerator: dict
    reduced: dict
    dim: int
    value: int
    nvars: int = 3

    def series_str(self):
        return f"({tpoly_str(self.numerator)})/(1-t)^{self.nvars}"

    def hilbert_function(self, n):
        return hilbert_function_from_numerator(self.numerator, n, self.nvars)


def hilbert_numerator(res):
    """N(t) = sum_i (-1)^i sum_j t^(shift_ij) along a graded free resolution."""
    out = {}
    for i in range(res.length + 1):
        for s in res.shifts(i):
            out[s] = out.get(s, 0) + (-1) ** i
    return _clean(out)


def hilbert_data(numerator, nvars=3):
    """Split N(t) = Q(t) (1-t)^(nvars - dim) with Q(1) != 0."""
    if not numerator:
        return HilbertData({}, {}, -1, 0, nvars)
    q = dict(numerator)
    k = 0
    while tpoly_eval(q, 1) == 0:
        q = divide_one_minus_t(q)
        k += 1
    return HilbertData(dict(numerator), q, nvars - k, tpoly_eval(q, 1), nvars)


def hilbert_function_from_numerator(numerator, n, nvars=3):
    total = 0
    for a, c in numerator.items():
        m = n - a
        if m >= 0:
            total += c * comb(m + nvars - 1, nvars - 1)
    return total


def degree_or_length(I):
    """(dim R/I, degree) for dim >= 1, or (0, length) when R/I has finite length."""
    from .groebner import Ideal
    from .resolution import resolve_ideal

    gens = I.gens if isinstance(I, Ideal) else tuple(I)
    gens = [g for g in gens if not g.is_zero()]
    if any(g.is_constant() for g in gens):
        raise ValueError("degree of R/(1) is undefined")
    if not gens:
        nv = I.nvars if isinstance(I, Ideal) else 3
        return nv, 1
    nv = gens[0].nvars
    data = hilbert_data(hilbert_numerator(resolve_ideal(gens)), nv)
    if data.dim < 0:
        raise ValueError("degree of R/(1) is undefined")
    return data.dim, data.value


def hilbert_function_from_gb(basis, n):
    """dim of the degree-n piece of the quotient, by counting standard monomials.

    Works for ideals and for graded submodules (``basis.shifts`` set).
    """
    lms = basis.leading_monomials()
    if basis.shifts is None:
        nv = basis.gens[0].nvars if basis.gens else 3
        return sum(
            1
            for m in monomials_of_degree(n, nv)
            if not any(all(a >= b for a, b in zip(m, l)) for l in lms)
        )
    shifts = basis.shifts
    nv = basis.gens[0].entries[0].nvars
    total = 0
    for pos, s in enumerate(shifts):
        mine = [l for p, l in lms if p == pos]
        for m in monomials_of_degree(n - s, nv):
            if not any(all(a >= b for a, b in zip(m, l)) for l in mine):
                total += 1
    return total


# ---------------------------------------------------------------------------
# independent linear-algebra oracle


def _rank(rows, p):
    """Rank of sparse rows (dicts) over Q (p None) or F_p; plain elimination."""
    from fractions import Fraction

    pivots = {}
    rank = 0
    for row in rows:
        if p:
            v = {k: c % p for k, c in row.items() if c % p}
        else:
            v = {k: Fraction(c) for k, c in row.items() if c}
        while v:
            col = min(v)
            if col not in pivots:
                c = v[col]
                if p:
                    inv = pow(c, -1, p)
                    v = {k: x * inv % p for k, x in v.items()}
                else:
                    v = {k: x / c for k, x in v.items()}
                pivots[col] = v
                rank += 1
                break
            piv = pivots[col]
            c = v[col]
            for k, x in piv.items():
                y = v.get(k, 0) - c * x
                if p:
                    y %= p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return rank


def _coeff_int(field, c):
    if field.p:
        return int(c)
    return field.to_fraction(c)


def macaulay_rank(vectors, shifts, n):
    """dim_k of the degree-n piece of the submodule generated by ``vectors``.

    ``vectors`` are tuples of homogeneous polynomials (or single polynomials
    for ideals); ``shifts`` the degrees of the ambient basis.
    """
    rows = []
    field = None
    for v in vectors:
        entries = v if isinstance(v, (tuple, list)) else (v,)
        comps = [(i, e) for i, e in enumerate(entries) if not e.is_zero()]
        if not comps:
            continue
        field = comps[0][1].field
        nv = comps[0][1].nvars
        i0, e0 = comps[0]
        vdeg = homogeneous_degree(e0) + shifts[i0]
        if vdeg > n:
            continue
        for m in monomials_of_degree(n - vdeg, nv):
            row = {}
            for i, e in comps:
                for t, c in e.terms.items():
                    key = (i, tuple(a + b for a, b in zip(t, m)))
                    row[key] = _coeff_int(field, c)
            rows.append(row)
    if not rows:
        return 0
    return _rank(rows, field.p)


def hilbert_function_oracle(gens, n, cap=DEFAULT_ORACLE_CAP, nvars=3):
    """dim_k (R/I)_n by row-reducing the degree-n Macaulay matrix of I."""
    if n > cap:
        raise OracleCapExceeded(f"degree {n} exceeds oracle cap {cap}")
    gens = [g for g in gens if not g.is_zero()]
    for g in gens:
        if homogeneous_degree(g) is None:
            raise ValueError("oracle needs homogeneous generators")
    if gens:
        nvars = gens[0].nvars
    total = comb(n + nvars - 1, nvars - 1) if n >= 0 else 0
    return total - macaulay_rank(gens, (0,), n)


__all__ = [
    "HilbertData",
    "hilbert_numerator",
    "hilbert_data",
    "hilbert_function_from_numerator",
    "hilbert_function_from_gb",
    "hilbert_function_oracle",
    "macaulay_rank",
    "degree_or_length",
    "divide_one_minus_t",
    "tpoly_str",
    "tpoly_eval",
    "tpoly_mul",
    "one_minus_t_power",
    "OracleCapExceeded",
]
