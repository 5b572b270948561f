"""Invariants of a reduced plane curve V(f) in P^2.

The degree of f is D = d + 1.  Syzygies of the gradient ideal are graded in
standard degree: (a, b, c) has degree k when a, b, c are forms of degree k.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field, asdict
from functools import lru_cache

from .groebner import (
    Ideal,
    ModuleVector,
    kernel_of_map,
    krull_dimension,
    maximal_ideal,
    quotient_dimension,
    radical_membership,
    saturate,
    eliminate,
    zero_dim_radical_and_count,
    NotZeroDimensional,
)
from .hilbert import (
    hilbert_data,
    hilbert_numerator,
    divide_one_minus_t,
    tpoly_str,
    _rank,
)
from .polyring import (
    Polynomial,
    CoordinateChange,
    apply_change,
    field_from_spec,
    format_poly,
    homogeneous_degree,
    parse_poly,
)
from .resolution import BettiTable, FreeResolution, GradedMatrix, resolve_ideal

SCHEMA_VERSION = "bourbaki-report/1"
CHART_RETRIES = 8
CHART_BOX = 3


class CurveError(Exception):
    """Base class for curve pipeline errors."""


class InputRejected(CurveError):
    """The input violates a precondition (CLI exit code 2)."""


class NotHomogeneous(InputRejected):
    pass


class NotReduced(InputRejected):
    pass


class ConeInput(InputRejected):
    pass


class BadCharacteristic(InputRejected):
    pass


class FreeDivisor(CurveError):
    """Raised by operations that need a non-free curve; Bour is 0 here."""


class InternalError(CurveError):
    """A guaranteed property failed; signals a bug."""


class InternalCodimMismatch(InternalError):
    pass


class InternalInconsistency(InternalError):
    pass


class RetriesExhausted(CurveError):
    pass


class NonIsolatedCritical(CurveError):
    pass


class ChoiceError(InputRejected):
    pass


# ---------------------------------------------------------------------------
# input


@dataclass(frozen=True)
class CurveInput:
    f: Polynomial
    seed: int = 0
    assume_irreducible: bool = False

    @classmethod
    def from_text(cls, text, field="q", seed=0, assume_irreducible=False):
        fld = field_from_spec(field) if isinstance(field, str) else field
        return cls(parse_poly(text, fld), seed, assume_irreducible)

    @property
    def D(self):
        return homogeneous_degree(self.f)

    @property
    def d(self):
        return self.D - 1

    @property
    def field(self):
        return self.f.field

    @property
    def field_spec(self):
        return self.f.field.spec


def nodal_family_member(d, field="q"):
    """(x^2-y^2) z^(d-1) - (x^(d-1) - y^(d-1)) x^2 - y^(d+1)."""
    if d < 2:
        raise ValueError("family starts at d = 2")
    text = f"(x^2-y^2)*z^{d - 1}-(x^{d - 1}-y^{d - 1})*x^2-y^{d + 1}"
    return CurveInput.from_text(text, field)


def cusp_family_member(d, field="q"):
    return CurveInput.from_text(f"y^{d}*z+x^{d + 1}", field)


# ---------------------------------------------------------------------------
# gradient ideal and syzygies


def _partials(f):
    return [f.derivative(i) for i in range(3)]


def _linear_rank(polys):
    field = polys[0].field
    rows = [{m: field.to_fraction(c) if not field.p else int(c) for m, c in p.terms.items()} for p in polys]
    return _rank(rows, field.p)


@lru_cache(maxsize=256)
def gradient_ideal(inp: CurveInput) -> Ideal:
    """J_f = (f_x, f_y, f_z) after validating the input curve."""
    f = inp.f
    if f.nvars != 3:
        raise NotHomogeneous("curves live in k[x,y,z]")
    D = homogeneous_degree(f)
    if D is None or not isinstance(D, int):
        raise NotHomogeneous("f must be a nonzero homogeneous polynomial")
    if D < 2:
        raise NotHomogeneous(f"f must have degree at least 2 (got {D})")
    p = f.field.p
    if p and D % p == 0:
        raise BadCharacteristic(f"characteristic {p} divides deg f = {D}")
    parts = _partials(f)
    if krull_dimension(Ideal([f] + parts)) > 1:
        raise NotReduced("f has a repeated factor: (f, f_x, f_y, f_z) has codimension 1")
    if _linear_rank(parts) < 3:
        raise ConeInput("partial derivatives are linearly dependent, so V(f) is a cone")
    return Ideal(parts)


@dataclass(frozen=True)
class SyzygyData:
    generators: tuple  # ModuleVectors in standard degree
    degrees: tuple
    e: int
    relations: GradedMatrix  # r x s, minimal relations among the generators
    relation_degrees: tuple
    resolution: FreeResolution  # minimal resolution of R/J_f
    betti: BettiTable

    @property
    def generator_matrix(self):
        return GradedMatrix.from_columns(self.generators, [0, 0, 0], list(self.degrees))


@lru_cache(maxsize=256)
def syzygy_data(inp: CurveInput) -> SyzygyData:
    J = gradient_ideal(inp)
    d = inp.d
    parts = list(J.gens)
    row = GradedMatrix([parts], [-d], [0, 0, 0])
    gens = kernel_of_map(row)
    degs = tuple(v.degree() for v in gens)
    gens = tuple(ModuleVector(v.entries, (0, 0, 0)) for v in gens)
    gmat = GradedMatrix.from_columns(gens, [0, 0, 0], list(degs))
    rels = kernel_of_map(gmat)
    rdegs = tuple(v.degree() for v in rels)
    relmat = GradedMatrix.from_columns(rels, list(degs), list(rdegs), inp.field, 3)
    if rels and kernel_of_map(relmat):
        raise InternalInconsistency("syzygy module has projective dimension > 1")
    if len(gens) - len(rels) != 2:
        raise InternalInconsistency("syzygy module does not have rank 2")
    # R/J_f: R <- R(-d)^3 <- (+) R(-d-a_j) <- (+) R(-d-b_k)
    d1 = GradedMatrix([parts], [0], [d, d, d])
    d2 = GradedMatrix(gmat.entries, [d, d, d], [d + a for a in degs], inp.field, 3)
    diffs = [d1, d2]
    if rels:
        diffs.append(GradedMatrix(relmat.entries, [d + a for a in degs], [d + b for b in rdegs], inp.field, 3))
    res = FreeResolution(diffs, [0])
    return SyzygyData(gens, degs, min(degs), relmat, rdegs, res, BettiTable.from_resolution(res))


# ---------------------------------------------------------------------------
# Bourbaki ideal


def determinant(rows):
    """Determinant of a square polynomial matrix by cached Laplace expansion."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    cache = {}

    def det(i, cols):
        if i == n:
            return None
        key = (i, cols)
        if key in cache:
            return cache[key]
        total = None
        for k, c in enumerate(cols):
            a = rows[i][c]
            if a.is_zero():
                continue
            rest = cols[:k] + cols[k + 1 :]
            sub = det(i + 1, rest)
            if sub is None:
                term = a
            elif sub.is_zero():
                continue
            else:
                term = a * sub
            if k % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = Polynomial.zero(rows[0][0].field, rows[0][0].nvars)
        cache[key] = total
        return total

    return det(0, tuple(range(n)))


@dataclass(frozen=True)
class BourbakiData:
    choice: int | None
    epsilon: ModuleVector | None
    H: Ideal | None
    psi: GradedMatrix | None
    minors: tuple
    resolution: FreeResolution | None
    bour: int
    formula_value: int
    is_free: bool
    hilbert_numerator: dict = dc_field(default_factory=dict)

    @property
    def ideal(self):
        return Ideal(self.minors) if self.minors else None

    def generator_degrees(self):
        return sorted(homogeneous_degree(m) for m in self.minors)


@lru_cache(maxsize=256)
def tjurina_data(inp: CurveInput):
    """(tau, smooth, length of R/J_f): tau = deg R/J_f, or 0 when J_f is m-primary."""
    syz = syzygy_data(inp)
    hd = hilbert_data(hilbert_numerator(syz.resolution))
    if hd.dim == 0:
        return 0, True, hd.value
    if hd.dim != 1:
        raise InternalInconsistency(f"R/J_f has dimension {hd.dim}")
    return hd.value, False, None


def tjurina_total(inp: CurveInput) -> int:
    return tjurina_data(inp)[0]


def initial_choices(inp):
    syz = syzygy_data(inp)
    return [i for i, a in enumerate(syz.degrees) if a == syz.e]


@lru_cache(maxsize=512)
def bourbaki(inp: CurveInput, choice=None, allow_noninitial=False) -> BourbakiData:
    syz = syzygy_data(inp)
    d, e = inp.d, syz.e
    tau, smooth, _ = tjurina_data(inp)
    formula = d * d + e * (e - d) - tau
    r = len(syz.generators)
    if choice is None:
        choice = initial_choices(inp)[0]
    if not 0 <= choice < r:
        raise ChoiceError(f"choice {choice} out of range 0..{r - 1}")
    if syz.degrees[choice] != e and not allow_noninitial:
        raise ChoiceError(f"generator {choice} has degree {syz.degrees[choice]}, not the initial degree {e}")
    if r == 2:
        if formula != 0:
            raise InternalInconsistency("free divisor with tau != d^2 + e(e-d)")
        return BourbakiData(None, None, None, None, (), None, 0, formula, True)
    a_c = syz.degrees[choice]
    twist = a_c - d  # F(d - a_c) shifts every degree by a_c - d
    rows = [row for i, row in enumerate(syz.relations.entries) if i != choice]
    row_shifts = [a + twist for i, a in enumerate(syz.degrees) if i != choice]
    col_shifts = [b + twist for b in syz.relation_degrees]
    psi = GradedMatrix(rows, row_shifts, col_shifts, inp.field, 3)
    minors = []
    for j in range(len(rows)):
        sub = [row for i, row in enumerate(rows) if i != j]
        m = determinant(sub)
        minors.append(-m if j % 2 else m)
    if any(m.is_zero() for m in minors):
        raise InternalCodimMismatch("a maximal minor of the Hilbert-Burch matrix vanishes")
    I = Ideal(minors)
    if krull_dimension(I) != 1:
        raise InternalCodimMismatch("Bourbaki ideal does not have codimension 2")
    res = resolve_ideal(minors)
    if res.length != 2 or sorted(res.shifts(1)) != sorted(row_shifts) or sorted(res.shifts(2)) != sorted(col_shifts):
        raise InternalInconsistency(
            f"Bourbaki resolution shifts {res.shifts(1)} | {res.shifts(2)} differ from {row_shifts} | {col_shifts}"
        )
    num = hilbert_numerator(res)
    hd = hilbert_data(num)
    if hd.dim != 1:
        raise InternalCodimMismatch(f"R/I_eps has dimension {hd.dim}")
    if a_c == e and hd.value != formula:
        raise InternalInconsistency(f"deg R/I_eps = {hd.value} but d^2 + e(e-d) - tau = {formula}")
    eps = syz.generators[choice]
    return BourbakiData(choice, eps, Ideal(eps.entries), psi, tuple(minors), res, hd.value, formula, False, num)


# ---------------------------------------------------------------------------
# affine chart: Milnor number and singular points


def _dehomogenize(g):
    T = Polynomial.variable(0, g.field, 2)
    U = Polynomial.variable(1, g.field, 2)
    one = Polynomial.constant(1, g.field, 2)
    return g.evaluate([T, U, one])


@lru_cache(maxsize=256)
def chart(inp: CurveInput):
    """(F, change): a dehomogenization F = f'(T, U, 1) whose chart holds Sing V(f).

    f' = f(x, y, a x + b y + z); the identity is tried first, then seeded
    random (a, b) from a small box.
    """
    gradient_ideal(inp)
    rng = random.Random(inp.seed)
    z = Polynomial.variable(2, inp.field, 3)
    for attempt in range(CHART_RETRIES + 1):
        if attempt == 0:
            a = b = 0
        else:
            a, b = rng.randint(-CHART_BOX, CHART_BOX), rng.randint(-CHART_BOX, CHART_BOX)
        change = CoordinateChange([[1, 0, 0], [0, 1, 0], [a, b, 1]])
        g = apply_change(inp.f, change) if (a or b) else inp.f
        Jg = Ideal(_partials(g) + [z])
        if krull_dimension(Jg) <= 0:
            return _dehomogenize(g), change
    raise RetriesExhausted(f"no chart containing Sing V(f) after {CHART_RETRIES} retries")


def _rabinowitsch_saturation(J, F):
    """(J : F^inf) in k[T,U] via elimination of s from J + (1 - s F)."""
    s = Polynomial.variable(2, F.field, 3)
    gens = [g.extend(3) for g in J.gens] + [Polynomial.constant(1, F.field, 3) - s * F.extend(3)]
    return eliminate(Ideal(gens), 1)


@lru_cache(maxsize=256)
def milnor_total(inp: CurveInput) -> int:
    F, _ = chart(inp)
    J = Ideal([F.derivative(0), F.derivative(1)], F.field, 2)
    if J.is_unit():
        return 0
    if krull_dimension(J) != 0:
        raise NonIsolatedCritical("(F_T, F_U) is not zero-dimensional in the chart")
    total = quotient_dimension(J)
    away = _rabinowitsch_saturation(J, F)
    return total - quotient_dimension(away)


@lru_cache(maxsize=256)
def singular_point_count(inp: CurveInput) -> int:
    F, _ = chart(inp)
    T = Ideal([F, F.derivative(0), F.derivative(1)], F.field, 2)
    if T.is_unit():
        return 0
    try:
        _, n = zero_dim_radical_and_count(T)
    except NotZeroDimensional as exc:
        raise NonIsolatedCritical(str(exc)) from None
    return n


def chart_tjurina(inp: CurveInput) -> int:
    """Affine Tjurina total, an independent route to tau."""
    F, _ = chart(inp)
    T = Ideal([F, F.derivative(0), F.derivative(1)], F.field, 2)
    return quotient_dimension(T)


def polar_degree(inp: CurveInput) -> int:
    return inp.d**2 - milnor_total(inp)


# ---------------------------------------------------------------------------
# saturation


@dataclass(frozen=True)
class SaturationReport:
    sat_number: int
    local_cohomology_indeg: int | None
    local_cohomology_series: dict
    identity_rhs: int  # 3(d - 3) - sat, reported only


@lru_cache(maxsize=256)
def saturation_report(inp: CurveInput) -> SaturationReport:
    J = gradient_ideal(inp)
    syz = syzygy_data(inp)
    Jsat = saturate(J, maximal_ideal(inp.field))
    nJ = hilbert_numerator(syz.resolution)
    if Jsat.is_unit():
        nS = {}
    else:
        nS = hilbert_numerator(resolve_ideal(list(Jsat.groebner().gens)))
    diff = {k: nJ.get(k, 0) - nS.get(k, 0) for k in set(nJ) | set(nS)}
    diff = {k: v for k, v in diff.items() if v}
    for _ in range(3):
        diff = divide_one_minus_t(diff)
    # diff is now the Hilbert function of J^sat / J (finite length)
    sat = max(diff) + 1 if diff else 0
    indeg = min(diff) if diff else None
    return SaturationReport(sat, indeg, diff, 3 * (inp.d - 3) - sat)


# ---------------------------------------------------------------------------
# radical inclusion


@dataclass(frozen=True)
class RadicalInclusion:
    included: bool
    equal: bool


def radical_inclusion(inp: CurveInput, choice=None) -> RadicalInclusion:
    """Test sqrt(H) in sqrt(I_eps) for H = (eps_1, eps_2, eps_3), and equality."""
    b = bourbaki(inp, choice)
    if b.is_free:
        raise FreeDivisor("free divisor: there is no Bourbaki ideal")
    I = Ideal(b.minors)
    included = all(radical_membership(h, I) for h in b.H.gens)
    equal = included and all(radical_membership(g, b.H) for g in b.minors)
    return RadicalInclusion(included, equal)


# ---------------------------------------------------------------------------
# report


@dataclass
class BoundCheck:
    name: str
    statement: str
    lhs: int
    rhs: int
    relation: str  # "<=" or ">="
    holds: bool
    conditional: bool = False
    equality: bool | None = None


def _check(name, statement, lhs, rel, rhs, conditional=False, equality=None):
    holds = lhs <= rhs if rel == "<=" else lhs >= rhs
    return BoundCheck(name, statement, lhs, rhs, rel, holds, conditional, equality)


@dataclass
class CurveReport:
    polynomial: str
    field: str
    D: int
    d: int
    e: int
    syzygy_degrees: list
    relation_degrees: list
    betti: list
    tau: int
    jacobian_length: int | None
    mu: int
    sing_count: int
    bour: int
    bour_formula: int
    bourbaki_generator_degrees: list
    bourbaki_numerator: str
    polar_degree: int
    smooth: bool
    cone: bool
    free: bool
    free_exponents: list | None
    nearly_free: bool
    nearly_free_exponents: list | None
    three_syzygy: bool
    bour_two_shape: bool
    nodal: bool
    quasi_homogeneous_total: bool
    homaloidal: bool
    bounds: list
    saturation_number: int
    local_cohomology_indeg: int | None
    saturation_identity_rhs: int
    characteristic_caveat: str | None
    assume_irreducible: bool
    seed: int
    choice: int | None
    schema_version: str = SCHEMA_VERSION

    def to_dict(self):
        return asdict(self)

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {data.get('schema_version')!r}")
        data["bounds"] = [BoundCheck(**b) for b in data["bounds"]]
        return cls(**data)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _is_nearly_free(syz, d):
    degs = sorted(syz.degrees)
    if len(degs) != 3 or len(syz.relation_degrees) != 1:
        return None
    a1, a2, a3 = degs
    if a2 != a3 or syz.relation_degrees[0] != a2 + 1 or a1 + a2 != d + 1:
        return None
    return [a1, a2]


def _is_bour_two_shape(syz, d):
    e = syz.e
    return (
        sorted(syz.degrees) == sorted([e, d - e + 1, d - e + 2])
        and list(syz.relation_degrees) == [d - e + 3]
        and 2 * e <= d + 1
    )


def bounds_report(inp: CurveInput, report=None) -> list:
    rep = report or classify(inp)
    d, e = rep.d, rep.e
    out = [
        _check("bour_upper", "Bour <= e^2", rep.bour, "<=", e * e),
        _check("tjurina_lower", "d(d-e) <= tau", d * (d - e), "<=", rep.tau),
        _check("tjurina_upper", "tau <= d^2 + e(e-d)", rep.tau, "<=", d * d + e * (e - d)),
        _check("sing_count", "#Sing <= d(d+1)/2", rep.sing_count, "<=", d * (d + 1) // 2),
    ]
    qh = rep.mu == rep.tau
    out.append(
        _check("polar_bour", "e^2 - ed + polar degree <= Bour", e * e - e * d + rep.polar_degree, "<=", rep.bour,
               equality=(e * e - e * d + rep.polar_degree == rep.bour))
    )
    if rep.assume_irreducible:
        out.append(_check("sing_count_irreducible", "#Sing <= d(d-1)/2", rep.sing_count, "<=", d * (d - 1) // 2, True))
        if not rep.free:
            out.append(_check("bour_irreducible", "Bour >= e(e-d) + d", rep.bour, ">=", e * (e - d) + d, True))
    if rep.nodal and not rep.smooth:
        out.append(_check("nodal_indeg", "e >= d - 1", e, ">=", d - 1))
        out.append(_check("nodal_bour", "Bour >= d(d-1)/2 + e(e-d)", rep.bour, ">=", d * (d - 1) // 2 + e * (e - d)))
        if rep.assume_irreducible:
            out.append(
                _check("nodal_bour_irreducible", "Bour >= d(d+1)/2 + e(e-d)", rep.bour, ">=",
                       d * (d + 1) // 2 + e * (e - d), True)
            )
    if out[4].equality != qh:
        raise InternalInconsistency("polar bound equality does not match mu = tau")
    return out


@lru_cache(maxsize=256)
def classify(inp: CurveInput, choice=None) -> CurveReport:
    syz = syzygy_data(inp)
    d, e = inp.d, syz.e
    tau, smooth, jlen = tjurina_data(inp)
    b = bourbaki(inp, choice)
    mu = milnor_total(inp)
    nsing = singular_point_count(inp)
    if chart_tjurina(inp) != tau:
        raise InternalInconsistency("affine Tjurina total differs from deg R/J_f")
    polar = d * d - mu
    free = b.is_free
    free_exp = sorted(syz.degrees) if free else None
    nf = _is_nearly_free(syz, d)
    two = _is_bour_two_shape(syz, d)
    sat = saturation_report(inp)
    checks = [
        (free == (b.bour == 0), "free <=> Bour = 0"),
        (free == (len(syz.degrees) == 2), "free <=> two syzygy generators"),
        (free == (tau == d * d + e * (e - d)), "free <=> tau = d^2 + e(e-d)"),
        ((nf is not None) == (b.bour == 1), "nearly free <=> Bour = 1"),
        (smooth == (b.bour == d * d), "smooth <=> Bour = d^2"),
        (two == (b.bour == 2), "Bour = 2 <=> resolution shape"),
        (smooth == (nsing == 0), "smooth <=> no singular points"),
        (smooth or mu >= tau >= nsing >= 1, "mu >= tau >= #Sing >= 1"),
    ]
    if free:
        checks.append((sum(syz.degrees) == d, "free exponents sum to d"))
    for ok, what in checks:
        if not ok:
            raise InternalInconsistency(f"cross-check failed: {what}")
    caveat = None
    if inp.field.p:
        caveat = (
            f"computed over F_{inp.field.p}; Milnor numbers, polar degree and point counts "
            "are those of the reduction mod p and may differ from characteristic 0"
        )
    rep = CurveReport(
        polynomial=format_poly(inp.f),
        field=inp.field_spec,
        D=inp.D,
        d=d,
        e=e,
        syzygy_degrees=list(syz.degrees),
        relation_degrees=list(syz.relation_degrees),
        betti=syz.betti.to_json(),
        tau=tau,
        jacobian_length=jlen,
        mu=mu,
        sing_count=nsing,
        bour=b.bour,
        bour_formula=b.formula_value,
        bourbaki_generator_degrees=b.generator_degrees(),
        bourbaki_numerator=tpoly_str(b.hilbert_numerator),
        polar_degree=polar,
        smooth=smooth,
        cone=False,
        free=free,
        free_exponents=free_exp,
        nearly_free=nf is not None,
        nearly_free_exponents=nf,
        three_syzygy=len(syz.degrees) == 3,
        bour_two_shape=two,
        nodal=(not smooth) and tau == nsing,
        quasi_homogeneous_total=mu == tau,
        homaloidal=polar == 1,
        bounds=[],
        saturation_number=sat.sat_number,
        local_cohomology_indeg=sat.local_cohomology_indeg,
        saturation_identity_rhs=sat.identity_rhs,
        characteristic_caveat=caveat,
        assume_irreducible=inp.assume_irreducible,
        seed=inp.seed,
        choice=b.choice,
    )
    rep.bounds = bounds_report(inp, rep)
    return rep


# ---------------------------------------------------------------------------
# nodal family scan


@dataclass
class FamilyVerdict:
    d: int
    e: int
    tau: int
    mu: int
    sing_count: int
    bour: int
    polar_degree: int
    syzygy_degrees: list
    relation_degrees: list
    checks: dict

    @property
    def theorem_ok(self):
        return all(v for k, v in self.checks.items() if k != "conjectured_shape" and k != "max_syzygy_2d_minus_2")

    @property
    def conjecture_ok(self):
        return self.checks["conjectured_shape"] and self.checks["max_syzygy_2d_minus_2"]

    def to_dict(self):
        out = asdict(self)
        out["theorem_ok"] = self.theorem_ok
        out["conjecture_ok"] = self.conjecture_ok
        return out


def family_conjecture_scan(d_from, d_to, field="q"):
    if not 2 <= d_from <= d_to:
        raise ValueError("need 2 <= from <= to")
    out = []
    for d in range(d_from, d_to + 1):
        inp = nodal_family_member(d, field)
        syz = syzygy_data(inp)
        tau = tjurina_total(inp)
        mu = milnor_total(inp)
        ns = singular_point_count(inp)
        b = bourbaki(inp)
        betti = syz.betti
        checks = {
            "tau_is_1": tau == 1,
            "mu_is_1": mu == 1,
            "one_singular_point": ns == 1,
            "nodal": tau == ns,
            "e_is_d": syz.e == d,
            "bour_is_d2_minus_1": b.bour == d * d - 1,
            "polar_is_d2_minus_1": d * d - mu == d * d - 1,
            "conjectured_shape": (
                betti.shifts(1) == [d, d, d]
                and betti.shifts(2) == sorted([2 * d] * 3 + [3 * d - 2])
                and betti.shifts(3) == [3 * d - 1] * 2
            ),
            "max_syzygy_2d_minus_2": max(syz.degrees) == 2 * d - 2,
        }
        out.append(
            FamilyVerdict(d, syz.e, tau, mu, ns, b.bour, d * d - mu, list(syz.degrees), list(syz.relation_degrees), checks)
        )
    return out


__all__ = [
    "CurveInput",
    "SyzygyData",
    "BourbakiData",
    "CurveReport",
    "BoundCheck",
    "SaturationReport",
    "RadicalInclusion",
    "FamilyVerdict",
    "gradient_ideal",
    "syzygy_data",
    "bourbaki",
    "initial_choices",
    "tjurina_total",
    "milnor_total",
    "singular_point_count",
    "chart_tjurina",
    "polar_degree",
    "classify",
    "bounds_report",
    "radical_inclusion",
    "saturation_report",
    "family_conjecture_scan",
    "nodal_family_member",
    "cusp_family_member",
    "determinant",
    "CurveError",
    "InputRejected",
    "NotHomogeneous",
    "NotReduced",
    "ConeInput",
    "BadCharacteristic",
    "FreeDivisor",
    "InternalError",
    "InternalCodimMismatch",
    "InternalInconsistency",
    "RetriesExhausted",
    "NonIsolatedCritical",
    "ChoiceError",
]
