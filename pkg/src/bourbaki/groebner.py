"""Groebner bases for ideals and graded submodules of free modules.

The engine works on an internal encoding of terms: a term ``m * e_i`` is the
tuple ``order.key(m)`` (with the degree slot shifted by the degree of
``e_i``) followed by ``i``.  Because the encoding is additive, multiplying a
term by a monomial is a componentwise tuple addition, and the leading term of
a dict of terms is simply ``min(dict)``.

Module orders are term-over-position refined by the degree shifts of the
ambient free module, with lower positions winning ties.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from operator import add, sub

from .polyring import (
    MonomialOrder,
    Polynomial,
    block_order,
    grevlex,
    homogeneous_degree,
    ZERO_DEGREE,
)


class GradingError(ValueError):
    pass


class NotZeroDimensional(ValueError):
    pass


# ---------------------------------------------------------------------------
# public value types


@dataclass(frozen=True)
class ModuleVector:
    """Element of a graded free module; ``shifts[i]`` is the degree of e_i."""

    entries: tuple
    shifts: tuple

    def __post_init__(self):
        if len(self.entries) != len(self.shifts):
            raise GradingError("vector length does not match ambient rank")

    @property
    def rank(self):
        return len(self.entries)

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def degree(self):
        """Vector degree if homogeneous, ``None`` if not, ``ZERO_DEGREE`` for 0."""
        deg = None
        for e, s in zip(self.entries, self.shifts):
            h = homogeneous_degree(e)
            if h is ZERO_DEGREE:
                continue
            if h is None:
                return None
            if deg is None:
                deg = h + s
            elif deg != h + s:
                return None
        return ZERO_DEGREE if deg is None else deg

    def __add__(self, other):
        return ModuleVector(tuple(a + b for a, b in zip(self.entries, other.entries)), self.shifts)

    def __sub__(self, other):
        return ModuleVector(tuple(a - b for a, b in zip(self.entries, other.entries)), self.shifts)

    def __neg__(self):
        return ModuleVector(tuple(-a for a in self.entries), self.shifts)

    def scale(self, p):
        if isinstance(p, Polynomial):
            return ModuleVector(tuple(p * a for a in self.entries), self.shifts)
        return ModuleVector(tuple(a.scale(p) for a in self.entries), self.shifts)

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class GroebnerBasis:
    gens: tuple
    order: MonomialOrder
    reduced: bool = True
    shifts: tuple | None = None  # set for module bases

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def leading_monomials(self):
        """Leading exponent vectors (ideal case) or (position, exps) pairs."""
        ctx = _Context.of(self)
        out = []
        for g in self.gens:
            t = min(_encode(g, ctx))
            e = ctx.exps(t)
            out.append(e if self.shifts is None else (t[-1], e))
        return out


# ---------------------------------------------------------------------------
# term encoding


class _Context:
    """Ambient free module R^rank with degree shifts, under a fixed order."""

    def __init__(self, order, nvars, field, shifts=(0,)):
        self.order = order
        self.nvars = nvars
        self.field = field
        self.shifts = tuple(shifts)
        self.rank = len(self.shifts)
        self.slots = order.slots
        if not order.graded and any(self.shifts):
            raise GradingError("degree shifts need a graded order")
        self._tcache = {}

    @classmethod
    def of(cls, basis):
        g0 = basis.gens[0]
        if isinstance(g0, ModuleVector):
            e0 = g0.entries[0]
            return cls(basis.order, e0.nvars, e0.field, g0.shifts)
        return cls(basis.order, g0.nvars, g0.field, (0,))

    def term(self, exps, pos=0):
        k = self._tcache.get((exps, pos))
        if k is None:
            key = self.order.key(exps)
            s = self.shifts[pos]
            if s:
                key = (key[0] - s,) + key[1:]
            k = key + (pos,)
            self._tcache[(exps, pos)] = k
        return k

    def delta(self, exps):
        return self.order.key(exps) + (0,)

    def exps(self, term):
        return tuple(sign * term[slot] for slot, sign in self.slots)

    def degree(self, term):
        return sum(self.exps(term)) + self.shifts[term[-1]]

    def lcm(self, t1, t2):
        e = tuple(max(a, b) for a, b in zip(self.exps(t1), self.exps(t2)))
        return self.term(e, t1[-1])


def _encode(obj, ctx):
    if isinstance(obj, ModuleVector):
        out = {}
        for pos, p in enumerate(obj.entries):
            for m, c in p.terms.items():
                out[ctx.term(m, pos)] = c
        return out
    return {ctx.term(m, 0): c for m, c in obj.terms.items()}


def _decode_vector(terms, ctx):
    parts = [dict() for _ in range(ctx.rank)]
    for t, c in terms.items():
        parts[t[-1]][ctx.exps(t)] = c
    return ModuleVector(
        tuple(Polynomial(p, ctx.field, ctx.nvars, True) for p in parts), ctx.shifts
    )


def _decode_poly(terms, ctx):
    return Polynomial({ctx.exps(t): c for t, c in terms.items()}, ctx.field, ctx.nvars, True)


def _axpy(target, q, src, delta, p):
    """target -= q * (delta * src), in place."""
    get = target.get
    for k, a in src.items():
        kk = tuple(map(add, k, delta))
        v = get(kk, 0) - q * a
        if p:
            v %= p
        if v:
            target[kk] = v
        else:
            target.pop(kk, None)


def _scaled(src, c, delta, p):
    out = {}
    for k, a in src.items():
        v = a * c
        if p:
            v %= p
        out[tuple(map(add, k, delta))] = v
    return out


# ---------------------------------------------------------------------------
# the engine


class _Elem:
    __slots__ = ("vec", "lt", "lt_exps", "pos", "sugar", "rep")

    def __init__(self, vec, lt, lt_exps, sugar, rep):
        self.vec = vec
        self.lt = lt
        self.lt_exps = lt_exps
        self.pos = lt[-1]
        self.sugar = sugar
        self.rep = rep


class _Engine:
    """Buchberger's algorithm with the normal selection strategy.

    With ``src`` set, every element carries its expression in terms of the
    input generators; S-pairs that reduce to zero then yield syzygies of the
    generators (Schreyer).
    """

    def __init__(self, ctx, src=None):
        self.ctx = ctx
        self.src = src
        self.p = ctx.field.p
        self.elems = []
        self.by_pos = [[] for _ in range(ctx.rank)]
        self.pairs = []
        self.pending = set()
        self.syzygies = []

    # -- reduction ---------------------------------------------------------
    def _reducer(self, t):
        e = self.ctx.exps(t)
        for idx in self.by_pos[t[-1]]:
            le = self.elems[idx].lt_exps
            if all(a >= b for a, b in zip(e, le)):
                return self.elems[idx]
        return None

    def reduce(self, vec, rep=None, full=True):
        vec = dict(vec)
        rep = dict(rep) if rep is not None else None
        p = self.p
        out = {}
        while vec:
            t = min(vec)
            c = vec[t]
            g = self._reducer(t)
            if g is None:
                if not full:
                    out.update(vec)
                    break
                out[t] = vec.pop(t)
                continue
            delta = tuple(map(sub, t, g.lt))
            _axpy(vec, c, g.vec, delta, p)
            if rep is not None:
                _axpy(rep, c, g.rep, delta, p)
        return out, rep

    def _monic(self, vec, rep):
        lt = min(vec)
        c = vec[lt]
        if c == 1:
            return vec, rep, lt
        inv = self.ctx.field.inv(c)
        zero = (0,) * len(lt)
        vec = _scaled(vec, inv, zero, self.p)
        if rep is not None:
            rep = _scaled(rep, inv, zero[: len(zero)], self.p) if rep else rep
        return vec, rep, lt

    def _sugar(self, vec):
        deg = self.ctx.degree
        return max(deg(t) for t in vec)

    # -- basis maintenance ---------------------------------------------------
    def insert(self, vec, rep=None, sugar=None):
        """Add a nonzero (already reduced) element and queue its pairs."""
        vec, rep, lt = self._monic(vec, rep)
        if sugar is None:
            sugar = self._sugar(vec)
        ctx = self.ctx
        e = ctx.exps(lt)
        k = len(self.elems)
        el = _Elem(vec, lt, e, sugar, rep)
        self.elems.append(el)
        for i in self.by_pos[el.pos]:
            other = self.elems[i]
            L = ctx.lcm(other.lt, lt)
            le = ctx.exps(L)
            di = sum(le) - sum(other.lt_exps)
            dk = sum(le) - sum(e)
            s = max(other.sugar + di, sugar + dk)
            heapq.heappush(self.pairs, (s, L, i, k))
            self.pending.add((i, k))
        self.by_pos[el.pos].append(k)
        return k

    def add_generator(self, vec, rep=None, sugar=None):
        """Reduce and insert; returns False when the element reduces to zero."""
        if sugar is None and vec:
            sugar = self._sugar(vec)
        red, rep = self.reduce(vec, rep)
        if not red:
            if rep is not None and self.src is not None:
                self._record_syzygy(rep)
            return False
        self.insert(red, rep, sugar)
        return True

    def _record_syzygy(self, rep):
        if rep:
            self.syzygies.append(rep)

    def _chain_criterion(self, i, j, L):
        le = self.ctx.exps(L)
        pos = L[-1]
        pend = self.pending
        for k in self.by_pos[pos]:
            if k == i or k == j:
                continue
            if (min(i, k), max(i, k)) in pend or (min(j, k), max(j, k)) in pend:
                continue
            ke = self.elems[k].lt_exps
            if all(a >= b for a, b in zip(le, ke)):
                return True
        return False

    def _koszul(self, i, j):
        """Syzygy for a coprime pair of polynomials: g_j rep_i - g_i rep_j."""
        gi, gj = self.elems[i], self.elems[j]
        ctx = self.ctx
        out = {}
        p = self.p
        for t, c in gj.vec.items():
            _axpy(out, -c, gi.rep, ctx.delta(ctx.exps(t)), p)
        for t, c in gi.vec.items():
            _axpy(out, c, gj.rep, ctx.delta(ctx.exps(t)), p)
        return out

    def complete(self, max_sugar=None):
        ctx = self.ctx
        p = self.p
        track = self.src is not None
        while self.pairs:
            if max_sugar is not None and self.pairs[0][0] > max_sugar:
                break
            s, L, i, j = heapq.heappop(self.pairs)
            self.pending.discard((i, j))
            gi, gj = self.elems[i], self.elems[j]
            if ctx.rank == 1 and not any(a and b for a, b in zip(gi.lt_exps, gj.lt_exps)):
                if track:
                    self._record_syzygy(self._koszul(i, j))
                continue
            if self._chain_criterion(i, j, L):
                continue
            di = tuple(map(sub, L, gi.lt))
            dj = tuple(map(sub, L, gj.lt))
            vec = _scaled(gi.vec, 1, di, p)
            _axpy(vec, 1, gj.vec, dj, p)
            rep = None
            if track:
                rep = _scaled(gi.rep, 1, di, p)
                _axpy(rep, 1, gj.rep, dj, p)
            red, rep = self.reduce(vec, rep)
            if red:
                self.insert(red, rep, s)
            elif track:
                self._record_syzygy(rep)

    def minimal_indices(self):
        keep = []
        for i, el in enumerate(self.elems):
            dominated = False
            for j in self.by_pos[el.pos]:
                if j == i:
                    continue
                o = self.elems[j]
                if all(a >= b for a, b in zip(el.lt_exps, o.lt_exps)):
                    if o.lt_exps != el.lt_exps or j < i:
                        dominated = True
                        break
            if not dominated:
                keep.append(i)
        return keep

    def reduced_basis(self):
        keep = self.minimal_indices()
        sub_engine = _Engine(self.ctx)
        for i in keep:
            el = self.elems[i]
            sub_engine.elems.append(_Elem(el.vec, el.lt, el.lt_exps, el.sugar, None))
            sub_engine.by_pos[el.pos].append(len(sub_engine.elems) - 1)
        out = []
        for k, el in enumerate(sub_engine.elems):
            # reduce the tail against the other minimal elements
            tail = dict(el.vec)
            lc = tail.pop(el.lt)
            others = [j for j in sub_engine.by_pos[el.pos] if j != k]
            saved = sub_engine.by_pos[el.pos]
            sub_engine.by_pos[el.pos] = others
            red, _ = sub_engine.reduce(tail)
            sub_engine.by_pos[el.pos] = saved
            red[el.lt] = lc
            red, _, _ = self._monic(red, None)
            out.append(red)
        out.sort(key=min)
        return out


def _run(ctx, gens):
    eng = _Engine(ctx)
    for g in sorted(gens, key=lambda v: (eng_sugar(ctx, v), min(v))):
        eng.complete(eng_sugar(ctx, g))
        eng.add_generator(g)
    eng.complete()
    return eng


def eng_sugar(ctx, vec):
    return max(ctx.degree(t) for t in vec)


# ---------------------------------------------------------------------------
# Groebner bases


def _check_gens(gens):
    gens = [g for g in gens if not (g.is_zero() if hasattr(g, "is_zero") else False)]
    return gens


def _context_for(gens, order):
    g0 = gens[0]
    if isinstance(g0, ModuleVector):
        e0 = g0.entries[0]
        order = order or grevlex(e0.nvars)
        return _Context(order, e0.nvars, e0.field, g0.shifts)
    order = order or grevlex(g0.nvars)
    return _Context(order, g0.nvars, g0.field, (0,))


def buchberger(gens, order=None):
    """Reduced Groebner basis of the ideal/submodule generated by ``gens``."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    ctx = _context_for(gens, order)
    is_module = isinstance(gens[0], ModuleVector)
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return GroebnerBasis((), ctx.order, True, ctx.shifts if is_module else None)
    eng = _run(ctx, [_encode(g, ctx) for g in nonzero])
    red = eng.reduced_basis()
    dec = _decode_vector if is_module else _decode_poly
    return GroebnerBasis(tuple(dec(v, ctx) for v in red), ctx.order, True, ctx.shifts if is_module else None)


def _basis_engine(basis):
    ctx = _Context.of(basis)
    eng = _Engine(ctx)
    for g in basis.gens:
        vec = _encode(g, ctx)
        vec, _, lt = eng._monic(vec, None)
        eng.elems.append(_Elem(vec, lt, ctx.exps(lt), 0, None))
        eng.by_pos[lt[-1]].append(len(eng.elems) - 1)
    return ctx, eng


def normal_form(p, basis, order=None):
    """Remainder of ``p`` on division by the Groebner basis ``basis``."""
    if order is not None and order != basis.order:
        raise ValueError("order mismatch between request and basis")
    if not basis.gens:
        return p
    ctx, eng = _basis_engine(basis)
    red, _ = eng.reduce(_encode(p, ctx))
    if isinstance(p, ModuleVector):
        return _decode_vector(red, ctx)
    return _decode_poly(red, ctx)


def s_pair(a, b, order=None):
    """S-polynomial of two polynomials (monic leading coefficients)."""
    ctx = _context_for([a], order)
    va, vb = _encode(a, ctx), _encode(b, ctx)
    ta, tb = min(va), min(vb)
    if ta[-1] != tb[-1]:
        return a.__class__.zero(a.field, a.nvars) if isinstance(a, Polynomial) else None
    L = ctx.lcm(ta, tb)
    p = ctx.field.p
    out = _scaled(va, ctx.field.inv(va[ta]), tuple(map(sub, L, ta)), p)
    _axpy(out, ctx.field.inv(vb[tb]), vb, tuple(map(sub, L, tb)), p)
    return _decode_poly(out, ctx) if isinstance(a, Polynomial) else _decode_vector(out, ctx)


def is_groebner(basis):
    """Every S-pair of ``basis`` reduces to zero."""
    gens = list(basis.gens)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            s = s_pair(gens[i], gens[j], basis.order)
            if s is None:
                continue
            r = normal_form(s, basis)
            if not r.is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """Ideal given by generators; Groebner bases are computed on demand."""

    def __init__(self, gens, field=None, nvars=None):
        gens = tuple(gens)
        if gens:
            field = gens[0].field
            nvars = gens[0].nvars
        if field is None or nvars is None:
            raise ValueError("empty ideal needs field and nvars")
        self.field = field
        self.nvars = nvars
        self.gens = tuple(g for g in gens if not g.is_zero())
        self._gb = {}

    def groebner(self, order=None):
        order = order or grevlex(self.nvars)
        if order not in self._gb:
            if self.gens:
                self._gb[order] = buchberger(self.gens, order)
            else:
                self._gb[order] = GroebnerBasis((), order, True)
        return self._gb[order]

    def is_homogeneous(self):
        return all(homogeneous_degree(g) is not None for g in self.gens)

    def is_unit(self):
        gb = self.groebner()
        return any(g.is_constant() and not g.is_zero() for g in gb.gens)

    def contains(self, p):
        return normal_form(p, self.groebner()).is_zero()

    def __contains__(self, p):
        return self.contains(p)

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.gens + other.gens, self.field, self.nvars)
        return Ideal(self.gens + tuple(other), self.field, self.nvars)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.groebner().gens == other.groebner().gens

    def __hash__(self):
        return hash(self.groebner().gens)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"


def ideal(*gens):
    if len(gens) == 1 and not isinstance(gens[0], Polynomial):
        gens = tuple(gens[0])
    return Ideal(gens)


def maximal_ideal(field, nvars=3):
    return Ideal([Polynomial.variable(i, field, nvars) for i in range(nvars)])


# ---------------------------------------------------------------------------
# syzygies (Schreyer)


def _column_vectors(M):
    cols = []
    for j in range(M.ncols):
        cols.append(ModuleVector(tuple(M.entries[i][j] for i in range(M.nrows)), tuple(M.row_shifts)))
    return cols


def check_grading(M):
    for i in range(M.nrows):
        for j in range(M.ncols):
            e = M.entries[i][j]
            h = homogeneous_degree(e)
            if h is ZERO_DEGREE:
                continue
            if h is None or h != M.col_shifts[j] - M.row_shifts[i]:
                raise GradingError(
                    f"entry ({i},{j}) has degree {h}, expected {M.col_shifts[j] - M.row_shifts[i]}"
                )


def kernel_of_map(M, graded=True):
    """Generators of {v : M v = 0} for a matrix of polynomials.

    With ``graded=True`` (the default) the matrix must be homogeneous with
    respect to its shifts and the result is a *minimal* homogeneous generating
    set, in reduced echelon form degree by degree and sorted by degree.
    """
    if graded:
        check_grading(M)
    field, nvars = M.field, M.nvars
    order = grevlex(nvars)
    if M.ncols == 0:
        return []
    row_shifts = tuple(M.row_shifts) if graded else (0,) * M.nrows
    col_shifts = tuple(M.col_shifts) if graded else (0,) * M.ncols
    ctx = _Context(order, nvars, field, row_shifts)
    src = _Context(order, nvars, field, col_shifts)
    eng = _Engine(ctx, src)
    cols = _column_vectors(M)
    items = []
    for j, col in enumerate(cols):
        rep = {src.term((0,) * nvars, j): field(1)}
        vec = _encode(ModuleVector(col.entries, row_shifts), ctx)
        if not vec:
            eng._record_syzygy(rep)
            continue
        items.append((col_shifts[j] if graded else eng_sugar(ctx, vec), min(vec), j, vec, rep))
    items.sort(key=lambda it: (it[0], it[1], it[2]))
    for sug, _, j, vec, rep in items:
        eng.complete(sug)
        eng.add_generator(vec, rep)
    eng.complete()
    syz = [s for s in eng.syzygies if s]
    if graded:
        syz = _minimal_generators(syz, src)
    else:
        seen = set()
        uniq = []
        for s in syz:
            key = frozenset(s.items())
            if key not in seen:
                seen.add(key)
                uniq.append(s)
        syz = uniq
    return [_decode_vector(s, src) for s in syz]


def _echelon(vectors, p, field):
    """Reduced row echelon form of sparse vectors (pivot = leading term)."""
    rows = []
    for v in vectors:
        v = dict(v)
        for r in rows:
            t = min(r)
            c = v.get(t)
            if c:
                _axpy(v, c, r, (0,) * len(t), p)
        if v:
            t = min(v)
            inv = field.inv(v[t])
            v = _scaled(v, inv, (0,) * len(t), p)
            for k, r in enumerate(rows):
                c = r.get(t)
                if c:
                    _axpy(r, c, v, (0,) * len(t), p)
            rows.append(v)
    rows.sort(key=min)
    return rows


def _minimal_generators(vectors, ctx):
    """Minimal homogeneous generators of the submodule spanned by ``vectors``."""
    if not vectors:
        return []
    by_deg = {}
    for v in vectors:
        by_deg.setdefault(eng_sugar(ctx, v), []).append(v)
    eng = _Engine(ctx)
    out = []
    p = ctx.field.p
    for D in sorted(by_deg):
        eng.complete(D)
        reduced = []
        for v in by_deg[D]:
            r, _ = eng.reduce(v)
            if r:
                reduced.append(r)
        for r in _echelon(reduced, p, ctx.field):
            out.append(r)
            eng.insert(r, None, D)
    return out


def minimal_generators(vectors):
    """Minimal homogeneous generating set of a graded submodule or ideal."""
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return []
    ctx = _context_for(vectors, None)
    enc = [_encode(v, ctx) for v in vectors]
    res = _minimal_generators(enc, ctx)
    if isinstance(vectors[0], ModuleVector):
        return [_decode_vector(v, ctx) for v in res]
    return [_decode_poly(v, ctx) for v in res]


# ---------------------------------------------------------------------------
# ideal operations


def _row_matrix(polys, row_shift=0, graded=True):
    from .resolution import GradedMatrix

    shifts = []
    for g in polys:
        h = homogeneous_degree(g)
        shifts.append(h + row_shift if isinstance(h, int) else 0)
    return GradedMatrix([list(polys)], [row_shift], shifts)


def _as_ideal(I):
    return I if isinstance(I, Ideal) else Ideal(I)


def ideal_quotient(I, J):
    """I : J for an ideal J, or I : g for a single polynomial g."""
    from .resolution import GradedMatrix

    I = _as_ideal(I)
    if isinstance(J, Polynomial):
        if J.is_zero():
            raise ValueError("quotient by the zero polynomial")
        Jg = [J]
    else:
        Jg = list(_as_ideal(J).gens)
        if not Jg:
            return Ideal([Polynomial.constant(1, I.field, I.nvars)])
    field, nvars = I.field, I.nvars
    Ig = list(I.gens)
    graded = I.is_homogeneous() and all(homogeneous_degree(g) is not None for g in Jg)
    zero = Polynomial.zero(field, nvars)
    s, r = len(Jg), len(Ig)
    rows = []
    for a, g in enumerate(Jg):
        row = [g] + [zero] * (s * r)
        for b, h in enumerate(Ig):
            row[1 + a * r + b] = h
        rows.append(row)
    if graded:
        row_shifts = [-homogeneous_degree(g) for g in Jg]
        col_shifts = [0] + [homogeneous_degree(h) - homogeneous_degree(g) for g in Jg for h in Ig]
    else:
        row_shifts = [0] * s
        col_shifts = [0] * (1 + s * r)
    M = GradedMatrix(rows, row_shifts, col_shifts)
    ker = kernel_of_map(M, graded=graded)
    gens = [v.entries[0] for v in ker if not v.entries[0].is_zero()]
    if not gens:
        return Ideal([], field, nvars)
    if graded:
        gens = minimal_generators(gens)
    return Ideal(gens)


def intersect(I, J):
    """I ∩ J via the kernel of [I | J]."""
    from .resolution import GradedMatrix

    I, J = _as_ideal(I), _as_ideal(J)
    Ig, Jg = list(I.gens), list(J.gens)
    graded = I.is_homogeneous() and J.is_homogeneous()
    row = Ig + Jg
    shifts = [homogeneous_degree(g) if graded else 0 for g in row]
    M = GradedMatrix([row], [0], shifts)
    ker = kernel_of_map(M, graded=graded)
    out = []
    for v in ker:
        s = Polynomial.zero(I.field, I.nvars)
        for a, g in zip(v.entries[: len(Ig)], Ig):
            s = s + a * g
        if not s.is_zero():
            out.append(s)
    if graded and out:
        out = minimal_generators(out)
    return Ideal(out, I.field, I.nvars)


def saturate(I, J, max_iter=200):
    """I : J^infinity by iterated quotients until the reduced bases agree."""
    current = _as_ideal(I)
    for _ in range(max_iter):
        nxt = ideal_quotient(current, J)
        if nxt.groebner().gens == current.groebner().gens:
            return nxt
        current = nxt
    raise RuntimeError("saturation did not stabilize")


def saturation_with_count(I, J, max_iter=200):
    current = _as_ideal(I)
    for k in range(max_iter):
        nxt = ideal_quotient(current, J)
        if nxt.groebner().gens == current.groebner().gens:
            return nxt, k
        current = nxt
    raise RuntimeError("saturation did not stabilize")


def eliminate(I, tag_count):
    """I ∩ k[x,y,z] for an ideal living in k[x,y,z,t_1..t_k] (tags trailing)."""
    I = _as_ideal(I)
    n = I.nvars
    tags = range(n - tag_count, n)
    order = block_order(tags, n)
    gb = I.groebner(order)
    keep = []
    for g in gb.gens:
        if not any(any(m[i] for i in tags) for m in g.terms):
            keep.append(g.restrict(n - tag_count))
    return Ideal(keep, I.field, n - tag_count)


def eliminate_variables(I, variables):
    """I ∩ k[remaining variables], staying in the same ring."""
    I = _as_ideal(I)
    order = block_order(variables, I.nvars)
    gb = I.groebner(order)
    keep = [g for g in gb.gens if not any(any(m[i] for i in variables) for m in g.terms)]
    return Ideal(keep, I.field, I.nvars)


def _leading_exps(I):
    gb = I.groebner()
    return [g.leading_term(gb.order)[0] for g in gb.gens]


def krull_dimension(I):
    """dim R/I from maximal independent sets of the initial ideal; -1 for (1)."""
    I = _as_ideal(I)
    if I.is_unit():
        return -1
    lms = _leading_exps(I)
    n = I.nvars
    best = 0
    for mask in range(1 << n):
        vs = [i for i in range(n) if mask >> i & 1]
        if len(vs) <= best:
            continue
        if all(any(m[i] for i in range(n) if i not in vs) for m in lms):
            best = len(vs)
    return best


def standard_monomials(I):
    """Monomials outside the initial ideal of a zero-dimensional ideal."""
    I = _as_ideal(I)
    if krull_dimension(I) > 0:
        raise NotZeroDimensional("ideal is not zero-dimensional")
    lms = _leading_exps(I)
    n = I.nvars
    out = []
    stack = [(0,) * n]
    seen = set(stack)
    while stack:
        m = stack.pop()
        if any(all(a >= b for a, b in zip(m, l)) for l in lms):
            continue
        out.append(m)
        for i in range(n):
            nm = m[:i] + (m[i] + 1,) + m[i + 1 :]
            if nm not in seen:
                seen.add(nm)
                stack.append(nm)
    return out


def quotient_dimension(I):
    """dim_k R/I for a zero-dimensional (affine) ideal."""
    I = _as_ideal(I)
    if I.is_unit():
        return 0
    return len(standard_monomials(I))


def radical_membership(g, I):
    """Decide g ∈ sqrt(I) via 1 ∈ I + (1 - t*g) with one extra tag variable."""
    I = _as_ideal(I)
    if g.is_zero():
        return True
    n = I.nvars
    t = Polynomial.variable(n, I.field, n + 1)
    gens = [h.extend(n + 1) for h in I.gens]
    gens.append(Polynomial.constant(1, I.field, n + 1) - t * g.extend(n + 1))
    return Ideal(gens).is_unit()


# ---------------------------------------------------------------------------
# univariate helpers and zero-dimensional radicals


def _uni_coeffs(p, var):
    """Coefficient list (low to high) of a polynomial involving only ``var``."""
    deg = p.total_degree()
    out = [p.field(0)] * (deg + 1)
    for m, c in p.terms.items():
        if any(k for i, k in enumerate(m) if i != var):
            raise ValueError("polynomial is not univariate in the requested variable")
        out[m[var]] = c
    return out


def _uni_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _uni_divmod(a, b, field):
    a = list(a)
    p = field.p
    inv = field.inv(b[-1])
    q = [field(0)] * max(len(a) - len(b) + 1, 0)
    while len(_uni_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv
        if p:
            c %= p
        q[shift] = c
        for i, bc in enumerate(b):
            v = a[shift + i] - c * bc
            a[shift + i] = v % p if p else v
        a.pop()
    return q, _uni_trim(a)


def _uni_gcd(a, b, field):
    a, b = _uni_trim(list(a)), _uni_trim(list(b))
    while b:
        _, r = _uni_divmod(a, b, field)
        a, b = b, r
    inv = field.inv(a[-1])
    p = field.p
    return [c * inv % p if p else c * inv for c in a]


def squarefree_part(p, var):
    """p / gcd(p, p') for a univariate polynomial in variable ``var``."""
    a = _uni_coeffs(p, var)
    field = p.field
    der = [a[i] * i for i in range(1, len(a))]
    if field.p:
        der = [c % field.p for c in der]
    if not _uni_trim(list(der)):
        if len(a) == 1:
            return p
        raise ValueError("derivative vanishes identically; inseparable eliminant")
    g = _uni_gcd(a, der, field)
    q, r = _uni_divmod(a, g, field)
    assert not r
    terms = {}
    for i, c in enumerate(q):
        if c:
            e = [0] * p.nvars
            e[var] = i
            terms[tuple(e)] = c
    return Polynomial(terms, field, p.nvars).monic()


def univariate_eliminant(I, var):
    """Monic generator of I ∩ k[var] (zero-dimensional I)."""
    I = _as_ideal(I)
    others = [i for i in range(I.nvars) if i != var]
    elim = eliminate_variables(I, others)
    gens = [g for g in elim.gens if not g.is_zero()]
    if not gens:
        raise NotZeroDimensional(f"no eliminant in variable {var}")
    g = min(gens, key=lambda h: h.total_degree())
    return g.monic()


def zero_dim_radical_and_count(I):
    """Seidenberg radical of a zero-dimensional affine ideal and its point count."""
    I = _as_ideal(I)
    if I.is_unit():
        return I, 0
    if krull_dimension(I) != 0:
        raise NotZeroDimensional("ideal is not zero-dimensional")
    extra = []
    for v in range(I.nvars):
        extra.append(squarefree_part(univariate_eliminant(I, v), v))
    rad = I + extra
    return rad, quotient_dimension(rad)


__all__ = [
    "ModuleVector",
    "GroebnerBasis",
    "Ideal",
    "ideal",
    "maximal_ideal",
    "buchberger",
    "normal_form",
    "s_pair",
    "is_groebner",
    "kernel_of_map",
    "minimal_generators",
    "ideal_quotient",
    "intersect",
    "saturate",
    "saturation_with_count",
    "eliminate",
    "eliminate_variables",
    "krull_dimension",
    "standard_monomials",
    "quotient_dimension",
    "radical_membership",
    "squarefree_part",
    "univariate_eliminant",
    "zero_dim_radical_and_count",
    "GradingError",
    "NotZeroDimensional",
]
