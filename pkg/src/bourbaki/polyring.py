"""Exact coefficient fields and sparse multivariate polynomials.

Polynomials live in k[x, y, z] (optionally extended by a few tag variables
used for elimination).  Coefficients are exact: ``gmpy2.mpq`` rationals over
Q, or plain ints reduced mod p over a prime field.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product

from gmpy2 import mpq

VAR_NAMES = ("x", "y", "z")
MAX_EXPONENT = 10_000


class PolynomialError(ValueError):
    pass


class ParseError(PolynomialError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


# ---------------------------------------------------------------------------
# coefficient fields


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class RationalField:
    """The field Q with ``mpq`` elements (always in lowest terms)."""

    p = None
    characteristic = 0

    def __call__(self, value):
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        return mpq(value)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / mpq(a)

    def fmt(self, c):
        return str(c)

    def to_fraction(self, c):
        c = mpq(c)
        return Fraction(int(c.numerator), int(c.denominator))

    @property
    def spec(self):
        return "q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field F_p; elements are ints in [0, p)."""

    def __init__(self, p):
        if not is_prime(p):
            raise PolynomialError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, value):
        if isinstance(value, (Fraction, type(mpq(0)))):
            num, den = int(value.numerator), int(value.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def fmt(self, c):
        return str(c)

    def to_fraction(self, c):
        return Fraction(c)

    @property
    def spec(self):
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_spec(spec):
    """Parse ``"q"`` or ``"fp:<p>"``."""
    if spec is None or spec.lower() in ("q", "qq"):
        return QQ
    m = re.fullmatch(r"(?i)fp:(\d+)", spec.strip())
    if not m:
        raise PolynomialError(f"unknown field spec {spec!r}")
    return PrimeField(int(m.group(1)))


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """A monomial order encoded as a linear sort key.

    ``key(exps)`` returns a tuple which is *smaller* for *larger* monomials, and
    the encoding is additive: ``key(a + b) == key(a) + key(b)`` componentwise.
    The Groebner engine relies on both facts.
    """

    def __init__(self, name, nvars, blocks):
        self.name = name
        self.nvars = nvars
        self.blocks = tuple((kind, tuple(idx)) for kind, idx in blocks)
        slots = [None] * nvars
        width = 0
        for kind, idx in self.blocks:
            if kind == "grevlex":
                width += 1
                for i in reversed(idx):
                    slots[i] = (width, 1)
                    width += 1
            elif kind == "lex":
                for i in idx:
                    slots[i] = (width, -1)
                    width += 1
            else:
                raise ValueError(f"unknown block kind {kind}")
        if any(s is None for s in slots):
            raise ValueError("blocks must cover every variable")
        self.width = width
        self.slots = tuple(slots)
        self.graded = len(self.blocks) == 1 and self.blocks[0][0] == "grevlex"

    def key(self, exps):
        out = []
        for kind, idx in self.blocks:
            if kind == "grevlex":
                out.append(-sum(exps[i] for i in idx))
                out.extend(exps[i] for i in reversed(idx))
            else:
                out.extend(-exps[i] for i in idx)
        return tuple(out)

    def exps(self, key):
        return tuple(sign * key[slot] for slot, sign in self.slots)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"MonomialOrder({self.name!r}, nvars={self.nvars})"


def grevlex(nvars=3):
    return MonomialOrder("grevlex", nvars, [("grevlex", range(nvars))])


def lex(nvars=3):
    return MonomialOrder("lex", nvars, [("lex", range(nvars))])


def block_order(elim_vars, nvars, inner="grevlex"):
    """Elimination order: the variables in ``elim_vars`` dominate the rest."""
    elim = sorted(elim_vars)
    rest = [i for i in range(nvars) if i not in elim]
    return MonomialOrder(f"block({elim},{inner})", nvars, [("grevlex", elim), (inner, rest)])


# ---------------------------------------------------------------------------
# polynomials


class _ZeroMarker:
    def __repr__(self):
        return "zero"


ZERO_DEGREE = _ZeroMarker()


def var_names(nvars):
    if nvars <= 3:
        return VAR_NAMES[:nvars]
    return VAR_NAMES + tuple(f"t{i}" for i in range(nvars - 3))


class Polynomial:
    """Sparse polynomial: a dict from exponent tuples to nonzero coefficients.

    Treat instances as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, terms, field=QQ, nvars=3, _normalized=False):
        self.field = field
        self.nvars = nvars
        if _normalized:
            self.terms = terms
        else:
            clean = {}
            for m, c in terms.items():
                c = field(c)
                if c:
                    m = tuple(m)
                    if len(m) != nvars:
                        raise PolynomialError("exponent vector has wrong length")
                    clean[m] = c
            self.terms = clean
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, field=QQ, nvars=3):
        return cls({}, field, nvars, True)

    @classmethod
    def constant(cls, c, field=QQ, nvars=3):
        return cls({(0,) * nvars: c}, field, nvars)

    @classmethod
    def variable(cls, i, field=QQ, nvars=3):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, field, nvars)

    @classmethod
    def monomial(cls, exps, c=1, field=QQ):
        return cls({tuple(exps): c}, field, len(exps))

    def _new(self, terms):
        return Polynomial(terms, self.field, self.nvars, True)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars or other.field != self.field:
                raise PolynomialError("incompatible polynomial rings")
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return Polynomial.constant(other, self.field, self.nvars)
        return NotImplemented

    # basic queries
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coeff(self):
        return self.terms.get((0,) * self.nvars, self.field(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field(0))

    def sorted_terms(self, order=None):
        order = order or grevlex(self.nvars)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]))

    def leading_term(self, order=None):
        if not self.terms:
            raise PolynomialError("zero polynomial has no leading term")
        order = order or grevlex(self.nvars)
        m = min(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order=None):
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.field.inv(c))

    # arithmetic
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __neg__(self):
        p = self.field.p
        if p:
            return self._new({m: (p - c) for m, c in self.terms.items()})
        return self._new({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if p:
                v %= p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return self._new(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.field(c)
        if not c:
            return self._new({})
        p = self.field.p
        if p:
            return self._new({m: v * c % p for m, v in self.terms.items()})
        return self._new({m: v * c for m, v in self.terms.items()})

    def mul_monomial(self, exps, c=1):
        c = self.field(c)
        p = self.field.p
        out = {}
        for m, v in self.terms.items():
            w = v * c
            if p:
                w %= p
            if w:
                out[tuple(a + b for a, b in zip(m, exps))] = w
        return self._new(out)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) < len(self.terms):
            a, b = other, self
        else:
            a, b = self, other
        p = self.field.p
        out = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items()}
        return self._new({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise PolynomialError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1, self.field, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div_scalar(self, c):
        return self.scale(self.field.inv(self.field(c)))

    # calculus and substitution
    def derivative(self, var):
        p = self.field.p
        out = {}
        for m, c in self.terms.items():
            k = m[var]
            if k:
                v = c * k
                if p:
                    v %= p
                if v:
                    e = list(m)
                    e[var] -= 1
                    out[tuple(e)] = v
        return self._new(out)

    def evaluate(self, values):
        """Substitute polynomials (or scalars) for every variable."""
        field = self.field
        target_nvars = None
        vals = []
        for v in values:
            if isinstance(v, Polynomial):
                target_nvars = v.nvars
            vals.append(v)
        if target_nvars is None:
            total = field(0)
            for m, c in self.terms.items():
                t = c
                for v, k in zip(vals, m):
                    t = t * field(v) ** k
                total += t
            return field(total)
        vals = [v if isinstance(v, Polynomial) else Polynomial.constant(v, field, target_nvars) for v in vals]
        powers = [{0: Polynomial.constant(1, field, target_nvars)} for _ in vals]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * vals[i]
            return cache[k]

        out = Polynomial.zero(field, target_nvars)
        for m, c in self.terms.items():
            t = Polynomial.constant(c, field, target_nvars)
            for i, k in enumerate(m):
                if k:
                    t = t * power(i, k)
            out = out + t
        return out

    def extend(self, nvars):
        """Embed into a ring with extra trailing variables."""
        pad = (0,) * (nvars - self.nvars)
        return Polynomial({m + pad: c for m, c in self.terms.items()}, self.field, nvars, True)

    def restrict(self, nvars):
        """Drop trailing variables that do not occur."""
        out = {}
        for m, c in self.terms.items():
            if any(m[nvars:]):
                raise PolynomialError("polynomial involves dropped variables")
            out[m[:nvars]] = c
        return Polynomial(out, self.field, nvars, True)

    def with_field(self, field):
        return Polynomial({m: field(self.field.to_fraction(c)) for m, c in self.terms.items()}, field, self.nvars)

    # printing
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def homogeneous_degree(p):
    """Common total degree of all terms, ``None`` if inhomogeneous, ``ZERO_DEGREE`` for 0."""
    if not p.terms:
        return ZERO_DEGREE
    degs = {sum(m) for m in p.terms}
    if len(degs) == 1:
        return degs.pop()
    return None


def is_homogeneous(p):
    return homogeneous_degree(p) is not None


def partial_derivative(p, var):
    return p.derivative(var)


def format_poly(p, order=None):
    if not p.terms:
        return "0"
    names = var_names(p.nvars)
    parts = []
    for m, c in p.sorted_terms(order):
        mono = "*".join(
            n if k == 1 else f"{n}^{k}" for n, k in zip(names, m) if k
        )
        cs = p.field.fmt(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if mono:
            body = mono if cs == "1" else f"{cs}*{mono}"
        else:
            body = cs
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("var", m.group(2), start))
        else:
            op = m.group(3)
            toks.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, field, names):
        self.toks = _tokenize(text)
        self.i = 0
        self.field = field
        self.names = names
        self.nvars = len(names)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def const(self, c):
        return Polynomial.constant(c, self.field, self.nvars)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r}", t[2])
        return p

    def expr(self):
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if t[1] == "+" else p - q
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                p = p * self.factor()
            elif t[0] == "op" and t[1] == "/":
                self.take()
                q = self.factor()
                if q.is_zero():
                    raise ParseError("division by zero", t[2])
                if not q.is_constant():
                    raise ParseError("division by a non-constant", t[2])
                p = p.exact_div_scalar(q.constant_coeff())
            else:
                return p

    def factor(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.peek()
            if e[0] != "num":
                raise ParseError("expected nonnegative integer exponent", e[2])
            self.take()
            if e[1] > MAX_EXPONENT:
                raise ParseError(f"exponent {e[1]} exceeds limit {MAX_EXPONENT}", e[2])
            base = base ** e[1]
        return base

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if kind == "num":
            return self.const(val)
        if kind == "var":
            if val not in self.names:
                raise ParseError(f"unknown variable {val!r}", pos)
            return Polynomial.variable(self.names.index(val), self.field, self.nvars)
        if kind == "op" and val == "(":
            p = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                raise ParseError("expected ')'", close[2])
            return p
        if kind == "op" and val in "+-":
            inner = self.factor()
            return -inner if val == "-" else inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_poly(text, field=QQ, names=VAR_NAMES):
    """Parse text such as ``"x^5+x^4*y-3/2*z^5"`` into a Polynomial."""
    try:
        return _Parser(text, field, tuple(names)).parse()
    except ZeroDivisionError as exc:
        raise ParseError(str(exc), 0) from None


# ---------------------------------------------------------------------------
# linear coordinate changes


def _mat_inverse(m):
    n = len(m)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise PolynomialError("coordinate change is not invertible")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


class CoordinateChange:
    """Linear substitution x_i -> sum_j matrix[i][j] * x_j."""

    def __init__(self, matrix):
        self.matrix = tuple(tuple(Fraction(v) for v in row) for row in matrix)
        self.inverse_matrix = _mat_inverse(self.matrix)

    @classmethod
    def identity(cls, n=3):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def random(cls, rng, box=3, n=3):
        while True:
            m = [[rng.randint(-box, box) for _ in range(n)] for _ in range(n)]
            try:
                return cls(m)
            except PolynomialError:
                continue

    def inverse(self):
        return CoordinateChange(self.inverse_matrix)

    def __repr__(self):
        rows = ["[" + ", ".join(str(v) for v in row) + "]" for row in self.matrix]
        return "CoordinateChange([" + ", ".join(rows) + "])"


def apply_change(p, change):
    n = len(change.matrix)
    forms = []
    for row in change.matrix:
        terms = {}
        for j, c in enumerate(row):
            if c:
                e = [0] * p.nvars
                e[j] = 1
                terms[tuple(e)] = p.field(c)
        forms.append(Polynomial(terms, p.field, p.nvars))
    for i in range(n, p.nvars):
        forms.append(Polynomial.variable(i, p.field, p.nvars))
    return p.evaluate(forms)


def random_polynomial(rng, degree, field=QQ, density=0.6, coeff_box=5, nvars=3, homogeneous=True):
    """Random polynomial, homogeneous of the given degree by default."""
    terms = {}
    degs = [degree] if homogeneous else range(degree + 1)
    for dg in degs:
        for m in monomials_of_degree(dg, nvars):
            if rng.random() < density:
                c = rng.randint(-coeff_box, coeff_box)
                if c:
                    terms[m] = c
    return Polynomial(terms, field, nvars)


def monomials_of_degree(n, nvars=3):
    """Exponent tuples of total degree n, in descending grevlex order."""
    if n < 0:
        return []
    out = [m for m in product(range(n + 1), repeat=nvars) if sum(m) == n]
    order = grevlex(nvars)
    out.sort(key=order.key)
    return out


__all__ = [
    "QQ",
    "RationalField",
    "PrimeField",
    "field_from_spec",
    "MonomialOrder",
    "grevlex",
    "lex",
    "block_order",
    "Polynomial",
    "ZERO_DEGREE",
    "homogeneous_degree",
    "is_homogeneous",
    "partial_derivative",
    "format_poly",
    "parse_poly",
    "ParseError",
    "PolynomialError",
    "CoordinateChange",
    "apply_change",
    "random_polynomial",
    "monomials_of_degree",
    "is_prime",
]
