"""Graded free resolutions, minimalization and Betti tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .polyring import Polynomial, homogeneous_degree, ZERO_DEGREE


class NotMinimalError(ValueError):
    pass


class GradedMatrix:
    """Matrix of polynomials F -> G between graded free modules.

    ``row_shifts`` are the degrees of the basis of the target G and
    ``col_shifts`` those of the source F, so a nonzero homogeneous entry
    (i, j) has degree ``col_shifts[j] - row_shifts[i]``.
    """

    def __init__(self, entries, row_shifts, col_shifts, field=None, nvars=None):
        self.entries = [list(r) for r in entries]
        self.row_shifts = list(row_shifts)
        self.col_shifts = list(col_shifts)
        if len(self.entries) != len(self.row_shifts):
            raise ValueError("row count does not match row shifts")
        for r in self.entries:
            if len(r) != len(self.col_shifts):
                raise ValueError("column count does not match column shifts")
        sample = next((e for r in self.entries for e in r), None)
        self.field = sample.field if sample is not None else field
        self.nvars = sample.nvars if sample is not None else nvars

    @property
    def nrows(self):
        return len(self.row_shifts)

    @property
    def ncols(self):
        return len(self.col_shifts)

    @classmethod
    def from_columns(cls, columns, row_shifts, col_shifts, field=None, nvars=None):
        rows = [[c.entries[i] for c in columns] for i in range(len(row_shifts))]
        return cls(rows, row_shifts, col_shifts, field, nvars)

    def column(self, j):
        return [self.entries[i][j] for i in range(self.nrows)]

    def __matmul__(self, other):
        zero = Polynomial.zero(self.field, self.nvars)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                s = zero
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return GradedMatrix(out, self.row_shifts, other.col_shifts, self.field, self.nvars)

    def is_zero(self):
        return all(e.is_zero() for r in self.entries for e in r)

    def is_graded(self):
        for i, r in enumerate(self.entries):
            for j, e in enumerate(r):
                h = homogeneous_degree(e)
                if h is ZERO_DEGREE:
                    continue
                if h != self.col_shifts[j] - self.row_shifts[i]:
                    return False
        return True

    def unit_entries(self):
        return [
            (i, j)
            for j in range(self.ncols)
            for i in range(self.nrows)
            if self.entries[i][j] and self.entries[i][j].is_constant()
        ]

    def __eq__(self, other):
        return (
            isinstance(other, GradedMatrix)
            and self.row_shifts == other.row_shifts
            and self.col_shifts == other.col_shifts
            and self.entries == other.entries
        )

    def __str__(self):
        cells = [[str(e) for e in r] for r in self.entries]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __repr__(self):
        return f"GradedMatrix({self.nrows}x{self.ncols}, rows={self.row_shifts}, cols={self.col_shifts})"


@dataclass
class FreeResolution:
    """Chain of differentials d_1, d_2, ... with d_i : F_i -> F_{i-1}.

    ``base_shifts`` are the degrees of F_0's basis (kept separately so that a
    resolution with no differentials still knows F_0).
    """

    differentials: list
    base_shifts: list = dc_field(default_factory=lambda: [0])

    @property
    def length(self):
        return len(self.differentials)

    def shifts(self, i):
        if i == 0:
            return list(self.differentials[0].row_shifts) if self.differentials else list(self.base_shifts)
        return list(self.differentials[i - 1].col_shifts)

    def ranks(self):
        return [len(self.shifts(i)) for i in range(self.length + 1)]

    def is_complex(self):
        for a, b in zip(self.differentials, self.differentials[1:]):
            if not (a @ b).is_zero():
                return False
        return True

    def is_minimal(self):
        return all(not d.unit_entries() for d in self.differentials)


def ideal_presentation(gens, row_shift=0):
    """The 1 x r row matrix presenting R/I for I = (gens)."""
    gens = [g for g in gens if not g.is_zero()]
    shifts = [homogeneous_degree(g) + row_shift for g in gens]
    return GradedMatrix([gens], [row_shift], shifts)


def free_resolution(presentation, length_cap=None):
    """Resolve coker(presentation) by iterated kernels.

    Each kernel step returns a minimal generating set of the syzygy module,
    so the resolution is minimal whenever the presentation is.
    """
    from .groebner import kernel_of_map

    diffs = [presentation]
    cap = length_cap if length_cap is not None else presentation.nvars + 1
    while len(diffs) < cap:
        d = diffs[-1]
        ker = kernel_of_map(d)
        if not ker:
            break
        degs = [v.degree() for v in ker]
        diffs.append(GradedMatrix.from_columns(ker, d.col_shifts, degs, d.field, d.nvars))
    if diffs and diffs[0].ncols == 0:
        return FreeResolution([], list(presentation.row_shifts))
    res = FreeResolution(diffs, list(presentation.row_shifts))
    return res if res.is_minimal() else minimalize(res)


def resolve_ideal(gens, length_cap=None):
    """Minimal resolution of R/I, starting from a minimal generating set of I."""
    from .groebner import minimal_generators

    gens = [g for g in gens if not g.is_zero()]
    if gens and all(homogeneous_degree(g) is not None for g in gens):
        gens = minimal_generators(gens)
    return free_resolution(ideal_presentation(gens), length_cap)


def _pivot(diffs, k, r, c):
    """Split off the unit entry (r, c) of differential k (0-based)."""
    A = diffs[k]
    a = A.entries[r][c]
    field = A.field
    inv = field.inv(a.constant_coeff())
    new_rows = []
    for i in range(A.nrows):
        if i == r:
            continue
        row = []
        aic = A.entries[i][c]
        for j in range(A.ncols):
            if j == c:
                continue
            e = A.entries[i][j]
            if aic and A.entries[r][j]:
                e = e - (aic * A.entries[r][j]).scale(inv)
            row.append(e)
        new_rows.append(row)
    rs = [s for i, s in enumerate(A.row_shifts) if i != r]
    cs = [s for j, s in enumerate(A.col_shifts) if j != c]
    diffs[k] = GradedMatrix(new_rows, rs, cs, A.field, A.nvars)
    if k + 1 < len(diffs):
        B = diffs[k + 1]
        rows = [row for i, row in enumerate(B.entries) if i != c]
        diffs[k + 1] = GradedMatrix(rows, cs, B.col_shifts, B.field, B.nvars)
    if k > 0:
        C = diffs[k - 1]
        rows = [[e for j, e in enumerate(row) if j != r] for row in C.entries]
        diffs[k - 1] = GradedMatrix(rows, C.row_shifts, rs, C.field, C.nvars)


def minimalize(res):
    """Remove unit entries by pivoting (smallest column, then smallest row)."""
    diffs = list(res.differentials)
    base = list(res.base_shifts)
    changed = True
    while changed:
        changed = False
        for k, d in enumerate(diffs):
            units = d.unit_entries()
            if units:
                r, c = units[0]
                _pivot(diffs, k, r, c)
                changed = True
                break
    while diffs and diffs[-1].ncols == 0:
        diffs.pop()
    if diffs:
        base = list(diffs[0].row_shifts)
    return FreeResolution(diffs, base)


@dataclass
class BettiTable:
    """Graded Betti numbers beta[(i, j)] = rank of F_i in internal degree j."""

    entries: dict

    @classmethod
    def from_resolution(cls, res, check_minimal=True):
        if check_minimal and not res.is_minimal():
            raise NotMinimalError("resolution has a unit entry")
        table = {}
        for i in range(res.length + 1):
            for s in res.shifts(i):
                table[(i, s)] = table.get((i, s), 0) + 1
        return cls(table)

    def total_ranks(self):
        out = {}
        for (i, _), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return [out.get(i, 0) for i in range(max(out) + 1)] if out else []

    def shifts(self, i):
        """Sorted internal degrees (with multiplicity) in homological degree i."""
        out = []
        for (h, j), v in sorted(self.entries.items()):
            if h == i:
                out.extend([j] * v)
        return out

    def to_grid(self):
        """Macaulay-style grid: row r, column i holds beta[i, i + r]."""
        if not self.entries:
            return "(empty)"
        cols = max(i for i, _ in self.entries) + 1
        rows = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in self.entries.values()) + 1
        width = max(width, 3)
        lines = ["      " + "".join(str(i).rjust(width) for i in range(cols))]
        lines.append("total:" + "".join(str(t).rjust(width) for t in self.total_ranks()))
        for r in rows:
            cells = []
            for i in range(cols):
                v = self.entries.get((i, i + r), 0)
                cells.append(("." if v == 0 else str(v)).rjust(width))
            lines.append(f"{r:>5}:" + "".join(cells))
        return "\n".join(lines)

    def to_json(self):
        return [[i, j, v] for (i, j), v in sorted(self.entries.items())]

    @classmethod
    def from_json(cls, data):
        return cls({(i, j): v for i, j, v in data})

    def __str__(self):
        return self.to_grid()


def betti_table(res):
    return BettiTable.from_resolution(res)


def betti_json(table):
    return json.dumps(table.to_json())


__all__ = [
    "GradedMatrix",
    "FreeResolution",
    "BettiTable",
    "ideal_presentation",
    "free_resolution",
    "resolve_ideal",
    "minimalize",
    "betti_table",
    "NotMinimalError",
]
