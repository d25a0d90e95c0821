"""The left skew polynomial ring S[T; phi] and matrices over it.

Elements are kept in left normal form: a finite sum of f_e * T^e with
every polynomial coefficient written to the left of the powers of the
twisting symbol T (printed as a capital theta).  Multiplication pushes T
across polynomials by the defining law

    T^e * f = phi^e(f) * T^e,

so (f T^e)(g T^d) = f * phi^e(g) T^(e+d), extended bilinearly.  Matrices
act on row vectors by right multiplication; composing differentials
therefore multiplies their matrices left factor first.

The right-handed twin A[eps; phi] is the opposite ring; it is exposed
only through :func:`opposite_product`, which reverses the factors.
"""

from __future__ import annotations

from .errors import ArityMismatch, EndoMismatch, ShapeMismatch
from .endo import Endo
from .poly import Poly

THETA = "Θ"


class SkewPoly:
    """Element sum(f_e T^e) of S[T; phi], in left normal form.

    ``coeffs`` maps the T-degree e to the nonzero left coefficient f_e.
    """

    __slots__ = ("endo", "coeffs")

    def __init__(self, endo: Endo, coeffs: dict[int, Poly]):
        self.endo = endo
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------------------

    @classmethod
    def zero(cls, endo: Endo) -> "SkewPoly":
        return cls(endo, {})

    @classmethod
    def one(cls, endo: Endo) -> "SkewPoly":
        return cls.from_poly(endo, Poly.one(endo.field, endo.nvars))

    @classmethod
    def from_poly(cls, endo: Endo, f: Poly, theta_degree: int = 0) -> "SkewPoly":
        if f.nvars != endo.nvars or f.field != endo.field:
            raise ArityMismatch("coefficient lives in a different ring than the endo")
        if theta_degree < 0:
            raise ArityMismatch("theta degree must be nonnegative")
        return cls(endo, {theta_degree: f} if not f.is_zero() else {})

    @classmethod
    def theta(cls, endo: Endo, e: int = 1) -> "SkewPoly":
        return cls.from_poly(endo, Poly.one(endo.field, endo.nvars), e)

    @classmethod
    def from_coeffs(cls, endo: Endo, pairs) -> "SkewPoly":
        coeffs: dict[int, Poly] = {}
        for e, f in pairs:
            if f.is_zero():
                continue
            if e in coeffs:
                f = coeffs[e] + f
            if f.is_zero():
                del coeffs[e]
            else:
                coeffs[e] = f
        return cls(endo, coeffs)

    # -- queries --------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def theta_degree(self) -> int:
        """Largest e with f_e nonzero; -1 for zero."""
        return max(self.coeffs) if self.coeffs else -1

    def coefficient(self, e: int) -> Poly:
        return self.coeffs.get(e, Poly.zero(self.endo.field, self.endo.nvars))

    def constant_part(self) -> Poly:
        return self.coefficient(0)

    def _check(self, other: "SkewPoly"):
        if self.endo != other.endo:
            raise EndoMismatch("skew elements over different endomorphisms")

    # -- arithmetic ------------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SkewPoly):
            self._check(other)
            return other
        if isinstance(other, Poly):
            return SkewPoly.from_poly(self.endo, other)
        if isinstance(other, int):
            return SkewPoly.from_poly(
                self.endo, Poly.constant(self.endo.field, self.endo.nvars, other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        coeffs = dict(self.coeffs)
        for e, f in other.coeffs.items():
            s = coeffs.get(e)
            s = f if s is None else s + f
            if s.is_zero():
                coeffs.pop(e, None)
            else:
                coeffs[e] = s
        return SkewPoly(self.endo, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return SkewPoly(self.endo, {e: -f for e, f in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        endo = self.endo
        out: dict[int, Poly] = {}
        for e, f in self.coeffs.items():
            phi_e = endo.power(e)
            for d, g in other.coeffs.items():
                piece = f * phi_e.apply(g)
                if piece.is_zero():
                    continue
                key = e + d
                acc = out.get(key)
                acc = piece if acc is None else acc + piece
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
        return SkewPoly(endo, out)

    def __rmul__(self, other):
        # Poly and int coefficients commute past nothing: they sit at
        # theta degree 0, so left multiplication is plain coefficient action.
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.endo, frozenset((e, f) for e, f in self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    # -- the augmentation -----------------------------------------------------------

    def augment(self) -> Poly:
        """Sum of the left coefficients: sum(f_e T^e) -> sum(f_e).

        Kills every left multiple of (T - 1) and realizes the zeroth
        homology of the phi-Koszul complex concretely.
        """
        out = Poly.zero(self.endo.field, self.endo.nvars)
        for f in self.coeffs.values():
            out = out + f
        return out

    # -- presentation ------------------------------------------------------------------

    def to_obj(self):
        """Serialized form: [[e, poly], ...] by ascending theta degree."""
        return [[e, self.coeffs[e].to_obj()] for e in sorted(self.coeffs)]

    @classmethod
    def from_obj(cls, endo: Endo, obj) -> "SkewPoly":
        return cls.from_coeffs(
            endo, ((e, Poly.from_obj(endo.field, endo.nvars, p)) for e, p in obj))

    def __str__(self):
        if not self.coeffs:
            return "0"
        chunks = []
        for e in sorted(self.coeffs, reverse=True):
            f = self.coeffs[e]
            body = str(f)
            if e:
                if len(f.terms) > 1:
                    body = f"({body})"
                suffix = THETA if e == 1 else f"{THETA}^{e}"
                body = suffix if body == "1" else f"{body}*{suffix}"
            chunks.append(body)
        return " + ".join(chunks)

    def __repr__(self):
        return f"SkewPoly({self})"


def opposite_product(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Product in the opposite ring, i.e. the right skew ring A[eps; phi]
    read through the standard identification: op(a, b) = b * a."""
    return b * a


class SkewMatrix:
    """Rectangular matrix over S[T; phi], acting on row vectors from the right."""

    __slots__ = ("endo", "rows", "cols", "entries")

    def __init__(self, endo: Endo, entries: list[list[SkewPoly]], cols: int | None = None):
        rows = len(entries)
        if rows:
            width = len(entries[0])
        else:
            width = cols if cols is not None else 0
        for row in entries:
            if len(row) != width:
                raise ShapeMismatch("ragged matrix rows")
            for entry in row:
                if entry.endo != endo:
                    raise EndoMismatch("matrix entry over a different endomorphism")
        self.endo = endo
        self.rows = rows
        self.cols = width
        self.entries = [list(row) for row in entries]

    # -- constructors --------------------------------------------------------------

    @classmethod
    def zeros(cls, endo: Endo, rows: int, cols: int) -> "SkewMatrix":
        z = SkewPoly.zero(endo)
        return cls(endo, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, endo: Endo, size: int) -> "SkewMatrix":
        one = SkewPoly.one(endo)
        z = SkewPoly.zero(endo)
        return cls(endo, [[one if i == j else z for j in range(size)] for i in range(size)])

    @classmethod
    def from_polys(cls, endo: Endo, rows: list[list[Poly]], cols: int | None = None) -> "SkewMatrix":
        """Embed a matrix over S at theta degree 0."""
        return cls(endo, [[SkewPoly.from_poly(endo, f) for f in row] for row in rows],
                   cols=cols)

    @classmethod
    def row_vector(cls, entries: list[SkewPoly], endo: Endo | None = None) -> "SkewMatrix":
        if endo is None:
            if not entries:
                raise ShapeMismatch("empty row vector needs an explicit endo")
            endo = entries[0].endo
        return cls(endo, [list(entries)], cols=len(entries))

    @classmethod
    def block(cls, endo: Endo, grid: list[list["SkewMatrix"]]) -> "SkewMatrix":
        """Assemble from a 2x2 (or any) grid of blocks with consistent shapes."""
        entries: list[list[SkewPoly]] = []
        cols = sum(b.cols for b in grid[0]) if grid else 0
        for band in grid:
            height = band[0].rows
            for b in band:
                if b.rows != height:
                    raise ShapeMismatch("block heights differ within a band")
            for i in range(height):
                row: list[SkewPoly] = []
                for b in band:
                    row.extend(b.entries[i])
                entries.append(row)
        return cls(endo, entries, cols=cols)

    # -- access -----------------------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> list[SkewPoly]:
        return list(self.entries[i])

    def submatrix(self, row_slice: slice, col_slice: slice) -> "SkewMatrix":
        picked = [row[col_slice] for row in self.entries[row_slice]]
        width = len(range(*col_slice.indices(self.cols)))
        return SkewMatrix(self.endo, picked, cols=width)

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self.entries for entry in row)

    # -- arithmetic ----------------------------------------------------------------------

    def _check(self, other: "SkewMatrix"):
        if self.endo != other.endo:
            raise EndoMismatch("matrices over different endomorphisms")

    def __add__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch(f"{self.rows}x{self.cols} + {other.rows}x{other.cols}")
        return SkewMatrix(self.endo,
                          [[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.entries, other.entries)],
                          cols=self.cols)

    def __sub__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return SkewMatrix(self.endo, [[-a for a in row] for row in self.entries],
                          cols=self.cols)

    def scale(self, factor: SkewPoly | Poly | int) -> "SkewMatrix":
        """Left-multiply every entry by a scalar."""
        if not isinstance(factor, SkewPoly):
            factor = SkewPoly.zero(self.endo)._coerce(factor)
            if factor is None:
                raise ArityMismatch("cannot scale by this value")
        return SkewMatrix(self.endo, [[factor * a for a in row] for row in self.entries],
                          cols=self.cols)

    def __mul__(self, other):
        """Matrix product; factors are composed in writing order, which is
        the order right multiplication composes maps on row vectors."""
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        self._check(other)
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = SkewPoly.zero(self.endo)
        out: list[list[SkewPoly]] = []
        for i in range(self.rows):
            row_i = self.entries[i]
            out_row = []
            for j in range(other.cols):
                acc = zero
                for k in range(other.rows):
                    a = row_i[k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return SkewMatrix(self.endo, out, cols=other.cols)

    def __eq__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return (self.endo == other.endo and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.endo, self.rows, self.cols,
                     tuple(tuple(row) for row in self.entries)))

    # -- presentation ------------------------------------------------------------------------

    def to_obj(self):
        """Row-major nested lists of serialized entries."""
        return [[entry.to_obj() for entry in row] for row in self.entries]

    @classmethod
    def from_obj(cls, endo: Endo, obj, cols: int | None = None) -> "SkewMatrix":
        return cls(endo, [[SkewPoly.from_obj(endo, cell) for cell in row] for row in obj],
                   cols=cols)

    def __str__(self):
        body = "; ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.entries)
        return f"SkewMatrix {self.rows}x{self.cols} [{body}]"

    __repr__ = __str__
