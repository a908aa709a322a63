"""Exact number kernel: Q-affine values over symbolic atoms.

A :class:`ParamValue` is a rational constant plus a finite Q-linear
combination of declared atoms.  An atom is either transcendental (distinct
transcendental atoms are treated as algebraically independent over Q) or
algebraic-irrational (guaranteed not in Q, nothing else assumed).  This is
the entire universe for parameter arithmetic; it is exactly rich enough to
make every integer-coset condition used by the classifiers decidable, up to
an explicit three-valued Unknown.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction | int


class AtomKind(Enum):
    TRANSCENDENTAL = "tau"
    ALGEBRAIC_IRRATIONAL = "alg"


@dataclass(frozen=True)
class Atom:
    """A named symbolic constant, e.g. tau1 (transcendental) or alg2."""

    kind: AtomKind
    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("atom index must be nonnegative")

    @property
    def name(self) -> str:
        return f"{self.kind.value}{self.index}"

    def sort_key(self) -> tuple[str, int]:
        return (self.kind.value, self.index)

    def __repr__(self) -> str:
        return f"Atom({self.name})"


def tau(index: int) -> Atom:
    return Atom(AtomKind.TRANSCENDENTAL, index)


def alg(index: int) -> Atom:
    return Atom(AtomKind.ALGEBRAIC_IRRATIONAL, index)


class TriBool(Enum):
    """Three-valued verdict. Unknown only arises from algebraic-irrational
    atoms whose mutual relations are underdetermined."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __bool__(self) -> bool:
        # Forbid accidental truthiness: callers must branch on all three values.
        raise TypeError("TriBool is not a bool; compare against TriBool members")

    @staticmethod
    def of(flag: bool) -> "TriBool":
        return TriBool.YES if flag else TriBool.NO


def tri_and(values: Iterable[TriBool]) -> TriBool:
    out = TriBool.YES
    for v in values:
        if v is TriBool.NO:
            return TriBool.NO
        if v is TriBool.UNKNOWN:
            out = TriBool.UNKNOWN
    return out


def tri_or(values: Iterable[TriBool]) -> TriBool:
    out = TriBool.NO
    for v in values:
        if v is TriBool.YES:
            return TriBool.YES
        if v is TriBool.UNKNOWN:
            out = TriBool.UNKNOWN
    return out


def tri_not(value: TriBool) -> TriBool:
    if value is TriBool.YES:
        return TriBool.NO
    if value is TriBool.NO:
        return TriBool.YES
    return TriBool.UNKNOWN


class ParamSyntaxError(ValueError):
    """Malformed parameter text; carries the 0-based offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ParamValue:
    """Immutable canonical Q-affine combination of atoms.

    Canonical form stores no zero coefficients and keeps atom terms sorted,
    so structural equality is semantic equality and values hash.
    """

    __slots__ = ("const", "terms")

    const: Fraction
    terms: tuple[tuple[Atom, Fraction], ...]

    def __init__(self, const: Rational = 0, coeffs: Mapping[Atom, Rational] | None = None):
        object.__setattr__(self, "const", Fraction(const))
        items = []
        if coeffs:
            for atom, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    items.append((atom, c))
        items.sort(key=lambda it: it[0].sort_key())
        object.__setattr__(self, "terms", tuple(items))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("ParamValue is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(value: Rational) -> "ParamValue":
        return ParamValue(value)

    @staticmethod
    def of_atom(atom: Atom, coeff: Rational = 1) -> "ParamValue":
        return ParamValue(0, {atom: coeff})

    # -- inspection --------------------------------------------------------

    def coeff(self, atom: Atom) -> Fraction:
        for a, c in self.terms:
            if a == atom:
                return c
        return Fraction(0)

    def atoms(self) -> tuple[Atom, ...]:
        return tuple(a for a, _ in self.terms)

    @property
    def is_rational(self) -> bool:
        return not self.terms

    @property
    def has_transcendental(self) -> bool:
        return any(a.kind is AtomKind.TRANSCENDENTAL for a, _ in self.terms)

    @property
    def algebraic_atoms(self) -> tuple[Atom, ...]:
        return tuple(a for a, _ in self.terms if a.kind is AtomKind.ALGEBRAIC_IRRATIONAL)

    # -- arithmetic (closed and exact) --------------------------------------

    def _combine(self, other: "ParamValue", sign: int) -> "ParamValue":
        coeffs: dict[Atom, Fraction] = dict(self.terms)
        for a, c in other.terms:
            coeffs[a] = coeffs.get(a, Fraction(0)) + sign * c
        return ParamValue(self.const + sign * other.const, coeffs)

    def __add__(self, other):
        if isinstance(other, ParamValue):
            return self._combine(other, 1)
        if isinstance(other, (int, Fraction)):
            return ParamValue(self.const + other, dict(self.terms))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ParamValue):
            return self._combine(other, -1)
        if isinstance(other, (int, Fraction)):
            return ParamValue(self.const - other, dict(self.terms))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "ParamValue":
        return ParamValue(-self.const, {a: -c for a, c in self.terms})

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            s = Fraction(scalar)
            return ParamValue(self.const * s, {a: c * s for a, c in self.terms})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            if scalar == 0:
                raise ZeroDivisionError("division of ParamValue by zero")
            return self * (Fraction(1) / Fraction(scalar))
        return NotImplemented

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ParamValue(other)
        if not isinstance(other, ParamValue):
            return NotImplemented
        return self.const == other.const and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.const, self.terms))

    def __str__(self) -> str:
        return format_param(self)

    def __repr__(self) -> str:
        return f"ParamValue({format_param(self)!r})"


ZERO = ParamValue(0)


def _format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_param(value: ParamValue) -> str:
    """Deterministic printer; output re-parses to an equal value.

    Atom terms come first (sorted by atom name), then the constant.
    """
    pieces: list[tuple[int, str]] = []  # (sign, magnitude text)
    for atom, c in value.terms:
        mag = abs(c)
        body = atom.name if mag == 1 else f"{_format_fraction(mag)}*{atom.name}"
        pieces.append((1 if c > 0 else -1, body))
    if value.const != 0 or not pieces:
        pieces.append((1 if value.const >= 0 else -1, _format_fraction(abs(value.const))))
    sign, body = pieces[0]
    if sign < 0:
        # A bare leading "-atom" is outside the grammar; emit "-1*atom" instead.
        if body[0].isdigit():
            out = "-" + body
        elif "*" in body:
            out = "-" + body
        else:
            out = "-1*" + body
    else:
        out = body
    for sign, body in pieces[1:]:
        out += (" + " if sign > 0 else " - ") + body
    return out


_TOKEN_RE = re.compile(r"\s*(?:(?P<atom>(?:tau|alg)\d+)|(?P<num>\d+)|(?P<op>[+\-*/]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParamSyntaxError(f"unexpected character {stripped[0]!r}", len(text) - len(stripped))
        if m.lastgroup is not None:
            tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    return tokens


def _atom_from_name(name: str) -> Atom:
    kind = AtomKind.TRANSCENDENTAL if name.startswith("tau") else AtomKind.ALGEBRAIC_IRRATIONAL
    return Atom(kind, int(name[3:]))


def parse_param(text: str) -> ParamValue:
    """Parse the parameter grammar::

        expr   := term (("+"|"-") term)*
        term   := rational ("*" atom)? | atom
        rational := ["-"] digits ("/" digits)?
        atom   := "tau" digits | "alg" digits

    Whitespace is insignificant.  Raises :class:`ParamSyntaxError` with the
    offending position on malformed input or a zero denominator.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParamSyntaxError("empty parameter expression", 0)
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else (None, "", len(text))

    def parse_rational(allow_sign: bool) -> Fraction:
        nonlocal idx
        sign = 1
        kind, val, pos = peek()
        if allow_sign and kind == "op" and val == "-":
            sign = -1
            idx += 1
            kind, val, pos = peek()
        if kind != "num":
            raise ParamSyntaxError("expected a number", pos)
        idx += 1
        numerator = int(val)
        kind, val, pos = peek()
        if kind == "op" and val == "/":
            idx += 1
            kind, val, pos = peek()
            if kind != "num":
                raise ParamSyntaxError("expected a denominator", pos)
            idx += 1
            if int(val) == 0:
                raise ParamSyntaxError("zero denominator", pos)
            return Fraction(sign * numerator, int(val))
        return Fraction(sign * numerator)

    def parse_term() -> ParamValue:
        nonlocal idx
        kind, val, pos = peek()
        if kind == "atom":
            idx += 1
            return ParamValue.of_atom(_atom_from_name(val))
        q = parse_rational(allow_sign=True)
        kind, val, pos = peek()
        if kind == "op" and val == "*":
            idx += 1
            kind, val, pos = peek()
            if kind != "atom":
                raise ParamSyntaxError("expected an atom after '*'", pos)
            idx += 1
            return ParamValue.of_atom(_atom_from_name(val), q)
        return ParamValue(q)

    result = parse_term()
    while idx < len(tokens):
        kind, val, pos = peek()
        if kind != "op" or val not in "+-":
            raise ParamSyntaxError("expected '+' or '-'", pos)
        idx += 1
        term = parse_term()
        result = result + term if val == "+" else result - term
    return result


def decide_coset(x: ParamValue, offset: Rational, modulus: Rational) -> TriBool:
    """Decide whether ``x - offset`` lies in ``modulus * Z``.

    Atom-free values are settled by rational arithmetic.  A surviving
    transcendental coefficient decides No (membership would make the atom
    algebraic); a single surviving algebraic-irrational atom decides No
    (membership would force it into Q); two or more distinct surviving
    algebraic-irrational atoms leave the question Unknown.
    """
    modulus = Fraction(modulus)
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    y = x - Fraction(offset)
    if not y.terms:
        return TriBool.of((y.const / modulus).denominator == 1)
    if y.has_transcendental:
        return TriBool.NO
    return TriBool.NO if len(y.terms) == 1 else TriBool.UNKNOWN


def rational_rank(rows: Sequence[Sequence[Rational]]) -> int:
    """Rank over Q of a small dense matrix, by exact Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for col in range(cols):
        pivot_row = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                factor = work[r][col] / pivot
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def transcendence_degree(values: Sequence[ParamValue]) -> int:
    """Transcendence degree over Q contributed by a tuple of values.

    Equals the Q-rank of the matrix of transcendental-atom coefficient
    vectors; algebraic-irrational atoms and constants contribute nothing.
    """
    atoms = sorted(
        {a for v in values for a, _ in v.terms if a.kind is AtomKind.TRANSCENDENTAL},
        key=Atom.sort_key,
    )
    if not atoms:
        return 0
    rows = [[v.coeff(a) for a in atoms] for v in values]
    return rational_rank(rows)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def integer_solve(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """Solve A·x = b over the integers, exactly.

    Performs unimodular column reduction (Hermite-style) of A, tracking the
    transform, then back-substitutes with divisibility checks.  Returns one
    integral solution, or None when no integral solution exists.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("matrix rows must have equal length")
    if len(b) != m:
        raise ValueError("dimension mismatch between matrix and vector")
    W = [[int(x) for x in row] for row in A]
    b = [int(x) for x in b]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivots: list[tuple[int, int]] = []
    col = 0
    for row in range(m):
        if col >= n:
            break
        j0 = next((j for j in range(col, n) if W[row][j] != 0), None)
        if j0 is None:
            continue
        if j0 != col:
            for M in (W, U):
                for r in range(len(M)):
                    M[r][col], M[r][j0] = M[r][j0], M[r][col]
        for j in range(col + 1, n):
            if W[row][j] == 0:
                continue
            a, c = W[row][col], W[row][j]
            g, s, t = _ext_gcd(a, c)
            u_, v_ = a // g, c // g
            for M in (W, U):
                for r in range(len(M)):
                    x, y = M[r][col], M[r][j]
                    M[r][col] = s * x + t * y
                    M[r][j] = -v_ * x + u_ * y
        pivots.append((row, col))
        col += 1
    y = [0] * n
    for row, c in pivots:
        residue = b[row] - sum(W[row][j] * y[j] for j in range(c))
        pivot = W[row][c]
        if residue % pivot != 0:
            return None
        y[c] = residue // pivot
    for r in range(m):
        if sum(W[r][j] * y[j] for j in range(n)) != b[r]:
            return None
    x = [sum(U[i][j] * y[j] for j in range(n)) for i in range(n)]
    assert all(sum(A[i][k] * x[k] for k in range(n)) == b[i] for i in range(m))
    return x
