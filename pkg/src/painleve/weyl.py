"""Parameter-transformation engine for the six families.

Each family carries a group of exact affine maps on parameter space
(generated by the cataloged reflections and quarter/third translations);
fibers over the same orbit are in definable bijection.  This module holds
the generator catalogs, the affine-map algebra, the closed-form orbit
criteria with re-verifiable witnesses, best-effort generator-word synthesis,
and the orthogonality verdict table within and across families.

Words are tuples of generator names applied left to right; ``name^-1``
denotes an inverse.  Orbit witnesses use the convention
``w[j] = signs[j] * v[perm[j]] + shift[j]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .catalog import EquationId, Family, family_space
from .citations import Citation, cite
from .exactnum import (
    ParamValue,
    Rational,
    TriBool,
    decide_coset,
    integer_solve,
    transcendence_degree,
    tri_and,
    tri_or,
)


class NoGeneratorsError(ValueError):
    pass


# -- affine maps -----------------------------------------------------------------


@dataclass(frozen=True)
class AffineMap:
    """Exact affine map v -> linear*v + translation on a family's parameter space."""

    family: Family
    linear: tuple[tuple[Fraction, ...], ...]
    translation: tuple[Fraction, ...]
    provenance: str = field(default="composite", compare=False)

    @property
    def dim(self) -> int:
        return len(self.translation)

    def apply(self, values: Sequence[ParamValue | Rational]) -> tuple[ParamValue, ...]:
        vals = [v if isinstance(v, ParamValue) else ParamValue(v) for v in values]
        if len(vals) != self.dim:
            raise ValueError(f"expected {self.dim} values, got {len(vals)}")
        out = []
        for i in range(self.dim):
            acc = ParamValue(self.translation[i])
            for j, c in enumerate(self.linear[i]):
                if c:
                    acc = acc + vals[j] * c
            out.append(acc)
        return tuple(out)

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: apply(compose(f, g), v) == apply(f, apply(g, v))."""
        if self.family is not other.family:
            raise ValueError("cannot compose maps from different families")
        n = self.dim
        lin = tuple(
            tuple(Fraction(sum(self.linear[i][k] * other.linear[k][j] for k in range(n))) for j in range(n))
            for i in range(n)
        )
        tr = tuple(
            Fraction(sum(self.linear[i][k] * other.translation[k] for k in range(n)) + self.translation[i])
            for i in range(n)
        )
        return AffineMap(self.family, lin, tr, provenance="composite")

    def inverse(self) -> "AffineMap":
        n = self.dim
        aug = [list(self.linear[i]) + [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise ValueError("affine map is not invertible")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            pv = aug[col][col]
            aug[col] = [x / pv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        inv = tuple(tuple(row[n:]) for row in aug)
        tr = tuple(Fraction(-sum(inv[i][k] * self.translation[k] for k in range(n))) for i in range(n))
        return AffineMap(self.family, inv, tr, provenance=f"({self.provenance})^-1")

    def is_identity(self) -> bool:
        return self == AffineMap.identity(self.family, self.dim)

    @staticmethod
    def identity(family: Family, dim: int) -> "AffineMap":
        lin = tuple(tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim))
        return AffineMap(family, lin, tuple(Fraction(0) for _ in range(dim)), provenance="id")

    @staticmethod
    def from_permutation(
        family: Family,
        perm: Sequence[int],
        signs: Sequence[int] | None = None,
        translation: Sequence[Rational] | None = None,
        name: str = "composite",
    ) -> "AffineMap":
        """Signed permutation plus translation: result[j] = signs[j]*v[perm[j]] + translation[j]."""
        n = len(perm)
        signs = signs or [1] * n
        translation = translation or [0] * n
        lin = tuple(
            tuple(Fraction(signs[j]) if k == perm[j] else Fraction(0) for k in range(n))
            for j in range(n)
        )
        return AffineMap(family, lin, tuple(Fraction(x) for x in translation), provenance=name)

    def __str__(self) -> str:
        return f"AffineMap[{self.family.value}:{self.provenance}]"


# -- generator catalogs ---------------------------------------------------------------


def _named(family: Family) -> dict[str, AffineMap]:
    P = AffineMap.from_permutation
    if family is Family.PII:
        return {
            "reflect": AffineMap(family, ((Fraction(-1),),), (Fraction(-1),), provenance="reflect"),
            "shift_up": AffineMap(family, ((Fraction(1),),), (Fraction(1),), provenance="shift_up"),
            "shift_down": AffineMap(family, ((Fraction(1),),), (Fraction(-1),), provenance="shift_down"),
        }
    if family is Family.PIII:
        return {
            "s1": P(family, (1, 0), name="s1"),
            "s2": P(family, (1, 0), signs=(-1, -1), name="s2"),
            "s3": P(family, (1, 0), translation=(1, -1), name="s3"),
            "s4": P(family, (1, 0), signs=(-1, -1), translation=(1, 1), name="s4"),
        }
    if family is Family.PIV:
        return {
            "s0": P(family, (0, 2, 1), translation=(0, 1, -1), name="s0"),
            "s1": P(family, (1, 0, 2), name="s1"),
            "s2": P(family, (2, 1, 0), name="s2"),
            "tminus": AffineMap(
                family,
                AffineMap.identity(family, 3).linear,
                (Fraction(-1, 3), Fraction(-1, 3), Fraction(2, 3)),
                provenance="tminus",
            ),
        }
    if family is Family.PV:
        return {
            "s1": P(family, (1, 0, 2, 3), name="s1"),
            "s2": P(family, (2, 1, 0, 3), name="s2"),
            "s3": P(family, (0, 1, 3, 2), name="s3"),
            "tminus": AffineMap(
                family,
                AffineMap.identity(family, 4).linear,
                (Fraction(-1, 4), Fraction(-1, 4), Fraction(-1, 4), Fraction(3, 4)),
                provenance="tminus",
            ),
        }
    if family is Family.PVI:
        return {
            "s1": P(family, (1, 0, 2, 3), name="s1"),
            "s2": P(family, (0, 2, 1, 3), name="s2"),
            "s3": P(family, (0, 1, 3, 2), name="s3"),
            "s4": P(family, (0, 1, 3, 2), signs=(1, 1, -1, -1), name="s4"),
            "s5": P(family, (1, 0, 2, 3), signs=(-1, -1, 1, 1), translation=(1, 1, 0, 0), name="s5"),
        }
    raise NoGeneratorsError(f"family {family.value} has no parameter transformations")


# Orbit-group generators; for the fourth family tminus is auxiliary only
# (it defines s0 but is not itself a member of the orbit group H).
_ORBIT_GENERATORS = {
    Family.PII: ("reflect", "shift_up", "shift_down"),
    Family.PIII: ("s1", "s2", "s3", "s4"),
    Family.PIV: ("s0", "s1", "s2"),
    Family.PV: ("s1", "s2", "s3", "tminus"),
    Family.PVI: ("s1", "s2", "s3", "s4", "s5"),
}


def named_generators(family: Family) -> dict[str, AffineMap]:
    """All named maps for a family, including auxiliaries such as tminus."""
    return dict(_named(family))


def generators(family: Family) -> list[AffineMap]:
    """The generators of the family's orbit group."""
    table = _named(family)
    return [table[name] for name in _ORBIT_GENERATORS[family]]


def resolve_token(family: Family, token: str) -> AffineMap:
    invert = token.endswith("^-1")
    base = token[:-3] if invert else token
    table = _named(family)
    if base not in table:
        raise KeyError(f"unknown generator {token!r} for family {family.value}")
    return table[base].inverse() if invert else table[base]


def invert_token(family: Family, token: str) -> str:
    if token.endswith("^-1"):
        return token[:-3]
    m = resolve_token(family, token)
    inv = m.inverse()
    if inv == m:
        return token
    for name, g in _named(family).items():
        if g == inv:
            return name
    return token + "^-1"


def invert_word(family: Family, word: Sequence[str]) -> tuple[str, ...]:
    return tuple(invert_token(family, tok) for tok in reversed(word))


def word_map(family: Family, word: Sequence[str]) -> AffineMap:
    """Compose a word (applied left to right) into a single affine map."""
    dim = family_space(family).arity
    out = AffineMap.identity(family, dim)
    for token in word:
        out = resolve_token(family, token).compose(out)
    return out


def apply_word(family: Family, word: Sequence[str], values: Sequence[ParamValue | Rational]) -> tuple[ParamValue, ...]:
    out = tuple(v if isinstance(v, ParamValue) else ParamValue(v) for v in values)
    for token in word:
        out = resolve_token(family, token).apply(out)
    return out


def pv_translation_module() -> list[AffineMap]:
    """The four quarter-translations generating the fifth family's Z-module of
    translations: +1/4*(1,1,1,-3), +1/4*(0,0,-4,4), +1/4*(0,-4,0,4), +1/4*(-4,0,0,4)."""
    fam = Family.PV
    ident = AffineMap.identity(fam, 4).linear
    vecs = [
        (Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), Fraction(-3, 4)),
        (Fraction(0), Fraction(0), Fraction(-1), Fraction(1)),
        (Fraction(0), Fraction(-1), Fraction(0), Fraction(1)),
        (Fraction(-1), Fraction(0), Fraction(0), Fraction(1)),
    ]
    return [AffineMap(fam, ident, v, provenance=f"alpha{i + 1}") for i, v in enumerate(vecs)]


# -- permutation and translation words (machine-derived, verified) -----------------------


@lru_cache(maxsize=None)
def _perm_words(family: Family) -> dict[tuple[tuple[Fraction, ...], ...], tuple[str, ...]]:
    """BFS over the permutation generators: linear part -> shortest word."""
    perm_gens = {
        Family.PIV: ("s1", "s2"),
        Family.PV: ("s1", "s2", "s3"),
    }[family]
    dim = family_space(family).arity
    start = AffineMap.identity(family, dim)
    seen = {start.linear: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for name in perm_gens:
                g = resolve_token(family, name)
                composed = g.compose(m)
                if composed.linear not in seen:
                    seen[composed.linear] = seen[m.linear] + (name,)
                    nxt.append(composed)
        frontier = nxt
    return seen


def _perm_word_for(family: Family, perm: Sequence[int]) -> tuple[str, ...]:
    target = AffineMap.from_permutation(family, perm)
    return _perm_words(family)[target.linear]


@lru_cache(maxsize=None)
def _translation_words(family: Family) -> dict[tuple[Fraction, ...], tuple[str, ...]]:
    """Words for the elementary integer translations e_i - e_j, derived by
    conjugating one base translation word by permutation words and verifying
    each candidate exactly."""
    if family is Family.PIV:
        base_word: tuple[str, ...] = ("s1", "s2", "s1", "s0")
    elif family is Family.PV:
        composite = ("tminus", "s3", "s1", "s2", "s1", "s3", "tminus^-1")
        base_word = _perm_word_for(family, (0, 3, 2, 1)) + composite
    else:
        raise NoGeneratorsError(f"no translation-word table for family {family.value}")
    dim = family_space(family).arity
    ident = AffineMap.identity(family, dim)
    out: dict[tuple[Fraction, ...], tuple[str, ...]] = {}
    for linear, pword in _perm_words(family).items():
        word = pword + base_word + invert_word(family, pword)
        m = word_map(family, word)
        if m.linear == ident.linear and m.translation not in out:
            out[m.translation] = word
    return out


def _integer_translation_word(family: Family, shift: Sequence[Fraction]) -> tuple[str, ...] | None:
    """Express an integral sum-zero translation as a generator word using the
    elementary-move table; coefficients come from integer_solve over the
    triangular basis e_i - e_{i+1}."""
    moves = _translation_words(family)
    n = family_space(family).arity
    basis = []
    for i in range(n - 1):
        vec = tuple(Fraction(1 if k == i else (-1 if k == i + 1 else 0)) for k in range(n))
        if vec not in moves:
            return None
        basis.append(vec)
    A = [[int(b[i]) for b in basis] for i in range(n)]
    target = [int(x) for x in shift]
    coeffs = integer_solve(A, target)
    if coeffs is None:
        return None
    word: tuple[str, ...] = ()
    for c, vec in zip(coeffs, basis):
        if c == 0:
            continue
        move = moves[vec] if c > 0 else invert_word(family, moves[vec])
        word += move * abs(c)
    return word


# -- orbit verdicts -------------------------------------------------------------------


class HypothesisStatus(Enum):
    PROVED = "proved"
    SUFFICIENT_ONLY = "sufficient-only"
    OPEN = "open"


@dataclass(frozen=True)
class OrbitWitness:
    """Witness data; when the map fields are set, w = signs*v[perm] + shift exactly."""

    perm: tuple[int, ...] | None = None
    signs: tuple[int, ...] | None = None
    shift: tuple[Fraction, ...] | None = None
    quarter_shift: int | None = None
    integer_shift: tuple[int, ...] | None = None
    note: str | None = None

    @property
    def has_map(self) -> bool:
        return self.perm is not None and self.signs is not None and self.shift is not None

    def reconstruct(self, v: Sequence[ParamValue]) -> tuple[ParamValue, ...] | None:
        if not self.has_map:
            return None
        return tuple(
            v[self.perm[j]] * self.signs[j] + self.shift[j] for j in range(len(self.perm))
        )

    def verifies(self, v: Sequence[ParamValue], w: Sequence[ParamValue]) -> bool:
        rebuilt = self.reconstruct(v)
        return rebuilt is not None and tuple(rebuilt) == tuple(w)


@dataclass(frozen=True)
class OrbitVerdict:
    family: Family
    related: TriBool
    criterion: str
    criterion_citation: Citation
    hypothesis_status: HypothesisStatus
    witness: OrbitWitness | None = None
    word: tuple[str, ...] | None = None
    word_reason: str | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class WordResult:
    word: tuple[str, ...] | None
    reason: str | None = None


def _coerce_params(family: Family, values: Sequence[ParamValue | Rational]) -> tuple[ParamValue, ...]:
    return EquationId(family, values).params


def _search_witness(candidates: Iterable[tuple[list[TriBool], OrbitWitness]]) -> tuple[TriBool, OrbitWitness | None]:
    saw_unknown = False
    for tests, witness in candidates:
        combined = tri_and(tests)
        if combined is TriBool.YES:
            return TriBool.YES, witness
        if combined is TriBool.UNKNOWN:
            saw_unknown = True
    return (TriBool.UNKNOWN if saw_unknown else TriBool.NO), None


def _is_generic(family: Family, params: Sequence[ParamValue]) -> bool:
    return transcendence_degree(params) == family_space(family).dimension


def _even_sign_patterns(n: int = 4) -> list[tuple[int, ...]]:
    return [s for s in itertools.product((1, -1), repeat=n) if s.count(-1) % 2 == 0]


def orbit_decide(family: Family, v: Sequence[ParamValue | Rational], w: Sequence[ParamValue | Rational]) -> OrbitVerdict:
    """Evaluate the family's closed-form transformation-orbit criterion.

    Yes always certifies nonorthogonality (the transformations realize it);
    the converse direction holds exactly when the hypothesis status is
    ``proved``, i.e. the supporting statement's genericity clauses hold.
    """
    v = _coerce_params(family, v)
    w = _coerce_params(family, w)

    if family is Family.PI:
        witness = OrbitWitness(perm=(), signs=(), shift=(), note="parameter-free family")
        return OrbitVerdict(
            family=family,
            related=TriBool.YES,
            criterion="the first family has a single equation; any two coincide",
            criterion_citation=cite("backlund_maps"),
            hypothesis_status=HypothesisStatus.PROVED,
            witness=witness,
        )

    if family is Family.PII:
        diff = w[0] - v[0]
        summ = w[0] + v[0]
        t_diff = decide_coset(diff, 0, 1)
        t_sum = decide_coset(summ, 0, 1)
        related = tri_or([t_diff, t_sum])
        witness = None
        if t_diff is TriBool.YES:
            witness = OrbitWitness(perm=(0,), signs=(1,), shift=(diff.const,), integer_shift=(int(diff.const),))
        elif t_sum is TriBool.YES:
            witness = OrbitWitness(perm=(0,), signs=(-1,), shift=(summ.const,), integer_shift=(int(summ.const),))
        status = _status(related, v[0].has_transcendental or w[0].has_transcendental)
        return OrbitVerdict(
            family=family,
            related=related,
            criterion="beta - alpha in Z or beta + alpha in Z",
            criterion_citation=cite("genone"),
            hypothesis_status=status,
            witness=witness,
        )

    if family is Family.PIII:
        dv = v[1] - v[0]
        dw = w[1] - w[0]
        t_plus = decide_coset(dw - dv, 0, 2)
        t_minus = decide_coset(dw + dv, 0, 2)
        related = tri_or([t_plus, t_minus])
        witness = None
        if related is TriBool.YES:
            for eps, perm in itertools.product((1, -1), ((0, 1), (1, 0))):
                shifts = [w[j] - v[perm[j]] * eps for j in range(2)]
                if all(s.is_rational for s in shifts):
                    in_lattice = all(s.const.denominator == 1 for s in shifts) and (
                        (shifts[0].const + shifts[1].const) % 2 == 0
                    )
                    witness = OrbitWitness(
                        perm=perm,
                        signs=(eps, eps),
                        shift=tuple(s.const for s in shifts),
                        note=None if in_lattice else "affine witness lies outside the generator lattice",
                    )
                    break
            if witness is None:
                branch = "+" if t_plus is TriBool.YES else "-"
                shift = (dw - dv) if t_plus is TriBool.YES else (dw + dv)
                witness = OrbitWitness(
                    integer_shift=(int(shift.const),),
                    note=f"difference criterion only (branch {branch}); no affine witness with rational shift",
                )
        status = _status(
            related,
            transcendence_degree(v) == 2 and transcendence_degree(w) == 2,
        )
        return OrbitVerdict(
            family=family,
            related=related,
            criterion="{pi(v2-v1), pi(v1-v2)} = {pi(w2-w1), pi(w1-w2)} where pi is reduction mod 2Z",
            criterion_citation=cite("p3orth"),
            hypothesis_status=status,
            witness=witness,
        )

    if family is Family.PIV:
        def candidates():
            for perm in itertools.permutations(range(3)):
                diffs = [w[j] - v[perm[j]] for j in range(3)]
                tests = [decide_coset(d, 0, 1) for d in diffs]
                if tri_and(tests) is TriBool.YES:
                    witness = OrbitWitness(
                        perm=perm,
                        signs=(1, 1, 1),
                        shift=tuple(d.const for d in diffs),
                        integer_shift=tuple(int(d.const) for d in diffs),
                    )
                else:
                    witness = None
                yield tests, witness

        related, witness = _search_witness(candidates())
        status = _status(related, transcendence_degree(v) == 2 or transcendence_degree(w) == 2)
        return OrbitVerdict(
            family=family,
            related=related,
            criterion="some permutation sigma of {1,2,3} has v_i - w_sigma(i) in Z for all i",
            criterion_citation=cite("p4orth"),
            hypothesis_status=status,
            witness=witness,
        )

    if family is Family.PV:
        def candidates():
            for perm in itertools.permutations(range(4)):
                for a in range(4):
                    diffs = [w[j] - v[perm[j]] - Fraction(a, 4) for j in range(3)]
                    tests = [decide_coset(d, 0, 1) for d in diffs]
                    if tri_and(tests) is TriBool.YES:
                        shift = tuple((w[j] - v[perm[j]]).const for j in range(4))
                        witness = OrbitWitness(
                            perm=perm,
                            signs=(1, 1, 1, 1),
                            shift=shift,
                            quarter_shift=a,
                            integer_shift=tuple(int(d.const) for d in diffs),
                        )
                    else:
                        witness = None
                    yield tests, witness

        related, witness = _search_witness(candidates())
        status = _status(related, _is_generic(family, v) or _is_generic(family, w))
        return OrbitVerdict(
            family=family,
            related=related,
            criterion="a/4*(1,1,1) + (v_sigma(1), v_sigma(2), v_sigma(3)) - (w_1, w_2, w_3) in Z^3 "
            "for some sigma in S_4 and a in Z (a taken mod 4)",
            criterion_citation=cite("pv_orbit"),
            hypothesis_status=status,
            witness=witness,
        )

    if family is Family.PVI:
        def candidates():
            for perm in itertools.permutations(range(4)):
                for signs in _even_sign_patterns():
                    diffs = [w[j] - v[perm[j]] * signs[j] for j in range(4)]
                    tests = [decide_coset(d, 0, 1) for d in diffs]
                    total = diffs[0] + diffs[1] + diffs[2] + diffs[3]
                    tests.append(decide_coset(total, 0, 2))
                    if tri_and(tests) is TriBool.YES:
                        witness = OrbitWitness(
                            perm=perm,
                            signs=signs,
                            shift=tuple(d.const for d in diffs),
                            integer_shift=tuple(int(d.const) for d in diffs),
                        )
                    else:
                        witness = None
                    yield tests, witness

        related, witness = _search_witness(candidates())
        status = HypothesisStatus.SUFFICIENT_ONLY if related is TriBool.YES else HypothesisStatus.OPEN
        return OrbitVerdict(
            family=family,
            related=related,
            criterion="w = signed permutation of v (even sign weight) plus an integer vector "
            "with even coordinate sum",
            criterion_citation=cite("pvi_orbit_criterion"),
            hypothesis_status=status,
            witness=witness,
            notes=("the converse direction is an open question for the sixth family",),
        )

    raise NoGeneratorsError(f"family {family.value} has no orbit criterion")


def _status(related: TriBool, hypotheses_hold: bool) -> HypothesisStatus:
    if hypotheses_hold:
        return HypothesisStatus.PROVED
    if related is TriBool.YES:
        return HypothesisStatus.SUFFICIENT_ONLY
    return HypothesisStatus.OPEN


# -- generator words ---------------------------------------------------------------------


def generator_word(
    family: Family,
    v: Sequence[ParamValue | Rational],
    w: Sequence[ParamValue | Rational],
    bound: int = 16,
) -> WordResult:
    """Best-effort word in the family's generators mapping v to w exactly.

    The permutation/sign part is composed from the reflection generators and
    the translation part is solved over the available translation lattice
    (second, fourth, fifth families); the third and sixth families use a
    bounded bidirectional search, so an absent word there is not a proof of
    non-existence.
    """
    v = _coerce_params(family, v)
    w = _coerce_params(family, w)
    verdict = orbit_decide(family, v, w)
    if verdict.related is not TriBool.YES:
        raise ValueError("generator_word requires an orbit_decide verdict of Yes")

    if family is Family.PI:
        return WordResult(word=())

    if family is Family.PII:
        word = _pii_word(v[0], w[0])
        if word is not None and apply_word(family, word, v) == w:
            return WordResult(word=word)
        return WordResult(word=None, reason="NoWordFound")

    if family in (Family.PIV, Family.PV):
        witness = verdict.witness
        if witness is None or not witness.has_map:
            return WordResult(word=None, reason="NoWordFound")
        word = _perm_word_for(family, witness.perm)
        shift = witness.shift
        if family is Family.PV:
            a = witness.quarter_shift or 0
            quarter = (Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), Fraction(-3, 4))
            word += ("tminus^-1",) * a
            residue = tuple(s - a * q for s, q in zip(shift, quarter))
        else:
            residue = shift
        tail = _integer_translation_word(family, residue)
        if tail is None:
            return WordResult(word=None, reason="NoWordFound")
        word += tail
        if apply_word(family, word, v) == w:
            return WordResult(word=word)
        return WordResult(word=None, reason="NoWordFound")

    if family in (Family.PIII, Family.PVI):
        word = _bidirectional_search(family, v, w, bound)
        if word is not None:
            return WordResult(word=word)
        return WordResult(word=None, reason="NoWordFound")

    raise NoGeneratorsError(f"family {family.value} has no generators")


def _pii_word(a: ParamValue, b: ParamValue) -> tuple[str, ...] | None:
    diff = b - a
    if diff.is_rational and diff.const.denominator == 1:
        n = int(diff.const)
        return ("shift_up",) * n if n >= 0 else ("shift_down",) * (-n)
    summ = b + a
    if summ.is_rational and summ.const.denominator == 1:
        k = int(summ.const) + 1
        word: tuple[str, ...] = ("reflect",)
        word += ("shift_up",) * k if k >= 0 else ("shift_down",) * (-k)
        return word
    return None


def _bidirectional_search(
    family: Family,
    v: tuple[ParamValue, ...],
    w: tuple[ParamValue, ...],
    bound: int,
) -> tuple[str, ...] | None:
    """Meet-in-the-middle over the (involutive) generators; combined word
    length is capped by ``bound``."""
    gen_names = _ORBIT_GENERATORS[family]
    gens = [(name, resolve_token(family, name)) for name in gen_names]
    if v == w:
        return ()
    sides: list[dict[tuple[ParamValue, ...], tuple[str, ...]]] = [{v: ()}, {w: ()}]
    frontiers = [dict(sides[0]), dict(sides[1])]
    depths = [0, 0]
    while sum(depths) < bound and (frontiers[0] or frontiers[1]):
        if not frontiers[0]:
            side = 1
        elif not frontiers[1]:
            side = 0
        else:
            side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        new_frontier: dict[tuple[ParamValue, ...], tuple[str, ...]] = {}
        for state, word in frontiers[side].items():
            for name, g in gens:
                nxt = g.apply(state)
                if nxt in sides[side]:
                    continue
                sides[side][nxt] = word + (name,)
                new_frontier[nxt] = word + (name,)
        frontiers[side] = new_frontier
        depths[side] += 1
        meet = set(sides[0]) & set(sides[1])
        if meet:
            mid = next(iter(meet))
            forward = sides[0][mid]
            backward = sides[1][mid]
            word = forward + invert_word(family, backward)
            if apply_word(family, word, v) == w:
                return word
    return None


def orbit_with_word(
    family: Family,
    v: Sequence[ParamValue | Rational],
    w: Sequence[ParamValue | Rational],
    bound: int = 16,
) -> OrbitVerdict:
    """orbit_decide plus word synthesis when the verdict is Yes."""
    verdict = orbit_decide(family, v, w)
    if verdict.related is not TriBool.YES:
        return verdict
    result = generator_word(family, v, w, bound=bound)
    return replace(verdict, word=result.word, word_reason=result.reason)


# -- orthogonality verdicts ------------------------------------------------------------------


class Verdict(Enum):
    ORTHOGONAL = "orthogonal"
    NONORTHOGONAL = "nonorthogonal"
    OPEN = "open"


@dataclass(frozen=True)
class OrthoVerdict:
    verdict: Verdict
    citation: Citation | None
    applicability: str
    question: Citation | None = None
    notes: tuple[str, ...] = ()


_BACKLUND_KEY = {
    Family.PI: "backlund_maps",
    Family.PII: "pii_backlund",
    Family.PIII: "piii_backlund",
    Family.PIV: "piv_backlund",
    Family.PV: "pv_backlund",
    Family.PVI: "pvi_backlund",
}

_SAME_FAMILY_CRITERION_KEY = {
    Family.PII: "genone",
    Family.PIII: "p3orth",
    Family.PIV: "p4orth",
    Family.PV: "pv_orbit",
}

_SAME_FAMILY_QUESTION_KEY = {
    Family.PII: "q_ortho2",
    Family.PIII: "q_p3orth_nongen",
    Family.PIV: "q_p4orth_nongen",
    Family.PV: "q_ques5",
    Family.PVI: "q_pvi_orbit",
}


def cross_family_verdict(eq1: EquationId, eq2: EquationId) -> OrthoVerdict:
    """Match a pair of equations against the hypothesis clauses of the proved
    orthogonality statements; fall through to Open when none applies."""
    if eq1.family is eq2.family:
        return _same_family_verdict(eq1, eq2)
    return _distinct_family_verdict(eq1, eq2)


def _same_family_verdict(eq1: EquationId, eq2: EquationId) -> OrthoVerdict:
    family = eq1.family
    verdict = orbit_decide(family, eq1.params, eq2.params)
    if verdict.related is TriBool.YES:
        return OrthoVerdict(
            verdict=Verdict.NONORTHOGONAL,
            citation=cite(_BACKLUND_KEY[family]),
            applicability="parameters related by the family's transformation group",
        )
    if family is Family.PII:
        a, b = eq1.params[0], eq2.params[0]
        algebraic = [not p.has_transcendental for p in (a, b)]
        transcendental = [p.has_transcendental for p in (a, b)]
        if (algebraic[0] and transcendental[1]) or (algebraic[1] and transcendental[0]):
            return OrthoVerdict(
                verdict=Verdict.ORTHOGONAL,
                citation=cite("kernel1"),
                applicability="one parameter algebraic over Q, the other transcendental",
            )
    if verdict.related is TriBool.NO and verdict.hypothesis_status is HypothesisStatus.PROVED:
        return OrthoVerdict(
            verdict=Verdict.ORTHOGONAL,
            citation=verdict.criterion_citation,
            applicability="genericity hypotheses hold and the orbit criterion fails",
        )
    notes = ()
    if verdict.related is TriBool.UNKNOWN:
        notes = ("the orbit criterion is undecided (Unknown congruence on algebraic-irrational atoms)",)
    return OrthoVerdict(
        verdict=Verdict.OPEN,
        citation=None,
        applicability="no proved clause covers this same-family pair",
        question=cite(_SAME_FAMILY_QUESTION_KEY[family]),
        notes=notes,
    )


def _distinct_family_verdict(eq1: EquationId, eq2: EquationId) -> OrthoVerdict:
    pair = {eq1.family, eq2.family}

    def by_family(fam: Family) -> EquationId:
        return eq1 if eq1.family is fam else eq2

    if pair == {Family.PII, Family.PIII}:
        p3 = by_family(Family.PIII)
        p2 = by_family(Family.PII)
        if transcendence_degree(p3.params) == 2:
            alpha = p2.params[0]
            half = decide_coset(alpha, Fraction(1, 2), 1)
            if half is TriBool.YES:
                applicability = (
                    "third-family parameters independent transcendental; the second-family "
                    "parameter is half-integer, so the statement covers the strongly minimal "
                    "part X_II(alpha) \\ R(alpha) (its order-one locus R(alpha) is orthogonal "
                    "by the dimension argument in the proof)"
                )
            elif half is TriBool.UNKNOWN:
                applicability = (
                    "third-family parameters independent transcendental; whether the "
                    "second-family parameter is half-integer is undecided, but both clauses "
                    "of the statement yield orthogonality"
                )
            else:
                applicability = "third-family parameters independent transcendental"
            return OrthoVerdict(
                verdict=Verdict.ORTHOGONAL,
                citation=cite("orthofam3"),
                applicability=applicability,
            )
        return _open_distinct(question_key="q_nongen3orth")

    if pair == {Family.PII, Family.PIV}:
        p2 = by_family(Family.PII)
        p4 = by_family(Family.PIV)
        if p2.params[0].has_transcendental and _is_generic(Family.PIV, p4.params):
            return OrthoVerdict(
                verdict=Verdict.ORTHOGONAL,
                citation=cite("naggy1"),
                applicability="second-family parameter transcendental, fourth-family parameters generic",
            )
        return _open_distinct()

    if pair == {Family.PIII, Family.PV}:
        p3 = by_family(Family.PIII)
        p5 = by_family(Family.PV)
        if transcendence_degree(p3.params) == 2 and _is_generic(Family.PV, p5.params):
            return OrthoVerdict(
                verdict=Verdict.ORTHOGONAL,
                citation=cite("naggy2"),
                applicability="third-family parameters independent transcendental, fifth-family parameters generic",
            )
        return _open_distinct()

    if _is_generic(eq1.family, eq1.params) and _is_generic(eq2.family, eq2.params):
        return OrthoVerdict(
            verdict=Verdict.ORTHOGONAL,
            citation=cite("naggy"),
            applicability="distinct families, both parameter tuples generic",
        )
    return _open_distinct()


def _open_distinct(question_key: str = "q_np2") -> OrthoVerdict:
    return OrthoVerdict(
        verdict=Verdict.OPEN,
        citation=None,
        applicability="no proved clause covers this distinct-family pair",
        question=cite(question_key),
    )
