"""Differential-polynomial engine over Q with parameter symbols.

Expressions are fractions of multivariate polynomials in the time variable
``t``, parameter symbols, and formal jet variables (a state variable together
with its derivatives of each order).  The total-derivative operator D obeys
the Leibniz rule with D(t) = 1, D(parameter) = 0 and D(x^(k)) = x^(k+1) on
free jets.  Reduction rewrites derivatives modulo a triangular set of ODE
relations.  Equality of fractions is decided by cross-multiplication, so no
multivariate gcd machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

Rational = Fraction | int

_PLAIN = -1  # derivative order used for non-jet symbols (t, parameters)


@dataclass(frozen=True)
class Var:
    """Ring variable: a plain symbol (order -1) or a jet variable x^(k)."""

    name: str
    order: int = _PLAIN

    def sort_key(self) -> tuple[str, int]:
        return (self.name, self.order)

    @property
    def is_jet(self) -> bool:
        return self.order >= 0

    def __str__(self) -> str:
        if not self.is_jet:
            return self.name
        if self.order <= 3:
            return self.name + "'" * self.order
        return f"{self.name}^({self.order})"


def sym(name: str) -> Var:
    """A plain (non-differential) symbol; D(sym) = 0 except D(t) = 1."""
    return Var(name, _PLAIN)


def jet(name: str, order: int = 0) -> Var:
    if order < 0:
        raise ValueError("jet order must be nonnegative")
    return Var(name, order)


T_VAR = sym("t")


class Poly:
    """Multivariate polynomial: dense exponent tuples over a sorted variable
    tuple, mapped to nonzero rational coefficients."""

    __slots__ = ("vars", "terms")

    vars: tuple[Var, ...]
    terms: dict[tuple[int, ...], Fraction]

    def __init__(self, vars: Sequence[Var], terms: Mapping[tuple[int, ...], Rational]):
        # Canonicalize: drop zero coefficients, prune unused variables,
        # keep the variable tuple sorted.
        vars = tuple(vars)
        clean = {exps: Fraction(c) for exps, c in terms.items() if c != 0}
        used = [i for i in range(len(vars)) if any(e[i] for e in clean)]
        if len(used) != len(vars):
            vars = tuple(vars[i] for i in used)
            clean = {tuple(e[i] for i in used): c for e, c in clean.items()}
        if vars and list(vars) != sorted(vars, key=Var.sort_key):
            order = sorted(range(len(vars)), key=lambda i: vars[i].sort_key())
            vars = tuple(vars[i] for i in order)
            clean = {tuple(e[i] for i in order): c for e, c in clean.items()}
        self.vars = vars
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(value: Rational) -> "Poly":
        value = Fraction(value)
        return Poly((), {(): value} if value else {})

    @staticmethod
    def var(v: Var) -> "Poly":
        return Poly((v,), {(1,): Fraction(1)})

    # -- basic queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self.terms.get((), Fraction(0))

    def degree_in(self, v: Var) -> int:
        if v not in self.vars:
            return 0
        i = self.vars.index(v)
        return max((e[i] for e in self.terms), default=0)

    def variables(self) -> tuple[Var, ...]:
        return self.vars

    # -- alignment -----------------------------------------------------------

    def _aligned(self, target: tuple[Var, ...]) -> dict[tuple[int, ...], Fraction]:
        if target == self.vars:
            return dict(self.terms)
        pos = {v: i for i, v in enumerate(target)}
        idx = [pos[v] for v in self.vars]
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            key = [0] * len(target)
            for i, e in zip(idx, exps):
                key[i] = e
            out[tuple(key)] = c
        return out

    @staticmethod
    def _merge_vars(a: "Poly", b: "Poly") -> tuple[Var, ...]:
        return tuple(sorted(set(a.vars) | set(b.vars), key=Var.sort_key))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        vars = Poly._merge_vars(self, other)
        terms = self._aligned(vars)
        for exps, c in other._aligned(vars).items():
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return Poly(vars, terms)

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly.const(0)
        vars = Poly._merge_vars(self, other)
        a = self._aligned(vars)
        b = other._aligned(vars)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return Poly(vars, terms)

    def scale(self, q: Rational) -> "Poly":
        q = Fraction(q)
        return Poly(self.vars, {e: c * q for e, c in self.terms.items()})

    def power(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    # -- calculus ----------------------------------------------------------------

    def _var_derivative(self, v: Var) -> "Poly | None":
        if v.is_jet:
            return Poly.var(Var(v.name, v.order + 1))
        if v == T_VAR:
            return Poly.const(1)
        return None  # parameter: derivative 0

    def total_derivative(self) -> "Poly":
        out = Poly.const(0)
        for exps, c in self.terms.items():
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                dv = self._var_derivative(self.vars[i])
                if dv is None:
                    continue
                rest = list(exps)
                rest[i] = e - 1
                mono = Poly(self.vars, {tuple(rest): c * e})
                out = out + mono * dv
        return out

    # -- substitution and evaluation ------------------------------------------------

    def substitute(self, mapping: Mapping[Var, "DiffExpr"]) -> "DiffExpr":
        relevant = {v: ex for v, ex in mapping.items() if v in self.vars}
        if not relevant:
            return DiffExpr(self, Poly.const(1))
        out = DiffExpr.const(0)
        for exps, c in self.terms.items():
            term = DiffExpr.const(c)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                v = self.vars[i]
                base = relevant.get(v)
                factor = base.power(e) if base is not None else DiffExpr(Poly((v,), {(e,): Fraction(1)}), Poly.const(1))
                term = term * factor
            out = out + term
        return out

    def evaluate(self, point: Mapping[Var, Rational]) -> Fraction:
        total = Fraction(0)
        for exps, c in self.terms.items():
            value = Fraction(c)
            for i, e in enumerate(exps):
                if e:
                    value *= Fraction(point[self.vars[i]]) ** e
            total += value
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        chunks = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            factors = [
                (str(self.vars[i]) if e == 1 else f"{self.vars[i]}^{e}")
                for i, e in enumerate(exps)
                if e
            ]
            if not factors:
                chunks.append(str(c))
            elif c == 1:
                chunks.append("*".join(factors))
            elif c == -1:
                chunks.append("-" + "*".join(factors))
            else:
                chunks.append(str(c) + "*" + "*".join(factors))
        out = chunks[0]
        for ch in chunks[1:]:
            out += " - " + ch[1:] if ch.startswith("-") else " + " + ch
        return out

    __repr__ = __str__


class DiffExpr:
    """Fraction of two polynomials; denominator never identically zero."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        den = Poly.const(1) if den is None else den
        if den.is_zero:
            raise ZeroDivisionError("denominator is identically zero")
        if den.is_constant:
            c = den.constant_value()
            if c != 1:
                num = num.scale(Fraction(1) / c)
                den = Poly.const(1)
        self.num = num
        self.den = den

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def const(value: Rational) -> "DiffExpr":
        return DiffExpr(Poly.const(value))

    @staticmethod
    def var(v: Var) -> "DiffExpr":
        return DiffExpr(Poly.var(v))

    @staticmethod
    def t() -> "DiffExpr":
        return DiffExpr.var(T_VAR)

    # -- coercion ----------------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "DiffExpr":
        if isinstance(x, DiffExpr):
            return x
        if isinstance(x, (int, Fraction)):
            return DiffExpr.const(x)
        if isinstance(x, Var):
            return DiffExpr.var(x)
        raise TypeError(f"cannot coerce {x!r} to DiffExpr")

    # -- arithmetic -----------------------------------------------------------------

    def __add__(self, other):
        other = DiffExpr._coerce(other)
        return DiffExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return DiffExpr(-self.num, self.den)

    def __sub__(self, other):
        return self + (-DiffExpr._coerce(other))

    def __rsub__(self, other):
        return (-self) + DiffExpr._coerce(other)

    def __mul__(self, other):
        other = DiffExpr._coerce(other)
        return DiffExpr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = DiffExpr._coerce(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero expression")
        return DiffExpr(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return DiffExpr._coerce(other) / self

    def power(self, k: int) -> "DiffExpr":
        if k < 0:
            return DiffExpr.const(1) / self.power(-k)
        return DiffExpr(self.num.power(k), self.den.power(k))

    # -- queries -----------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def equals(self, other) -> bool:
        """Exact equality by cross-multiplication."""
        other = DiffExpr._coerce(other)
        return (self.num * other.den - other.num * self.den).is_zero

    def variables(self) -> tuple[Var, ...]:
        return tuple(sorted(set(self.num.vars) | set(self.den.vars), key=Var.sort_key))

    def constant_value(self) -> Fraction:
        if not (self.num.is_constant and self.den.is_constant):
            raise ValueError("expression is not constant")
        return self.num.constant_value() / self.den.constant_value()

    # -- calculus -------------------------------------------------------------------------

    def total_derivative(self) -> "DiffExpr":
        dn = self.num.total_derivative()
        dd = self.den.total_derivative()
        if dd.is_zero:
            return DiffExpr(dn, self.den)
        return DiffExpr(dn * self.den - self.num * dd, self.den * self.den)

    def substitute(self, mapping: Mapping[Var, "DiffExpr"]) -> "DiffExpr":
        num = self.num.substitute(mapping)
        den = self.den.substitute(mapping)
        if den.num.is_zero:
            raise ZeroDivisionError("denominator vanished identically after substitution")
        return DiffExpr(num.num * den.den, num.den * den.num)

    def evaluate(self, point: Mapping[Var, Rational]) -> Fraction:
        den = self.den.evaluate(point)
        if den == 0:
            raise ZeroDivisionError("denominator vanished at the evaluation point")
        return self.num.evaluate(point) / den

    def __eq__(self, other):
        if isinstance(other, (DiffExpr, int, Fraction)):
            return self.equals(other)
        return NotImplemented

    def __hash__(self):
        raise TypeError("DiffExpr is unhashable (equality is by cross-multiplication)")

    def __str__(self) -> str:
        if self.den.is_constant and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def total_derivative(e: DiffExpr) -> DiffExpr:
    """Formal derivative per the operator rules; no relation substitution."""
    return DiffExpr._coerce(e).total_derivative()


class RelationSet:
    """Triangular substitution rules x^(k) -> expression, derived from an ODE.

    Rules for higher derivatives are obtained by prolongation (differentiate
    the previous rule, then reduce it) on demand and cached.  Each cached
    rule is in normal form: it mentions no derivative that itself has a rule.
    """

    def __init__(self, rules: Mapping[Var, DiffExpr]):
        for v in rules:
            if not v.is_jet or v.order < 1:
                raise ValueError("relation rules must rewrite derivatives of order >= 1")
        self._base = dict(rules)
        self._min_order = {}
        for v in rules:
            cur = self._min_order.get(v.name)
            self._min_order[v.name] = v.order if cur is None else min(cur, v.order)
        self._normal: dict[Var, DiffExpr] = {}

    def base_rules(self) -> dict[Var, DiffExpr]:
        return dict(self._base)

    def has_rule(self, v: Var) -> bool:
        if not v.is_jet:
            return False
        m = self._min_order.get(v.name)
        return m is not None and v.order >= m

    def normal_rule(self, v: Var) -> DiffExpr:
        if v in self._normal:
            return self._normal[v]
        if v in self._base:
            out = reduce(self._base[v], self)
        else:
            if not self.has_rule(v):
                raise KeyError(f"no rule for {v}")
            lower = self.normal_rule(Var(v.name, v.order - 1))
            out = reduce(lower.total_derivative(), self)
        self._normal[v] = out
        return out


def relations_for_system(state_vars: Sequence[str], order: int, rhs: Sequence[DiffExpr]) -> RelationSet:
    """Build the rewrite rules for a first-order system (order 1, one rule per
    state variable) or a scalar equation of higher order (single rule)."""
    if order == 1:
        if len(state_vars) != len(rhs):
            raise ValueError("one right-hand side per state variable expected")
        return RelationSet({jet(name, 1): expr for name, expr in zip(state_vars, rhs)})
    if len(state_vars) != 1 or len(rhs) != 1:
        raise ValueError("scalar equations carry a single state variable")
    return RelationSet({jet(state_vars[0], order): rhs[0]})


def reduce(e: DiffExpr, rels: RelationSet) -> DiffExpr:
    """Fixpoint of substitution: the result contains no derivative that has a
    rule (explicit or obtained by prolongation)."""
    e = DiffExpr._coerce(e)
    while True:
        pending = [v for v in e.variables() if rels.has_rule(v)]
        if not pending:
            return e
        e = e.substitute({v: rels.normal_rule(v) for v in pending})


# -- verifications driven by the cataloged systems -----------------------------


RICCATI_SIGN_NOTE = (
    "Sign convention: the source text attributes the order-one locus"
    " y' = y^2 + t/2 to the fiber at alpha = -1/2, while symbolic prolongation"
    " matches y' = +(y^2 + t/2) to alpha = +1/2 and y' = -(y^2 + t/2) to"
    " alpha = -1/2.  The computed matching is reported; the attribution in"
    " the text is quoted, not resolved."
)


def riccati_sign_note() -> str:
    return RICCATI_SIGN_NOTE


def verify_riccati(sign: int) -> Fraction:
    """Reduce y'' - 2y^3 - ty modulo y' = sign*(y^2 + t/2) and return the
    unique constant alpha for which the full residual vanishes identically.
    """
    from . import catalog

    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    rels = RelationSet(catalog.riccati_rules(sign))
    y = DiffExpr.var(jet("y", 0))
    target = DiffExpr.var(jet("y", 2)) - 2 * y.power(3) - DiffExpr.t() * y
    residual = reduce(target, rels)
    return residual.constant_value()


@dataclass(frozen=True)
class ChangeOfVariablesReport:
    identity_q: bool
    identity_p: bool
    residual_q: str
    residual_p: str
    excluded_loci: tuple[str, ...]
    notes: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return self.identity_q and self.identity_p


def pv_change_of_variables_exprs() -> tuple[DiffExpr, DiffExpr]:
    """The substitution q = Q/(Q-1), p = -(Q-1)^2 P + (v3-v1)(Q-1)."""
    Q = DiffExpr.var(jet("Q", 0))
    P = DiffExpr.var(jet("P", 0))
    v1 = DiffExpr.var(sym("v1"))
    v3 = DiffExpr.var(sym("v3"))
    one = DiffExpr.const(1)
    q_expr = Q / (Q - one)
    p_expr = -(Q - one).power(2) * P + (v3 - v1) * (Q - one)
    return q_expr, p_expr


def _pv_residuals() -> tuple[DiffExpr, DiffExpr]:
    from . import catalog

    qp = catalog.ode_system(catalog.Family.PV, form="system")
    QP = catalog.ode_system(catalog.Family.PV, form="QP")
    rels = QP.relations()
    q_expr, p_expr = pv_change_of_variables_exprs()
    state_map = {jet("q", 0): q_expr, jet("p", 0): p_expr}
    t = DiffExpr.t()
    residuals = []
    for target_expr, rhs in zip((q_expr, p_expr), qp.rhs):
        lhs = reduce(t * target_expr.total_derivative(), rels)
        rhs_sub = t * rhs.substitute(state_map)
        residuals.append(lhs - rhs_sub)
    return residuals[0], residuals[1]


def verify_pv_change_of_variables() -> ChangeOfVariablesReport:
    """Check symbolically that the chart substitution carries the (Q, P)
    system onto the displayed (q, p) system, on the hyperplane sum(v) = 0.

    Both residuals are cross-multiplied to polynomial form; the zero test
    substitutes v4 = -(v1 + v2 + v3), since the parameter space is that
    hyperplane.  The loci t = 0 and Q = 1 are excluded (cleared denominators).
    """
    res_q, res_p = _pv_residuals()
    v_syms = [sym(f"v{i}") for i in range(1, 4)]
    v4_sub = {sym("v4"): -(DiffExpr.var(v_syms[0]) + DiffExpr.var(v_syms[1]) + DiffExpr.var(v_syms[2]))}
    on_plane = [r.substitute(v4_sub) for r in (res_q, res_p)]
    return ChangeOfVariablesReport(
        identity_q=on_plane[0].is_zero,
        identity_p=on_plane[1].is_zero,
        residual_q=str(res_q.num),
        residual_p=str(res_p.num),
        excluded_loci=("t = 0", "Q = 1"),
        notes=(
            "zero test performed on the hyperplane v1 + v2 + v3 + v4 = 0"
            " (v4 eliminated); the residuals are nonzero off that hyperplane",
        ),
    )


def pv_random_point_check(points: int = 25, seed: int = 0) -> tuple[int, bool]:
    """Secondary oracle for the chart change: evaluate both residuals at
    random rational points on the parameter hyperplane (redrawing any point
    on an excluded locus).  Returns (points evaluated, all residuals zero)."""
    import random

    rng = random.Random(seed)
    res_q, res_p = _pv_residuals()

    def rand_frac() -> Fraction:
        return Fraction(rng.randint(-12, 12), rng.randint(1, 5))

    checked = 0
    all_zero = True
    while checked < points:
        v = [rand_frac() for _ in range(3)]
        point = {
            T_VAR: rand_frac(),
            jet("Q", 0): rand_frac(),
            jet("P", 0): rand_frac(),
            sym("v1"): v[0],
            sym("v2"): v[1],
            sym("v3"): v[2],
            sym("v4"): -(v[0] + v[1] + v[2]),
        }
        try:
            values = (res_q.evaluate(point), res_p.evaluate(point))
        except ZeroDivisionError:
            continue
        checked += 1
        if any(x != 0 for x in values):
            all_zero = False
    return checked, all_zero


def verify_group_relation(family, word: Sequence[str], expected) -> bool:
    """Exact equality between the composed generator word and an affine map."""
    from . import weyl

    return weyl.word_map(family, tuple(word)) == expected
