"""Static definitions of the six Painlevé families.

Parameter spaces with their exact linear constraints, the displayed ODE
systems as differential-polynomial right-hand sides, the order-one Riccati
locus of the second family, and the 24-vector root system driving the
sixth-family strata.  Everything here is immutable data, constructed once.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .diffpoly import DiffExpr, RelationSet, Var, jet, relations_for_system, sym
from .exactnum import ParamValue, Rational


class Family(Enum):
    PI = "I"
    PII = "II"
    PIII = "III"
    PIV = "IV"
    PV = "V"
    PVI = "VI"

    @staticmethod
    def from_name(name: str) -> "Family":
        name = name.strip().upper()
        for fam in Family:
            if name in (fam.value, fam.name, f"P{fam.value}"):
                return fam
        raise UnknownFamilyError(f"unknown family {name!r}; expected one of I, II, III, IV, V, VI")


class UnknownFamilyError(ValueError):
    pass


class UnsupportedFamilyError(ValueError):
    """Raised for operations the sixth family does not support (it is
    classification-only: no explicit equation is cataloged for it)."""


class InvalidEquationError(ValueError):
    pass


_ARITY = {
    Family.PI: 0,
    Family.PII: 1,
    Family.PIII: 2,
    Family.PIV: 3,
    Family.PV: 4,
    Family.PVI: 4,
}

_SUM_ZERO = {Family.PIV, Family.PV}

# Dimension of the parameter space (arity minus one for the sum-zero families);
# a parameter tuple is generic when its transcendence degree reaches this.
_DIMENSION = {
    Family.PI: 0,
    Family.PII: 1,
    Family.PIII: 2,
    Family.PIV: 2,
    Family.PV: 3,
    Family.PVI: 4,
}


@dataclass(frozen=True)
class FamilySpace:
    family: Family
    arity: int
    sum_zero: bool
    dimension: int
    description: str


def family_space(family: Family) -> FamilySpace:
    constraint = "sum of parameters must be exactly zero" if family in _SUM_ZERO else "no linear constraint"
    return FamilySpace(
        family=family,
        arity=_ARITY[family],
        sum_zero=family in _SUM_ZERO,
        dimension=_DIMENSION[family],
        description=f"{_ARITY[family]} parameter(s); {constraint}",
    )


def _as_param(x) -> ParamValue:
    if isinstance(x, ParamValue):
        return x
    if isinstance(x, (int, Fraction)):
        return ParamValue(x)
    raise InvalidEquationError(f"parameter {x!r} is not an exact value")


@dataclass(frozen=True)
class EquationId:
    """A family tag plus a parameter vector valid for that family."""

    family: Family
    params: tuple[ParamValue, ...]

    def __init__(self, family: Family, params: Sequence[ParamValue | Rational] = ()):
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", tuple(_as_param(p) for p in params))
        space = family_space(family)
        if len(self.params) != space.arity:
            raise InvalidEquationError(
                f"family {family.value} takes {space.arity} parameter(s), got {len(self.params)}"
            )
        if space.sum_zero:
            total = ParamValue(0)
            for p in self.params:
                total = total + p
            if total != ParamValue(0):
                raise InvalidEquationError(
                    f"family {family.value} parameters must sum to zero exactly (got {total})"
                )

    def __str__(self) -> str:
        inner = ", ".join(str(p) for p in self.params)
        return f"P{self.family.value}({inner})"


@dataclass(frozen=True)
class RootSystem:
    """The 24 integer vectors with exactly two nonzero entries, each ±1."""

    roots: tuple[tuple[int, int, int, int], ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, vec) -> bool:
        return tuple(vec) in self.roots


def _build_roots() -> tuple[tuple[int, int, int, int], ...]:
    out = []
    for i in range(4):
        for j in range(i + 1, 4):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0, 0, 0, 0]
                    v[i], v[j] = si, sj
                    out.append(tuple(v))
    return tuple(sorted(out))


_ROOTS = RootSystem(_build_roots())


def root_system() -> RootSystem:
    return _ROOTS


def inner_product(values: Sequence[ParamValue | Rational], root: Sequence[Rational]) -> ParamValue:
    """Componentwise inner product sum(v_i * a_i) over exact values."""
    total = ParamValue(0)
    for v, a in zip(values, root, strict=True):
        total = total + _as_param(v) * Fraction(a)
    return total


# -- ODE systems ----------------------------------------------------------------

_T = DiffExpr.t()


def _state(name: str) -> DiffExpr:
    return DiffExpr.var(jet(name, 0))


def _param(name: str) -> DiffExpr:
    return DiffExpr.var(sym(name))


@dataclass(frozen=True, eq=False)
class OdeSystem:
    """Exact symbolic right-hand sides for one chart of a family.

    ``order == 1`` systems store one rhs per state variable (x' = rhs);
    ``order == 2`` scalars store the single rhs for the top derivative.
    """

    family: Family
    form: str                      # "scalar", "system", or "QP"
    state_vars: tuple[str, ...]
    order: int
    rhs: tuple[DiffExpr, ...]
    param_names: tuple[str, ...]
    singular_t: tuple[Fraction, ...] = ()
    notes: tuple[str, ...] = ()

    def relations(self) -> RelationSet:
        return relations_for_system(self.state_vars, self.order, self.rhs)

    def residual_exprs(self) -> tuple[DiffExpr, ...]:
        """Left side minus right side, one expression per equation."""
        if self.order == 1:
            return tuple(
                DiffExpr.var(jet(name, 1)) - expr for name, expr in zip(self.state_vars, self.rhs)
            )
        return (DiffExpr.var(jet(self.state_vars[0], self.order)) - self.rhs[0],)


PIV_SCALAR_NOTE = (
    "The displayed scalar fourth-family equation contains the term 4tq^2;"
    " q is read as a typo for y and the implemented form uses 4ty^2"
    " (dimensionally consistent with the standard fourth-family equation)."
    " The reading is surfaced here rather than silently fixed."
)

PI_FORM_NOTE = (
    "literature-standard form, included so the family enumeration is total;"
    " it is not among the verified source displays"
)


def _build_pi() -> OdeSystem:
    y = _state("y")
    return OdeSystem(
        family=Family.PI,
        form="scalar",
        state_vars=("y",),
        order=2,
        rhs=(6 * y.power(2) + _T,),
        param_names=(),
        notes=(PI_FORM_NOTE,),
    )


def _build_pii() -> OdeSystem:
    y = _state("y")
    alpha = _param("alpha")
    return OdeSystem(
        family=Family.PII,
        form="scalar",
        state_vars=("y",),
        order=2,
        rhs=(2 * y.power(3) + _T * y + alpha,),
        param_names=("alpha",),
    )


def _build_piii() -> OdeSystem:
    q, p = _state("q"), _state("p")
    v1, v2 = _param("v1"), _param("v2")
    rhs_q = (2 * q.power(2) * p - q.power(2) - v1 * q + _T) / _T
    rhs_p = (-2 * q * p.power(2) + 2 * q * p - v1 * p + Fraction(1, 2) * (v1 + v2)) / _T
    return OdeSystem(
        family=Family.PIII,
        form="system",
        state_vars=("q", "p"),
        order=1,
        rhs=(rhs_q, rhs_p),
        param_names=("v1", "v2"),
        singular_t=(Fraction(0),),
    )


def _build_piv_system() -> OdeSystem:
    q, p = _state("q"), _state("p")
    v1, v2, v3 = _param("v1"), _param("v2"), _param("v3")
    rhs_q = 2 * p * q - q.power(2) - 2 * _T * q + 2 * (v1 - v2)
    rhs_p = 2 * p * q - p.power(2) + 2 * _T * p + 2 * (v1 - v3)
    return OdeSystem(
        family=Family.PIV,
        form="system",
        state_vars=("q", "p"),
        order=1,
        rhs=(rhs_q, rhs_p),
        param_names=("v1", "v2", "v3"),
    )


def _build_piv_scalar() -> OdeSystem:
    y = _state("y")
    y1 = DiffExpr.var(jet("y", 1))
    alpha, beta = _param("alpha"), _param("beta")
    rhs = (
        y1.power(2) / (2 * y)
        + Fraction(3, 2) * y.power(3)
        + 4 * _T * y.power(2)
        + 2 * (_T.power(2) - alpha) * y
        + beta / y
    )
    return OdeSystem(
        family=Family.PIV,
        form="scalar",
        state_vars=("y",),
        order=2,
        rhs=(rhs,),
        param_names=("alpha", "beta"),
        notes=(PIV_SCALAR_NOTE,),
    )


def _build_pv_qp() -> OdeSystem:
    q, p = _state("q"), _state("p")
    v1, v2, v3, v4 = (_param(f"v{i}") for i in range(1, 5))
    c = v1 - v2 - v3 + v4
    rhs_q = (
        2 * q.power(2) * p - 2 * q * p + _T * q.power(2) - _T * q + c * q + v2 - v1
    ) / _T
    rhs_p = (
        -2 * q * p.power(2) + p.power(2) - 2 * _T * p * q + _T * p - c * p + (v3 - v1) * _T
    ) / _T
    return OdeSystem(
        family=Family.PV,
        form="system",
        state_vars=("q", "p"),
        order=1,
        rhs=(rhs_q, rhs_p),
        param_names=("v1", "v2", "v3", "v4"),
        singular_t=(Fraction(0),),
    )


def _build_pv_QP() -> OdeSystem:
    Q, P = _state("Q"), _state("P")
    v1, v2, v3, v4 = (_param(f"v{i}") for i in range(1, 5))
    one = DiffExpr.const(1)
    rhs_Q = (
        2 * Q * (Q - one).power(2) * P
        + (3 * v1 + v2) * Q.power(2)
        - (_T + 4 * v1) * Q
        + v1
        - v2
    ) / _T
    rhs_P = (
        (-3 * Q.power(2) + 4 * Q - one) * P.power(2)
        - 2 * (3 * v1 + v2) * Q * P
        + (_T + 4 * v1) * P
        - (v3 - v1) * (v4 - v1)
    ) / _T
    return OdeSystem(
        family=Family.PV,
        form="QP",
        state_vars=("Q", "P"),
        order=1,
        rhs=(rhs_Q, rhs_P),
        param_names=("v1", "v2", "v3", "v4"),
        singular_t=(Fraction(0),),
    )


_SYSTEMS: dict[tuple[Family, str], OdeSystem] = {}


def _register(system: OdeSystem) -> None:
    _SYSTEMS[(system.family, system.form)] = system


for _builder in (_build_pi, _build_pii, _build_piii, _build_piv_system, _build_piv_scalar, _build_pv_qp, _build_pv_QP):
    _register(_builder())


_DEFAULT_FORM = {
    Family.PI: "scalar",
    Family.PII: "scalar",
    Family.PIII: "system",
    Family.PIV: "system",
    Family.PV: "system",
}


def ode_system(family: Family, form: str | None = None) -> OdeSystem:
    """The exact symbolic system for a family.

    ``form`` selects a chart where more than one is cataloged: the fourth
    family has "system" (default) and "scalar"; the fifth has "system"
    (the (q, p) chart, default) and "QP".  The sixth family is rejected:
    it is classification-only here.
    """
    if family is Family.PVI:
        raise UnsupportedFamilyError("no explicit equation is cataloged for the sixth family")
    form = form or _DEFAULT_FORM[family]
    try:
        return _SYSTEMS[(family, form)]
    except KeyError:
        valid = sorted(f for fam, f in _SYSTEMS if fam is family)
        raise UnsupportedFamilyError(
            f"family {family.value} has no {form!r} form (available: {valid})"
        ) from None


def pii_residual() -> DiffExpr:
    """The scalar second-order residual y'' - 2y^3 - t*y - alpha."""
    return ode_system(Family.PII).residual_exprs()[0]


def riccati_relation(sign: int) -> DiffExpr:
    """The order-one relation y' - sign*(y^2 + t/2) inside the second family."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    y = _state("y")
    return DiffExpr.var(jet("y", 1)) - sign * (y.power(2) + Fraction(1, 2) * _T)


def riccati_rules(sign: int) -> dict[Var, DiffExpr]:
    """Rewrite rule y' -> sign*(y^2 + t/2) as a relation-set seed."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    y = _state("y")
    return {jet("y", 1): sign * (y.power(2) + Fraction(1, 2) * _T)}


def piv_scalar_params(v1: ParamValue | Rational, v2: ParamValue | Rational, v3: ParamValue | Rational) -> tuple[ParamValue, ParamValue]:
    """Parameter match between the fourth-family system chart and the scalar
    equation: alpha = 3*v3 + 1, beta = -2*(v2 - v1)^2.

    Only defined when v2 - v1 is an exact rational (squares leave the
    Q-affine universe otherwise)."""
    v1, v2, v3 = _as_param(v1), _as_param(v2), _as_param(v3)
    alpha = v3 * 3 + 1
    diff = v2 - v1
    if not diff.is_rational:
        raise InvalidEquationError(
            "beta = -2*(v2 - v1)^2 requires v2 - v1 to be rational in the exact universe"
        )
    beta = ParamValue(-2 * diff.const * diff.const)
    return alpha, beta
