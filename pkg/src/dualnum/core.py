"""Second-order dual numbers for forward-mode automatic differentiation.

A :class:`Dual3` carries a value together with its first and second
derivative with respect to a single scalar seed.  Seeding ``x`` as
``variable(x) == {x, 1, 0}`` and pushing it through any chain of the
arithmetic operators and elemental functions below yields the exact
derivatives of the chain (up to round-off), with none of the truncation
or cancellation error of finite differences.

The components are derivative-valued: ``f2`` stores ``f''`` itself, not
the Taylor coefficient ``f''/2``.  :class:`TaylorJet` provides the
coefficient-valued convention at arbitrary order for cross-checking and
experimentation; the solver modules operate on :class:`Dual3` only.

The whole chain rule lives in :func:`compose`:

    compose({f, f', f''} at g0, {g0, g1, g2}) = {f, f'*g1, f''*g1**2 + f'*g2}

Every elemental lift and every dualized algorithm funnels through it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .errors import DomainError, ValidationError

Number = Union[int, float]

_MAX_INT_EXPONENT = 10 ** 6


def _as_dual(value) -> "Dual3":
    if isinstance(value, Dual3):
        return value
    if isinstance(value, (int, float)):
        return Dual3(float(value))
    raise TypeError(f"cannot interpret {type(value).__name__} as Dual3")


def _reject_nan(*operands: "Dual3") -> None:
    # NaN is trapped at the first operation that sees it so solver
    # divergence is reported at its source, not somewhere downstream.
    for d in operands:
        if math.isnan(d.f0) or math.isnan(d.f1) or math.isnan(d.f2):
            raise DomainError(f"NaN component in dual operand {d!r}")


@dataclass(frozen=True, slots=True)
class Dual3:
    """A value with its first and second derivative: ``{f, f', f''}``.

    Instances are immutable and all operations are pure, so values may be
    shared and used from any number of threads.
    """

    f0: float
    f1: float = 0.0
    f2: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "f0", float(self.f0))
        object.__setattr__(self, "f1", float(self.f1))
        object.__setattr__(self, "f2", float(self.f2))

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other) -> "Dual3":
        o = _as_dual(other)
        _reject_nan(self, o)
        return Dual3(self.f0 + o.f0, self.f1 + o.f1, self.f2 + o.f2)

    __radd__ = __add__

    def __sub__(self, other) -> "Dual3":
        o = _as_dual(other)
        _reject_nan(self, o)
        return Dual3(self.f0 - o.f0, self.f1 - o.f1, self.f2 - o.f2)

    def __rsub__(self, other) -> "Dual3":
        return _as_dual(other).__sub__(self)

    def __mul__(self, other) -> "Dual3":
        o = _as_dual(other)
        _reject_nan(self, o)
        return Dual3(
            self.f0 * o.f0,
            self.f1 * o.f0 + self.f0 * o.f1,
            self.f2 * o.f0 + 2.0 * self.f1 * o.f1 + self.f0 * o.f2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Dual3":
        o = _as_dual(other)
        _reject_nan(self, o)
        if o.f0 == 0.0:
            raise ZeroDivisionError(
                "dual division by zero: denominator real part is 0.0"
            )
        q0 = self.f0 / o.f0
        q1 = (self.f1 - q0 * o.f1) / o.f0
        q2 = (self.f2 - 2.0 * q1 * o.f1 - q0 * o.f2) / o.f0
        return Dual3(q0, q1, q2)

    def __rtruediv__(self, other) -> "Dual3":
        return _as_dual(other).__truediv__(self)

    def __neg__(self) -> "Dual3":
        return lift_elemental("neg", self)

    def __abs__(self) -> "Dual3":
        return lift_elemental("abs", self)

    def __pow__(self, exponent) -> "Dual3":
        p = _as_dual(exponent)
        _reject_nan(self, p)
        if p.f1 == 0.0 and p.f2 == 0.0 and p.f0.is_integer():
            if abs(p.f0) <= _MAX_INT_EXPONENT:
                return self._int_power(int(p.f0))
        if self.f0 <= 0.0:
            raise DomainError(
                "pow needs base real part > 0 unless the exponent is a "
                f"constant integer; got base real part {self.f0}"
            )
        return exp(p * log(self))

    def __rpow__(self, base) -> "Dual3":
        return _as_dual(base).__pow__(self)

    def _int_power(self, k: int) -> "Dual3":
        if k == 0:
            if self.f0 == 0.0:
                raise DomainError("0**0 is undefined")
            return Dual3(1.0)
        if k < 0:
            return Dual3(1.0) / self._int_power(-k)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"Dual3({self.f0!r}, {self.f1!r}, {self.f2!r})"


def variable(x: Number) -> Dual3:
    """Seed ``x`` as the differentiation variable: ``{x, 1, 0}``."""
    if not math.isfinite(x):
        raise ValidationError(f"variable seed must be finite, got {x}")
    return Dual3(float(x), 1.0, 0.0)


def constant(c: Number) -> Dual3:
    """Embed a constant: ``{c, 0, 0}``.  Derivatives stay zero forever."""
    if not math.isfinite(c):
        raise ValidationError(f"constant must be finite, got {c}")
    return Dual3(float(c))


def compose(f_jet_at_g0: Dual3, g: Dual3) -> Dual3:
    """Chain rule for second-order jets.

    ``f_jet_at_g0`` must hold ``{f(g0), f'(g0), f''(g0)}`` with
    ``g0 == g.f0`` (the caller guarantees the evaluation point).  Returns
    the jet of ``f(g(.))`` with respect to the seed carried by ``g``.
    """
    _reject_nan(f_jet_at_g0, g)
    return Dual3(
        f_jet_at_g0.f0,
        f_jet_at_g0.f1 * g.f1,
        f_jet_at_g0.f2 * g.f1 * g.f1 + f_jet_at_g0.f1 * g.f2,
    )


# -- elemental functions ----------------------------------------------

def _require_positive(name: str) -> Callable[[float], None]:
    def check(x: float) -> None:
        if x <= 0.0:
            raise DomainError(
                f"{name} requires argument real part > 0, got {x}"
            )

    return check


def _abs_check(x: float) -> None:
    if x == 0.0:
        raise DomainError("abs is not differentiable at 0")


def _sign(x: float) -> float:
    return 1.0 if x > 0.0 else -1.0


def _sec2(x: float) -> float:
    c = math.cos(x)
    return 1.0 / (c * c)


# name -> (value, first derivative, second derivative, domain check)
ELEMENTALS: dict = {
    "sin": (math.sin, math.cos, lambda x: -math.sin(x), None),
    "cos": (math.cos, lambda x: -math.sin(x), lambda x: -math.cos(x), None),
    "tan": (math.tan, _sec2, lambda x: 2.0 * math.tan(x) * _sec2(x), None),
    "exp": (math.exp, math.exp, math.exp, None),
    "log": (math.log, lambda x: 1.0 / x, lambda x: -1.0 / (x * x),
            _require_positive("log")),
    "sqrt": (math.sqrt,
             lambda x: 0.5 / math.sqrt(x),
             lambda x: -0.25 / (x * math.sqrt(x)),
             _require_positive("sqrt")),
    "abs": (abs, _sign, lambda x: 0.0, _abs_check),
    "neg": (lambda x: -x, lambda x: -1.0, lambda x: 0.0, None),
}


def lift_elemental(name: str, g: Dual3) -> Dual3:
    """Apply the named elemental to a dual argument via :func:`compose`."""
    try:
        value, first, second, check = ELEMENTALS[name]
    except KeyError:
        raise ValidationError(f"unknown elemental {name!r}") from None
    _reject_nan(g)
    if check is not None:
        check(g.f0)
    try:
        jet = Dual3(value(g.f0), first(g.f0), second(g.f0))
    except (OverflowError, ValueError) as exc:
        raise DomainError(f"{name} failed at real part {g.f0}: {exc}") from None
    return compose(jet, g)


def sin(g: Dual3) -> Dual3:
    return lift_elemental("sin", g)


def cos(g: Dual3) -> Dual3:
    return lift_elemental("cos", g)


def tan(g: Dual3) -> Dual3:
    return lift_elemental("tan", g)


def exp(g: Dual3) -> Dual3:
    return lift_elemental("exp", g)


def log(g: Dual3) -> Dual3:
    return lift_elemental("log", g)


def sqrt(g: Dual3) -> Dual3:
    return lift_elemental("sqrt", g)


# -- truncated Taylor jets ---------------------------------------------

@dataclass(frozen=True)
class TaylorJet:
    """Taylor coefficients ``c_k = f^(k)(x)/k!`` truncated at a fixed order.

    The coefficient basis multiplies by truncated Cauchy convolution:
    cross terms beyond the order are dropped exactly.  Order 2 converts
    losslessly to and from :class:`Dual3` (``c2`` is ``f''/2``; the
    factor 2 is a power of two, so the round trip is bit-exact).
    """

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise ValidationError("TaylorJet needs order >= 1 (2+ coefficients)")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def variable(cls, x: Number, order: int) -> "TaylorJet":
        if order < 1:
            raise ValidationError("order must be >= 1")
        return cls((float(x), 1.0) + (0.0,) * (order - 1))

    @classmethod
    def constant(cls, c: Number, order: int) -> "TaylorJet":
        if order < 1:
            raise ValidationError("order must be >= 1")
        return cls((float(c),) + (0.0,) * order)

    @classmethod
    def from_dual3(cls, d: Dual3) -> "TaylorJet":
        return cls((d.f0, d.f1, d.f2 / 2.0))

    def to_dual3(self) -> Dual3:
        if self.order != 2:
            raise ValidationError(
                f"only order-2 jets convert to Dual3, got order {self.order}"
            )
        c = self.coeffs
        return Dual3(c[0], c[1], 2.0 * c[2])

    def __mul__(self, other: "TaylorJet") -> "TaylorJet":
        return jet_mul(self, other)


def jet_mul(a: TaylorJet, b: TaylorJet) -> TaylorJet:
    """Truncated convolution: ``c_k = sum_{i+j=k} a_i b_j`` for ``k <= n``."""
    if a.order != b.order:
        raise ValidationError(
            f"jet order mismatch: {a.order} vs {b.order}"
        )
    n = a.order
    out = [0.0] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0.0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return TaylorJet(tuple(out))
