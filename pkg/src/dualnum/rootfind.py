"""Dual Newton-Raphson and Halley root finding for implicit functions.

Given ``F(u, x) = 0`` defining ``u(x)`` implicitly, the solvers return
``u`` as a :class:`~dualnum.core.Dual3` whose derivative components are
the exact first and second derivatives of ``u`` composed with whatever
seed the caller passes in ``g``.  No closed form for ``u`` and no hand
derivatives of ``F`` are needed: ``F`` is supplied as a callable built
from dual operations, and its partials fall out of the dual components.

The iteration runs in two phases.  The real part converges by classical
Newton (or Halley) steps with the slope refreshed each iteration; the
derivative components are then settled by exactly two dual-only passes

    u~  <-  u~  -  F~(u~, g) / {F_u, 0, 0}

with ``F_u`` evaluated at the converged root.  At a simple root the
first pass lands ``f1`` on ``-F_x/F_u`` and the second lands ``f2`` on
``-(F_uu u'^2 + 2 F_ux u' + F_xx)/F_u`` exactly (up to round-off),
whatever their starting values, so derivatives stay correct even when a
residual tolerance exits the real loop early.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .core import Dual3, constant, cos, sin, variable
from .errors import (
    DivergenceError,
    NonConvergenceError,
    SingularDerivativeError,
    ValidationError,
)

# F~(u~, x~) built from dual operations; must be pure and re-entrant.
DualBivariate = Callable[[Dual3, Dual3], Dual3]

_SETTLE_PASSES = 2


@dataclass(frozen=True)
class RootConfig:
    """Iteration controls for the implicit-function solvers.

    ``tol`` is a residual tolerance on ``|F|``; ``tol = 0`` disables the
    early exit and runs exactly ``max_iters`` real-part iterations, which
    reproduces fixed-count reference runs.  ``refresh_slope = False``
    freezes the derivative(s) used in the real-part update at the initial
    guess (the historical fixed-slope scheme); the settle phase makes the
    returned derivative components exact either way.
    """

    u0: float
    method: str = "newton"
    max_iters: int = 100
    tol: float = 1e-12
    refresh_slope: bool = True

    def __post_init__(self):
        if self.method not in ("newton", "halley"):
            raise ValidationError(f"unknown method {self.method!r}")
        if not math.isfinite(self.u0):
            raise ValidationError(f"u0 must be finite, got {self.u0}")
        if self.max_iters < 1:
            raise ValidationError("max_iters must be >= 1")
        if not self.tol >= 0.0:
            raise ValidationError("tol must be >= 0")


def nr_dual(cfg: RootConfig, F: DualBivariate, g: Dual3) -> Dual3:
    """Solve ``F(u, g.f0) = 0`` by Newton-Raphson; derivatives from ``g``."""
    return _solve("newton", cfg, F, g)


def halley_dual(cfg: RootConfig, F: DualBivariate, g: Dual3) -> Dual3:
    """Solve ``F(u, g.f0) = 0`` by Halley's method; derivatives from ``g``."""
    return _solve("halley", cfg, F, g)


def find_root(cfg: RootConfig, F: DualBivariate, g: Dual3) -> Dual3:
    """Dispatch on ``cfg.method``."""
    return _solve(cfg.method, cfg, F, g)


def _solve(method: str, cfg: RootConfig, F: DualBivariate, g: Dual3) -> Dual3:
    x_const = constant(g.f0)
    u = float(cfg.u0)

    frozen = None
    if not cfg.refresh_slope:
        fd0 = F(variable(u), x_const)
        frozen = (fd0.f1, fd0.f2)

    converged = False
    for k in range(cfg.max_iters):
        fd = F(variable(u), x_const)
        resid = fd.f0
        if not (math.isfinite(u) and math.isfinite(resid)):
            raise DivergenceError(
                f"non-finite iterate after {k} iterations (u={u}, F={resid})",
                iterations=k,
            )
        if cfg.tol > 0.0 and abs(resid) <= cfg.tol:
            converged = True
            break
        fu, fuu = frozen if frozen is not None else (fd.f1, fd.f2)
        if fu == 0.0:
            raise SingularDerivativeError(
                f"dF/du vanished at iterate {k} (u={u})"
            )
        if method == "newton":
            u = u - resid / fu
        else:
            denom = 2.0 * fu * fu - resid * fuu
            if denom == 0.0:
                raise SingularDerivativeError(
                    f"Halley denominator vanished at iterate {k} (u={u})"
                )
            u = u - 2.0 * resid * fu / denom

    if not math.isfinite(u):
        raise DivergenceError(
            f"non-finite iterate after {cfg.max_iters} iterations (u={u})",
            iterations=cfg.max_iters,
        )
    if cfg.tol > 0.0 and not converged:
        resid = F(variable(u), x_const).f0
        if not math.isfinite(resid):
            raise DivergenceError(
                f"non-finite residual after {cfg.max_iters} iterations",
                iterations=cfg.max_iters,
            )
        if abs(resid) > cfg.tol:
            raise NonConvergenceError(
                f"|F| = {abs(resid):.3e} > tol = {cfg.tol:.3e} "
                f"after {cfg.max_iters} iterations",
                residual=resid,
            )

    # Settle phase: two dual passes with the slope pinned at the root.
    slope = F(variable(u), x_const).f1
    if not math.isfinite(slope):
        raise DivergenceError(f"non-finite dF/du at the root u={u}")
    if slope == 0.0:
        raise SingularDerivativeError(f"dF/du vanished at the root u={u}")
    slope_const = constant(slope)
    ud = Dual3(u)
    for _ in range(_SETTLE_PASSES):
        ud = ud - F(ud, g) / slope_const
    if not (math.isfinite(ud.f0) and math.isfinite(ud.f1)
            and math.isfinite(ud.f2)):
        raise DivergenceError(f"non-finite dual components at the root: {ud!r}")
    return ud


# -- RRRCR spatial mechanism --------------------------------------------

@dataclass(frozen=True)
class MechanismParams:
    """Link constants of the RRRCR spatial mechanism loop-closure equation.

    ``c1``/``c2`` default to the positive cosine branch paired with the
    given sines, ``c_i = +sqrt(1 - s_i**2)``.
    """

    L: float
    l: float
    a: float
    R: float
    s1: float
    s2: float
    b: float
    e: float
    c1: float = field(default=None)  # type: ignore[assignment]
    c2: float = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.c1 is None:
            object.__setattr__(self, "c1", math.sqrt(1.0 - self.s1 ** 2))
        if self.c2 is None:
            object.__setattr__(self, "c2", math.sqrt(1.0 - self.s2 ** 2))
        for s, c, tag in ((self.s1, self.c1, "1"), (self.s2, self.c2, "2")):
            if abs(s * s + c * c - 1.0) > 1e-12:
                raise ValidationError(
                    f"s{tag}^2 + c{tag}^2 = {s * s + c * c} != 1"
                )

    def loop_closure(self, phi: Dual3, theta: Dual3) -> Dual3:
        """Loop-closure residual; zero relates output angle phi to input theta."""
        L, ell, a, R = self.L, self.l, self.a, self.R
        s1, s2, c1, c2 = self.s1, self.s2, self.c1, self.c2
        be = self.b - self.e
        sth, cth = sin(theta), cos(theta)
        sph, cph = sin(phi), cos(phi)
        return (
            a * a * c1 * c1 * c2 * c2
            - 2.0 * a * c1 * c2 * c2 * s1 * be
            - 2.0 * a * c1 * c1 * c2 * c2 * L * cth
            + 2.0 * a * c1 * c2 * c2 * R * cph
            - c1 * c1 * c2 * c2 * be * be
            + 2.0 * c1 * c2 * c2 * L * s1 * be * cth
            + 2.0 * c1 * c2 * L * s2 * be * sth
            - 2.0 * c1 * R * s2 * be * sph
            - 2.0 * R * s1 * be * cph
            + be * be
            - c1 * c1 * c2 * c2 * ell * ell
            + c1 * c1 * c2 * c2 * L * L
            + c1 * c1 * c2 * c2 * R * R * cph * cph
            - 2.0 * c1 * c1 * c2 * L * R * sth * sph
            - c1 * c1 * R * R * (1.0 - 2.0 * sph * sph)
            - 2.0 * c1 * c2 * c2 * L * R * cth * cph
            - 2.0 * c1 * c2 * L * R * s1 * s2 * sth * cph
            + 2.0 * c1 * R * R * s1 * s2 * sph * cph
            + R * R * cph * cph
        )


def mechanism_phi(params: MechanismParams, g: Dual3, cfg: RootConfig) -> Dual3:
    """Output angle of the RRRCR mechanism with derivatives along ``g``.

    ``cfg.u0`` supplies the initial guess for the output angle.
    """
    return find_root(cfg, params.loop_closure, g)
