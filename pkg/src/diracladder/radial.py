"""Assembly of the two-component radial wavefunction from ladder members.

For a bound state with labels (channel, k) the two radial components are
built from at most two adjacent members of the positive ladder tower,

    F(rho) = A*sqrt(m + E) * (psi_minus + psi_plus)(rho)
    G(rho) = A*sqrt(m - E) * (psi_minus - psi_plus)(rho)

with psi_plus the rank-k member (phase mu = lam + k) and
psi_minus = rel_coeff * (rank k-1 member).  The mixing coefficient is fixed
by the first-order system itself:

    rel_coeff = C_minus(mu) / (zeta*m/kappa - tau),
    zeta*m/kappa = sqrt(zeta^2 + (mu - 1/2)^2).

For k = 0 there is no lower member: psi_minus vanishes, rel_coeff = 0, and
F/G = -sqrt((m+E)/(m-E)) pointwise (the constant-ratio nodeless solution,
which is also why k = 0 only exists for epsilon = -1).

Functions are kept in exact polynomial-times-weight form, so nodes are
polynomial roots and derivatives are available without differencing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import precision
from .channels import BoundState
from .errors import DomainError
from .ladder import (
    LadderFunction,
    _poly_add,
    _poly_scale,
    _poly_trim,
    _polyval,
    apply_raising,
    c_minus,
    ground_ladder_function,
    raise_to_rank,
)

__all__ = [
    "RadialSolution",
    "WavefunctionTable",
    "build_solution",
    "evaluate_on_grid",
    "physical_normalize",
    "count_radial_nodes",
]


@dataclass(frozen=True)
class RadialSolution:
    """Exact bound-state solution in polynomial form.

    amplitude rescales both components; normalization records whether it was
    chosen algebraically (unit tower members, amplitude 1) or to make
    integral (F^2 + G^2) dr equal 1.
    """

    state: BoundState
    psi_plus: LadderFunction
    psi_minus: LadderFunction | None
    rel_coeff: float
    amplitude: float = 1.0
    normalization: str = "algebraic"

    # -- polynomial views ---------------------------------------------------

    def component_polynomials(self):
        """(u_F, u_G) with F = A*sqrt(m+E)*w*u_F, G = A*sqrt(m-E)*w*u_G."""
        q_plus = list(self.psi_plus.coeffs)
        if self.psi_minus is None:
            minus = [c * 0 for c in q_plus]
        else:
            minus = _poly_scale(list(self.psi_minus.coeffs), self.rel_coeff)
        u_f = _poly_trim(_poly_add(minus, q_plus))
        u_g = _poly_trim(_poly_add(minus, _poly_scale(q_plus, -1.0)))
        return u_f, u_g

    def front_factors(self):
        """(c_F, c_G) = amplitude * (sqrt(m+E), sqrt(m-E))."""
        st = self.state
        c_f = self.amplitude * precision.sqrt(st.mass + st.energy)
        c_g = self.amplitude * precision.sqrt(st.mass - st.energy)
        return c_f, c_g

    # -- evaluation ---------------------------------------------------------

    def _weight(self, rho):
        lam = self.state.channel.lam
        if isinstance(rho, np.ndarray):
            return rho ** (precision.to_float(lam) - 0.5) * np.exp(-rho)
        return precision.power(rho, lam - 0.5) * precision.exp(-rho)

    @staticmethod
    def _check_rho(rho):
        if isinstance(rho, np.ndarray):
            if rho.size and not np.all(rho > 0):
                raise DomainError("rho must be positive")
        elif not rho > 0:
            raise DomainError(f"rho must be positive, got {rho}")

    def _component(self, rho, poly, front):
        self._check_rho(rho)
        if isinstance(rho, np.ndarray):
            coeffs = [precision.to_float(c) for c in poly]
            return precision.to_float(front) * self._weight(rho) * _polyval(coeffs, rho)
        return front * self._weight(rho) * _polyval(poly, rho)

    def F(self, rho):
        u_f, _ = self.component_polynomials()
        return self._component(rho, u_f, self.front_factors()[0])

    def G(self, rho):
        _, u_g = self.component_polynomials()
        return self._component(rho, u_g, self.front_factors()[1])

    def evaluate_with_derivatives(self, rho: np.ndarray):
        """(F, G, dF/drho, dG/drho) from exact polynomial differentiation.

        dF/drho = c_F * w * (u_F' + ((lam - 1/2)/rho - 1) * u_F).
        """
        self._check_rho(rho)
        lam = precision.to_float(self.state.channel.lam)
        u_f, u_g = self.component_polynomials()
        c_f, c_g = (precision.to_float(x) for x in self.front_factors())
        w = self._weight(rho)
        log_w_prime = (lam - 0.5) / rho - 1.0
        out = []
        for poly, front in ((u_f, c_f), (u_g, c_g)):
            coeffs = [precision.to_float(c) for c in poly]
            dcoeffs = [i * c for i, c in enumerate(coeffs)][1:] or [0.0]
            val = front * w * _polyval(coeffs, rho)
            der = front * w * (_polyval(dcoeffs, rho) + log_w_prime * _polyval(coeffs, rho))
            out.append((val, der))
        (f, fp), (g, gp) = out
        return f, g, fp, gp


@dataclass(frozen=True)
class WavefunctionTable:
    rho: np.ndarray
    F: np.ndarray
    G: np.ndarray


def build_solution(state: BoundState) -> RadialSolution:
    """Generate the exact solution for a spectrum state by climbing the tower."""
    channel = state.channel
    ground = ground_ladder_function(channel.lam)
    if state.k == 0:
        return RadialSolution(state=state, psi_plus=ground, psi_minus=None,
                              rel_coeff=channel.lam * 0)
    below = raise_to_rank(ground, state.k - 1)
    top, _ = apply_raising(below)
    # zeta*m/kappa in stable closed form
    zm_over_kappa = precision.sqrt(channel.zeta ** 2 + (state.mu - 0.5) ** 2)
    rel = c_minus(channel.lam, state.mu) / (zm_over_kappa - channel.tau)
    return RadialSolution(state=state, psi_plus=top, psi_minus=below, rel_coeff=rel)


def evaluate_on_grid(solution: RadialSolution, grid) -> WavefunctionTable:
    """Tabulate F and G on a grid of positive radii (order preserved)."""
    rho = np.asarray(grid, dtype=float)
    if rho.ndim != 1:
        raise DomainError("grid must be one-dimensional")
    if rho.size == 0:
        return WavefunctionTable(rho=rho, F=rho.copy(), G=rho.copy())
    if not np.all(rho > 0):
        raise DomainError("grid radii must be positive")
    return WavefunctionTable(rho=rho, F=solution.F(rho), G=solution.G(rho))


def physical_norm_integral(solution: RadialSolution, spec=None):
    """integral (F^2 + G^2) drho at the solution's current amplitude.

    The integrand is a sum of squared polynomials against the weight
    rho^(2*lam-1)*exp(-2*rho); delegated to the oracle's pointwise-square
    Gauss-Laguerre rule.
    """
    from . import oracle

    st = solution.state
    lam = precision.to_float(st.channel.lam)
    u_f, u_g = solution.component_polynomials()
    c_f, c_g = (precision.to_float(x) for x in solution.front_factors())
    polys = [_poly_scale([precision.to_float(c) for c in u_f], c_f),
             _poly_scale([precision.to_float(c) for c in u_g], c_g)]
    return oracle.component_norm_integral(polys, 2.0 * lam - 1.0, spec=spec)


def physical_normalize(solution: RadialSolution, spec=None) -> RadialSolution:
    """Rescale so that integral (F^2 + G^2) drho == 1."""
    base = replace(solution, amplitude=1.0)
    norm = physical_norm_integral(base, spec=spec)
    return replace(solution, amplitude=1.0 / precision.sqrt(norm),
                   normalization="physical")


def count_radial_nodes(solution: RadialSolution, component: str = "F",
                       rho_max: float | None = None, samples: int = 4000) -> np.ndarray:
    """Interior zeros of F or G: dense-grid sign changes, refined by bisection.

    Double roots do not occur in this family, so sign changes find every
    node.  Expected count for component F is k.
    """
    if component not in ("F", "G"):
        raise DomainError(f"component must be 'F' or 'G', got {component!r}")
    func = solution.F if component == "F" else solution.G
    if rho_max is None:
        # polynomial roots sit well below the classical turning region
        rho_max = 4.0 * precision.to_float(solution.state.mu) + 20.0
    grid = np.geomspace(1e-3, rho_max, samples)
    values = func(grid)
    sign = np.sign(values)
    flips = np.nonzero(sign[1:] * sign[:-1] < 0)[0]
    nodes = []
    for i in flips:
        lo, hi = grid[i], grid[i + 1]
        f_lo = func(lo)
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            f_mid = func(mid)
            if f_lo * f_mid <= 0:
                hi = mid
            else:
                lo, f_lo = mid, f_mid
            if hi - lo < 1e-13 * (1.0 + hi):
                break
        nodes.append(0.5 * (lo + hi))
    return np.asarray(nodes)
