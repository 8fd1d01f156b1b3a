"""Ladder family and non-unitary su(2) operator algebra.

Members of the family are functions of the dimensionless radius rho,

    P(rho) = rho**(lam - 1/2) * exp(-rho) * q(rho),        positive branch
    P(rho) = rho**(lam - 1/2) * exp(+rho) * q(rho),        negative branch

with q a polynomial.  Only the positive branch (phase labels mu = lam + k,
k = 0, 1, ...) is normalizable; the negative branch (mu = -lam - k) exists
algebraically but its truncated norms blow up, see oracle.divergence_check.

The three generators satisfy su(2) commutation relations but the
representation is non-unitary: Omega_1 and Omega_2 are anti-Hermitian under
the x-measure inner product integral(f*g, drho/rho), so the ladder
normalization constants come with a sign asymmetry,

    raise:  Omega_+ V(mu) = C_plus(mu)  V(mu+1),  C_plus  = +sqrt(mu*(mu+1) - omega)
    lower:  Omega_- V(mu) = C_minus(mu) V(mu-1),  C_minus = -sqrt(mu*(mu-1) - omega)

with omega = lam*(lam - 1) the Casimir eigenvalue.  With these signs the
normalized raising map preserves unit norm and lower(raise(f)) == f exactly.

Reduced to the polynomial part q, the operators act as

    raise action:  rho*q' - 2*rho*q + (lam + mu)*q        (degree +1)
    lower action:  rho*q' + (lam - mu)*q                  (degree -1)

and the Casimir as D1(D1 q) + 2*mu*rho*q - rho^2*q - q/4 with
D1 = rho*d/drho + (lam - 1/2 -+ rho) (sign tied to the branch).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from . import precision
from .errors import (
    DomainError,
    NotAnEigenfunction,
    PrecisionLimit,
    WrongBranch,
)
from .report import VerificationReport

__all__ = [
    "LadderFunction",
    "OperatorMatrix",
    "ground_ladder_function",
    "negative_branch_ground",
    "apply_raising",
    "apply_lowering",
    "apply_omega3",
    "apply_casimir",
    "commutator_check",
    "positive_operator_check",
    "matrix_representation",
    "raise_to_rank",
]

# Coefficients below this fraction of the largest one are trimmed.
TRIM_RELATIVE = 1e-14

# Raising chains in float64 lose ~2 digits per 10 ranks; past this rank the
# trailing coefficients are pure noise.  mpmath coefficients lift the cap.
MAX_FLOAT64_RANK = 60


# ---------------------------------------------------------------------------
# plain-list polynomial helpers (coefficients in ascending powers of rho)

def _poly_trim(coeffs):
    top = max(abs(c) for c in coeffs)
    if top == 0:
        return (coeffs[0] * 0,)
    out = list(coeffs)
    while len(out) > 1 and abs(out[-1]) <= TRIM_RELATIVE * top:
        out.pop()
    return tuple(out)


def _poly_scale(coeffs, factor):
    return [c * factor for c in coeffs]


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0.0
        y = b[i] if i < len(b) else 0.0
        out.append(x - y)
    return out


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0.0
        y = b[i] if i < len(b) else 0.0
        out.append(x + y)
    return out


def _polyval(coeffs, rho):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * rho + c
    return acc


def _raising_action(lam, mu, coeffs):
    # rho*q' - 2*rho*q + (lam + mu)*q
    out = [coeffs[0] * 0 for _ in range(len(coeffs) + 1)]
    for i, c in enumerate(coeffs):
        out[i] += (i + lam + mu) * c
        out[i + 1] -= 2 * c
    return out


def _lowering_action(lam, mu, coeffs):
    # rho*q' + (lam - mu)*q
    return [(i + lam - mu) * c for i, c in enumerate(coeffs)]


def _weighted_derivative_action(lam, coeffs, branch_sign):
    # D1 q = rho*q' + (lam - 1/2)*q + branch_sign*rho*q
    out = [coeffs[0] * 0 for _ in range(len(coeffs) + 1)]
    for i, c in enumerate(coeffs):
        out[i] += (i + lam - 0.5) * c
        out[i + 1] += branch_sign * c
    return out


def _casimir_action(lam, mu, coeffs, branch):
    sign = -1.0 if branch == "positive" else 1.0
    d1 = _weighted_derivative_action(lam, coeffs, sign)
    d2 = _weighted_derivative_action(lam, d1, sign)
    out = list(d2)
    for i, c in enumerate(coeffs):
        out[i + 1] += 2 * mu * c          # 2*mu*rho*q
        out[i + 2] -= c                   # -rho^2*q
        out[i] -= 0.25 * c                # -q/4
    return out


def _x_norm_sq(lam, coeffs):
    # Exact x-measure norm of P = rho**(lam-1/2)*exp(-rho)*q:
    # integral rho^(2*lam-2+i+j) exp(-2*rho) drho = Gamma(a)/2^a, a = 2*lam-1+i+j.
    if precision.is_extended(lam) or any(precision.is_extended(c) for c in coeffs):
        total = coeffs[0] * 0
        for i, ci in enumerate(coeffs):
            for j, cj in enumerate(coeffs):
                a = 2 * lam - 1 + i + j
                total += ci * cj * precision.gamma(a) / precision.power(2.0, a)
        return total

    # Float inputs: the signed double sum cancels to O(1) from terms of size
    # Gamma(2*lam-1+2*rank), hopeless in double precision beyond small rank.
    # Evaluate in throwaway mpmath precision sized to the largest term.
    lam_f = float(lam)
    cs = [float(c) for c in coeffs]
    biggest = 0.0
    for i, ci in enumerate(cs):
        for j, cj in enumerate(cs):
            if ci != 0.0 and cj != 0.0:
                a = 2.0 * lam_f - 1.0 + i + j
                size = math.lgamma(a) - a * math.log(2.0) + math.log(abs(ci * cj))
                biggest = max(biggest, size)
    digits = 25 + max(0, int(biggest / math.log(10.0)) + 1)
    with mpmath.workdps(digits):
        base = 2 * mpmath.mpf(lam_f) - 1
        conv = [mpmath.mpf(0)] * (2 * len(cs) - 1)
        for i, ci in enumerate(cs):
            for j, cj in enumerate(cs):
                conv[i + j] += mpmath.mpf(ci) * cj
        moment = mpmath.gamma(base) / mpmath.power(2, base)
        total = mpmath.mpf(0)
        for m, c_m in enumerate(conv):
            total += c_m * moment
            moment *= (base + m) / 2
        return float(total)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LadderFunction:
    """One member of the ladder family, stored as its polynomial part.

    coeffs holds q in ascending powers of rho; lam and mu may be floats or
    mpmath scalars (the latter keeps every derived quantity at extended
    precision).
    """

    lam: float
    mu: float
    coeffs: tuple
    branch: str = "positive"

    def __post_init__(self):
        if self.branch not in ("positive", "negative"):
            raise DomainError(f"branch must be 'positive' or 'negative', got {self.branch!r}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def rank(self) -> int:
        """k = |mu| - lam rounded to the nearest integer."""
        return round(abs(precision.to_float(self.mu)) - precision.to_float(self.lam))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def polynomial(self, rho):
        """q(rho); accepts scalars (float or mpmath) and numpy arrays."""
        if isinstance(rho, np.ndarray):
            return _polyval([precision.to_float(c) for c in self.coeffs], rho)
        return _polyval(self.coeffs, rho)

    def evaluate(self, rho):
        """P(rho) including the rho**(lam-1/2)*exp(-+rho) weight."""
        sign = -1.0 if self.branch == "positive" else 1.0
        if isinstance(rho, np.ndarray):
            if np.any(rho <= 0):
                raise DomainError("rho must be positive")
            lam = precision.to_float(self.lam)
            return rho ** (lam - 0.5) * np.exp(sign * rho) * self.polynomial(rho)
        if not rho > 0:
            raise DomainError(f"rho must be positive, got {rho}")
        weight = precision.power(rho, self.lam - 0.5) * precision.exp(sign * rho)
        return weight * self.polynomial(rho)

    def norm_squared(self):
        """Exact x-measure norm integral (positive branch only)."""
        if self.branch != "positive":
            raise WrongBranch("negative-branch norms diverge; see divergence_check")
        return _x_norm_sq(self.lam, self.coeffs)


def ground_ladder_function(lam) -> LadderFunction:
    """Bottom of the positive tower, mu = lam, exactly unit-normalized.

    q is the constant 2**(lam - 1/2) / sqrt(Gamma(2*lam - 1)).
    """
    if not precision.to_float(lam) > 0.5:
        raise DomainError(f"lam must exceed 1/2, got {lam}")
    c0 = precision.power(2.0, lam - 0.5) / precision.sqrt(precision.gamma(2 * lam - 1))
    return LadderFunction(lam=lam, mu=lam, coeffs=(c0,), branch="positive")


def negative_branch_ground(lam) -> LadderFunction:
    """Top of the negative tower, mu = -lam: rho**(lam-1/2)*exp(+rho).

    Annihilated by raising, not normalizable; amplitude convention q = 1.
    """
    if not precision.to_float(lam) > 0.5:
        raise DomainError(f"lam must exceed 1/2, got {lam}")
    one = lam * 0 + 1.0   # match the scalar type of lam
    return LadderFunction(lam=lam, mu=-lam, coeffs=(one,), branch="negative")


def _require_positive_branch(f: LadderFunction):
    if f.branch != "positive":
        raise WrongBranch(
            "ladder recurrences are implemented for the positive branch only")


def c_plus(lam, mu):
    """Raising normalization +sqrt(mu*(mu+1) - lam*(lam-1))."""
    return precision.sqrt(mu * (mu + 1) - lam * (lam - 1))


def c_minus(lam, mu):
    """Lowering normalization -sqrt(mu*(mu-1) - lam*(lam-1))."""
    return -precision.sqrt(mu * (mu - 1) - lam * (lam - 1))


def apply_raising(f: LadderFunction):
    """Normalized raising: returns (member at mu+1, C_plus).

    Unit norm is preserved.  Float64 chains refuse to climb past rank 60;
    build the ground state from an mpmath lam to go higher.
    """
    _require_positive_branch(f)
    if not precision.is_extended(f.lam) and f.rank + 1 > MAX_FLOAT64_RANK:
        raise PrecisionLimit(
            f"raising to rank {f.rank + 1} exceeds float64 significance "
            f"(cap {MAX_FLOAT64_RANK}); use mpmath inputs")
    coeff = c_plus(f.lam, f.mu)
    raw = _raising_action(f.lam, f.mu, f.coeffs)
    new = _poly_trim(_poly_scale(raw, 1.0 / coeff))
    return LadderFunction(f.lam, f.mu + 1, new, f.branch), coeff


def apply_lowering(f: LadderFunction):
    """Normalized lowering: returns (member at mu-1, C_minus).

    At the bottom of the tower (mu == lam) the action annihilates: the
    returned function is identically zero and the coefficient is 0.
    """
    _require_positive_branch(f)
    if f.rank == 0:
        # C_minus vanishes with the action itself; keep 0/0 out of the code path
        zero = tuple(c * 0 for c in f.coeffs)
        return LadderFunction(f.lam, f.mu - 1, zero, f.branch), f.lam * 0
    raw = _lowering_action(f.lam, f.mu, f.coeffs)
    coeff = c_minus(f.lam, f.mu)
    new = _poly_trim(_poly_scale(raw, 1.0 / coeff))
    return LadderFunction(f.lam, f.mu - 1, new, f.branch), coeff


def raise_to_rank(ground: LadderFunction, k: int) -> LadderFunction:
    """Climb k rungs from a ground member."""
    if k < 0:
        raise DomainError(f"rank must be nonnegative, got {k}")
    f = ground
    for _ in range(k):
        f, _ = apply_raising(f)
    return f


def apply_omega3(f: LadderFunction):
    """Weight operator: eigenvalue is the phase label itself."""
    return f, f.mu


def apply_casimir(f: LadderFunction, rel_tol: float = 1e-8):
    """Apply the quadratic invariant; returns (f, measured eigenvalue).

    Raises NotAnEigenfunction when the residual against omega*q exceeds
    rel_tol relative to the largest coefficient of q.
    """
    if f.is_zero:
        raise DomainError("casimir eigenvalue of the zero function is undefined")
    raw = _casimir_action(f.lam, f.mu, f.coeffs, f.branch)
    omega = f.lam * (f.lam - 1)
    resid = _poly_sub(raw, _poly_scale(list(f.coeffs), omega))
    scale = max(abs(c) for c in f.coeffs)
    deviation = max(abs(c) for c in resid) / scale
    if precision.to_float(deviation) > rel_tol:
        raise NotAnEigenfunction(
            f"casimir residual {precision.to_float(deviation):.3e} exceeds {rel_tol:.1e}")
    # projection <Cq, q>/<q, q> over coefficient vectors
    num = sum(raw[i] * c for i, c in enumerate(f.coeffs))
    den = sum(c * c for c in f.coeffs)
    return f, num / den


def commutator_check(f: LadderFunction, tolerance: float = 1e-10) -> VerificationReport:
    """Verify the su(2) relations on a concrete member, via raw actions.

    Checks, all as relative coefficient deviations:
      1. (raise.lower - lower.raise) q == 2*mu*q
      2. lower.raise q == -(mu*(mu+1) - omega)*q
      3. casimir q == (lower.raise + mu^2 + mu) q
    """
    _require_positive_branch(f)
    lam, mu, q = f.lam, f.mu, list(f.coeffs)
    report = VerificationReport(f"su(2) relations at lam={precision.to_float(lam):.6f}, "
                                f"mu={precision.to_float(mu):.6f}")
    scale = max(abs(c) for c in q)

    def rel_dev(a, b):
        diff = _poly_sub(a, b)
        return precision.to_float(max(abs(c) for c in diff) / scale)

    down = _lowering_action(lam, mu, q)
    up_down = _raising_action(lam, mu - 1, down)
    up = _raising_action(lam, mu, q)
    down_up = _lowering_action(lam, mu + 1, up)

    comm = _poly_sub(up_down, down_up)
    report.add("[raise, lower] acts as 2*mu",
               rel_dev(comm, _poly_scale(q, 2 * mu)), tolerance)

    # weight operator multiplies by the operand's label: on raise(f) that is
    # mu+1, so [weight, raise] f = (mu+1)*up - mu*up must equal up itself
    weight_comm = _poly_sub(_poly_scale(up, mu + 1), _poly_scale(up, mu))
    report.add("[weight, raise] acts as raise", rel_dev(weight_comm, up), tolerance)

    eigen = -(mu * (mu + 1) - lam * (lam - 1))
    report.add("lower.raise acts as -(mu*(mu+1) - omega)",
               rel_dev(down_up, _poly_scale(q, eigen)), tolerance)

    casimir = _casimir_action(lam, mu, q, f.branch)
    ladder_side = _poly_add(down_up, _poly_scale(q, mu * mu + mu))
    report.add("casimir == lower.raise + weight*(weight+1)",
               rel_dev(casimir, ladder_side), tolerance)
    return report


def positive_operator_check(f: LadderFunction):
    """The positive quadratic form 2*mu^2 - omega, measured on f.

    Returns (|raise f|^2 + |lower f|^2)/2 + mu^2*|f|^2 normalized by |f|^2,
    each norm from exact moment integrals.  For family members this equals
    the sum of the three squared generator norms, whose label value
    2*mu^2 - omega is strictly positive (it bounds mu away from zero).
    """
    _require_positive_branch(f)
    lam, mu = f.lam, f.mu
    up = _raising_action(lam, mu, list(f.coeffs))
    down = _lowering_action(lam, mu, list(f.coeffs))
    nf = _x_norm_sq(lam, list(f.coeffs))
    n_up = _x_norm_sq(lam, up)
    n_down = _x_norm_sq(lam, down) if any(c != 0 for c in down) else nf * 0
    return ((n_up + n_down) / 2 + mu * mu * nf) / nf


# ---------------------------------------------------------------------------
# truncated matrix representation on both towers


@dataclass(frozen=True)
class OperatorMatrix:
    which: str
    lam: float
    basis_mus: tuple
    entries: np.ndarray

    def as_array(self) -> np.ndarray:
        return self.entries


def matrix_representation(which: str, lam, K: int) -> OperatorMatrix:
    """Truncated matrix of omega1|omega2|omega3 on both towers.

    Basis: mu in {-(lam+K), ..., -lam, lam, ..., lam+K}, ascending.  The two
    towers stay disconnected because the raising element out of mu = -lam
    vanishes identically.  omega1 comes out real antisymmetric, omega2
    purely imaginary symmetric (both anti-Hermitian), omega3 real diagonal.
    """
    if which not in ("omega1", "omega2", "omega3"):
        raise DomainError(f"which must be omega1|omega2|omega3, got {which!r}")
    if not isinstance(K, int) or K < 1:
        raise DomainError(f"K must be a positive integer, got {K!r}")
    lam_f = precision.to_float(lam)
    if lam_f <= 0.5:
        raise DomainError(f"lam must exceed 1/2, got {lam}")

    mus = [-(lam_f + k) for k in range(K, -1, -1)] + [lam_f + k for k in range(K + 1)]
    n = len(mus)
    omega = lam_f * (lam_f - 1.0)

    if which == "omega3":
        entries = np.diag(np.asarray(mus, dtype=complex))
        return OperatorMatrix(which, lam_f, tuple(mus), entries)

    # One amplitude per adjacent pair, written into both mirror entries, so
    # the advertised symmetry classes hold exactly and not just to roundoff.
    # Pairs straddling the tower gap get amplitude 0: the raising element out
    # of mu = -lam vanishes (its argument is again omega - omega).
    entries = np.zeros((n, n), dtype=complex)
    for b in range(n - 1):
        mu = mus[b]
        if abs(mus[b + 1] - (mu + 1)) > 1e-9:
            continue
        amp = 0.5 * np.sqrt(max(mu * (mu + 1) - omega, 0.0))
        if which == "omega1":
            entries[b + 1, b] = amp
            entries[b, b + 1] = -amp
        else:
            entries[b + 1, b] = -1j * amp
            entries[b, b + 1] = -1j * amp
    return OperatorMatrix(which, lam_f, tuple(mus), entries)
