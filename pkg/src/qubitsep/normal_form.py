"""Boost elimination of the linear terms of R and the diagonal normal form.

In the generic case a pair of boosts (or a single symmetric one) removes the
first row and column of R apart from the corner, leaving
Sigma = diag(s0, s1, s2, s3); separability is then exactly
|s1| + |s2| + |s3| <= s0.  This module solves for the boost velocities in
the supported families:

  * one linear pair (a_k, b_k) on a single axis  -> quadratic,
  * symmetric states (a == b) with two pairs     -> cubic,
  * symmetric states with three pairs            -> quartic,

classifies the structurally non-generic states for which the required boost
degenerates to light speed, and certifies every solve by re-applying the
boost and checking that the eliminated entries actually vanished.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .boost import BETA_LIMIT, BoostX, GeneralBoost, apply_two_sided
from .errors import (
    BoostLimitError,
    InvalidParameterError,
    InvalidStateError,
    NoPhysicalBoostError,
    RelabelAxesError,
    SolverInconsistencyError,
    UnsupportedDegeneracyError,
)
from .hs import HSParams
from .pt import ENTANGLED, SEPARABLE, VERDICT_TOL, Verdict
from .rmatrix import RMatrix, r_from_hs
from .roots import real_roots

GENERIC = "generic"
NON_GENERIC_A = "non-generic-a"
NON_GENERIC_B = "non-generic-b"
NON_GENERIC_C = "non-generic-c"
NON_GENERIC_D = "non-generic-d"
NO_PHYSICAL_BOOST = "no-physical-boost"

OFFDIAG_TOL = 1e-9
_STRUCTURAL_TOL = 1e-9
_ZERO_TOL = 1e-12
_PAIR_RESIDUAL_TOL = 1e-12
_FUNDAMENTAL_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class SigmaForm:
    """The diagonal normal form: corner value s0 > 0 and spatial values s."""

    s0: float
    s: np.ndarray

    def __post_init__(self):
        s0 = float(self.s0)
        if not (math.isfinite(s0) and s0 > 0.0):
            raise InvalidParameterError("s0 must be finite and positive")
        v = np.asarray(self.s, dtype=float).reshape(3).copy()
        if not np.all(np.isfinite(v)):
            raise InvalidParameterError("s must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "s0", s0)
        object.__setattr__(self, "s", v)

    @property
    def tprime(self) -> np.ndarray:
        """Normalized diagonal values t'_i = s_i / s0."""
        return self.s / self.s0

    @property
    def tprime_sum(self) -> float:
        """|t'_1| + |t'_2| + |t'_3|, the quantity the verdict compares to 1."""
        return float(np.abs(self.tprime).sum())


@dataclass(frozen=True)
class Classification:
    kind: str
    detail: str = ""

    @property
    def is_generic(self) -> bool:
        return self.kind == GENERIC


@dataclass(frozen=True, eq=False)
class SolveReport:
    """Everything a solve produced, including its numerical certificates."""

    classification: Classification
    boost_kind: str  # "none" | "pair" | "symmetric"
    betas: tuple[float, ...]
    axis: int | None
    polynomial_residual: float
    offdiag_residual: float
    sigma: SigmaForm | None


def solve_pair_general(
    a1: float, b1: float, t1: float, beta_limit: float = BETA_LIMIT
) -> tuple[float, float]:
    """Boost velocities (beta_a, beta_b) eliminating a single linear pair.

    The two elimination conditions

        -beta_b + b1 beta_a beta_b + a1 - beta_a t1 = 0
        -beta_a + a1 beta_a beta_b + b1 - beta_b t1 = 0

    reduce to the quadratic
    (b1 - a1 t1) beta_a^2 + (a1^2 - b1^2 + t1^2 - 1) beta_a + (b1 - a1 t1) = 0,
    whose two roots multiply to 1, so exactly one of them is physical.
    beta_b then follows from the first condition directly,
    beta_b = (a1 - beta_a t1) / (1 - b1 beta_a), which stays well defined even
    where the textbook ratio form has a vanishing denominator.
    """
    for name, val in (("a1", a1), ("b1", b1), ("t1", t1)):
        if not math.isfinite(val):
            raise InvalidParameterError(f"{name} must be finite")
    if a1 == 0.0 and b1 == 0.0:
        return 0.0, 0.0
    c2 = b1 - a1 * t1
    c1 = a1 * a1 - b1 * b1 + t1 * t1 - 1.0
    if abs(c2) <= 1e-15 * max(abs(c1), 1.0):
        # Quadratic degenerates; beta_a = 0 with beta_b = a1 solves both
        # conditions exactly (and is the branch continuous with beta -> 0
        # when the system is underdetermined).
        beta_a = 0.0
    else:
        disc = c1 * c1 - 4.0 * c2 * c2
        if disc < 0.0:
            raise NoPhysicalBoostError(
                "no real boost solves the elimination conditions"
            )
        sq = math.sqrt(disc)
        q = -0.5 * (c1 + math.copysign(sq, c1)) if c1 != 0.0 else -0.5 * sq
        if q == 0.0:
            # disc == 0 with c1 == 0 would force c2 == 0; degenerate double root
            raise BoostLimitError(
                "double root on the unit circle", beta=math.copysign(1.0, -c1)
            )
        r_big, r_small = q / c2, c2 / q
        beta_a = r_small if abs(r_small) <= abs(r_big) else r_big
        for _ in range(2):
            f = (c2 * beta_a + c1) * beta_a + c2
            df = 2.0 * c2 * beta_a + c1
            if df == 0.0:
                break
            beta_a -= f / df
    if abs(beta_a) >= 1.0 - beta_limit:
        raise BoostLimitError(
            f"beta_a = {beta_a:.12g} reaches the light-speed limit", beta=beta_a
        )
    denom = 1.0 - b1 * beta_a
    if abs(denom) <= 1e-12:
        raise NoPhysicalBoostError("beta_b diverges; no physical boost")
    beta_b = (a1 - beta_a * t1) / denom
    if abs(beta_b) >= 1.0 - beta_limit:
        raise BoostLimitError(
            f"beta_b = {beta_b:.12g} reaches the light-speed limit", beta=beta_b
        )
    if _pair_residual(a1, b1, t1, beta_a, beta_b) > _PAIR_RESIDUAL_TOL:
        raise SolverInconsistencyError("pair solve failed its elimination certificate")
    return beta_a, beta_b


def _pair_residual(a1, b1, t1, beta_a, beta_b) -> float:
    e1 = -beta_b + b1 * beta_a * beta_b + a1 - beta_a * t1
    e2 = -beta_a + a1 * beta_a * beta_b + b1 - beta_b * t1
    return max(abs(e1), abs(e2))


def solve_pair_symmetric(a: float, t1: float, beta_limit: float = BETA_LIMIT) -> float:
    """The shared velocity for a symmetric pair a1 = b1 = a.

    beta solves a beta^2 - (1 + t1) beta + a = 0; written in the
    cancellation-free form beta = 2a / (T + sqrt(T^2 - 4a^2)), T = 1 + t1.
    Reality needs |1 + t1| >= |2a| (guaranteed by positivity of the state);
    equality pushes beta to 1, which no physical boost reaches.
    """
    if not (math.isfinite(a) and math.isfinite(t1)):
        raise InvalidParameterError("a and t1 must be finite")
    if a == 0.0:
        return 0.0
    big_t = 1.0 + t1
    disc = big_t * big_t - 4.0 * a * a
    if disc < 0.0:
        raise InvalidStateError(
            "|1 + t1| < |2a|: no real boost; input cannot be a valid state"
        )
    beta = 2.0 * a / (big_t + math.copysign(math.sqrt(disc), big_t))
    for _ in range(2):
        f = (a * beta - big_t) * beta + a
        df = 2.0 * a * beta - big_t
        if df == 0.0:
            break
        beta -= f / df
    if abs(beta) >= 1.0 - beta_limit:
        raise BoostLimitError(
            f"beta = {beta:.12g} reaches the light-speed limit "
            "(boundary |2a| = |1 + t1|)",
            beta=beta,
        )
    return beta


def sigma_pair_symmetric(a: float, tdiag, beta_limit: float = BETA_LIMIT) -> SigmaForm:
    """Normal form for a symmetric pair on the first axis:

    s0 = gamma^2 (1 - 2 a beta + beta^2 t1),
    s1 = gamma^2 (-2 a beta + beta^2 + t1),  s2 = t2,  s3 = t3 (signed).
    """
    t1, t2, t3 = np.asarray(tdiag, dtype=float).reshape(3)
    beta = solve_pair_symmetric(a, t1, beta_limit)
    g2 = 1.0 / ((1.0 - beta) * (1.0 + beta))
    s0 = g2 * (1.0 - 2.0 * a * beta + beta * beta * t1)
    s1 = g2 * (-2.0 * a * beta + beta * beta + t1)
    return SigmaForm(s0, np.array([s1, t2, t3]))


def sigma_pair_b1zero(a1: float, tdiag, beta_limit: float = BETA_LIMIT) -> SigmaForm:
    """Normal form for the one-sided pair b1 = 0.

    With beta_b = a1 - beta_a t1 the corner collapses to s0 = gamma_a/gamma_b
    and the axis value to s1 = gamma_b t1 / gamma_a; the transverse entries
    are untouched.  Reality needs |1 - t1^2 - a1^2| >= |2 a1 t1|.
    """
    t1, t2, t3 = np.asarray(tdiag, dtype=float).reshape(3)
    beta_a, beta_b = solve_pair_general(a1, 0.0, t1, beta_limit)
    g_a = 1.0 / math.sqrt((1.0 - beta_a) * (1.0 + beta_a))
    g_b = 1.0 / math.sqrt((1.0 - beta_b) * (1.0 + beta_b))
    s0 = g_a / g_b
    s1 = g_b * t1 / g_a
    return SigmaForm(s0, np.array([s1, t2, t3]))


def _cubic_coefficients(a1: float, a2: float, tdiag) -> np.ndarray:
    t1, t2, _ = np.asarray(tdiag, dtype=float).reshape(3)
    t = t2 - t1
    big_t = 1.0 + t1
    return np.array(
        [
            1.0,
            ((a1 * a1 + a2 * a2) / t - big_t) / a1,
            1.0 - big_t / t,
            a1 / t,
        ]
    )


def _quartic_coefficients(a, tdiag) -> np.ndarray:
    a1, a2, a3 = a
    t1, t2, t3 = tdiag
    t = t2 - t1
    tp = t3 - t1
    big_t = 1.0 + t1
    return np.array(
        [
            1.0,
            a1 / t + a1 / tp - big_t / a1 + a2 * a2 / (a1 * t) + a3 * a3 / (a1 * tp),
            1.0 + (a1 * a1 + a2 * a2 + a3 * a3) / (t * tp) - big_t / tp - big_t / t,
            a1 / tp + a1 / t - a1 * big_t / (t * tp),
            a1 * a1 / (t * tp),
        ]
    )


def _coupled_betas(a, tdiag, beta1: float):
    """beta_j = a_j beta_1 / (a_1 + beta_1 (t_j - t_1)) for j = 2, 3."""
    a1 = a[0]
    betas = [beta1]
    for j in (1, 2):
        if a[j] == 0.0:
            betas.append(0.0)
            continue
        den = a1 + beta1 * (tdiag[j] - tdiag[0])
        if abs(den) <= 1e-12 * max(1.0, abs(a1)):
            return None
        betas.append(a[j] * beta1 / den)
    return np.array(betas)


def _fundamental_residual(a, tdiag, betas) -> float:
    # (a1 - beta1 t1)/beta1 = 1 - a.beta must hold for a consistent solve.
    beta1 = betas[0]
    return abs((a[0] - beta1 * tdiag[0]) / beta1 - (1.0 - float(np.dot(a, betas))))


def _identity_polish(a, tdiag, beta1: float, steps: int = 8) -> float:
    """Newton-refine a candidate root on the unreduced elimination identity.

    The polynomial reduction divides by the spreads t_j - t_1, so its roots
    lose accuracy when correlation values nearly coincide or a_1 is small.
    The rational identity

        f(b) = a1/b - t1 - 1 + a1 b + a2^2 b/d2 + a3^2 b/d3,
        d_j = a1 + b (t_j - t1),

    stays well conditioned there; a few Newton steps on it recover the root
    to machine precision.
    """
    a1, a2, a3 = a
    t1 = tdiag[0]
    dt2 = tdiag[1] - t1
    dt3 = tdiag[2] - t1

    def value(x):
        d2 = a1 + x * dt2
        d3 = a1 + x * dt3
        if x == 0.0 or d2 == 0.0 or d3 == 0.0:
            return None, None
        f = a1 / x - t1 - 1.0 + a1 * x + a2 * a2 * x / d2 + a3 * a3 * x / d3
        fp = (
            -a1 / (x * x)
            + a1
            + a2 * a2 * a1 / (d2 * d2)
            + a3 * a3 * a1 / (d3 * d3)
        )
        return f, fp

    best = beta1
    f_best, _ = value(beta1)
    if f_best is None:
        return beta1
    f_best = abs(f_best)
    x = beta1
    for _ in range(steps):
        f, fp = value(x)
        if f is None or fp == 0.0 or not (math.isfinite(f) and math.isfinite(fp)):
            break
        if abs(f) < f_best:
            best, f_best = x, abs(f)
        step = f / fp
        if not math.isfinite(step) or x - step == x:
            break
        x -= step
    f_last, _ = value(x)
    if f_last is not None and math.isfinite(f_last) and abs(f_last) < f_best:
        best = x
    return best


def _select_symmetric_root(a, tdiag, coeffs, beta_limit: float) -> np.ndarray:
    """Scan real roots by increasing magnitude; keep the first physical one.

    Physical means: coupled velocities well defined, total beta^2 below the
    light-speed limit, and the fundamental consistency identity satisfied.
    The smallest root is the branch continuous with beta -> 0 as the linear
    terms vanish.
    """
    roots = real_roots(coeffs)
    for beta1 in sorted(roots, key=abs):
        if beta1 == 0.0:
            continue
        refined = _identity_polish(a, tdiag, float(beta1))
        betas = _coupled_betas(a, tdiag, refined)
        if betas is None:
            continue
        if float(betas @ betas) >= 1.0 - beta_limit:
            continue
        if _fundamental_residual(a, tdiag, betas) > _FUNDAMENTAL_TOL:
            continue
        return betas
    raise NoPhysicalBoostError(
        "no real root gives a boost with beta^2 < 1 satisfying the "
        "consistency identity"
    )


def solve_symmetric_cubic(
    a1: float, a2: float, tdiag, beta_limit: float = BETA_LIMIT
) -> tuple[float, float]:
    """Velocities (beta1, beta2) for a symmetric state with a3 = 0.

    Eliminating beta2 through the coupling relation turns the fundamental
    identity into a cubic in beta1 with coefficients built from
    t = t2 - t1 and T = 1 + t1.  Requires a1 != 0 (relabel axes otherwise)
    and t2 != t1 exactly.
    """
    t = np.asarray(tdiag, dtype=float).reshape(3)
    if not (math.isfinite(a1) and math.isfinite(a2)):
        raise InvalidParameterError("a1 and a2 must be finite")
    if a1 == 0.0 and a2 == 0.0:
        return 0.0, 0.0
    if a1 == 0.0:
        raise RelabelAxesError("a1 vanishes while a2 does not; relabel axes first")
    if t[1] == t[0]:
        raise UnsupportedDegeneracyError(
            "t2 equals t1 exactly; the cubic reduction is ill-posed"
        )
    a = np.array([a1, a2, 0.0])
    coeffs = _cubic_coefficients(a1, a2, t)
    betas = _select_symmetric_root(a, t, coeffs, beta_limit)
    return float(betas[0]), float(betas[1])


def solve_symmetric_quartic(a, tdiag, beta_limit: float = BETA_LIMIT):
    """Velocities (beta1, beta2, beta3) for a symmetric state, all pairs active.

    The fundamental identity becomes a quartic in beta1 with coefficients
    built from t = t2 - t1, t' = t3 - t1 and T = 1 + t1.  Requires every a_i
    nonzero and pairwise distinct correlation values; exact ties are rejected
    rather than perturbed.
    """
    av = np.asarray(a, dtype=float).reshape(3)
    t = np.asarray(tdiag, dtype=float).reshape(3)
    if not np.all(np.isfinite(av)):
        raise InvalidParameterError("a must be finite")
    if np.any(av == 0.0):
        raise RelabelAxesError("the quartic path needs all three pairs active")
    if t[0] == t[1] or t[0] == t[2] or t[1] == t[2]:
        raise UnsupportedDegeneracyError(
            "exactly equal correlation values; the quartic reduction is ill-posed"
        )
    coeffs = _quartic_coefficients(av, t)
    betas = _select_symmetric_root(av, t, coeffs, beta_limit)
    return float(betas[0]), float(betas[1]), float(betas[2])


def eliminate_and_diagonalize(
    r: RMatrix,
    boosts,
    polynomial_residual: float = 0.0,
    offdiag_tol: float = OFFDIAG_TOL,
) -> tuple[SigmaForm, SolveReport]:
    """Apply solved boosts to R, certify the elimination, read off Sigma.

    `boosts` is either a (BoostX, BoostX) pair acting on the two sides or a
    single GeneralBoost applied symmetrically.  The corner of the raw result
    is s0; the residual symmetric 3x3 block is diagonalized by a rotation and
    its eigenvalues are ordered by descending magnitude for reproducibility.
    """
    if isinstance(boosts, GeneralBoost):
        left = right = boosts.matrix
        boost_kind = "symmetric"
        betas = tuple(float(x) for x in boosts.beta)
        axis = None
    else:
        boost_a, boost_b = boosts
        if boost_a.axis != boost_b.axis:
            raise InvalidParameterError("pair boosts must share an axis")
        left, right = boost_a.matrix, boost_b.matrix
        boost_kind = "pair"
        betas = (boost_a.beta, boost_b.beta)
        axis = boost_a.axis
    q = apply_two_sided(r, left, right)
    raw = q.raw
    offdiag = float(max(np.abs(raw[0, 1:]).max(), np.abs(raw[1:, 0]).max()))
    if offdiag >= offdiag_tol:
        raise SolverInconsistencyError(
            f"linear terms not eliminated: residual {offdiag:.3g}"
        )
    block = raw[1:, 1:]
    sym = 0.5 * (block + block.T)
    if float(np.abs(block - block.T).max()) >= offdiag_tol:
        raise SolverInconsistencyError("transformed spatial block is not symmetric")
    eig = np.linalg.eigvalsh(sym)
    order = np.argsort(-np.abs(eig), kind="stable")
    sigma = SigmaForm(float(raw[0, 0]), eig[order])
    report = SolveReport(
        classification=Classification(GENERIC),
        boost_kind=boost_kind,
        betas=betas,
        axis=axis,
        polynomial_residual=float(polynomial_residual),
        offdiag_residual=offdiag,
        sigma=sigma,
    )
    return sigma, report


def separability_verdict(sigma: SigmaForm, tol: float = VERDICT_TOL) -> Verdict:
    """Separable iff |s1| + |s2| + |s3| <= s0, i.e. sum |t'_i| <= 1."""
    total = sigma.tprime_sum
    witness = total - 1.0
    entangled = witness > tol
    return Verdict(
        kind=ENTANGLED if entangled else SEPARABLE,
        witness=witness,
        criterion="lorentz-normal-form",
        boundary=abs(witness) <= tol,
    )


def _is_unit_axis_vector(v, tol: float) -> bool:
    s = np.sort(np.abs(v))
    return abs(s[2] - 1.0) <= tol and s[1] <= tol


def _match_non_generic(params: HSParams, tol: float = _STRUCTURAL_TOL):
    """Structural match of the four normalized light-speed cases, or None.

    Detection runs before any solver so these states never surface as opaque
    boost-limit failures.
    """
    a, b = params.a, params.b
    tdiag = np.diag(params.t)
    if float(np.abs(tdiag).max()) <= tol:
        if float(np.abs(b).max()) <= tol and _is_unit_axis_vector(a, tol):
            return Classification(
                NON_GENERIC_A,
                "qubit A pure with qubit B maximally mixed; the eliminating "
                "boost for B degenerates to light speed; known verdict: separable",
            )
        if float(np.abs(a).max()) <= tol and _is_unit_axis_vector(b, tol):
            return Classification(
                NON_GENERIC_B,
                "qubit B pure with qubit A maximally mixed; the eliminating "
                "boost for A degenerates to light speed; known verdict: separable",
            )
    if float(np.abs(a - b).max()) <= tol:
        for k in range(3):
            i, j = (k + 1) % 3, (k + 2) % 3
            if abs(a[i]) > tol or abs(a[j]) > tol or abs(a[k]) <= tol:
                continue
            if (
                abs(abs(a[k]) - 0.5) <= tol
                and abs(tdiag[k]) <= tol
                and abs(tdiag[i] - tdiag[j]) <= tol
            ):
                return Classification(
                    NON_GENERIC_C,
                    "symmetric half-strength pair with vanishing axis "
                    "correlation (boundary |2a| = |1 + t1|); known verdict "
                    "recorded: separable",
                )
            if (
                abs(abs(a[k]) - 1.0) <= tol
                and abs(tdiag[k] - 1.0) <= tol
                and abs(tdiag[i]) <= tol
                and abs(tdiag[j]) <= tol
            ):
                return Classification(
                    NON_GENERIC_D,
                    "symmetric unit pair with unit axis correlation (boundary "
                    "|2a| = |1 + t1|); known verdict recorded: always entangled",
                )
    return None


def _permuted(params: HSParams, order) -> HSParams:
    idx = np.asarray(order)
    return HSParams.diagonal(
        params.a[idx], params.b[idx], np.diag(params.t)[idx]
    )


def _no_boost_report(classification: Classification) -> SolveReport:
    return SolveReport(
        classification=classification,
        boost_kind="none",
        betas=(),
        axis=None,
        polynomial_residual=math.nan,
        offdiag_residual=math.nan,
        sigma=None,
    )


def solve_normal_form(
    params: HSParams,
    beta_limit: float = BETA_LIMIT,
    zero_tol: float = _ZERO_TOL,
) -> SolveReport:
    """Full pipeline for diagonal-t parameters: classify, solve, certify.

    Dispatches on the pattern of active linear terms.  Solver failures that
    mean "no physical boost exists" are folded into the classification;
    certificate failures propagate, since they indicate a numerical bug
    rather than a non-generic state.
    """
    tdiag = params.t_diagonal()
    structural = _match_non_generic(params)
    if structural is not None:
        return _no_boost_report(structural)
    a, b = params.a, params.b
    active = (np.abs(a) > zero_tol) | (np.abs(b) > zero_tol)
    n_active = int(active.sum())
    r = r_from_hs(params)
    try:
        if n_active == 0:
            _, report = eliminate_and_diagonalize(r, GeneralBoost(np.zeros(3)))
            return report
        if n_active == 1:
            k = int(np.flatnonzero(active)[0])
            beta_a, beta_b = solve_pair_general(a[k], b[k], tdiag[k], beta_limit)
            poly = _pair_residual(a[k], b[k], tdiag[k], beta_a, beta_b)
            boosts = (BoostX(beta_a, axis=k + 1), BoostX(beta_b, axis=k + 1))
            _, report = eliminate_and_diagonalize(r, boosts, poly)
            return report
        if not params.is_symmetric(zero_tol):
            return _no_boost_report(
                Classification(
                    NO_PHYSICAL_BOOST,
                    "outside the supported boost families: more than one "
                    "axis carries linear terms and the state is not symmetric",
                )
            )
        # put the largest |a_i| on the first axis: every reduced coefficient
        # divides by a_1, so this ordering keeps the polynomial best behaved
        if n_active == 2:
            first, second = sorted(
                (int(i) for i in np.flatnonzero(active)), key=lambda i: -abs(a[i])
            )
            order = (first, second, 3 - first - second)
            work = _permuted(params, order)
            wt = np.diag(work.t)
            b1, b2 = solve_symmetric_cubic(work.a[0], work.a[1], wt, beta_limit)
            poly = abs(
                float(np.polyval(_cubic_coefficients(work.a[0], work.a[1], wt), b1))
            )
            beta = np.zeros(3)
            beta[np.asarray(order)] = (b1, b2, 0.0)
        else:
            order = tuple(int(i) for i in np.argsort(-np.abs(a), kind="stable"))
            work = _permuted(params, order)
            wt = np.diag(work.t)
            b1, b2, b3 = solve_symmetric_quartic(work.a, wt, beta_limit)
            poly = abs(float(np.polyval(_quartic_coefficients(work.a, wt), b1)))
            beta = np.zeros(3)
            beta[np.asarray(order)] = (b1, b2, b3)
        _, report = eliminate_and_diagonalize(r, GeneralBoost(beta), poly)
        return report
    except NoPhysicalBoostError as exc:
        return _no_boost_report(Classification(NO_PHYSICAL_BOOST, str(exc)))
    except (UnsupportedDegeneracyError, RelabelAxesError) as exc:
        return _no_boost_report(
            Classification(NO_PHYSICAL_BOOST, f"solver not applicable: {exc}")
        )


def classify(params: HSParams, beta_limit: float = BETA_LIMIT) -> Classification:
    """Generic / one of the four light-speed cases / no-physical-boost."""
    return solve_normal_form(params, beta_limit).classification
