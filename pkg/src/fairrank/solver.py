"""Rating solvers built on the Laplacian of the matches matrix.

Two rating methods share the same right-hand side s (the zero-sum
normalized score vector):

  generalized row sum:  (I + eps * L) x = s         for finite eps > 0
  least squares:        L q = s  with  sum(q) = 0   solved directly or
                                                    by fixed-point iteration

L is positive semidefinite with row sums zero, so I + eps*L is symmetric
positive definite for every eps > 0 and the generalized row sum rating is
always unique. The least squares rating is unique only when the match
graph is connected; the direct solve pins the zero-sum representative by
factoring L + (1/n) * ones, which is positive definite exactly then.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .model import MatchesMatrix
from .scoring import NormalizedScoreVector

__all__ = [
    "SolverError",
    "InvalidEpsilonError",
    "DisconnectedGraphError",
    "NoConvergenceError",
    "Laplacian",
    "ConnectivityReport",
    "RatingVector",
    "laplacian",
    "connectivity",
    "solve_grs",
    "solve_ls_direct",
    "solve_ls_iterative",
]

RESIDUAL_TOL = 1e-9
ITERATION_TOL = 1e-12
MAX_ITERATIONS = 10_000


class SolverError(RuntimeError):
    """A rating system could not be solved to tolerance."""


class InvalidEpsilonError(ValueError):
    """Epsilon must be finite and positive; the limits are other policies."""


class DisconnectedGraphError(SolverError):
    """The match graph is disconnected, so the least squares rating is not unique."""

    def __init__(self, report: "ConnectivityReport") -> None:
        groups = "; ".join(", ".join(c) for c in report.components)
        super().__init__(
            f"match graph has {len(report.components)} components ({groups}); "
            "the least squares rating is only defined on a connected graph"
        )
        self.report = report


class NoConvergenceError(SolverError):
    """The fixed-point iteration did not converge within the iteration budget."""

    def __init__(
        self,
        message: str,
        *,
        iterations: int,
        oscillating: bool,
        last_iterates: tuple[np.ndarray, ...],
    ) -> None:
        super().__init__(message)
        self.iterations = iterations
        self.oscillating = oscillating
        self.last_iterates = last_iterates


@dataclass(frozen=True, eq=False)
class Laplacian:
    """L = diag(matches played) - matches matrix, in canonical team order."""

    team_ids: tuple[str, ...]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        mat = np.asarray(self.matrix, dtype=np.float64)
        object.__setattr__(self, "matrix", mat)
        n = len(self.team_ids)
        if mat.shape != (n, n):
            raise ValueError(f"Laplacian must be {n}x{n}, got {mat.shape}")
        if not np.allclose(mat, mat.T, atol=1e-12, rtol=0):
            raise ValueError("Laplacian must be symmetric")
        if np.max(np.abs(mat.sum(axis=1))) > 1e-9:
            raise ValueError("Laplacian rows must sum to zero")


@dataclass(frozen=True)
class ConnectivityReport:
    """Connected components of the match graph, sorted for stable output."""

    connected: bool
    components: tuple[tuple[str, ...], ...]


@dataclass(frozen=True, eq=False)
class RatingVector:
    """A solved rating with enough context to audit how it was produced."""

    team_ids: tuple[str, ...]
    values: np.ndarray
    method: str
    residual_norm: float
    zero_sum_error: float = 0.0
    epsilon: float | None = None
    iterations: int | None = None
    early_iterates: tuple[np.ndarray, ...] | None = None

    def as_mapping(self) -> dict[str, float]:
        return {team: float(v) for team, v in zip(self.team_ids, self.values)}


def laplacian(mm: MatchesMatrix) -> Laplacian:
    """Build the Laplacian of the matches matrix."""
    counts = mm.counts.astype(np.float64)
    mat = np.diag(counts.sum(axis=1)) - counts
    return Laplacian(team_ids=mm.team_ids, matrix=mat)


def _components(adjacency: np.ndarray, team_ids: tuple[str, ...]) -> ConnectivityReport:
    n = len(team_ids)
    seen = [False] * n
    components: list[tuple[str, ...]] = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        members = []
        while stack:
            node = stack.pop()
            members.append(team_ids[node])
            for nbr in np.flatnonzero(adjacency[node]):
                if not seen[nbr]:
                    seen[nbr] = True
                    stack.append(int(nbr))
        components.append(tuple(sorted(members)))
    components.sort(key=lambda c: c[0])
    return ConnectivityReport(connected=len(components) == 1, components=tuple(components))


def connectivity(mm: MatchesMatrix) -> ConnectivityReport:
    """Connected components of the graph whose edges are played pairs."""
    return _components(mm.counts > 0, mm.team_ids)


def _laplacian_components(L: Laplacian) -> ConnectivityReport:
    n = len(L.team_ids)
    off = np.abs(L.matrix) > 1e-12
    np.fill_diagonal(off, False)
    return _components(off, L.team_ids)


def _check_alignment(s: NormalizedScoreVector, L: Laplacian) -> np.ndarray:
    if s.team_ids != L.team_ids:
        raise ValueError("score vector and Laplacian must cover the same teams in the same order")
    return s.as_array()


def solve_grs(
    s: NormalizedScoreVector,
    L: Laplacian,
    epsilon: float | Fraction,
    tol: float = RESIDUAL_TOL,
) -> RatingVector:
    """Solve (I + eps*L) x = s for the generalized row sum rating.

    eps must be a finite positive number. As eps -> 0 the rating order
    approaches the normalized scores; as eps -> infinity it approaches the
    least squares rating, but neither limit is accepted here: use the
    points or least squares policy instead.
    """
    eps = float(epsilon)
    if not math.isfinite(eps) or eps <= 0.0:
        raise InvalidEpsilonError(
            f"epsilon must be finite and positive, got {epsilon!r}; "
            "eps -> 0 is the points order and eps -> infinity the least squares order"
        )
    rhs = _check_alignment(s, L)
    n = len(rhs)
    system = np.eye(n) + eps * L.matrix
    x = cho_solve(cho_factor(system, lower=True), rhs)
    residual = float(np.max(np.abs(system @ x - rhs)))
    if residual > tol:
        raise SolverError(f"generalized row sum residual {residual:.3e} exceeds {tol:.1e}")
    return RatingVector(
        team_ids=s.team_ids,
        values=x,
        method="grs",
        residual_norm=residual,
        zero_sum_error=float(abs(x.sum())),
        epsilon=eps,
    )


def solve_ls_direct(
    s: NormalizedScoreVector,
    L: Laplacian,
    tol: float = RESIDUAL_TOL,
) -> RatingVector:
    """Solve L q = s with sum(q) = 0 by factoring the augmented system.

    The zero-sum constraint is folded in by solving
    (L + (1/n) * ones) q = s, which is symmetric positive definite when
    the match graph is connected and has the same unique solution.
    """
    rhs = _check_alignment(s, L)
    report = _laplacian_components(L)
    if not report.connected:
        raise DisconnectedGraphError(report)
    n = len(rhs)
    system = L.matrix + np.full((n, n), 1.0 / n)
    q = cho_solve(cho_factor(system, lower=True), rhs)
    residual = float(np.max(np.abs(L.matrix @ q - rhs)))
    zero_sum = float(abs(q.sum()))
    if residual > tol or zero_sum > tol:
        raise SolverError(
            f"least squares residual {residual:.3e} / drift {zero_sum:.3e} exceeds {tol:.1e}"
        )
    return RatingVector(
        team_ids=s.team_ids,
        values=q,
        method="ls-direct",
        residual_norm=residual,
        zero_sum_error=zero_sum,
    )


def solve_ls_iterative(
    s: NormalizedScoreVector,
    L: Laplacian,
    tol: float = ITERATION_TOL,
    max_k: int = MAX_ITERATIONS,
) -> RatingVector:
    """Approximate the least squares rating by repeated opponent adjustment.

    With r the largest number of matches played by any team, iterate

        q(0) = s / r
        q(k) = q(k-1) + (1/r) * [ (1/r) * (r*I - L) ]^k s

    Each step folds in opponents one layer deeper: q(1) adjusts by direct
    opponents, q(2) by opponents of opponents, and so on. The iterates
    through q(3) are kept on the result for inspection. The iteration converges
    to the least squares rating on every connected match graph except the
    regular bipartite ones, where successive iterates oscillate; that case
    raises NoConvergenceError and the direct solver remains available.
    """
    rhs = _check_alignment(s, L)
    report = _laplacian_components(L)
    if not report.connected:
        raise DisconnectedGraphError(report)
    r = float(np.max(np.diag(L.matrix)))
    if r <= 0:
        raise SolverError("every team must have played at least one match")

    term = rhs.copy()          # [ (1/r) (r*I - L) ]^k s, starting at k = 0
    q = rhs / r
    early = [q.copy()]
    window = [q.copy()]        # last iterates, for the oscillation diagnostic
    scale = max(float(np.max(np.abs(rhs))), 1.0)
    iterations = None
    for k in range(1, max_k + 1):
        term = term - (L.matrix @ term) / r
        q = q + term / r
        if k <= 3:
            early.append(q.copy())
        window.append(q.copy())
        if len(window) > 3:
            window.pop(0)
        if float(np.max(np.abs(term))) / r <= tol:
            iterations = k
            break

    if iterations is None:
        step = float(np.max(np.abs(window[-1] - window[-2])))
        swing = float(np.max(np.abs(window[-1] - window[0]))) if len(window) == 3 else step
        oscillating = swing <= max(tol * scale, 1e-12) * 10 and step > tol
        detail = (
            "iterates oscillate between two accumulation points, which happens exactly "
            "when the match graph is regular bipartite; the direct least squares solve "
            "still applies"
            if oscillating
            else "no convergence within the iteration budget"
        )
        raise NoConvergenceError(
            f"no convergence after {max_k} iterations (last step {step:.3e}): {detail}",
            iterations=max_k,
            oscillating=oscillating,
            last_iterates=tuple(window),
        )

    residual = float(np.max(np.abs(L.matrix @ q - rhs)))
    return RatingVector(
        team_ids=s.team_ids,
        values=q,
        method="ls-iterative",
        residual_norm=residual,
        zero_sum_error=float(abs(q.sum())),
        iterations=iterations,
        early_iterates=tuple(early),
    )
