"""Closed-form upper bounds on cluster-size moments.

Two bound families for a connected D-regular graph on N vertices with edge
probability p, written in terms of nu = (D-1)p and q = 1-p:

* branching bounds: the first two moments of the total progeny of the
  truncated branching envelope (horizon R = N-1) bound E(S) and E(S^2);
* isolation bounds: N - (N-1) q^D and its second-moment analogue, driven by
  the probability q^D that a vertex has no open incident edge.

Neither family dominates the other, so :func:`best_bounds` takes the
componentwise minimum.  All formulas handle the removable singularity at
nu = 1 by switching to the analytic limit inside a small window.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadParameterError
from .percolation import _check_probability

__all__ = [
    "BoundParams",
    "MomentPair",
    "MOMENT_KINDS",
    "branching_total_first_moment",
    "branching_total_second_moment",
    "branching_bounds",
    "isolation_bounds",
    "best_bounds",
]

# Width of the removable-singularity window around nu = 1.
NU_WINDOW = 1e-9

MOMENT_KINDS = ("branching", "isolation", "combined", "exact", "estimate")


@dataclass(frozen=True)
class MomentPair:
    """A (first, second) moment value pair tagged with its provenance kind."""

    first: float
    second: float
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in MOMENT_KINDS:
            raise BadParameterError(
                f"kind must be one of {MOMENT_KINDS}, got {self.kind!r}"
            )
        slack = 1e-9 * (1.0 + abs(self.second))
        if self.first < 1.0 - slack:
            raise BadParameterError(f"first moment {self.first} below 1")
        if self.second < self.first - slack:
            raise BadParameterError(
                f"second moment {self.second} below first moment {self.first}"
            )


@dataclass(frozen=True)
class BoundParams:
    """Graph-level inputs for the bound formulas, with derived quantities.

    ``nu = (degree-1)*p`` is the subcritical/supercritical dial of the
    branching envelope, ``q = 1-p``, and ``horizon = n_vertices - 1`` is the
    longest possible open path, hence the truncation depth.
    """

    degree: int
    n_vertices: int
    p: float
    nu: float = field(init=False)
    q: float = field(init=False)
    horizon: int = field(init=False)

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise BadParameterError(f"degree must be >= 1, got {self.degree}")
        if self.n_vertices < 2:
            raise BadParameterError(
                f"need at least 2 vertices, got {self.n_vertices}"
            )
        _check_probability(self.p)
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "nu", (self.degree - 1) * self.p)
        object.__setattr__(self, "q", 1.0 - self.p)
        object.__setattr__(self, "horizon", self.n_vertices - 1)


def _geometric_sum(nu: float, horizon: int) -> float:
    """sum_{n=0}^{horizon-1} nu^n, with the nu -> 1 limit patched in."""
    if abs(1.0 - nu) < NU_WINDOW:
        return float(horizon)
    return (1.0 - nu**horizon) / (1.0 - nu)


def _variance_kernel(nu: float, horizon: int) -> float:
    """Covariance kernel sum_{m=1}^{R} nu^(R-m) G_m^2, G_m = 1+nu+...+nu^(m-1).

    Algebraically this equals the collapsed bracket
    ((1-nu^R)(1+nu^(R+1))/(1-nu) - 2R nu^R) / (1-nu)^2, but the bracket
    cancels catastrophically near nu = 1 while this sum has only nonnegative
    terms.  Inside the singular window the exact nu = 1 limit is returned:
    R(R+1)(2R+1)/6, the sum of the first R squares, which is also what the
    sum degenerates to there.
    """
    r = horizon
    if abs(1.0 - nu) < NU_WINDOW:
        return r * (r + 1) * (2 * r + 1) / 6.0
    partial = 1.0  # G_m, starting at G_1
    power = 1.0  # nu^(m-1)
    acc = 1.0  # Horner form of sum nu^(R-m) G_m^2
    for _ in range(r - 1):
        power *= nu
        partial += power
        acc = acc * nu + partial * partial
    return acc


def branching_total_first_moment(degree: int, p: float, horizon: int) -> float:
    """E of the branching total 1 + X_1 + ... + X_horizon.

    Equals 1 + D p (1 + nu + ... + nu^(horizon-1)) since each of the D
    first-generation lines is a geometric cascade with ratio nu.
    """
    if degree < 1:
        raise BadParameterError(f"degree must be >= 1, got {degree}")
    if horizon < 1:
        raise BadParameterError(f"horizon must be >= 1, got {horizon}")
    p = _check_probability(p)
    nu = (degree - 1) * p
    return 1.0 + degree * p * _geometric_sum(nu, horizon)


def branching_total_second_moment(degree: int, p: float, horizon: int) -> float:
    """E of the squared branching total, truncated at the horizon.

    Mean squared plus the variance D p (1-p) * kernel(nu, horizon); the
    kernel collapses the double sum of generation covariances.
    """
    mean = branching_total_first_moment(degree, p, horizon)
    nu = (degree - 1) * p
    return mean**2 + degree * p * (1.0 - p) * _variance_kernel(nu, horizon)


def _variance_term_expanded(degree: int, p: float, horizon: int) -> float:
    """Variance of the branching total before algebraic collapse.

    Splits the variance into the generation-variance diagonal and the
    cross-generation covariance sum, each kept in raw form.  Not patched at
    nu = 1; used to cross-check the collapsed kernel away from that point.
    """
    p = _check_probability(p)
    nu = (degree - 1) * p
    r = horizon
    g = _geometric_sum(nu, r)
    diag = degree * p * (1.0 - p) * g * g
    if nu == 0.0:
        return diag
    inner = (1.0 - nu ** (2 * r - 1)) / (1.0 - nu) - (2 * r - 1) * nu ** (r - 1)
    cross = degree * p * nu * (1.0 - p) / (1.0 - nu) ** 2 * inner
    return diag + cross


def branching_bounds(params: BoundParams) -> MomentPair:
    """Moment bounds from the truncated branching envelope."""
    return MomentPair(
        first=branching_total_first_moment(params.degree, params.p, params.horizon),
        second=branching_total_second_moment(params.degree, params.p, params.horizon),
        kind="branching",
    )


def isolation_bounds(params: BoundParams) -> MomentPair:
    """Moment bounds from the isolated-vertex probability q^D.

    S <= N minus the number of isolated vertices other than the start, so
    E(S) <= N - (N-1) q^D; squaring before taking expectations gives the
    second-moment form with the pair term q^(2D-1) (two isolated vertices
    share at most one potential edge on a regular graph, none if D >= 2 and
    they are non-adjacent, one if adjacent; 2D-1 closed edges suffice).
    """
    n, d, q = params.n_vertices, params.degree, params.q
    first = n - (n - 1) * q**d
    second = n * n - (n - 1) * (2 * n - 1) * q**d + (n - 1) * (n - 2) * q ** (2 * d - 1)
    return MomentPair(first=first, second=second, kind="isolation")


def best_bounds(params: BoundParams) -> MomentPair:
    """Componentwise minimum of the two bound families."""
    a = branching_bounds(params)
    b = isolation_bounds(params)
    return MomentPair(
        first=min(a.first, b.first),
        second=min(a.second, b.second),
        kind="combined",
    )
