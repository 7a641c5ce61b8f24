"""Fair final rankings for interrupted round-robin leagues.

The package ranks a league that could not finish its schedule. Beyond raw
points it offers the quotient rule (points per match), the generalized
row sum rating with adjustment parameter eps, and the least squares
rating, together with transformations and checks for the fairness axioms
these methods are meant to satisfy.
"""

from .model import (
    GoalTotals,
    IsolatedTeamError,
    MatchesMatrix,
    MatchRecord,
    ModelError,
    PLUS_MINUS_ONE,
    PointSystem,
    SelfMatchError,
    Team,
    THREE_ONE_ZERO,
    Tournament,
    UnknownTeamError,
    build_tournament,
    goal_totals,
    matches_matrix,
)
from .scoring import (
    NormalizedScoreVector,
    ScoreVector,
    normalized_scores,
    quotients,
    score_vector,
)
from .solver import (
    ConnectivityReport,
    DisconnectedGraphError,
    InvalidEpsilonError,
    Laplacian,
    NoConvergenceError,
    RatingVector,
    SolverError,
    connectivity,
    laplacian,
    solve_grs,
    solve_ls_direct,
    solve_ls_iterative,
)
from .policies import (
    DEFAULT_POINTS_LADDER,
    DEFAULT_QUOTIENT_LADDER,
    DEFAULT_RATING_LADDER,
    Policy,
    PolicyKind,
    RankEntry,
    Ranking,
    TieBreak,
    apply_policy,
    kendall_tau_distance,
    rank_by_points,
    rank_by_quotient,
    rank_by_rating,
)
from .transforms import (
    CycleSpec,
    InvalidCycleError,
    MissingRoundDataError,
    NonPositiveScaleError,
    TransformError,
    rescale_points,
    reverse_cycle,
    swap_venues,
    truncate_rounds,
)
from .leagues import available_leagues, fixture_text, league_title, load_league

__version__ = "0.1.0"
