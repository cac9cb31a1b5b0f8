from .distinguish import NoSpoilerWin, extract_distinguishing
from .interactive import play_interactive
from .policies import (
    DuplicatorPolicy, IsomorphismPolicy, LowestUnchosenPolicy, PolicyMismatch, Thm12Policy, Thm2Policy,
    registered_policy, verify_policy,
)
from .rules import LEFT, RIGHT, Configuration, partial_iso_check
from .solver import EFSolver, GameOutcome, Player, SolverBudgetExceeded, solve
