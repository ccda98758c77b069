"""Exact algebra of the accelerated 3n+1 map.

Words over ``{0, 1}`` stand for compositions of ``x -> x/2`` and
``x -> (3x+1)/2``; block words ``0^{k_1}1^{m_1}...0^{k_n}1^{m_n}`` can be
inverted in closed form, which yields explicit infinite families of
numbers whose orbit reaches 1.  All arithmetic is exact.
"""

from .affine import (
    AffineMap,
    CycleSolution,
    LiftedCycle,
    affine_of,
    ck_set,
    fixed_point,
    integer_cycles,
    lift_cycle,
)
from .core import (
    DEFAULT_MAX_STEPS,
    OrbitRecord,
    collatz_length,
    glide,
    orbit,
    step,
    step_z,
    strip_twos,
)
from .enumeration import (
    LevelSet,
    PruneStats,
    compositions,
    inverse_bfs,
    prune_count,
    word_enum,
)
from .errors import (
    BlockError,
    BoundExceeded,
    CollatzError,
    CrossCheckError,
    CutoffExceeded,
    FamilySizeError,
    InconsistencyError,
    NotPeriodic,
    ParityError,
    ResidueCounterexample,
    WordSyntaxError,
)
from .families import (
    FamilyMember,
    FamilyParams,
    corollary_member,
    enumerate_family,
    n_block_member,
    three_block_member,
    two_block_member,
)
from .solver import SolveResult, corollary_naturality, lemma_k, solve_blocks
from .stats import DensityReport, ResidueReport, everett_density, residue_glide_check
from .words import (
    BlockWord,
    Step,
    SWord,
    apply,
    format_word,
    from_blocks,
    inverse_apply,
    parse_blocks,
    parse_word,
    support,
    to_blocks,
    word_of,
)

__version__ = "0.1.0"
