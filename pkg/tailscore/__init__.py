"""
TailScore
Identification and scoring functions for tail risk measures.
"""

# Handle versioneer
from ._version import get_versions
versions = get_versions()
__version__ = versions['version']
__git_revision__ = versions['full-revisionid']
del get_versions, versions

__documentation_web__ = 'https://tailscore.readthedocs.io'
__github_web__ = 'https://github.com/tailscore/tailscore'
__github_issues_web__ = __github_web__ + '/issues'

# Add imports here
from . import distribution
from . import building_blocks
from . import risk_measures
from . import identification
from . import scoring
from . import proper_scoring
from . import estimation
from . import backtest
from . import verification
from . import io
from .distribution import DiscreteDistribution, make_discrete
from .scoring import ScoreSpec, FamilySpec
from .identification import IdSpec
from . import demo as demo
