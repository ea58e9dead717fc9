"""Default configuration.

The application reads every setting with ``getattr(config, NAME, default)``,
so any module or object exposing a subset of these names can replace it.
"""

SIGNATURE_CONVENTION = "mostly-plus"

GO_SAMPLES = 100
GO_SEED = 0
GO_GRID_DEPTH = None

SEARCH_GRID = ("-2", "-1", "0", "1", "2")
SEARCH_SAMPLES = 50
SEARCH_JOBS = 1

LOG_LEVEL = "WARNING"
