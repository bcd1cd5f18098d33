# Caps of the search-heavy operations; the CLI overrides them with flags.
SIMPLEX_CAP = 5000
ORBIT_BUDGET = 20000
# Zero rows appended to a matrix truncation so that row transpositions have room.
SPARE_ROWS = 1

DEFAULT_SEED = 20231
# Offset of the deep tail points used by the box oracles.
TAIL_DEPTH = 40
# Random samples per check in the selftest verb.
SELFTEST_SAMPLES = 300
