PALETTE = (1, 2, 3, 4)

# chromatic_small reports this value for "five or more"
AT_LEAST_FIVE = 5

# Largest vertex count for which homogeneous sets are enumerated subset by subset
EXHAUSTIVE_LIMIT = 12

EXIT_FOUR_COLORABLE = 0
EXIT_NOT_FOUR_COLORABLE = 1
EXIT_OUT_OF_CLASS = 2
EXIT_INVARIANT_VIOLATION = 3

# difftest defaults
DIFFTEST_COUNT = 500
DIFFTEST_NMIN = 6
DIFFTEST_NMAX = 12
DIFFTEST_MAX_N = 14
DIFFTEST_PROBABILITIES = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
DIFFTEST_WORKERS = 4
# Rejection sampling gives up on an instance slot after this many draws
GENERATE_MAX_ATTEMPTS = 200
# Disagreements are written here unless the campaign names another directory
DIFFTEST_REPLAY_DIR = 'replays'
