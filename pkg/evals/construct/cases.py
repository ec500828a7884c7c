# Parameter grid for the construction checks: (s, t, m) for s, t in 1..3 and s+t <= m <= 8

BUILD_GRID = [(s, t, m) for s in range(1, 4) for t in range(1, 4) for m in range(s + t, 9)]

# (s, t, m) with the rank the spike must have, m + s - t
RANK_EXAMPLES = [
    ((1, 1, 4), 4),
    ((1, 2, 4), 3),
    ((2, 1, 4), 5),
    ((2, 2, 4), 4),
    ((2, 3, 7), 6),
    ((3, 2, 7), 8),
    ((3, 3, 6), 6),
]
