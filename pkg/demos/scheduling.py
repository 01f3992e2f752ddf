"""Start times for three jobs that must finish two milestones exactly on time.

Milestone i completes at max_j (d[i][j] + start[j]); a duration of -inf means
job j does not feed milestone i. Asking for exact completion times is a
max-plus system. The region lists every admissible start schedule, and the
greatest solution is the latest schedule that still meets both targets.
"""

from maxblank import Matrix, MaxPlus, SearchStats, Vector, build_grid, greatest_solution, solve, verify

mp = MaxPlus()
durations = Matrix(mp, [[3, 5, "-inf"], [2, "-inf", 4]])
targets = Vector(mp, [10, 9])

stats = SearchStats()
region = solve(durations, targets, stats=stats)
print("admissible schedules:", region)
print("latest schedule:", greatest_solution(durations, targets).format())
print(f"search: {stats.choices} choice functions, {stats.nodes} nodes, {stats.pruned} pruned")

grid = build_grid(durations, targets)
bad = [v for v in grid if (v in region) != verify(durations, targets, v)]
print(f"checked {grid.size} probe schedules, disagreements: {len(bad)}")
