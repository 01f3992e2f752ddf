"""Subsets of {a, b, c} with union as join and intersection as product.

This order is not total, so the interval construction does not apply.
The solution set still has a largest element, and every vector between a
solution and that largest one is again a solution. The oracle checks this
by enumeration.
"""

from maxblank import Matrix, PowerSet, Vector, check_joinblank_structure, enumerate_solutions, mat_vec

ps = PowerSet.of_size(3)
A = Matrix(ps, [["{a,b}", "{c}"], ["{b}", "{a,c}"]])
w = mat_vec(A, Vector(ps, ["{a}", "{c}"]))

X = enumerate_solutions(A, w)
report = check_joinblank_structure(X, ps, 2)
print(f"{len(X)} solutions")
for v in sorted(X, key=lambda v: v.format()):
    print("  ", v.format())
print("structure holds:", report.passed, " largest:", report.terminal.format() if report.terminal else None)
