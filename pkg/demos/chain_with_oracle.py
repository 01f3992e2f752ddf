"""A two-by-two system over the chain 0 < 1 < 2 < 3 with min as product.

Every region member over a min-based chain is a closed box. Here the whole
solution set is the single box [2, 2] x [0, 3], and brute-force enumeration
of all 16 candidate vectors confirms it.
"""

from maxblank import FiniteChain, Matrix, Vector, enumerate_solutions, greatest_solution, solve

chain = FiniteChain(3)
A = Matrix(chain, [[3, 1], [2, 2]])
w = Vector(chain, [2, 2])

region = solve(A, w)
truth = enumerate_solutions(A, w)

print("region:   ", region)
print("greatest: ", greatest_solution(A, w).format())
print("enumerated:", sorted(tuple(v) for v in truth))
print("agree:    ", all((v in region) == (v in truth) for v in truth) and len(truth) == 4)
