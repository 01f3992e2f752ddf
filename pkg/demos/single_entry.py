"""The smallest interesting max-plus system: one equation, one unknown.

    inf (x) v = inf

Over max-plus, inf + v = inf for every v except v = -inf, where the
annihilator wins. The solution set is therefore the half-open interval
(-inf, inf], and the solver reports exactly that.
"""

from maxblank import Matrix, MaxPlus, Vector, solve, verify

mp = MaxPlus()
A = Matrix(mp, [["inf"]])
w = Vector(mp, ["inf"])

region = solve(A, w)
print("region:", region)

for probe in ("-inf", "-1000", "0", "7/2", "inf"):
    v = Vector(mp, [probe])
    print(f"  v = {probe:>6}: in region {v in region!s:5}  satisfies {verify(A, w, v)}")
