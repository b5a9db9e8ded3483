"""Build finite biracks from operation tables and inspect their structure.

A birack on X = {1, ..., n} is an invertible map B(x, y) = (B1, B2) on
pairs satisfying sideways invertibility, diagonal bijectivity and the
set-theoretic Yang-Baxter equation.  In diagram terms, B1(o, u) is the
new label of a strand passing under o, and B2(o, u) the new label of a
strand passing over u, at a positive crossing.
"""

from biracks import (
    AxiomViolation,
    classify,
    constant_action,
    cycle_string,
    format_matrix,
    from_matrix,
    parse_cycles,
    to_matrix,
    verify_axioms,
)

# A 4-element birack given by its block matrix [B1 | B2].  Row i, column j
# of the left block holds B1(x_j, x_i); row i, column j of the right block
# holds B2(x_i, x_j).  Entries are 1-indexed.
matrix = [
    [2, 2, 2, 2, 1, 1, 1, 1],
    [1, 1, 1, 1, 2, 2, 2, 2],
    [3, 3, 3, 3, 4, 4, 4, 4],
    [4, 4, 4, 4, 3, 3, 3, 3],
]
b = from_matrix(4, matrix)
print("kink map:", cycle_string(b.pi))   # label change through a positive kink
print("rank N:  ", b.rank)               # framing period of labeling counts
print("flags:   ", classify(b).flags())
print()

# The same birack arises as a constant action birack B(x,y) = (tau(y), rho(x))
# for the commuting permutations tau = (1 2), rho = (3 4).
tau = parse_cycles("(1 2)", 4)
rho = parse_cycles("(3 4)", 4)
assert to_matrix(constant_action(tau, rho)) == matrix
print("constant_action((1 2), (3 4)) reproduces the matrix; its kink map is")
print("tau o rho =", cycle_string(b.pi))
print()

# Verification explains *why* a candidate fails.  Constant action tables
# need tau and rho to commute; (1 2) and (2 3) do not, and the failure
# shows up as a Yang-Baxter violation with a witness triple.
tau_bad = parse_cycles("(1 2)", 3)
rho_bad = parse_cycles("(2 3)", 3)
b1 = [[tau_bad[y] for y in range(3)] for _ in range(3)]
b2 = [[rho_bad[x]] * 3 for x in range(3)]
print(verify_axioms(b1, b2).describe())
print()

# from_matrix raises instead, carrying the same machine-readable reason.
try:
    from_matrix(2, [[1, 1, 2, 2], [1, 2, 1, 1]])
except AxiomViolation as exc:
    print("rejected:", exc)
print()

print("matrix file form of the 4-element birack:")
print(format_matrix(b))
