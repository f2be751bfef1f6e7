"""A 3x3 matrix whose determinant is all infinitesimals.

Each representative determinant is close to -eps, yet the set computed by
the signed permutation sum is the whole of o.  Run: python demos/sarrus.py
"""

from extnum import OSLASH, det, is_nonsingular, laplace, parse_matrix, rank_report, verify_inverse

a = parse_matrix("[[1+o, 0, 0],[0, 1, 1+eps],[0, 1, 1]]")
print("A =", a)
print("det A =", det(a))

r = laplace(a, 0)
print("expansion along column 1 =", r.left, "|", r.relation.value, "det")

# exact inverse of the representative matrix
b = parse_matrix("[[1, 0, 0],[0, -1/eps, 1/eps + 1],[0, 1/eps, -1/eps]]")
print("B =", b)
print("non-singular:", is_nonsingular(a))
print("B inverts A up to o:", verify_inverse(a, b, OSLASH).ok)

for line in rank_report(a, samples=200).lines():
    print(line)
