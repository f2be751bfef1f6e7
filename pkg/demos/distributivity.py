"""Where distributivity and associativity break, and by how much.

Run: python demos/distributivity.py
"""

from extnum import assoc_check, check_identity, correction_identity, nearly_opposite, parse_matrix, parse_scalar

x, y, z = parse_scalar("1"), parse_scalar("-1 + eps"), parse_scalar("1 + o")
print(f"a={x}  b={y}  c={z}")
print("nearly opposite:", nearly_opposite(x, y))
r = check_identity(x, y, z)
print(f"(a+b)c = {r.left}   ac+bc = {r.right}   {r.relation.value}")
left, right = correction_identity(x, y, z)
print(f"with the correction term both sides are {left} and {right}")

x, y = parse_scalar("2 + eps*o"), parse_scalar("3 + eps*L")
r = check_identity(x, y, z)
print(f"a={x}  b={y}: {r.left} vs {r.right}  {r.relation.value}")

a = parse_matrix("[[1, 1],[0, 0]]")
b = parse_matrix("[[1, 0],[-1, 0]]")
c = parse_matrix("[[o],[o]]")
r = assoc_check(a, b, c)
print(f"(AB)C = {r.left}   A(BC) = {r.right}   {r.relation.value}")
