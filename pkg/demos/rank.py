"""Dependence of vectors of external numbers and the three ranks of a matrix.

Run: python demos/rank.py
"""

from extnum import dependence, parse_matrix, parse_vector, rank_report

cases = {
    "dependent": ["[1+o, eps*o, -2+eps*L]", "[-2+o, eps*L, 4+eps*L]"],
    "independent": ["[1+o, eps*o]", "[o, 1+eps*L]"],
    "neutrix vector": ["[o, o]", "[0, eps]"],
}
for name, texts in cases.items():
    vs = [parse_vector(t) for t in texts]
    print(f"{name}: {' '.join(texts)}")
    for line in dependence(vs).lines():
        print("   ", line)

a = parse_matrix("[[1+o, 2+o, -1+eps*L],[-2, -4+eps, 2+eps*o]]")
print("A =", a)
for line in rank_report(a).lines():
    print("   ", line)
