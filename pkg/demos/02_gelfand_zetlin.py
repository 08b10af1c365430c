"""Gelfand-Zetlin patterns from diagrams: the Weyl orbit of a lowest weight."""

from hccycles import diagrams as dg

m = [0, 1, 3]  # weakly increasing lowest weight

for w in dg.all_permutations(3):
    pat = dg.gz_pattern(dg.Permutation(w.images), m)
    print(f"w = {w.images}: rows = {pat.rows}  weight = {pat.weight()}")

# Each pattern copies its top row down along the diagram's arrows, so the
# orbit of the lowest weight is enumerated by the n! diagrams; entry m_i
# ends up at position w(i) and the betweenness inequalities always hold.
pat = dg.gz_pattern(dg.Permutation((2, 3, 1)), m)
print("betweenness:", pat.betweenness_holds())
print("weight[w(i)] == m_i:",
      all(pat.weight()[dg.Permutation((2, 3, 1))(i) - 1] == m[i - 1] for i in (1, 2, 3)))

print("JSON (top row first):", pat.to_json())
