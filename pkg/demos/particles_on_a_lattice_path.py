"""
Reading particles off a lattice path
====================================

A path with heights h_1, ..., h_(L-1) and h_j + h_(j+1) <= k can be pushed
back, one elementary move at a time, to a packed minimal path.  What remains
is a particle content (how many particles of each charge) and a list of move
counts.  Replaying the moves rebuilds the path, so the pair is a complete
description.
"""

from collections import Counter

from agpoly.fermigas import (
    LatticePath,
    apply_moves,
    contents,
    generate_paths,
    minimal_path,
    partition_function,
    reduce_to_minimal,
)
from agpoly.suites import WORKED_PATH

k = 8
path = LatticePath(WORKED_PATH)
content, moves = reduce_to_minimal(path, k)
print("path    :", path)
print("content :", content.n)
print("moves   :", moves)
print("minimal :", minimal_path(content, k, path.L, k + 1))
print("replayed correctly:", apply_moves(content, moves, k, path.L, k + 1, k + 1) == path)

# each content contributes a product of q-binomials; the pieces add up
k, L, i, ip = 2, 7, 3, 3
tally = Counter()
for c in contents(k, L):
    n_paths = sum(1 for _ in generate_paths(c, k, L, i, ip))
    if n_paths:
        tally[c.n] = n_paths
        print(f"content {c.n}: {n_paths} paths, Z = {partition_function(c, k, L, i, ip)}")
print("total paths:", sum(tally.values()))
