"""Slow independent oracles used only by the tests."""

import itertools

from curvelab.curves import is_admissible, is_essential_curve

ROTATIONS = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
REFLECTIONS = ((0, 2, 1), (2, 1, 0), (1, 0, 2))


def compositions(n, total):
    """All n-tuples of nonnegative integers with sum <= total."""
    if n == 0:
        yield ()
        return
    for v in range(total + 1):
        for rest in compositions(n - 1, total - v):
            yield (v,) + rest


def brute_force_census(t, bound):
    return sorted(v for v in compositions(t.num_edges, bound)
                  if any(v) and is_admissible(t, v) and is_essential_curve(t, v))


def brute_force_symmetries(t):
    """Every triangle permutation with a uniform side-map type that respects the side gluing."""
    found = set()
    n = t.num_triangles
    for group in (ROTATIONS, REFLECTIONS):
        for tm in itertools.permutations(range(n)):
            for sm in itertools.product(group, repeat=n):
                if all(t.glue[(tm[a], sm[a][i])] == (tm[u], sm[u][j])
                       for (a, i), (u, j) in t.glue.items()):
                    found.add((tm, sm))
    return found
