"""Intersection numbers from linked lifts in the dual spine.

The dual graph of an ideal triangulation is a trivalent ribbon graph onto
which the punctured surface retracts.  A normal curve is a reduced cyclic
path in it, and lifts of two curves to the universal cover are bi-infinite
geodesics in a planar tree.  Lifts cross exactly when their ends are
linked, which happens only along a shared segment that one path enters and
leaves on opposite sides of the other.  Counting linked shared segments,
once per alignment of the two cyclic paths, gives i(a, b).
"""

from __future__ import annotations

from typing import Sequence

from .surface import IdealTriangulation

Path = Sequence[tuple[int, int]]


def _linked_segments(glue, A: Path, B: Path) -> int:
    m, n = len(A), len(B)
    total = 0
    for i in range(m):
        ai = A[i]
        prev_a = A[i - 1]
        for j in range(n):
            if B[j] != ai or B[j - 1] == prev_a:
                continue
            L = 1
            while A[(i + L) % m] == B[(j + L) % n]:
                L += 1
                if L > m + n:
                    raise ValueError("curves share an axis; they are the same curve")
            s = ai[1]
            in_a = glue[prev_a][1]
            tv, s_end = glue[A[(i + L - 1) % m]]
            out_a = A[(i + L) % m][1]
            if (in_a == (s + 1) % 3) == (out_a == (s_end + 1) % 3):
                total += 1
    return total


def reverse_path(t: IdealTriangulation, path: Path) -> list[tuple[int, int]]:
    return [t.glue[h] for h in reversed(path)]


def intersection_from_paths(t: IdealTriangulation, A: Path, B: Path) -> int:
    return _linked_segments(t.glue, A, B) + _linked_segments(t.glue, A, reverse_path(t, B))
