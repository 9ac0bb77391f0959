"""Overlay drawings of two normal curves and bigon removal.

A drawing fixes, for every edge, the interleaving of the crossing points of
curve 0 (``a``) and curve 1 (``b``) from tail to head.  Inside a triangle the
normal arcs become chords of a disk, and an a-chord crosses a b-chord exactly
when their endpoints interleave on the boundary circle.  So the interleavings
determine the whole picture.

The arrangement of chords and triangle sides is built per triangle as a
planar graph with an explicit rotation system; its faces are glued across
the edge segments between consecutive crossing points, giving the
complementary regions of a and b.  A region is a bigon when it is a disk
(faces minus glued segments equals one), reaches no puncture, and has two
corners at distinct crossings.  Swapping the a-point and b-point at the ends
of each glued segment of a bigon pushes b across it and removes both corner
crossings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curves import corner_counts
from .surface import IdealTriangulation


@dataclass
class Face:
    triangle: int
    touches_puncture: bool = False
    corners: list[tuple[int, int]] = field(default_factory=list)  # (triangle, crossing id)
    segments: list[tuple[int, int]] = field(default_factory=list)  # (edge, slot)


@dataclass
class Region:
    faces: list[int]
    segments: set[tuple[int, int]]
    touches_puncture: bool
    corners: list[tuple[int, int]]

    @property
    def euler_characteristic(self) -> int:
        return len(self.faces) - len(self.segments)

    @property
    def is_bigon(self) -> bool:
        return (not self.touches_puncture and self.euler_characteristic == 1
                and len(self.corners) == 2 and self.corners[0] != self.corners[1])


class Drawing:
    """Both curves drawn in normal position with chosen interleavings."""

    def __init__(self, t: IdealTriangulation, wa, wb, order: list[list[int]] | None = None):
        self.t = t
        self.w = (tuple(wa), tuple(wb))
        self.counts = (corner_counts(t, wa), corner_counts(t, wb))
        if order is None:
            # canonical stacking: every a-strand before every b-strand
            order = [[0] * wa[e] + [1] * wb[e] for e in range(t.num_edges)]
        self.order = order

    # -- per-triangle geometry ----------------------------------------------------------

    def _side_points(self, s: int, i: int) -> list[tuple[int, int, int]]:
        """Points on side i of triangle s in side order: (curve, curve position, edge slot index)."""
        t = self.t
        e = t.triangles[s][i]
        seq = self.order[e]
        seen = [0, 0]
        pts = []
        for idx, lab in enumerate(seq):
            pts.append((lab, seen[lab], idx))
            seen[lab] += 1
        if t.orientations[s][i] == 1:
            return pts
        out = []
        for lab, q, idx in reversed(pts):
            out.append((lab, self.w[lab][e] - 1 - q, idx))
        return out

    def _triangle(self, s: int):
        """Boundary nodes and chords of triangle ``s``.

        Boundary nodes run counterclockwise: corner 0, side 2, corner 1,
        side 0, corner 2, side 1.  Each node is ``('c', k)`` or
        ``('p', side, curve, curve_pos, edge_idx)``.
        """
        t = self.t
        nodes: list[tuple] = []
        where: dict[tuple[int, int, int], int] = {}
        for k, side in ((0, 2), (1, 0), (2, 1)):
            nodes.append(("c", k))
            for lab, p, idx in self._side_points(s, side):
                where[(side, lab, p)] = len(nodes)
                nodes.append(("p", side, lab, p, idx))
        chords: list[tuple[int, int, int]] = []  # (curve, node u, node v)
        for lab in (0, 1):
            cnt = self.counts[lab][s]
            sw = [self.w[lab][e] for e in t.triangles[s]]
            for k in range(3):
                for p in range(cnt[k]):
                    u = where[((k + 2) % 3, lab, p)]
                    v = where[((k + 1) % 3, lab, sw[(k + 1) % 3] - 1 - p)]
                    chords.append((lab, u, v))
        return nodes, chords

    @staticmethod
    def _crosses(c1, c2) -> bool:
        u1, u2 = sorted(c1[1:])
        return (u1 < c2[1] < u2) != (u1 < c2[2] < u2)

    def crossings(self) -> int:
        total = 0
        for s in range(self.t.num_triangles):
            _, chords = self._triangle(s)
            a = [c for c in chords if c[0] == 0]
            b = [c for c in chords if c[0] == 1]
            total += sum(self._crosses(x, y) for x in a for y in b)
        return total

    # -- faces ---------------------------------------------------------------------

    def _faces(self, s: int) -> list[Face]:
        nodes, chords = self._triangle(s)
        B = len(nodes)
        a = [c for c in chords if c[0] == 0]
        b = [c for c in chords if c[0] == 1]
        xid: dict[tuple[int, int], int] = {}
        for ia, ca in enumerate(a):
            for ib, cb in enumerate(b):
                if self._crosses(ca, cb):
                    xid[(ia, ib)] = B + len(xid)

        def chain(chord, crossing_vertices_with_key):
            # vertices along the chord from its first node to its second
            u, v = chord[1], chord[2]
            ordered = sorted(crossing_vertices_with_key, key=lambda kv: (kv[0] - u) % B)
            return [u] + [x for _, x in ordered] + [v]

        along: dict[tuple[str, int], list[int]] = {}
        # order of crossings along each chord: by the other chord's endpoint
        # on the counterclockwise arc from this chord's first node
        for ia, ca in enumerate(a):
            items = []
            for ib, cb in enumerate(b):
                x = xid.get((ia, ib))
                if x is not None:
                    p = cb[1] if (cb[1] - ca[1]) % B < (ca[2] - ca[1]) % B else cb[2]
                    items.append((p, x))
            along[("a", ia)] = chain(ca, items)
        for ib, cb in enumerate(b):
            items = []
            for ia, ca in enumerate(a):
                x = xid.get((ia, ib))
                if x is not None:
                    p = ca[1] if (ca[1] - cb[1]) % B < (cb[2] - cb[1]) % B else ca[2]
                    items.append((p, x))
            along[("b", ib)] = chain(cb, items)

        # neighbours along chords
        adj: dict[int, dict[int, int]] = {v: {} for v in range(B + len(xid))}
        for seq in along.values():
            for k in range(len(seq) - 1):
                # key: the chord endpoint the step points towards
                adj[seq[k]][seq[k + 1]] = seq[-1]
                adj[seq[k + 1]][seq[k]] = seq[0]
        rot: dict[int, list[int]] = {}
        for v in range(B):
            nxt, prv = (v + 1) % B, (v - 1) % B
            rot[v] = [nxt] + list(adj[v]) + [prv]
        for x in range(B, B + len(xid)):
            rot[x] = sorted(adj[x], key=lambda nb: adj[x][nb])
        pos = {v: {nb: k for k, nb in enumerate(r)} for v, r in rot.items()}

        faces: list[Face] = []
        used = set()
        half_edges = [(u, w) for u in rot for w in rot[u]]
        for he in half_edges:
            if he in used:
                continue
            cyc = []
            cur = he
            while cur not in used:
                used.add(cur)
                cyc.append(cur)
                u, w = cur
                r = rot[w]
                nxt = r[(pos[w][u] - 1) % len(r)]
                cur = (w, nxt)
            # the outer face runs clockwise along the boundary
            if any(u < B and w < B and w == (u - 1) % B for u, w in cyc):
                continue
            f = Face(s)
            for u, w in cyc:
                if u >= B:
                    f.corners.append((s, u))
                elif nodes[u][0] == "c":
                    f.touches_puncture = True
                if u < B and w == (u + 1) % B:
                    f.segments.append(self._segment(s, nodes, u))
            faces.append(f)
        return faces

    def _segment(self, s: int, nodes, u: int) -> tuple[int, int]:
        """Edge slot of the boundary segment from node u to node u+1."""
        t = self.t
        node = nodes[u]
        nxt = nodes[(u + 1) % len(nodes)]
        side = node[1] if node[0] == "p" else (nxt[1] if nxt[0] == "p" else None)
        if side is None:
            # empty side between two corners: corner k then corner k+1 spans side k+2
            side = (node[1] + 2) % 3
        e = t.triangles[s][side]
        n = len(self.order[e])
        if node[0] == "c":
            k_side = 0
        else:
            # side-order index of this point plus one
            k_side = self._side_index(s, side, node) + 1
        slot = k_side if t.orientations[s][side] == 1 else n - k_side
        return e, slot

    def _side_index(self, s, side, node) -> int:
        e = self.t.triangles[s][side]
        idx = node[4]
        return idx if self.t.orientations[s][side] == 1 else len(self.order[e]) - 1 - idx

    def regions(self) -> list[Region]:
        faces: list[Face] = []
        for s in range(self.t.num_triangles):
            faces.extend(self._faces(s))
        parent = list(range(len(faces)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        by_seg: dict[tuple[int, int], list[int]] = {}
        for k, f in enumerate(faces):
            for seg in f.segments:
                by_seg.setdefault(seg, []).append(k)
        for seg, fs in by_seg.items():
            assert len(fs) == 2, f"segment {seg} bounds {len(fs)} faces"
            ra, rb = find(fs[0]), find(fs[1])
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, list[int]] = {}
        for k in range(len(faces)):
            groups.setdefault(find(k), []).append(k)
        out = []
        for members in groups.values():
            segs = {seg for k in members for seg in faces[k].segments}
            out.append(Region(
                faces=members,
                segments=segs,
                touches_puncture=any(faces[k].touches_puncture for k in members),
                corners=[c for k in members for c in faces[k].corners],
            ))
        return out

    def bigons(self) -> list[Region]:
        return [r for r in self.regions() if r.is_bigon]

    def remove_bigon(self, region: Region) -> None:
        for e, slot in region.segments:
            seq = self.order[e]
            lo, hi = seq[slot - 1], seq[slot]
            assert {lo, hi} == {0, 1}, f"bigon segment on edge {e} not between an a-point and a b-point"
            seq[slot - 1], seq[slot] = hi, lo


def reference_intersection(t: IdealTriangulation, wa, wb) -> tuple[int, Drawing]:
    """Minimal crossing count by repeated bigon removal; also returns the final drawing."""
    d = Drawing(t, wa, wb)
    n = d.crossings()
    while True:
        found = d.bigons()
        if not found:
            return n, d
        d.remove_bigon(found[0])
        m = d.crossings()
        assert m == n - 2, f"bigon removal changed crossings {n} -> {m}"
        n = m
