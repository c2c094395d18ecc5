"""Triangulated surfaces with per-triangle metric, vertex identifications and
boundary topology.

A :class:`SurfaceMesh` distinguishes two index spaces:

* *raw vertices*: the coordinate rows as given (a periodic seam is stored
  twice, once per side), used for all per-triangle geometry;
* *nodes*: equivalence classes of raw vertices under the identification
  pairs, used for all connectivity, fields and degrees of freedom.

All geometric quantities (edge lengths, element maps) are evaluated from the
raw coordinates of the owning triangle, so periodic identifications never
produce wrap-around distances.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "MeshError",
    "SurfaceMesh",
    "BoundaryComponent",
    "LinkCSR",
    "euler_characteristic",
    "boundary_components",
    "generate_disk",
    "generate_annulus",
    "generate_cylinder",
    "double_mesh",
    "reflect_function",
    "load_mesh",
    "save_mesh",
    "mesh_to_dict",
]

MESH_FORMAT_VERSION = 1


class MeshError(ValueError):
    """Raised when mesh data violates a structural invariant."""


@dataclass(frozen=True)
class BoundaryComponent:
    """One closed boundary loop.

    ``nodes`` lists node ids in the cyclic order induced by the surface
    orientation (surface on the left of each directed edge).  ``edge_lengths``
    holds the metric length of the edge ``nodes[i] -> nodes[(i+1) % m]``, and
    ``segments`` the raw coordinates of the two endpoints of that edge (taken
    from the owning triangle, which keeps seam edges short).
    """

    nodes: np.ndarray
    edge_lengths: np.ndarray
    segments: np.ndarray

    @property
    def length(self) -> float:
        return float(self.edge_lengths.sum())

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class LinkCSR:
    """Ordered vertex links packed in CSR form.

    For row ``i`` the nodes ``flat[offsets[i]:offsets[i+1]]`` walk the link of
    ``centers[i]`` once, in the cyclic order induced by the triangle
    orientation.  ``next_idx[j]`` is the position of the cyclic successor of
    the link entry at position ``j`` (it wraps within each row).  Open links
    (boundary vertices) store the chain in path order; their wrap entry is
    meaningless and rows flagged open must not be fed to the alternation
    kernels.
    """

    centers: np.ndarray
    flat: np.ndarray
    offsets: np.ndarray
    next_idx: np.ndarray
    closed: np.ndarray

    def subset(self, ids: np.ndarray) -> "LinkCSR":
        """CSR restricted to the rows whose center is in ``ids`` (given order)."""
        ids = np.asarray(ids, dtype=np.int64)
        lens = self.offsets[ids + 1] - self.offsets[ids]
        offsets = np.zeros(len(ids) + 1, dtype=np.int64)
        np.cumsum(lens, out=offsets[1:])
        total = int(offsets[-1])
        pos = (
            np.arange(total, dtype=np.int64)
            - np.repeat(offsets[:-1], lens)
            + np.repeat(self.offsets[ids], lens)
        )
        flat = self.flat[pos]
        next_idx = np.arange(1, total + 1, dtype=np.int64)
        next_idx[offsets[1:] - 1] = offsets[:-1]
        return LinkCSR(
            centers=self.centers[ids],
            flat=flat,
            offsets=offsets,
            next_idx=next_idx,
            closed=self.closed[ids],
        )


def _union_find(n: int, pairs) -> np.ndarray:
    parent = np.arange(n, dtype=np.int64)

    def find(a):
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    for a, b in pairs:
        ra, rb = find(int(a)), find(int(b))
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    for a in range(n):
        find(a)
    return parent


class SurfaceMesh:
    """Oriented triangle mesh with optional metric and identifications.

    Parameters
    ----------
    vertices : (n, 2) array
        Raw vertex coordinates (planar or parameter-domain).
    triangles : (m, 3) int array
        Vertex index triples with a consistent orientation (counterclockwise
        for planar meshes).
    metric : (m, 3) array, optional
        Per-triangle symmetric positive-definite tensor ``[g11, g12, g22]``
        in the triangle's coordinate frame.  ``None`` means Euclidean.
    identifications : sequence of (int, int), optional
        Raw vertex pairs glued into a single node (periodic seams).
    boundary_weight : scalar or (n,) array, optional
        Positive weight sampled at vertices; enters the boundary mass form.
        ``None`` means 1 everywhere.

    Instances are immutable after construction and safe to share between
    threads; all derived topology is validated eagerly so that any instance
    in circulation satisfies the structural invariants.
    """

    def __init__(
        self,
        vertices,
        triangles,
        metric=None,
        identifications=None,
        boundary_weight=None,
    ):
        self.vertices = np.ascontiguousarray(np.asarray(vertices, dtype=np.float64))
        self.triangles = np.ascontiguousarray(np.asarray(triangles, dtype=np.int64))
        if self.vertices.ndim != 2 or self.vertices.shape[1] != 2:
            raise MeshError("vertices must be an (n, 2) array")
        if self.triangles.ndim != 2 or self.triangles.shape[1] != 3:
            raise MeshError("triangles must be an (m, 3) array")
        if not np.all(np.isfinite(self.vertices)):
            raise MeshError("non-finite vertex coordinate")
        n_raw = len(self.vertices)
        if self.triangles.size and (
            self.triangles.min() < 0 or self.triangles.max() >= n_raw
        ):
            raise MeshError("triangle index out of range")
        if len(self.triangles) == 0:
            raise MeshError("mesh has no triangles")

        if identifications is None:
            identifications = []
        self.identifications = [(int(a), int(b)) for a, b in identifications]
        for a, b in self.identifications:
            if not (0 <= a < n_raw and 0 <= b < n_raw):
                raise MeshError(f"identification ({a}, {b}) out of range")

        if metric is not None:
            metric = np.ascontiguousarray(np.asarray(metric, dtype=np.float64))
            if metric.shape != (len(self.triangles), 3):
                raise MeshError("metric must be an (m, 3) array of [g11, g12, g22]")
            det = metric[:, 0] * metric[:, 2] - metric[:, 1] ** 2
            tr = metric[:, 0] + metric[:, 2]
            bad = np.nonzero(~((det > 0.0) & (tr > 0.0)))[0]
            if len(bad):
                raise MeshError(f"metric tensor of triangle {bad[0]} is not SPD")
        self.metric = metric

        if boundary_weight is None:
            rho_raw = np.ones(n_raw)
        else:
            rho_raw = np.asarray(boundary_weight, dtype=np.float64)
            if rho_raw.ndim == 0:
                rho_raw = np.full(n_raw, float(rho_raw))
            if rho_raw.shape != (n_raw,):
                raise MeshError("boundary_weight must be scalar or per-vertex")

        self._build_nodes(rho_raw)
        self._build_topology()
        # set by double_mesh: node id on the source mesh for every node here
        self.source_nodes = None
        self.glued_nodes = None

    # ------------------------------------------------------------------ build

    def _build_nodes(self, rho_raw):
        n_raw = len(self.vertices)
        parent = _union_find(n_raw, self.identifications)
        reps = np.unique(parent)
        rank = {int(r): i for i, r in enumerate(reps)}
        self.node_of_vertex = np.array(
            [rank[int(parent[v])] for v in range(n_raw)], dtype=np.int64
        )
        self.n_nodes = len(reps)
        self.node_positions = self.vertices[reps]
        self.tri_nodes = self.node_of_vertex[self.triangles]
        for a, b in self.identifications:
            if abs(rho_raw[a] - rho_raw[b]) > 1e-12 * max(1.0, abs(rho_raw[a])):
                raise MeshError(f"identified vertices ({a}, {b}) carry different rho")
        self.rho = np.empty(self.n_nodes)
        self.rho[self.node_of_vertex] = rho_raw

        degen = np.nonzero(
            (self.tri_nodes[:, 0] == self.tri_nodes[:, 1])
            | (self.tri_nodes[:, 1] == self.tri_nodes[:, 2])
            | (self.tri_nodes[:, 2] == self.tri_nodes[:, 0])
        )[0]
        if len(degen):
            raise MeshError(
                f"triangle {degen[0]} degenerates after identifications"
            )

    def _build_topology(self):
        tn = self.tri_nodes
        m = len(tn)
        # directed edges (p->q, q->r, r->p); each may appear at most once on
        # a consistently oriented manifold
        de = np.empty((3 * m, 2), dtype=np.int64)
        de[0::3] = tn[:, [0, 1]]
        de[1::3] = tn[:, [1, 2]]
        de[2::3] = tn[:, [2, 0]]
        key = de[:, 0] * self.n_nodes + de[:, 1]
        order = np.argsort(key, kind="stable")
        skey = key[order]
        dup = np.nonzero(skey[1:] == skey[:-1])[0]
        if len(dup):
            u, v = de[order[dup[0]]]
            raise MeshError(
                f"directed edge ({u}, {v}) appears twice: "
                "inconsistent orientation or non-manifold edge"
            )
        rev_key = de[:, 1] * self.n_nodes + de[:, 0]
        has_reverse = np.isin(rev_key, key, assume_unique=False)
        self._directed_edges = de
        # rows are laid out strided: row 3*t + s is local edge s of triangle t
        owner = np.empty(3 * m, dtype=np.int64)
        slot = np.empty(3 * m, dtype=np.int64)
        for s in range(3):
            owner[s::3] = np.arange(m)
            slot[s::3] = s
        self._edge_owner_tri = owner
        self._edge_owner_slot = slot

        und = np.sort(de, axis=1)
        self.n_edges = len(np.unique(und[:, 0] * self.n_nodes + und[:, 1]))
        self.n_triangles = m

        bmask = ~has_reverse
        self._boundary_edge_rows = np.nonzero(bmask)[0]
        b_de = de[bmask]
        self.boundary_nodes = np.unique(b_de)
        inode = np.ones(self.n_nodes, dtype=bool)
        inode[self.boundary_nodes] = False
        self.interior_nodes = np.nonzero(inode)[0].astype(np.int64)
        self.is_closed = len(b_de) == 0

        self._walk_boundary(b_de, self._boundary_edge_rows)
        self._build_links(b_de)
        self._components_cache = None
        self._link_subset_cache = {}

    def _edge_length(self, row: int) -> float:
        t = self._edge_owner_tri[row]
        s = self._edge_owner_slot[row]
        a = self.triangles[t, s]
        b = self.triangles[t, (s + 1) % 3]
        d = self.vertices[b] - self.vertices[a]
        if self.metric is None:
            return float(math.hypot(d[0], d[1]))
        g11, g12, g22 = self.metric[t]
        return float(math.sqrt(d[0] * (g11 * d[0] + g12 * d[1]) + d[1] * (g12 * d[0] + g22 * d[1])))

    def _walk_boundary(self, b_de, b_rows):
        succ = {}
        row_of = {}
        for row, (u, v) in zip(b_rows, b_de):
            u, v = int(u), int(v)
            if u in succ:
                raise MeshError(f"boundary branches at node {u} (pinched vertex)")
            succ[u] = v
            row_of[(u, v)] = int(row)
        indeg = {}
        for u, v in succ.items():
            indeg[v] = indeg.get(v, 0) + 1
        for v, d in indeg.items():
            if d > 1:
                raise MeshError(f"boundary merges at node {v} (pinched vertex)")
        loops = []
        seen = set()
        for start in sorted(succ):
            if start in seen:
                continue
            loop = [start]
            seen.add(start)
            cur = succ[start]
            while cur != start:
                if cur not in succ:
                    raise MeshError(f"boundary edge chain breaks at node {cur}")
                if cur in seen:
                    raise MeshError(f"boundary loops cross at node {cur}")
                loop.append(cur)
                seen.add(cur)
                cur = succ[cur]
            loops.append(loop)
        self._boundary_loops = loops
        self._boundary_edge_row_of = row_of

    def _build_links(self, b_de):
        n = self.n_nodes
        succ = [dict() for _ in range(n)]
        for p, q, r in self.tri_nodes:
            succ[p][q] = r
            succ[q][r] = p
            succ[r][p] = q
        bset = set(int(v) for v in self.boundary_nodes)
        flat = []
        offsets = np.zeros(n + 1, dtype=np.int64)
        closed = np.zeros(n, dtype=bool)
        for v in range(n):
            s = succ[v]
            if not s:
                raise MeshError(f"node {v} belongs to no triangle")
            targets = set(s.values())
            starts = [a for a in s if a not in targets]
            if v in bset:
                if len(starts) != 1:
                    raise MeshError(f"link of boundary node {v} is not a single chain")
                chain = [starts[0]]
                while chain[-1] in s:
                    chain.append(s[chain[-1]])
                if len(chain) != len(s) + 1:
                    raise MeshError(f"link of boundary node {v} is not a single chain")
            else:
                if starts:
                    raise MeshError(f"link of interior node {v} is open")
                first = min(s)
                chain = [first]
                cur = s[first]
                while cur != first:
                    if cur in chain and cur != first:
                        raise MeshError(f"link of interior node {v} is not a single cycle")
                    chain.append(cur)
                    cur = s.get(cur)
                    if cur is None:
                        raise MeshError(f"link of interior node {v} is not a single cycle")
                if len(chain) != len(s):
                    raise MeshError(f"link of interior node {v} is not a single cycle")
                closed[v] = True
            offsets[v + 1] = offsets[v] + len(chain)
            flat.extend(chain)
        flat = np.array(flat, dtype=np.int64)
        total = len(flat)
        next_idx = np.arange(1, total + 1, dtype=np.int64)
        next_idx[offsets[1:] - 1] = offsets[:-1]
        self.links = LinkCSR(
            centers=np.arange(n, dtype=np.int64),
            flat=flat,
            offsets=offsets,
            next_idx=next_idx,
            closed=closed,
        )

    # ------------------------------------------------------------- properties

    @property
    def tie_keys(self) -> np.ndarray:
        """Secondary comparison keys for exact tie-breaking.

        Plain meshes order ties by node id.  Doubled meshes order by source
        node id so that both copies of a reflected field break ties the same
        way and the two bulk index sums agree exactly.
        """
        if self.source_nodes is not None:
            return self.source_nodes
        return np.arange(self.n_nodes, dtype=np.int64)

    def metric_tensor(self, t: int) -> np.ndarray:
        if self.metric is None:
            return np.eye(2)
        g11, g12, g22 = self.metric[t]
        return np.array([[g11, g12], [g12, g22]])

    def euler_characteristic(self) -> int:
        return int(self.n_nodes - self.n_edges + self.n_triangles)

    def boundary_components(self) -> list[BoundaryComponent]:
        if self._components_cache is None:
            comps = []
            for loop in self._boundary_loops:
                nodes = np.array(loop, dtype=np.int64)
                m = len(nodes)
                lengths = np.empty(m)
                segs = np.empty((m, 2, 2))
                for i in range(m):
                    u, v = int(nodes[i]), int(nodes[(i + 1) % m])
                    row = self._boundary_edge_row_of[(u, v)]
                    lengths[i] = self._edge_length(row)
                    t = self._edge_owner_tri[row]
                    s = self._edge_owner_slot[row]
                    segs[i, 0] = self.vertices[self.triangles[t, s]]
                    segs[i, 1] = self.vertices[self.triangles[t, (s + 1) % 3]]
                if lengths.sum() <= 0:
                    raise MeshError("boundary loop of zero length")
                comps.append(BoundaryComponent(nodes, lengths, segs))
            self._components_cache = comps
        return self._components_cache

    def interior_links(self) -> LinkCSR:
        key = "interior"
        if key not in self._link_subset_cache:
            self._link_subset_cache[key] = self.links.subset(self.interior_nodes)
        return self._link_subset_cache[key]

    def max_edge_length(self) -> float:
        P = self.vertices[self.triangles]
        E = np.stack(
            [P[:, 1] - P[:, 0], P[:, 2] - P[:, 1], P[:, 0] - P[:, 2]], axis=1
        )
        if self.metric is None:
            lens2 = (E**2).sum(axis=2)
        else:
            g11 = self.metric[:, 0][:, None]
            g12 = self.metric[:, 1][:, None]
            g22 = self.metric[:, 2][:, None]
            lens2 = g11 * E[:, :, 0] ** 2 + 2 * g12 * E[:, :, 0] * E[:, :, 1] + g22 * E[:, :, 1] ** 2
        return float(np.sqrt(lens2.max()))

    def content_id(self) -> str:
        """Deterministic short id of the mesh contents."""
        h = hashlib.sha256()
        h.update(self.vertices.tobytes())
        h.update(self.triangles.tobytes())
        if self.metric is not None:
            h.update(self.metric.tobytes())
        h.update(np.array(self.identifications, dtype=np.int64).tobytes())
        h.update(self.rho.tobytes())
        return h.hexdigest()[:12]


# ------------------------------------------------------------------ operations


def euler_characteristic(mesh: SurfaceMesh) -> int:
    """V - E + F counted on nodes (after identifications)."""
    return mesh.euler_characteristic()


def boundary_components(mesh: SurfaceMesh) -> list[BoundaryComponent]:
    """Maximal boundary loops; every degree-1 edge appears in exactly one."""
    return mesh.boundary_components()


def _check_resolution(resolution: int):
    resolution = int(resolution)
    if resolution < 8:
        raise MeshError("resolution must be at least 8 angular samples")
    return resolution


def _stitch_rings(inner_ids, outer_ids, tris):
    """Triangulate the annular strip between two concentric vertex rings.

    Rings are uniformly sampled in angle starting at 0; the two-pointer merge
    advances whichever ring has the smaller next angle, producing
    ``len(inner) + len(outer)`` counterclockwise triangles.
    """
    n1, n2 = len(inner_ids), len(outer_ids)
    i = k = 0
    while i < n1 or k < n2:
        advance_inner = k == n2 or (i < n1 and (i + 1) * n2 <= (k + 1) * n1)
        if advance_inner:
            tris.append((inner_ids[i % n1], outer_ids[k % n2], inner_ids[(i + 1) % n1]))
            i += 1
        else:
            tris.append((inner_ids[i % n1], outer_ids[k % n2], outer_ids[(k + 1) % n2]))
            k += 1


def generate_disk(radius: float, resolution: int) -> SurfaceMesh:
    """Flat disk of the given radius.

    ``resolution`` is the number of boundary vertices (>= 8).  Interior rings
    are graded so triangles stay roughly uniform; ring ``j`` of ``nr`` sits at
    radius ``j * radius / nr`` with about ``resolution * j / nr`` samples.
    """
    resolution = _check_resolution(resolution)
    if radius <= 0:
        raise MeshError("radius must be positive")
    nr = max(2, round(resolution / (2 * math.pi)))
    counts = [max(8, round(resolution * j / nr)) for j in range(1, nr + 1)]
    counts[-1] = resolution
    verts = [(0.0, 0.0)]
    rings = []
    for j, n_j in enumerate(counts, start=1):
        r_j = radius * j / nr
        ids = list(range(len(verts), len(verts) + n_j))
        for s in range(n_j):
            a = 2 * math.pi * s / n_j
            verts.append((r_j * math.cos(a), r_j * math.sin(a)))
        rings.append(ids)
    tris = []
    first = rings[0]
    for s in range(len(first)):
        tris.append((0, first[s], first[(s + 1) % len(first)]))
    for inner, outer in zip(rings[:-1], rings[1:]):
        _stitch_rings(inner, outer, tris)
    return SurfaceMesh(np.array(verts), np.array(tris))


def generate_annulus(r: float, R: float, resolution: int) -> SurfaceMesh:
    """Flat annulus ``r < |x| < R`` with ``resolution`` samples per circle."""
    resolution = _check_resolution(resolution)
    if not (0 < r < R):
        raise MeshError("annulus radii must satisfy 0 < r < R")
    n_t = resolution
    nr = max(2, round(n_t * (R - r) / (math.pi * (R + r))))
    verts = []
    for j in range(nr + 1):
        s = r + (R - r) * j / nr
        for i in range(n_t):
            a = 2 * math.pi * i / n_t
            verts.append((s * math.cos(a), s * math.sin(a)))
    tris = []
    for j in range(nr):
        for i in range(n_t):
            a = j * n_t + i
            b = j * n_t + (i + 1) % n_t
            c = (j + 1) * n_t + (i + 1) % n_t
            d = (j + 1) * n_t + i
            tris.append((a, d, c))
            tris.append((a, c, b))
    return SurfaceMesh(np.array(verts), np.array(tris))


def generate_cylinder(T: float, resolution: int) -> SurfaceMesh:
    """Flat cylinder: circle of circumference 2*pi times the segment [-T, T].

    Meshed as the parameter rectangle ``[0, 2*pi] x [-T, T]`` with the two
    vertical sides identified; the metric is the identity, so boundary arc
    lengths equal angle differences.
    """
    resolution = _check_resolution(resolution)
    if T <= 0:
        raise MeshError("cylinder half-length T must be positive")
    n_t = resolution
    nz = max(2, round(2 * T * n_t / (2 * math.pi)))
    verts = []
    vid = {}
    for i in range(n_t + 1):
        for j in range(nz + 1):
            vid[(i, j)] = len(verts)
            verts.append((2 * math.pi * i / n_t, -T + 2 * T * j / nz))
    tris = []
    for i in range(n_t):
        for j in range(nz):
            a = vid[(i, j)]
            b = vid[(i + 1, j)]
            c = vid[(i + 1, j + 1)]
            d = vid[(i, j + 1)]
            tris.append((a, b, c))
            tris.append((a, c, d))
    ident = [(vid[(0, j)], vid[(n_t, j)]) for j in range(nz + 1)]
    return SurfaceMesh(np.array(verts), np.array(tris), identifications=ident)


def double_mesh(mesh: SurfaceMesh) -> SurfaceMesh:
    """Glue two copies of the mesh along their common boundary.

    The second copy reverses triangle orientation so the closed result is
    consistently oriented; its Euler characteristic is ``2*chi - chi(bd)``
    and the boundary circles contribute ``chi(bd) = 0``.  The returned mesh
    carries ``source_nodes`` (node on the input for every node of the double)
    and ``glued_nodes`` (the shared boundary nodes).
    """
    if mesh.is_closed:
        raise MeshError("mesh is closed; the double requires a boundary")
    n = mesh.n_nodes
    interior = mesh.interior_nodes
    mirror = np.arange(n, dtype=np.int64)
    mirror[interior] = n + np.arange(len(interior), dtype=np.int64)
    verts = np.vstack([mesh.node_positions, mesh.node_positions[interior]])
    t1 = mesh.tri_nodes
    t2 = mirror[t1][:, [0, 2, 1]]
    tris = np.vstack([t1, t2])
    metric = None
    if mesh.metric is not None:
        metric = np.vstack([mesh.metric, mesh.metric])
    dbl = SurfaceMesh(verts, tris, metric=metric)
    src = np.concatenate([np.arange(n, dtype=np.int64), interior])
    dbl.source_nodes = src
    dbl.glued_nodes = mesh.boundary_nodes.copy()
    return dbl


def reflect_function(mesh: SurfaceMesh, double: SurfaceMesh, u) -> np.ndarray:
    """Even reflection of a vertex field onto the doubled mesh."""
    u = np.asarray(u, dtype=np.float64)
    if u.shape != (mesh.n_nodes,):
        raise MeshError("field length does not match the source mesh")
    if double.source_nodes is None or len(double.source_nodes) != double.n_nodes:
        raise MeshError("target mesh does not carry a doubling record")
    if double.n_nodes != 2 * mesh.n_nodes - len(mesh.boundary_nodes):
        raise MeshError("target mesh is not the double of the source mesh")
    return u[double.source_nodes]


# --------------------------------------------------------------------- file IO


def mesh_to_dict(mesh: SurfaceMesh) -> dict:
    d = {
        "version": MESH_FORMAT_VERSION,
        "vertices": mesh.vertices.tolist(),
        "triangles": mesh.triangles.tolist(),
    }
    if mesh.identifications:
        d["identifications"] = [list(p) for p in mesh.identifications]
    if mesh.metric is not None:
        d["metric"] = mesh.metric.tolist()
    rho_raw = mesh.rho[mesh.node_of_vertex]
    if not np.all(rho_raw == 1.0):
        d["rho"] = rho_raw.tolist()
    return d


def save_mesh(mesh: SurfaceMesh, path) -> None:
    with open(path, "w") as f:
        json.dump(mesh_to_dict(mesh), f)
        f.write("\n")


def load_mesh(path) -> SurfaceMesh:
    """Load and validate the versioned JSON mesh format.

    Raises :class:`MeshError` naming the first violated invariant (with the
    offending indices) rather than returning a partially valid mesh.
    """
    with open(path) as f:
        data = json.load(f)
    if not isinstance(data, dict) or data.get("version") != MESH_FORMAT_VERSION:
        raise MeshError(f"unsupported mesh file version: {data.get('version')!r}")
    for key in ("vertices", "triangles"):
        if key not in data:
            raise MeshError(f"mesh file lacks required field {key!r}")
    return SurfaceMesh(
        data["vertices"],
        data["triangles"],
        metric=data.get("metric"),
        identifications=data.get("identifications"),
        boundary_weight=data.get("rho"),
    )
