"""Short cycles of an embedded unit-length graph and their crossing data.

Curves are carried by cycles of a rotation system.  A curve passing through
a vertex is a chord between its incoming and outgoing half-edge in the
cyclic order there; two curves cross at a vertex iff their chords
interleave.  Where two curves share a run of edges, the run is contracted
to one vertex (rotations spliced) and the chord test is applied to the
ends of the run.
"""

import itertools
import math
from dataclasses import asdict, dataclass, field

import networkx as nx
import numpy as np

from kissnum import ribbon
from kissnum.errors import EqualizationError, UnsupportedGraphError, ValidationError


@dataclass(frozen=True)
class GraphCycle:
    """Closed walk given by its outgoing half-edges ``darts``.

    ``transitions[k]`` is ``(vertex, incoming, outgoing)`` at the k-th visited
    vertex, where ``incoming`` is the half-edge at that vertex the walk
    arrives through.
    """

    darts: tuple
    vertices: tuple
    transitions: tuple

    @classmethod
    def from_darts(cls, rs, darts):
        darts = tuple(darts)
        if not darts:
            raise ValidationError("empty cycle")
        transitions = []
        for k, out in enumerate(darts):
            incoming = rs.pair(darts[k - 1])
            v = rs.vertex_of(out)
            if rs.vertex_of(incoming) != v:
                raise ValidationError(f"walk {darts} is not closed at step {k}")
            if incoming == out:
                raise ValidationError(f"walk {darts} backtracks at step {k}")
            transitions.append((v, incoming, out))
        return cls(darts, tuple(t[0] for t in transitions), tuple(transitions))

    def __len__(self):
        return len(self.darts)

    def edges(self, rs):
        return frozenset(tuple(sorted((h, rs.pair(h)))) for h in self.darts)

    def as_dict(self):
        return {"vertices": list(self.vertices), "darts": list(self.darts)}


def _canonical(rs, darts):
    k = len(darts)
    reverse = tuple(rs.pair(h) for h in reversed(darts))
    candidates = []
    for seq in (darts, reverse):
        for i in range(k):
            rotated = seq[i:] + seq[:i]
            candidates.append((tuple(rs.vertex_of(h) for h in rotated), rotated))
    return min(candidates)[1]


def enumerate_short_cycles(rs, length_bound):
    """All simple cycles with at most ``length_bound`` edges, each once.

    Cycles are deduplicated up to rotation and reversal and returned in
    canonical form, sorted by (length, vertex sequence, darts).
    """
    found = set()

    def extend(start, path, visited):
        v = rs.head(path[-1])
        if v == start:
            found.add(_canonical(rs, tuple(path)))
            return
        if len(path) >= length_bound or v in visited:
            return
        arrived = rs.pair(path[-1])
        for h in rs.rotation[v]:
            if h != arrived:
                extend(start, path + [h], visited | {v})

    for start in range(rs.vertex_count):
        for h in rs.rotation[start]:
            if length_bound >= 1:
                extend(start, [h], frozenset({start}))
    cycles = []
    for darts in found:
        # loops and multi-edges may be walked twice along the same edge
        if len({tuple(sorted((h, rs.pair(h)))) for h in darts}) != len(darts):
            continue
        cycles.append(GraphCycle.from_darts(rs, darts))
    cycles.sort(key=lambda c: (len(c), c.vertices, c.darts))
    return cycles


def _arc_sizes(rs, incoming, outgoing):
    """Half-edges strictly between ``incoming`` and ``outgoing``, going each way round."""
    v = rs.vertex_of(incoming)
    d = rs.degree(v)
    forward = (rs.position(outgoing) - rs.position(incoming) - 1) % d
    return forward, d - 2 - forward


def _check_cycle(c, rs):
    for v, incoming, out in c.transitions:
        if rs.vertex_of(incoming) != v or rs.vertex_of(out) != v:
            raise ValidationError("cycle does not belong to this rotation system")


def is_qualifying(c, rs):
    """True iff at some vertex the cycle splits the other half-edges into two non-empty arcs."""
    try:
        _check_cycle(c, rs)
    except KeyError as exc:
        raise ValidationError("cycle does not belong to this rotation system") from exc
    return any(min(_arc_sizes(rs, i, o)) > 0 for _, i, o in c.transitions)


def splitting_pairs_at(rs, v):
    """Unordered pairs of half-edges at ``v`` leaving non-empty arcs on both sides."""
    rot = rs.rotation[v]
    return [(a, b) for a, b in itertools.combinations(rot, 2) if min(_arc_sizes(rs, a, b)) > 0]


# -- intersection numbers ----------------------------------------------------


def _interleave(order, a, b):
    """Chords ``a`` and ``b`` (pairs of distinct positions in a cycle) cross."""
    a0, a1 = sorted(order[x] for x in a)
    return (a0 < order[b[0]] < a1) != (a0 < order[b[1]] < a1)


def geometric_intersection_number(a, b, rs):
    """Crossings of the curves carried by cycles ``a`` and ``b`` in the ribbon surface.

    Identical edge sets count as parallel copies and give 0.
    """
    if a.edges(rs) == b.edges(rs):
        return 0
    ta = {v: (i, o) for v, i, o in a.transitions}
    tb = {v: (i, o) for v, i, o in b.transitions}
    if len(ta) != len(a) or len(tb) != len(b):
        raise UnsupportedGraphError("intersection numbers need cycles visiting each vertex once")
    shared_edges = a.edges(rs) & b.edges(rs)
    shared_half = {h for e in shared_edges for h in e}
    total = 0

    # isolated shared vertices
    for v in ta.keys() & tb.keys():
        ca, cb = ta[v], tb[v]
        if shared_half & set(ca):
            continue
        pos = {h: rs.position(h) for h in ca + cb}
        total += _interleave(pos, ca, cb)

    # runs of shared edges: components of the shared-edge graph are paths
    run_graph = nx.Graph()
    for h1, h2 in shared_edges:
        run_graph.add_edge(rs.vertex_of(h1), rs.vertex_of(h2), halves=(h1, h2))
    for comp in nx.connected_components(run_graph):
        ends = [v for v in comp if run_graph.degree(v) == 1]
        if len(ends) != 2:
            raise UnsupportedGraphError("shared edges form a closed loop but edge sets differ")
        order = {}
        offset = 0
        for v in ends:
            path_half = next(h for h in shared_half if rs.vertex_of(h) == v)
            rot = rs.rotation[v]
            start = rs.position(path_half)
            for k in range(1, len(rot)):
                order[rot[(start + k) % len(rot)]] = offset + k
            offset += len(rot)
        chord_a = tuple(h for v in ends for h in ta[v] if h not in shared_half)
        chord_b = tuple(h for v in ends for h in tb[v] if h not in shared_half)
        total += _interleave(order, chord_a, chord_b)
    return total


@dataclass
class IntersectionMatrix:
    values: np.ndarray

    @property
    def mod2(self):
        return self.values % 2

    def rows_distinct(self):
        rows = {tuple(r) for r in self.mod2.tolist()}
        return len(rows) == len(self.values)


def intersection_matrix(cycles, rs):
    k = len(cycles)
    values = np.zeros((k, k), dtype=int)
    for i, j in itertools.combinations(range(k), 2):
        values[i, j] = values[j, i] = geometric_intersection_number(cycles[i], cycles[j], rs)
    return IntersectionMatrix(values)


def mod2_matrix_and_distinctness(cycles, rs):
    m = intersection_matrix(cycles, rs)
    return m, m.rows_distinct()


def crossing_graph(matrix):
    values = matrix.values
    g = nx.Graph()
    g.add_nodes_from(range(len(values)))
    g.add_edges_from(zip(*np.nonzero(np.triu(values == 1))))
    return g


def intersection_graph_connected(cycles, matrix):
    if len(cycles) == 0:
        return False
    return nx.is_connected(crossing_graph(matrix))


# -- grafting ------------------------------------------------------------------


@dataclass(frozen=True)
class EqualizationStep:
    max_set: tuple
    width: float
    lengths: tuple


@dataclass
class EqualizationTrace:
    epsilon: float
    initial: tuple
    steps: list = field(default_factory=list)
    final: tuple = ()

    def as_dict(self):
        return asdict(self)


def equalize_lengths(initial, matrix, epsilon, tol=1e-12):
    """Graft along the longest curves until every curve has the maximal length.

    Each step freezes the current maximal set M at length L.  Every curve
    crossing some member of M grows by 2 per unit of grafting width, and the
    width is the smallest one bringing a new curve up to L.  All curves
    reaching L join M together.
    """
    if not 0.0 < epsilon < 1.0 / 6.0:
        raise ValueError(f"epsilon must lie in (0, 1/6), got {epsilon}")
    lengths = np.asarray(initial, dtype=float).copy()
    values = np.asarray(getattr(matrix, "values", matrix))
    n = len(lengths)
    if values.shape != (n, n):
        raise ValueError("matrix shape does not match the number of lengths")
    lo = 3.0 - 6.0 * epsilon
    if n and (lengths.min() < lo - tol or lengths.max() > 3.0 + tol):
        raise ValueError(f"initial lengths must lie in [{lo}, 3]")
    trace = EqualizationTrace(epsilon=epsilon, initial=tuple(lengths.tolist()))
    if n == 0:
        return trace
    top = lengths.max()
    in_max = lengths >= top - tol
    lengths[in_max] = top
    crosses = values > 0
    while not in_max.all():
        frontier = ~in_max & crosses[in_max].any(axis=0)
        if not frontier.any():
            raise EqualizationError("equalization cannot complete: crossing graph is disconnected")
        width = (top - lengths[frontier]).min() / 2.0
        lengths[frontier] += 2.0 * width
        reached = frontier & (lengths >= top - tol)
        lengths[reached] = top
        trace.steps.append(
            EqualizationStep(
                max_set=tuple(np.flatnonzero(in_max).tolist()),
                width=float(width),
                lengths=tuple(lengths.tolist()),
            )
        )
        in_max |= reached
    trace.final = tuple(lengths.tolist())
    return trace


# -- reports ---------------------------------------------------------------------


def stated_floor(n):
    """ceil(n^2 (n-3) / 6), the count claimed for K_n."""
    return -(-(n * n * (n - 3)) // 6)


def degree_floor(n):
    """ceil(n (n-1)(n-4) / 6): vertices of K_n have n-1 half-edges, not n."""
    return -(-(n * (n - 1) * (n - 4)) // 6)


@dataclass
class ConstructionReport:
    n: int
    genus: int
    ringel_youngs_genus: int
    triangle_count: int
    qualifying_count: int
    formula_floor: int
    degree_floor: int
    meets_formula_floor: bool
    max_intersection: int
    pairs_crossing_once: int
    entries_in_01: bool
    homology_distinct: bool
    connected: bool
    minimal_genus: bool
    cycles: list = field(default_factory=list, repr=False)
    matrix: IntersectionMatrix = field(default=None, repr=False)

    def summary(self):
        out = asdict(self)
        del out["cycles"], out["matrix"]
        return out


def count_qualifying(rs):
    if not ribbon.is_complete_graph(rs):
        raise UnsupportedGraphError("qualifying-cycle counts are defined for complete graphs only")
    n = rs.vertex_count
    triangles = enumerate_short_cycles(rs, 3)
    qualifying = [c for c in triangles if is_qualifying(c, rs)]
    matrix, distinct = mod2_matrix_and_distinctness(qualifying, rs)
    values = matrix.values
    upper = values[np.triu_indices(len(values), 1)]
    g = ribbon.genus(rs).genus
    return ConstructionReport(
        n=n,
        genus=g,
        ringel_youngs_genus=ribbon.ringel_youngs_genus(n),
        triangle_count=len(triangles),
        qualifying_count=len(qualifying),
        formula_floor=stated_floor(n),
        degree_floor=degree_floor(n),
        meets_formula_floor=len(qualifying) >= stated_floor(n),
        max_intersection=int(upper.max()) if upper.size else 0,
        pairs_crossing_once=int((upper == 1).sum()),
        entries_in_01=bool(np.isin(upper, (0, 1)).all()),
        homology_distinct=distinct,
        connected=intersection_graph_connected(qualifying, matrix),
        minimal_genus=g == ribbon.ringel_youngs_genus(n),
        cycles=qualifying,
        matrix=matrix,
    )


def npod_systole_report(m):
    rs = ribbon.npod_surface(m)
    summary = ribbon.genus(rs)
    loops = enumerate_short_cycles(rs, 1)
    matrix = intersection_matrix(loops, rs)
    upper = matrix.values[np.triu_indices(len(loops), 1)]
    return {
        "m": m,
        "half_edges": 4 * m,
        "genus": summary.genus,
        "boundary_components": summary.boundary_components,
        "loop_count": len(loops),
        "all_pairs_cross_once": bool((upper == 1).all()),
        "pair_count": int(upper.size),
        "stated_count_n": 4 * m,
        "stated_count_half_n": 2 * m,
        "intersection_matrix": matrix.values.tolist(),
    }


def growth_ratio(report):
    """Qualifying count over genus^(3/2)."""
    return report.qualifying_count / math.pow(report.genus, 1.5)
