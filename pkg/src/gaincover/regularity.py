"""Combinatorial regularity certificates.

Walk regularity, equitable partitions, distance-regularity with intersection
arrays, strong regularity, antipodality, antipodal-cover-of-complete-graph
parameters, and the column-count verifier that ties the gain structure of a
two-eigenvalue cover over a strongly regular base to (a - lambda)/r and c/r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (ContractViolation, DisconnectedError,
                     InternalConsistencyError, ParameterError)
from .gains import CoverGraph, GainGraph
from .graphs import Graph, UNREACHABLE, _bfs, distances, is_connected
from .spectral import (DEFAULT_TOL, TwoEvCertificate, distinct_eigenvalue_count,
                       hermitian_spectrum, rep_matrix)


@dataclass(frozen=True)
class IntersectionArray:
    """{b_0,...,b_{d-1}; c_1,...,c_d} of a distance-regular graph."""

    b: tuple
    c: tuple
    d: int

    def __post_init__(self):
        k = self.b[0]
        if len(self.b) != self.d or len(self.c) != self.d:
            raise ParameterError("array lengths must equal the diameter")
        if self.c[0] != 1:
            raise ParameterError("c_1 must be 1")
        if any(x <= 0 for x in self.b) or any(x <= 0 for x in self.c):
            raise ParameterError("intersection numbers must be positive")
        if any(self.b[i] + self.c[i - 1] > k for i in range(1, self.d)) or self.c[-1] > k:
            raise ParameterError("b_i + c_i cannot exceed the valency")

    @property
    def valency(self):
        return self.b[0]

    def __str__(self):
        bs = ",".join(str(x) for x in self.b)
        cs = ",".join(str(x) for x in self.c)
        return "{" + bs + ";" + cs + "}"


@dataclass(frozen=True)
class SrgParams:
    """(n, k, a, c) of a strongly regular graph."""

    n: int
    k: int
    a: int
    c: int

    def __post_init__(self):
        if self.k * (self.k - self.a - 1) != (self.n - self.k - 1) * self.c:
            raise ParameterError(f"infeasible strongly regular parameters "
                                 f"({self.n},{self.k},{self.a},{self.c})")

    def as_tuple(self):
        return (self.n, self.k, self.a, self.c)


@dataclass(frozen=True)
class ColumnCountCertificate:
    """t = (a - lambda)/r and s = c/r; integral reports whether both are
    non-negative integers (r | c is necessary for any 2ev cover)."""

    t: Fraction
    s: Fraction | None
    integral: bool
    verified_counts: bool = False


@dataclass(frozen=True)
class RegularityCertificate:
    """Aggregate combinatorial verdict for one graph (usually a lift)."""

    walk_regular: bool
    srg: SrgParams | None = None
    drg: IntersectionArray | None = None
    antipodal: bool = False
    antipodal_classes: tuple | None = None
    drackn: tuple | None = None

    def as_dict(self):
        return {
            "walk_regular": self.walk_regular,
            "srg": None if self.srg is None else list(self.srg.as_tuple()),
            "intersection_array": None if self.drg is None else
                {"b": list(self.drg.b), "c": list(self.drg.c), "d": self.drg.d},
            "antipodal": self.antipodal,
            "antipodal_classes": None if self.antipodal_classes is None else
                [list(c) for c in self.antipodal_classes],
            "drackn": None if self.drackn is None else list(self.drackn),
        }


# ---------------------------------------------------------------------------
# walk regularity

_INT64_SAFE = 2**62


def _diag_constant(mat):
    d = mat.diagonal()
    return all(x == d[0] for x in d.tolist())


def is_walk_regular(g: Graph, force_all_powers=False) -> bool:
    """True iff every power of the adjacency matrix has constant diagonal.

    Checking powers 1..d-1 (d = distinct eigenvalue count, taken from the
    exact square-free part of the characteristic polynomial) suffices: the
    minimal polynomial has degree d, so every higher power is a fixed linear
    combination of A^0..A^(d-1). force_all_powers checks up to n-1 instead.
    """
    if g.n <= 1:
        return True
    top = g.n - 1 if force_all_powers else distinct_eigenvalue_count(g) - 1
    deg = max(g.degrees) if g.n else 0
    a64 = g.adjacency()
    power = a64.copy()
    bound = deg  # max possible entry of the current power
    use_object = False
    for _ in range(2, top + 1):
        bound *= max(deg, 1)
        if not use_object and bound >= _INT64_SAFE:
            power = power.astype(object)
            a_obj = a64.astype(object)
            use_object = True
        power = np.dot(power, a_obj if use_object else a64)
        if not _diag_constant(power):
            return False
    # power 1 has zero diagonal on simple graphs; included for completeness
    return top < 1 or _diag_constant(a64)


def brute_force_walk_regular(g: Graph) -> bool:
    """Independent oracle: literally check diag(A^k) for k = 1..n-1 over Z."""
    if g.n <= 1:
        return True
    a = g.adjacency().astype(object)
    power = a.copy()
    for _ in range(1, g.n):
        if not _diag_constant(power):
            return False
        power = np.dot(power, a)
    return True


# ---------------------------------------------------------------------------
# partitions


def distance_partition(g: Graph, v):
    """Cells of vertices at distance 0, 1, ..., ecc(v) from v; connected only."""
    dist = _bfs(g, v)
    if UNREACHABLE in dist:
        raise DisconnectedError("distance partition requires a connected graph")
    ecc = max(dist)
    cells = [[] for _ in range(ecc + 1)]
    for u, d in enumerate(dist):
        cells[d].append(u)
    return tuple(tuple(c) for c in cells)


def is_equitable(g: Graph, partition):
    """The cell-to-cell degree matrix if the partition is equitable, else None."""
    cells = [tuple(c) for c in partition]
    cell_of = {}
    for i, cell in enumerate(cells):
        for v in cell:
            if not 0 <= v < g.n:
                raise ParameterError(f"vertex {v} out of range")
            if v in cell_of:
                raise ParameterError(f"vertex {v} appears in two cells")
            cell_of[v] = i
    if len(cell_of) != g.n:
        raise ParameterError("partition must cover every vertex exactly once")
    k = len(cells)
    quotient = []
    for i, cell in enumerate(cells):
        row = None
        for v in cell:
            counts = [0] * k
            for w in g.neighbors[v]:
                counts[cell_of[w]] += 1
            if row is None:
                row = counts
            elif counts != row:
                return None
        quotient.append(tuple(row))
    return tuple(quotient)


def is_distance_regular(g: Graph):
    """Intersection array if the distance partition from every vertex is
    equitable with one common quotient; None otherwise."""
    if not is_connected(g):
        raise DisconnectedError("distance-regularity requires a connected graph")
    if not g.is_regular():
        return None
    common = None
    for v in range(g.n):
        part = distance_partition(g, v)
        quotient = is_equitable(g, part)
        if quotient is None:
            return None
        if common is None:
            common = quotient
        elif quotient != common:
            return None
    d = len(common) - 1
    if d == 0:
        return None  # a single vertex has no intersection array
    # the quotient of a distance partition is tridiagonal by construction
    b = tuple(common[i][i + 1] for i in range(d))
    c = tuple(common[i + 1][i] for i in range(d))
    return IntersectionArray(b, c, d)


def srg_parameters(g: Graph):
    """(n, k, a, c) when the graph is distance-regular with diameter 2."""
    if not is_connected(g):
        return None
    arr = is_distance_regular(g)
    if arr is None or arr.d != 2:
        return None
    k = arr.valency
    return SrgParams(g.n, k, k - arr.b[1] - 1, arr.c[1])


def is_antipodal(g: Graph):
    """(flag, classes): whether 'same vertex or at maximal distance' is an
    equivalence relation. Diameter <= 1 counts as antipodal with singleton
    classes (the degenerate complete-graph case)."""
    if not is_connected(g):
        raise DisconnectedError("antipodality requires a connected graph")
    table = distances(g)
    diam = table.diameter()
    if diam is None or diam <= 1:
        return True, tuple((v,) for v in range(g.n))
    dist = table.dist
    classes = {}
    for u in range(g.n):
        far = np.nonzero(dist[u] == diam)[0]
        classes[u] = tuple(sorted([u, *far.tolist()]))
    for u in range(g.n):
        for v in classes[u]:
            if classes[v] != classes[u]:
                return False, None
    unique = sorted(set(classes.values()))
    return True, tuple(unique)


# ---------------------------------------------------------------------------
# antipodal covers of complete graphs


def _common_neighbor_count(g: Graph, u, v):
    return len(set(g.neighbors[u]) & set(g.neighbors[v]))


def drackn_parameters(cover: CoverGraph, cert: TwoEvCertificate):
    """(n, r, t) when the cover is a distance-regular antipodal cover of K_n.

    Requires a complete base; returns None when the cover is disconnected or
    not distance-regular of diameter 3 with fiber antipodal classes. t is
    computed as (a - lambda)/r with a = n - 2 and cross-checked against the
    counted common neighbors of distance-2 pairs.
    """
    base = cover.base
    n = base.n
    if base.m != n * (n - 1) // 2:
        raise ParameterError("antipodal-cover parameters require a complete base")
    if not cert.is_two_ev or not cert.cover_connected:
        return None
    x = cover.graph
    arr = is_distance_regular(x)
    if arr is None or arr.d != 3:
        return None
    flag, classes = is_antipodal(x)
    if not flag or set(classes) != {tuple(f) for f in cover.fibers()}:
        return None
    a = n - 2
    t, rem = divmod(a - cert.lambda_, cover.r)
    if rem != 0 or t <= 0:
        return None
    # every distance-2 pair must have exactly t common neighbors
    dist = distances(x).dist
    for u in range(x.n):
        for v in np.nonzero(dist[u] == 2)[0].tolist():
            if v > u and _common_neighbor_count(x, u, v) != t:
                return None
    if arr.c[1] != t:
        return None
    return (n, cover.r, t)


def drackn_of_graph(g: Graph):
    """Graph-only variant for certify: (n, r, t) when g itself is a
    distance-regular antipodal cover of a complete graph."""
    if not is_connected(g):
        return None
    arr = is_distance_regular(g)
    if arr is None or arr.d != 3:
        return None
    flag, classes = is_antipodal(g)
    if not flag:
        return None
    sizes = {len(c) for c in classes}
    if len(sizes) != 1:
        return None
    r = sizes.pop()
    if r < 2:
        return None
    # quotient on antipodal classes must be complete
    idx = {}
    for i, cls in enumerate(classes):
        for v in cls:
            idx[v] = i
    n = len(classes)
    quot = set()
    for u, v in g.edges:
        if idx[u] == idx[v]:
            return None
        quot.add((min(idx[u], idx[v]), max(idx[u], idx[v])))
    if len(quot) != n * (n - 1) // 2:
        return None
    return (n, r, arr.c[1])


# ---------------------------------------------------------------------------
# column counts of a normalized 2ev gain over a strongly regular base


def lemma_column_counts(f: GainGraph, params=None, lam=None, v0=0, tol=DEFAULT_TOL):
    """Column-count certificate of a cyclic gain normalized at v0.

    Computes t = (a - lambda)/r and s = c/r. When the character matrix has
    exactly two distinct eigenvalues (and the counts are integral) it verifies
    directly on the gain matrix that every column of the neighborhood block
    carries each nontrivial root of unity exactly t times and every column of
    the distance-2 block carries every root of unity exactly s times; a
    violation there is an internal consistency error. lambda defaults to the
    spectral recomputation; if both are given they must agree to 1e-7.
    """
    grp = f.group
    if not grp.is_abelian or len(grp.orders) != 1:
        raise ParameterError("column counts are defined for cyclic gain groups")
    r = grp.orders[0]
    base = f.base
    for w in base.neighbors[v0]:
        if f.gain(v0, w) != grp.identity():
            raise ContractViolation(f"gain not normalized at vertex {v0}")

    if params is None:
        n = base.n
        if base.m == n * (n - 1) // 2:
            a, c = n - 2, None
        else:
            srg = srg_parameters(base)
            if srg is None:
                raise ParameterError("base must be complete or strongly regular")
            a, c = srg.a, srg.c
    elif isinstance(params, SrgParams):
        a, c = params.a, params.c
    else:
        a, c = params  # (a, c) with c possibly None for a complete base

    spec = hermitian_spectrum(rep_matrix(f, (1,)).entries, tol)
    two_ev = spec.distinct() == 2
    lam_spec = sum(spec.values) if two_ev else None
    if lam is None:
        if lam_spec is None:
            raise ParameterError("lambda must be supplied when the character "
                                 "matrix is not two-eigenvalue")
        lam = lam_spec
    elif lam_spec is not None and abs(lam - lam_spec) > 1e-7 * max(1.0, abs(lam_spec)):
        raise InternalConsistencyError(
            f"supplied lambda {lam} disagrees with spectral recomputation {lam_spec}")

    lam_frac = Fraction(lam).limit_denominator(10**6)
    t = (a - lam_frac) / r
    s = None if c is None else Fraction(c, r)
    integral = (t.denominator == 1 and t >= 0
                and (s is None or (s.denominator == 1 and s >= 0)))

    verified = False
    if two_ev and integral:
        _verify_counts(f, v0, r, int(t), None if s is None else int(s))
        verified = True
    return ColumnCountCertificate(t=t, s=s, integral=integral, verified_counts=verified)


def _verify_counts(f: GainGraph, v0, r, t, s):
    base = f.base
    gamma1 = list(base.neighbors[v0])
    dist = _bfs(base, v0)
    gamma2 = [u for u, d in enumerate(dist) if d == 2]
    g1set = set(gamma1)
    for col in gamma1:
        counts = [0] * r
        for u in base.neighbors[col]:
            if u in g1set:
                counts[f.gain_residue(u, col)] += 1
        if any(counts[i] != t for i in range(1, r)):
            raise InternalConsistencyError(
                f"neighborhood column {col} carries counts {counts}, expected "
                f"{t} of each nontrivial power")
    if s is None:
        return
    for col in gamma2:
        counts = [0] * r
        for u in base.neighbors[col]:
            if u in g1set:
                counts[f.gain_residue(u, col)] += 1
        if any(x != s for x in counts):
            raise InternalConsistencyError(
                f"distance-2 column {col} carries counts {counts}, expected "
                f"{s} of every power")


def two_ev_divisibility_obstruction(base: Graph, r):
    """True when s = c/r is non-integral for the strongly regular base,
    which rules out any two-eigenvalue gain of order r before eigensolving."""
    srg = srg_parameters(base)
    if srg is None:
        return False
    return srg.c % r != 0


# ---------------------------------------------------------------------------
# aggregation


def regularity_certificate(x, cert: TwoEvCertificate | None = None) -> RegularityCertificate:
    """Full combinatorial certificate for a graph or a lifted cover."""
    cover = x if isinstance(x, CoverGraph) else None
    g = cover.graph if cover is not None else x
    walk = is_walk_regular(g)
    if not is_connected(g):
        return RegularityCertificate(walk_regular=walk)
    drg = is_distance_regular(g)
    srg = None
    if drg is not None and drg.d == 2:
        k = drg.valency
        srg = SrgParams(g.n, k, k - drg.b[1] - 1, drg.c[1])
    anti, classes = is_antipodal(g)
    drackn = None
    if cover is not None and cert is not None:
        base = cover.base
        if base.m == base.n * (base.n - 1) // 2:
            drackn = drackn_parameters(cover, cert)
    elif cover is None:
        drackn = drackn_of_graph(g)
    return RegularityCertificate(walk_regular=walk, srg=srg, drg=drg,
                                 antipodal=anti, antipodal_classes=classes,
                                 drackn=drackn)
