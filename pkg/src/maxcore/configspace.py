"""Configurations on lattice regions and exhaustive enumeration.

A configuration marks a subset of a region's sites as occupied.  The
occupied set of a valid configuration is independent (no two occupied
sites adjacent), and a configuration is maximal when additionally every
unoccupied site has at least one occupied neighbor, neighbors taken
within the region (wrapped on a torus).  Supports of maximal
configurations are exactly the maximal independent sets of the region's
adjacency graph.

The backtracking enumerator here is the reference oracle that the
transfer-matrix counts and the weighted Gibbs sums are checked against;
it shares no machinery with those code paths.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError, MergeError
from .lattice import (CenteredBox, FiniteSet, Region, Rhombus, Torus,
                      neighbor_sites)

ENUMERATION_BUDGET = 49  # free sites; T_{7,7} is the largest exhaustive case


@dataclass(frozen=True)
class Configuration:
    region: Region
    occupied: frozenset

    def __post_init__(self):
        object.__setattr__(self, "occupied", frozenset(self.occupied))

    @property
    def count(self):
        return len(self.occupied)

    def is_occupied(self, s):
        return s in self.occupied

    def restrict(self, sites):
        return frozenset(self.occupied) & frozenset(sites)


def density(config):
    """Occupied fraction as an exact rational."""
    return Fraction(config.count, config.region.size)


def is_independent(config):
    occ = config.occupied
    region = config.region
    for s in occ:
        for t in region.neighbors(s):
            if t in occ:
                return False
    return True


def undominated_sites(config):
    """Unoccupied sites with no occupied neighbor, within the region."""
    occ = config.occupied
    region = config.region
    out = []
    for s in region.sites():
        if s in occ:
            continue
        if not any(t in occ for t in region.neighbors(s)):
            out.append(s)
    return tuple(out)


def is_maximal(config):
    """True iff occupied set is independent and dominates the region.

    The region fixes the adjacency mode: a torus wraps, every other
    region uses the induced subgraph (free boundary).
    """
    return is_independent(config) and not undominated_sites(config)


# ---------------------------------------------------------------------------
# exhaustive enumeration


def enumerate_completions(region, *, clamped_occupied=(), clamped_empty=(),
                          dominate=None, size_filter=None, budget=None):
    """Yield all maximal-style completions of a partially clamped region.

    Free sites are those neither clamped occupied nor clamped empty.
    Every yielded frozenset contains clamped_occupied, is independent,
    and leaves no site of `dominate` (default: all region sites)
    unoccupied without an occupied neighbor.  `size_filter` restricts to
    completions whose free occupied count plus clamps hits an exact
    total.  Deterministic order (depth first over sorted free sites).
    """
    clamped_occupied = frozenset(clamped_occupied)
    clamped_empty = frozenset(clamped_empty)
    all_sites = list(region.sites())
    free = sorted(s for s in all_sites
                  if s not in clamped_occupied and s not in clamped_empty)
    cap = ENUMERATION_BUDGET if budget is None else budget
    if len(free) > cap:
        raise BudgetExceededError(
            f"{len(free)} free sites exceed enumeration budget {cap}")
    if dominate is None:
        dominate = all_sites
    dominate = [s for s in dominate]

    nbrs = {s: region.neighbors(s) for s in set(all_sites)}
    for a in clamped_occupied:
        for b in nbrs.get(a, ()):  # clamps must be mutually consistent
            if b in clamped_occupied:
                raise ValueError("clamped occupied sites are adjacent")

    index = {s: k for k, s in enumerate(free)}
    nfree = len(free)

    # Domination of site u is settled once u and all its neighbors are
    # decided; record at which free-site index that happens.
    finalized_at = [[] for _ in range(nfree + 1)]
    for u in dominate:
        idxs = []
        if u in index:
            idxs.append(index[u])
        for t in nbrs[u]:
            if t in index:
                idxs.append(index[t])
        finalized_at[max(idxs) + 1 if idxs else 0].append(u)

    occupied = set(clamped_occupied)
    # cover[s] = number of occupied sites in the closed neighborhood of s
    cover = {}
    for s in set(all_sites):
        c = (1 if s in occupied else 0)
        c += sum(1 for t in nbrs[s] if t in occupied)
        cover[s] = c

    for u in finalized_at[0]:
        if cover[u] == 0:
            return  # a fully clamped site can never be dominated

    target = None
    if size_filter is not None:
        target = size_filter - len(clamped_occupied & frozenset(all_sites))
        if target < 0:
            return

    def place(s, delta):
        cover[s] = cover.get(s, 0) + delta
        for t in nbrs[s]:
            cover[t] = cover.get(t, 0) + delta

    def rec(k, placed):
        if k == nfree:
            if target is None or placed == target:
                yield frozenset(occupied)
            return
        s = free[k]
        can_occupy = all(t not in occupied for t in nbrs[s])
        if can_occupy and (target is None or placed < target):
            occupied.add(s)
            place(s, +1)
            if all(cover[u] > 0 for u in finalized_at[k + 1]):
                yield from rec(k + 1, placed + 1)
            place(s, -1)
            occupied.remove(s)
        # leave s empty
        if all(cover[u] > 0 for u in finalized_at[k + 1]):
            if target is None or target - placed <= nfree - k - 1:
                yield from rec(k + 1, placed)

    yield from rec(0, 0)


def enumerate_maximal(region, size_filter=None, budget=None):
    """All maximal configurations of a region, deterministic order."""
    out = []
    for occ in enumerate_completions(region, size_filter=size_filter,
                                     budget=budget):
        if size_filter is not None and len(occ) != size_filter:
            continue
        out.append(Configuration(region, occ))
    return out


def random_maximal(region, rng, clamped_occupied=(), clamped_empty=(),
                   sites=None):
    """Random greedy maximal configuration: visit sites in a random order
    and occupy whenever independence allows.  Always lands on a maximal
    configuration of the free part."""
    clamped_occupied = set(clamped_occupied)
    clamped_empty = set(clamped_empty)
    pool = list(sites if sites is not None else region.sites())
    pool = [s for s in pool
            if s not in clamped_occupied and s not in clamped_empty]
    rng.shuffle(pool)
    occ = set(clamped_occupied)
    for s in pool:
        if all(t not in occ for t in region.neighbors(s)):
            occ.add(s)
    return Configuration(region, frozenset(occ))


# ---------------------------------------------------------------------------
# extension and merging


def extend_to_mis(config):
    """Extend a maximal configuration on Rhombus(n, m) to one on
    Rhombus(n+1, m+1) without touching the occupied set."""
    region = config.region
    if not isinstance(region, Rhombus):
        raise TypeError("extend_to_mis expects a rhombus configuration")
    bigger = Rhombus(region.n + 1, region.m + 1)
    occ = _greedy_complete(bigger, config.occupied)
    if occ & frozenset(region.sites()) != config.occupied:
        raise MergeError("extension modified the interior")  # cannot happen
    return Configuration(bigger, occ)


def _greedy_complete(region, occupied):
    occ = set(occupied)
    for s in sorted(region.sites()):
        if s in occ:
            continue
        if all(t not in occ for t in region.neighbors(s)):
            occ.add(s)
    return frozenset(occ)


def merge_configurations(a, b, region=None):
    """Merge maximal configurations on disjoint site sets into one maximal
    configuration on a covering region, preserving both restrictions.

    Guaranteed to succeed when the supports keep l1 distance >= 4, and
    for two rhombi laid side by side with a single free lattice line
    between them.  Raises MergeError if the union is not independent.
    """
    sa = frozenset(a.region.sites())
    sb = frozenset(b.region.sites())
    if sa & sb:
        raise MergeError("regions overlap")
    if region is None:
        allsites = sa | sb
        i0 = min(s[0] for s in allsites)
        i1 = max(s[0] for s in allsites)
        j0 = min(s[1] for s in allsites)
        j1 = max(s[1] for s in allsites)
        region = FiniteSet((i, j) for i in range(i0, i1 + 1)
                           for j in range(j0, j1 + 1))
    union = a.occupied | b.occupied
    for s in union:
        for t in neighbor_sites(s):
            if t in union:
                raise MergeError("occupied sites adjacent across the seam")
    occ = _greedy_complete(region, union)
    merged = Configuration(region, occ)
    if merged.restrict(sa) != a.occupied or merged.restrict(sb) != b.occupied:
        raise MergeError("completion altered an input restriction")
    return merged


def translate(config, vector):
    """Translate a configuration; the region becomes an explicit site set."""
    di, dj = vector
    sites = frozenset((i + di, j + dj) for (i, j) in config.region.sites())
    occ = frozenset((i + di, j + dj) for (i, j) in config.occupied)
    return Configuration(FiniteSet(sites), occ)


# ---------------------------------------------------------------------------
# text grid format


def to_grid_text(config):
    """Serialize as 'tri <kind> <dims>' plus one 0/1 row per j value,
    increasing j, characters ordered by increasing i."""
    region = config.region
    if isinstance(region, Rhombus):
        header = f"tri rhombus {region.n} {region.m}"
        irange = range(1, region.n + 1)
        jrange = range(1, region.m + 1)
    elif isinstance(region, Torus):
        header = f"tri torus {region.v1} {region.v2}"
        irange = range(region.v1)
        jrange = range(region.v2)
    elif isinstance(region, CenteredBox):
        r = region.radius
        header = f"tri box {r}"
        irange = range(-r, r + 1)
        jrange = range(-r, r + 1)
    else:
        raise TypeError("grid text supports rhombus, torus, and box regions")
    rows = ["".join("1" if (i, j) in config.occupied else "0"
                    for i in irange) for j in jrange]
    return "\n".join([header] + rows) + "\n"


def from_grid_text(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "tri":
        raise ValueError("missing 'tri' header")
    kind = head[1]
    if kind == "rhombus":
        n, m = int(head[2]), int(head[3])
        region = Rhombus(n, m)
        irange = range(1, n + 1)
        jrange = range(1, m + 1)
    elif kind == "torus":
        v1, v2 = int(head[2]), int(head[3])
        region = Torus(v1, v2)
        irange = range(v1)
        jrange = range(v2)
    elif kind == "box":
        r = int(head[2])
        region = CenteredBox(r)
        irange = range(-r, r + 1)
        jrange = range(-r, r + 1)
    else:
        raise ValueError(f"unknown region kind {kind!r}")
    rows = lines[1:]
    if len(rows) != len(jrange):
        raise ValueError("row count does not match region")
    occ = set()
    for j, row in zip(jrange, rows):
        if len(row) != len(irange):
            raise ValueError("row width does not match region")
        for i, ch in zip(irange, row):
            if ch == "1":
                occ.add((i, j))
            elif ch != "0":
                raise ValueError(f"bad grid character {ch!r}")
    return Configuration(region, frozenset(occ))
