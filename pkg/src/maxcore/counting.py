"""Transfer-matrix counting of maximal and independent configurations.

Rhombi Λ_{n,m} = {1..n} x {1..m} are swept one j-column at a time; a
column is the n sites (1..n, j).  For the maximal count the sweep state
is a pair of n-bit masks

    occ   occupancy of the current column,
    pend  sites of the current column that are still undominated
          (they may yet be dominated from the next column),

which keeps every site's domination decidable within a two-column
window.  In-column adjacency joins bits b and b+1; the next column
couples bit b to bits b and b-1 (offsets (0,1) and (-1,1)).  Counts are
exact big integers.  A square-lattice mode drops the skew coupling and
reproduces the same pipeline on Z^2 for cross-checking.

Capacity bounds are reported in bits per site with the (n+1)(m+1)
denominator that accounts for the one-row/one-column seams needed to
tile the plane with independently chosen blocks.
"""

from dataclasses import dataclass
from functools import lru_cache
import json
import math

from .errors import BudgetExceededError
from .lattice import Rhombus
from .configspace import Configuration

MAX_COLUMN_BITS = 16

# Growth constant of independent sets on the triangular lattice (the
# hard-hexagon model), and the four-decimal capacity upper bound in
# bits per site conventionally reported from it.
HARD_HEXAGON_CONSTANT = 1.39548
CAPACITY_UPPER_BITS = 0.4807


@dataclass(frozen=True)
class CountResult:
    n: int
    m: int
    count: int

    @property
    def bits_per_site(self):
        if self.count <= 0:
            return float("-inf")
        return math.log2(self.count) / ((self.n + 1) * (self.m + 1))


def _check_width(n):
    if not 1 <= n <= MAX_COLUMN_BITS:
        raise BudgetExceededError(
            f"column width {n} outside 1..{MAX_COLUMN_BITS}")


@lru_cache(maxsize=None)
def _column_masks(n):
    """Masks over n bits with no two adjacent bits set, increasing."""
    return tuple(c for c in range(1 << n) if not (c & (c >> 1)))


@lru_cache(maxsize=None)
def _transition_tables(n, square):
    """State graph of the maximal-configuration sweep.

    States are (occ, pend) pairs reachable from the empty virtual
    column; state 0 is (0, 0), which doubles as the initial state.
    Returns (states, moves, finals) where moves[i] is a tuple of
    (column_mask, successor_index) pairs in increasing mask order and
    finals is the set of indices with pend == 0.
    """
    _check_width(n)
    full = (1 << n) - 1
    masks = _column_masks(n)

    def step(occ, pend, c):
        if c & occ:
            return None
        if not square and (c << 1) & occ:
            return None
        covered_prev = c if square else (c | (c << 1)) & full
        if pend & ~covered_prev:
            return None
        dom = c | (c << 1) | (c >> 1) | occ
        if not square:
            dom |= occ >> 1
        return (c, full & ~dom)

    index = {(0, 0): 0}
    states = [(0, 0)]
    moves = []
    k = 0
    while k < len(states):
        occ, pend = states[k]
        row = []
        for c in masks:
            nxt = step(occ, pend, c)
            if nxt is None:
                continue
            j = index.get(nxt)
            if j is None:
                j = len(states)
                index[nxt] = j
                states.append(nxt)
            row.append((c, j))
        moves.append(tuple(row))
        k += 1
    finals = frozenset(i for i, (_, pend) in enumerate(states) if pend == 0)
    return tuple(states), tuple(moves), finals


def _sweep_counts(n, m, square=False):
    """Exact maximal-configuration counts for Λ_{n,1} .. Λ_{n,m}."""
    if m < 1:
        raise ValueError("m must be positive")
    states, moves, finals = _transition_tables(n, square)
    nstates = len(states)
    preds = [[] for _ in range(nstates)]
    for i, row in enumerate(moves):
        for _, j in row:
            preds[j].append(i)
    preds = [tuple(p) for p in preds]
    vec = [0] * nstates
    vec[0] = 1
    out = []
    for _ in range(m):
        get = vec.__getitem__
        vec = [sum(map(get, p)) for p in preds]
        out.append(sum(vec[i] for i in finals))
    return out


_count_cache = {}


def count_maximal(n, m, square=False):
    """Number of maximal configurations on Λ_{n,m} (exact)."""
    key = (n, m, square)
    if key not in _count_cache:
        _count_cache[key] = _sweep_counts(n, m, square)[-1]
    return _count_cache[key]


def count_maximal_sweep(n, m, square=False):
    """CountResults for every length 1..m at fixed width n."""
    counts = _sweep_counts(n, m, square)
    for mm, c in enumerate(counts, start=1):
        _count_cache.setdefault((n, mm, square), c)
    return [CountResult(n, mm, c) for mm, c in enumerate(counts, start=1)]


def count_maximal_z2(n, m):
    """Square-lattice cross-check: maximal configurations on the n x m
    grid with von Neumann adjacency."""
    return count_maximal(n, m, square=True)


def capacity_lower(n, m, square=False):
    """log2 count / ((n+1)(m+1)), a capacity lower bound in bits/site."""
    return CountResult(n, m, count_maximal(n, m, square)).bits_per_site


def capacity_upper():
    """Published upper bound for the capacity in bits per site.

    Four-decimal bound derived from the hard-hexagon independent-set
    growth constant 1.39548 (log2 of the constant, at the precision
    conventional for this bound).
    """
    return CAPACITY_UPPER_BITS


def count_independent(n, m=None):
    """Number of independent sets on Λ_{n,m} (no maximality)."""
    if m is None:
        m = n
    _check_width(n)
    if m < 1:
        raise ValueError("m must be positive")
    masks = _column_masks(n)
    compat = {occ: tuple(c for c in masks
                         if not (c & occ) and not ((c << 1) & occ))
              for occ in masks}
    cur = dict.fromkeys(masks, 0)
    cur[0] = 1  # virtual empty column before the first
    for _ in range(m):
        nxt = dict.fromkeys(masks, 0)
        for occ, v in cur.items():
            if not v:
                continue
            for c in compat[occ]:
                nxt[c] += v
        cur = nxt
    return sum(cur.values())


# ---------------------------------------------------------------------------
# rank/unrank of maximal configurations, lexicographic by column masks


@lru_cache(maxsize=None)
def _suffix_tables(n, m):
    """suffix[x][i] = number of ways to finish columns x+1..m given the
    sweep sits in state i after column x."""
    states, moves, finals = _transition_tables(n, False)
    nstates = len(states)
    suffix = [[0] * nstates for _ in range(m + 1)]
    for i in finals:
        suffix[m][i] = 1
    for x in range(m - 1, -1, -1):
        row = suffix[x]
        nxt = suffix[x + 1]
        for i in range(nstates):
            row[i] = sum(nxt[j] for _, j in moves[i])
    return suffix


def _column_mask_of(config, j):
    occ = 0
    for b in range(config.region.n):
        if (b + 1, j) in config.occupied:
            occ |= 1 << b
    return occ


def rank(config):
    """Index of a maximal configuration on Λ_{n,m} in the lexicographic
    order of its column-mask tuple."""
    region = config.region
    if not isinstance(region, Rhombus):
        raise TypeError("rank expects a rhombus configuration")
    n, m = region.n, region.m
    _, moves, _ = _transition_tables(n, False)
    suffix = _suffix_tables(n, m)
    state = 0
    r = 0
    for x in range(m):
        cx = _column_mask_of(config, x + 1)
        hit = False
        for c, j in moves[state]:
            if c < cx:
                r += suffix[x + 1][j]
            elif c == cx:
                state = j
                hit = True
                break
        if not hit:
            raise ValueError("configuration is not maximal on its rhombus")
    if suffix[m][state] != 1:
        raise ValueError("configuration is not maximal on its rhombus")
    return r


def unrank(k, n, m):
    """Inverse of rank: the k-th maximal configuration on Λ_{n,m}."""
    total = count_maximal(n, m)
    if not 0 <= k < total:
        raise ValueError(f"rank {k} outside 0..{total - 1}")
    _, moves, _ = _transition_tables(n, False)
    suffix = _suffix_tables(n, m)
    state = 0
    occ = set()
    for x in range(m):
        for c, j in moves[state]:
            cnt = suffix[x + 1][j]
            if k < cnt:
                for b in range(n):
                    if c >> b & 1:
                        occ.add((b + 1, x + 1))
                state = j
                break
            k -= cnt
        else:
            raise AssertionError("suffix tables inconsistent")
    return Configuration(Rhombus(n, m), frozenset(occ))


# ---------------------------------------------------------------------------
# emitters


def results_to_csv(results):
    lines = ["n,m,count_digits,bits_per_site"]
    for r in results:
        lines.append(f"{r.n},{r.m},{len(str(r.count))},{r.bits_per_site:.10f}")
    return "\n".join(lines) + "\n"


def results_to_json(results):
    return json.dumps([{"n": r.n, "m": r.m, "count": str(r.count),
                        "bits_per_site": r.bits_per_site}
                       for r in results], indent=2, sort_keys=True) + "\n"
