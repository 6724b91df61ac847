"""Triangular-lattice geometry: sites, coloring, regions, faces.

Sites are integer pairs (i, j) of coordinates in the basis b1 = (1, 0),
b2 = (1/2, sqrt(3)/2).  The squared Euclidean distance between two sites
with coordinate difference (d1, d2) is the quadratic form

    d1*d1 + d1*d2 + d2*d2

and the six nearest neighbors of a site sit at offsets
(+-1, 0), (0, +-1), (1, -1), (-1, 1).

The three-coloring color(i, j) = (i - j) mod 3 is proper and constant on
the sublattice spanned by (-1, 2) and (1, 1).  Color indices are mapped
to names by COLOR_NAMES: 0 blue, 1 red, 2 green.

Faces are the unit up/down triangles.  The up-face anchored at (i, j) has
vertices (i,j), (i+1,j), (i,j+1); the down-face anchored at (i, j) has
vertices (i+1,j), (i,j+1), (i+1,j+1).  Besides plain vertex-sharing
adjacency (12 faces), the face graph used by the contour machinery joins
a face to 6 others: the 3 sharing an edge and the 3 point reflections of
the face through each of its vertices.
"""

from dataclasses import dataclass
from functools import cached_property
import math

NEIGHBOR_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))

COLOR_NAMES = ("blue", "red", "green")
BLUE, RED, GREEN = 0, 1, 2

SQRT3 = math.sqrt(3.0)


def neighbor_sites(s):
    """The six neighbors of s on the infinite lattice."""
    i, j = s
    return (
        (i + 1, j), (i - 1, j), (i, j + 1),
        (i, j - 1), (i + 1, j - 1), (i - 1, j + 1),
    )


def color(s):
    return (s[0] - s[1]) % 3


def color_class(c, region):
    """All sites of color c inside a region."""
    return frozenset(s for s in region.sites() if color(s) == c)


def embed(s):
    """Cartesian embedding of a site."""
    i, j = s
    return (i + 0.5 * j, 0.5 * SQRT3 * j)


def squared_distance(a, b):
    """Exact squared Euclidean distance (an integer)."""
    d1 = a[0] - b[0]
    d2 = a[1] - b[1]
    return d1 * d1 + d1 * d2 + d2 * d2


def l1_distance(a, b):
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def graph_distance(a, b):
    """Hop count between two sites on the lattice graph."""
    d1 = a[0] - b[0]
    d2 = a[1] - b[1]
    return max(abs(d1), abs(d2), abs(d1 + d2))


def are_adjacent(a, b):
    return squared_distance(a, b) == 1


# ---------------------------------------------------------------------------
# regions


class Region:
    """A finite set of sites.  Subclasses fix geometry and wrapping."""

    wraps = False

    def sites(self):
        raise NotImplementedError

    def __contains__(self, s):
        raise NotImplementedError

    def wrap(self, s):
        return s

    def neighbors(self, s):
        """Neighbors of s that lie inside the region (wrapped on a torus)."""
        return tuple(t for t in neighbor_sites(s) if t in self)

    @cached_property
    def size(self):
        return len(self.sites())


@dataclass(frozen=True)
class Rhombus(Region):
    """The rhombus {1..n} x {1..m}."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("rhombus dimensions must be positive")

    def sites(self):
        return tuple((i, j) for j in range(1, self.m + 1)
                     for i in range(1, self.n + 1))

    def __contains__(self, s):
        i, j = s
        return 1 <= i <= self.n and 1 <= j <= self.m


@dataclass(frozen=True)
class CenteredBox(Region):
    """The square box {-r..r} x {-r..r} around the origin."""

    radius: int

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")

    @property
    def side(self):
        return 2 * self.radius + 1

    def sites(self):
        r = self.radius
        return tuple((i, j) for j in range(-r, r + 1)
                     for i in range(-r, r + 1))

    def __contains__(self, s):
        r = self.radius
        return -r <= s[0] <= r and -r <= s[1] <= r


@dataclass(frozen=True)
class Torus(Region):
    """The torus with both coordinates reduced mod (v1, v2).

    Requires v1, v2 >= 3 so that the six neighbor offsets stay distinct
    and never wrap a site onto itself; every torus site then has exactly
    six neighbors, which the density identities rely on.
    """

    v1: int
    v2: int
    wraps = True

    def __post_init__(self):
        if self.v1 < 3 or self.v2 < 3:
            raise ValueError("torus dimensions must be at least 3")

    def sites(self):
        return tuple((i, j) for j in range(self.v2) for i in range(self.v1))

    def __contains__(self, s):
        i, j = s
        return 0 <= i < self.v1 and 0 <= j < self.v2

    def wrap(self, s):
        return (s[0] % self.v1, s[1] % self.v2)

    def neighbors(self, s):
        i, j = s
        v1, v2 = self.v1, self.v2
        return (
            ((i + 1) % v1, j), ((i - 1) % v1, j),
            (i, (j + 1) % v2), (i, (j - 1) % v2),
            ((i + 1) % v1, (j - 1) % v2), ((i - 1) % v1, (j + 1) % v2),
        )


@dataclass(frozen=True)
class FiniteSet(Region):
    """An arbitrary finite set of sites."""

    members: frozenset

    def __init__(self, members):
        object.__setattr__(self, "members", frozenset(members))

    def sites(self):
        return tuple(sorted(self.members))

    def __contains__(self, s):
        return s in self.members


# ---------------------------------------------------------------------------
# faces

UP, DOWN = "U", "D"


def face_vertices(face, region=None):
    """The three vertices of a face, wrapped into the region if it wraps."""
    o, i, j = face
    if o == UP:
        vs = ((i, j), (i + 1, j), (i, j + 1))
    else:
        vs = ((i + 1, j), (i, j + 1), (i + 1, j + 1))
    if region is not None and region.wraps:
        vs = tuple(region.wrap(v) for v in vs)
    return vs


def faces(region):
    """All faces of a region.

    On a torus this is every anchor with both orientations (2*v1*v2
    faces); on a finite region it is the faces whose three vertices all
    lie inside.
    """
    if region.wraps:
        return tuple((o, i, j) for o in (UP, DOWN)
                     for (i, j) in region.sites())
    out = []
    ss = set(region.sites())
    for (i, j) in region.sites():
        for o in (UP, DOWN):
            if all(v in ss for v in face_vertices((o, i, j))):
                out.append((o, i, j))
    return tuple(out)


def face_edge_neighbors(face):
    """The three faces sharing an edge with this one."""
    o, i, j = face
    if o == UP:
        return ((DOWN, i, j), (DOWN, i, j - 1), (DOWN, i - 1, j))
    return ((UP, i, j), (UP, i, j + 1), (UP, i + 1, j))


def face_point_neighbors(face):
    """The three point reflections of the face through its vertices.

    Each shares exactly one vertex with the face, and no face shares an
    edge with both of the pair.
    """
    o, i, j = face
    if o == UP:
        return ((DOWN, i - 1, j - 1), (DOWN, i + 1, j - 1), (DOWN, i - 1, j + 1))
    return ((UP, i + 1, j + 1), (UP, i - 1, j + 1), (UP, i + 1, j - 1))


def face_connected(face):
    """The six faces joined to this one in the contour face graph."""
    return face_edge_neighbors(face) + face_point_neighbors(face)


def face_adjacent(face):
    """The twelve faces sharing at least one vertex with this one."""
    o, i, j = face
    out = []
    vs = face_vertices(face)
    seen = {face}
    for v in vs:
        for f in faces_at_vertex(v):
            if f not in seen:
                seen.add(f)
                out.append(f)
    return tuple(out)


def faces_at_vertex(v):
    """The six faces having v as a vertex, in cyclic order around v."""
    i, j = v
    return (
        (UP, i, j), (DOWN, i - 1, j), (UP, i - 1, j),
        (DOWN, i - 1, j - 1), (UP, i, j - 1), (DOWN, i, j - 1),
    )
