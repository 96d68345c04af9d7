"""Board construction for Picaria and its (k, s) relatives.

A board with s sides has 2s+1 nodes: s corners on an outer polygon, one
midpoint on each outer side (the midpoints form an inner polygon), and a
center. Stones slide along five families of edges: corner-midpoint along
each outer side, midpoint-midpoint around the inner polygon, and a spoke
from the center to every other node. Win lines are the s outer sides
(corner, midpoint, corner) plus the s diameters through the center.

For s=4 this graph is exactly the 3x3 board with king-move adjacency and
the eight usual Tic-tac-toe lines, and nodes are numbered in row-major
grid order so that positions read like the familiar diagrams. For every
other s, nodes are numbered corner 0, midpoint 0, corner 1, midpoint 1,
... with the center last.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ParameterError

CORNER = "corner"
MIDPOINT = "midpoint"
CENTER = "center"

# Polygon node index -> row-major 3x3 grid index, walking the boundary
# clockwise from the top-left corner. Used only for s=4.
_GRID_RELABEL = (0, 1, 2, 5, 8, 7, 6, 3, 4)


@dataclass(frozen=True)
class BoardSpec:
    """Immutable description of one (k, s) board.

    ``adjacency`` holds unordered slide edges as sorted pairs, ``lines``
    holds win lines as sorted triples, and ``symmetries`` holds the 2s
    dihedral node permutations (perm[i] is the image of node i).
    """

    k: int
    s: int
    roles: tuple[str, ...]
    adjacency: frozenset[tuple[int, int]]
    lines: tuple[tuple[int, int, int], ...]
    symmetries: tuple[tuple[int, ...], ...]
    # Corner and midpoint node indices in geometric cyclic order; midpoint i
    # sits on the outer side between corners i and i+1.
    corner_cycle: tuple[int, ...]
    midpoint_cycle: tuple[int, ...]

    @property
    def node_count(self) -> int:
        return 2 * self.s + 1

    @property
    def center(self) -> int:
        return self.roles.index(CENTER)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor list per node."""
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for a, b in self.adjacency:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(ns)) for ns in adj)

    @cached_property
    def symmetry_gathers(self) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
        """Pairs (gather, perm) for fast symmetry images of cell strings.

        ``gather`` is the inverse of ``perm``: the image of a cells string
        under ``perm`` is ``''.join(cells[g] for g in gather)``.
        """
        pairs = []
        for perm in self.symmetries:
            inv = [0] * len(perm)
            for i, j in enumerate(perm):
                inv[j] = i
            pairs.append((tuple(inv), perm))
        return tuple(pairs)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Composition p after q: node i -> p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def _dihedral_group(s: int) -> list[tuple[int, ...]]:
    """Generate the 2s node permutations from one rotation and one reflection.

    Works in polygon numbering (corner i = 2i, midpoint i = 2i+1, center
    last) and closes the two generators under composition.
    """
    n = 2 * s + 1
    center = n - 1

    rotation = [0] * n
    reflection = [0] * n
    for i in range(s):
        rotation[2 * i] = 2 * ((i + 1) % s)
        rotation[2 * i + 1] = 2 * ((i + 1) % s) + 1
        # Reflect through the axis of corner 0: corner i -> corner -i,
        # and the midpoint of side (i, i+1) -> midpoint of side (-i-1, -i).
        reflection[2 * i] = 2 * ((s - i) % s)
        reflection[2 * i + 1] = 2 * ((s - 1 - i) % s) + 1
    rotation[center] = center
    reflection[center] = center

    identity = tuple(range(n))
    group = {identity}
    frontier = [tuple(rotation), tuple(reflection)]
    while frontier:
        perm = frontier.pop()
        if perm in group:
            continue
        group.add(perm)
        for other in list(group):
            for candidate in (_compose(perm, other), _compose(other, perm)):
                if candidate not in group:
                    frontier.append(candidate)
    return sorted(group)


def build_board(k: int, s: int) -> BoardSpec:
    """Construct the (k, s) board.

    Requires s >= 3, k >= 3, and 2k < 2s+1 (the stones must not fill the
    board, otherwise the sliding phase cannot start).
    """
    if s < 3:
        raise ParameterError(f"need at least 3 sides, got s={s}")
    if k < 3:
        raise ParameterError(f"need at least 3 stones per player, got k={k}")
    if 2 * k >= 2 * s + 1:
        raise ParameterError(
            f"2k={2 * k} stones do not fit on the {2 * s + 1}-node board with an empty node to spare"
        )

    n = 2 * s + 1
    center = n - 1
    corner = [2 * i for i in range(s)]
    midpoint = [2 * i + 1 for i in range(s)]

    edges = set()
    for i in range(s):
        edges.add(tuple(sorted((corner[i], midpoint[i]))))
        edges.add(tuple(sorted((midpoint[i], corner[(i + 1) % s]))))
        edges.add(tuple(sorted((midpoint[i], midpoint[(i + 1) % s]))))
    for node in range(n - 1):
        edges.add((node, center))

    lines = []
    for i in range(s):
        lines.append(tuple(sorted((corner[i], midpoint[i], corner[(i + 1) % s]))))
    if s % 2 == 0:
        for i in range(s // 2):
            lines.append(tuple(sorted((corner[i], center, corner[i + s // 2]))))
            lines.append(tuple(sorted((midpoint[i], center, midpoint[i + s // 2]))))
    else:
        for i in range(s):
            opposite = corner[(i + (s + 1) // 2) % s]
            lines.append(tuple(sorted((midpoint[i], center, opposite))))

    roles = []
    for node in range(n - 1):
        roles.append(CORNER if node % 2 == 0 else MIDPOINT)
    roles.append(CENTER)

    symmetries = _dihedral_group(s)

    if s == 4:
        relabel = _GRID_RELABEL
        roles = _apply_relabel_roles(roles, relabel)
        edges = {tuple(sorted((relabel[a], relabel[b]))) for a, b in edges}
        lines = [tuple(sorted(relabel[v] for v in line)) for line in lines]
        symmetries = [
            _relabel_permutation(perm, relabel) for perm in symmetries
        ]
        corner = [relabel[c] for c in corner]
        midpoint = [relabel[m] for m in midpoint]

    return BoardSpec(
        k=k,
        s=s,
        roles=tuple(roles),
        adjacency=frozenset(edges),
        lines=tuple(sorted(lines)),
        symmetries=tuple(sorted(symmetries)),
        corner_cycle=tuple(corner),
        midpoint_cycle=tuple(midpoint),
    )


def _apply_relabel_roles(roles: list[str], relabel: tuple[int, ...]) -> list[str]:
    out = [""] * len(roles)
    for old, new in enumerate(relabel):
        out[new] = roles[old]
    return out


def _relabel_permutation(perm: tuple[int, ...], relabel: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for old, image in enumerate(perm):
        out[relabel[old]] = relabel[image]
    return tuple(out)


def grid_mapping(spec: BoardSpec) -> dict[int, tuple[int, int]]:
    """Node index <-> (row, col) bijection on the 3x3 grid, for s=4 only.

    Node order for s=4 is already row-major, so node i sits at
    (i // 3, i % 3): corners on the grid corners, midpoints on the edge
    middles, and the center at (1, 1).
    """
    if spec.s != 4:
        raise ParameterError(f"grid mapping is defined only for s=4, got s={spec.s}")
    return {node: (node // 3, node % 3) for node in range(spec.node_count)}
