"""Orbit counting for full boards under the dihedral symmetry group.

The number of boards with k stones each, counted modulo the 2s board
symmetries, comes out of the orbit-counting (Burnside) average

    #orbits = (1 / |G|) * sum over g in G of |Fix(g)|

where Fix(g) is computed from g's cycle decomposition: a board fixed by g
colors each cycle uniformly, so |Fix(g)| is the number of ways to assign
x / o / empty to whole cycles with the right totals. Boards where both
players hold a completed line never occur in play and are excluded; the
position graph size doubles the remaining orbit count for the turn flag.

Everything here is cross-checked by enumerate_orbits, which canonicalizes
every board explicitly and counts distinct representatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .board import BoardSpec
from .errors import ParameterError
from .position import EMPTY, O, X, canonical_cells

ENUMERATION_GUARD = 10**7


@dataclass(frozen=True)
class OrbitReport:
    """Orbit counts for one board and one occupancy profile."""

    k: int
    s: int
    profile: tuple[int, int]
    group_order: int
    fix_counts: tuple[tuple[str, int], ...]
    orbit_count_raw: int
    excluded_orbits: int
    orbit_count: int
    position_graph_size: int

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "s": self.s,
            "profile": {"x": self.profile[0], "o": self.profile[1]},
            "group_order": self.group_order,
            "fix_counts": {name: count for name, count in self.fix_counts},
            "orbit_count_raw": self.orbit_count_raw,
            "excluded_orbits": self.excluded_orbits,
            "orbit_count": self.orbit_count,
            "position_graph_size": self.position_graph_size,
        }

    def render(self) -> str:
        width = max(len(name) for name, _ in self.fix_counts)
        lines = [
            f"board (k={self.k}, s={self.s}), "
            f"profile {self.profile[0]} x / {self.profile[1]} o, "
            f"group order {self.group_order}",
        ]
        for name, count in self.fix_counts:
            lines.append(f"  fixed by {name:<{width}}  {count}")
        lines.append(f"  orbits (raw)        {self.orbit_count_raw}")
        lines.append(f"  double-win orbits   -{self.excluded_orbits}")
        lines.append(f"  orbits              {self.orbit_count}")
        lines.append(f"  position graph size {self.position_graph_size}")
        return "\n".join(lines)


def cycle_lengths(perm: tuple[int, ...]) -> list[int]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        node = start
        while not seen[node]:
            seen[node] = True
            node = perm[node]
            length += 1
        lengths.append(length)
    return lengths


def fixed_boards(spec: BoardSpec, perm: tuple[int, ...], profile: tuple[int, int]) -> int:
    """Number of boards with the given stone profile fixed by the permutation.

    A fixed board colors each cycle of the permutation uniformly, so count
    cycle colorings whose x and o totals hit the profile.
    """
    x_total, o_total = profile
    counts: dict[tuple[int, int], int] = {(0, 0): 1}
    for length in cycle_lengths(perm):
        bumped: dict[tuple[int, int], int] = {}
        for (xs, os_), ways in counts.items():
            for dx, do in ((length, 0), (0, length), (0, 0)):
                nx, no = xs + dx, os_ + do
                if nx <= x_total and no <= o_total:
                    bumped[(nx, no)] = bumped.get((nx, no), 0) + ways
        counts = bumped
    return counts.get((x_total, o_total), 0)


def symmetry_names(spec: BoardSpec) -> dict[tuple[int, ...], str]:
    """Human-readable name per group element.

    Rotations are named by angle (identity is "e"); reflections by their
    axis: through corner i ("C{i}", classic D1/D2 for s=4), through
    midpoint i ("M{i}", classic V/H for s=4), or through corner i and the
    opposite midpoint for odd s ("A{i}").
    """
    s = spec.s
    corners, midpoints = spec.corner_cycle, spec.midpoint_cycle
    names: dict[tuple[int, ...], str] = {}
    classic = {}
    if s == 4:
        classic = {("C", 0): "D1", ("C", 1): "D2", ("M", 0): "V", ("M", 1): "H"}
    for perm in spec.symmetries:
        shift = next(
            (
                j
                for j in range(s)
                if all(perm[corners[i]] == corners[(i + j) % s] for i in range(s))
                and all(perm[midpoints[i]] == midpoints[(i + j) % s] for i in range(s))
            ),
            None,
        )
        if shift is not None:
            names[perm] = "e" if shift == 0 else f"R{360 * shift // s}"
            continue
        fixed_corners = [i for i in range(s) if perm[corners[i]] == corners[i]]
        fixed_midpoints = [i for i in range(s) if perm[midpoints[i]] == midpoints[i]]
        if s % 2 == 1:
            axis = ("A", fixed_corners[0])
        elif fixed_corners:
            axis = ("C", fixed_corners[0])
        else:
            axis = ("M", fixed_midpoints[0])
        names[perm] = classic.get(axis, f"{axis[0]}{axis[1]}")
    return names


def _display_rank(name: str) -> tuple[int, object]:
    """Order group elements as e, rotations by angle, then reflections."""
    if name == "e":
        return (0, 0)
    if name.startswith("R"):
        return (1, int(name[1:]))
    classic = {"H": 0, "V": 1, "D1": 2, "D2": 3}
    if name in classic:
        return (2, classic[name])
    return (2, name)


def burnside_orbits(spec: BoardSpec, profile: tuple[int, int] | None = None) -> OrbitReport:
    """Orbit counts via the group average, with double-win exclusion."""
    if profile is None:
        profile = (spec.k, spec.k)
    if sum(profile) > spec.node_count:
        raise ParameterError(f"profile {profile} does not fit on {spec.node_count} nodes")
    names = symmetry_names(spec)
    ordered = sorted(spec.symmetries, key=lambda perm: _display_rank(names[perm]))
    fix_counts = tuple(
        (names[perm], fixed_boards(spec, perm, profile)) for perm in ordered
    )
    total = sum(count for _, count in fix_counts)
    order = len(spec.symmetries)
    if total % order != 0:
        raise AssertionError(f"fixed-board total {total} not divisible by {order}")
    raw = total // order
    excluded = len(double_win_boards(spec, profile))
    final = raw - excluded
    return OrbitReport(
        k=spec.k,
        s=spec.s,
        profile=profile,
        group_order=order,
        fix_counts=fix_counts,
        orbit_count_raw=raw,
        excluded_orbits=excluded,
        orbit_count=final,
        position_graph_size=2 * final,
    )


def double_win_boards(spec: BoardSpec, profile: tuple[int, int] | None = None) -> list[str]:
    """Canonical boards where both players hold a completed line.

    Any x line and o line are node-disjoint (a shared node would need both
    colors), so enumerate disjoint line pairs and fill in the remaining
    stones every possible way.
    """
    if profile is None:
        profile = (spec.k, spec.k)
    x_total, o_total = profile
    if x_total < 3 or o_total < 3:
        return []
    n = spec.node_count
    boards = set()
    for x_line in spec.lines:
        for o_line in spec.lines:
            if set(x_line) & set(o_line):
                continue
            free = [i for i in range(n) if i not in x_line and i not in o_line]
            for extra_x in combinations(free, x_total - 3):
                rest = [i for i in free if i not in extra_x]
                for extra_o in combinations(rest, o_total - 3):
                    cells = [EMPTY] * n
                    for i in x_line + tuple(extra_x):
                        cells[i] = X
                    for i in o_line + tuple(extra_o):
                        cells[i] = O
                    boards.add(canonical_cells(spec, "".join(cells)))
    return sorted(boards)


def count_double_win_orbits(spec: BoardSpec) -> tuple[int, list[str]]:
    """Orbit count and canonical representatives of double-win full boards."""
    boards = double_win_boards(spec)
    return len(boards), boards


def enumerate_orbits(spec: BoardSpec, profile: tuple[int, int] | None = None) -> int:
    """Explicit orbit count: canonicalize every board with the profile.

    Cross-check for burnside_orbits; includes double-win boards, so it
    matches orbit_count_raw, not orbit_count.
    """
    if profile is None:
        profile = (spec.k, spec.k)
    x_total, o_total = profile
    n = spec.node_count
    raw = math.comb(n, x_total) * math.comb(n - x_total, o_total)
    if raw > ENUMERATION_GUARD:
        raise ParameterError(
            f"{raw} raw boards exceeds the enumeration guard of {ENUMERATION_GUARD}"
        )
    seen = set()
    for xs in combinations(range(n), x_total):
        remaining = [i for i in range(n) if i not in xs]
        for os_ in combinations(remaining, o_total):
            cells = [EMPTY] * n
            for i in xs:
                cells[i] = X
            for i in os_:
                cells[i] = O
            seen.add(canonical_cells(spec, "".join(cells)))
    return len(seen)
