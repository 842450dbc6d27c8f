"""Embedded systems of chain curves as four-valent graphs with rotation data.

A subset of the chain curves a1, ..., a(2g+1) sits on the surface as an
embedded graph: one vertex per crossing of consecutive curves, four darts per
vertex.  Each dart is a pair (vertex position, slot); slots follow the cyclic
order (lower curve out, higher curve out, lower curve in, higher curve in),
read in the surface orientation for handedness +1 and reversed for -1.
Each curve is an oriented cycle through its crossings, pairing its out-dart
at one crossing with its in-dart at the next; these pairs are the edges.

Faces are the orbits of "cross the edge, then rotate": the complementary
regions of the curve system.  The system fills the surface exactly when the
graph is nonempty, connected, free of crossing-less loop components, and the
Euler count V - E + F equals 2 - 2g.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .words import SurfaceSpec

__all__ = [
    "InvalidCurveSystemError",
    "Crossing",
    "EmbeddedCurveSystem",
    "FaceReport",
    "FillingResult",
    "build_chain_system",
    "trace_faces",
    "check_filling",
    "bigon_scan",
]

Dart = tuple[int, int]

# Slot layout at every crossing.
_LOWER_OUT, _HIGHER_OUT, _LOWER_IN, _HIGHER_IN = 0, 1, 2, 3


class InvalidCurveSystemError(ValueError):
    """Raised when crossing or cycle data does not describe a curve system."""


@dataclass(frozen=True)
class Crossing:
    """A transverse intersection of two distinct curves.

    handedness +1 uses the canonical cyclic dart order, -1 its mirror.
    """

    lower: int
    higher: int
    handedness: int = 1

    def __post_init__(self) -> None:
        if self.lower == self.higher:
            raise InvalidCurveSystemError("a crossing needs two distinct curves")
        if self.lower > self.higher:
            raise InvalidCurveSystemError("crossing curves must be ordered (lower, higher)")
        if self.handedness not in (1, -1):
            raise InvalidCurveSystemError(f"handedness must be +1 or -1, got {self.handedness!r}")

    def slot_out(self, curve: int) -> int:
        return _LOWER_OUT if curve == self.lower else _HIGHER_OUT

    def slot_in(self, curve: int) -> int:
        return _LOWER_IN if curve == self.lower else _HIGHER_IN

    def involves(self, curve: int) -> bool:
        return curve in (self.lower, self.higher)


@dataclass(frozen=True)
class EmbeddedCurveSystem:
    """Curves, crossings, and per-curve crossing cycles.

    ``cycles`` lists, for each curve in ``curves`` order, the crossing
    positions the curve visits in traversal order.  Curves visiting no
    crossing are isolated loops; they carry no darts.
    """

    surface: SurfaceSpec
    curves: tuple[int, ...]
    crossings: tuple[Crossing, ...]
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.curves:
            raise InvalidCurveSystemError("a curve system needs at least one curve")
        if len(set(self.curves)) != len(self.curves):
            raise InvalidCurveSystemError("duplicate curves")
        for c in self.curves:
            self.surface.validate_curve(c)
        if len(self.cycles) != len(self.curves):
            raise InvalidCurveSystemError("one crossing cycle required per curve")
        for crossing in self.crossings:
            for c in (crossing.lower, crossing.higher):
                if c not in self.curves:
                    raise InvalidCurveSystemError(f"crossing mentions absent curve {c}")
        # Every crossing must appear exactly once in each of its two curves'
        # cycles, and cycles may only visit crossings on their own curve.
        for curve, cycle in zip(self.curves, self.cycles):
            for v in cycle:
                if not 0 <= v < len(self.crossings):
                    raise InvalidCurveSystemError(f"cycle of {curve} visits unknown crossing {v}")
                if not self.crossings[v].involves(curve):
                    raise InvalidCurveSystemError(
                        f"cycle of curve {curve} visits crossing {v} not on it"
                    )
        for v, crossing in enumerate(self.crossings):
            for c in (crossing.lower, crossing.higher):
                count = self.cycles[self.curves.index(c)].count(v)
                if count != 1:
                    raise InvalidCurveSystemError(
                        f"crossing {v} appears {count} times in the cycle of curve {c}"
                    )

    @property
    def vertex_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return sum(len(cycle) for cycle in self.cycles)

    @property
    def isolated_curves(self) -> tuple[int, ...]:
        return tuple(c for c, cyc in zip(self.curves, self.cycles) if not cyc)

    def darts(self) -> list[Dart]:
        return [(v, s) for v in range(len(self.crossings)) for s in range(4)]

    def rotate(self, dart: Dart) -> Dart:
        v, s = dart
        return (v, (s + self.crossings[v].handedness) % 4)

    def edge_involution(self) -> dict[Dart, Dart]:
        """Pair each out-dart with the in-dart at the next crossing on its curve."""
        alpha: dict[Dart, Dart] = {}
        for curve, cycle in zip(self.curves, self.cycles):
            for pos, v in enumerate(cycle):
                w = cycle[(pos + 1) % len(cycle)]
                src = (v, self.crossings[v].slot_out(curve))
                dst = (w, self.crossings[w].slot_in(curve))
                alpha[src] = dst
                alpha[dst] = src
        if len(alpha) != 4 * len(self.crossings):
            raise InvalidCurveSystemError("dart pairing does not cover every dart exactly once")
        for d, e in alpha.items():
            if alpha[e] != d:
                raise InvalidCurveSystemError("dart pairing is not an involution")
        return alpha

    def to_json_dict(self) -> dict:
        return {
            "g": self.surface.genus,
            "curves": [f"a{c}" for c in self.curves],
            "vertices": [
                {
                    "curves": [f"a{x.lower}", f"a{x.higher}"],
                    "handedness": x.handedness,
                }
                for x in self.crossings
            ],
            "cycles": {f"a{c}": list(cyc) for c, cyc in zip(self.curves, self.cycles)},
            "isolated": [f"a{c}" for c in self.isolated_curves],
        }


def build_chain_system(
    g: int, indices: Iterable[int], handedness: int = 1
) -> EmbeddedCurveSystem:
    """The canonical embedded system of a subset of chain curves.

    Consecutive present indices cross once; every crossing carries the same
    handedness.  Curves whose neighbours are absent become isolated loops.
    """
    surface = SurfaceSpec(g)
    chosen = sorted(set(indices))
    if not chosen:
        raise InvalidCurveSystemError("need at least one curve index")
    for c in chosen:
        surface.validate_curve(c)
    present = set(chosen)
    crossings = []
    position: dict[tuple[int, int], int] = {}
    for c in chosen:
        if c + 1 in present:
            position[(c, c + 1)] = len(crossings)
            crossings.append(Crossing(c, c + 1, handedness))
    cycles = []
    for c in chosen:
        visits = []
        if (c - 1, c) in position:
            visits.append(position[(c - 1, c)])
        if (c, c + 1) in position:
            visits.append(position[(c, c + 1)])
        cycles.append(tuple(visits))
    return EmbeddedCurveSystem(surface, tuple(chosen), tuple(crossings), tuple(cycles))


@dataclass(frozen=True)
class FaceReport:
    """Face census of an embedded curve system."""

    face_count: int
    face_sizes: tuple[int, ...]
    connected: bool
    euler_check: int
    faces: tuple[tuple[Dart, ...], ...] = field(repr=False, default=())

    def to_json_dict(self) -> dict:
        return {
            "faces": self.face_count,
            "sizes": list(self.face_sizes),
            "connected": self.connected,
            "euler": self.euler_check,
        }


def trace_faces(system: EmbeddedCurveSystem) -> FaceReport:
    """Trace complementary faces as orbits of (cross edge, then rotate)."""
    if system.vertex_count == 0:
        raise InvalidCurveSystemError(
            "face tracing needs at least one crossing; vertex-free systems "
            "are handled by check_filling directly"
        )
    alpha = system.edge_involution()
    seen: set[Dart] = set()
    faces: list[tuple[Dart, ...]] = []
    for start in system.darts():
        if start in seen:
            continue
        orbit = []
        d = start
        while True:
            orbit.append(d)
            seen.add(d)
            d = system.rotate(alpha[d])
            if d == start:
                break
            if d in seen:
                raise InvalidCurveSystemError("face permutation is not a permutation")
        faces.append(tuple(orbit))
    sizes = tuple(sorted((len(f) for f in faces), reverse=True))
    # Connectivity of the underlying graph via edge endpoints.
    parent = list(range(system.vertex_count))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for d, e in alpha.items():
        ri, rj = find(d[0]), find(e[0])
        if ri != rj:
            parent[ri] = rj
    connected = len({find(i) for i in range(system.vertex_count)}) == 1
    euler = system.vertex_count - system.edge_count + len(faces)
    return FaceReport(len(faces), sizes, connected, euler, tuple(faces))


@dataclass(frozen=True)
class FillingResult:
    fills: bool
    disk_count: int | None

    def to_json_dict(self) -> dict:
        return {"fills": self.fills, "disk_count": self.disk_count}


def check_filling(system: EmbeddedCurveSystem) -> FillingResult:
    """Whether the system fills: complement a disjoint union of disks.

    An isolated loop has an annular neighbourhood, so any system with a
    crossing-less component cannot fill; the remaining systems fill exactly
    when the graph is connected and V - E + F matches 2 - 2g.
    """
    if system.isolated_curves or system.vertex_count == 0:
        return FillingResult(False, None)
    report = trace_faces(system)
    if not report.connected:
        return FillingResult(False, None)
    if report.euler_check != 2 - 2 * system.surface.genus:
        return FillingResult(False, None)
    return FillingResult(True, report.face_count)


def bigon_scan(system: EmbeddedCurveSystem) -> list[tuple[Dart, ...]]:
    """Faces with exactly two corners; a filling collection never has one."""
    if system.vertex_count == 0:
        return []
    report = trace_faces(system)
    return [face for face in report.faces if len(face) == 2]
