"""Named nilpotent orbits with their weighted Dynkin diagrams.

Labels follow the Bourbaki numbering of the simple roots.  Each entry
may carry a preferred generator-prefix length and a preferred generating
set for the nilpotent subalgebra; these reproduce a specific published
presentation where the defaults (smallest prefix, smallest generating
set) would give an equivalent but differently indexed one.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class OrbitEntry:
    name: str
    type_label: str
    rank: int
    labels: tuple[int, ...]
    onedim_count: int | None = None      # known number of 1-dim reps
    b_override: int | None = None
    K_override: tuple[int, ...] | None = None   # 0-based basis indices
    extended_runtime: bool = False


ORBITS: dict[tuple[str, int, str], OrbitEntry] = {}


def _add(entry: OrbitEntry) -> None:
    ORBITS[(entry.type_label, entry.rank, entry.name)] = entry


_add(OrbitEntry("A1", "G", 2, (0, 1), onedim_count=1))
_add(OrbitEntry("~A1", "G", 2, (1, 0), onedim_count=2,
                b_override=6, K_override=(10, 11, 12, 13)))
_add(OrbitEntry("G2(a1)", "G", 2, (0, 2)))
_add(OrbitEntry("G2", "G", 2, (2, 2)))

_add(OrbitEntry("A1", "F", 4, (1, 0, 0, 0), onedim_count=1))
_add(OrbitEntry("~A1", "F", 4, (0, 0, 0, 1), onedim_count=1))
_add(OrbitEntry("A1+~A1", "F", 4, (0, 1, 0, 0), onedim_count=1))
_add(OrbitEntry("A2+~A1", "F", 4, (0, 0, 1, 0), onedim_count=1,
                extended_runtime=True))
_add(OrbitEntry("~A2+A1", "F", 4, (0, 1, 0, 1), onedim_count=2,
                extended_runtime=True))

_add(OrbitEntry("A1", "E", 6, (0, 1, 0, 0, 0, 0), onedim_count=1,
                extended_runtime=True))
_add(OrbitEntry("3A1", "E", 6, (0, 0, 0, 1, 0, 0), onedim_count=1,
                extended_runtime=True))
_add(OrbitEntry("2A2+A1", "E", 6, (1, 0, 0, 1, 0, 1), onedim_count=1,
                extended_runtime=True))


def lookup(type_label: str, rank: int, name: str) -> OrbitEntry:
    try:
        return ORBITS[(type_label.upper(), rank, name)]
    except KeyError:
        known = sorted(n for (t, r, n) in ORBITS
                       if t == type_label.upper() and r == rank)
        raise KeyError(
            f"unknown orbit {name!r} for {type_label}{rank}; "
            f"catalogued: {known}") from None


def names_for(type_label: str, rank: int) -> list[str]:
    return sorted(n for (t, r, n) in ORBITS
                  if t == type_label.upper() and r == rank)
