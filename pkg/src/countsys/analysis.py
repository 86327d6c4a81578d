"""Aggregate structural report for a counting system."""

from dataclasses import dataclass, field

from .core import is_dedekind, is_minimal, reachable_set
from .morphisms import initiality_report


@dataclass
class MapFlags:
    injective: bool
    surjective: bool
    bijective: bool


@dataclass
class AnalysisReport:
    minimal: bool
    core_size: int
    map_flags: dict  # label -> MapFlags
    dedekind: bool | None  # single-map systems only
    initial: bool
    initial_diagnostics: object | None = None


def analyze(sys):
    minimal = is_minimal(sys)
    flags = {
        lab: MapFlags(f.is_injective(), f.is_surjective(), f.is_bijective())
        for lab, f in zip(sys.index_set, sys.maps)
    }
    dedekind = is_dedekind(sys) if len(sys.index_set) == 1 else None
    if minimal:
        rep = initiality_report(sys)
        initial = rep.initial
    else:
        rep = None
        initial = False
    return AnalysisReport(
        minimal=minimal,
        core_size=len(reachable_set(sys)),
        map_flags=flags,
        dedekind=dedekind,
        initial=initial,
        initial_diagnostics=rep,
    )
