"""Carriers, commuting families and counting systems.

A counting system is a finite carrier, a base point and a non-empty family of
pairwise-commuting total self-maps indexed by string labels.  Everything here
is immutable after construction; all functions are pure.
"""

from dataclasses import dataclass, field

from .errors import (
    BadIndex,
    CarrierTooLarge,
    DuplicateLabel,
    EmptyIndexSet,
    IndexSetTooLarge,
    NonCommuting,
    UnknownLabel,
)

MAX_CARRIER_SIZE = 4096
MAX_INDEX_SET_SIZE = 16


@dataclass(frozen=True)
class Carrier:
    """A finite set of n elements with distinct display labels."""

    labels: tuple

    def __post_init__(self):
        if len(self.labels) < 1:
            raise BadIndex(0, 0)
        if len(self.labels) > MAX_CARRIER_SIZE:
            raise CarrierTooLarge(len(self.labels), MAX_CARRIER_SIZE)
        seen = set()
        for lab in self.labels:
            if not lab:
                raise DuplicateLabel(lab)
            if lab in seen:
                raise DuplicateLabel(lab)
            seen.add(lab)

    @property
    def size(self):
        return len(self.labels)

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(label, self.labels) from None


@dataclass(frozen=True)
class EndoMap:
    """A total self-map of a carrier, stored as an image table on indices."""

    table: tuple

    def __post_init__(self):
        n = len(self.table)
        for img in self.table:
            if not isinstance(img, int) or not 0 <= img < n:
                raise BadIndex(img, n)

    @property
    def carrier_size(self):
        return len(self.table)

    def __call__(self, i):
        return self.table[i]

    def compose(self, other):
        """self after other: (self . other)(x) = self(other(x))."""
        return EndoMap(tuple(self.table[j] for j in other.table))

    def is_injective(self):
        return len(set(self.table)) == len(self.table)

    def is_surjective(self):
        return len(set(self.table)) == len(self.table)

    def is_bijective(self):
        return self.is_injective()

    @staticmethod
    def identity(n):
        return EndoMap(tuple(range(n)))


@dataclass(frozen=True)
class CountingSystem:
    """Carrier + base point + commuting family of self-maps, one per label."""

    carrier: Carrier
    base: int
    index_set: tuple
    maps: tuple  # EndoMap per label, aligned with index_set

    def map_for(self, label):
        try:
            return self.maps[self.index_set.index(label)]
        except ValueError:
            raise UnknownLabel(label, self.index_set) from None

    @property
    def size(self):
        return self.carrier.size


def new_system(carrier, base, index_set, maps):
    """Validate and build a counting system.

    The commuting invariant is checked exhaustively over all label pairs and
    all elements; the first failure is reported with its witness element.
    """
    n = carrier.size
    if not 0 <= base < n:
        raise BadIndex(base, n)
    index_set = tuple(index_set)
    maps = tuple(maps)
    if not index_set:
        raise EmptyIndexSet()
    if len(index_set) > MAX_INDEX_SET_SIZE:
        raise IndexSetTooLarge(len(index_set), MAX_INDEX_SET_SIZE)
    seen = set()
    for lab in index_set:
        if not lab or lab in seen:
            raise DuplicateLabel(lab)
        seen.add(lab)
    if len(maps) != len(index_set):
        raise BadIndex(len(maps), len(index_set))
    for f in maps:
        if f.carrier_size != n:
            raise BadIndex(f.carrier_size, n)
    for i, s in enumerate(index_set):
        for j in range(i + 1, len(index_set)):
            t = index_set[j]
            fs, ft = maps[i], maps[j]
            for x in range(n):
                if fs(ft(x)) != ft(fs(x)):
                    raise NonCommuting(s, t, x)
    return CountingSystem(carrier, base, index_set, maps)


def _bfs_order(sys):
    """Reachable elements from the base, in deterministic discovery order.

    The frontier is expanded element-index ascending, maps applied in
    ascending label order.
    """
    order = [sys.base]
    seen = {sys.base}
    by_label = sorted(zip(sys.index_set, sys.maps))
    frontier = [sys.base]
    while frontier:
        next_frontier = []
        for x in sorted(frontier):
            for _lab, f in by_label:
                y = f(x)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    next_frontier.append(y)
        frontier = next_frontier
    return order


def reachable_set(sys):
    return set(_bfs_order(sys))


def is_minimal(sys):
    """True iff the base point reaches every element under the family."""
    return len(reachable_set(sys)) == sys.size


def minimal_core(sys):
    """Restrict to the least invariant subset containing the base.

    Elements of the core are relabelled in BFS discovery order; the result is
    always minimal and the operation is idempotent up to that relabelling.
    """
    order = _bfs_order(sys)
    if len(order) == sys.size:
        # already minimal; identity relabelling keeps the operation idempotent
        return sys
    new_index = {old: new for new, old in enumerate(order)}
    labels = tuple(sys.carrier.labels[old] for old in order)
    maps = tuple(
        EndoMap(tuple(new_index[f(old)] for old in order)) for f in sys.maps
    )
    return CountingSystem(Carrier(labels), new_index[sys.base], sys.index_set, maps)


def product(a, b):
    """Product system on the cartesian carrier, row-major in the first factor."""
    n, m = a.size, b.size
    if n * m > MAX_CARRIER_SIZE:
        raise CarrierTooLarge(n * m, MAX_CARRIER_SIZE)
    if len(a.index_set) * len(b.index_set) > MAX_INDEX_SET_SIZE:
        raise IndexSetTooLarge(
            len(a.index_set) * len(b.index_set), MAX_INDEX_SET_SIZE
        )
    labels = tuple(
        f"({la},{lb})" for la in a.carrier.labels for lb in b.carrier.labels
    )
    index_set = tuple(f"({s},{t})" for s in a.index_set for t in b.index_set)
    maps = []
    for fs in a.maps:
        for gt in b.maps:
            table = tuple(
                fs(i) * m + gt(j) for i in range(n) for j in range(m)
            )
            maps.append(EndoMap(table))
    return CountingSystem(
        Carrier(labels), a.base * m + b.base, index_set, tuple(maps)
    )


def _fresh_label(taken, stem):
    if stem not in taken:
        return stem
    k = 1
    while f"{stem}_{k}" in taken:
        k += 1
    return f"{stem}_{k}"


def adjoin_omega(sys):
    """Append a fresh element mapped onto the old base and make it the new base.

    Only defined for single-map systems.
    """
    if len(sys.index_set) != 1:
        raise BadIndex(len(sys.index_set), 1)
    n = sys.size
    omega = _fresh_label(set(sys.carrier.labels), "omega")
    labels = sys.carrier.labels + (omega,)
    f = sys.maps[0]
    table = tuple(f(i) for i in range(n)) + (sys.base,)
    return CountingSystem(
        Carrier(labels), n, sys.index_set, (EndoMap(table),)
    )


def is_dedekind(sys):
    """Minimal, injective map, base outside the image.  Single-map systems only.

    Always false on a finite carrier: an injective self-map of a finite set is
    surjective, so the base is in the image.
    """
    if len(sys.index_set) != 1:
        raise BadIndex(len(sys.index_set), 1)
    f = sys.maps[0]
    return (
        is_minimal(sys)
        and f.is_injective()
        and sys.base not in set(f.table)
    )


def pad_single(sys, label):
    """Keep the map at `label`, replace every other map by the identity."""
    k = None
    for i, lab in enumerate(sys.index_set):
        if lab == label:
            k = i
    if k is None:
        raise UnknownLabel(label, sys.index_set)
    ident = EndoMap.identity(sys.size)
    maps = tuple(f if i == k else ident for i, f in enumerate(sys.maps))
    return CountingSystem(sys.carrier, sys.base, sys.index_set, maps)


def single_map_subsystem(sys, label):
    """The single-map system (X, f_label, base) on the same carrier."""
    return CountingSystem(
        sys.carrier, sys.base, (label,), (sys.map_for(label),)
    )
