"""Line-oriented input format for counting systems and index-set operations.

A system document:

    system <name>
    elements <l1> <l2> ... <ln>
    base <label>
    map <s> = <img1> ... <imgn>     # one line per index label

`#` starts a comment; blank lines are ignored.  An odot document starts with
an `odot` header, then `<s> <t> = <u>` lines covering the whole square, plus
an optional `unit <s>` line.
"""

from dataclasses import dataclass

from .biadd import OdotTable
from .core import Carrier, EndoMap, new_system
from .errors import DuplicateLabel, ParseError


@dataclass
class SystemDocument:
    name: str
    system: object
    line_of: dict  # declaration keyword -> source line number


def _logical_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        yield lineno, line


def _col_of(line, token_index):
    # column of the token with the given index (1-based best effort)
    col = 1
    seen = 0
    in_tok = False
    for i, ch in enumerate(line):
        if ch.isspace():
            in_tok = False
        else:
            if not in_tok:
                if seen == token_index:
                    return i + 1
                seen += 1
                in_tok = True
    return col


def parse_system(text):
    name = None
    elements = None
    base_label = None
    map_lines = []  # (lineno, label, images)
    line_of = {}
    for lineno, line in _logical_lines(text):
        tokens = line.split()
        head = tokens[0]
        if head == "system":
            if name is not None:
                raise ParseError(lineno, 1, "duplicate 'system' declaration")
            if len(tokens) != 2:
                raise ParseError(lineno, 1, "'system' takes exactly one name")
            name = tokens[1]
            line_of["system"] = lineno
        elif head == "elements":
            if elements is not None:
                raise ParseError(lineno, 1, "duplicate 'elements' declaration")
            if len(tokens) < 2:
                raise ParseError(lineno, 1, "'elements' needs at least one label")
            elements = tokens[1:]
            line_of["elements"] = lineno
        elif head == "base":
            if base_label is not None:
                raise ParseError(lineno, 1, "duplicate 'base' declaration")
            if len(tokens) != 2:
                raise ParseError(lineno, 1, "'base' takes exactly one label")
            base_label = tokens[1]
            line_of["base"] = lineno
        elif head == "map":
            if len(tokens) < 4 or tokens[2] != "=":
                raise ParseError(lineno, 1, "expected 'map <s> = <images...>'")
            map_lines.append((lineno, tokens[1], tokens[3:]))
        else:
            raise ParseError(lineno, 1, f"unknown declaration {head!r}")

    if name is None:
        raise ParseError(1, 1, "missing 'system' declaration")
    if elements is None:
        raise ParseError(1, 1, "missing 'elements' declaration")
    if base_label is None:
        raise ParseError(1, 1, "missing 'base' declaration")
    if not map_lines:
        raise ParseError(1, 1, "missing 'map' declarations")

    try:
        carrier = Carrier(tuple(elements))
    except DuplicateLabel as exc:
        raise ParseError(
            line_of["elements"], 1, f"duplicate element label {exc.label!r}"
        ) from None
    if base_label not in elements:
        raise ParseError(
            line_of["base"], _col_of("base " + base_label, 1),
            f"base {base_label!r} is not a declared element",
        )
    base = elements.index(base_label)

    index_set = []
    maps = []
    seen = set()
    for lineno, s, images in map_lines:
        if s in seen:
            raise ParseError(lineno, _col_of(f"map {s}", 1),
                             f"duplicate map label {s!r}")
        seen.add(s)
        if len(images) != len(elements):
            raise ParseError(
                lineno, 1,
                f"map {s!r} lists {len(images)} images for "
                f"{len(elements)} elements",
            )
        table = []
        for k, img in enumerate(images):
            if img not in elements:
                raise ParseError(
                    lineno, 1, f"image {img!r} is not a declared element"
                )
            table.append(elements.index(img))
        index_set.append(s)
        maps.append(EndoMap(tuple(table)))
    sys = new_system(carrier, base, tuple(index_set), tuple(maps))
    return SystemDocument(name, sys, line_of)


def emit_system(doc_or_sys, name=None):
    if isinstance(doc_or_sys, SystemDocument):
        sys = doc_or_sys.system
        name = name or doc_or_sys.name
    else:
        sys = doc_or_sys
        name = name or "system"
    labels = sys.carrier.labels
    lines = [f"system {name}", "elements " + " ".join(labels),
             f"base {labels[sys.base]}"]
    for s, f in zip(sys.index_set, sys.maps):
        imgs = " ".join(labels[f(i)] for i in range(sys.size))
        lines.append(f"map {s} = {imgs}")
    return "\n".join(lines) + "\n"


def parse_odot(text, index_set=None):
    header_seen = False
    op = {}
    unit = None
    labels = set()
    for lineno, line in _logical_lines(text):
        tokens = line.split()
        if not header_seen:
            if tokens != ["odot"]:
                raise ParseError(lineno, 1, "expected 'odot' header")
            header_seen = True
            continue
        if tokens[0] == "unit":
            if len(tokens) != 2:
                raise ParseError(lineno, 1, "'unit' takes exactly one label")
            if unit is not None:
                raise ParseError(lineno, 1, "duplicate 'unit' declaration")
            unit = tokens[1]
            labels.add(unit)
            continue
        if len(tokens) != 4 or tokens[2] != "=":
            raise ParseError(lineno, 1, "expected '<s> <t> = <u>'")
        s, t, u = tokens[0], tokens[1], tokens[3]
        if (s, t) in op:
            raise ParseError(lineno, 1, f"duplicate entry for ({s!r}, {t!r})")
        op[(s, t)] = u
        labels.update((s, t, u))
    if not header_seen:
        raise ParseError(1, 1, "missing 'odot' header")
    if index_set is None:
        index_set = tuple(sorted(labels))
    table = OdotTable(tuple(index_set), op, unit)
    table.validate()
    return table
