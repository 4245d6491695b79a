"""Text formats for posets, maps and multimaps, plus JSON-friendly labels.

Poset files: a line ``elements: A B C``, then lines ``rel: x < y`` (one
relation each); ``#`` starts a comment.  Map files: lines ``x -> y``.
Multimap files: lines ``x -> y1 y2 y3``.  Element ids are whitespace-free
tokens; subdivision-level elements (tuples of chains) are addressed by
deterministic labels like ``(M.N)``.
"""

from .errors import InputError
from .maps import MultiMap
from .poset import PosetMap, build_poset


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_poset_text(text):
    elements = None
    relations = []
    for lineno, line in _content_lines(text):
        if line.startswith("elements:"):
            if elements is not None:
                raise InputError(f"line {lineno}: duplicate elements line")
            elements = line[len("elements:"):].split()
            if not elements:
                raise InputError(f"line {lineno}: empty elements line")
        elif line.startswith("rel:"):
            parts = line[len("rel:"):].split()
            if len(parts) != 3 or parts[1] != "<":
                raise InputError(f"line {lineno}: expected 'rel: x < y'")
            relations.append((parts[0], parts[2]))
        else:
            raise InputError(f"line {lineno}: unrecognized line {line!r}")
    if elements is None:
        raise InputError("missing 'elements:' line")
    return build_poset(elements, relations)


def serialize_poset(X):
    """Round-trippable text using the cover relations only."""
    lines = ["elements: " + " ".join(element_label(x) for x in X.elements)]
    for a, b in X.covers():
        lines.append(f"rel: {element_label(a)} < {element_label(b)}")
    return "\n".join(lines) + "\n"


def _parse_arrows(text, n_values):
    rows = []
    for lineno, line in _content_lines(text):
        if "->" not in line:
            raise InputError(f"line {lineno}: expected 'x -> y'")
        lhs, rhs = line.split("->", 1)
        xs = lhs.split()
        ys = rhs.split()
        if len(xs) != 1 or not ys:
            raise InputError(f"line {lineno}: expected one source and >= 1 targets")
        if n_values == 1 and len(ys) != 1:
            raise InputError(f"line {lineno}: a map assigns exactly one value")
        rows.append((lineno, xs[0], ys))
    return rows


def parse_map_text(text, source, target):
    lookup_s = label_lookup(source)
    lookup_t = label_lookup(target)
    assignment = {}
    for lineno, x, ys in _parse_arrows(text, n_values=1):
        if x not in lookup_s:
            raise InputError(f"line {lineno}: unknown source element {x!r}")
        if ys[0] not in lookup_t:
            raise InputError(f"line {lineno}: unknown target element {ys[0]!r}")
        if lookup_s[x] in assignment:
            raise InputError(f"line {lineno}: duplicate assignment for {x!r}")
        assignment[lookup_s[x]] = lookup_t[ys[0]]
    missing = [x for x in source.elements if x not in assignment]
    if missing:
        raise InputError(f"no value assigned to {element_label(missing[0])!r}")
    return PosetMap(source, target, assignment)


def parse_multimap_text(text, source, target):
    lookup_s = label_lookup(source)
    lookup_t = label_lookup(target)
    values = {}
    for lineno, x, ys in _parse_arrows(text, n_values=None):
        if x not in lookup_s:
            raise InputError(f"line {lineno}: unknown source element {x!r}")
        bad = [y for y in ys if y not in lookup_t]
        if bad:
            raise InputError(f"line {lineno}: unknown target element {bad[0]!r}")
        values.setdefault(lookup_s[x], set()).update(lookup_t[y] for y in ys)
    missing = [x for x in source.elements if x not in values]
    if missing:
        raise InputError(f"no value set for {element_label(missing[0])!r}")
    return MultiMap(source, target, values)


def serialize_map(f):
    return "\n".join(
        f"{element_label(x)} -> {element_label(f(x))}" for x in f.source.elements
    ) + "\n"


def serialize_multimap(F):
    lines = []
    for x in F.source.elements:
        ys = sorted(F(x), key=F.target.index)
        lines.append(
            f"{element_label(x)} -> " + " ".join(element_label(y) for y in ys)
        )
    return "\n".join(lines) + "\n"


def element_label(x):
    """Stable printable id; chain tuples become '(a.b)', nested as needed."""
    if isinstance(x, tuple):
        return "(" + ".".join(element_label(v) for v in x) + ")"
    return str(x)


def label_lookup(X):
    """Map from printable labels back to the poset's elements."""
    out = {}
    for x in X.elements:
        lab = element_label(x)
        if lab in out:
            raise InputError(f"ambiguous element label {lab!r}")
        out[lab] = x
    return out
