"""Text formats for graphs and complexes.

graph file::

    graph 5          # header: vertex count
    1 2              # one edge per line
    2 3

complex file (one facet per line, "." for the empty facet)::

    complex 5
    1 3
    2 4

cocomplex file (one facet complement per line)::

    cocomplex 5
    2 4 5
"""
from cutcomplex.complexes.model import complex_from_cofacets
from cutcomplex.complexes.model import complex_from_facets, graph_from_edges

EMPTY_FACET = "."


class FormatError(ValueError):
    """Malformed input file; ``line`` is 1-based, or None for the file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _content_lines(text):
    """Yield (line number, tokens) for every line that is not a comment."""
    for line_num, line in enumerate(text.splitlines(), 1):
        content = line.split("#", 1)[0].strip()
        if content:
            yield line_num, content.split()


def _parse_header(lines, expected):
    try:
        line_num, tokens = next(lines)
    except StopIteration:
        raise FormatError("file has no header.") from None
    if len(tokens) != 2 or tokens[0] not in expected:
        raise FormatError(
            f"header must read '<kind> <n>' with kind in {expected}; "
            f"got '{' '.join(tokens)}'.",
            line_num,
        )
    n = _parse_int(tokens[1], line_num)
    if n < 1:
        raise FormatError(f"vertex count ({n}) must be at least 1.", line_num)
    return tokens[0], n


def _parse_int(token, line_num):
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"'{token}' is not an integer.", line_num) from None


def _parse_labels(tokens, n, line_num):
    labels = [_parse_int(t, line_num) for t in tokens]
    bad = [v for v in labels if not 1 <= v <= n]
    if bad:
        raise FormatError(f"labels {bad} out of range 1..{n}.", line_num)
    return labels


def parse_graph(text):
    """Parse a graph file.
    Args:
      text: str, file contents.
    Returns:
      Graph.
    Raises:
      FormatError: with the offending line number.
    """
    lines = _content_lines(text)
    _, n = _parse_header(lines, ["graph"])
    edges = []
    for line_num, tokens in lines:
        if len(tokens) != 2:
            raise FormatError(
                f"expected an edge 'u v'; got '{' '.join(tokens)}'.", line_num
            )
        u, v = _parse_labels(tokens, n, line_num)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}.", line_num)
        edges.append((u, v))
    return graph_from_edges(n, edges)


def parse_complex(text, strict=False):
    """Parse a complex or cocomplex file, dispatching on the header.

    With ``strict`` duplicate and non-maximal facets are errors; otherwise
    they are dropped.
    """
    lines = _content_lines(text)
    kind, n = _parse_header(lines, ["complex", "cocomplex"])
    faces = []
    first_line = {}
    for line_num, tokens in lines:
        if tokens == [EMPTY_FACET]:
            face = frozenset()
        else:
            labels = _parse_labels(tokens, n, line_num)
            face = frozenset(labels)
            if len(face) != len(labels):
                raise FormatError(
                    f"repeated label in {sorted(labels)}.", line_num
                )
        if strict and face in first_line:
            raise FormatError(
                f"duplicate set {sorted(face)} (first on line "
                f"{first_line[face]}).",
                line_num,
            )
        first_line.setdefault(face, line_num)
        faces.append(face)
    build = complex_from_facets
    if kind == "cocomplex":
        build = complex_from_cofacets
    try:
        return build(n, faces, strict=strict)
    except ValueError as e:
        raise FormatError(str(e)) from e


def _read(path):
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def load_graph(path):
    return parse_graph(_read(path))


def load_complex(path, strict=False):
    return parse_complex(_read(path), strict=strict)


def _format_set(face):
    return " ".join(str(v) for v in sorted(face)) or EMPTY_FACET


def format_graph(graph):
    rows = [f"graph {graph.n}"]
    rows += [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(rows) + "\n"


def format_complex(cplx, cofacets=False):
    """Render a complex; ``cofacets`` writes the complements instead."""
    if cofacets:
        rows = [f"cocomplex {cplx.n}"]
        rows += [_format_set(f) for f in cplx.cofacets]
    else:
        rows = [f"complex {cplx.n}"]
        rows += [_format_set(f) for f in cplx.facets]
    return "\n".join(rows) + "\n"


def save_graph(graph, path):
    _write(path, format_graph(graph))


def save_complex(cplx, path, cofacets=False):
    _write(path, format_complex(cplx, cofacets=cofacets))
