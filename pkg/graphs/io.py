"""
Graph text format: ``v e`` on the first line, then ``e`` lines ``u w`` with
``0 <= u < w < v``.
"""
from pathlib import Path

from django.core.exceptions import ValidationError

from utils.validators import data_lines, only_int

from .exceptions import GraphFormatError
from .models import Graph


def _pair(text, line_no):
    tokens = text.split()
    if len(tokens) != 2:
        raise GraphFormatError(line=line_no, problem='expected two integers, got %r' % text)
    try:
        return only_int(tokens[0]), only_int(tokens[1])
    except ValidationError as error:
        raise GraphFormatError(line=line_no, problem=error.messages[0])


def parse_graph(text: str) -> Graph:
    lines = data_lines(text)
    if not lines:
        raise GraphFormatError(line=1, problem='empty file')
    v, e = _pair(lines[0], 1)
    if v < 0 or e < 0:
        raise GraphFormatError(line=1, problem='negative count')
    if len(lines) - 1 != e:
        raise GraphFormatError(line=len(lines), problem='header announces %d edges, found %d' % (e, len(lines) - 1))

    seen = set()
    for line_no, text_line in enumerate(lines[1:], start=2):
        u, w = _pair(text_line, line_no)
        if not 0 <= u < w < v:
            raise GraphFormatError(line=line_no, problem='edge (%d, %d) needs 0 <= u < w < %d' % (u, w, v))
        if (u, w) in seen:
            raise GraphFormatError(line=line_no, problem='duplicate edge (%d, %d)' % (u, w))
        seen.add((u, w))
    return Graph.from_edges(v, sorted(seen))


def format_graph(g: Graph) -> str:
    edges = g.edges()
    return ''.join(['%d %d\n' % (g.v, len(edges))] + ['%d %d\n' % edge for edge in edges])


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text(encoding='ascii'))


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(format_graph(g), encoding='ascii')
