"""
OA file: ``m n`` then m rows of n^2 symbols.
Latin-square file: ``n`` then n rows of n symbols.
"""
from pathlib import Path

import numpy as np
from django.core.exceptions import ValidationError

from utils.validators import data_lines, only_int

from .exceptions import ArrayFormatError
from .models import OrthogonalArray
from .services import validate_oa


def _integers(text, line_no, expected):
    tokens = text.split()
    if len(tokens) != expected:
        raise ArrayFormatError(line=line_no, problem='expected %d values, got %d' % (expected, len(tokens)))
    try:
        return [only_int(token, 'symbol') for token in tokens]
    except ValidationError as error:
        raise ArrayFormatError(line=line_no, problem=error.messages[0])


def parse_oa(text: str):
    """Header and rows as written; ``validate_oa`` decides whether they form an OA."""
    lines = data_lines(text)
    if not lines:
        raise ArrayFormatError(line=1, problem='empty file')
    m, n = _integers(lines[0], 1, 2)
    if m < 1 or n < 1:
        raise ArrayFormatError(line=1, problem='m and n must be positive')
    if len(lines) - 1 != m:
        raise ArrayFormatError(line=len(lines), problem='header announces %d rows, found %d' % (m, len(lines) - 1))
    rows = [_integers(line, line_no, n * n) for line_no, line in enumerate(lines[1:], start=2)]
    return n, np.array(rows, dtype=np.int64)


def format_oa(oa: OrthogonalArray) -> str:
    body = [' '.join(str(symbol) for symbol in row) for row in oa.rows()]
    return '\n'.join(['%d %d' % (oa.m, oa.n)] + body) + '\n'


def read_oa(path) -> OrthogonalArray:
    n, cells = parse_oa(Path(path).read_text(encoding='ascii'))
    return validate_oa(cells, n)


def write_oa(oa: OrthogonalArray, path) -> None:
    Path(path).write_text(format_oa(oa), encoding='ascii')


def parse_latin_square(text: str) -> np.ndarray:
    lines = data_lines(text)
    if not lines:
        raise ArrayFormatError(line=1, problem='empty file')
    (n,) = _integers(lines[0], 1, 1)
    if n < 1 or len(lines) - 1 != n:
        raise ArrayFormatError(line=1, problem='header announces order %d, found %d rows' % (n, len(lines) - 1))
    return np.array([_integers(line, line_no, n) for line_no, line in enumerate(lines[1:], start=2)], dtype=np.int64)


def format_latin_square(square) -> str:
    square = np.asarray(square)
    body = [' '.join(str(int(symbol)) for symbol in row) for row in square]
    return '\n'.join([str(square.shape[0])] + body) + '\n'


def read_latin_square(path) -> np.ndarray:
    return parse_latin_square(Path(path).read_text(encoding='ascii'))


def write_latin_square(square, path) -> None:
    Path(path).write_text(format_latin_square(square), encoding='ascii')
