"""Exact rank over the rationals by fraction-free (Bareiss) elimination."""


def bareiss_rank(rows) -> int:
    """
    Rank of an integer matrix given as a sequence of rows.

    Every intermediate entry stays an integer: after each pivot step the
    2x2 minors are divided exactly by the previous pivot. Columns with no
    pivot in the remaining rows are skipped.
    """
    matrix = [[int(x) for x in row] for row in rows]
    if not matrix:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    previous = 1
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((r for r in range(rank, n_rows) if matrix[r][col] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, n_rows):
            below = matrix[r][col]
            row = matrix[r]
            top = matrix[rank]
            for c in range(col + 1, n_cols):
                row[c] = (pivot * row[c] - below * top[c]) // previous
            row[col] = 0
        previous = pivot
        rank += 1
    return rank
