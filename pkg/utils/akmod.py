import logging
from collections import deque
from math import gcd, prod

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

import config
from models.errors import BudgetError, PreconditionError, ValidationError
from models.germmatrix import Classification, GermMatrix
from models.peimap import PeiMap
from utils import pei

Truncation = tuple[tuple[int, ...], ...]


def matrix_of(g: PeiMap, k: int) -> GermMatrix:
    """
    Row γ holds the translation that g induces on the tangent coset of γ, in the canonical axis order.
    """
    result = pei.invariants(g, k)
    if not result.InCord:
        raise PreconditionError(f"Element does not fix every rank-{k} germ with its axis order")
    rows = {}
    for germ in pei.rank_germs(g, k):
        _, _, vector = pei.germ_isometry(g, germ)
        rows[germ] = vector
    return GermMatrix(k, rows)


def classify(m: GermMatrix) -> Classification:
    in_e = all(sum(row) == 0 for row in m.Rows.values())
    in_d = all(len(set(row)) == 1 for row in m.Rows.values()) and not any(m.column_sums())
    return Classification(in_d, in_e, m.flow_column())


def rotate(row: tuple[int, ...], steps: int) -> tuple[int, ...]:
    """
    Column i moves to column i + steps, cyclically.
    """
    k = len(row)
    return tuple(row[(i - steps) % k] for i in range(k))


def diagonal_average(m: GermMatrix) -> GermMatrix:
    rows = {}
    for key, row in m.Rows.items():
        total = [0] * m.K
        for steps in range(m.K):
            for i, value in enumerate(rotate(row, steps)):
                total[i] += value
        rows[key] = tuple(total)
    return GermMatrix(m.K, rows, check=False)


def diagonal_combination(t: int, k: int) -> tuple[int, ...]:
    """
    a + Σ_j (k−1−j)·bϑ^j for the constant row a = (t, ..., t) and b = (t, −t, 0, ...).
    """
    if k < 2:
        raise ValueError(f"Invalid matrix width: {k}")
    total = [t] * k
    lone = (t, -t) + (0,) * (k - 2)
    for steps in range(k):
        for i, value in enumerate(rotate(lone, steps)):
            total[i] += (k - 1 - steps) * value
    return tuple(total)


def truncate(generators: list[GermMatrix], spare: int = config.SPARE_ROWS) -> tuple[list, list[Truncation]]:
    """
    The germs in play plus `spare` zero rows, and every generator as a tuple of rows over them.
    """
    keys = sorted({key for m in generators for key in m.Rows})
    width = generators[0].K
    zero = (0,) * width
    truncations = []
    for m in generators:
        rows = [m.row(key) for key in keys] + [zero] * spare
        truncations.append(tuple(rows))
    return keys, truncations


def row_transposition(rows: Truncation, first: int, second: int) -> Truncation:
    result = list(rows)
    result[first], result[second] = result[second], result[first]
    return tuple(result)


def entry_transposition(rows: Truncation, row: int, first: int, second: int) -> Truncation:
    entries = list(rows[row])
    entries[first], entries[second] = entries[second], entries[first]
    return rows[:row] + (tuple(entries),) + rows[row + 1:]


def neighbours(rows: Truncation) -> list[Truncation]:
    """
    Images under the transpositions that generate the row permutations and the within-row permutations.
    """
    result = [row_transposition(rows, 0, index) for index in range(1, len(rows))]
    width = len(rows[0])
    for index in range(len(rows)):
        for column in range(1, width):
            result.append(entry_transposition(rows, index, 0, column))
    return result


def orbit(truncations: list[Truncation], budget: int = config.ORBIT_BUDGET) -> list[Truncation]:
    seen = set(truncations)
    queue = deque(truncations)
    while queue:
        current = queue.popleft()
        for image in neighbours(current):
            if image in seen:
                continue
            seen.add(image)
            if len(seen) > budget:
                raise BudgetError(f"Orbit exceeds the budget of {budget} matrices")
            queue.append(image)
    logging.debug(f"Orbit closure has {len(seen)} matrices")
    return sorted(seen)


def flatten(rows: Truncation) -> tuple[int, ...]:
    return tuple(value for row in rows for value in row)


def lattice_invariants(vectors: list[tuple[int, ...]]) -> list[int]:
    """
    Non-zero invariant factors of the lattice spanned by the vectors.
    """
    vectors = [list(v) for v in vectors if any(v)]
    if not vectors:
        return []
    return [abs(int(factor)) for factor in invariant_factors(DM(vectors, ZZ)) if factor]


def lattice_order(vector: tuple[int, ...], vectors: list[tuple[int, ...]]) -> int | None:
    """
    Order of vector modulo the lattice spanned by vectors; None when no multiple of it lies in the lattice.
    """
    if not any(vector):
        return 1
    base = lattice_invariants(vectors)
    extended = lattice_invariants(list(vectors) + [vector])
    if len(extended) > len(base):
        return None
    return prod(base) // prod(extended)


def lone_pair_of_entries(rows: int, width: int) -> tuple[int, ...]:
    vector = [0] * (rows * width)
    vector[0], vector[1] = 1, -1
    return tuple(vector)


def lone_pair_of_rows(rows: int, width: int) -> tuple[int, ...]:
    vector = [0] * (rows * width)
    for column in range(width):
        vector[column] = 1
        vector[width + column] = -1
    return tuple(vector)


def lone_pair_of_entries_magnitude(m: GermMatrix) -> int | None:
    """
    a when m is a single row with entries a and −a and zeros elsewhere.
    """
    if len(m.Rows) != 1:
        return None
    entries = [value for value in next(iter(m.Rows.values())) if value]
    return abs(entries[0]) if len(entries) == 2 and sum(entries) == 0 else None


def lone_pair_of_rows_magnitude(m: GermMatrix) -> int | None:
    """
    c when m has exactly the constant rows (c, ..., c) and (−c, ..., −c).
    """
    rows = list(m.Rows.values())
    if len(rows) != 2 or any(len(set(row)) != 1 for row in rows):
        return None
    return abs(rows[0][0]) if rows[0][0] == -rows[1][0] else None


def entry_reduction(generators: list[GermMatrix]) -> int | None:
    """
    gcd of the lone pairs of entries reached from the generators: m(1 − τ) for a transposition τ of
    two entries a, b of a row leaves the lone pair of magnitude a − b, and lone pairs count as they are.
    """
    result = 0
    for m in generators:
        result = gcd(result, lone_pair_of_entries_magnitude(m) or 0)
        for row in m.Rows.values():
            for i, first in enumerate(row):
                for second in row[i + 1:]:
                    result = gcd(result, first - second)
    return result or None


def row_reduction(generators: list[GermMatrix]) -> int | None:
    """
    gcd of the lone pairs of rows reached from the generators: swapping a row with a zero row and
    averaging over the column rotations leaves the lone pair of rows of magnitude fl_γ.
    """
    result = 0
    for m in generators:
        result = gcd(result, lone_pair_of_rows_magnitude(m) or 0)
        for flow in m.flow_column().values():
            result = gcd(result, flow)
    return result or None


def check_reduction(name: str, reduced: int | None, closure: int | None):
    """
    A reduction reaches elements of M, so the closure order has to divide it.
    """
    if reduced is None:
        if closure is not None:
            logging.warning(f"Reductions reach no lone pair for {name}, closure gives {closure}")
        return
    if closure is None or reduced % closure:
        raise ValidationError(f"Closure order {closure} of {name} does not divide the reduced order {reduced}")
    if reduced != closure:
        logging.debug(f"Reductions reach {reduced} for {name}, closure gives {closure}")


def submodule_invariants(generators: list[GermMatrix], orbit_budget: int = config.ORBIT_BUDGET,
                         spare: int = config.SPARE_ROWS) -> tuple[int | None, int | None]:
    """
    (p, q) for the submodule M generated by the matrices under row and within-row permutations:
    the least p with pD ≤ M and the least q with qE ≤ M. The lone-pair reductions give multiples of
    p and q; the lattice closure of the orbit, truncated to the germs in play, gives the exact values.
    """
    if not generators or any(m.is_zero() for m in generators):
        raise PreconditionError("Generators must be non-zero matrices")
    width = generators[0].K
    if any(m.K != width for m in generators):
        raise PreconditionError("Generators have different widths")
    reduced_p = row_reduction(generators)
    reduced_q = 1 if width == 1 else entry_reduction(generators)

    keys, truncations = truncate(generators, max(spare, 2 - len({key for m in generators for key in m.Rows})))
    vectors = [flatten(rows) for rows in orbit(truncations, orbit_budget)]
    height = len(truncations[0])
    logging.debug(f"Truncation: {len(keys)} germs, {height} rows, {len(vectors)} orbit vectors")
    p = lattice_order(lone_pair_of_rows(height, width), vectors)
    q = 1 if width == 1 else lattice_order(lone_pair_of_entries(height, width), vectors)
    check_reduction("p", reduced_p, p)
    check_reduction("q", reduced_q, q)
    return p, q
