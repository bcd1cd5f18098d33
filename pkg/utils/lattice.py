from fractions import Fraction
from functools import lru_cache

from sympy import Matrix, eye

from models.lattice import AffineSolutionSet, Isometry, Point, SignedPermutation, check_dimension


def apply(iso: Isometry, point: Point) -> Point:
    check_dimension(iso.Shift, point)
    rotated = iso.Rotation.apply(point)
    return tuple(a + b for a, b in zip(iso.Shift, rotated))


def compose(g: Isometry, f: Isometry) -> Isometry:
    """
    The product gf: g first, then f.
    """
    check_dimension(g.Shift, f.Shift)
    shift = apply(f, g.Shift)
    return Isometry(shift, g.Rotation.then(f.Rotation))


def invert(iso: Isometry) -> Isometry:
    rotation = iso.Rotation.inverse()
    shift = tuple(-v for v in rotation.apply(iso.Shift))
    return Isometry(shift, rotation)


def agree_on(first: Isometry, second: Isometry, points: list[Point]) -> bool:
    return all(apply(first, p) == apply(second, p) for p in points)


@lru_cache(maxsize=4096)
def fixed_point_data(iso: Isometry) -> AffineSolutionSet:
    dimension = iso.Dimension
    if iso.is_identity():
        return AffineSolutionSet("all", (0,) * dimension)
    system = eye(dimension) - Matrix(iso.Rotation.matrix())
    target = Matrix(dimension, 1, list(iso.Shift))
    try:
        solution, params = system.gauss_jordan_solve(target)
    except ValueError:
        return AffineSolutionSet("empty")
    if params.shape[0]:
        solution = solution.subs({param: 0 for param in params})
    particular = tuple(Fraction(int(v.p), int(v.q)) for v in solution)
    basis = []
    for vector in system.nullspace():
        # Kernel vectors of I - A are supported on one cycle, entries +1/-1 up to scale.
        entries = list(vector)
        pivot = next(entry for entry in entries if entry != 0)
        basis.append(tuple(int(entry / pivot) for entry in entries))
    return AffineSolutionSet("affine", particular, basis)


def random_isometry(rng, dimension: int, spread: int = 3) -> Isometry:
    image = list(range(dimension))
    rng.shuffle(image)
    signs = tuple(rng.choice((1, -1)) for _ in range(dimension))
    shift = tuple(rng.randint(-spread, spread) for _ in range(dimension))
    return Isometry(shift, SignedPermutation(tuple(image), signs))
