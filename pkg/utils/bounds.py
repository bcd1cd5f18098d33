import logging
from itertools import combinations

from models.errors import PreconditionError
from models.lattice import Isometry
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from models.peimap import PeiMap
from models.report import BoundarySet, FlBoundsReport
from utils import orthoset, pei

CITATIONS = {
    "pei": "the pei lower-bound theorem",
    "orthants": "the stack-of-orthants theorem",
    "houghton": "Brown's theorem on Houghton groups",
    "skeletons": "the stack-of-skeletons theorem",
    "link": "the link-height theorem",
}


def in_positive_cone(src: OrthohedralSet) -> bool:
    return all(min(piece.Base) >= 0 and min(piece.Dir) >= 0 for piece in src.Pieces if piece.Dimension)


def drop(values: tuple, axis: int) -> tuple:
    return values[:axis] + values[axis + 1:]


def insert(values: tuple, axis: int, value: int) -> tuple:
    return values[:axis] + (value,) + values[axis:]


def projection(orthant: Orthant, axis: int) -> Orthant:
    return Orthant(drop(orthant.Base, axis), drop(orthant.Dir, axis))


def lift(orthant: Orthant, axis: int, start: int) -> Orthant:
    return Orthant(insert(orthant.Base, axis, start), insert(orthant.Dir, axis, 1))


def ray_pieces(src: OrthohedralSet, axis: int) -> list[Orthant]:
    """
    Pieces unbounded in direction +axis; each rank-1 germ parallel to the axis has its tail in exactly one.
    """
    if not in_positive_cone(src):
        raise PreconditionError(f"{src} is not inside the positive cone")
    if not 0 <= axis < src.Dimension:
        raise PreconditionError(f"Axis {axis + 1} out of range")
    return [piece for piece in src.Pieces if piece.Dir[axis] == 1]


def boundary(src: OrthohedralSet, axis: int) -> BoundarySet:
    rays = ray_pieces(src, axis)
    section = {projection(piece, axis): piece for piece in rays}
    return BoundarySet(axis, OrthohedralSet(src.Dimension - 1, list(section)), section)


def induced_boundary_map(g: PeiMap, axis: int) -> PeiMap:
    """
    θ_x(g): the pet-permutation by which g moves the rank-1 germs parallel to the axis.
    """
    if not g.Pet or not g.Bijective:
        raise PreconditionError("Element is not a pet-permutation")
    target = boundary(g.Domain, axis).Boundary
    pieces = [(projection(piece, axis), Isometry(drop(iso.Shift, axis)))
              for piece, iso in g.Pieces if piece.Dir[axis] == 1]
    return PeiMap(target, pei.simplify(pieces), "bijection")


def section_lift(g: PeiMap, src: OrthohedralSet, axis: int) -> PeiMap:
    """
    The pet-permutation of S moving the axis-parallel tails as g moves their germs, fixing the rest.
    """
    rays = ray_pieces(src, axis)
    boundary_set = OrthohedralSet(src.Dimension - 1, [projection(piece, axis) for piece in rays])
    if g.Domain != boundary_set:
        raise PreconditionError("Element does not act on the boundary of S")
    if not g.Pet or not g.Bijective:
        raise PreconditionError("Element is not a pet-permutation")
    pieces = []
    for source in rays:
        for piece, iso in g.Pieces:
            for part in projection(source, axis).intersect(piece):
                moved = part.translate(iso.Shift)
                for target in rays:
                    for landing in moved.intersect(projection(target, axis)):
                        origin = landing.translate(tuple(-v for v in iso.Shift))
                        shift = insert(iso.Shift, axis, target.Base[axis] - source.Base[axis])
                        pieces.append((lift(origin, axis, source.Base[axis]), Isometry(shift)))
    rest = src - OrthohedralSet(src.Dimension, rays)
    pieces += [(piece, Isometry.identity(src.Dimension)) for piece in rest.Pieces]
    return PeiMap(src, pei.simplify(pieces), "bijection")


def link_height(src: OrthohedralSet, axes: tuple[int, ...]) -> int:
    """
    Sum of the stack heights over the maximal indicators containing the given n − 1 axes.
    """
    rank = src.Rank
    if rank is None or len(axes) != rank - 1:
        raise PreconditionError(f"Link needs {0 if rank is None else rank - 1} axes, got {len(axes)}")
    heights, _, _ = orthoset.indicator_data(src)
    return sum(height for indicator, height in heights.items()
               if indicator.Rank == rank and set(axes) <= set(indicator.Axes))


def pet_upper_bound(src: OrthohedralSet) -> tuple[int, tuple[int, ...]]:
    rank = src.Rank
    candidates = []
    for axes in combinations(range(src.Dimension), rank - 1):
        value = link_height(src, axes)
        if value:
            candidates.append((value - 1, axes))
    if not candidates:
        raise PreconditionError("No non-empty link: upper bound unavailable")
    return min(candidates)


def pet_lower_bound(src: OrthohedralSet) -> tuple[int, str]:
    profile = orthoset.skeleton_profile(src)
    if profile is None:
        return 0, "lower: trivial"
    c, r, n = profile
    if r != n:
        return c - 1, f"lower: c(S)-1 by {CITATIONS['skeletons']}"
    if n == 1:
        return c - 1, f"lower: h(S)-1 by {CITATIONS['houghton']}"
    return c - 1, f"lower: c(S)-1 by {CITATIONS['orthants']}"


def fl_bounds(src: OrthohedralSet, kind: str) -> FlBoundsReport:
    """
    Every bound names the theorem it is read off; bounds no theorem covers are reported as unknown.
    """
    if src.is_empty():
        raise PreconditionError("Empty set")
    h = src.Height
    match kind:
        case "pei":
            return FlBoundsReport("pei", h - 1, None, [f"lower: h(S)-1 by {CITATIONS['pei']}", "upper: unknown"])
        case "pet":
            if src.Rank == 0:
                raise PreconditionError("No non-empty link: upper bound unavailable")
            lower, citation = pet_lower_bound(src)
            provenance = [citation]
            if not in_positive_cone(src):
                return FlBoundsReport("pet", lower, None, provenance + ["upper: unknown"])
            upper, axes = pet_upper_bound(src)
            logging.debug(f"Smallest link over axes {[axis + 1 for axis in axes]}")
            provenance.append(f"upper: link height minus 1 over Y={{{','.join(str(a + 1) for a in axes)}}} "
                              f"by {CITATIONS['link']}")
            return FlBoundsReport("pet", lower, upper, provenance)
        case _:
            raise TypeError(f"Unsupported type: {kind}")
