from itertools import combinations, product

from models.errors import PreconditionError
from models.lattice import Isometry, Point, SignedPermutation
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from utils.germs import max_germs


def member(src: OrthohedralSet, point: Point) -> bool:
    return point in src


def combine(first: OrthohedralSet, second: OrthohedralSet, operation: str) -> OrthohedralSet:
    match operation:
        case "union":
            return first | second
        case "intersect":
            return first & second
        case "difference":
            return first - second
        case _:
            raise TypeError(f"Unsupported type: {operation}")


def complement(src: OrthohedralSet) -> OrthohedralSet:
    return OrthohedralSet.whole(src.Dimension) - src


def equals(first: OrthohedralSet, second: OrthohedralSet) -> bool:
    first.check_compatible(second)
    return first == second


def rank_height(src: OrthohedralSet) -> tuple[int | None, int]:
    return src.Rank, src.Height


def translate(src: OrthohedralSet, vector: tuple) -> OrthohedralSet:
    return OrthohedralSet(src.Dimension, [piece.translate(vector) for piece in src.Pieces], check=False)


def image(src: OrthohedralSet, iso) -> OrthohedralSet:
    return OrthohedralSet(src.Dimension, [piece.image(iso) for piece in src.Pieces], check=False)


def indicator_orthants(dimension: int) -> list[Orthant]:
    """
    All 3^N orthants based at the origin.
    """
    return [Orthant((0,) * dimension, direction) for direction in product((0, 1, -1), repeat=dimension)]


def indicator_leq(first: tuple, second: tuple) -> bool:
    return all(d == 0 or d == e for d, e in zip(first, second))


def indicator_data(src: OrthohedralSet) -> tuple[dict[Orthant, int], list[Orthant], bool]:
    """
    Height function over the 0-based orthants, its support, and whether the set is quasi-normal:
    the maximal indicators of its pieces are exactly the support.
    """
    heights = {}
    for germ in max_germs(src):
        key = Orthant((0,) * src.Dimension, germ.Dir)
        heights[key] = heights.get(key, 0) + 1
    support = sorted(heights)
    directions = {piece.Dir for piece in src.Pieces}
    maximal = sorted(Orthant((0,) * src.Dimension, d) for d in directions
                     if not any(e != d and indicator_leq(d, e) for e in directions))
    return heights, support, maximal == support


def absorb(first: Orthant, second: Orthant) -> Orthant | None:
    """
    Merges a lower-rank orthant into an adjacent one it extends along a single axis.
    """
    if first.Rank > second.Rank:
        first, second = second, first
    if first.Rank + 1 != second.Rank:
        return None
    extra = [axis for axis in range(first.Dimension) if first.Dir[axis] != second.Dir[axis]]
    if len(extra) != 1 or first.Dir[extra[0]]:
        return None
    axis = extra[0]
    expected = list(first.Base)
    expected[axis] += second.Dir[axis]
    if tuple(expected) != second.Base:
        return None
    return Orthant(first.Base, second.Dir)


def tidy(src: OrthohedralSet) -> OrthohedralSet:
    pieces = sorted(src.Pieces)
    merged = True
    while merged:
        merged = False
        for first, second in combinations(pieces, 2):
            union = absorb(first, second)
            if union is not None:
                pieces.remove(first)
                pieces.remove(second)
                pieces.append(union)
                pieces.sort()
                merged = True
                break
    return OrthohedralSet(src.Dimension, pieces, check=False)


def faces(orthant: Orthant, rank: int) -> list[Orthant]:
    if not 0 <= rank <= orthant.Rank:
        raise PreconditionError(f"Face rank out of range: {rank}")
    result = []
    for axes in combinations(orthant.Axes, rank):
        direction = tuple(d if axis in axes else 0 for axis, d in enumerate(orthant.Dir))
        result.append(Orthant(orthant.Base, direction))
    return result


def skeleton(stack, rank: int) -> OrthohedralSet:
    """
    Union of the rank-`rank` faces of an orthant or of every orthant of a stack.
    """
    orthants = [stack] if isinstance(stack, Orthant) else list(stack)
    result = OrthohedralSet(orthants[0].Dimension)
    for orthant in orthants:
        for face in faces(orthant, rank):
            result = result | OrthohedralSet(face.Dimension, [face], check=False)
    return result


def regular_split(stack, rank: int) -> tuple[OrthohedralSet, OrthohedralSet]:
    """
    Regular points of the rank-`rank` skeleton (the diagonal unit translates of its maximal faces)
    and the singular rest.
    """
    if rank < 1:
        raise PreconditionError(f"Skeleton rank out of range: {rank}")
    orthants = [stack] if isinstance(stack, Orthant) else list(stack)
    regular = OrthohedralSet(orthants[0].Dimension,
                             [face.push(1) for orthant in orthants for face in faces(orthant, rank)])
    return regular, skeleton(orthants, rank) - regular


def singular_of_regular(stack, rank: int) -> OrthohedralSet:
    orthants = [stack] if isinstance(stack, Orthant) else list(stack)
    pieces = []
    for orthant in orthants:
        for face in faces(orthant, rank):
            pieces.extend(face.push(1).difference(face.push(2)))
    return OrthohedralSet(orthants[0].Dimension, pieces)


def stack(orthant: Orthant, height: int, axis: int = None) -> list[Orthant]:
    """
    `height` parallel copies of the orthant, one unit apart along an axis it does not extend along.
    """
    if axis is None:
        free = [a for a, d in enumerate(orthant.Dir) if not d]
        if not free:
            raise PreconditionError(f"No free axis to stack along: {orthant}")
        axis = free[0]
    if orthant.Dir[axis]:
        raise PreconditionError(f"Stack axis {axis} is used by {orthant}")
    return [orthant.translate(tuple(j if a == axis else 0 for a in range(orthant.Dimension)))
            for j in range(height)]


def skeleton_profile(src: OrthohedralSet) -> tuple[int, int, int] | None:
    """
    (c, r, n) when the height function is that of c stacked copies of the rank-n skeleton
    of a rank-r orthant, that is all n-subsets of an r-set of signed axes carry height c.
    """
    heights, support, _ = indicator_data(src)
    if not support:
        return None
    rank = support[0].Rank
    if any(item.Rank != rank for item in support):
        return None
    counts = {heights[item] for item in support}
    if len(counts) != 1:
        return None
    axes = {}
    for item in support:
        for axis in item.Axes:
            if axes.setdefault(axis, item.Dir[axis]) != item.Dir[axis]:
                return None
    expected = {tuple(axes[a] if a in chosen else 0 for a in range(src.Dimension))
                for chosen in combinations(sorted(axes), rank)}
    if expected != {item.Dir for item in support}:
        return None
    return counts.pop(), len(axes), rank


def order_preserving(source: Orthant, target: Orthant) -> Isometry:
    """
    The isometry sending the i-th axis of source to the i-th axis of target and base to base.
    """
    if source.Rank != target.Rank:
        raise PreconditionError(f"Rank mismatch: {source} and {target}")
    image = [None] * source.Dimension
    signs = [1] * source.Dimension
    for axis, target_axis in zip(source.Axes, target.Axes):
        image[axis] = target_axis
        signs[axis] = source.Dir[axis] * target.Dir[target_axis]
    free = iter(axis for axis in range(target.Dimension) if not target.Dir[axis])
    for axis in range(source.Dimension):
        if image[axis] is None:
            image[axis] = next(free)
    rotation = SignedPermutation(tuple(image), tuple(signs))
    shift = tuple(t - v for t, v in zip(target.Base, rotation.apply(source.Base)))
    return Isometry(shift, rotation)
