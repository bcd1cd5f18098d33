import logging

from models.errors import PreconditionError
from models.lattice import Isometry
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from models.peimap import PeiMap
from utils import lattice
from utils.orthoset import indicator_leq, order_preserving
from utils.pei import pull_back, simplify


def unit(dimension: int, axis: int, value: int = 1) -> tuple[int, ...]:
    return tuple(value if index == axis else 0 for index in range(dimension))


def transport(layout: list, step: list) -> list[tuple[Orthant, Isometry]]:
    """
    Follows every layout entry by a partial bijection given as (orthant, isometry) pieces;
    the parts of an entry landing outside the step keep their isometry.
    """
    result = []
    for source, iso in layout:
        dimension = source.Dimension
        inverse = lattice.invert(iso)
        preimages = OrthohedralSet(dimension, [target.image(inverse) for target, _ in step], check=False)
        rest = OrthohedralSet(dimension, [source], check=False) - preimages
        result.extend((piece, iso) for piece in rest.Pieces)
        for fragment, step_iso in pull_back(source, iso, step):
            result.append((fragment, lattice.compose(iso, step_iso)))
    return result


def parking(direction: tuple, index: int, offset: int) -> Orthant:
    """
    Slot `index` of the class of `direction`, offset·Dir away from the origin. Slots of distinct
    directions are disjoint as long as every index stays below the offset.
    """
    base = [offset * d for d in direction]
    free = [axis for axis, d in enumerate(direction) if not d]
    if free:
        base[free[0]] += index
    return Orthant(tuple(base), tuple(direction))


def feed_step(host: Orthant, source: Orthant, translation_only: bool) -> list[tuple[Orthant, Isometry]]:
    """
    Moves a column of the host one unit along a host axis the source lacks, and sends the source
    onto the freed layer.
    """
    dimension = host.Dimension
    if translation_only:
        spare = [axis for axis in host.Axes if not source.Dir[axis]]
        axis = spare[0]
        column = tuple(d if source.Dir[index] or index == axis else 0 for index, d in enumerate(host.Dir))
    else:
        axes = host.Axes[:source.Rank + 1]
        axis = axes[-1]
        column = tuple(d if index in axes else 0 for index, d in enumerate(host.Dir))
    column = Orthant(host.Base, column)
    layer = column.face(axis)
    if translation_only:
        iso = Isometry(tuple(t - s for t, s in zip(layer.Base, source.Base)))
    else:
        iso = order_preserving(source, layer)
    return [(column, Isometry(unit(dimension, axis, host.Dir[axis]))), (source, iso)]


def classes(src: OrthohedralSet) -> dict[tuple, list[Orthant]]:
    result = {}
    for piece in sorted(src.Pieces):
        result.setdefault(piece.Dir, []).append(piece)
    return result


def pei_targets(dimension: int, rank: int, height: int, offset: int) -> list[Orthant]:
    if rank < dimension:
        direction = tuple(1 if axis < rank else 0 for axis in range(dimension))
        return [Orthant(tuple(offset * d for d in direction), direction).translate(unit(dimension, dimension - 1, j))
                for j in range(height)]
    quadrants = OrthohedralSet.whole(dimension).Pieces[:height]
    return [Orthant(tuple(offset * d for d in quadrant.Dir), quadrant.Dir) for quadrant in quadrants]


def normal_form(src: OrthohedralSet, mode: str = "pei") -> tuple[OrthohedralSet, PeiMap]:
    """
    A pet- or pei-bijection from S onto its normal form.
    pei: a single stack of h(S) orthants of rank rk S.
    pet: one stack per maximal indicator, the pieces below it fed into its first copy by translations.
    """
    if mode not in ("pei", "pet"):
        raise TypeError(f"Unsupported type: {mode}")
    if src.is_empty():
        raise PreconditionError("Normal form of the empty set")
    dimension = src.Dimension
    rank, height = src.Rank, src.Height
    if mode == "pet" and rank >= dimension:
        raise PreconditionError(f"pet normal form needs rank below the dimension, got rank {rank} in Z^{dimension}")
    groups = classes(src)
    offset = max(max(len(pieces) for pieces in groups.values()), height) + 1
    layout = []
    hosts = {}
    match mode:
        case "pei":
            targets = pei_targets(dimension, rank, height, offset)
            tops = [piece for piece in sorted(src.Pieces) if piece.Rank == rank]
            for piece, target in zip(tops, targets):
                layout.append((piece, order_preserving(piece, target)))
            for direction, pieces in groups.items():
                if sum(1 for d in direction if d) == rank:
                    continue
                for index, piece in enumerate(pieces):
                    slot = parking(direction, index, offset)
                    layout.append((piece, order_preserving(piece, slot)))
                    layout = transport(layout, feed_step(targets[0], slot, False))
            final = pei_targets(dimension, rank, height, 0) if rank < dimension else \
                OrthohedralSet.whole(dimension).Pieces[:height]
        case _:
            directions = list(groups)
            maximal = [d for d in directions if not any(e != d and indicator_leq(d, e) for e in directions)]
            for direction in maximal:
                hosts[direction] = [parking(direction, index, offset) for index in range(len(groups[direction]))]
                for piece, slot in zip(groups[direction], hosts[direction]):
                    layout.append((piece, Isometry(tuple(t - s for t, s in zip(slot.Base, piece.Base)))))
            for direction in directions:
                if direction in hosts:
                    continue
                host = next(e for e in maximal if indicator_leq(direction, e))
                for index, piece in enumerate(groups[direction]):
                    slot = parking(direction, index, offset)
                    layout.append((piece, Isometry(tuple(t - s for t, s in zip(slot.Base, piece.Base)))))
                    layout = transport(layout, feed_step(hosts[host][0], slot, True))
            targets = [slot for direction in maximal for slot in hosts[direction]]
            if len(maximal) == 1:
                final = [parking(maximal[0], index, 0) for index in range(len(targets))]
            else:
                final = targets
    step = [(target, Isometry(tuple(f - t for f, t in zip(goal.Base, target.Base))))
            for target, goal in zip(targets, final) if target != goal]
    layout = transport(layout, step)
    image = OrthohedralSet(dimension, final)
    witness = PeiMap(src, simplify(layout), "injection")
    if witness.image() != image:
        raise PreconditionError(f"Normal form construction missed the target {image}")
    logging.debug(f"Normal form ({mode}) of {src}: {image}")
    return image, witness
