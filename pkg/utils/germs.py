from models.errors import PreconditionError
from models.germ import Germ
from models.orthant import Orthant
from models.orthoset import OrthohedralSet


def germ_of(orthant: Orthant) -> Germ:
    frozen = tuple(None if d else v for v, d in zip(orthant.Base, orthant.Dir))
    return Germ(orthant.Dir, frozen)


def commensurable(first: Orthant, second: Orthant) -> bool:
    common = max((piece.Rank for piece in first.intersect(second)), default=None)
    return common == first.Rank == second.Rank


def germ_leq(first: Germ, second: Germ) -> bool:
    """
    first <= second iff the orthants of second contain one parallel to first,
    and first lies in the tangent coset of second.
    """
    for axis in range(first.Dimension):
        if first.Dir[axis] and second.Dir[axis] != first.Dir[axis]:
            return False
        if not second.Dir[axis] and first.Frozen[axis] != second.Frozen[axis]:
            return False
    return True


def germs_of(src: OrthohedralSet, rank: int = None) -> list[Germ]:
    germs = {germ_of(piece) for piece in src.Pieces if rank is None or piece.Rank == rank}
    return sorted(germs)


def max_germs(src: OrthohedralSet) -> list[Germ]:
    candidates = germs_of(src)
    return [germ for germ in candidates
            if not any(other != germ and germ_leq(germ, other) for other in candidates)]


def carrier(pieces: list[Orthant], germ: Germ) -> int | None:
    """
    Index of the piece containing an orthant of the germ; disjoint pieces make it unique.
    """
    for index, piece in enumerate(pieces):
        if piece_carries(piece, germ):
            return index
    return None


def piece_carries(piece: Orthant, germ: Germ) -> bool:
    for axis in range(germ.Dimension):
        if germ.Dir[axis] and piece.Dir[axis] != germ.Dir[axis]:
            return False
    return germ.meets(piece)


def represents(src: OrthohedralSet, germ: Germ) -> bool:
    return carrier(src.Pieces, germ) is not None


def representative(src: OrthohedralSet, germ: Germ, steps: int = 0) -> Orthant:
    index = carrier(src.Pieces, germ)
    if index is None:
        raise PreconditionError(f"Germ not represented: {germ}")
    return germ.representative(src.Pieces[index].Base).push(steps)
