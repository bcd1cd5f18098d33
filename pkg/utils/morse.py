import logging
from math import comb

from models.errors import PreconditionError
from models.germ import Germ
from models.lattice import Isometry
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from models.peimap import PeiMap
from utils import germs, orthoset, pei


def check_injection(f: PeiMap):
    if not f.Injective:
        raise PreconditionError("Map is not injective")
    if not (f.image() - f.Domain).is_empty():
        raise PreconditionError("Image leaves the domain")


def height(f: PeiMap) -> int:
    """
    h(f) = h(S − Sf), counted on the corank-1 germs of S.
    """
    check_injection(f)
    domain = f.Domain
    if domain.is_empty():
        return 0
    return (domain - f.image()).height_at(domain.Rank - 1)


def height_split(f: PeiMap, area: OrthohedralSet) -> int:
    """
    h(A ∩ (Af)^c) − h(A^c ∩ Af) for a subset A of S that misses no top-rank germ of S.
    """
    check_injection(f)
    domain = f.Domain
    if not (area - domain).is_empty():
        raise PreconditionError(f"{area} is not inside the domain")
    rest = domain - area
    if rest.Rank is not None and rest.Rank >= domain.Rank:
        raise PreconditionError("Complement of the area has full rank")
    moved = pei.restrict(f, area).image()
    rank = domain.Rank - 1
    return (area - moved).height_at(rank) - (rest & moved).height_at(rank)


def maximal_orthants(src: OrthohedralSet) -> list[Orthant]:
    result = [piece for piece in src.Pieces if piece.Rank == src.Rank]
    if len({germs.germ_of(piece) for piece in result}) != len(result):
        raise PreconditionError(f"Top-rank pieces of {src} are not pairwise incommensurable")
    return result


def diagonal_vector(orthant: Orthant, length: int = 1) -> tuple[int, ...]:
    return tuple(length * d for d in orthant.Dir)


def boundary_of(orthant: Orthant) -> OrthohedralSet:
    """
    ∂L = L − (L + u_L).
    """
    dimension = orthant.Dimension
    return OrthohedralSet(dimension, [orthant]) - OrthohedralSet(dimension, [orthant.push(1)])


def diagonal_unit_translation(src: OrthohedralSet, orthant: Orthant, length: int = 1) -> PeiMap:
    """
    t_L (or t_L^length): the diagonal translation on L, the identity on the rest of S.
    """
    if orthant not in maximal_orthants(src):
        raise PreconditionError(f"{orthant} is not a maximal orthant of {src}")
    if length < 0:
        raise PreconditionError(f"Negative diagonal length: {length}")
    dimension = src.Dimension
    pieces = [(orthant, Isometry(diagonal_vector(orthant, length)))]
    rest = src - OrthohedralSet(dimension, [orthant])
    pieces += [(piece, Isometry.identity(dimension)) for piece in rest.Pieces]
    return PeiMap(src, pieces, "injection")


def monoid_element(src: OrthohedralSet, multiplicities: dict[Orthant, int]) -> PeiMap:
    """
    ∏ t_L^{m_L}; the factors have disjoint supports, so their order does not matter.
    """
    dimension = src.Dimension
    pieces = []
    covered = OrthohedralSet(dimension)
    for orthant, length in sorted(multiplicities.items()):
        if orthant not in maximal_orthants(src):
            raise PreconditionError(f"{orthant} is not a maximal orthant of {src}")
        pieces.append((orthant, Isometry(diagonal_vector(orthant, length))))
        covered = covered | OrthohedralSet(dimension, [orthant])
    pieces += [(piece, Isometry.identity(dimension)) for piece in (src - covered).Pieces]
    return PeiMap(src, pieces, "injection")


def diagonal_lengths(f: PeiMap) -> dict[Germ, int] | None:
    """
    The length c with τ_(f,γ) = c·u for every top-rank germ γ, or None when f is not diagonal.
    """
    result = {}
    for germ in germs.germs_of(f.Domain, rank=f.Domain.Rank):
        _, _, vector = pei.germ_isometry(f, germ)
        if vector is None or len(set(vector)) != 1:
            return None
        result[germ] = vector[0]
    return result


def is_diagonal(f: PeiMap) -> bool:
    return diagonal_lengths(f) is not None


def is_superdiagonal(f: PeiMap, components: list[OrthohedralSet]) -> bool:
    """
    Diagonal, with one translation length per component.
    """
    lengths = diagonal_lengths(f)
    if lengths is None:
        return False
    for component in components:
        seen = {lengths[germ] for germ in lengths if germs.represents(component, germ)}
        if len(seen) > 1:
            return False
    return True


def orthant_of(src: OrthohedralSet, germ: Germ) -> Orthant:
    return src.Pieces[germs.carrier(src.Pieces, germ)]


def order_leq(f: PeiMap, other: PeiMap) -> dict[Orthant, int] | None:
    """
    The multiplicities of a t in mon(T) with tf = other, or None when f ≤ other fails.
    """
    src = f.Domain
    lengths = diagonal_lengths(f)
    target = diagonal_lengths(other)
    if lengths is None or target is None:
        return None
    witness = {}
    for germ, length in lengths.items():
        steps = target[germ] - length
        if steps < 0:
            return None
        if steps:
            witness[orthant_of(src, germ)] = steps
    if not pei.equals(pei.compose(monoid_element(src, witness), f), other):
        return None
    return witness


def maximal_below(f: PeiMap, orthant: Orthant, free_part: list) -> PeiMap:
    """
    The maximal element b below f with t_L b = f whose restriction to ∂L is the injection `free_part`
    into S − Sf.
    """
    check_injection(f)
    src = f.Domain
    n = orthant.Rank
    if height(f) < n:
        raise PreconditionError(f"Height {height(f)} is smaller than rk L = {n}")
    boundary = boundary_of(orthant)
    free = PeiMap(boundary, free_part, "injection")
    if not (free.image() & f.image()).is_empty():
        raise PreconditionError("Free part meets the image of f")
    if not (free.image() - src).is_empty():
        raise PreconditionError("Free part leaves the domain")
    translation = diagonal_unit_translation(src, orthant)
    rest = pei.compose(pei.partial_inverse(translation), f)
    b = PeiMap(src, pei.simplify(list(free.Pieces) + list(rest.Pieces)), "injection")
    if not pei.equals(pei.compose(translation, b), f) or height(b) != height(f) - n:
        raise PreconditionError("Constructed element is not maximal below f")
    return b


def common_lower_bound(f: PeiMap, below: list[tuple[PeiMap, Orthant]]) -> PeiMap | None:
    """
    The largest common lower bound δ_B of maximal elements b below f, each given with the orthant L_b
    of its unit translation; None when two of them share L_b or their free parts overlap.
    """
    src = f.Domain
    if not below:
        raise PreconditionError("Need at least one maximal element")
    if len(below) == 1:
        return below[0][0]
    orthants = [orthant for _, orthant in below]
    if len(set(orthants)) != len(orthants):
        return None
    images = [pei.restrict(b, boundary_of(orthant)).image() for b, orthant in below]
    for index, first in enumerate(images):
        for second in images[index + 1:]:
            if not (first & second).is_empty():
                return None
    dimension = src.Dimension
    pieces = []
    covered = OrthohedralSet(dimension)
    for b, orthant in below:
        inner = OrthohedralSet(dimension, [orthant.push(1)])
        shifted = pei.compose(pei.partial_inverse(diagonal_unit_translation(src, orthant)), f)
        pieces += pei.restrict(shifted, inner).Pieces
        pieces += pei.restrict(b, boundary_of(orthant)).Pieces
        covered = covered | OrthohedralSet(dimension, [orthant])
    if not (src - covered).is_empty():
        pieces += pei.restrict(f, src - covered).Pieces
    delta = PeiMap(src, pei.simplify(pieces), "injection")
    for b, orthant in below:
        others = {other: 1 for _, other in below if other != orthant}
        if not pei.equals(pei.compose(monoid_element(src, others), delta), b):
            raise PreconditionError(f"δ_B is not below the element for {orthant}")
    bound = height(f) - src.Height * max(orthant.Rank for orthant in orthants)
    if height(delta) < bound:
        raise PreconditionError(f"h(δ_B) = {height(delta)} is below {bound}")
    logging.debug(f"Common lower bound of {len(below)} elements has height {height(delta)}")
    return delta


def skeleton_heights(rank: int, skeleton_rank: int) -> dict[str, int]:
    """
    Heights of the rank-n skeleton S of a rank-r orthant, of its regular points S˚ and of the singular parts.
    """
    if not 1 <= skeleton_rank <= rank:
        raise PreconditionError(f"Skeleton rank out of range: {skeleton_rank}")
    orthant = Orthant((0,) * rank, (1,) * rank)
    regular, singular = orthoset.regular_split(orthant, skeleton_rank)
    return {
        "skeleton": orthoset.skeleton(orthant, skeleton_rank).height_at(skeleton_rank),
        "regular": regular.height_at(skeleton_rank),
        "singular": singular.height_at(skeleton_rank - 1),
        "singular_regular": orthoset.singular_of_regular(orthant, skeleton_rank).height_at(skeleton_rank - 1),
    }


def superdiagonal_modulus(rank: int, skeleton_rank: int) -> int:
    return (rank - skeleton_rank + 1) * comb(rank, skeleton_rank - 1)
