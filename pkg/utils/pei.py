from itertools import combinations, product

from sympy.combinatorics import Permutation

from models.errors import DimensionError, PreconditionError
from models.germ import Germ
from models.lattice import AffineSolutionSet, Isometry, Point
from models.orthant import Orthant, from_intervals, meet
from models.orthoset import OrthohedralSet
from models.peimap import PeiMap
from models.report import Invariants
from utils import germs, lattice, orthoset


def make(domain: OrthohedralSet, pieces: list, require: str = "map") -> PeiMap:
    return PeiMap(domain, pieces, require)


def identity(domain: OrthohedralSet) -> PeiMap:
    pieces = [(piece, Isometry.identity(domain.Dimension)) for piece in domain.Pieces]
    return PeiMap(domain, pieces, "bijection", validate=False)


def apply(g: PeiMap, point: Point) -> Point:
    for orthant, iso in g.Pieces:
        if point in orthant:
            return lattice.apply(iso, point)
    raise PreconditionError(f"Point outside the domain: {point}")


def pull_back(orthant: Orthant, iso: Isometry, pieces: list) -> list[tuple[Orthant, Isometry]]:
    """
    Splits the orthant along the preimages of the target pieces; each fragment keeps the isometry
    of the piece it lands in.
    """
    inverse = lattice.invert(iso)
    fragments = []
    for target, target_iso in pieces:
        for fragment in orthant.intersect(target.image(inverse)):
            fragments.append((fragment, target_iso))
    return fragments


def simplify(pieces: list) -> list[tuple[Orthant, Isometry]]:
    """
    Merges a piece into an adjacent piece of one rank more when a single isometry serves both.
    """
    pieces = sorted(pieces, key=lambda item: item[0])
    merged = True
    while merged:
        merged = False
        for i, j in combinations(range(len(pieces)), 2):
            (first, first_iso), (second, second_iso) = pieces[i], pieces[j]
            union = orthoset.absorb(first, second)
            if union is None:
                continue
            if first.Rank > second.Rank:
                high_iso, low, low_iso = first_iso, second, second_iso
            else:
                high_iso, low, low_iso = second_iso, first, first_iso
            if not lattice.agree_on(high_iso, low_iso, low.corners()):
                continue
            pieces = [item for index, item in enumerate(pieces) if index not in (i, j)]
            pieces.append((union, high_iso))
            pieces.sort(key=lambda item: item[0])
            merged = True
            break
    return pieces


def compose(g: PeiMap, f: PeiMap) -> PeiMap:
    """
    g followed by f; every piece of g is refined against the preimages of the pieces of f.
    """
    if g.Domain.Dimension != f.Domain.Dimension:
        raise DimensionError(f"Dimension mismatch: {g.Domain.Dimension} != {f.Domain.Dimension}")
    dimension = g.Domain.Dimension
    pieces = []
    for orthant, iso in g.Pieces:
        outside = OrthohedralSet(dimension, [orthant.image(iso)], check=False) - f.Domain
        if not outside.is_empty():
            raise PreconditionError(f"Image of {orthant} leaves the domain {f.Domain}")
        for fragment, target_iso in pull_back(orthant, iso, f.Pieces):
            pieces.append((fragment, lattice.compose(iso, target_iso)))
    if g.Bijective and f.Bijective and g.Domain == f.Domain:
        require = "bijection"
    elif g.Injective and f.Injective:
        require = "injection"
    else:
        require = "map"
    return PeiMap(g.Domain, simplify(pieces), require, validate=False)


def product_of(domain: OrthohedralSet, elements: list) -> PeiMap:
    result = identity(domain)
    for element in elements:
        result = compose(result, element)
    return result


def power(g: PeiMap, exponent: int) -> PeiMap:
    base = g if exponent >= 0 else invert(g)
    return product_of(g.Domain, [base] * abs(exponent))


def invert(g: PeiMap) -> PeiMap:
    if not g.Bijective:
        raise PreconditionError("Only bijections can be inverted")
    pieces = [(orthant.image(iso), lattice.invert(iso)) for orthant, iso in g.Pieces]
    return PeiMap(g.Domain, simplify(pieces), "bijection", validate=False)


def partial_inverse(f: PeiMap) -> PeiMap:
    """
    The inverse of an injection, defined on its image.
    """
    if not f.Injective:
        raise PreconditionError("Only injections have a partial inverse")
    pieces = [(orthant.image(iso), lattice.invert(iso)) for orthant, iso in f.Pieces]
    return PeiMap(f.image(), simplify(pieces), "injection", validate=False)


def equals(g: PeiMap, f: PeiMap) -> bool:
    if g.Domain != f.Domain:
        return False
    for orthant, iso in g.Pieces:
        for other, other_iso in f.Pieces:
            for fragment in orthant.intersect(other):
                if not lattice.agree_on(iso, other_iso, fragment.corners()):
                    return False
    return True


def restrict(g: PeiMap, subset: OrthohedralSet) -> PeiMap:
    if not (subset - g.Domain).is_empty():
        raise PreconditionError(f"Restriction target is not inside the domain: {subset}")
    pieces = []
    for orthant, iso in g.Pieces:
        for piece in subset.Pieces:
            pieces.extend((fragment, iso) for fragment in orthant.intersect(piece))
    return PeiMap(subset, simplify(pieces), "injection" if g.Injective else "map", validate=False)


def extend_by_identity(g: PeiMap, domain: OrthohedralSet) -> PeiMap:
    """
    g on its domain T, the identity on domain − T; g has to permute T.
    """
    if not (g.Domain - domain).is_empty():
        raise PreconditionError(f"Domain {g.Domain} is not inside {domain}")
    if not g.Injective or g.image() != g.Domain:
        raise PreconditionError("Only permutations of the subset extend by the identity")
    rest = domain - g.Domain
    pieces = list(g.Pieces) + [(piece, Isometry.identity(domain.Dimension)) for piece in rest.Pieces]
    return PeiMap(domain, simplify(pieces), "bijection", validate=False)


def conjugate(g: PeiMap, h: PeiMap) -> PeiMap:
    """
    g^h = h⁻¹ g h.
    """
    return product_of(g.Domain, [invert(h), g, h])


def commutator(a: PeiMap, b: PeiMap) -> PeiMap:
    """
    [a, b] = a⁻¹ b⁻¹ a b.
    """
    return product_of(a.Domain, [invert(a), invert(b), a, b])


def conjugate_by_injection(g: PeiMap, t: PeiMap) -> PeiMap:
    """
    g^t for an injection t on a g-invariant subset D: t⁻¹ g t on t(D), the identity elsewhere.
    """
    inner = restrict(g, t.Domain)
    if inner.image() != t.Domain:
        raise PreconditionError(f"Subset {t.Domain} is not invariant under the element")
    moved = product_of_partial([partial_inverse(t), inner, t])
    return extend_by_identity(moved, g.Domain)


def product_of_partial(elements: list) -> PeiMap:
    result = elements[0]
    for element in elements[1:]:
        result = compose(result, element)
    return PeiMap(result.Domain, result.Pieces, "bijection" if result.image() == result.Domain else "injection",
                  validate=False)


def fixed_orthants(orthant: Orthant, data: AffineSolutionSet) -> list[Orthant] | None:
    """
    Integer fixed points of an isometry inside the orthant, as orthants.
    None when they run along a diagonal line without end, where the hull of the moved points is the whole orthant.
    """
    particular = data.Particular
    intervals = orthant.intervals()
    covered = set()
    components = []
    for vector in data.Basis:
        axes = [axis for axis, entry in enumerate(vector) if entry]
        lead = axes[0]
        signs = [vector[axis] * vector[lead] for axis in axes]
        offsets = [particular[axis] - sign * particular[lead] for axis, sign in zip(axes, signs)]
        if any(offset.denominator != 1 for offset in offsets):
            return []
        offsets = [int(offset) for offset in offsets]
        span = (None, None)
        for axis, sign, offset in zip(axes, signs, offsets):
            low, high = intervals[axis]
            if sign == 1:
                bound = (None if low is None else low - offset, None if high is None else high - offset)
            else:
                bound = (None if high is None else offset - high, None if low is None else offset - low)
            span = meet(span, bound)
            if span is None:
                return []
        covered.update(axes)
        components.append((axes, signs, offsets, span))
    for axis in range(orthant.Dimension):
        if axis in covered:
            continue
        value = particular[axis]
        if value.denominator != 1 or meet(intervals[axis], (int(value), int(value))) is None:
            return []
    choices = []
    for axes, signs, offsets, (low, high) in components:
        if len(axes) == 1:
            choices.append([((axes[0], (low, high)),)])
        elif low is None or high is None:
            return None
        else:
            choices.append([tuple((axis, (sign * u + offset,) * 2) for axis, sign, offset in zip(axes, signs, offsets))
                            for u in range(low, high + 1)])
    fixed = []
    for choice in product(*choices):
        axis_intervals = [(int(v), int(v)) if axis not in covered else None for axis, v in enumerate(particular)]
        for part in choice:
            for axis, interval in part:
                axis_intervals[axis] = interval
        fixed.extend(from_intervals(axis_intervals))
    return fixed


def moved_part(orthant: Orthant, iso: Isometry) -> list[Orthant]:
    if iso.is_identity():
        return []
    data = lattice.fixed_point_data(iso)
    if data.Kind == "empty":
        return [orthant]
    fixed = fixed_orthants(orthant, data)
    if fixed is None:
        return [orthant]
    dimension = orthant.Dimension
    return (OrthohedralSet(dimension, [orthant], check=False) - OrthohedralSet(dimension, fixed, check=False)).Pieces


def support(g: PeiMap) -> OrthohedralSet:
    pieces = [part for orthant, iso in g.Pieces for part in moved_part(orthant, iso)]
    return orthoset.tidy(OrthohedralSet(g.Domain.Dimension, pieces, check=False))


def rank(g: PeiMap) -> int:
    value = support(g).Rank
    return -1 if value is None else value


def germ_action(g: PeiMap, germ: Germ) -> tuple[Germ, Isometry]:
    index = germs.carrier([orthant for orthant, _ in g.Pieces], germ)
    if index is None:
        raise PreconditionError(f"Germ not represented: {germ}")
    orthant, iso = g.Pieces[index]
    local = germ.representative(orthant.Base)
    return germs.germ_of(local.image(iso)), iso


def axis_map(germ: Germ, iso: Isometry) -> tuple[int, ...]:
    """
    Position in X(γg) of the image of each canonical axis of γ.
    """
    targets = sorted(iso.Rotation.Image[axis] for axis in germ.Axes)
    return tuple(targets.index(iso.Rotation.Image[axis]) for axis in germ.Axes)


def germ_isometry(g: PeiMap, germ: Germ) -> tuple[Germ, tuple[int, ...], tuple[int, ...] | None]:
    """
    Image germ, axis map and, for a fixed germ with trivial axis map, the translation in local coordinates.
    """
    image, iso = germ_action(g, germ)
    mapping = axis_map(germ, iso)
    if image != germ or mapping != tuple(range(germ.Rank)):
        return image, mapping, None
    return image, mapping, tuple(germ.Dir[axis] * iso.Shift[axis] for axis in germ.Axes)


def flow(g: PeiMap, germ: Germ) -> int:
    if not germ.Rank:
        return 0
    index = germs.carrier([orthant for orthant, _ in g.Pieces], germ)
    if index is None:
        raise PreconditionError(f"Germ not represented: {germ}")
    orthant, iso = g.Pieces[index]
    local = germ.representative(orthant.Base)
    moved = local.image(iso)
    if germs.germ_of(moved) != germ:
        raise PreconditionError(f"Germ not fixed: {germ}")
    dimension = g.Domain.Dimension
    before = OrthohedralSet(dimension, [local], check=False)
    after = OrthohedralSet(dimension, [moved], check=False)
    return (before - after).height_at(germ.Rank - 1) - (after - before).height_at(germ.Rank - 1)


def rank_germs(g: PeiMap, k: int) -> list[Germ]:
    """
    The rank-k germs of supp(g); raises when g is not in G_k.
    """
    area = support(g)
    if area.Rank is None or area.Rank < k:
        return []
    if area.Rank > k:
        raise PreconditionError(f"Element of rank {area.Rank} is not in G_{k}")
    return germs.germs_of(area, rank=k)


def global_flow(g: PeiMap, k: int) -> dict[Germ, int]:
    return {germ: flow(g, germ) for germ in rank_germs(g, k)}


def germ_permutation(g: PeiMap, k: int) -> dict[Germ, Germ]:
    return {germ: germ_action(g, germ)[0] for germ in rank_germs(g, k)}


def axis_permutation(g: PeiMap, k: int) -> dict[tuple[Germ, int], tuple[Germ, int]]:
    result = {}
    for germ in rank_germs(g, k):
        image, iso = germ_action(g, germ)
        for position, target in enumerate(axis_map(germ, iso)):
            result[(germ, position)] = (image, target)
    return result


def parity(mapping: dict) -> int:
    keys = sorted(mapping)
    if len(keys) < 2:
        return 0
    index = {key: position for position, key in enumerate(keys)}
    return Permutation([index[mapping[key]] for key in keys]).parity()


def invariants(g: PeiMap, k: int) -> Invariants:
    result = Invariants(rank(g), k, g.Pet)
    if not result.InGk:
        return result
    if result.Rank < k:
        result.InC = result.InCord = result.Stagnant = True
        result.ParityGerms = result.ParityAxes = 0
        result.InAltGk = True
        return result
    germ_map = germ_permutation(g, k)
    axes_map = axis_permutation(g, k)
    result.ParityGerms = parity(germ_map)
    result.ParityAxes = parity(axes_map)
    result.InAltGk = result.ParityGerms == 0
    result.InC = all(germ == image for germ, image in germ_map.items())
    result.InCord = result.InC and all(key[1] == value[1] for key, value in axes_map.items())
    if result.InC:
        result.Flows = global_flow(g, k)
        result.Stagnant = not any(result.Flows.values())
    return result
