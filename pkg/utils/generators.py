import logging

from models.errors import PreconditionError
from models.generator import Generator
from models.lattice import Isometry, SignedPermutation
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from models.peimap import PeiMap
from utils import lattice, pei
from utils.normalform import normal_form, unit
from utils.orthoset import order_preserving

RANDOM_KINDS = ("transposition", "point_transposition", "n_cycle", "single_orthant_reflection", "unit_pei_translation",
                "unit_endotranslation")
# Kinds that fix every top-rank germ.
STABILIZER_KINDS = ("single_orthant_reflection", "unit_pei_translation", "unit_endotranslation")


def region(dimension: int, orthants: list) -> OrthohedralSet:
    return OrthohedralSet(dimension, orthants)


def assemble(domain: OrthohedralSet, moved: OrthohedralSet, pieces: list) -> PeiMap:
    """
    The permutation acting by `pieces` on `moved` and as the identity on the rest of the domain.
    """
    if not (moved - domain).is_empty():
        raise PreconditionError(f"Generator region {moved} is not inside the domain {domain}")
    rest = domain - moved
    pieces = list(pieces) + [(piece, Isometry.identity(domain.Dimension)) for piece in rest.Pieces]
    return PeiMap(domain, pei.simplify(pieces), "bijection")


def check_disjoint(*orthants: Orthant):
    for index, first in enumerate(orthants):
        for second in orthants[index + 1:]:
            if first.intersect_nonempty(second):
                raise PreconditionError(f"Orthants are not disjoint: {first} and {second}")


def check_axis(orthant: Orthant, axis: int):
    if axis not in orthant.Axes:
        raise PreconditionError(f"Axis {axis + 1} is not an axis of {orthant}")


def check_suborthant(outer: Orthant, inner: Orthant) -> tuple[int, ...]:
    """
    inner has to be outer translated into itself; returns the translation.
    """
    vector = tuple(b - a for a, b in zip(outer.Base, inner.Base))
    if inner.Dir != outer.Dir or any(v * d < 0 or (v and not d) for v, d in zip(vector, outer.Dir)):
        raise PreconditionError(f"{inner} is not a commensurable suborthant of {outer}")
    return vector


def middle_bijection(source: OrthohedralSet, target: OrthohedralSet) -> list[tuple[Orthant, Isometry]]:
    """
    A pei-bijection source → target through their common pei normal form.
    """
    if source.is_empty() and target.is_empty():
        return []
    if (source.Rank, source.Height) != (target.Rank, target.Height):
        raise PreconditionError(f"Heights differ: h({source}) != h({target})")
    _, first = normal_form(source, "pei")
    _, second = normal_form(target, "pei")
    return pei.compose(first, pei.partial_inverse(second)).Pieces


def transposition(domain: OrthohedralSet, first: Orthant, second: Orthant, iso: Isometry = None) -> PeiMap:
    if first.Rank != second.Rank:
        raise PreconditionError(f"Rank mismatch: {first} and {second}")
    check_disjoint(first, second)
    if iso is None:
        iso = order_preserving(first, second)
    if first.image(iso) != second:
        raise PreconditionError(f"Isometry does not map {first} onto {second}")
    pieces = [(first, iso), (second, lattice.invert(iso))]
    return assemble(domain, region(domain.Dimension, [first, second]), pieces)


def point_transposition(domain: OrthohedralSet, p: tuple, q: tuple) -> PeiMap:
    zero = (0,) * domain.Dimension
    return transposition(domain, Orthant(p, zero), Orthant(q, zero))


def cycle_isometries(orthants: list, isos: list | None) -> list[Isometry]:
    if isos is None:
        isos = [order_preserving(a, b) for a, b in zip(orthants, orthants[1:])]
        running = Isometry.identity(orthants[0].Dimension)
        for iso in isos:
            running = lattice.compose(running, iso)
        isos.append(lattice.invert(running))
    if len(isos) != len(orthants):
        raise PreconditionError(f"Cycle of {len(orthants)} orthants needs {len(orthants)} isometries")
    return isos


def n_cycle(domain: OrthohedralSet, orthants: list, isos: list = None) -> PeiMap:
    if len(orthants) < 2:
        raise PreconditionError("A cycle needs at least two orthants")
    check_disjoint(*orthants)
    isos = cycle_isometries(orthants, isos)
    running = Isometry.identity(domain.Dimension)
    for index, (orthant, iso) in enumerate(zip(orthants, isos)):
        following = orthants[(index + 1) % len(orthants)]
        if orthant.image(iso) != following:
            raise PreconditionError(f"Isometry does not map {orthant} onto {following}")
        running = lattice.compose(running, iso)
    if not lattice.agree_on(running, Isometry.identity(domain.Dimension), orthants[0].corners()):
        raise PreconditionError("Cycle isometries do not compose to the identity")
    return assemble(domain, region(domain.Dimension, orthants), list(zip(orthants, isos)))


def single_orthant_isometry(domain: OrthohedralSet, orthant: Orthant, iso: Isometry) -> PeiMap:
    if orthant.image(iso) != orthant:
        raise PreconditionError(f"Isometry does not preserve {orthant}")
    return assemble(domain, region(domain.Dimension, [orthant]), [(orthant, iso)])


def reflection_isometry(orthant: Orthant, x: int, y: int) -> Isometry:
    """
    Swaps the local coordinates along x and y, fixing the base.
    """
    check_axis(orthant, x)
    check_axis(orthant, y)
    if x == y:
        raise PreconditionError(f"Reflection needs two distinct axes, got {x + 1} twice")
    image = list(range(orthant.Dimension))
    image[x], image[y] = y, x
    signs = [1] * orthant.Dimension
    signs[x] = signs[y] = orthant.Dir[x] * orthant.Dir[y]
    rotation = SignedPermutation(tuple(image), tuple(signs))
    shift = tuple(b - v for b, v in zip(orthant.Base, rotation.apply(orthant.Base)))
    return Isometry(shift, rotation)


def single_orthant_reflection(domain: OrthohedralSet, orthant: Orthant, x: int, y: int) -> PeiMap:
    return single_orthant_isometry(domain, orthant, reflection_isometry(orthant, x, y))


def pei_translation(domain: OrthohedralSet, first: Orthant, inner: Orthant, second: Orthant,
                    second_inner: Orthant) -> PeiMap:
    """
    inner → first and second → second_inner by translations, first − inner → second − second_inner
    by a pei-bijection.
    """
    if first.Rank != second.Rank or not first.Rank:
        raise PreconditionError(f"pei-translation needs two orthants of equal positive rank: {first}, {second}")
    check_disjoint(first, second)
    vector = check_suborthant(first, inner)
    second_vector = check_suborthant(second, second_inner)
    dimension = domain.Dimension
    rest = region(dimension, [first]) - region(dimension, [inner])
    second_rest = region(dimension, [second]) - region(dimension, [second_inner])
    pieces = [(inner, Isometry(tuple(-v for v in vector))), (second, Isometry(second_vector))]
    pieces += middle_bijection(rest, second_rest)
    return assemble(domain, region(dimension, [first, second]), pieces)


def unit_pei_translation(domain: OrthohedralSet, first: Orthant, x: int, second: Orthant, second_x: int) -> PeiMap:
    """
    From first to second: first loses its face F_x, which becomes the new face of second along second_x.
    """
    if first.Rank != second.Rank or not first.Rank:
        raise PreconditionError(f"pei-translation needs two orthants of equal positive rank: {first}, {second}")
    check_axis(first, x)
    check_axis(second, second_x)
    check_disjoint(first, second)
    dimension = domain.Dimension
    step = unit(dimension, x, first.Dir[x])
    second_step = unit(dimension, second_x, second.Dir[second_x])
    face = first.face(x)
    pieces = [
        (first.translate(step), Isometry(tuple(-v for v in step))),
        (face, order_preserving(face, second.face(second_x))),
        (second, Isometry(second_step)),
    ]
    return assemble(domain, region(dimension, [first, second]), pieces)


def endotranslation(domain: OrthohedralSet, orthant: Orthant, inner: Orthant, target: Orthant) -> PeiMap:
    """
    inner → target by a translation, orthant − inner → orthant − target by a pei-bijection.
    """
    vector = check_suborthant(orthant, inner)
    target_vector = check_suborthant(orthant, target)
    dimension = domain.Dimension
    rest = region(dimension, [orthant]) - region(dimension, [inner])
    target_rest = region(dimension, [orthant]) - region(dimension, [target])
    shift = tuple(b - a for a, b in zip(vector, target_vector))
    pieces = [(inner, Isometry(shift))] + middle_bijection(rest, target_rest)
    return assemble(domain, region(dimension, [orthant]), pieces)


def unit_endotranslation(domain: OrthohedralSet, orthant: Orthant, x: int, y: int) -> PeiMap:
    """
    η_xy: pushes L + e_x diagonally onto L + e_y and reflects the face F_x onto F_y.
    """
    reflection = reflection_isometry(orthant, x, y)
    dimension = domain.Dimension
    step = tuple(a - b for a, b in zip(unit(dimension, y, orthant.Dir[y]), unit(dimension, x, orthant.Dir[x])))
    pieces = [
        (orthant.translate(unit(dimension, x, orthant.Dir[x])), Isometry(step)),
        (orthant.face(x), reflection),
    ]
    return assemble(domain, region(dimension, [orthant]), pieces)


def build(generator: Generator) -> PeiMap:
    domain = generator.Domain
    arguments = generator.Arguments
    logging.debug(f"Building {generator}")
    match generator.Kind:
        case "transposition":
            return transposition(domain, arguments["L"], arguments["L2"], arguments.get("iso"))
        case "point_transposition":
            return point_transposition(domain, arguments["p"], arguments["q"])
        case "n_cycle":
            return n_cycle(domain, list(arguments["orthants"]), arguments.get("isos"))
        case "single_orthant_isometry":
            return single_orthant_isometry(domain, arguments["L"], arguments["iso"])
        case "single_orthant_reflection":
            return single_orthant_reflection(domain, arguments["L"], arguments["x"], arguments["y"])
        case "pei_translation":
            return pei_translation(domain, arguments["L"], arguments["K"], arguments["L2"], arguments["K2"])
        case "unit_pei_translation":
            return unit_pei_translation(domain, arguments["L"], arguments["x"], arguments["L2"], arguments["x2"])
        case "endotranslation":
            return endotranslation(domain, arguments["L"], arguments["K"], arguments["K2"])
        case "unit_endotranslation":
            return unit_endotranslation(domain, arguments["L"], arguments["x"], arguments["y"])
        case _:
            raise TypeError(f"Unsupported type: {generator.Kind}")


def inverse(generator: Generator) -> Generator:
    arguments = generator.Arguments
    domain = generator.Domain
    match generator.Kind:
        case "transposition" | "point_transposition" | "single_orthant_reflection":
            return generator
        case "n_cycle":
            orthants = list(arguments["orthants"])
            isos = cycle_isometries(orthants, arguments.get("isos"))
            reverse = [lattice.invert(iso) for iso in reversed(isos[:-1])] + [lattice.invert(isos[-1])]
            return Generator("n_cycle", domain, orthants=orthants[::-1],
                             isos=reverse)
        case "single_orthant_isometry":
            return Generator("single_orthant_isometry", domain, L=arguments["L"], iso=lattice.invert(arguments["iso"]))
        case "pei_translation":
            return Generator("pei_translation", domain, L=arguments["L2"], K=arguments["K2"], L2=arguments["L"],
                             K2=arguments["K"])
        case "unit_pei_translation":
            return Generator("unit_pei_translation", domain, L=arguments["L2"], x=arguments["x2"], L2=arguments["L"],
                             x2=arguments["x"])
        case "endotranslation":
            return Generator("endotranslation", domain, L=arguments["L"], K=arguments["K2"], K2=arguments["K"])
        case "unit_endotranslation":
            return Generator("unit_endotranslation", domain, L=arguments["L"], x=arguments["y"], y=arguments["x"])
        case _:
            raise TypeError(f"Unsupported type: {generator.Kind}")


def evaluate(domain: OrthohedralSet, word: list[Generator]) -> PeiMap:
    return pei.product_of(domain, [build(generator) for generator in word])


def random_generator(rng, domain: OrthohedralSet, kinds: tuple) -> Generator:
    """
    A generator of one of the given kinds acting on the top-rank pieces of the domain.
    """
    top = [piece for piece in domain.Pieces if piece.Rank == domain.Rank]
    rank = domain.Rank
    feasible = [kind for kind in kinds if feasible_kind(kind, len(top), rank)]
    if not feasible:
        raise PreconditionError(f"No generator of kinds {kinds} acts on {domain}")
    kind = rng.choice(feasible)
    first, second, third = (rng.sample(top, min(3, len(top))) + [None, None])[:3]
    match kind:
        case "transposition":
            return Generator(kind, domain, L=first, L2=second)
        case "point_transposition":
            return Generator(kind, domain, p=first.Base, q=second.Base)
        case "n_cycle":
            return Generator(kind, domain, orthants=[first, second, third])
        case "single_orthant_reflection" | "unit_endotranslation":
            x, y = rng.sample(first.Axes, 2)
            return Generator(kind, domain, L=first, x=x, y=y)
        case "unit_pei_translation":
            return Generator(kind, domain, L=first, x=rng.choice(first.Axes), L2=second, x2=rng.choice(second.Axes))
        case _:
            raise TypeError(f"Unsupported type: {kind}")


def feasible_kind(kind: str, pieces: int, rank: int) -> bool:
    match kind:
        case "transposition":
            return pieces >= 2 and rank >= 1
        case "point_transposition":
            return pieces >= 2 and rank == 0
        case "n_cycle":
            return pieces >= 3
        case "single_orthant_reflection" | "unit_endotranslation":
            return pieces >= 1 and rank >= 2
        case "unit_pei_translation":
            return pieces >= 2 and rank >= 1
        case _:
            return False


def random_word(rng, domain: OrthohedralSet, length: int, kinds: tuple = RANDOM_KINDS) -> list[Generator]:
    return [random_generator(rng, domain, kinds) for _ in range(length)]
