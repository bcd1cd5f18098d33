import logging

from models.errors import PreconditionError
from models.generator import Generator
from models.germ import Germ
from models.lattice import Isometry, SignedPermutation
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from models.peimap import PeiMap
from utils import generators, germs, pei


def representatives(area: OrthohedralSet, rank_germs: list[Germ]) -> dict[Germ, Orthant]:
    """
    Pairwise disjoint representatives inside the area, pushed out by the least common number of steps.
    """
    steps = 0
    while True:
        chosen = {germ: germs.representative(area, germ, steps) for germ in rank_germs}
        orthants = list(chosen.values())
        if all(first.is_disjoint(second) for index, first in enumerate(orthants) for second in orthants[index + 1:]):
            return chosen
        steps += 1


def undo_axis_map(orthant: Orthant, mapping: tuple[int, ...]) -> Isometry:
    axes = orthant.Axes
    image = list(range(orthant.Dimension))
    signs = [1] * orthant.Dimension
    for position, target in enumerate(mapping):
        image[axes[target]] = axes[position]
        signs[axes[target]] = orthant.Dir[axes[position]] * orthant.Dir[axes[target]]
    rotation = SignedPermutation(tuple(image), tuple(signs))
    shift = tuple(b - v for b, v in zip(orthant.Base, rotation.apply(orthant.Base)))
    return Isometry(shift, rotation)


class Reducer:
    """
    Multiplies generators onto an element from the right until it becomes the identity,
    recording every generator used.
    """
    Element: PeiMap
    Steps: list[Generator]

    def __init__(self, element: PeiMap):
        self.Element = element
        self.Steps = []

    def push(self, generator: Generator):
        self.Element = pei.compose(self.Element, generators.build(generator))
        self.Steps.append(generator)

    def word(self) -> list[Generator]:
        return [generators.inverse(generator) for generator in reversed(self.Steps)]

    def sort_germs(self, chosen: dict[Germ, Orthant], k: int):
        domain = self.Element.Domain
        for germ in sorted(chosen):
            while True:
                image = pei.germ_action(self.Element, germ)[0]
                if image == germ:
                    break
                if image not in chosen:
                    raise PreconditionError(f"Germ {germ} is sent outside the support: {image}")
                if k:
                    step = Generator("transposition", domain, L=chosen[image], L2=chosen[germ])
                else:
                    step = Generator("point_transposition", domain, p=chosen[image].Base, q=chosen[germ].Base)
                self.push(step)

    def order_axes(self, chosen: dict[Germ, Orthant]):
        domain = self.Element.Domain
        for germ in sorted(chosen):
            _, mapping, _ = pei.germ_isometry(self.Element, germ)
            if mapping != tuple(range(germ.Rank)):
                orthant = chosen[germ]
                self.push(Generator("single_orthant_isometry", domain, L=orthant, iso=undo_axis_map(orthant, mapping)))

    def clear_rows(self, chosen: dict[Germ, Orthant]):
        domain = self.Element.Domain
        order = sorted(chosen)
        bank = order[0]
        bank_orthant = chosen[bank]
        for germ in order[1:]:
            _, _, row = pei.germ_isometry(self.Element, germ)
            orthant = chosen[germ]
            for position, value in enumerate(row):
                axis = orthant.Axes[position]
                if value > 0:
                    step = Generator("unit_pei_translation", domain, L=orthant, x=axis, L2=bank_orthant,
                                     x2=bank_orthant.Axes[0])
                else:
                    step = Generator("unit_pei_translation", domain, L=bank_orthant, x=bank_orthant.Axes[0],
                                     L2=orthant, x2=axis)
                for _ in range(abs(value)):
                    self.push(step)
        _, _, row = pei.germ_isometry(self.Element, bank)
        axes = bank_orthant.Axes
        for position, value in enumerate(row[1:], start=1):
            if value > 0:
                step = Generator("unit_endotranslation", domain, L=bank_orthant, x=axes[position], y=axes[0])
            else:
                step = Generator("unit_endotranslation", domain, L=bank_orthant, x=axes[0], y=axes[position])
            for _ in range(abs(value)):
                self.push(step)

    def reduce_rank(self) -> int:
        area = pei.support(self.Element)
        k = area.Rank
        rank_germs = germs.germs_of(area, rank=k)
        chosen = representatives(area, rank_germs)
        logging.debug(f"Reducing rank {k} with {len(rank_germs)} germs")
        self.sort_germs(chosen, k)
        if k:
            self.order_axes(chosen)
            self.clear_rows(chosen)
        remaining = pei.rank(self.Element)
        if remaining >= k:
            raise PreconditionError(f"Rank {k} part could not be cleared")
        return remaining


def factor_generators(g: PeiMap, verify: bool = True) -> list[Generator]:
    """
    A word of generators whose product is g, peeling the element rank by rank.
    """
    if not g.Bijective:
        raise PreconditionError("Only bijections can be factored")
    reducer = Reducer(g)
    while pei.rank(reducer.Element) >= 0:
        reducer.reduce_rank()
    word = reducer.word()
    logging.debug(f"Factored into {len(word)} generators")
    if verify and not pei.equals(generators.evaluate(g.Domain, word), g):
        raise PreconditionError("Factorization does not reproduce the element")
    return word


def generator_rank(generator: Generator) -> int:
    match generator.Kind:
        case "point_transposition":
            return 0
        case "n_cycle":
            return generator["orthants"][0].Rank
        case _:
            return generator["L"].Rank


def count_kind(word: list[Generator], kind: str, k: int) -> int:
    return sum(1 for generator in word if generator.Kind == kind and generator_rank(generator) == k)


def abelianization_class(g: PeiMap, k: int) -> tuple[tuple[int, ...], bool]:
    """
    Coordinates of g in the abelianization of G_k(S), and whether they come from a word count
    rather than from homomorphisms.
    With at least three rank-k germs the coordinates are the germ parity and the axis parity
    corrected by k times the germ parity, so that an orthant transposition reads (1, 0) and a
    single-orthant reflection (0, 1).
    """
    domain = g.Domain
    if pei.rank(g) > k:
        raise PreconditionError(f"Element is not in G_{k}")
    top = domain.Rank
    result = pei.invariants(g, k)
    germ_parity, axis_parity = result.ParityGerms, result.ParityAxes
    coordinates = (germ_parity, (axis_parity - k * germ_parity) % 2)
    if k < top or domain.Height >= 3:
        return coordinates, False
    word = factor_generators(g)
    if domain.Height == 1:
        return (axis_parity, count_kind(word, "unit_endotranslation", k) % 2), True
    return coordinates + (count_kind(word, "unit_pei_translation", k) % 2,), True
