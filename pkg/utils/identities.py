import logging

from models.lattice import Isometry, SignedPermutation
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from models.peimap import PeiMap
from models.report import IdentityReport
from utils import generators, pei
from utils.normalform import unit

SUITES = ("all", "transpositions", "endotranslations")


def layer(height: int) -> Orthant:
    return Orthant((0, 0, height), (1, 1, 0))


def translation_checks(report: IdentityReport):
    """
    Four stacked quadrants K, L, M, N of Z^3 and the unit-pei-translation λ from K to L.
    """
    k_, l_, m_, n_ = (layer(height) for height in range(4))
    domain = OrthohedralSet(3, [k_, l_, m_, n_])
    translation = generators.unit_pei_translation(domain, k_, 0, l_, 0)
    swap = generators.transposition(domain, k_, l_)

    alpha = generators.single_orthant_reflection(domain, k_, 0, 1)
    alpha_swap = pei.compose(alpha, swap)
    report.add("single-orthant-isometry-is-product-of-two-transpositions",
               pei.equals(alpha, pei.compose(alpha_swap, swap)) and swaps(alpha_swap, k_, l_))

    reflection = generators.single_orthant_reflection(domain, l_, 0, 1)
    other = generators.single_orthant_reflection(domain, m_, 0, 1)
    carry = generators.transposition(domain, l_, m_)
    report.add("reflection-pair-is-commutator",
               pei.equals(pei.compose(reflection, other), pei.commutator(reflection, carry)))

    shifted = generators.transposition(domain, k_, l_.translate(unit(3, 0)))
    report.add("translation-is-product-of-transpositions", pei.equals(translation, pei.compose(swap, shifted)))

    square = pei.power(translation, 2)
    report.add("translation-square-is-commutator", pei.equals(square, pei.commutator(swap, translation)))
    report.add("translation-square-is-transposition-times-conjugate",
               pei.equals(square, pei.compose(swap, pei.conjugate(swap, translation))))

    step = unit(3, 0, 2)
    wide = generators.pei_translation(domain, k_, k_.translate(step), l_, l_.translate(step))
    report.add("pei-translation-is-unit-translations-modulo-lower-rank",
               pei.rank(pei.compose(wide, pei.invert(square))) < 2)

    cycle = generators.n_cycle(domain, [k_, m_, l_])
    conjugate = pei.conjugate(translation, cycle)
    report.add("conjugate-translation-runs-from-m-to-k",
               pei.equals(conjugate, generators.unit_pei_translation(domain, m_, 0, k_, 0)))
    report.add("translation-is-commutator-with-transposition",
               pei.equals(translation, pei.commutator(conjugate, swap)))

    first = generators.n_cycle(domain, [k_, l_, m_])
    second = generators.n_cycle(domain, [k_, m_, l_.translate(unit(3, 0))])
    report.add("translation-is-product-of-3-cycles", pei.equals(translation, pei.compose(first, second)))

    third = generators.n_cycle(domain, [l_, m_, n_])
    pair = pei.compose(generators.transposition(domain, k_, m_), generators.transposition(domain, l_, n_))
    report.add("3-cycle-product-is-disjoint-transpositions", pei.equals(pei.compose(first, third), pair))

    report.add("transposition-commutator-is-transposition-times-conjugate",
               pei.equals(pei.commutator(swap, third), pei.compose(swap, pei.conjugate(swap, third))))

    lift = generators.unit_pei_translation(domain, l_, 0, k_, 1)
    endo = generators.unit_endotranslation(domain, k_, 0, 1)
    flip = generators.single_orthant_reflection(domain, k_, 0, 1)
    report.add("endotranslation-is-commutator-of-reflection-and-translation",
               pei.equals(endo, pei.commutator(flip, lift)))

    # Here the translation has to act on K along x.
    slide = generators.unit_pei_translation(domain, l_, 0, k_, 0)
    faces = [k_.face(0), k_.face(1).translate(unit(3, 0))]
    report.add("face-reflection-is-commutator-of-endotranslation-and-translation",
               pei.equals(pei.commutator(endo, slide), restricted_reflection(domain, k_, 0, 1, faces)))


def swaps(g: PeiMap, first: Orthant, second: Orthant) -> bool:
    """
    Whether g is supported on first ∪ second and exchanges the two.
    """
    dimension = first.Dimension
    one, other = OrthohedralSet(dimension, [first]), OrthohedralSet(dimension, [second])
    return pei.support(g) == (one | other) and pei.restrict(g, one).image() == other and \
        pei.restrict(g, other).image() == one


def restricted_reflection(domain: OrthohedralSet, orthant: Orthant, x: int, y: int, faces: list[Orthant]) -> PeiMap:
    iso = generators.reflection_isometry(orthant, x, y)
    return generators.assemble(domain, OrthohedralSet(domain.Dimension, faces), [(face, iso) for face in faces])


def endotranslation_checks(report: IdentityReport):
    """
    Unit-endotranslations of the positive octant N^3.
    """
    octant = Orthant((0, 0, 0), (1, 1, 1))
    domain = OrthohedralSet(3, [octant])
    eta = {(x, y): generators.unit_endotranslation(domain, octant, x, y)
           for x in range(3) for y in range(3) if x != y}
    flip = generators.single_orthant_reflection(domain, octant, 0, 1)

    report.add("endotranslation-conjugate-by-reflection-is-reverse", pei.equals(pei.conjugate(eta[0, 1], flip), eta[1, 0]))
    report.add("endotranslation-reverse-is-inverse", pei.equals(eta[1, 0], pei.invert(eta[0, 1])))
    report.add("endotranslation-square-is-commutator",
               pei.equals(pei.power(eta[0, 1], 2), pei.commutator(flip, eta[0, 1])))

    step = unit(3, 1)
    shift = PeiMap(domain, [(octant, Isometry(step))], "injection", validate=False)
    shifted = pei.conjugate_by_injection(eta[1, 0], shift)
    faces = [octant.face(0), octant.face(1).translate(unit(3, 0))]
    report.add("endotranslation-times-shifted-reverse-is-face-reflection",
               pei.equals(pei.compose(eta[0, 1], shifted), restricted_reflection(domain, octant, 0, 1, faces)))

    triple = pei.product_of(domain, [eta[0, 1], eta[1, 2], eta[2, 0]])
    report.add("endotranslation-cycle-is-face-reflection",
               pei.equals(triple, restricted_reflection(domain, octant, 1, 2, [octant.face(0)])))

    # F_x − F_x∩F_y and F_y − F_x∩F_y
    first, second = Orthant((0, 1, 0), (0, 1, 1)), Orthant((1, 0, 0), (1, 0, 1))
    face_swap = generators.assemble(domain, OrthohedralSet(3, [first, second]), [
        (first, Isometry((1, 0, -1), SignedPermutation((1, 2, 0)))),
        (second, generators.reflection_isometry(octant, 0, 1)),
    ])
    reverse = pei.product_of(domain, [eta[0, 2], eta[1, 0], eta[2, 1]])
    report.add("endotranslation-reverse-cycle-swaps-faces",
               pei.equals(reverse, face_swap) and swaps(reverse, first, second))

    wide = generators.endotranslation(domain, octant, octant.translate((2, 0, 0)), octant.translate((0, 1, 1)))
    product = pei.compose(eta[0, 1], eta[0, 2])
    report.add("endotranslation-is-unit-endotranslations-modulo-lower-rank",
               pei.rank(pei.compose(wide, pei.invert(product))) < 3)


def verify_identities(suite: str = "all") -> IdentityReport:
    if suite not in SUITES:
        raise TypeError(f"Unsupported type: {suite}")
    report = IdentityReport()
    if suite in ("all", "transpositions"):
        translation_checks(report)
    if suite in ("all", "endotranslations"):
        endotranslation_checks(report)
    for name in report.failures():
        logging.warning(f"Identity failed: {name}")
    return report
