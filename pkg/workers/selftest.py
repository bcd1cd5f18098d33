import logging
from math import comb
from random import Random
from time import time_ns

import config
from models.errors import PeiError
from models.graph import ColoredGraph
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from models.report import IdentityReport
from utils import factor, generators, germs, morse, pei
from utils.homology import complete_multipartite, flag_homology
from utils.identities import verify_identities


def layers(count: int) -> list[Orthant]:
    return [Orthant((0, 0, height), (1, 1, 0)) for height in range(count)]


def flow_checks(report: IdentityReport, rng: Random, samples: int):
    pieces = layers(3)
    domain = OrthohedralSet(3, pieces)
    for index in range(samples):
        word = generators.random_word(rng, domain, 4, generators.STABILIZER_KINDS)
        g = generators.evaluate(domain, word)
        report.add(f"total-flow-zero-{index}", sum(pei.global_flow(g, 2).values()) == 0)
    translation = generators.unit_pei_translation(domain, pieces[0], 0, pieces[1], 0)
    flows = pei.global_flow(translation, 2)
    report.add("unit-translation-flow", [flows[germs.germ_of(piece)] for piece in pieces[:2]] == [-1, 1])


def factor_checks(report: IdentityReport, rng: Random, samples: int):
    domain = OrthohedralSet(3, layers(3))
    for index in range(samples):
        g = generators.evaluate(domain, generators.random_word(rng, domain, 3))
        try:
            passed = pei.equals(generators.evaluate(domain, factor.factor_generators(g)), g)
        except PeiError as error:
            logging.warning(f"Factorization failed: {error}")
            passed = False
        report.add(f"factor-round-trip-{index}", passed)


def homology_checks(report: IdentityReport):
    report.add("flag-homology-k22", flag_homology(complete_multipartite([2, 2])).Bouquet == (1, 1))
    report.add("flag-homology-k33", flag_homology(complete_multipartite([3, 3])).Bouquet == (1, 4))
    edgeless = ColoredGraph({f"v{index}": 1 for index in range(4)})
    report.add("flag-homology-edgeless", flag_homology(edgeless).Bouquet == (0, 3))


def skeleton_checks(report: IdentityReport):
    for rank, skeleton_rank in ((2, 1), (3, 2), (4, 2), (4, 3)):
        heights = morse.skeleton_heights(rank, skeleton_rank)
        report.add(f"skeleton-height-{rank}-{skeleton_rank}", heights["skeleton"] == comb(rank, skeleton_rank))
        report.add(f"singular-height-{rank}-{skeleton_rank}",
                   heights["singular_regular"] == heights["singular"] * (rank - skeleton_rank + 1))


def generate(seed: int = config.DEFAULT_SEED, samples: int = config.SELFTEST_SAMPLES) -> IdentityReport:
    logging.info("Start self-test.")
    start_time = time_ns()
    rng = Random(seed)

    report = verify_identities("all")
    flow_checks(report, rng, samples)
    factor_checks(report, rng, max(1, samples // 10))
    homology_checks(report)
    skeleton_checks(report)
    for name in report.failures():
        logging.warning(f"Check failed: {name}")

    end_time = time_ns()
    logging.info(f"Finished. Total time: {format((end_time - start_time) / 1e9, '.3f')}s\n")
    return report
