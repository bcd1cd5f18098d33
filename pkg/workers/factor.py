import logging
from time import time_ns

from models.errors import PreconditionError
from utils import factor, textformat


def generate(path, k: int = None) -> str:
    logging.info(f"Start factoring {path}.")
    start_time = time_ns()

    g = textformat.load(path, "map")
    if not g.Bijective:
        raise PreconditionError("Only pei-permutations can be factored")
    word = factor.factor_generators(g)
    lines = [f"length={len(word)}"] + [str(generator) for generator in word]
    if k is not None:
        coordinates, experimental = factor.abelianization_class(g, k)
        lines.append(f"abelianization k={k} class=({','.join(map(str, coordinates))}) "
                     f"experimental={str(experimental).lower()}")

    end_time = time_ns()
    logging.info(f"Finished. Total time: {format((end_time - start_time) / 1e9, '.3f')}s\n")
    return "\n".join(lines)
