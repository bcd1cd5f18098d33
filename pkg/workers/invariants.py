import logging
from time import time_ns

import config
from models.errors import PreconditionError
from models.report import format_value
from utils import akmod, pei, textformat


def generate(path, k: int, orbit_budget: int = config.ORBIT_BUDGET) -> str:
    logging.info(f"Start computing rank-{k} invariants of {path}.")
    start_time = time_ns()

    g = textformat.load(path, "map")
    if not g.Bijective:
        raise PreconditionError("Invariants are defined for pei-permutations")
    result = pei.invariants(g, k)
    lines = [str(result)]
    if result.InCord and k >= 1:
        m = akmod.matrix_of(g, k)
        lines += [str(m), str(akmod.classify(m))]
        if not m.is_zero():
            p, q = akmod.submodule_invariants([m], orbit_budget)
            lines.append(f"submodule p={format_value(p)} q={format_value(q)}")

    end_time = time_ns()
    logging.info(f"Finished. Total time: {format((end_time - start_time) / 1e9, '.3f')}s\n")
    return "\n".join(lines)
