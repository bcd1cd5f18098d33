import logging
from time import time_ns

from models.report import format_value
from utils import pei, textformat


def generate(path, point: tuple = None, power: int = None) -> str:
    logging.info(f"Start evaluating element {path}.")
    start_time = time_ns()

    g = textformat.load(path, "map")
    if power is not None:
        g = pei.power(g, power)
    fields = {
        "injective": g.Injective,
        "bijective": g.Bijective,
        "pet": g.Pet,
        "diagonal": g.Diagonal,
    }
    lines = [" ".join(f"{key}={format_value(value)}" for key, value in fields.items())]
    if g.Bijective:
        lines[0] += f" rank={pei.rank(g)}"
        lines.append(f"support={pei.support(g)}")
    if power is not None:
        lines.append(str(g))
    if point is not None:
        image = pei.apply(g, point)
        lines.append(f"point=({','.join(map(str, point))}) image=({','.join(map(str, image))})")

    end_time = time_ns()
    logging.info(f"Finished. Total time: {format((end_time - start_time) / 1e9, '.3f')}s\n")
    return "\n".join(lines)
