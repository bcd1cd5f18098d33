import logging
from time import time_ns

from models.errors import PreconditionError
from utils import orthoset, textformat

BINARY = ("union", "intersect", "difference", "equals")


def generate(path, operation: str = None, other=None) -> str:
    logging.info(f"Start evaluating set {path}.")
    start_time = time_ns()

    if operation in BINARY and other is None:
        raise PreconditionError(f"--op {operation} needs --with")
    src = textformat.load(path, "set")
    match operation:
        case None:
            result = src
        case "complement":
            result = orthoset.complement(src)
        case "union" | "intersect" | "difference":
            result = orthoset.combine(src, textformat.load(other, "set"), operation)
        case "equals":
            result = None
            equal = orthoset.equals(src, textformat.load(other, "set"))
        case _:
            raise TypeError(f"Unsupported type: {operation}")
    if result is None:
        report = f"equals={str(equal).lower()}"
    else:
        result = orthoset.tidy(result)
        rank, height = orthoset.rank_height(result)
        report = f"rank={'none' if rank is None else rank} height={height} pieces={len(result)}\n{result}"

    end_time = time_ns()
    logging.info(f"Finished. Total time: {format((end_time - start_time) / 1e9, '.3f')}s\n")
    return report
