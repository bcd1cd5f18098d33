import logging
from time import time_ns

from models.report import FlBoundsReport
from utils import bounds, textformat


def generate(path, group: str) -> FlBoundsReport:
    logging.info(f"Start computing {group} finiteness-length bounds of {path}.")
    start_time = time_ns()

    report = bounds.fl_bounds(textformat.load(path, "set"), group)

    end_time = time_ns()
    logging.info(f"Finished. Total time: {format((end_time - start_time) / 1e9, '.3f')}s\n")
    return report
