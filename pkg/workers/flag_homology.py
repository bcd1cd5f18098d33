import logging
from time import time_ns

import config
from models.report import HomologyReport
from utils import textformat
from utils.homology import flag_homology


def generate(path, simplex_cap: int = config.SIMPLEX_CAP) -> HomologyReport:
    logging.info(f"Start computing flag homology of {path}.")
    start_time = time_ns()

    report = flag_homology(textformat.load(path, "graph"), simplex_cap)

    end_time = time_ns()
    logging.info(f"Finished. Total time: {format((end_time - start_time) / 1e9, '.3f')}s\n")
    return report
