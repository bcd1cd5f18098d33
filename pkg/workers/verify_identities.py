import logging
from time import time_ns

from models.report import IdentityReport
from utils.identities import verify_identities


def generate(suite: str = "all") -> IdentityReport:
    logging.info(f"Start verifying the {suite} identity suite.")
    start_time = time_ns()

    report = verify_identities(suite)

    end_time = time_ns()
    logging.info(f"Finished. Total time: {format((end_time - start_time) / 1e9, '.3f')}s\n")
    return report
