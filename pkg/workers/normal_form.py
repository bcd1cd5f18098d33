import logging
from time import time_ns

from utils import orthoset, textformat
from utils.normalform import normal_form


def generate(path, mode: str = "pei") -> str:
    logging.info(f"Start computing the {mode} normal form of {path}.")
    start_time = time_ns()

    src = textformat.load(path, "set")
    image, witness = normal_form(src, mode)
    rank, height = orthoset.rank_height(image)
    report = f"mode={mode} rank={rank} height={height}\nform={image}\nwitness={witness}"

    end_time = time_ns()
    logging.info(f"Finished. Total time: {format((end_time - start_time) / 1e9, '.3f')}s\n")
    return report
