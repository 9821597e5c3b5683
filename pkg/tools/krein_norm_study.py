import sys
sys.path.append('.')
import argparse

import numpy as np
from prettytable import PrettyTable
from tqdm import tqdm

from linrel.algebra.relation import from_operator
from linrel.analysis.classify import is_contraction, is_symmetric, relation_norm
from linrel.tolerances import update_tolerances
from linrel.transforms.krein import krein, krein_by_definition
from utils.config import Config
from utils.logger import create_logger


def parse_args():
    parser = argparse.ArgumentParser(
        description='norm of the Krein transform of growing truncations of diag(k^p)')
    parser.add_argument("-c", "--config", type=str, default="configs/star_study.py")
    return parser.parse_args()


if __name__ == "__main__":
    args = parse_args()
    cfg = Config.fromfile(args.config)
    logger = create_logger('linrel', cfg.log_level, save_dir=cfg.log_dir)
    update_tolerances(cfg.tolerances)
    study = cfg.krein_study

    table = PrettyTable()
    table.field_names = ['n', 'max entry', '||K(T)||', '1 - ||K(T)||', 'symmetric contraction',
                         'definition distance']
    for n in tqdm(study.dims, desc='n'):
        diagonal = np.arange(1, n + 1, dtype=float) ** study.growth
        t = from_operator(np.diag(diagonal))
        k = krein(t)
        norm = relation_norm(k)
        table.add_row([n, f'{diagonal[-1]:g}', f'{norm:.12f}', f'{1 - norm:.3e}',
                       is_symmetric(k) and is_contraction(k),
                       f'{k.distance(krein_by_definition(t)):.2e}'])
    logger.info('\n%s', table)
