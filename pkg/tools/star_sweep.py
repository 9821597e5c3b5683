import sys
sys.path.append('.')
import argparse

import numpy as np
from prettytable import PrettyTable
from tqdm import tqdm

from linrel.analysis.classify import is_positive
from linrel.graphs.stargraph import (StarConfig, star_beta_for_alpha, star_closure_relation,
                                     star_eigvector, star_extension_alpha, star_sa_family,
                                     star_spectrum_closed_form)
from linrel.tolerances import update_tolerances
from utils.config import Config
from utils.logger import create_logger


def parse_args():
    parser = argparse.ArgumentParser(description='spectra of the star extensions A_alpha and S_beta')
    parser.add_argument("-c", "--config", type=str, default="configs/star_study.py")
    return parser.parse_args()


def alpha_table(cfg, star):
    table = PrettyTable()
    table.field_names = ['alpha', 'beta', 'eigenvalues', 'max error', 'eigvector residual', 'trace error']
    s = star.weight_norm_sq
    for alpha in tqdm(cfg.alphas, desc='alpha'):
        relation, report = star_extension_alpha(star, alpha)
        expected = star_spectrum_closed_form(star, alpha)
        got = report.eigenvalues
        if [m for _, m in got] == [m for _, m in expected]:
            error = max(abs(g - e) for (g, _), (e, _) in zip(got, expected))
        else:
            error = float('inf')
        u = star_eigvector(star, alpha)
        image = relation.second @ np.linalg.lstsq(relation.first, u, rcond=None)[0]
        residual = np.linalg.norm(image + (s / alpha) * u) / np.linalg.norm(u)
        trace = sum(v.real * m for v, m in got)
        beta = star_beta_for_alpha(star, alpha)
        table.add_row([f'{alpha:g}', f'{beta:.6f}',
                       ', '.join(f'{v.real:.6g} x{m}' for v, m in got),
                       f'{error:.2e}', f'{residual:.2e}', f'{abs(trace - (alpha - s / alpha)):.2e}'])
    return table


def beta_sweep(cfg, star):
    betas = np.exp(2j * np.pi * np.arange(cfg.betas) / cfg.betas)
    positive = [beta for beta in tqdm(betas, desc='beta') if is_positive(star_sa_family(star, beta))]
    s1 = star_sa_family(star, 1.0)
    return positive, s1.distance(star_closure_relation(star))


if __name__ == "__main__":
    args = parse_args()
    cfg = Config.fromfile(args.config)
    logger = create_logger('linrel', cfg.log_level, save_dir=cfg.log_dir)
    update_tolerances(cfg.tolerances)
    star = StarConfig.from_dict(cfg.star)

    logger.info('%r\n%s', star, alpha_table(cfg, star))
    positive, distance = beta_sweep(cfg, star)
    logger.info('positive members among %d beta samples: %s', cfg.betas,
                [f'{b:.6f}' for b in positive])
    logger.info('distance of S_1 from the closure relation: %.2e', distance)
