_base_ = [
    './_base_/tolerances.py',
]
seed = 1234
samples = 512
float_digits = 12
log_level = 'INFO'
log_dir = None
probes = [[0.0, 1.0], [0.0, -1.0], [-2.0, 0.0]]

######################## star_config #########################
star = dict(
    leaves = 4,
    weights = [1.0, -2.0, 0.5, 3.0],
)
alphas = [-4.0, -2.0, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0, 4.0]
betas = 360

######################## krein_study #########################
krein_study = dict(
    dims = [2, 4, 8, 16, 32, 64],
    growth = 2.0,          # diagonal entries k ** growth
)
