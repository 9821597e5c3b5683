from contextlib import contextmanager

from utils.config import ConfigDict

DEFAULT_TOLERANCES = dict(
    tol_rank=1e-10,     # singular values below tol_rank * s_max are zero
    tol_eq=1e-8,        # projector Frobenius distance for subspace equality
    tol_orth=1e-10,     # Gram deviation for orthonormality / orthogonality
    tol_psd=1e-9,       # admissible negative eigenvalue of a form matrix
    tol_cluster=1e-7,   # eigenvalues closer than this are merged
)

TOLERANCES = ConfigDict(DEFAULT_TOLERANCES)


def update_tolerances(cfg=None, **overrides):
    """Set tolerances from a dict (e.g. ``cfg.tolerances``) and/or keywords.

    ``None`` values are ignored so unset CLI flags can be passed through.
    """
    values = dict(cfg or {})
    values.update(overrides)
    for key, value in values.items():
        if key not in DEFAULT_TOLERANCES:
            raise KeyError(f'unknown tolerance {key!r}')
        if value is None:
            continue
        value = float(value)
        if not value > 0:
            raise ValueError(f'tolerance {key} must be positive, got {value}')
        TOLERANCES[key] = value
    return ConfigDict(TOLERANCES)


def reset_tolerances():
    TOLERANCES.update(DEFAULT_TOLERANCES)


@contextmanager
def override_tolerances(**overrides):
    saved = dict(TOLERANCES)
    try:
        update_tolerances(**overrides)
        yield TOLERANCES
    finally:
        TOLERANCES.clear()
        TOLERANCES.update(saved)
