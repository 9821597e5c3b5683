import math
from numbers import Number
from typing import Optional

import numpy as np

from linrel.tolerances import TOLERANCES
from utils.util import dump_json, sha256_hex

REPORT_VERSION = 1


def encode_value(obj):
    """JSON-safe copy of ``obj``: numpy scalars unwrapped, infinities as strings."""
    if isinstance(obj, dict):
        return {str(k): encode_value(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode_value(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return encode_value(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [encode_value(obj.real), encode_value(obj.imag)]
    if isinstance(obj, Number):
        value = float(obj)
        if math.isnan(value):
            return 'nan'
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return value + 0.0
    return obj


def document_digest(doc: dict) -> str:
    return sha256_hex(dump_json(doc))


def make_report(command: dict, doc: dict, result: dict, seed: Optional[int] = None) -> dict:
    """Report envelope around ``result``.

    Args:
        command (dict): the command name and the flags that shaped the result.
        doc (dict): the validated input document, digested canonically.
        result (dict): command payload.
        seed (int, optional): seed of any sampling that took place.
    """
    return encode_value(dict(
        report_version=REPORT_VERSION,
        command=command,
        input_digest=document_digest(doc),
        result=result,
        tolerances=dict(TOLERANCES),
        seed=seed,
    ))


def dump_report(report: dict) -> str:
    return dump_json(report)
