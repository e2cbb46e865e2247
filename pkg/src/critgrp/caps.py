"""Brute-force size caps.

Setting ``CRITGRP_CAP_OVERRIDE`` to a non-empty value lifts every cap. That
is unsupported scale: the brute-force routines will still run, just slowly.
"""

import os

CANONICAL_FORM_MAX_VERTICES = 8
TU_MAX_DIM = 6
CIRCUIT_MAX_ELEMENTS = 12
REDUCED_DIVISOR_MAX_ORDER = 512
ENUMERATION_MAX_EDGES = 12


class CapExceeded(RuntimeError):
    """Input is larger than a brute-force routine is configured to handle."""


def caps_lifted() -> bool:
    return bool(os.environ.get("CRITGRP_CAP_OVERRIDE"))


def check_cap(what: str, value: int, cap: int) -> None:
    if value > cap and not caps_lifted():
        raise CapExceeded(f"{what} = {value} exceeds the cap of {cap} (set CRITGRP_CAP_OVERRIDE to lift)")
