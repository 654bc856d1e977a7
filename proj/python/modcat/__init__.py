"""Exact modular data for Malle Z-modular families and quantum doubles at roots of unity."""

import json

from . import _core
from ._core import FormatError, QuantumError, SymbolError, symbol_count

__all__ = [
    "FormatError",
    "QuantumError",
    "SymbolError",
    "fusion_ring",
    "malle_datum",
    "quantum_datum",
    "symbol_count",
    "verify",
]

_CHECKS = {
    "main": _core.verify_main_theorem,
    "ennola": _core.verify_ennola,
    "counts": _core.verify_counts,
    "sl2z": _core.verify_sl2z,
    "cuntz": _core.verify_cuntz,
    "cyclic3": _core.verify_cyclic3,
    "g4": _core.verify_g4,
    "g27": _core.verify_g27,
    "g24": _core.verify_g24,
}


def malle_datum(n, d, u=1):
    return json.loads(_core.malle_datum(n, d, u))


def quantum_datum(lie_type, rank, d):
    return json.loads(_core.quantum_datum(lie_type, rank, d))


def fusion_ring(n, d, u=1):
    return json.loads(_core.fusion_ring(n, d, u))


def verify(target, *args):
    """Run one check by name; family checks take (n, d)."""
    try:
        check = _CHECKS[target]
    except KeyError:
        raise ValueError(f"unknown check {target!r}") from None
    return json.loads(check(*args))
