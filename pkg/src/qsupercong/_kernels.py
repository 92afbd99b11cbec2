"""Integer kernels for the p-adic Gamma product.

The compiled path needs numba; ``QSC_DISABLE_NUMBA=1`` (or numba missing)
selects the pure-Python loop.  Both compute the same thing:
prod_{1 <= j < n, p does not divide j} j  (mod modulus), with modulus <= 10^7
so every intermediate fits in an int64.
"""

from __future__ import annotations

import os


def _unit_product_pure(n: int, p: int, modulus: int) -> int:
    acc = 1 % modulus
    for j in range(1, n):
        if j % p:
            acc = acc * j % modulus
    return acc


def _compile():
    if os.environ.get("QSC_DISABLE_NUMBA", "").strip() not in ("", "0"):
        return None
    try:
        from numba import njit
    except ImportError:
        return None

    @njit(cache=True)
    def unit_product(n, p, modulus):
        acc = 1 % modulus
        for j in range(1, n):
            if j % p != 0:
                acc = acc * j % modulus
        return acc

    return unit_product


_compiled = _compile()
KERNEL = "numba" if _compiled is not None else "python"


def unit_product(n: int, p: int, modulus: int, *, force_pure: bool = False) -> int:
    if modulus > 10**7:
        raise ValueError(f"modulus {modulus} exceeds the int64-safe bound 10^7")
    if force_pure or _compiled is None:
        return _unit_product_pure(n, p, modulus)
    return int(_compiled(n, p, modulus))


unit_product_pure = _unit_product_pure
