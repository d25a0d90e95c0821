"""Shared independent oracles for the test suite.

Everything here checks results by brute force: monomial enumeration for
ideal membership, direct expansion for products.  None of it reuses the
code paths under test.
"""

from __future__ import annotations

import numpy as np

from skoszul import MonomialIdeal, monomials_up_to_degree


def monomial_grid(nvars: int, max_degree: int) -> np.ndarray:
    """All exponent vectors of total degree <= max_degree, one per row."""
    return np.array(monomials_up_to_degree(nvars, max_degree), dtype=np.int64)


def membership_mask(ideal: MonomialIdeal, monos: np.ndarray) -> np.ndarray:
    """Which rows of monos lie in the ideal (divisible by some generator)."""
    if ideal.is_zero():
        return np.zeros(len(monos), dtype=bool)
    gens = np.array(ideal.gens, dtype=np.int64)
    return (gens[None, :, :] <= monos[:, None, :]).all(axis=2).any(axis=1)


def colon_mask_oracle(J: MonomialIdeal, I: MonomialIdeal,
                      monos: np.ndarray) -> np.ndarray:
    """m in (J : I) iff m * g in J for every generator g of I."""
    ok = np.ones(len(monos), dtype=bool)
    for g in I.gens:
        ok &= membership_mask(J, monos + np.array(g, dtype=np.int64))
    return ok


def intersect_mask_oracle(J1: MonomialIdeal, J2: MonomialIdeal,
                          monos: np.ndarray) -> np.ndarray:
    return membership_mask(J1, monos) & membership_mask(J2, monos)


def assert_same_members(computed: MonomialIdeal, oracle_mask: np.ndarray,
                        monos: np.ndarray) -> None:
    got = membership_mask(computed, monos)
    mismatch = np.nonzero(got != oracle_mask)[0]
    assert mismatch.size == 0, (
        f"membership mismatch at {[tuple(monos[i]) for i in mismatch[:5]]}")
