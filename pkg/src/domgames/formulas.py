"""Closed-form oracles for the exactly known game values.

Pure arithmetic, no graph construction; the verifier compares these
against solver output and treats any mismatch as a hard failure.
"""

from __future__ import annotations

from dataclasses import dataclass


def gamma_Zg_path(n: int) -> int:
    """Z-game value of the n-vertex path: ceil(n/2), minus one when
    n = 3 (mod 4)."""
    if n < 2:
        raise ValueError("path formula needs n >= 2")
    half = -(-n // 2)
    return half - 1 if n % 4 == 3 else half


def gamma_Zg_cycle_power(N: int, n: int) -> int:
    """Z-game value of the n-th power of an N-cycle: ceil(N/(n+1)), minus
    one when N mod (2n+2) lands in {n+2, ..., 2n+1}."""
    if N < 3 or n < 1:
        raise ValueError("cycle-power formula needs N >= 3 and n >= 1")
    base = -(-N // (n + 1))
    return base if N % (2 * n + 2) <= n + 1 else base - 1


def game_values_hamming(m: int, n: int) -> int:
    """Common value 2m-1 of all five games on K_m box K_n when
    n >= 2m-1 and m >= 2."""
    if m < 2 or n < 2 * m - 1:
        raise ValueError("hamming formula needs m >= 2 and n >= 2m-1")
    return 2 * m - 1


def game_values_bridge(m: int, n: int) -> int:
    """Common Z/L/LL value 3 of the two-clique bridge graph, m, n >= 3."""
    if m < 3 or n < 3:
        raise ValueError("bridge formula needs m, n >= 3")
    return 3


@dataclass(frozen=True)
class HatValues:
    gamma_Zg: int
    gamma: int
    gamma_g: int


def hat_values(n_G: int) -> HatValues:
    """Exact values for the hat construction over a connected base of
    order n_G: gamma_Zg = gamma = n_G + 1 and gamma_g = 2 n_G + 1."""
    if n_G < 3:
        raise ValueError("hat values need n_G >= 3")
    return HatValues(gamma_Zg=n_G + 1, gamma=n_G + 1, gamma_g=2 * n_G + 1)
