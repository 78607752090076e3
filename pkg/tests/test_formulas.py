import pytest

from domgames.formulas import (HatValues, gamma_Zg_cycle_power, gamma_Zg_path,
                               game_values_bridge, game_values_hamming,
                               hat_values)
from domgames.game import Z, game_value
from domgames.graphs import generate


def test_path_formula_values():
    assert gamma_Zg_path(7) == 3
    assert gamma_Zg_path(6) == 3
    assert gamma_Zg_path(2) == 1
    assert [gamma_Zg_path(n) for n in range(2, 12)] == \
        [1, 1, 2, 3, 3, 3, 4, 5, 5, 5]
    with pytest.raises(ValueError):
        gamma_Zg_path(1)


def test_cycle_power_formula_values():
    assert gamma_Zg_cycle_power(5, 1) == 3
    assert gamma_Zg_cycle_power(5, 2) == 1  # C_5^2 = K_5
    assert gamma_Zg_cycle_power(8, 1) == 4
    with pytest.raises(ValueError):
        gamma_Zg_cycle_power(2, 1)
    with pytest.raises(ValueError):
        gamma_Zg_cycle_power(5, 0)


def test_path_formula_matches_solver():
    for n in range(2, 21):
        assert gamma_Zg_path(n) == game_value(generate("path", n), Z), n


def test_cycle_power_formula_matches_solver():
    for N in range(3, 15):
        for n in range(1, 4):
            got = game_value(generate("cycle_power", N, n), Z)
            assert gamma_Zg_cycle_power(N, n) == got, (N, n)


def test_hamming_formula():
    assert game_values_hamming(2, 3) == 3
    assert game_values_hamming(3, 5) == 5
    assert game_values_hamming(2, 4) == 3
    with pytest.raises(ValueError):
        game_values_hamming(1, 5)
    with pytest.raises(ValueError):
        game_values_hamming(3, 4)  # needs n >= 2m-1


def test_bridge_formula():
    assert game_values_bridge(3, 3) == 3
    assert game_values_bridge(4, 5) == 3
    assert game_values_bridge(3, 6) == 3
    with pytest.raises(ValueError):
        game_values_bridge(2, 3)


def test_hat_values():
    assert hat_values(3) == HatValues(4, 4, 7)
    assert hat_values(4) == HatValues(5, 5, 9)
    for n in range(3, 30):
        hv = hat_values(n)
        assert hv.gamma_Zg == (hv.gamma_g + 1) // 2 == hv.gamma
    with pytest.raises(ValueError):
        hat_values(2)
