import os
import subprocess

import pytest

try:
    import nilcox as nx
except ImportError:
    import _nilcox as nx


def test_loewy_triangle():
    assert nx.loewy_dims(4) == [1, 3, 5, 6, 5, 3, 1]
    assert nx.loewy_dims(6)[:4] == [1, 5, 14, 29]


def test_group_info():
    info = nx.group_info("B:3")
    assert info["order"] == 48
    assert info["max_length"] == 9
    assert sum(info["length_histogram"]) == 48


def test_normalize_worked_example():
    r = nx.normalize(9, "[5,6][2,4][5,7]^2[1,4][5,8][1,9]")
    assert r["sign"] == 1
    assert r["canonical"] == "[5,6][2,4][5,7]^2[1,4][5,8][1,9]"
    assert r["reversed"] == "[1,9][5,2][9,6][2,4]^2[7,9][2,3]"
    assert r["tuple"] == [2, 3, 3, 1, 5, 4, 2, 1]


def test_overlapping_product_vanishes():
    assert nx.normalize(4, "[1,3][2,4]")["sign"] == 0


def test_ranks():
    assert [nx.zring_rank(4, d) for d in range(5)] == [1, 3, 6, 10, 15]
    assert nx.ext_ranks("A:3", 2, steps=4) == [1, 3, 6, 10, 15]


def test_resolution_checks():
    assert nx.check_resolution(3, 6)


def test_koszul_duality_and_ranks():
    assert nx.koszul_duality(4, 0)
    assert nx.koszul_duality(4, 2)
    r = nx.x_graded_ranks(4, 4, 3)
    assert r["linear"] == r["counted"] == [1, 6, 20, 55, 145]


def test_matrix_representation():
    assert nx.image_dimension(4, 3) == 16
    assert nx.verify_matrix_relations(5) == []


def test_cli_loewy_line():
    cli = os.environ.get("NILCOX_CLI")
    if not cli:
        pytest.skip("CLI path not provided")
    out = subprocess.run([cli, "loewy", "--n", "4"], capture_output=True,
                         text=True, check=True)
    assert out.stdout == "1 3 5 6 5 3 1\n"
