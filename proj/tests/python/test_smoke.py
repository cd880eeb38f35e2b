"""Smoke tests for the python module: worked values and a couple of sweeps."""

import pytest

try:
    import qcrystal as qc
except ImportError:  # running against the build tree
    import _qcrystal as qc


def test_weights_and_operators():
    assert qc.weight_of("112", 3) == [2, 1, 0]
    assert qc.apply_f("11", 3, "1") == "21"
    assert qc.apply_f("11", 3, "1bar") == "12"
    assert qc.apply_f("13", 3, "2") is None
    assert qc.apply_e("12", 3, "1bar") == "11"
    assert qc.eps("2", 3, 1) == 1
    assert qc.phi("11", 3, 1) == 2


def test_extremal_vectors():
    assert qc.is_highest("1111", 3)
    assert qc.is_lowest("3233", 3)
    assert not qc.is_strict_reverse_lattice("12", 3)

    def s_w0(w):
        for i in (1, 2, 1):
            w = qc.weyl_s(w, 3, i)
        return w

    lows = ["3333", "2333", "3233"]
    assert sorted(qc.highest_weight_vectors(3, 4)) == sorted(s_w0(w) for w in lows)
    assert [s_w0(w) for w in lows] == [
        qc.weyl_w(w, 3, qc.longest_element_word(3)) for w in lows
    ]


def test_tableaux():
    assert qc.hook_split("66135", 6) == 3
    assert qc.hook_split("1121", 3) is None
    assert qc.max_hook_subword_len("3211234", 4) == 7
    assert qc.is_ssdt("66135/324", 6)
    assert not qc.is_ssdt("211/3", 3)
    assert len(qc.enumerate_ssdt("2", 3)) == 9
    assert len(qc.enumerate_ssdt("3,1", 3)) == 24
    assert qc.highest_tableau("6,4,2,1", 4) == "432211/3211/21/1"
    assert qc.lowest_tableau("6,4,2,1", 4) == "444444/3333/22/1"
    assert qc.reading_word("66135/324", 6) == "32466135"


def test_insertion():
    assert qc.insert_letter("66135", 2, 6) == ("66325/1", 2, 2)
    assert qc.insert_word("66135/324", "2", 6) == "66325/421/3"
    assert qc.insert_tableau("12", "333/2", 3) == "333/22/1"
    product, recording = qc.insert_tableau_right("12", "333/2", 3)
    assert product == "333/22/1"
    assert "1" in recording and "2" in recording

    p, q = qc.rsk("2321", 3)
    assert (p, q) == ("321/2", "124/3")
    assert qc.inverse_rsk(p, q, 3) == "2321"

    p, q = qc.rsk("1223333444444", 4)
    assert p == qc.lowest_tableau("6,4,2,1", 4)
    assert q == "1,2,4,7,8,13/3,5,9,12/6,10/11"

    assert qc.knuth_psi("1121", 3) == "1211"
    with pytest.raises(ValueError):
        qc.knuth_psi("1234", 4)


def test_round_trip_sweep():
    # every rank-3 word of length 4 survives the round trip
    def words(length):
        if length == 0:
            yield ""
            return
        for rest in words(length - 1):
            for letter in "123":
                yield rest + letter

    for w in words(4):
        p, q = qc.rsk(w, 3)
        assert qc.inverse_rsk(p, q, 3) == w


def test_coefficients():
    assert qc.lr_set("2", "3,1", "4,2", 3) == ["23", "32"]
    assert qc.lr_coefficient("2", "3,1", "4,2", 3) == 2
    table = qc.decompose_tensor("2", "3,1", 3)
    assert table == {"3,2,1": 1, "4,2": 2, "5,1": 1}
    for method in ("lattice", "insertion", "tableaux", "components"):
        assert qc.decompose_tensor("2", "3,1", 3, method) == table
    assert qc.decompose_power(3, 4) == {"3,1": 2, "4": 1}
    assert len(qc.lr_tilde_tableaux("3,1", "3,1", "4,3,1", 3)) == 2


def test_graph_and_verify():
    dot = qc.graph_dot(word="11", n=3)
    assert dot.count("->") == 12
    assert dot == qc.graph_dot(word="11", n=3)
    ok, checks = qc.verify("quick")
    assert ok
    assert all(passed for (_, _, passed, _) in checks)
