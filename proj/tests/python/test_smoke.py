import pytest

import koszul_lab as kl


def test_graph6_round_trip():
    assert kl.to_graph6("1 2\n2 3\n3 4\n4 1\n") == "Cl"
    n, edges = kl.edges("C~")
    assert n == 4
    assert edges == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_classify_documented_graphs():
    assert kl.classify("C~")["strongly_koszul"] is True
    c6 = kl.classify("EhEG")
    assert c6["strongly_koszul"] is False
    assert c6["rejection_reason"] is not None
    bowtie = kl.classify('{"n": 5, "edges": [[1,2],[1,3],[2,3],[3,4],[3,5],[4,5]]}')
    assert bowtie["strongly_koszul"] is False


def test_oracle_agrees_with_classifier():
    for g6 in ["Cl", "C~", "D~{", "EhEG"]:
        verdict = kl.oracle(g6)["verdict"] == "pass"
        assert verdict == kl.classify(g6)["strongly_koszul"], g6


def test_toric_and_groebner():
    c4 = kl.toric("Cl")
    assert c4["counts_by_degree"][2] == 1
    assert sum(c4["counts_by_degree"]) == 1
    gb = kl.groebner("C~")
    assert gb["found"] and gb["attempt"] == 0
    assert len(gb["basis"]) == 2


def test_veronese():
    assert kl.veronese(4, 2)["verdict"] == "pass"
    assert kl.veronese(5, 2, degree_bound=3)["verdict"] == "fail"


def test_errors():
    with pytest.raises(kl.ParseError):
        kl.classify("C~~")
    with pytest.raises(kl.DisconnectedGraphError):
        kl.oracle("1 2\n3 4\n")
    with pytest.raises(kl.UnsupportedSizeError):
        kl.oracle("JhCGGC@?G?_")
    with pytest.raises(ValueError):
        kl.veronese(8, 2)
