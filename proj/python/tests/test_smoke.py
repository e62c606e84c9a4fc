import pytest

import chroma

K2 = {"n": 2, "edges": [[0, 1]], "weights": [1, 1]}
E2 = {"n": 2, "edges": [], "weights": [1, 1]}
P3 = {"n": 3, "edges": [[0, 1], [1, 2]], "weights": [2, 1, 1]}


def test_compute_k2_on_three_colours():
    text, data = chroma.compute(K2, "complete:3")
    assert text == "2·x1·x2 + 2·x1·x3 + 2·x2·x3"
    assert data["host"] == "complete:3"
    assert data["variables"] == ["x1", "x2", "x3"]
    assert sum(int(t["coef"]) for t in data["terms"]) == 6


def test_default_host_is_one_more_than_total_weight():
    _, data = chroma.compute(P3)
    assert data["host"] == "complete:5"


def test_chain_dag():
    text, _ = chroma.compute({"n": 2, "arcs": [[0, 1]]}, "complete:2", kind="dag")
    assert text == "x1^2·x2 + x1·x2^2"


def test_expand_levels():
    assert chroma.expand(P3, 1)[0] == "+p[2,1,1] -p[3,1] -p[2,2] +p[4]"
    text, data = chroma.expand(P3, 2)
    assert text.count("p[") >= 11
    assert data is not None


def test_compare():
    iso = chroma.compare(P3, {"n": 3, "edges": [[1, 2], [0, 2]], "weights": [2, 1, 1]})
    assert iso["verdict"] == "ISOMORPHIC"
    assert sorted(iso["bijection"]) == [0, 1, 2]
    sep = chroma.compare(K2, E2)
    assert sep["verdict"] == "SEPARATED"
    assert "witness" in sep


def test_corpus_and_canonical():
    assert len(chroma.corpus(3, 1)) == 4
    g = chroma.canonical(P3)
    assert chroma.canonical(g) == g


def test_verify_and_threads():
    ok, text = chroma.verify("power-sum", 5, 7)
    assert ok and "PASS, 5/5" in text
    chroma.set_threads(2)
    assert chroma.threads() == 2
    assert chroma.compute(P3, "complete:4") == (chroma.set_threads(1) or chroma.compute(P3, "complete:4"))
    assert "separation" in chroma.suites()


def test_errors():
    with pytest.raises(chroma.ChromaError):
        chroma.compute(K2, "kneser:3")
    with pytest.raises(chroma.ChromaError):
        chroma.compute({"n": 2, "edges": [[0, 0]], "weights": [1, 1]})
    with pytest.raises(chroma.ChromaError):
        chroma.verify("nope")
