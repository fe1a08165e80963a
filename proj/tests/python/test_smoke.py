import json
import math

import pytest

import stuq


def test_classify_worked_examples():
    assert stuq.classify_family(-1, 1, 1, 1) == 1
    assert stuq.classify_family(-8, 2, 1, 4) == 5
    assert stuq.classify_family(-4, 1, 1, 1) == 7


def test_zero_charge_rejected():
    with pytest.raises(ValueError):
        stuq.classify_family(0, 1, 1, 1)


def test_entropy():
    assert stuq.entropy(-1, 1, 1, 1) == pytest.approx(2 * math.pi, rel=1e-12)
    assert stuq.entropy(-8, 2, 1, 4) == pytest.approx(16 * math.pi, rel=1e-12)


def test_schmidt_decompose():
    f = stuq.schmidt_decompose(-4, 1, 1, 1)
    r5 = math.sqrt(5)
    want = [r5, 6 / 5 * r5, 3 / 5 * r5, 3 / 5 * r5, 4 / 5 * r5]
    got = [l * f["norm_factor"] for l in f["lambda"]]
    assert got == pytest.approx(want, abs=1e-12)
    assert f["phi"] == pytest.approx(0.0)

    # BPS partner coincides
    g = stuq.schmidt_decompose(4, 1, 1, 1)
    assert g["lambda"] == pytest.approx(f["lambda"], abs=1e-12)


def test_delta_and_hyperdet_exact():
    assert stuq.delta(0, 1, 1, 1, -1, 0, 0, 0) == 4
    assert stuq.cayley_hyperdet([0, -1, -1, 0, -1, 0, 0, -1]) == 4


def test_three_tangle_ghz():
    h = 1 / math.sqrt(2)
    amps = [h, 0, 0, 0, 0, 0, 0, h]
    assert stuq.three_tangle(amps) == pytest.approx(1.0, abs=1e-12)


def test_analyze_report():
    r = stuq.analyze(-1, 1, 1, 1)
    assert r["family"] == 1
    assert r["bps"] is False
    assert r["delta"] == 4
    assert r["three_tangle"] == pytest.approx(1.0, abs=1e-12)

    j = json.loads(stuq.analyze_json(-1, 1, 1, 1))
    assert j["family"]["id"] == 1
    assert j["signature"] == {"j1": "zero", "j2": "zero", "j3": "zero"}


def test_dictionaries():
    dicts = stuq.enumerate_dictionaries()
    assert len(dicts) == 16
    as_tuples = {tuple(d) for d in dicts}
    assert len(as_tuples) == 16
    for d in as_tuples:
        assert tuple(-x for x in d) in as_tuples
    assert (1, -1, -1, 1, -1, 1, 1, 1) in as_tuples

    assert stuq.verify_swap(1, 2)


def test_run_batch():
    text = '{"q0":-1,"p1":1,"p2":1,"p3":1}\n{"q0":-4,"p1":1,"p2":1,"p3":1}\n'
    out, records, errors = stuq.run_batch(text)
    assert records == 2
    assert errors == 0
    lines = [json.loads(l) for l in out.strip().splitlines()]
    assert lines[0]["family"]["id"] == 1
    assert lines[1]["family"]["id"] == 7
    assert lines[2]["summary"]["records"] == 2
