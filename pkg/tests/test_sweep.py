from basicset_kit.multipartitions import Multipartition
from basicset_kit.sweep import PairOutcome, collect, sweep_labels, sweep_pairs

A, B = Multipartition(((1,),)), Multipartition(((),))


def larger_first(left: Multipartition, right: Multipartition) -> PairOutcome:
    if left.size <= right.size:
        return PairOutcome()
    return PairOutcome(matched=True, asserted=1, violated=left.size > 0, detail={"size": left.size})


def test_sweep_pairs():
    report = sweep_pairs("demo", {"n": 1}, (A, B), larger_first)
    assert not report.passed
    assert (report.tested, report.matched, report.asserted) == (4, 1, 1)
    assert report.first_counterexample.left == A
    assert report.summary() == "demo: FAIL (tested=4, matched=1, asserted=1, counterexamples=1)"
    assert report.to_json() == {
        "schema": "basic-set-kit/1",
        "check": "demo",
        "parameters": {"n": 1},
        "passed": False,
        "tested": 4,
        "matched": 1,
        "asserted": 1,
        "counterexamples": [{"left": [[1]], "right": [[]], "size": 1}],
        "notes": [],
    }


def test_sweep_labels():
    report = sweep_labels("single", {}, (A, B), lambda label: PairOutcome(matched=True, asserted=2))
    assert report.passed
    assert report.first_counterexample is None
    assert (report.tested, report.matched, report.asserted) == (2, 2, 4)


def test_collect_keeps_row_order():
    rows = [[PairOutcome(violated=True), PairOutcome()], [PairOutcome(), PairOutcome(violated=True)]]
    report = collect("rows", {}, (A, B), rows, notes=("note",))
    assert [(c.left, c.right) for c in report.counterexamples] == [(A, A), (B, B)]
    assert report.notes == ("note",)
