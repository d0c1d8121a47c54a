"""End-to-end acceptance suite: one test per headline result, each with a
wall-clock budget.  Every test prints a single PASS/FAIL line so a plain
``pytest -s tests/test_acceptance.py`` reads as a checklist."""

import pytest

from mutperm.verify import run_all

BUDGETS = {
    "degree3-expansions": 1,
    "bracket-relations": 1,
    "mutation-elements": 120,
    "basis-B": 300,
    "vanishing-identities": 5,
    "degree3-identities": 10,
    "counterexample-algebra": 1,
    "degree4-new-identities": 120,
    "degree5-closure": 1800,
    "cohn-certificate": 5,
    "lie-admissibility": 600,
    "infrastructure": 60,
}

CRITERIA = [
    ("degree3-expansions", "criterion 1: low-degree bracket expansions"),
    ("bracket-relations", "criterion 2: the six bracket relations"),
    ("mutation-elements", "criterion 3: spanning-set elements are mutation "
                          "elements up to degree 6"),
    ("basis-B", "criterion 4: B is an independent spanning bracket-closed "
                "set, dims 7/13/21"),
    ("vanishing-identities", "criterion 5: all named identities expand "
                             "to zero"),
    ("degree3-identities", "criterion 6: degree-3 identities all follow "
                           "from f and wa (rank 5)"),
    ("counterexample-algebra", "criterion 7: 3-dim algebra separates f "
                               "from wa"),
    ("degree4-new-identities", "criterion 8: exactly 2 new generator "
                               "identities at degree 4"),
    ("degree5-closure", "criterion 9: the six identities close the "
                        "degree-5 kernel"),
    ("cohn-certificate", "criterion 10: exceptional homomorphic image "
                         "certified"),
    ("lie-admissibility", "criterion 11: criterion-satisfying algebras "
                          "give Lie-admissible mutations"),
    ("infrastructure", "criterion 12: dimensions, counts and linear "
                       "algebra self-checks"),
]


def _run(name, label):
    (result,) = run_all(limit=6, names=[name])
    status = "PASS" if result["status"] == "passed" else "FAIL"
    print(f"{status} {label} [{result['seconds']}s] -- {result['detail']}")
    assert result["status"] == "passed", result["detail"]
    assert result["seconds"] <= BUDGETS[name], \
        f"{name} exceeded {BUDGETS[name]}s budget ({result['seconds']}s)"


@pytest.mark.parametrize("name,label", CRITERIA,
                         ids=[n for n, _ in CRITERIA])
def test_acceptance(name, label):
    _run(name, label)
