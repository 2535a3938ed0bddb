import re

import pytest

from weaklefschetz.ideals import minimalize
from weaklefschetz.monomials import Monomial

LETTERS = "xyzt"


def letter_monomial(text, n=4):
    """Parse single-letter notation: ``xzt^3``, ``y^2z``, ``1``."""
    exps = [0] * n
    s = text.replace(" ", "")
    if s == "1":
        return Monomial(tuple(exps))
    for letter, e in re.findall(r"([xyzt])(?:\^(\d+))?", s):
        exps[LETTERS.index(letter)] += int(e) if e else 1
    return Monomial(tuple(exps))


def letter_ideal(text, n=4):
    return minimalize([letter_monomial(t, n) for t in text.split(",")], n)


H = (1, 4, 7, 8, 7, 4, 1)
DELTA_H = (1, 3, 3, 1)
DELTA2_H = (1, 2)

LEX_DELTA2 = "x^2, xy, y^2"
W1_DELTA = "x^2, xy, y^2, xz^2, yz^2, z^4"
LEX_DELTA = "x^2, xy, xz, y^3, y^2z, yz^2, z^4"
W2 = "x^2, xy, y^2, xz^2, yz^2, z^4, z^3t, xzt^3, yzt^3, z^2t^3, xt^5, yt^5, zt^5, t^7"
W1 = ("x^2, xy, xz, y^3, y^2z, yz^2, z^4, z^3t, y^2t^3, yzt^3, z^2t^3, "
      "xt^5, yt^5, zt^5, t^7")
LEX = ("x^2, xy, xz, xt^2, y^3, y^2z, y^2t^2, yz^3, yz^2t, yzt^3, yt^4, z^5, z^4t, "
       "z^3t^3, z^2t^4, zt^5, t^7")
I_EXAMPLE = "x^2, y^2, z^2, xyzt, xyt^3, xzt^3, yzt^3, xt^5, yt^5, zt^5, t^7"

# Betti diagrams as printed: row j -> [beta_{1,1+j}, ..., beta_{4,4+j}]
DIAGRAM_LEX = {1: [3, 3, 1, 0], 2: [3, 6, 4, 2], 3: [3, 8, 7, 2],
               4: [4, 11, 10, 3], 5: [3, 9, 9, 3], 6: [1, 3, 3, 1]}
DIAGRAM_W1 = {1: [3, 3, 1, 0], 2: [3, 5, 2, 0], 3: [2, 5, 4, 1],
              4: [3, 9, 9, 3], 5: [3, 9, 9, 3], 6: [1, 3, 3, 1]}
DIAGRAM_W2 = {1: [3, 2, 0, 0], 2: [2, 4, 2, 0], 3: [2, 5, 4, 1],
              4: [3, 9, 9, 3], 5: [3, 9, 9, 3], 6: [1, 3, 3, 1]}
DIAGRAM_I = {1: [3, 0, 0, 0], 2: [0, 3, 0, 0], 3: [1, 3, 4, 1],
             4: [3, 9, 9, 3], 5: [3, 9, 9, 3], 6: [1, 3, 3, 1]}


@pytest.fixture(scope="session")
def worked():
    return {
        "lex_delta2": letter_ideal(LEX_DELTA2, 2),
        "w1_delta": letter_ideal(W1_DELTA, 3),
        "lex_delta": letter_ideal(LEX_DELTA, 3),
        "w2": letter_ideal(W2),
        "w1": letter_ideal(W1),
        "lex": letter_ideal(LEX),
        "i": letter_ideal(I_EXAMPLE),
    }


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            if outcome == "passed" and getattr(rep, "when", "call") != "call":
                continue
            match = re.search(r"test_criterion_(\d+)", nodeid)
            if not match:
                continue
            key = int(match.group(1))
            ok = outcome == "passed"
            results[key] = results.get(key, True) and ok
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for key in sorted(results):
        terminalreporter.write_line(f"criterion {key}: {'PASS' if results[key] else 'FAIL'}")
