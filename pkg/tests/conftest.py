import math
from math import gcd

import pytest

import qfzeta as qz


@pytest.fixture(scope="session")
def circle():
    return qz.QuadraticForm(1.0, 0.0, 1.0)


@pytest.fixture(scope="session")
def q0():
    return qz.REFERENCE_FORM


@pytest.fixture(scope="session")
def five_forms(circle, q0):
    return [
        circle,
        q0,
        qz.QuadraticForm(2.0, 0.0, 5.0),
        qz.QuadraticForm(1.0, 1.0, 1.0),
        qz.QuadraticForm(1.0, -math.sqrt(2.0), 2.0),
    ]


def brute_force_values(form, x, box):
    """Grouped nonzero form values Q <= x from a plain double loop.

    Independent of the production enumeration: no per-n windows, just a
    full box scan with |m|, |n| <= box. The caller is responsible for the
    box actually covering {Q <= x}.
    """
    grouped = {}
    for m in range(-box, box + 1):
        for n in range(-box, box + 1):
            if m == 0 and n == 0:
                continue
            v = form.a * m * m + (form.b * m) * n + form.c * n * n
            if v <= x:
                tot, prim = grouped.get(v, (0, 0))
                grouped[v] = (tot + 1, prim + (gcd(abs(m), abs(n)) == 1))
    return dict(sorted(grouped.items()))
