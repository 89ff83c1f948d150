"""Smoke test for the invdiff_py extension.

Build and install first:
    pip install --no-build-isolation -e crates/invdiff-py
"""

import invdiff_py as m


def main():
    simon = m.Form([7, 10, 5, 6])
    assert simon.discriminant() == -34828
    assert simon.signature() == (1, 1)
    assert simon.sqrt_criterion() == "obstructed"
    assert not simon.is_maximal()

    cg = m.class_group([7, 10, 5, 6])
    assert cg["group"] == ["2"] and cg["sqrt_count"] == "0"

    golden = m.Form([1, 2, -5, 3])
    a, b = golden.golden_pair()
    assert a == [[0, 0, -1], [0, -1, 0], [-1, 0, -5]]
    assert b == [[0, 1, 0], [1, -2, 5], [0, 5, -3]]
    # det A = +1 here, so det(xA + zB) = F
    assert m.pencil(a, b) == [1, 2, -5, 3]

    assert golden.height_below("3") != golden.height_below("1")

    rep = m.census(3, 3, 1)
    sq = [c for c in rep["comparisons"] if c["event"] == "squareful_in_maximal"][0]
    assert sq["census_density"] == "1/4"

    table = m.ff_orbits([0, 2, 0], 3)
    assert len(table["orbits"]) == 4 and table["mass_identity"]

    enum = m.enumerate(3, 7, "3")
    assert enum["summary"]["total"] == "59"

    res = m.verify("golden-pair")
    assert res["pass"], res["detail"]

    try:
        m.census(3, 4, 0)
    except ValueError:
        pass
    else:
        raise AssertionError("even p accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
