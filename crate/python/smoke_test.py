"""Smoke test for the finring_py extension.

Build and install first:
    pip install maturin
    maturin build --release -m crates/python/Cargo.toml
    pip install target/wheels/finring_py-*.whl
"""

import json
import sys

import finring_py as fr


def main() -> int:
    z3 = fr.Ring("Z3")
    assert z3.order == 3 and len(z3) == 3
    flags = z3.flags()
    assert flags["weakly_nil_clean"] and not flags["nil_clean"]
    assert flags["uwnc"] and not flags["unc"]

    two = z3.element("2")
    assert z3.mul(two, two) == z3.one
    assert z3.decompose(two, "nil-clean") == []
    (sign, e, n), = z3.decompose(two, "weakly")
    assert sign == -1 and e == z3.one and n == z3.zero

    assert not fr.Ring("prod(Z3,Z3)").flags()["uwnc"]
    sub = fr.Ring("sub(M2(Z2);[[0,1],[1,1]])")
    assert sub.order == 4 and sub.flags()["reduced"] and not sub.flags()["uwnc"]
    assert fr.Ring("K(2)(Z4)").flags()["uwnc"]

    z4 = fr.Ring("Z4")
    assert z4.jacobson_radical() == z4.nilpotents() == [0, 2]
    readings = json.loads(z4.uniqueness())
    assert readings[0]["ring_level"] and not readings[1]["element_level"]
    assert z4.audit()

    profile = json.loads(fr.Ring("T2(Z4)").classify())
    assert profile["order"] == 64 and profile["flags"]["uwnc"]

    try:
        fr.Ring("T2(Z4")
    except ValueError as err:
        assert "column" in str(err)
    else:
        raise AssertionError("bad spec accepted")
    try:
        z3.add(0, 7)
    except IndexError:
        pass
    else:
        raise AssertionError("out-of-range element accepted")

    assert len(fr.checks()) == 31
    report = json.loads(fr.verify(["CHK-LOCAL"], catalog="Z4\nZ6\nZ9\n"))
    assert report["counts"]["fail"] == 0 and report["exit_code"] == 0
    hunt = json.loads(fr.hunt("CONJ-2", max_zn=12, families=False, catalog="Z6\n"))
    assert hunt["status"] == "no-counterexample-found"

    print("finring_py smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
