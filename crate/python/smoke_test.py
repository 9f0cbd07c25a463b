"""Quick check that the compiled module imports and agrees with known values.

Build first:  pip install --no-build-isolation ./crates/python
"""

import eqschubert as es


def main():
    c = es.Engine("C")
    d = es.Engine("D")

    # generators
    assert str(c.double_schubert("-1 2")) == "Q[1]"
    assert str(d.double_schubert("-2 -1")) == "P[1]"

    # localization at the element itself is the product of inversion roots
    assert c.localize("-1 2", "-1 2") == "2t1"
    assert c.localize("-1 2", "1 2") == "0"

    # Q1^2 = 2 Q2 in the Schubert basis
    assert c.expand("Q[1]*Q[1]") == [("-2 1", "2"), ("-1", "2t1")]
    q1 = es.parse("Q[1]")
    assert c.expand(q1 * q1) == c.expand("Q[1]^2")

    # B = 2^-s C
    b = es.Engine("B")
    assert str(b.double_schubert("-1 2")) == "P[1]"

    w = es.Permutation("-2 1 3")
    assert w.length() == 2 and (w * w.inverse()) == es.Permutation("1 2 3")

    assert es.type_a("2 1") == "z1 - t1"

    try:
        d.double_schubert("-1 2 3")
    except ValueError:
        pass
    else:
        raise AssertionError("odd sign change accepted in type D")

    rows = es.run_verify("golden-c3")
    assert all(p == t for _, _, p, t in rows), rows
    print("ok", es.__version__, f"{len(c.table(2))} elements of rank 2")


if __name__ == "__main__":
    main()
