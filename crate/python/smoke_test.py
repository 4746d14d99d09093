"""Exercise the extension module end to end; exits nonzero on any mismatch."""

import json
import sys
import tempfile

import secantlab_py as sl


def main():
    i = sl.Ideal(["x", "y", "z"], ["x*y", "y*z"])
    assert i.contains("x*y*z + y*z^2")
    assert not i.contains("x*z")
    assert sorted(i.groebner("lex")) == sorted(["x*y", "y*z"])

    c4 = sl.Variety.rational_normal_curve(4)
    assert (c4.n, c4.degree_l, c4.genus) == (1, 4, 0)
    h = c4.ideal.hilbert()
    assert (h["dim"], h["degree"]) == (1, 4), h

    sigma = c4.secant()
    h = sigma.ideal.hilbert()
    assert (h["dim"], h["degree"]) == (3, 3), h
    assert sigma.ideal.betti() == [(0, 0, 1), (1, 3, 1)]
    assert sigma.multiplicity_at("1,0,0,0,0") == 2
    assert sigma.depth_at("1,0,0,0,0") == 3

    with tempfile.TemporaryDirectory() as d:
        path = c4.write(d, "C4")
        again = sl.Variety.read(path)
        assert again.ideal == c4.ideal

    desc = json.dumps({"kind": "curve", "g": 0, "degL": 4})
    v = sl.predict(desc)
    assert v["multiplicity"]["value"] == 2
    r = sl.verify(desc, c4, "1,0,0,0,0")
    statuses = {item["name"]: item["status"] for item in r["items"]}
    assert all(s == "pass" for s in statuses.values()), statuses

    try:
        sl.predict('{"kind": "curve", "g": 0}')
    except ValueError:
        pass
    else:
        raise AssertionError("bad descriptor accepted")

    print("smoke test ok:", sigma)


if __name__ == "__main__":
    sys.exit(main())
