"""Smoke test for the python bindings: a few frozen oracles, no framework."""

import math

import orthoserie as osr


def close(a, b, tol=1e-10):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def main():
    w = osr.Weight("freud:2")
    assert w.freud_type
    assert w.descriptor == "freud:2"
    assert close(w.q(1.5), 2.25)
    assert close(w.mrs(4.0), 2.0)

    e = osr.Weight("erdos:1:2")
    assert not e.freud_type
    assert close(e.q(1.0), math.e - 1.0)

    table = osr.build_table(w, 32)
    assert table.N == 32
    assert close(table.mu0, math.sqrt(math.pi / 2.0))
    for k, b in enumerate(table.B, start=1):
        assert abs(b - math.sqrt(k) / 2.0) < 1e-9, (k, b)
    assert max(abs(a) for a in table.A) < 1e-10

    nodes, weights = osr.gauss(table, 2)
    assert close(nodes[0], -0.5) and close(nodes[1], 0.5)
    assert close(sum(weights), math.sqrt(math.pi / 2.0))

    # q_0(0) = (pi/2)^(-1/4)
    assert close(osr.eval_weighted(table, w, 0, 0.0), (math.pi / 2.0) ** -0.25)

    lam = osr.christoffel(table, w, 16, 0.3)
    k16 = osr.kernel(table, w, 16, 0.3, 0.3)
    assert close(lam * k16, 1.0)

    sgn = osr.BVFunction("sgn")
    assert sgn(2.0) == 1.0 and sgn(-2.0) == -1.0
    assert osr.v_delta(w, sgn, -math.inf, math.inf, 0.5) == 2.0

    c = osr.coefficients(table, w, sgn, 16)
    assert all(abs(c[k]) < 1e-12 for k in range(0, 16, 2))  # even terms vanish
    s = osr.partial_sum(table, w, sgn, 16, 1.0)
    assert close(s, -osr.partial_sum(table, w, sgn, 16, -1.0), 1e-12)

    lam0 = osr.tail_integral(table, w, 0, 0.0)
    assert close(lam0, 0.5 * (math.pi / 2.0) ** 0.25, 1e-10)

    rhs = osr.theorem_rhs(e, sgn, 0.1, 64)
    assert rhs["total"] > 0 and math.isfinite(rhs["total"])
    assert close(rhs["term2"], 2.0 / 64)

    print("python smoke: ok")


if __name__ == "__main__":
    main()
