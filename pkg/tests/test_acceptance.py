"""Acceptance suite: every pinned reference value at exact tolerance.

Each check prints one PASS line (visible under ``pytest -s``); a failed
assertion marks the criterion FAIL.  All comparisons are exact -- the
invariants are integers and integer polynomials, so no tolerances apply.

Known red check: acceptance_4c pins the published figure-eight count (1)
over the 3-element linear birack.  Direct enumeration over all 3^8
assignments of the standard figure-eight code -- and of its mirror,
reverse, and an independently constructed alternating diagram -- gives 3
(the one-parameter labeling family (a, 2a, a, 2a, ...)), so the pinned
value appears to be an upstream erratum and this check fails by design
rather than weakening the assertion.
"""

from itertools import product

from biracks import (
    MultiPoly,
    NestedPoly,
    classify,
    cycle_string,
    enumerate_biracks,
    from_matrix,
    parse_gauss,
    phi_image,
    phi_integral,
    phi_rho,
    phi_writhe,
    birack_polynomial,
    subbirack_polynomial,
    tsr_birack,
    unlink,
    verify_axioms,
    with_framing,
    enumerate_labelings,
)
from conftest import (
    CINQUEFOIL,
    CONSTANT_ACTION_4_MATRIX,
    FIGURE_EIGHT,
    HOPF,
    KNOT_CODES,
    STEVEDORE,
    TEN_ELEMENT_MATRIX,
    TREFOIL,
    TWO_ELEMENT_MATRIX,
    TWO_ORBIT_4_MATRIX,
    UNKNOT,
    brute_force_labelings,
)


def ok(line: str) -> None:
    print(f"ACCEPTANCE PASS: {line}")


def image_multiset(d, b):
    from biracks import compute_invariant

    return dict(compute_invariant(d, b, "image").multiset)


def test_acceptance_1_constant_action_matrix():
    b = from_matrix(4, CONSTANT_ACTION_4_MATRIX)
    assert cycle_string(b.pi) == "(1 2)(3 4)"
    assert b.rank == 2
    ok("1: 4-element constant-action matrix verifies, kink map (1 2)(3 4), rank 2")


def test_acceptance_2_linear_birack_z4():
    n, t, s, r = 4, 3, 2, 3
    assert (s * s) % n == ((1 - t * r) * s) % n  # ideal membership
    b = tsr_birack(n, t, s, r)
    assert b.rank == 2
    tinv, rinv = pow(t, -1, n), pow(r, -1, n)
    assert ((t * r + s) * tinv * rinv * (1 - s)) % n == 1
    assert ((1 - s) * (1 + tinv * rinv * s)) % n == 1
    ok("2: (t,s,r)=(3,2,3) over Z_4 constructs, rank 2, inverse identities hold")


def test_acceptance_3_hopf_vs_unlink():
    b = from_matrix(2, TWO_ELEMENT_MATRIX)
    hopf, u2 = parse_gauss(HOPF), unlink(2)
    framings = [(0, 0), (1, 0), (0, 1), (1, 1)]

    hopf_counts = [len(enumerate_labelings(with_framing(hopf, w, 2), b)) for w in framings]
    unlink_counts = [len(enumerate_labelings(with_framing(u2, w, 2), b)) for w in framings]
    # the published framing tables: all Hopf labelings sit at (1,1), all
    # unlink labelings at (0,0)
    assert hopf_counts == [0, 0, 0, 4]
    assert unlink_counts == [4, 0, 0, 0]

    assert phi_integral(hopf, b) == 4 == phi_integral(u2, b)
    assert phi_writhe(hopf, b) == MultiPoly.monomial({"q1": 1, "q2": 1}, 4)
    assert phi_writhe(u2, b) == MultiPoly.constant(4)
    ok("3: Hopf (0,0,0,4) vs unlink (4,0,0,0); phi_Z both 4; phi_W 4q1q2 vs 4")


def test_acceptance_4a_trefoil_image():
    b = tsr_birack(3, 1, 2, 2)
    d = parse_gauss(TREFOIL)
    assert phi_integral(d, b) == 9
    assert image_multiset(d, b) == {1: 1, 3: 8}  # rendered z + 8z^3
    assert phi_image(d, b) == (
        MultiPoly.monomial({"z": 1}) + MultiPoly.monomial({"z": 3}, 8)
    )
    ok("4a: trefoil over tsr(3,1,2,2): phi_Z 9, image multiset {1 x size1, 8 x size3}")


def test_acceptance_4b_unknot_image():
    b = tsr_birack(3, 1, 2, 2)
    assert image_multiset(parse_gauss(UNKNOT), b) == {1: 1, 3: 2}
    ok("4b: unknot over tsr(3,1,2,2): image multiset {1 x size1, 2 x size3}")


def test_acceptance_4c_figure_eight_pinned_count():
    b = tsr_birack(3, 1, 2, 2)
    d = parse_gauss(FIGURE_EIGHT)
    got = phi_integral(d, b)
    brute = len(brute_force_labelings(d, b))
    assert got == brute  # engine agrees with raw enumeration either way
    assert got == 1, (
        f"pinned reference count 1, but direct enumeration of the standard "
        f"figure-eight diagram gives {brute}; see the module docstring"
    )
    ok("4c: figure-eight over tsr(3,1,2,2): phi_Z 1")


def test_acceptance_5_two_orbit_polynomials():
    b = from_matrix(4, TWO_ORBIT_4_MATRIX)
    assert birack_polynomial(b).canonical_string() == (
        "2s1^4s2^2t1^3t2 + s1^2t1^2t2^2 + s2^2t1^2t2^2"
    )
    py = subbirack_polynomial(b, {0, 1})
    pz = subbirack_polynomial(b, {2, 3})
    assert py.canonical_string() == "s1^2t1^2t2^2 + s2^2t1^2t2^2"
    assert pz.canonical_string() == "2s1^4s2^2t1^3t2"
    assert phi_rho(parse_gauss(UNKNOT), b) == NestedPoly(
        {py.canonical_string(): 4, pz.canonical_string(): 2}
    )
    ok("5: 4-element two-orbit birack: birack/subbirack polynomials and "
       "phi_rho(unknot) = 4z^{P_Y} + 2z^{P_Z}")


def test_acceptance_6_ten_element_distinguishes():
    b = from_matrix(10, TEN_ELEMENT_MATRIX)
    k51, k61 = parse_gauss(CINQUEFOIL), parse_gauss(STEVEDORE)
    assert phi_integral(k51, b) == 30
    assert phi_integral(k61, b) == 30

    p_small = "s1^2s2^6t1^6t2^10"        # singleton inside {1..5}
    p_large = "s1^6s2^10t1t2^5"          # singleton inside {6..9}
    p_last = "s1^6s2^10t1^6t2^10"        # the singleton {10}
    rho51 = phi_rho(k51, b)
    rho61 = phi_rho(k61, b)
    assert rho51 == NestedPoly(
        {p_large: 4, p_small: 5, p_last: 1, "5s1^2s2^6t1^6t2^10": 20}
    )
    assert rho61 == NestedPoly(
        {p_large: 4, p_small: 5, p_last: 1,
         "s1^6s2^10t1^6t2^10 + 4s1^6s2^10t1t2^5": 20}
    )
    assert rho51 != rho61
    ok("6: 10-element birack: phi_Z = 30 for both knots, phi_rho values "
       "reproduced exactly and distinct")


class TestAcceptance7PropertySuites:
    def test_oracle_equivalence(self, test_biracks):
        codes = [UNKNOT, "O1+,U1+", HOPF, TREFOIL, FIGURE_EIGHT]
        checked = 0
        for code in codes:
            d = parse_gauss(code)
            for b in test_biracks.values():
                if b.n ** d.semiarc_count > 10 ** 6:
                    continue
                got = [l.assignment for l in enumerate_labelings(d, b)]
                assert got == brute_force_labelings(d, b)
                checked += 1
        assert checked >= 20
        ok(f"7/oracle: search equals brute force on {checked} (diagram, birack) pairs")

    def test_axiom_suite(self, test_biracks, ten_element, constant4):
        biracks = list(test_biracks.values()) + [ten_element, constant4]
        for b in biracks:
            assert verify_axioms(b.b1, b.b2).ok
            for x in range(b.n):
                a = b.alpha[x]
                assert b.sideways(b.pi[x], x) == (a, a)
            d1 = [b.s1[x][x] for x in range(b.n)]
            d2 = [b.s2[x][x] for x in range(b.n)]
            inv_d2 = [0] * b.n
            for i, v in enumerate(d2):
                inv_d2[v] = i
            assert tuple(d1[inv_d2[x]] for x in range(b.n)) == b.pi
        ok(f"7/axioms: every invariant holds on {len(biracks)} constructed biracks")

    def test_specialization_suite(self, test_biracks):
        codes = [UNKNOT, HOPF, TREFOIL]
        for code in codes:
            d = parse_gauss(code)
            for b in test_biracks.values():
                total = phi_integral(d, b)
                w = phi_writhe(d, b)
                for q in list(w.variables()):
                    w = w.substitute_one(q)
                assert w.total_sum() == total
                assert phi_image(d, b).total_sum() == total
                rho = phi_rho(d, b)
                assert rho.specialize_z_one() == total
                assert rho.specialize_exponents_one() == phi_image(d, b)
        ok("7/specializations: q->1, z->1 and s,t->1 collapses hold")

    def test_reidemeister_suite(self, test_biracks):
        pairs = [
            (";", "O1+,O2-;U1+,U2-"),                               # direct II
            (";", "O1+,O2-;U2-,U1+"),                               # reverse II
            ("O1+,O2+,U2+,U3+;U1+,O3+", "O2+,O3+,U1+,U2+;O1+,U3+"),  # III slide
        ]
        for code_a, code_b in pairs:
            da, db = parse_gauss(code_a), parse_gauss(code_b)
            for b in test_biracks.values():
                N, c = b.rank, len(da.components)
                for w in product(range(N), repeat=c):
                    ca = len(enumerate_labelings(with_framing(da, w, N), b))
                    cb = len(enumerate_labelings(with_framing(db, w, N), b))
                    assert ca == cb, (code_a, code_b, w)
        ok(f"7/moves: per-framing counts invariant across II/III move pairs "
           f"on {len(test_biracks)} biracks")

    def test_zp_power_law(self):
        for p, t, s, r in [(3, 1, 2, 2), (3, 2, 2, 1), (5, 4, 2, 1), (5, 2, 4, 1)]:
            b = tsr_birack(p, t, s, r)
            for code in KNOT_CODES.values():
                count = phi_integral(parse_gauss(code), b)
                assert count > 0
                while count % p == 0:
                    count //= p
                assert count == 1
        ok("7/power-law: every Z_3 and Z_5 linear-birack count is a prime power")


def test_acceptance_8_enumerate_two_element_biracks():
    found = enumerate_biracks(2)
    assert found  # completes
    for b in found:
        assert verify_axioms(b.b1, b.b2).ok
    assert any(
        not classify(b).is_biquandle and not classify(b).is_rack for b in found
    )
    two = from_matrix(2, TWO_ELEMENT_MATRIX)
    assert two in found
    ok(f"8: enumerate(2) found {len(found)} biracks, all verified, including "
       "one that is neither a biquandle nor a rack")
