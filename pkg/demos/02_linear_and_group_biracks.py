"""The two parametric birack families: linear and group-based.

Linear biracks live on (Z_n)^m with B(x, y) = (ty + sx, rx); they exist
whenever t, r are units and s^2 = (1 - tr)s mod n, and their kink map is
multiplication by tr + s.  Setting r = 1 gives (t, s)-racks, s = 1 - tr
gives linear biquandles, both at once the classical linear quandles
(dihedral at t = -1).

Group biracks live on a finite group G with B(x, y) = (tau(y)sigma(x),
rho(x)) for automorphisms tau, rho and an endomorphism sigma subject to
commutation and one compatibility identity; the kink map is
x -> tau(rho(x)) sigma(x).
"""

from biracks import (
    CayleyGroup,
    classify,
    constant_action,
    cycle_string,
    tau_sigma_rho_birack,
    tsr_birack,
)

# --- linear biracks --------------------------------------------------------

b = tsr_birack(4, t=3, s=2, r=3)
print("tsr(4,3,2,3):  rank", b.rank, " kink map", cycle_string(b.pi))
print("  (tr + s = 11 = 3 mod 4, and 3^2 = 1, so the rank is 2)")

b16 = tsr_birack(4, 3, 2, 3, m=2)
print("same parameters on (Z_4)^2: size", b16.n, "rank", b16.rank)

bq = tsr_birack(3, t=1, s=2, r=2)
print("tsr(3,1,2,2):  rank", bq.rank, "-> a biquandle:", classify(bq).is_biquandle)

dihedral = tsr_birack(5, t=4, s=2, r=1)
print("tsr(5,4,2,1):  the dihedral quandle on Z_5, flags", classify(dihedral).flags())
print()

# --- group biracks ---------------------------------------------------------

# The order-8 group with a 4-fold rotation a and a reflection c, ac = c a^-1.
# Elements are a^i c^j indexed as 2i + j.
def idx(i, j):
    return 2 * (i % 4) + (j % 2)

cayley = [[0] * 8 for _ in range(8)]
for e1 in range(8):
    i, j = divmod(e1, 2)
    for e2 in range(8):
        k, l = divmod(e2, 2)
        cayley[e1][e2] = idx(i + (-1) ** j * k, j + l)

group = CayleyGroup(cayley)
tau = [idx(-i, j) for i, j in (divmod(e, 2) for e in range(8))]   # a -> a^-1, c -> c
sigma = [idx(2 * i, 0) for i, _ in (divmod(e, 2) for e in range(8))]  # x -> a^(2i)
bg = tau_sigma_rho_birack(group, tau, sigma, tau)
print("order-8 group birack: rank", bg.rank)
print("kink map sends a^i c^j to a^(3i) c^j:",
      bg.pi == tuple(idx(3 * i, j) for i, j in (divmod(e, 2) for e in range(8))))

# With sigma trivial the construction degenerates to a constant action birack.
trivial_sigma = [group.identity] * 8
assert tau_sigma_rho_birack(group, tau, trivial_sigma, tau) == constant_action(tau, tau)
print("sigma = trivial endomorphism reduces to constant_action(tau, tau): True")

# On an abelian group, multiplication maps recover the linear family.
z4 = [[(a + c) % 4 for c in range(4)] for a in range(4)]
linear_again = tau_sigma_rho_birack(
    z4, [3 * x % 4 for x in range(4)], [2 * x % 4 for x in range(4)],
    [3 * x % 4 for x in range(4)],
)
assert linear_again == b
print("Z_4 with tau = 3x, sigma = 2x, rho = 3x equals tsr(4,3,2,3): True")
