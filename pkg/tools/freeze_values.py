"""Development scratch: compute every DERIVED value with the independent
oracle, cross-check against the library, and print tables to freeze."""
import sys, random
from fractions import Fraction
from itertools import product
sys.path.insert(0, "/root/pkg/tests")
import bruteforce as bf

from nonassoc.algebra import Algebra, predicate_report, is_gi_associative, satisfies_v_relation, is_power3_associative, cube_vanishes, is_lie, commutator_algebra, is_lie_admissible
from nonassoc.coalgebra import Coalgebra, predicate_report as co_report, is_gi_coalgebra, is_lie_admissible_coalgebra, is_lie_coalgebra, delta_L, is_gi_shriek_coalgebra, twist_coassociator_identity_defect
from nonassoc.duality import dual_coalgebra, dual_algebra
from nonassoc.sigma3 import *
from nonassoc.convolution import convolution_algebra, HomElement, convolve
from nonassoc.bialgebra import BialgebraCandidate, check_prelie_bialgebra_compat, check_lie_admissible_bialgebra
from nonassoc.randomgen import random_algebra, random_coalgebra

F = Fraction
# --- catalog structures -----------------------------------------------
DN = Algebra.from_entries(2, {(1,1,1):1,(1,2,2):1,(2,1,2):1})          # dual numbers
L  = Algebra.from_entries(2, {(1,2,2):1,(2,1,2):-1})                   # 2-dim Lie bracket
W  = Algebra.from_entries(2, {(1,2,1):1,(2,2,2):1})                    # affine vector fields

def alg_oracle_table(C):
    out = {}
    for i in range(1,7):
        out[f"G{i}"] = bf.is_gi_associative(C, i)
    out["lie-admissible"] = bf.is_gi_associative(C, 6)
    out["power3"] = bf.is_power3(C)
    for i in range(2,7):
        out[f"G{i}!"] = bf.is_shriek_algebra(C, i)
    out["commutator-lie"] = bf.is_lie(bf.commutator(C))
    return out

def co_oracle_table(D):
    out = {}
    for i in range(1,7):
        out[f"G{i}"] = bf.is_gi_coalgebra(D, i)
    out["lie-admissible"] = bf.is_lie_admissible_coalgebra(D)
    for i in range(1,7):
        out[f"G{i}!"] = bf.is_shriek_coalgebra(D, i)
    out["lie"] = bf.is_lie_coalgebra(D)
    return out

def lib_alg_table(a):
    return {name: ok for name, ok, _ in predicate_report(a)}

def lib_co_table(c):
    return {name: ok for name, ok, _ in co_report(c)}

def raw(a):  # library Algebra -> plain lists for the oracle
    return [[[x for x in row] for row in plane] for plane in a.c]

def rawco(c):
    return [[[x for x in row] for row in plane] for plane in c.d]

names = {"D": DN, "L": L, "W": W}
for nm, a in list(names.items()):
    ora = alg_oracle_table(raw(a))
    lib = lib_alg_table(a)
    assert ora == lib, (nm, ora, lib)
    print(nm, "algebra:", {k: v for k, v in ora.items()})
    cst = dual_coalgebra(a)
    orc = co_oracle_table(rawco(cst))
    libc = lib_co_table(cst)
    assert orc == libc, (nm, orc, libc)
    print(nm+"*", "coalgebra:", {k: v for k, v in orc.items()})

za = Algebra.zero(2); zc = Coalgebra.zero(2)
print("0A:", lib_alg_table(za))
print("0C:", lib_co_table(zc))
assert alg_oracle_table(raw(za)) == lib_alg_table(za)
assert co_oracle_table(rawco(zc)) == lib_co_table(zc)

# --- witnesses for L --------------------------------------------------
ok, wit = is_gi_associative(L, 1)
print("L G1 witness:", ok, wit)

# --- seeded non-Lie-admissible algebra --------------------------------
for seed in range(1, 50):
    rng = random.Random(seed)
    a = random_algebra(rng, 3, -2, 2)
    ok, wit = is_lie_admissible(a)
    if not ok:
        okb = bf.is_gi_associative(raw(a), 6)
        assert not okb
        print("NLA seed:", seed)
        print("NLA entries:", {(i+1,j+1,k+1): str(a.c[i][j][k]) for i in range(3) for j in range(3) for k in range(3) if a.c[i][j][k] != 0})
        print("NLA witness:", wit)
        print("NLA table:", lib_alg_table(a))
        assert alg_oracle_table(raw(a)) == lib_alg_table(a)
        nstar = dual_coalgebra(a)
        print("NLA* table:", lib_co_table(nstar))
        assert co_oracle_table(rawco(nstar)) == lib_co_table(nstar)
        break

# --- bridge identity gate: 20 random coalgebras -----------------------
rng = random.Random(777)
for trial in range(20):
    n = rng.choice([2,3,4])
    c = random_coalgebra(rng, n)
    lhs, rhs = bf.bridge_sides(rawco(c))
    assert lhs == rhs, f"bridge identity FAILED on trial {trial}"
print("bridge identity: confirmed on 20 random coalgebras (oracle expansion)")

# --- twist identity oracle check --------------------------------------
rng = random.Random(888)
for trial in range(20):
    n = rng.choice([2,3,4])
    c = random_coalgebra(rng, n)
    assert all(bf.tensor_is_zero(t) for t in bf.twist_defects(rawco(c)))
print("twist identity: confirmed on 20 random coalgebras (oracle expansion)")

# --- convolution checks ------------------------------------------------
Dstar = dual_coalgebra(DN)
ident = HomElement.identity(2)
fg = convolve(ident, ident, Dstar, DN)
print("convolve(id,id,D*,D) matrix:", fg.matrix)

for nm, a, want_i in [("D", DN, 1), ("W", W, 2), ("L", L, 6)]:
    conv = convolution_algebra(Dstar, a)
    ok, wit = is_gi_associative(conv, want_i)
    okb = bf.is_gi_associative(bf.convolution_constants(rawco(Dstar), raw(a)), want_i)
    print(f"conv(D*, {nm}) G{want_i}:", ok, "oracle:", okb)
    assert raw(conv) == bf.convolution_constants(rawco(Dstar), raw(a))

# --- prelie compat for (W, W*) ----------------------------------------
Wstar = dual_coalgebra(W)
b = BialgebraCandidate(W, Wstar)
ok, wit = check_prelie_bialgebra_compat(b)
okb = bf.prelie_compat_holds(raw(W), rawco(Wstar))
print("prelie compat (W, W*):", ok, "oracle:", okb, "witness:", wit)

# (L, L*) lie-admissible bialgebra
Lstar = dual_coalgebra(L)
ok, wit = check_lie_admissible_bialgebra(BialgebraCandidate(L, Lstar))
okb = bf.lie_admissible_bialgebra_holds(raw(L), rawco(Lstar))
print("lie-admissible bialgebra (L, L*):", ok, "oracle:", okb)
