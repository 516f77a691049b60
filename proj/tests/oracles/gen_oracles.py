"""Independent reference values for the C++ tests.

Everything here is computed with sympy/mpmath at 40 digits, without the
Taylor-series machinery or the quadrature used by the library. Geodesic
curvature of the warped curve is evaluated in its raw parameter t through
kg = det(f, f_t, f_tt) / sigma^3 with sigma = sqrt(-<f_t, f_t>), and the arc
length v(t) by mpmath quadrature.

Run:  python3 tests/oracles/gen_oracles.py > tests/oracle_values.hpp
"""

import mpmath as mp
import numpy as np
import sympy as sp

mp.mp.dps = 40

t = sp.symbols("t", real=True)


def warped_expr(lam, mu):
    psi = t + mu * t**2
    return sp.Matrix([sp.cosh(lam * t) * sp.cos(psi), sp.cosh(lam * t) * sp.sin(psi), sp.sinh(lam * t)])


def inner(a, b):
    return a[0] * b[0] + a[1] * b[1] - a[2] * b[2]


def warped_funcs(lam, mu):
    f = warped_expr(sp.Rational(lam), sp.Rational(mu))
    ft = f.diff(t)
    ftt = ft.diff(t)
    sigma = sp.sqrt(-inner(ft, ft))
    kg = sp.Matrix.hstack(f, ft, ftt).T.det() / sigma**3
    kg_t = sp.diff(kg, t)
    # d/dv = (1/sigma) d/dt
    kg1 = kg_t / sigma
    kg2 = sp.diff(kg1, t) / sigma
    lam_ = lambda e: sp.lambdify(t, e, "mpmath")
    return lam_(sigma), lam_(kg), lam_(kg1), lam_(kg2)


def arc(sigma, t1):
    return mp.quad(sigma, [0, t1])


def t_of_v(sigma, v):
    return mp.findroot(lambda x: arc(sigma, x) - v, mp.mpf(v) / 2)


def emit(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(value, 20, strip_zeros=False)};")


print("#pragma once")
print()
print("// Generated by tests/oracles/gen_oracles.py; do not edit by hand.")
print()
print("namespace oracle {")
print()

# Bertrand curvature and torsion for theta = pi/4, u = e on the geodesic.
theta = mp.pi / 4
u = mp.e
xi = mp.cot(theta) * mp.log(u)
a = u * mp.sin(theta) * mp.cos(xi)
emit("kExampleA", a)
emit("kExampleKappa", mp.cos(xi) ** 2 / a)
emit("kExampleTau", -mp.cos(xi) ** 2 * mp.tan(xi) / a)
c = mp.sqrt(2) / 2 * mp.e
emit("kExampleGammaX1", c * mp.cos(1) * mp.sinh(1))
emit("kExampleGammaX2", -c * mp.sin(1))
emit("kExampleGammaX3", c * mp.cos(1) * (mp.cosh(1) - 1))
print()

# Warped curve, lambda = 2, mu = 0.
sigma, kg, kg1, kg2 = warped_funcs(2, 0)
emit("kWarpedHalfLength", arc(sigma, mp.mpf("0.6")))
for tag, v in (("M05", "-0.5"), ("M005", "-0.05"), ("P03", "0.3")):
    tv = t_of_v(sigma, mp.mpf(v))
    emit(f"kWarpedT_{tag}", tv)
    emit(f"kWarpedKg_{tag}", kg(tv))
    emit(f"kWarpedKg1_{tag}", kg1(tv))
    emit(f"kWarpedKg2_{tag}", kg2(tv))
emit("kWarpedKg1_0", kg1(mp.mpf(0)))
print()

# Warped curve, lambda = 2, mu = 1: interior critical point of kg.
sigma, kg, kg1, kg2 = warped_funcs(2, 1)
tc = mp.findroot(kg1, mp.mpf("-0.24"))
emit("kBentCriticalT", tc)
emit("kBentCriticalV", arc(sigma, tc))
emit("kBentCriticalKg", kg(tc))
emit("kBentCriticalKg2", kg2(tc))
print()

# Least-squares Bertrand residual of (t, t^2, t^3/10) on 64 points of [0.2, 1].
grid = np.linspace(0.2, 1.0, 64)
ks, ts = [], []
for x in grid:
    x = mp.mpf(x)
    d1 = mp.matrix([1, 2 * x, 3 * x**2 / 10])
    d2 = mp.matrix([0, 2, 6 * x / 10])
    d3 = mp.matrix([0, 0, mp.mpf(6) / 10])
    q1 = d1[0] ** 2 + d1[1] ** 2 - d1[2] ** 2
    cr = mp.matrix([d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2], d1[1] * d2[0] - d1[0] * d2[1]])
    cc = abs(cr[0] ** 2 + cr[1] ** 2 - cr[2] ** 2)
    det = mp.det(mp.matrix([[d1[0], d1[1], d1[2]], [d2[0], d2[1], d2[2]], [d3[0], d3[1], d3[2]]]))
    ks.append(mp.sqrt(cc) / abs(q1) ** mp.mpf(1.5))
    ts.append(det / cc)
M = mp.matrix([[k, tt] for k, tt in zip(ks, ts)])
N = M.T * M
rhs = M.T * mp.matrix([1] * len(ks))
sol = mp.lu_solve(N, rhs)
res = max(abs(sol[0] * k + sol[1] * tt - 1) for k, tt in zip(ks, ts))
emit("kCubicBertrandResidual", res)
print()
print("}  // namespace oracle")
