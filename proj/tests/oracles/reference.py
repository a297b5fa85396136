"""Independent reference values frozen into the C++ tests.

Uses mpmath for closed-form constants and scipy's DOP853 at tight
tolerances for trajectory-level references. Run manually; the library
never imports this.
"""
import math

import mpmath as mp
import numpy as np
from scipy.integrate import solve_ivp

mp.mp.dps = 50


def nondim(rho, mu, gamma, theta, g, R, L, h0):
    rho, mu, gamma, theta, g, R, L, h0 = map(mp.mpf, (rho, mu, gamma, theta, g, R, L, h0))
    he = 2 * gamma * mp.cos(theta) / (rho * g * R)
    tau = 8 * mu * he / (rho * g * R**2)
    omega = he / (g * tau**2)
    oh = mu / mp.sqrt(R * rho * gamma)
    bo = rho * g * R**2 / gamma
    beta = 1 / (1 + 4 * L / R)
    return dict(h_e=he, tau=tau, omega=omega, Oh=oh, Bo=bo, beta=beta, alpha=h0 / he)


def rhs(beta, omega, eps=0.0):
    g = beta / math.sqrt(omega)

    def f(s, y):
        u, v = y
        return [v, 1.0 - g * v - math.sqrt(2.0 * max(u, 0.0) + eps)]

    return f


def run(beta, omega, alpha, S, n=20001):
    s = np.linspace(0.0, S, n)
    sol = solve_ivp(rhs(beta, omega), (0.0, S), [alpha**2 / 2, 0.0], method="DOP853",
                    rtol=1e-13, atol=1e-14, t_eval=s, dense_output=True)
    return s, sol.y[0], sol.y[1]


def crossings(u):
    d = u - 0.5
    side, n = 0, 0
    for x in d:
        if abs(x) <= 1e-9:
            continue
        sd = 1 if x > 0 else -1
        if side != 0 and sd != side:
            n += 1
        side = sd
    return n


if __name__ == "__main__":
    print("nondim water R=1e-4:")
    for k, v in nondim(1000, 0.001, 0.0728, 0, 9.81, 1e-4, 0, 0).items():
        print(f"  {k} = {mp.nstr(v, 20)}")
    print("nondim water R=1e-4 L=2.5e-5 theta=30deg h0=0.01:")
    for k, v in nondim(1000, 0.001, 0.0728, mp.pi / 6, 9.81, 1e-4, 2.5e-5, 0.01).items():
        print(f"  {k} = {mp.nstr(v, 20)}")
    print("E(9/8,0) =", mp.nstr(-mp.mpf(9) / 8 + 2 * mp.sqrt(2) / 3 * (mp.mpf(9) / 8) ** 1.5, 20))
    s, u, v = run(1, 1, 0, 30)
    print("alpha=0 beta=1 omega=1 S=30: u(S) =", repr(u[-1]), "v(S) =", repr(v[-1]))
    for beta, omega in [(1, 0.1), (1, 1.0), (0.5, 0.5), (0.5, 0.05)]:
        s, u, v = run(beta, omega, 0, 50 if beta == 1 else 200, 200001)
        print(f"crossings beta={beta} omega={omega}: {crossings(u)}  final u={u[-1]!r}")
    base = run(1, 1, 0, 20)[1]
    for a in [0.2, 0.1, 0.05, 0.025]:
        print(f"dependence alpha={a}: {np.max(np.abs(run(1, 1, a, 20)[1] - base)):.6e}")
    for beta in (0.5, 1):
        for omega in (0.1, 1):
            for a in (0, 0.1, 1, 1.4, 1.5):
                S = 60 * math.sqrt(omega) / beta
                s, u, v = run(beta, omega, a, S)
                print(f"conv beta={beta} omega={omega} alpha={a} S={S:.3f}: dist={math.hypot(u[-1]-0.5, v[-1]):.3e}")
