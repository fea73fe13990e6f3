"""High-precision reference values frozen into the C++ tests.

Everything here is computed with mpmath at 60 significant digits and is
independent of the library code paths (no cancellation guards, no series
engine). Run it with `python3 tests/oracles/pins.py` to regenerate.
"""
import mpmath as mp

mp.mp.dps = 60
pi = mp.pi
a = pi**2 / 6 - 1


def lam(p):
    p = mp.mpf(p)
    return (p - 1) * (pi / (p * mp.sin(pi / p))) ** p


def dlam(p):
    return mp.diff(lam, mp.mpf(p))


def show(name, v, digits=25):
    print(f"{name} = {mp.nstr(v, digits)}")


def asymptotic_coefficients(n):
    # Cauchy-integral Taylor coefficients of lambda(pi/x) - pi/x about x = 0;
    # the function is analytic in |x| < pi, so a radius-1 contour is safe.
    def f(x):
        return (pi / x - 1) * (x / mp.sin(x)) ** (pi / x) - pi / x

    return mp.taylor(f, 0, n, method="quad", radius=1)


if __name__ == "__main__":
    show("lambda(2)", lam(2))
    show("lambda(3)", lam(3))
    show("lambda(1.5)", lam(mp.mpf("1.5")))
    show("lambda(10)", lam(10))
    show("lambda(100)", lam(100))
    for p in ["1.2", "5", "50"]:
        show(f"lambda({p})", lam(mp.mpf(p)))
    show("lambda'(2)", dlam(2))
    show("(pi^2/4) log(pi/2)", pi**2 / 4 * mp.log(pi / 2))
    show("lambda'(20)", dlam(20))
    q = mp.mpf("1.5")
    show("lowP lower(1.5)", (q / (q - 1)) ** (q - 1))
    show("lowP upper(1.5)", (q - 1) ** (1 - q) * (1 + pi**2 / 6 * (q - 1)) ** (q - 1))
    x = mp.mpf(1) / 2
    show("sinc lower(1/2)", ((1 - x) / (1 + a * x)) ** x)
    show("sinc(1/2)", mp.sin(pi * x) / (pi * x))
    show("sinc upper(1/2)", (1 - x) ** x)
    show("pi_p(4)", 2 * pi / (4 * mp.sin(pi / 4)))
    for k in range(2, 7):
        p = 1 + mp.mpf(10) ** -k
        show(f"lambda(1+1e-{k})", lam(p))
        show(f"lambda'(1+1e-{k})", dlam(p))
    for k in range(1, 6):
        p = mp.mpf(10) ** k
        show(f"lambda(1e{k})-1e{k}", lam(p) - p)
        show(f"lambda'(1e{k})", dlam(p))
    for k in range(1, 7):
        d = mp.mpf(10) ** -k
        xx = pi - d
        show(f"grouped(pi-1e-{k})", 1 / (pi - xx) + mp.cos(xx) / mp.sin(xx))
    # lambda(p) at the sandwich inset edge
    p = 1 + mp.mpf(10) ** -6
    show("lowP lower(1+1e-6)", (p / (p - 1)) ** (p - 1))
    show("lowP upper(1+1e-6)", (p - 1) ** (1 - p) * (1 + pi**2 / 6 * (p - 1)) ** (p - 1))
    show("lambda(1+1e-6)", lam(p))

    # Critical exponent: root of lambda'/lambda = log L.
    for L in [mp.mpf("1.5"), mp.mpf(2), mp.e, mp.mpf(5)]:
        g = lambda p: mp.diff(lambda s: mp.log(lam(s)), p) - mp.log(L)
        root = mp.findroot(g, (mp.mpf("1.001"), mp.mpf(100)), solver="anderson")
        show(f"pstar(L={mp.nstr(L, 8)})", root)

    coeffs = asymptotic_coefficients(10)
    for i, c in enumerate(coeffs):
        show(f"c{i}", c)

    print("-- printed constants")
    show("f(2)", 2 * (pi - 2) / pi - mp.log(2))
    show("h(2/5)", mp.log(mp.mpf(3) / 5) + mp.mpf(64) / 125)
    show("phi(pi/2)", mp.mpf(1) / 4 - 11 * pi**2 / 360 + 229 * pi**4 / 362880 - 41 * pi**6 / 19353600)
    show("g'(1)", 12 / (pi**2 + 6) - mp.log(1 + pi**2 / 6))
    show("864-216pi^2+24pi^4-pi^6", 864 - 216 * pi**2 + 24 * pi**4 - pi**6)
    show("-648+216pi^2-24pi^4+pi^6", -648 + 216 * pi**2 - 24 * pi**4 + pi**6)
    show("108pi^2-5pi^4-540", 108 * pi**2 - 5 * pi**4 - 540)
    show("k(pi/2)", (pi - 2) / pi)
