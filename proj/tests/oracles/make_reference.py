"""Regenerates tests/support/reference_values.hpp with mpmath at 30 digits.

Independent of the C++ library: uses mpmath's own reciprocal gamma and
tanh-sinh quadrature on unit sub-intervals.
"""
import mpmath as mp

mp.mp.dps = 30
BETA = mp.sqrt(2)


def lattice_log(k):
    return mp.mpc(0, 2 * mp.pi * k / BETA)


def h(x, log_lam, lower=-1, upper=70, classical=False):
    x = mp.mpf(x)

    def f(nu):
        if not classical and nu <= -1:
            return mp.mpf(0)
        return mp.exp(nu * (mp.log(x) + log_lam)) * mp.rgamma(nu + 1)

    pts = [mp.mpf(lower)] + [mp.mpf(p) for p in range(int(mp.floor(lower)) + 1, upper + 1)]
    if len(pts) == 1:
        pts.append(mp.mpf(upper))
    return mp.quad(f, pts)


def cplx(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-1, max_fixed=-1), mp.nstr(z.imag, 20, min_fixed=-1, max_fixed=-1))


def main():
    lams = [("0.5", mp.log(mp.mpf("0.5"))), ("1", mp.mpf(0)), ("2", mp.log(mp.mpf(2))),
            ("lambda_1", lattice_log(1)), ("lambda_-2", lattice_log(-2))]
    xs = ["0.5", "1", "2", "3", "5"]
    out = []
    out.append("// Generated by tests/oracles/make_reference.py (mpmath, 30 digits). Do not edit.")
    out.append("#pragma once\n\n#include <array>\n#include <complex>\n\nnamespace dorder::reference {\n")
    out.append("struct HValue {\n  double x;\n  int lambda_id;  // 0:0.5 1:1 2:2 3:lambda_1 4:lambda_-2\n  std::complex<double> value;\n};\n")
    out.append("inline constexpr std::array<HValue, 25> kHGrid{{")
    for xi in xs:
        for li, (_, ll) in enumerate(lams):
            out.append("    {%s, %d, %s}," % (xi, li, cplx(h(xi, ll))))
    out.append("}};\n")
    # correction term at x = 2, lambda_1, alpha = 0.5 and x = 1, lambda = 1, alpha = 0.3
    for name, x, ll, a in [("kCorrectionX2L1A05", 2, lattice_log(1), mp.mpf("0.5")),
                           ("kCorrectionX1L1A03", 1, mp.mpf(0), mp.mpf("0.3"))]:
        integral = h(x, ll, lower=-1 - a, upper=-1, classical=True)
        val = mp.exp(a * ll) * integral
        out.append("inline const std::complex<double> %s%s;" % (name, cplx(val)))
    out.append("inline constexpr double kRecipGammaOneHalfPlusOne = %s;  // 1/Gamma(1.5)" % mp.nstr(mp.rgamma(mp.mpf("1.5")), 20))
    out.append("inline constexpr double kRecipGammaMinusHalf = %s;  // 1/Gamma(-0.5)" % mp.nstr(mp.rgamma(mp.mpf("-0.5")), 20))
    out.append("inline constexpr double kRecipGammaHalf = %s;  // 1/Gamma(0.5)" % mp.nstr(mp.rgamma(mp.mpf("0.5")), 20))
    out.append("\n}  // namespace dorder::reference")
    print("\n".join(out))


if __name__ == "__main__":
    main()
