// Clifford-valued rational functions of xi_n with poles restricted to +-i.
// Canonical storage: polynomial part plus principal parts at each pole;
// recombining reproduces the quotient exactly. pi+ keeps the upper-half
// principal parts; integrals are evaluated by residues at +i.
#pragma once

#include "wres/clifford.hpp"

#include <map>
#include <vector>

namespace wres {

class XiNRational {
  public:
    XiNRational() = default;

    // num / ((xin - i)^pow_plus (xin + i)^pow_minus), num a polynomial in xin
    static XiNRational from_quotient(std::map<int, CliffordExpr> num, int pow_plus,
                                     int pow_minus, const PairingTable& table);
    static XiNRational polynomial(std::map<int, CliffordExpr> poly);

    bool is_zero() const;
    const std::map<int, CliffordExpr>& poly() const { return poly_; }
    // principal coefficients: plus()[k] / (xin - i)^{k+1}
    const std::vector<CliffordExpr>& plus() const { return plus_; }
    const std::vector<CliffordExpr>& minus() const { return minus_; }

    friend XiNRational operator+(const XiNRational& a, const XiNRational& b);
    friend XiNRational operator-(const XiNRational& a, const XiNRational& b);
    XiNRational& operator+=(const XiNRational& o);
    XiNRational scaled(const ScalarExpr& s) const;
    XiNRational scaled(const GRat& c) const;

    friend bool operator==(const XiNRational& a, const XiNRational& b);

    // exact product (left factor's Clifford letters stay on the left)
    static XiNRational mul(const XiNRational& a, const XiNRational& b,
                           const PairingTable& table);

    XiNRational derivative() const;  // d/d xin

    // quotient reconstruction (cross-multiplication identity)
    struct Quotient {
        std::map<int, CliffordExpr> num;
        int pow_plus = 0;
        int pow_minus = 0;
    };
    Quotient to_quotient(const PairingTable& table) const;

    // Clifford-coefficient maps
    XiNRational map_coeffs(const std::function<CliffordExpr(const CliffordExpr&)>& f) const;

    // degree at infinity (max over parts); poly part makes it >= 0
    int degree_at_infinity() const;
    bool integrable() const;  // no poly part and decay at least xin^-2

    std::string render(const Registry& reg, const PairingTable& table) const;

  private:
    void prune();
    std::map<int, CliffordExpr> poly_;
    std::vector<CliffordExpr> plus_;
    std::vector<CliffordExpr> minus_;
};

// projection onto the part extending to the upper half-plane (principal
// parts at +i); idempotent; drops the polynomial part
XiNRational pi_plus(const XiNRational& r);

// (1/2pi) Gamma+ contour integral = i * residue at +i; errors on nonzero
// polynomial part
CliffordExpr pi_prime(const XiNRational& r);

// Gamma+ contour integral = 2 pi i * residue at +i; `pi_sym` supplies the
// formal constant pi
CliffordExpr contour_gamma_plus(const XiNRational& r, const ScalarExpr& pi_sym);

// real-line integral of an integrable function, evaluated by closing the
// contour in the upper half-plane
CliffordExpr real_line_integral(const XiNRational& r, const ScalarExpr& pi_sym);

}  // namespace wres
