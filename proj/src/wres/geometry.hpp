// Evaluation contexts: interior normal coordinates at x0, and the boundary
// collar metric with its connection data. A context owns the indeterminate
// registry, the covector pairing table, the jet table driving x-derivatives,
// and the substitution that evaluates expressions at x0.
#pragma once

#include "wres/clifford.hpp"
#include "wres/scalar.hpp"

#include <array>
#include <map>
#include <memory>
#include <stdexcept>

namespace wres {

class GeoContext {
  public:
    enum class Kind { InteriorNormal, BoundaryCollar };

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    const Registry& reg() const { return reg_; }
    Registry& reg_mut() { return reg_; }
    const PairingTable& cliff() const { return cliff_; }

    ScalarExpr sc(const std::string& name) const { return ScalarExpr::ind(reg_.id(name)); }
    IndId ind(const std::string& name) const { return reg_.id(name); }
    CovId cov(const std::string& name) const { return cliff_.id(name); }

    // symmetric pairing lookup; errors on unregistered covectors and on the
    // pairs that were declared out of scope
    ScalarExpr pairing(CovId a, CovId b) const { return cliff_.pairing(a, b); }

    // jet table: d/dx_mu of an indeterminate (0..n-1); throws if the
    // derivative is not part of the context
    const ScalarExpr& xderiv(IndId id, int mu) const;

    // substitution evaluating at x0 (kills first jets / connection values
    // that vanish there; keeps formal second jets)
    const std::map<IndId, ScalarExpr>& at_x0() const { return x0_subst_; }

    bool has_xderiv(IndId id, int mu) const;

    // ---- interior accessors (throw in the wrong kind) ----
    CovId dx(int mu) const;                 // coordinate covectors, mu = 0..n-1
    IndId g1(int mu, int a, int b) const;   // d_mu g^{ab}
    IndId g2(int mu, int nu, int a, int b) const;  // d^2_{mu nu} g^{ab}

    // ---- boundary accessors ----
    CovId xi_prime() const { return require(kind_ == Kind::BoundaryCollar), cov("xip"); }
    CovId dxn() const { return require(kind_ == Kind::BoundaryCollar), cov("dxn"); }
    CovId w() const { return require(kind_ == Kind::BoundaryCollar), cov("w"); }
    CovId Xb() const { return require(kind_ == Kind::BoundaryCollar), cov("Xb"); }
    CovId e_tangent(int j) const;           // j = 0..n-2

    // Levi-Civita connection matrix omega_{s,t}(e_i) at x0 (boundary collar);
    // indices 0-based, n-1 = normal direction
    ScalarExpr omega(int s, int t, int i) const;
    // Christoffel symbols Gamma^k_{st}(x0) on the collar
    ScalarExpr christoffel(int k, int s, int t) const;
    // d/dx_j |xi|^2 at x0
    ScalarExpr dxj_norm_sq(int j) const;

    // spin-connection zero-order symbol Q(x0) = -1/4 sum w_{s,t}(e_i)
    // c(e_i)c(e_s)c(e_t), assembled from omega(); boundary only
    CliffordExpr Q_at_x0() const;

    static GeoContext interior(int n);
    static GeoContext boundary(int n);

  private:
    GeoContext(Kind k, int n) : kind_(k), n_(n) {}
    static bool require(bool ok) {
        if (!ok) throw std::logic_error("context accessor used with the wrong context kind");
        return true;
    }
    void build_interior();
    void build_boundary();

    Kind kind_;
    int n_;
    Registry reg_;
    PairingTable cliff_{4};
    std::map<IndId, std::array<ScalarExpr, 4>> jets_;
    std::map<IndId, ScalarExpr> x0_subst_;
};

GeoContext interior_context(int n);
GeoContext boundary_context(int n);

}  // namespace wres
