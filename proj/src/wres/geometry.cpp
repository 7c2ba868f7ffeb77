#include "wres/geometry.hpp"

#include <string>

namespace wres {

namespace {

std::string idx(int a) { return std::to_string(a + 1); }

void add_constants(Registry& reg) {
    reg.add("pi", Parity::XiFree, IndClass::Constant);
    reg.add("Omega3", Parity::XiFree, IndClass::Constant);
    for (int k = 1; k <= 7; ++k)
        reg.add("VolS" + std::to_string(k), Parity::XiFree, IndClass::Constant);
}

}  // namespace

const ScalarExpr& GeoContext::xderiv(IndId id, int mu) const {
    auto it = jets_.find(id);
    if (it == jets_.end())
        throw std::logic_error("no x-derivative registered for " + reg_.info(id).name);
    return it->second.at(mu);
}

bool GeoContext::has_xderiv(IndId id, int mu) const {
    auto it = jets_.find(id);
    return it != jets_.end() && mu >= 0 && mu < 4;
}

CovId GeoContext::dx(int mu) const {
    require(kind_ == Kind::InteriorNormal);
    return cliff_.id("dx" + idx(mu));
}

IndId GeoContext::g1(int mu, int a, int b) const {
    require(kind_ == Kind::InteriorNormal);
    if (a > b) std::swap(a, b);
    return reg_.id("dg_" + idx(mu) + "_" + idx(a) + idx(b));
}

IndId GeoContext::g2(int mu, int nu, int a, int b) const {
    require(kind_ == Kind::InteriorNormal);
    if (mu > nu) std::swap(mu, nu);
    if (a > b) std::swap(a, b);
    return reg_.id("ddg_" + idx(mu) + idx(nu) + "_" + idx(a) + idx(b));
}

CovId GeoContext::e_tangent(int j) const {
    require(kind_ == Kind::BoundaryCollar);
    return cliff_.id("e" + idx(j));
}

ScalarExpr GeoContext::omega(int s, int t, int i) const {
    require(kind_ == Kind::BoundaryCollar);
    int nn = n_ - 1;
    ScalarExpr half_hp = sc("hp0").scaled(GRat(Rational(1, 2)));
    if (s == nn && t == i && i < nn) return half_hp;
    if (s == i && t == nn && i < nn) return -half_hp;
    return ScalarExpr();
}

ScalarExpr GeoContext::christoffel(int k, int s, int t) const {
    require(kind_ == Kind::BoundaryCollar);
    int nn = n_ - 1;
    ScalarExpr half_hp = sc("hp0").scaled(GRat(Rational(1, 2)));
    if (s == t && s < nn && k == nn) return half_hp;
    if (s == nn && t < nn && k == t) return -half_hp;
    if (t == nn && s < nn && k == s) return -half_hp;
    return ScalarExpr();
}

ScalarExpr GeoContext::dxj_norm_sq(int j) const {
    require(kind_ == Kind::BoundaryCollar);
    if (j < n_ - 1) return ScalarExpr();
    return sc("hp0") * sc("nxp2");
}

CliffordExpr GeoContext::Q_at_x0() const {
    require(kind_ == Kind::BoundaryCollar);
    // -1/4 sum_{i,s,t} omega_{s,t}(e_i) c(e_i)c(e_s)c(e_t), frame e_n = dxn
    CliffordExpr q;
    auto frame = [&](int a) { return a == n_ - 1 ? dxn() : e_tangent(a); };
    for (int i = 0; i < n_; ++i)
        for (int s = 0; s < n_; ++s)
            for (int t = 0; t < n_; ++t) {
                ScalarExpr w = omega(s, t, i);
                if (w.is_zero()) continue;
                q += CliffordExpr::word({frame(i), frame(s), frame(t)}, cliff_,
                                        w.scaled(GRat(Rational(-1, 4))));
            }
    return q;
}

void GeoContext::build_interior() {
    add_constants(reg_);
    reg_.add("s", Parity::XiFree, IndClass::GravityJet);
    reg_.add("f", Parity::XiFree, IndClass::Perturbation);
    reg_.add("normXdf", Parity::XiFree, IndClass::Perturbation);  // |X||df|, opaque
    for (int j = 0; j < 4; ++j) reg_.add("X_" + idx(j), Parity::XiFree, IndClass::Perturbation);
    for (int m = 0; m < 4; ++m) reg_.add("df_" + idx(m), Parity::XiFree, IndClass::Perturbation);
    for (int m = 0; m < 4; ++m)
        for (int j = 0; j < 4; ++j)
            reg_.add("dX_" + idx(m) + "_" + idx(j), Parity::XiFree, IndClass::Perturbation);
    for (int m = 0; m < 4; ++m) reg_.add("Gam_" + idx(m), Parity::XiFree, IndClass::Geometry);
    for (int m = 0; m < 4; ++m) reg_.add("Sig_" + idx(m), Parity::XiFree, IndClass::Geometry);
    for (int m = 0; m < 4; ++m)
        for (int j = 0; j < 4; ++j) {
            reg_.add("dGam_" + idx(m) + "_" + idx(j), Parity::XiFree, IndClass::GravityJet);
            reg_.add("dSig_" + idx(m) + "_" + idx(j), Parity::XiFree, IndClass::GravityJet);
        }
    for (int m = 0; m < 4; ++m)
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b)
                reg_.add("dg_" + idx(m) + "_" + idx(a) + idx(b), Parity::XiFree,
                         IndClass::Geometry);
    for (int m = 0; m < 4; ++m)
        for (int nu = m; nu < 4; ++nu)
            for (int a = 0; a < 4; ++a)
                for (int b = a; b < 4; ++b)
                    reg_.add("ddg_" + idx(m) + idx(nu) + "_" + idx(a) + idx(b), Parity::XiFree,
                             IndClass::GravityJet);

    // x-derivative table
    auto set_jet = [&](const std::string& name, std::array<ScalarExpr, 4> d) {
        jets_[reg_.id(name)] = std::move(d);
    };
    {
        std::array<ScalarExpr, 4> d;
        for (int m = 0; m < 4; ++m) d[m] = sc("df_" + idx(m));
        set_jet("f", d);
    }
    for (int j = 0; j < 4; ++j) {
        std::array<ScalarExpr, 4> d;
        for (int m = 0; m < 4; ++m) d[m] = sc("dX_" + idx(m) + "_" + idx(j));
        set_jet("X_" + idx(j), d);
    }
    for (int j = 0; j < 4; ++j) {
        std::array<ScalarExpr, 4> dg, ds;
        for (int m = 0; m < 4; ++m) {
            dg[m] = sc("dGam_" + idx(m) + "_" + idx(j));
            ds[m] = sc("dSig_" + idx(m) + "_" + idx(j));
        }
        set_jet("Gam_" + idx(j), dg);
        set_jet("Sig_" + idx(j), ds);
    }
    for (int m = 0; m < 4; ++m)
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) {
                std::array<ScalarExpr, 4> d;
                for (int nu = 0; nu < 4; ++nu)
                    d[nu] = ScalarExpr::ind(g2(std::min(m, nu), std::max(m, nu), a, b));
                jets_[g1(m, a, b)] = std::move(d);
            }
    // constants are x-independent
    for (const std::string& c : {"pi", "Omega3"}) {
        std::array<ScalarExpr, 4> d;
        set_jet(c, d);
    }

    // evaluation at x0: first metric jets, connection values vanish
    for (int m = 0; m < 4; ++m) {
        x0_subst_[reg_.id("Gam_" + idx(m))] = ScalarExpr();
        x0_subst_[reg_.id("Sig_" + idx(m))] = ScalarExpr();
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) x0_subst_[g1(m, a, b)] = ScalarExpr();
    }

    for (int m = 0; m < 4; ++m) cliff_.add_covector("dx" + idx(m));
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b)
            cliff_.set_pairing(cliff_.id("dx" + idx(a)), cliff_.id("dx" + idx(b)),
                               ScalarExpr(GRat(a == b ? 1 : 0)));
    reg_.freeze();
}

void GeoContext::build_boundary() {
    add_constants(reg_);
    reg_.add("hp0", Parity::XiFree, IndClass::Geometry);
    reg_.add("nxp2", Parity::Even, IndClass::Geometry);  // |xi'|^2 on the boundary sphere
    reg_.add("gww", Parity::XiFree, IndClass::Geometry);
    reg_.add("f", Parity::XiFree, IndClass::Perturbation);
    reg_.add("Xn", Parity::XiFree, IndClass::Perturbation);
    reg_.add("gXxi", Parity::Odd, IndClass::Perturbation);   // g(X, xi')
    reg_.add("absX2", Parity::XiFree, IndClass::Perturbation);
    for (int j = 0; j < n_ - 1; ++j)
        reg_.add("xip_" + idx(j), Parity::Odd, IndClass::Geometry);  // xi'_j components

    CovId xip = cliff_.add_covector("xip");
    CovId dn = cliff_.add_covector("dxn");
    CovId ww = cliff_.add_covector("w");
    CovId xb = cliff_.add_covector("Xb");
    std::vector<CovId> es;
    for (int j = 0; j < n_ - 1; ++j) es.push_back(cliff_.add_covector("e" + idx(j)));

    auto one = ScalarExpr(GRat(1));
    auto zero = ScalarExpr();
    cliff_.set_pairing(xip, xip, sc("nxp2"));
    cliff_.set_pairing(xip, dn, zero);
    cliff_.set_pairing(dn, dn, one);
    cliff_.set_pairing(ww, xip, sc("hp0").scaled(GRat(Rational(1, 2))) * sc("nxp2"));
    cliff_.set_pairing(ww, dn, zero);
    cliff_.set_pairing(ww, ww, sc("gww"));
    cliff_.set_pairing(xb, xip, sc("gXxi"));
    cliff_.set_pairing(xb, dn, sc("Xn"));
    cliff_.set_pairing(xb, xb, sc("absX2"));
    cliff_.forbid_pairing(ww, xb);  // never occurs in scope; fail loudly if requested
    for (int j = 0; j < n_ - 1; ++j) {
        cliff_.set_pairing(es[j], es[j], one);
        for (int k = j + 1; k < n_ - 1; ++k) cliff_.set_pairing(es[j], es[k], zero);
        cliff_.set_pairing(es[j], dn, zero);
        cliff_.set_pairing(es[j], xip, sc("xip_" + idx(j)));
        cliff_.set_pairing(es[j], ww, sc("hp0").scaled(GRat(Rational(1, 2))) * sc("xip_" + idx(j)));
        cliff_.set_pairing(es[j], xb, ScalarExpr::ind(reg_.add("X_" + idx(j) + "_t",
                                                               Parity::XiFree,
                                                               IndClass::Perturbation)));
    }
    reg_.freeze();
}

GeoContext GeoContext::interior(int n) {
    if (n % 2 != 0 || n < 2) throw std::invalid_argument("interior context needs even n >= 2");
    if (n != 4) throw std::invalid_argument("only n = 4 is supported");
    GeoContext ctx(Kind::InteriorNormal, n);
    ctx.cliff_ = PairingTable(n);
    ctx.build_interior();
    return ctx;
}

GeoContext GeoContext::boundary(int n) {
    if (n % 2 != 0 || n < 3) throw std::invalid_argument("boundary context needs even n >= 4");
    if (n != 4) throw std::invalid_argument("only n = 4 is supported");
    GeoContext ctx(Kind::BoundaryCollar, n);
    ctx.cliff_ = PairingTable(n);
    ctx.build_boundary();
    return ctx;
}

GeoContext interior_context(int n) { return GeoContext::interior(n); }
GeoContext boundary_context(int n) { return GeoContext::boundary(n); }

}  // namespace wres
