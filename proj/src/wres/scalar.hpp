// Exact multivariate scalar expressions over a declared indeterminate
// registry. Canonical form: sorted monomial -> nonzero Gaussian-rational
// coefficient. Equality of canonical forms is expression equality.
#pragma once

#include "wres/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wres {

using IndId = std::uint16_t;

// parity under xi' -> -xi' on the cosphere of the boundary
enum class Parity : std::uint8_t { Even, Odd, XiFree };

// coarse classification used when routing sigma_{-4} terms
enum class IndClass : std::uint8_t {
    Constant,      // pi, Omega3, VolS_n, ...
    Geometry,      // h'(0), metric/connection values
    GravityJet,    // s, second jets: routed to the imported gravity block
    Perturbation,  // f, X_j, df, dX, pairings thereof
};

struct IndInfo {
    std::string name;
    Parity parity = Parity::XiFree;
    IndClass cls = IndClass::Geometry;
};

class Registry {
  public:
    IndId add(std::string name, Parity parity, IndClass cls);
    IndId id(const std::string& name) const;           // throws if unknown
    std::optional<IndId> find(const std::string& name) const;
    const IndInfo& info(IndId id) const { return inds_.at(id); }
    std::size_t size() const { return inds_.size(); }
    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

  private:
    std::vector<IndInfo> inds_;
    std::map<std::string, IndId> by_name_;
    bool frozen_ = false;
};

// sorted (id, exponent) pairs, exponent > 0
using Monomial = std::vector<std::pair<IndId, std::uint16_t>>;

Monomial mono_mul(const Monomial& a, const Monomial& b);

class ScalarExpr {
  public:
    ScalarExpr() = default;
    explicit ScalarExpr(GRat c);
    explicit ScalarExpr(long long n) : ScalarExpr(GRat(n)) {}

    static ScalarExpr ind(IndId id);
    static ScalarExpr term(GRat c, Monomial m);
    static ScalarExpr imag_unit() { return ScalarExpr(GRat::i()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GRat constant_value() const;  // throws unless constant

    ScalarExpr operator-() const;
    friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    ScalarExpr& operator+=(const ScalarExpr& o);
    ScalarExpr& operator-=(const ScalarExpr& o);
    ScalarExpr scaled(const GRat& c) const;
    ScalarExpr pow(unsigned n) const;

    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) { return !(a == b); }

    // simultaneous substitution, then re-canonicalization
    ScalarExpr substitute(const std::map<IndId, ScalarExpr>& bindings) const;

    // true if some monomial contains an indeterminate accepted by pred
    template <class Pred>
    bool mentions(Pred&& pred) const {
        for (const auto& [m, c] : terms_)
            for (const auto& [id, e] : m)
                if (pred(id)) return true;
        return false;
    }

    // splits into (part mentioning pred-inds, rest)
    template <class Pred>
    std::pair<ScalarExpr, ScalarExpr> split(Pred&& pred) const {
        ScalarExpr yes, no;
        for (const auto& [m, c] : terms_) {
            bool hit = false;
            for (const auto& [id, e] : m)
                if (pred(id)) { hit = true; break; }
            (hit ? yes : no).terms_.emplace(m, c);
        }
        return {yes, no};
    }

    Parity parity(const Registry& reg) const;  // Even/Odd; throws if mixed

    std::complex<double> eval(const std::map<IndId, std::complex<double>>& vals) const;

    const std::map<Monomial, GRat>& terms() const { return terms_; }

    std::string render(const Registry& reg) const;

  private:
    void insert(const Monomial& m, const GRat& c);
    std::map<Monomial, GRat> terms_;
};

}  // namespace wres
