// Symbolic Clifford algebra over declared formal covectors.
// Convention: c(a)c(b) + c(b)c(a) = -2 g(a,b), so c(a)^2 = -g(a,a).
// Normal form: words strictly increasing in the covector order; the trace
// uses tr[id] = 2^{n/2} and the Wick recursion on even words.
#pragma once

#include "wres/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wres {

using CovId = std::uint8_t;
using Word = std::vector<CovId>;

class PairingTable {
  public:
    explicit PairingTable(int dim = 4) : dim_(dim) {}

    CovId add_covector(std::string name);
    CovId id(const std::string& name) const;
    std::optional<CovId> find(const std::string& name) const;
    const std::string& name(CovId c) const { return names_.at(c); }
    std::size_t size() const { return names_.size(); }
    int dim() const { return dim_; }
    long long trace_of_identity() const;  // 2^{dim/2}

    void set_pairing(CovId a, CovId b, ScalarExpr g);
    void forbid_pairing(CovId a, CovId b);  // request becomes a hard error
    const ScalarExpr& pairing(CovId a, CovId b) const;

  private:
    int dim_;
    std::vector<std::string> names_;
    std::map<std::string, CovId> by_name_;
    std::map<std::pair<CovId, CovId>, ScalarExpr> g_;
    std::map<std::pair<CovId, CovId>, bool> forbidden_;
};

class CliffordExpr {
  public:
    CliffordExpr() = default;

    static CliffordExpr zero() { return {}; }
    static CliffordExpr one();
    static CliffordExpr one(ScalarExpr coeff);
    static CliffordExpr letter(CovId c);
    // normalizes an arbitrary word sequence with a scalar coefficient
    static CliffordExpr word(const Word& w, const PairingTable& table,
                             ScalarExpr coeff = ScalarExpr(GRat(1)));

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;                 // only the empty word
    ScalarExpr scalar_part() const;         // coefficient of the empty word

    CliffordExpr operator-() const;
    friend CliffordExpr operator+(const CliffordExpr& a, const CliffordExpr& b);
    friend CliffordExpr operator-(const CliffordExpr& a, const CliffordExpr& b);
    CliffordExpr& operator+=(const CliffordExpr& o);
    CliffordExpr scaled(const ScalarExpr& s) const;
    CliffordExpr scaled(const GRat& c) const;

    friend bool operator==(const CliffordExpr& a, const CliffordExpr& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordExpr& a, const CliffordExpr& b) { return !(a == b); }

    // substitution applied to every scalar coefficient
    CliffordExpr substitute(const std::map<IndId, ScalarExpr>& bindings) const;
    // replaces every occurrence of covector `from` by `to` (used for
    // d/dx_n c(xi') -> c(w)); returns sum over single-occurrence replacements
    // if `single` is true (Leibniz), else wholesale substitution.
    CliffordExpr replace_letter_leibniz(CovId from, CovId to, const PairingTable& table) const;

    const std::map<Word, ScalarExpr>& terms() const { return terms_; }

    std::string render(const Registry& reg, const PairingTable& table) const;

  private:
    void insert(const Word& w, const ScalarExpr& c);
    std::map<Word, ScalarExpr> terms_;
};

CliffordExpr cliff_mul(const CliffordExpr& a, const CliffordExpr& b, const PairingTable& table);
ScalarExpr cliff_trace(const CliffordExpr& a, const PairingTable& table);

}  // namespace wres
