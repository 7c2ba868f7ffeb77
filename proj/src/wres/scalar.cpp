#include "wres/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace wres {

IndId Registry::add(std::string name, Parity parity, IndClass cls) {
    if (frozen_) throw std::logic_error("registry is frozen");
    if (by_name_.count(name)) throw std::invalid_argument("duplicate indeterminate: " + name);
    IndId id = static_cast<IndId>(inds_.size());
    by_name_[name] = id;
    inds_.push_back({std::move(name), parity, cls});
    return id;
}

IndId Registry::id(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::invalid_argument("unknown indeterminate: " + name);
    return it->second;
}

std::optional<IndId> Registry::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            out.emplace_back(a[i].first, static_cast<std::uint16_t>(a[i].second + b[j].second));
            ++i; ++j;
        } else if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

ScalarExpr::ScalarExpr(GRat c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

ScalarExpr ScalarExpr::ind(IndId id) {
    ScalarExpr e;
    e.terms_.emplace(Monomial{{id, 1}}, GRat(1));
    return e;
}

ScalarExpr ScalarExpr::term(GRat c, Monomial m) {
    ScalarExpr e;
    if (!c.is_zero()) e.terms_.emplace(std::move(m), std::move(c));
    return e;
}

bool ScalarExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GRat ScalarExpr::constant_value() const {
    if (terms_.empty()) return GRat(0);
    if (!is_constant()) throw std::logic_error("not a constant expression");
    return terms_.begin()->second;
}

void ScalarExpr::insert(const Monomial& m, const GRat& c) {
    if (c.is_zero()) return;
    auto [it, ok] = terms_.emplace(m, c);
    if (!ok) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ScalarExpr ScalarExpr::operator-() const {
    ScalarExpr e;
    for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
    return e;
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
    ScalarExpr e = a;
    for (const auto& [m, c] : b.terms_) e.insert(m, c);
    return e;
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
    ScalarExpr e = a;
    for (const auto& [m, c] : b.terms_) e.insert(m, -c);
    return e;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    ScalarExpr e;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            e.insert(mono_mul(ma, mb), ca * cb);
    return e;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
    for (const auto& [m, c] : o.terms_) insert(m, c);
    return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) {
    for (const auto& [m, c] : o.terms_) insert(m, -c);
    return *this;
}

ScalarExpr ScalarExpr::scaled(const GRat& c) const {
    ScalarExpr e;
    if (c.is_zero()) return e;
    for (const auto& [m, k] : terms_) e.terms_.emplace(m, k * c);
    return e;
}

ScalarExpr ScalarExpr::pow(unsigned n) const {
    ScalarExpr e(GRat(1));
    for (unsigned k = 0; k < n; ++k) e = e * *this;
    return e;
}

ScalarExpr ScalarExpr::substitute(const std::map<IndId, ScalarExpr>& bindings) const {
    ScalarExpr out;
    for (const auto& [m, c] : terms_) {
        ScalarExpr piece(c);
        for (const auto& [id, exp] : m) {
            auto it = bindings.find(id);
            if (it == bindings.end()) {
                piece = piece * ScalarExpr::term(GRat(1), Monomial{{id, exp}});
            } else {
                piece = piece * it->second.pow(exp);
            }
        }
        out += piece;
    }
    return out;
}

Parity ScalarExpr::parity(const Registry& reg) const {
    bool seen = false;
    Parity result = Parity::Even;
    for (const auto& [m, c] : terms_) {
        int odd_count = 0;
        for (const auto& [id, e] : m)
            if (reg.info(id).parity == Parity::Odd) odd_count += e;
        Parity p = (odd_count % 2) ? Parity::Odd : Parity::Even;
        if (!seen) { result = p; seen = true; }
        else if (result != p) throw std::logic_error("mixed-parity expression");
    }
    return result;
}

std::complex<double> ScalarExpr::eval(const std::map<IndId, std::complex<double>>& vals) const {
    std::complex<double> total{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
        std::complex<double> v = c.to_complex();
        for (const auto& [id, e] : m) {
            auto it = vals.find(id);
            if (it == vals.end()) throw std::invalid_argument("missing numeric assignment");
            for (int k = 0; k < e; ++k) v *= it->second;
        }
        total += v;
    }
    return total;
}

std::string ScalarExpr::render(const Registry& reg) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        GRat coeff = c;
        std::string sign;
        if (coeff.is_real() && coeff.re < 0) {
            sign = "-";
            coeff = -coeff;
        } else {
            sign = "+";
        }
        if (first) {
            if (sign == "-") os << "-";
        } else {
            os << " " << sign << " ";
        }
        first = false;

        bool coeff_is_one = (coeff == GRat(1));
        std::vector<std::string> factors;
        if (!coeff_is_one || m.empty()) factors.push_back(to_string(coeff));
        for (const auto& [id, e] : m) {
            std::string f = reg.info(id).name;
            if (e > 1) f += "^" + std::to_string(e);
            factors.push_back(f);
        }
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) os << "*";
            os << factors[k];
        }
    }
    return os.str();
}

}  // namespace wres
