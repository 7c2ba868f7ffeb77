#include "wres/clifford.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wres {

CovId PairingTable::add_covector(std::string name) {
    if (by_name_.count(name)) throw std::invalid_argument("duplicate covector: " + name);
    CovId id = static_cast<CovId>(names_.size());
    by_name_[name] = id;
    names_.push_back(std::move(name));
    return id;
}

CovId PairingTable::id(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::invalid_argument("unknown covector: " + name);
    return it->second;
}

std::optional<CovId> PairingTable::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

long long PairingTable::trace_of_identity() const {
    long long t = 1;
    for (int k = 0; k < dim_ / 2; ++k) t *= 2;
    return t;
}

static std::pair<CovId, CovId> ordered(CovId a, CovId b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void PairingTable::set_pairing(CovId a, CovId b, ScalarExpr g) {
    g_[ordered(a, b)] = std::move(g);
}

void PairingTable::forbid_pairing(CovId a, CovId b) {
    forbidden_[ordered(a, b)] = true;
}

const ScalarExpr& PairingTable::pairing(CovId a, CovId b) const {
    auto key = ordered(a, b);
    if (forbidden_.count(key))
        throw std::logic_error("pairing g(" + names_.at(a) + "," + names_.at(b) +
                               ") was declared out of scope");
    auto it = g_.find(key);
    if (it == g_.end())
        throw std::logic_error("undeclared pairing g(" + names_.at(a) + "," + names_.at(b) + ")");
    return it->second;
}

CliffordExpr CliffordExpr::one() { return one(ScalarExpr(GRat(1))); }

CliffordExpr CliffordExpr::one(ScalarExpr coeff) {
    CliffordExpr e;
    if (!coeff.is_zero()) e.terms_.emplace(Word{}, std::move(coeff));
    return e;
}

CliffordExpr CliffordExpr::letter(CovId c) {
    CliffordExpr e;
    e.terms_.emplace(Word{c}, ScalarExpr(GRat(1)));
    return e;
}

void CliffordExpr::insert(const Word& w, const ScalarExpr& c) {
    if (c.is_zero()) return;
    auto [it, ok] = terms_.emplace(w, c);
    if (!ok) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CliffordExpr CliffordExpr::word(const Word& w, const PairingTable& table, ScalarExpr coeff) {
    // bubble-reduce to strictly increasing words using
    // c(a)c(b) = -c(b)c(a) - 2 g(a,b)
    CliffordExpr out;
    std::vector<std::pair<Word, ScalarExpr>> stack;
    stack.emplace_back(w, std::move(coeff));
    while (!stack.empty()) {
        auto [word, c] = std::move(stack.back());
        stack.pop_back();
        if (c.is_zero()) continue;
        std::size_t k = word.size();
        bool reduced = true;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] >= word[i + 1]) { k = i; reduced = false; break; }
        }
        if (reduced) {
            out.insert(word, c);
            continue;
        }
        CovId a = word[k], b = word[k + 1];
        if (a == b) {
            Word rest(word.begin(), word.begin() + k);
            rest.insert(rest.end(), word.begin() + k + 2, word.end());
            stack.emplace_back(std::move(rest), c * (-table.pairing(a, a)));
        } else {
            Word swapped = word;
            std::swap(swapped[k], swapped[k + 1]);
            stack.emplace_back(std::move(swapped), -c);
            Word rest(word.begin(), word.begin() + k);
            rest.insert(rest.end(), word.begin() + k + 2, word.end());
            stack.emplace_back(std::move(rest), c * table.pairing(a, b).scaled(GRat(-2)));
        }
    }
    return out;
}

bool CliffordExpr::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

ScalarExpr CliffordExpr::scalar_part() const {
    auto it = terms_.find(Word{});
    return it == terms_.end() ? ScalarExpr() : it->second;
}

CliffordExpr CliffordExpr::operator-() const {
    CliffordExpr e;
    for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
    return e;
}

CliffordExpr operator+(const CliffordExpr& a, const CliffordExpr& b) {
    CliffordExpr e = a;
    for (const auto& [w, c] : b.terms_) e.insert(w, c);
    return e;
}

CliffordExpr operator-(const CliffordExpr& a, const CliffordExpr& b) {
    CliffordExpr e = a;
    for (const auto& [w, c] : b.terms_) e.insert(w, -c);
    return e;
}

CliffordExpr& CliffordExpr::operator+=(const CliffordExpr& o) {
    for (const auto& [w, c] : o.terms_) insert(w, c);
    return *this;
}

CliffordExpr CliffordExpr::scaled(const ScalarExpr& s) const {
    CliffordExpr e;
    if (s.is_zero()) return e;
    for (const auto& [w, c] : terms_) e.insert(w, c * s);
    return e;
}

CliffordExpr CliffordExpr::scaled(const GRat& c) const {
    CliffordExpr e;
    if (c.is_zero()) return e;
    for (const auto& [w, k] : terms_) e.terms_.emplace(w, k.scaled(c));
    return e;
}

CliffordExpr CliffordExpr::substitute(const std::map<IndId, ScalarExpr>& bindings) const {
    CliffordExpr e;
    for (const auto& [w, c] : terms_) e.insert(w, c.substitute(bindings));
    return e;
}

CliffordExpr CliffordExpr::replace_letter_leibniz(CovId from, CovId to,
                                                  const PairingTable& table) const {
    CliffordExpr out;
    for (const auto& [w, c] : terms_) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != from) continue;
            Word replaced = w;
            replaced[i] = to;
            out += CliffordExpr::word(replaced, table, c);
        }
    }
    return out;
}

CliffordExpr cliff_mul(const CliffordExpr& a, const CliffordExpr& b, const PairingTable& table) {
    CliffordExpr out;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out += CliffordExpr::word(w, table, ca * cb);
        }
    }
    return out;
}

namespace {

ScalarExpr trace_word(const Word& w, const PairingTable& table) {
    if (w.size() % 2 == 1) return ScalarExpr();
    if (w.empty()) return ScalarExpr(GRat(table.trace_of_identity()));
    ScalarExpr total;
    for (std::size_t j = 1; j < w.size(); ++j) {
        Word rest(w.begin() + 1, w.begin() + j);
        rest.insert(rest.end(), w.begin() + j + 1, w.end());
        ScalarExpr g = table.pairing(w[0], w[j]);
        GRat sign((j % 2 == 1) ? 1 : -1);  // (-1)^{j+1} for 0-based j
        total += (g * trace_word(rest, table)).scaled(-sign);
    }
    return total;
}

}  // namespace

ScalarExpr cliff_trace(const CliffordExpr& a, const PairingTable& table) {
    ScalarExpr total;
    for (const auto& [w, c] : a.terms()) total += c * trace_word(w, table);
    return total;
}

std::string CliffordExpr::render(const Registry& reg, const PairingTable& table) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string coeff = c.render(reg);
        bool needs_parens = coeff.find_first_of("+-") != std::string::npos &&
                            coeff.find_first_of("+-") != 0;
        if (w.empty()) {
            os << coeff;
            continue;
        }
        if (coeff != "1") {
            if (needs_parens) os << "(" << coeff << ")";
            else os << coeff;
            os << "*";
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << "*";
            os << "c(" << table.name(w[i]) << ")";
        }
    }
    return os.str();
}

}  // namespace wres
