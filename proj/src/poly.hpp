/*
   Copyright 2026 The lcac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace lcac {

/// Index into a Registry. Ids 0..3 are the reserved variables
/// d (the derivation), x, y, z (the spectral variables lambda, mu, nu).
struct Variable {
    uint32_t id = 0;
    friend bool operator==(Variable a, Variable b) { return a.id == b.id; }
    friend bool operator!=(Variable a, Variable b) { return a.id != b.id; }
    friend bool operator<(Variable a, Variable b) { return a.id < b.id; }
};

/// Interned variable names shared by every polynomial of one computation.
/// Append-only: declaring a parameter never invalidates existing values.
class Registry {
   public:
    static constexpr uint32_t k_del = 0;     // d  (the derivation symbol)
    static constexpr uint32_t k_lambda = 1;  // x
    static constexpr uint32_t k_mu = 2;      // y
    static constexpr uint32_t k_nu = 3;      // z
    static constexpr uint32_t k_first_param = 4;

    Registry() : names_{"d", "x", "y", "z"} {}

    static bool reserved(Variable v) { return v.id < k_first_param; }

    /// Declares a fresh parameter. Throws name_clash on duplicates and
    /// reserved names.
    Variable declare(const std::string& name) {
        if (find(name)) fail(errc::name_clash, "variable already declared: " + name);
        names_.push_back(name);
        return Variable{uint32_t(names_.size() - 1)};
    }

    /// Find-or-declare; never fails on duplicates. Reserved names resolve to
    /// the reserved ids.
    Variable intern(const std::string& name) {
        if (auto v = find(name)) return *v;
        names_.push_back(name);
        return Variable{uint32_t(names_.size() - 1)};
    }

    std::optional<Variable> find(const std::string& name) const {
        for (uint32_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return Variable{i};
        return std::nullopt;
    }

    const std::string& name(Variable v) const { return names_.at(v.id); }
    size_t size() const { return names_.size(); }

    std::vector<Variable> parameters() const {
        std::vector<Variable> out;
        for (uint32_t i = k_first_param; i < names_.size(); ++i) out.push_back(Variable{i});
        return out;
    }

   private:
    std::vector<std::string> names_;
};

using RegistryPtr = std::shared_ptr<Registry>;

inline RegistryPtr make_registry() { return std::make_shared<Registry>(); }

inline Variable var_del() { return Variable{Registry::k_del}; }
inline Variable var_lambda() { return Variable{Registry::k_lambda}; }
inline Variable var_mu() { return Variable{Registry::k_mu}; }
inline Variable var_nu() { return Variable{Registry::k_nu}; }

// Term-order significance: parameters (in declaration order) below
// d < x < y < z. Lexicographic comparison walks from the most significant
// variable down.
inline uint64_t var_rank(Variable v) {
    return v.id < Registry::k_first_param ? (uint64_t(1) << 32) + v.id : uint64_t(v.id);
}

/// A power product. Exponents are kept sorted by rank, zero exponents are
/// never stored, so equal monomials are representation-equal.
class Monomial {
   public:
    using Entry = std::pair<Variable, uint32_t>;

    Monomial() = default;

    static Monomial unit() { return Monomial(); }

    static Monomial of(Variable v, uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.exps_.push_back({v, e});
        return m;
    }

    bool is_unit() const { return exps_.empty(); }

    uint32_t exponent(Variable v) const {
        for (const auto& [w, e] : exps_)
            if (w == v) return e;
        return 0;
    }

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (const auto& [w, e] : exps_) d += e;
        return d;
    }

    Monomial times(const Monomial& o) const {
        Monomial out;
        size_t i = 0, j = 0;
        while (i < exps_.size() || j < o.exps_.size()) {
            if (j == o.exps_.size() ||
                (i < exps_.size() && var_rank(exps_[i].first) < var_rank(o.exps_[j].first))) {
                out.exps_.push_back(exps_[i++]);
            } else if (i == exps_.size() || var_rank(o.exps_[j].first) < var_rank(exps_[i].first)) {
                out.exps_.push_back(o.exps_[j++]);
            } else {
                out.exps_.push_back({exps_[i].first, exps_[i].second + o.exps_[j].second});
                ++i, ++j;
            }
        }
        return out;
    }

    /// Component-wise quotient, or nullopt if some exponent would go negative.
    std::optional<Monomial> divided_by(const Monomial& o) const {
        Monomial out;
        size_t i = 0, j = 0;
        while (i < exps_.size() || j < o.exps_.size()) {
            if (j == o.exps_.size() ||
                (i < exps_.size() && var_rank(exps_[i].first) < var_rank(o.exps_[j].first))) {
                out.exps_.push_back(exps_[i++]);
            } else if (i == exps_.size() || var_rank(o.exps_[j].first) < var_rank(exps_[i].first)) {
                return std::nullopt;
            } else {
                if (exps_[i].second < o.exps_[j].second) return std::nullopt;
                if (exps_[i].second > o.exps_[j].second)
                    out.exps_.push_back({exps_[i].first, exps_[i].second - o.exps_[j].second});
                ++i, ++j;
            }
        }
        return out;
    }

    Monomial without(Variable v) const {
        Monomial out;
        for (const auto& p : exps_)
            if (p.first != v) out.exps_.push_back(p);
        return out;
    }

    /// Lexicographic term order; positive when a > b.
    static int cmp(const Monomial& a, const Monomial& b) {
        auto ia = a.exps_.rbegin(), ib = b.exps_.rbegin();
        while (ia != a.exps_.rend() || ib != b.exps_.rend()) {
            if (ib == b.exps_.rend()) return 1;   // a has a variable b lacks at the top
            if (ia == a.exps_.rend()) return -1;  // and vice versa
            uint64_t ra = var_rank(ia->first), rb = var_rank(ib->first);
            if (ra != rb) return ra > rb ? 1 : -1;
            if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
            ++ia, ++ib;
        }
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    const std::vector<Entry>& entries() const { return exps_; }

   private:
    std::vector<Entry> exps_;
};

struct TermOrderDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};

/// Sparse multivariate polynomial over the rationals. Canonical by
/// construction: no zero coefficients, terms ordered descending, equality is
/// term-map equality. All operations are pure.
class Polynomial {
   public:
    using TermMap = std::map<Monomial, Rational, TermOrderDesc>;

    Polynomial() = default;  // zero, attached to no registry

    explicit Polynomial(const Rational& c, RegistryPtr reg = nullptr) : reg_(std::move(reg)) {
        if (c != 0) terms_[Monomial::unit()] = c;
    }

    static Polynomial constant(const Rational& c, RegistryPtr reg = nullptr) {
        return Polynomial(c, std::move(reg));
    }

    static Polynomial variable(Variable v, RegistryPtr reg) {
        Polynomial p;
        p.reg_ = std::move(reg);
        p.terms_[Monomial::of(v)] = 1;
        return p;
    }

    static Polynomial term(const Rational& c, const Monomial& m, RegistryPtr reg) {
        Polynomial p;
        p.reg_ = std::move(reg);
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }

    /// The value of a constant polynomial (zero for the empty one).
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) fail(errc::invalid_argument, "polynomial is not constant");
        return terms_.begin()->second;
    }

    const RegistryPtr& registry() const { return reg_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    Polynomial operator-() const {
        Polynomial out;
        out.reg_ = reg_;
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial out;
        out.reg_ = merged_registry(o);
        out.terms_ = terms_;
        for (const auto& [m, c] : o.terms_) {
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                out.terms_[m] = c;
            } else {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
        return out;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial out;
        out.reg_ = merged_registry(o);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma.times(mb);
                auto it = out.terms_.find(m);
                if (it == out.terms_.end()) {
                    Rational c = ca * cb;
                    if (c != 0) out.terms_[m] = std::move(c);
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) out.terms_.erase(it);
                }
            }
        }
        return out;
    }

    Polynomial operator*(const Rational& s) const {
        Polynomial out;
        out.reg_ = reg_;
        if (s == 0) return out;
        for (const auto& [m, c] : terms_) out.terms_[m] = c * s;
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(uint32_t e) const {
        Polynomial acc = Polynomial::constant(1, reg_);
        for (uint32_t i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    uint32_t degree_in(Variable v) const {
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    bool contains(Variable v) const {
        for (const auto& [m, c] : terms_)
            if (m.exponent(v) > 0) return true;
        return false;
    }

    /// True when every variable occurring in the polynomial is in `allowed`.
    bool uses_only(const std::vector<Variable>& allowed) const {
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.entries()) {
                bool ok = false;
                for (Variable w : allowed)
                    if (w == v) ok = true;
                if (!ok) return false;
            }
        return true;
    }

    /// Replaces every occurrence of v by r. Ring homomorphism in the first
    /// argument; occurrences are counted in the original polynomial, so r may
    /// mention v itself (e.g. x -> x + y).
    Polynomial substitute(Variable v, const Polynomial& r) const {
        Polynomial out;
        out.reg_ = merged_registry(r);
        std::vector<Polynomial> powers{Polynomial::constant(1, out.reg_)};
        for (const auto& [m, c] : terms_) {
            uint32_t e = m.exponent(v);
            Polynomial base = Polynomial::term(c, m.without(v), out.reg_);
            if (e == 0) {
                out += base;
                continue;
            }
            while (powers.size() <= e) powers.push_back(powers.back() * r);
            out += base * powers[e];
        }
        return out;
    }

    /// Coefficient list [c_0, ..., c_d] with p = sum c_j v^j; [0] for p = 0.
    std::vector<Polynomial> coefficients_in(Variable v) const {
        std::vector<Polynomial> out(size_t(degree_in(v)) + 1);
        for (auto& c : out) c.reg_ = reg_;
        for (const auto& [m, c] : terms_) {
            uint32_t e = m.exponent(v);
            out[e] += Polynomial::term(c, m.without(v), reg_);
        }
        return out;
    }

    Polynomial coefficient_of(Variable v, uint32_t k) const {
        Polynomial out;
        out.reg_ = reg_;
        for (const auto& [m, c] : terms_)
            if (m.exponent(v) == k) out += Polynomial::term(c, m.without(v), reg_);
        return out;
    }

    /// Exact multivariate division in the global term order. Throws
    /// not_divisible when no polynomial quotient exists.
    Polynomial exact_divide(const Polynomial& q) const {
        if (q.is_zero()) fail(errc::invalid_argument, "division by zero polynomial");
        Polynomial quot;
        quot.reg_ = merged_registry(q);
        Polynomial rem = *this;
        const auto& [ltq_m, ltq_c] = *q.terms_.begin();
        while (!rem.is_zero()) {
            const auto& [ltr_m, ltr_c] = *rem.terms_.begin();
            auto m = ltr_m.divided_by(ltq_m);
            if (!m) fail(errc::not_divisible, "polynomial division leaves a remainder");
            Polynomial t = Polynomial::term(ltr_c / ltq_c, *m, quot.reg_);
            quot += t;
            rem -= t * q;
        }
        return quot;
    }

    /// Binds parameter variables to rationals. Binding d/x/y/z is an error.
    Polynomial specialize(const std::map<Variable, Rational>& bindings) const {
        for (const auto& [v, val] : bindings)
            if (Registry::reserved(v)) fail(errc::reserved_variable, "cannot specialize a reserved variable");
        Polynomial out;
        out.reg_ = reg_;
        for (const auto& [m, c] : terms_) {
            Rational coeff = c;
            Monomial rest;
            for (const auto& [v, e] : m.entries()) {
                auto it = bindings.find(v);
                if (it == bindings.end()) {
                    rest = rest.times(Monomial::of(v, e));
                } else {
                    for (uint32_t k = 0; k < e; ++k) coeff *= it->second;
                }
            }
            out += Polynomial::term(coeff, rest, reg_);
        }
        return out;
    }

    /// Full evaluation at a rational point; every occurring variable must be
    /// bound. Test oracles lean on this.
    Rational evaluate(const std::map<Variable, Rational>& point) const {
        Rational acc = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m.entries()) {
                auto it = point.find(v);
                if (it == point.end()) fail(errc::invalid_argument, "evaluate: unbound variable");
                for (uint32_t k = 0; k < e; ++k) t *= it->second;
            }
            acc += t;
        }
        return acc;
    }

    /// Canonical text form: terms descending, `*` between factors, `^` for
    /// powers, exact fractions. This is the byte-exact golden-file format.
    std::string str() const;

   private:
    RegistryPtr merged_registry(const Polynomial& o) const {
        if (!reg_) return o.reg_;
        if (!o.reg_) return reg_;
        if (reg_ != o.reg_) fail(errc::registry_mismatch, "polynomials use different variable registries");
        return reg_;
    }

    RegistryPtr reg_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

std::string monomial_str(const Monomial& m, const Registry& reg);

}  // namespace lcac
