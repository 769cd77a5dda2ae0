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

#include "annihilation.hpp"

#include <sstream>

namespace lcac {

bool IndexedElement::is_zero() const { return terms.empty() && del_coeff.is_zero(); }

void IndexedElement::add(size_t gen, unsigned index, const Polynomial& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(gen, index);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

IndexedElement IndexedElement::operator+(const IndexedElement& o) const {
    IndexedElement out = *this;
    for (const auto& [k, c] : o.terms) out.add(k.first, k.second, c);
    out.del_coeff = del_coeff + o.del_coeff;
    return out;
}

IndexedElement IndexedElement::operator-(const IndexedElement& o) const {
    IndexedElement out = *this;
    for (const auto& [k, c] : o.terms) out.add(k.first, k.second, -c);
    out.del_coeff = del_coeff - o.del_coeff;
    return out;
}

IndexedElement IndexedElement::operator*(const Polynomial& c) const {
    IndexedElement out;
    out.del_coeff = del_coeff * c;
    for (const auto& [k, v] : terms) out.add(k.first, k.second, v * c);
    return out;
}

IndexedElement indexed_gen(size_t gen, unsigned index, const RegistryPtr& reg) {
    IndexedElement e;
    e.add(gen, index, Polynomial(Rational(1), reg));
    return e;
}

IndexedElement indexed_del(const RegistryPtr& reg) {
    IndexedElement e;
    e.del_coeff = Polynomial(Rational(1), reg);
    return e;
}

std::string indexed_str(const IndexedElement& e, const AlgebraPresentation& p) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Polynomial& c, const std::string& sym) {
        if (c.is_constant()) {
            Rational v = c.constant_value();
            Rational mag = v < 0 ? Rational(-v) : v;
            if (first)
                os << (v < 0 ? "-" : "");
            else
                os << (v < 0 ? " - " : " + ");
            if (sym.empty())
                os << rat_str(mag);
            else if (mag == 1)
                os << sym;
            else
                os << rat_str(mag) << "*" << sym;
        } else {
            if (!first) os << " + ";
            os << "(" << c.str() << ")";
            if (!sym.empty()) os << "*" << sym;
        }
        first = false;
    };
    for (const auto& [k, c] : e.terms)
        emit(c, p.gens.at(k.first) + "(" + std::to_string(k.second) + ")");
    if (!e.del_coeff.is_zero()) emit(e.del_coeff, "del");
    return os.str();
}

namespace {

/// (f(d) e_g)_(s) rewritten to pure indexed symbols: each d^t picks up
/// (-1)^t s(s-1)...(s-t+1) and drops the index by t. Vanishes for t > s.
void add_normalized(IndexedElement& out, const Polynomial& f, size_t gen, unsigned s, const Polynomial& scale) {
    for (const auto& [mono, c] : f.terms()) {
        uint32_t t = mono.exponent(var_del());
        if (t > s) continue;
        Int ff = falling_factorial(s, t);
        if (ff == 0) continue;
        Rational sign = t % 2 == 0 ? Rational(ff) : Rational(-ff);
        Polynomial coeff = Polynomial::term(c * sign, mono.without(var_del()), f.registry());
        out.add(gen, s - t, coeff * scale);
    }
}

/// [g1_(m), g2_(n)] for plain generators.
IndexedElement gen_bracket(const AlgebraPresentation& p, size_t g1, unsigned m, size_t g2, unsigned n) {
    IndexedElement out;
    LambdaExpression br = bracket_gens(p, g1, g2, var_lambda());
    uint32_t dmax = 0;
    for (const auto& q : br) dmax = std::max(dmax, q.degree_in(var_lambda()));
    for (uint32_t i = 0; i <= dmax && i <= m; ++i) {
        Rational bin(binomial(m, i));
        if (bin == 0) continue;
        Polynomial scale = Polynomial::constant(bin, p.reg);
        Rational ifact(factorial(i));
        for (size_t k = 0; k < p.rank(); ++k) {
            Polynomial jth = br[k].coefficient_of(var_lambda(), i) * ifact;  // (g1_(i) g2) on e_k
            if (jth.is_zero()) continue;
            add_normalized(out, jth, k, m + n - i, scale);
        }
    }
    return out;
}

}  // namespace

IndexedElement ann_bracket(const AlgebraPresentation& p, const IndexedElement& x, const IndexedElement& y) {
    IndexedElement out;
    for (const auto& [kx, cx] : x.terms) {
        for (const auto& [ky, cy] : y.terms) {
            IndexedElement b = gen_bracket(p, kx.first, kx.second, ky.first, ky.second);
            out = out + b * (cx * cy);
        }
        // [g_(m), c d] = c m g_(m-1)
        if (!y.del_coeff.is_zero() && kx.second > 0)
            out.add(kx.first, kx.second - 1, cx * y.del_coeff * Rational(kx.second));
    }
    // [d, g_(n)] = -n g_(n-1)
    if (!x.del_coeff.is_zero())
        for (const auto& [ky, cy] : y.terms)
            if (ky.second > 0) out.add(ky.first, ky.second - 1, x.del_coeff * cy * Rational(-int64_t(ky.second)));
    return out;
}

ModElement rep_action(const FreeModulePresentation& m, size_t gen, unsigned n, const ModElement& elem) {
    ModElement act = action(m, gen_element(m.algebra, gen), elem, var_lambda());
    ModElement out(m.dim());
    Rational nf(factorial(n));
    for (size_t k = 0; k < m.dim(); ++k) out[k] = act[k].coefficient_of(var_lambda(), n) * nf;
    return out;
}

unsigned rep_bound(const FreeModulePresentation& m, size_t gen, size_t basis) {
    unsigned b = 0;
    for (size_t k = 0; k < m.dim(); ++k) b = std::max(b, m.action[gen][basis][k].degree_in(var_lambda()));
    return b;
}

std::map<std::pair<size_t, size_t>, unsigned> rep_bounds(const FreeModulePresentation& m) {
    std::map<std::pair<size_t, size_t>, unsigned> out;
    for (size_t g = 0; g < m.algebra.rank(); ++g)
        for (size_t v = 0; v < m.dim(); ++v) out[{g, v}] = rep_bound(m, g, v);
    return out;
}

ModElement apply_indexed(const FreeModulePresentation& m, const IndexedElement& e, const ModElement& elem) {
    ModElement out(m.dim());
    for (auto& c : out) c = Polynomial(Rational(0), m.algebra.reg);
    for (const auto& [k, c] : e.terms) {
        ModElement r = rep_action(m, k.first, k.second, elem);
        for (size_t i = 0; i < m.dim(); ++i)
            if (!r[i].is_zero()) out[i] += c * r[i];
    }
    if (!e.del_coeff.is_zero()) {
        Polynomial d = Polynomial::variable(var_del(), m.algebra.reg);
        for (size_t i = 0; i < m.dim(); ++i)
            if (!elem[i].is_zero()) out[i] += e.del_coeff * d * elem[i];
    }
    return out;
}

std::vector<RepResidual> check_rep(const FreeModulePresentation& m, unsigned max_index) {
    const size_t n = m.algebra.rank(), s = m.dim();
    const RegistryPtr& reg = m.algebra.reg;
    std::vector<RepResidual> out;

    auto basis_elem = [&](size_t v) {
        ModElement e(s);
        for (auto& c : e) c = Polynomial(Rational(0), reg);
        e[v] = Polynomial(Rational(1), reg);
        return e;
    };

    for (size_t g1 = 0; g1 < n; ++g1) {
        for (size_t g2 = 0; g2 < n; ++g2) {
            for (unsigned mi = 0; mi <= max_index; ++mi) {
                for (unsigned ni = 0; ni <= max_index; ++ni) {
                    IndexedElement br = ann_bracket(m.algebra, indexed_gen(g1, mi, reg), indexed_gen(g2, ni, reg));
                    for (size_t v = 0; v < s; ++v) {
                        ModElement ve = basis_elem(v);
                        ModElement lhs = apply_indexed(m, br, ve);
                        ModElement r1 = rep_action(m, g1, mi, rep_action(m, g2, ni, ve));
                        ModElement r2 = rep_action(m, g2, ni, rep_action(m, g1, mi, ve));
                        ModElement res(s);
                        for (size_t k = 0; k < s; ++k) res[k] = lhs[k] - r1[k] + r2[k];
                        std::ostringstream label;
                        label << "[" << m.algebra.gens[g1] << "(" << mi << ")," << m.algebra.gens[g2] << "("
                              << ni << ")] on " << m.basis[v];
                        out.push_back({label.str(), std::move(res)});
                    }
                }
            }
        }
    }

    // d-compatibility: [d, g_(k)] = -k g_(k-1) acting through the module
    // gives g_(k)(d v) - d (g_(k) v) - k g_(k-1) v = 0.
    Polynomial d = Polynomial::variable(var_del(), reg);
    for (size_t g = 0; g < n; ++g) {
        for (unsigned k = 0; k <= max_index; ++k) {
            for (size_t v = 0; v < s; ++v) {
                ModElement ve = basis_elem(v);
                ModElement dv = ve;
                for (auto& c : dv) c = c * d;
                ModElement lhs = rep_action(m, g, k, dv);
                ModElement rhs = rep_action(m, g, k, ve);
                for (auto& c : rhs) c = c * d;
                ModElement lower(s);
                for (auto& c : lower) c = Polynomial(Rational(0), reg);
                if (k > 0) {
                    lower = rep_action(m, g, k - 1, ve);
                    for (auto& c : lower) c = c * Rational(k);
                }
                ModElement res(s);
                for (size_t i = 0; i < s; ++i) res[i] = lhs[i] - rhs[i] - lower[i];
                std::ostringstream label;
                label << m.algebra.gens[g] << "(" << k << ") d-compat on " << m.basis[v];
                out.push_back({label.str(), std::move(res)});
            }
        }
    }
    return out;
}

bool rep_residuals_zero(const std::vector<RepResidual>& rs) {
    for (const auto& r : rs)
        if (!expr_zero(r.res)) return false;
    return true;
}

}  // namespace lcac
