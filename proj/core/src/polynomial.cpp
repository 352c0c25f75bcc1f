#include "acp/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace acp {

int Monomial::cmp_exps(const Monomial& a, const Monomial& b) {
    // graded comparison, then lexicographic on the sparse exponent vectors
    uint64_t da = 0, db = 0;
    for (auto& [v, e] : a.exps) da += e;
    for (auto& [v, e] : b.exps) db += e;
    if (da != db) return da < db ? -1 : 1;
    if (a.exps < b.exps) return -1;
    if (b.exps < a.exps) return 1;
    return 0;
}

Poly Poly::constant(Int c) {
    Poly p;
    if (c != 0) p.terms_.push_back(Monomial{std::move(c), {}});
    return p;
}

Poly Poly::variable(uint32_t var) {
    Poly p;
    p.terms_.push_back(Monomial{Int(1), {{var, 1}}});
    return p;
}

uint32_t Poly::total_degree() const {
    uint32_t d = 0;
    for (auto& m : terms_) {
        uint32_t t = 0;
        for (auto& [v, e] : m.exps) t += e;
        d = std::max(d, t);
    }
    return d;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::cmp_exps(a, b) < 0; });
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (auto& m : terms_) {
        if (!out.empty() && out.back().exps == m.exps) {
            out.back().coef += m.coef;
            if (out.back().coef == 0) out.pop_back();
        } else if (m.coef != 0) {
            out.push_back(std::move(m));
        }
    }
    terms_ = std::move(out);
}

Poly Poly::from_terms(std::vector<Monomial> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Monomial> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return Poly::from_terms(std::move(t));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
    Poly p = a;
    for (auto& m : p.terms_) m.coef = -m.coef;
    return p;
}

namespace {

std::vector<std::pair<uint32_t, uint32_t>> mul_exps(const std::vector<std::pair<uint32_t, uint32_t>>& a,
                                                    const std::vector<std::pair<uint32_t, uint32_t>>& b) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
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

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::map<std::vector<std::pair<uint32_t, uint32_t>>, Int> acc;
    for (auto& ma : a.terms_) {
        for (auto& mb : b.terms_) {
            acc[mul_exps(ma.exps, mb.exps)] += ma.coef * mb.coef;
        }
    }
    std::vector<Monomial> t;
    t.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) t.push_back(Monomial{c, e});
    return Poly::from_terms(std::move(t));
}

Poly Poly::scaled(const Int& c) const {
    if (c == 0) return Poly();
    Poly p = *this;
    for (auto& m : p.terms_) m.coef *= c;
    return p;
}

Poly Poly::derivative(uint32_t var) const {
    std::vector<Monomial> t;
    for (auto& m : terms_) {
        for (size_t k = 0; k < m.exps.size(); ++k) {
            if (m.exps[k].first != var) continue;
            Monomial d;
            d.coef = m.coef * m.exps[k].second;
            d.exps = m.exps;
            if (d.exps[k].second == 1)
                d.exps.erase(d.exps.begin() + static_cast<long>(k));
            else
                d.exps[k].second -= 1;
            t.push_back(std::move(d));
            break;
        }
    }
    return Poly::from_terms(std::move(t));
}

uint32_t Poly::max_exponent(uint32_t var) const {
    uint32_t m = 0;
    for (auto& t : terms_)
        for (auto& [v, e] : t.exps)
            if (v == var) m = std::max(m, e);
    return m;
}

uint32_t Poly::max_var() const {
    uint32_t m = 0;
    for (auto& t : terms_)
        for (auto& [v, e] : t.exps) m = std::max(m, v + 1);
    return m;
}

namespace {

BigReal int_to_bigreal(const Int& c, Precision p) {
    // exact for coefficients within precision; fall back to string conversion
    if (c >= std::numeric_limits<long>::min() && c <= std::numeric_limits<long>::max())
        return BigReal(static_cast<long>(c), p);
    return BigReal::from_string(c.str(), p);
}

}  // namespace

BigReal Poly::eval_cached(const std::vector<std::vector<BigReal>>& powers, Precision p) const {
    BigReal sum(p);
    for (auto& m : terms_) {
        BigReal term = int_to_bigreal(m.coef, p);
        for (auto& [v, e] : m.exps) term *= powers[v][e];
        sum += term;
    }
    return sum;
}

BigReal Poly::eval(const Vec& point, Precision p) const {
    std::vector<std::vector<BigReal>> powers(point.size());
    for (uint32_t v = 0; v < point.size(); ++v) {
        uint32_t me = max_exponent(v);
        powers[v].resize(me + 1, BigReal(1, p));
        for (uint32_t e = 1; e <= me; ++e) powers[v][e] = powers[v][e - 1] * point[v];
    }
    return eval_cached(powers, p);
}

std::vector<std::vector<BigReal>> PolySystem::power_cache(const Vec& point, Precision p) const {
    std::vector<uint32_t> maxexp(vars.size(), 0);
    auto scan = [&](const std::vector<Poly>& polys) {
        for (auto& poly : polys)
            for (auto& m : poly.terms())
                for (auto& [v, e] : m.exps) maxexp[v] = std::max(maxexp[v], e);
    };
    scan(equalities);
    scan(inequalities);
    std::vector<std::vector<BigReal>> powers(vars.size());
    for (uint32_t v = 0; v < vars.size(); ++v) {
        powers[v].resize(maxexp[v] + 1, BigReal(1, p));
        for (uint32_t e = 1; e <= maxexp[v]; ++e) powers[v][e] = powers[v][e - 1] * point[v];
    }
    return powers;
}

Vec PolySystem::eval_equalities(const Vec& point, Precision p) const {
    if (point.size() != vars.size()) throw Error("DimensionMismatch", "point dimension does not match system variables");
    auto powers = power_cache(point, p);
    Vec out;
    out.reserve(equalities.size());
    for (auto& poly : equalities) out.push_back(poly.eval_cached(powers, p));
    return out;
}

Vec PolySystem::eval_inequalities(const Vec& point, Precision p) const {
    if (point.size() != vars.size()) throw Error("DimensionMismatch", "point dimension does not match system variables");
    auto powers = power_cache(point, p);
    Vec out;
    out.reserve(inequalities.size());
    for (auto& poly : inequalities) out.push_back(poly.eval_cached(powers, p));
    return out;
}

BigReal PolySystem::max_equality_residual(const Vec& point, Precision p) const {
    return inf_norm(eval_equalities(point, p));
}

Vec PolySystem::slice_values(const Vec& point, Precision p) const {
    auto powers = power_cache(point, p);
    Vec out;
    out.reserve(square_slice.size());
    for (size_t idx : square_slice) out.push_back(equalities[idx].eval_cached(powers, p));
    return out;
}

Mat PolySystem::slice_jacobian(const Vec& point, Precision p) const {
    const size_t n = vars.size();
    if (square_slice.size() != n) throw Error("DimensionMismatch", "square slice not designated");
    auto powers = power_cache(point, p);
    Mat j(n, n, p);
    for (size_t r = 0; r < n; ++r) {
        const Poly& poly = equalities[square_slice[r]];
        for (uint32_t c = 0; c < n; ++c) {
            Poly d = poly.derivative(c);
            if (!d.is_zero()) j.at(r, c) = d.eval_cached(powers, p);
        }
    }
    return j;
}

void PolySystem::designate_square_slice(const Vec& point, Precision p, const std::vector<size_t>& forced) {
    const size_t n = vars.size();
    const size_t m = equalities.size();
    if (m < n) throw Error("DimensionMismatch", "fewer equalities than variables; no square slice exists");

    auto powers = power_cache(point, p);
    // gradient rows at the reference point
    std::vector<Vec> rows(m, Vec(n, BigReal(p)));
    for (size_t r = 0; r < m; ++r)
        for (uint32_t c = 0; c < n; ++c) {
            Poly d = equalities[r].derivative(c);
            if (!d.is_zero()) rows[r][c] = d.eval_cached(powers, p);
        }

    // greedy modified Gram-Schmidt row selection with incremental projection;
    // forced rows first, then whichever remaining row keeps the most norm
    std::vector<char> used(m, 0);
    std::vector<size_t> picked;
    BigReal tiny = pow10(-(p.digits / 2), p);
    BigReal tiny2 = tiny * tiny;

    auto norm2 = [&](const Vec& v) {
        BigReal s(p);
        for (size_t c = 0; c < n; ++c) s += v[c] * v[c];
        return s;
    };

    auto take = [&](size_t r) {
        used[r] = 1;
        picked.push_back(r);
        BigReal nb = norm2(rows[r]);
        if (nb <= tiny2)
            throw Error("SingularJacobian", "forced slice rows are dependent at the reference point");
        // project the chosen direction out of every remaining row
        for (size_t i = 0; i < m; ++i) {
            if (used[i]) continue;
            BigReal dot(p);
            for (size_t c = 0; c < n; ++c) dot += rows[i][c] * rows[r][c];
            if (dot.is_zero()) continue;
            BigReal f = dot / nb;
            for (size_t c = 0; c < n; ++c) rows[i][c] = rows[i][c] - f * rows[r][c];
        }
    };

    for (size_t r : forced) {
        if (r >= m) throw Error("DimensionMismatch", "forced slice row out of range");
        take(r);
    }
    while (picked.size() < n) {
        size_t best = m;
        BigReal best_norm(p);
        for (size_t r = 0; r < m; ++r) {
            if (used[r]) continue;
            BigReal nv = norm2(rows[r]);
            if (best == m || nv > best_norm) { best = r; best_norm = nv; }
        }
        if (best == m || best_norm <= tiny2)
            throw Error("SingularJacobian", "equalities do not span a full-rank square slice at the reference point");
        take(best);
    }
    std::sort(picked.begin(), picked.end());
    square_slice = std::move(picked);
}

}  // namespace acp
