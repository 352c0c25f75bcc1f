#include "acp/sentence.hpp"

#include <sstream>

namespace acp {

Formula Formula::atom_eq(Poly p) {
    Formula f;
    f.kind = Kind::Atom;
    f.rel = Rel::Eq;
    f.poly = std::move(p);
    return f;
}

Formula Formula::atom_gt(Poly p) {
    Formula f = atom_eq(std::move(p));
    f.rel = Rel::Gt;
    return f;
}

Formula Formula::make_and(std::vector<Formula> kids) {
    Formula f;
    f.kind = Kind::And;
    f.kids = std::move(kids);
    return f;
}

Formula Formula::make_or(std::vector<Formula> kids) {
    Formula f;
    f.kind = Kind::Or;
    f.kids = std::move(kids);
    return f;
}

Formula Formula::make_not(Formula g) {
    Formula f;
    f.kind = Kind::Not;
    f.kids.push_back(std::move(g));
    return f;
}

size_t Formula::atom_count() const {
    if (kind == Kind::Atom) return 1;
    size_t n = 0;
    for (auto& k : kids) n += k.atom_count();
    return n;
}

namespace {

bool eval_formula(const Formula& f, const std::vector<std::vector<BigReal>>& powers,
                  const BigReal& tol, Precision p) {
    switch (f.kind) {
        case Formula::Kind::Atom: {
            BigReal v = f.poly.eval_cached(powers, p);
            return f.rel == Formula::Rel::Eq ? abs(v) <= tol : v > tol;
        }
        case Formula::Kind::And:
            for (auto& k : f.kids)
                if (!eval_formula(k, powers, tol, p)) return false;
            return true;
        case Formula::Kind::Or:
            for (auto& k : f.kids)
                if (eval_formula(k, powers, tol, p)) return true;
            return false;
        case Formula::Kind::Not:
            return !eval_formula(f.kids[0], powers, tol, p);
    }
    return false;
}

void collect_max_exp(const Formula& f, std::vector<uint32_t>& maxexp) {
    if (f.kind == Formula::Kind::Atom) {
        for (auto& m : f.poly.terms())
            for (auto& [v, e] : m.exps)
                if (v < maxexp.size()) maxexp[v] = std::max(maxexp[v], e);
        return;
    }
    for (auto& k : f.kids) collect_max_exp(k, maxexp);
}

std::string poly_smt2(const Poly& poly, const std::vector<std::string>& vars) {
    if (poly.is_zero()) return "0";
    std::ostringstream os;
    auto term = [&](const Monomial& m) -> std::string {
        std::string coef = m.coef < 0 ? "(- " + Int(-m.coef).str() + ")" : m.coef.str();
        std::vector<std::string> factors;
        if (m.coef != 1 || m.exps.empty()) factors.push_back(coef);
        for (auto& [v, e] : m.exps)
            for (uint32_t i = 0; i < e; ++i) factors.push_back(vars[v]);
        if (factors.size() == 1) return factors[0];
        std::string s = "(*";
        for (auto& f : factors) s += " " + f;
        return s + ")";
    };
    auto& terms = poly.terms();
    if (terms.size() == 1) return term(terms[0]);
    os << "(+";
    for (auto& m : terms) os << " " << term(m);
    os << ")";
    return os.str();
}

void formula_smt2(const Formula& f, const std::vector<std::string>& vars, std::ostringstream& os) {
    switch (f.kind) {
        case Formula::Kind::Atom:
            os << "(" << (f.rel == Formula::Rel::Eq ? "=" : ">") << " " << poly_smt2(f.poly, vars)
               << " 0)";
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            os << (f.kind == Formula::Kind::And ? "(and" : "(or");
            for (auto& k : f.kids) {
                os << " ";
                formula_smt2(k, vars, os);
            }
            os << ")";
            return;
        }
        case Formula::Kind::Not:
            os << "(not ";
            formula_smt2(f.kids[0], vars, os);
            os << ")";
            return;
    }
}

std::string poly_readable(const Poly& poly, const std::vector<std::string>& vars) {
    if (poly.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& m : poly.terms()) {
        Int c = m.coef;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool wrote = false;
        if (c != 1 || m.exps.empty()) {
            os << c.str();
            wrote = true;
        }
        for (auto& [v, e] : m.exps) {
            if (wrote) os << "*";
            os << vars[v];
            if (e > 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

void formula_prenex(const Formula& f, const std::vector<std::string>& vars, int indent,
                    std::ostringstream& os) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    switch (f.kind) {
        case Formula::Kind::Atom:
            os << pad << poly_readable(f.poly, vars) << " " << (f.rel == Formula::Rel::Eq ? "=" : ">")
               << " 0\n";
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            os << pad << (f.kind == Formula::Kind::And ? "and" : "or") << "\n";
            for (auto& k : f.kids) formula_prenex(k, vars, indent + 1, os);
            return;
        case Formula::Kind::Not:
            os << pad << "not\n";
            formula_prenex(f.kids[0], vars, indent + 1, os);
            return;
    }
}

}  // namespace

bool Sentence::eval(const Vec& point, const BigReal& tol, Precision p) const {
    if (point.size() != vars.size()) throw Error("DimensionMismatch", "sentence point dimension mismatch");
    std::vector<uint32_t> maxexp(vars.size(), 0);
    collect_max_exp(body, maxexp);
    std::vector<std::vector<BigReal>> powers(vars.size());
    for (uint32_t v = 0; v < vars.size(); ++v) {
        powers[v].resize(maxexp[v] + 1, BigReal(1, p));
        for (uint32_t e = 1; e <= maxexp[v]; ++e) powers[v][e] = powers[v][e - 1] * point[v];
    }
    return eval_formula(body, powers, tol, p);
}

std::string Sentence::to_smt2() const {
    std::ostringstream os;
    os << "(set-logic QF_NRA)\n";
    for (auto& v : vars) os << "(declare-const " << v << " Real)\n";
    std::ostringstream b;
    formula_smt2(body, vars, b);
    os << "(assert " << b.str() << ")\n(check-sat)\n";
    return os.str();
}

std::string Sentence::to_prenex_text() const {
    std::ostringstream os;
    os << "exists";
    for (auto& v : vars) os << " " << v;
    os << "\n";
    formula_prenex(body, vars, 0, os);
    return os.str();
}

}  // namespace acp
