#pragma once

#include "acp/polynomial.hpp"

namespace acp {

// Quantifier-free formula tree over polynomial atoms  p = 0  and  p > 0.
struct Formula {
    enum class Kind { Atom, And, Or, Not };
    enum class Rel { Eq, Gt };

    Kind kind = Kind::Atom;
    Rel rel = Rel::Eq;
    Poly poly;
    std::vector<Formula> kids;

    static Formula atom_eq(Poly p);
    static Formula atom_gt(Poly p);
    static Formula make_and(std::vector<Formula> kids);
    static Formula make_or(std::vector<Formula> kids);
    static Formula make_not(Formula f);

    size_t atom_count() const;
};

// Closed existential sentence: every variable in the body is quantified by
// the single outer block, coefficients are exact integers.
struct Sentence {
    std::vector<std::string> vars;
    Formula body;

    size_t atom_count() const { return body.atom_count(); }

    // truth at a numeric point: equalities hold within tol, strict
    // inequalities need margin beyond tol
    bool eval(const Vec& point, const BigReal& tol, Precision p) const;

    // SMT-LIB 2 (QF_NRA) with the existential block Skolemized into free constants
    std::string to_smt2() const;
    // plain-text prenex form: header line, then the matrix with one atom per line
    std::string to_prenex_text() const;
};

}  // namespace acp
