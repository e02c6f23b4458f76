#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/dual.hpp"
#include "motivic/product.hpp"
#include "motivic/seq.hpp"

namespace motivic {

// One multiplicative factor of a parsed term. A coefficient factor carries
// its exponent; a basis factor carries the Q and/or P part (P stored with
// the index-0 slot already prepended as zero).
struct Factor {
    enum class Kind { tau, rho, one, zero, basis };
    Kind kind = Kind::one;
    Nat exp = 1;
    SeqE q{};
    Seq p{};
};

struct Term {
    std::vector<Factor> factors;
};

struct Expr {
    std::vector<Term> terms;
};

// Parses the element grammar:
//   element := term { "+" term }
//   term    := factor { ["*"] factor }
//   factor  := coeff | qp
//   coeff   := "tau" ["^" nat] | "rho" ["^" nat] | "1" | "0"
//   qp      := "Q" "(" natlist ")" ["P" "(" natlist ")"]
//            | "Q" nat ["P" "(" natlist ")"]        (Q i is the i-th generator)
//            | "P" "(" natlist ")"
// Q-lists start at index 0; P-lists start at index 1. A Q-part directly
// followed by a P-part is a single basis factor. Throws SyntaxError with the
// byte offset and the expected tokens on malformed input.
Expr parse(std::string_view text);

// Evaluates a parsed expression to a fully multiplied element. Coefficient
// factors accumulate until the next basis factor; a term's leading
// accumulated tau-power becomes a left coefficient, while tau-powers between
// basis factors route through the central-coefficient product.
OpElement eval(const Expr& expr);

OpElement eval_text(std::string_view text);

enum class Format { text, json, latex };

std::string print(const OpElement& x, Format f);
std::string print(const DualElement& x, Format f);
std::string print(const TensorElement& x, Format f);

// Rebuilds an element from the JSON produced by print(x, Format::json).
OpElement op_from_json(const std::string& text);

// Parses a bare exponent sequence such as "2,1", "(2,1)" or "" (empty).
Seq parse_seq(std::string_view text);

// Parses text that must denote a single basis element with coefficient one.
OpBasis parse_basis(std::string_view text);

// Renders the leaf multiset of the square-rewrite tree for tau^S, one
// "S|R xCOUNT" line per leaf in lexicographic order.
std::string print_tree_leaves(const Seq& s);

}  // namespace motivic
