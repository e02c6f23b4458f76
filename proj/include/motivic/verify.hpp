#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motivic/product.hpp"

namespace motivic {

struct SuiteResult {
    std::string suite;
    std::size_t checks = 0;
    bool passed = true;
    std::string counterexample;  // first failing check, empty when passed
};

// Exhaustive rewrite-tree checks: leaf weight/degree bookkeeping, leaf-parity
// agreement with the closed-form coefficient, and agreement of the two
// simplifiers, over all S with nsum <= 8 supported in indices 0..3.
SuiteResult verify_tree();

// Closed-form coproduct against the generator-fold oracle, plus bidegree
// homogeneity of every coproduct term, for basis monomials of topological
// degree <= max_degree.
SuiteResult verify_coproduct(std::int64_t max_degree);

// Closed-form products against the pairing oracle and the direct double sum
// (n <= max_n), the exterior-generator identities, unit laws, rho-centrality,
// specialization compatibility, and tau-commutation under rho = 0.
SuiteResult verify_product(std::int64_t max_degree, Nat max_n = 2);

// Associativity on random single-term triples, coassociativity with the
// coefficient-transport rules, counit laws, and product homogeneity.
SuiteResult verify_axioms(std::int64_t max_degree, std::uint64_t seed = 0x5eedULL);

// which: "all" or one of tree|coproduct|product|axioms.
std::vector<SuiteResult> run_suites(const std::string& which, std::int64_t max_degree);

}  // namespace motivic
