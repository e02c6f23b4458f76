#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "motivic/product.hpp"

namespace motivic {

struct BasisPairBefore {
    bool operator()(const std::pair<OpBasis, OpBasis>& a,
                    const std::pair<OpBasis, OpBasis>& b) const {
        int c = op_basis_cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return op_basis_cmp(a.second, b.second) < 0;
    }
};

// Products of all ordered pairs of basis elements whose topological degree is
// at most max_p, keyed by the factor pair.
struct ConstantsTable {
    std::int64_t max_p = 0;
    std::map<std::pair<OpBasis, OpBasis>, OpElement, BasisPairBefore> entries;

    friend bool operator==(const ConstantsTable&, const ConstantsTable&) = default;
};

ConstantsTable constants_table(std::int64_t max_p);

// Plain-text format, UTF-8 with LF line endings:
//   motivic-milnor-constants v1 maxp=<n>
//   <E>|<R>*<E>|<R> := <element>
// with sequences rendered as "(a,b,...)" and the element in canonical text
// form. Throws IOFailure when the file cannot be written.
void save_table(const ConstantsTable& table, const std::string& path);

// Reads the format written by save_table. Throws IOFailure on filesystem
// errors, VersionMismatch when the header line is not the v1 header, and
// CorruptTable on malformed entries or when a spot check (every 100th entry,
// including the first) disagrees with a fresh recomputation of the product.
ConstantsTable load_table(const std::string& path);

}  // namespace motivic
