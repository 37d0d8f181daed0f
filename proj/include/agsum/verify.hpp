#ifndef AGSUM_VERIFY_HPP
#define AGSUM_VERIFY_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "agsum/resolution.hpp"

namespace agsum {

struct VerifyOptions {
    std::uint64_t seed = 1;
    unsigned instances = 25;
    std::uint32_t prime = kDefaultPrime;
    unsigned max_total_vars = 8;
    OracleLimits limits{};
};

struct VerifyInstance {
    unsigned index = 0;
    std::string description;  // "r=2 e=4 n=(2,3) dense"
    std::vector<std::string> dual_generators;
    bool fiber_product_ok = false;
    bool connected_sum_ok = false;
    std::vector<std::string> problems;  // cell diffs or exception text
};

struct VerifyReport {
    std::vector<VerifyInstance> instances;
    unsigned rejected_factors = 0;  // drawn forms whose annihilator had linear forms

    bool passed() const;
    unsigned failures() const;
};

/// Random multi-factor instances over GF(prime): random dual generators of a
/// common degree e in 3..5, r in {2,3} factors with 1..3 variables each. For
/// every instance the fiber product and connected sum Betti tables predicted
/// from the oracle factor tables are compared with the oracle on the
/// constructed algebra. Same options, same instances.
VerifyReport run_verify(const VerifyOptions& options, std::ostream* log = nullptr);

}  // namespace agsum

#endif
