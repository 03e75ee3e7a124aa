#pragma once

#include <stdexcept>
#include <string>

namespace pdokit {

// Series inversion needs a constant term of +1 or -1 over the integers.
struct NonUnitConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when projecting a quadratic-extension element whose u-coefficient
// is nonzero; a symmetric expression failed to collapse.
struct NonSymmetricResidue : std::domain_error {
    using std::domain_error::domain_error;
};

// A factor handed to odd_index_product must have constant term 1.
struct FactorNotUnit : std::domain_error {
    using std::domain_error::domain_error;
};

// The pair-splitting bijection only accepts partitions in which every part
// size occurs an even number of times.
struct OddMultiplicity : std::domain_error {
    using std::domain_error::domain_error;
};

// The inverse bijection only accepts pairs with no part size in common.
struct SharedPartSize : std::domain_error {
    using std::domain_error::domain_error;
};

// Index maps f_e, f_o are defined on pairs (n, m) with n > m >= 1.
struct NotInDomain : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pdokit
