#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pdokit {

// Lowest q-power at which an identity's two sides disagree, with both
// coefficients rendered canonically (descending graded-lex monomial order).
struct CoeffMismatch {
    std::size_t power = 0;
    std::string expected;
    std::string actual;
    friend bool operator==(const CoeffMismatch&, const CoeffMismatch&) = default;
};

// Outcome of one named identity check. A mismatch always implies failure;
// a failure without a mismatch means the check aborted, with the reason in
// the note. Notes also record resolved conventions and seeds on success.
struct IdentityReport {
    std::string id;
    std::size_t truncation = 0;
    bool pass = false;
    std::optional<CoeffMismatch> first_mismatch;
    std::string note;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

// JSON shape: {id, truncation, pass, first_mismatch: {power, expected,
// actual} | null} plus "note" when nonempty.
nlohmann::json report_to_json(const IdentityReport& r);
IdentityReport report_from_json(const nlohmann::json& j);

// The individual checks. Each takes the truncation order (compare q-powers
// below it) and computes both sides by the routes documented in identities.cpp.
IdentityReport check_pdo_genfn(std::size_t order);
IdentityReport check_convolution(std::size_t order);
IdentityReport check_refine_x(std::size_t order);
IdentityReport check_andrews_rose(std::size_t order);
IdentityReport check_g_dissection(std::size_t order);
IdentityReport check_overpartition_dissection(std::size_t order);
IdentityReport check_root_identity(std::size_t order);
IdentityReport check_main_2dis(std::size_t order);
IdentityReport check_huffing(std::size_t trials, std::size_t order,
                             unsigned seed = 12345);
IdentityReport check_g2_special(std::size_t order);
IdentityReport check_gxgy_symmetric(std::size_t order);
IdentityReport check_p1_product(std::size_t order);
IdentityReport check_p2_product(std::size_t order);
IdentityReport check_p1p2_refine(std::size_t order);
IdentityReport check_cheby_xyuv(std::size_t order);
IdentityReport check_fa_identity(std::size_t order);
IdentityReport check_harness_selftest(std::size_t order);

// Registry entry: stable id, one-line summary, default truncation, runner.
struct CheckInfo {
    std::string id;
    std::string summary;
    std::size_t default_truncation = 0;
    std::function<IdentityReport(std::size_t)> run;
};

// All checks in their fixed reporting order.
const std::vector<CheckInfo>& check_registry();

bool is_known_check(const std::string& id);

// Run one registered check. Unknown ids throw std::invalid_argument; any
// exception escaping the check itself becomes a failed report whose note
// carries the reason.
IdentityReport run_check(const std::string& id,
                         std::optional<std::size_t> truncation = {});

// Run every registered check in registry order.
std::vector<IdentityReport> run_all(std::optional<std::size_t> truncation = {});

}  // namespace pdokit
