#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <pdokit/errors.hpp>
#include <pdokit/multipoly.hpp>
#include <pdokit/series.hpp>

namespace pdokit {

// One run of equal parts: how many copies there are and which copy (1-based,
// counted within the run) carries the designation mark.
struct PartRun {
    unsigned multiplicity = 1;
    unsigned designated = 1;
    friend bool operator==(const PartRun&, const PartRun&) = default;
    friend auto operator<=>(const PartRun&, const PartRun&) = default;
};

// A partition into odd parts where every distinct part size has exactly one
// marked occurrence. Canonical text form lists parts in non-increasing order
// with an apostrophe on the marked copy, e.g. "3+3'+1'+1"; the empty
// partition renders as "∅".
class PDOPartition {
public:
    using RunMap = std::map<unsigned, PartRun>;  // key: odd part size

    PDOPartition() = default;
    // Validates: sizes odd and positive, 1 <= designated <= multiplicity.
    explicit PDOPartition(RunMap runs);

    // Accepts parts in any order, ignores whitespace, and treats "" or "∅"
    // as the empty partition. The apostrophe marks the copy by its position
    // among equal parts in listing order. Rejects even or zero sizes and
    // sizes whose mark count is not exactly one, naming the offending size.
    static PDOPartition parse(const std::string& text);

    const RunMap& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    unsigned weight() const;

    std::string to_string() const;

    friend bool operator==(const PDOPartition&, const PDOPartition&) = default;
    friend auto operator<=>(const PDOPartition&, const PDOPartition&) = default;

private:
    RunMap runs_;
};

struct PDOStats {
    unsigned weight = 0;
    unsigned distinct_sizes = 0;          // part sizes present
    unsigned odd_multiplicity_sizes = 0;  // sizes occurring an odd number of times
    friend bool operator==(const PDOStats&, const PDOStats&) = default;
};

PDOStats pdo_stats(const PDOPartition& p);

// Ordered pair of marked partitions; text form "(mu | nu)".
struct PDOPair {
    PDOPartition mu;
    PDOPartition nu;
    friend bool operator==(const PDOPair&, const PDOPair&) = default;
};

struct PairStats {
    unsigned weight = 0;          // combined
    unsigned distinct_sizes = 0;  // summed over both components
    unsigned shared_sizes = 0;    // sizes present in both components
    friend bool operator==(const PairStats&, const PairStats&) = default;
};

PairStats pair_stats(const PDOPair& p);

std::string pair_to_string(const PDOPair& p);
PDOPair parse_pair(const std::string& text);

// Every marked odd-part partition of the given weight. Deterministic order:
// part sizes are chosen largest-first, multiplicities ascending, and the
// marks then advance like an odometer. Weight 0 yields the empty partition.
std::vector<PDOPartition> enumerate_pdo(unsigned weight);

// Coefficient of q^n: sum over all enumerated partitions of weight n of
// x^(distinct sizes) * y^(odd-multiplicity sizes).
PolySeries p1_enumerated(std::size_t order);

// Coefficient of q^n: sum over all ordered pairs with combined weight n of
// x^(combined distinct sizes) * y^(2 * shared sizes).
PolySeries p2_enumerated(std::size_t order);

// Coefficient of q^n: sum of multiplicity products over ways to write
// n = s_1*m_1 + ... + s_k*m_k with k distinct odd sizes s_i and m_i >= 1.
// k = 0 gives the constant series 1.
IntSeries ck_enumerated(unsigned k, std::size_t order);

// Rows 0..k_max of the above in one dynamic-programming pass.
std::vector<IntSeries> ck_series_table(unsigned k_max, std::size_t order);

// Same weighting with unrestricted (not necessarily odd) sizes; requires
// k >= 1. Row k starts at q^(k(k+1)/2).
IntSeries ak_enumerated(unsigned k, std::size_t order);

// Rows 0..k_max; row 0 is the empty-selection row, identically 1.
std::vector<IntSeries> ak_series_table(unsigned k_max, std::size_t order);

// Split a partition in which every size occurs an even number 2m of times
// into an ordered pair whose components carry m copies each: a mark at
// position i <= m stays on the first component at position i, otherwise it
// moves to the second at position i-m. Throws OddMultiplicity if any size
// occurs an odd number of times.
PDOPair bijection_forward(const PDOPartition& p);

// Exact inverse of the split; requires the two components to share no part
// size, else SharedPartSize.
PDOPartition bijection_inverse(const PDOPair& p);

// Index maps on the open wedge {(n, m) : n > m >= 1}. The first sends
// (n, m) -> (n+m, n-m), landing on same-parity pairs; the second sends
// (n, m) -> (n+m-1, n-m), landing on opposite-parity pairs. Both throw
// NotInDomain off the wedge.
std::pair<unsigned, unsigned> fe_map(unsigned n, unsigned m);
std::pair<unsigned, unsigned> fo_map(unsigned n, unsigned m);

}  // namespace pdokit
