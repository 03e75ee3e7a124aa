#include <pdokit/partitions.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pdokit {

PDOPartition::PDOPartition(RunMap runs) : runs_(std::move(runs)) {
    for (const auto& [size, run] : runs_) {
        if (size == 0 || size % 2 == 0)
            throw std::invalid_argument("part size " + std::to_string(size) +
                                        " is not an odd positive integer");
        if (run.multiplicity == 0)
            throw std::invalid_argument("part size " + std::to_string(size) +
                                        " has zero multiplicity");
        if (run.designated < 1 || run.designated > run.multiplicity)
            throw std::invalid_argument("part size " + std::to_string(size) +
                                        " has mark position " +
                                        std::to_string(run.designated) +
                                        " outside 1.." +
                                        std::to_string(run.multiplicity));
    }
}

unsigned PDOPartition::weight() const {
    unsigned w = 0;
    for (const auto& [size, run] : runs_) w += size * run.multiplicity;
    return w;
}

PDOPartition PDOPartition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "\xE2\x88\x85") return {};  // "∅"

    // size -> (copies seen so far, position of the marked copy or 0)
    std::map<unsigned, std::pair<unsigned, unsigned>> acc;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t plus = s.find('+', pos);
        std::string part = s.substr(pos, plus == std::string::npos ? std::string::npos
                                                                   : plus - pos);
        if (part.empty()) throw ParseError("empty part in partition text");
        bool marked = false;
        if (part.back() == '\'') {
            marked = true;
            part.pop_back();
        }
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed part \"" + part + "\"");
        unsigned long size;
        try {
            size = std::stoul(part);
        } catch (const std::out_of_range&) {
            throw ParseError("part size " + part + " out of range");
        }
        if (size == 0) throw ParseError("part size 0 is not allowed");
        if (size % 2 == 0)
            throw ParseError("part size " + std::to_string(size) + " is even");
        auto& slot = acc[static_cast<unsigned>(size)];
        ++slot.first;
        if (marked) {
            if (slot.second != 0)
                throw ParseError("part size " + std::to_string(size) +
                                 " has more than one mark");
            slot.second = slot.first;
        }
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }

    RunMap runs;
    for (const auto& [size, slot] : acc) {
        if (slot.second == 0)
            throw ParseError("part size " + std::to_string(size) + " has no mark");
        runs.emplace(size, PartRun{slot.first, slot.second});
    }
    return PDOPartition(std::move(runs));
}

std::string PDOPartition::to_string() const {
    if (runs_.empty()) return "\xE2\x88\x85";
    std::string out;
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
        const auto& [size, run] = *it;
        for (unsigned j = 1; j <= run.multiplicity; ++j) {
            if (!out.empty()) out += '+';
            out += std::to_string(size);
            if (j == run.designated) out += '\'';
        }
    }
    return out;
}

PDOStats pdo_stats(const PDOPartition& p) {
    PDOStats st;
    st.weight = p.weight();
    for (const auto& [size, run] : p.runs()) {
        ++st.distinct_sizes;
        if (run.multiplicity % 2 != 0) ++st.odd_multiplicity_sizes;
    }
    return st;
}

PairStats pair_stats(const PDOPair& p) {
    PairStats st;
    st.weight = p.mu.weight() + p.nu.weight();
    st.distinct_sizes = static_cast<unsigned>(p.mu.runs().size() + p.nu.runs().size());
    for (const auto& [size, run] : p.mu.runs())
        if (p.nu.runs().count(size)) ++st.shared_sizes;
    return st;
}

std::string pair_to_string(const PDOPair& p) {
    return "(" + p.mu.to_string() + " | " + p.nu.to_string() + ")";
}

PDOPair parse_pair(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("pair text must look like \"(mu | nu)\"");
    s = s.substr(1, s.size() - 2);
    const std::size_t bar = s.find('|');
    if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos)
        throw ParseError("pair text needs exactly one \"|\" separator");
    return PDOPair{PDOPartition::parse(s.substr(0, bar)),
                   PDOPartition::parse(s.substr(bar + 1))};
}

namespace {

// Expand every mark assignment of one fixed shape (sizes with multiplicities).
void expand_marks(const std::vector<std::pair<unsigned, unsigned>>& shape,
                  std::vector<PDOPartition>& out) {
    std::vector<unsigned> marks(shape.size(), 1);
    for (;;) {
        PDOPartition::RunMap runs;
        for (std::size_t i = 0; i < shape.size(); ++i)
            runs.emplace(shape[i].first, PartRun{shape[i].second, marks[i]});
        out.push_back(PDOPartition(std::move(runs)));
        std::size_t i = marks.size();
        while (i > 0 && marks[i - 1] == shape[i - 1].second) {
            marks[i - 1] = 1;
            --i;
        }
        if (i == 0) break;
        ++marks[i - 1];
    }
}

void extend_shape(unsigned remaining, unsigned max_size,
                  std::vector<std::pair<unsigned, unsigned>>& shape,
                  std::vector<PDOPartition>& out) {
    if (remaining == 0) {
        expand_marks(shape, out);
        return;
    }
    if (max_size == 0) return;
    unsigned s = std::min(max_size, remaining);
    if (s % 2 == 0) --s;
    for (;; s -= 2) {
        for (unsigned mult = 1; mult * s <= remaining; ++mult) {
            shape.emplace_back(s, mult);
            extend_shape(remaining - mult * s, s >= 2 ? s - 2 : 0, shape, out);
            shape.pop_back();
        }
        if (s == 1) break;
    }
}

}  // namespace

std::vector<PDOPartition> enumerate_pdo(unsigned weight) {
    std::vector<PDOPartition> out;
    std::vector<std::pair<unsigned, unsigned>> shape;
    extend_shape(weight, weight, shape, out);
    return out;
}

PolySeries p1_enumerated(std::size_t order) {
    PolySeries s(order);
    for (std::size_t n = 0; n < order; ++n) {
        MultiPoly acc;
        for (const auto& p : enumerate_pdo(static_cast<unsigned>(n))) {
            const PDOStats st = pdo_stats(p);
            acc += MultiPoly::monomial(st.distinct_sizes, st.odd_multiplicity_sizes);
        }
        s.set_coeff(n, std::move(acc));
    }
    return s;
}

PolySeries p2_enumerated(std::size_t order) {
    // Cache, per weight, just what the pair statistic needs.
    struct Item {
        std::vector<unsigned> sizes;  // ascending
        unsigned distinct = 0;
    };
    std::vector<std::vector<Item>> by_weight(order);
    for (std::size_t w = 0; w < order; ++w) {
        for (const auto& p : enumerate_pdo(static_cast<unsigned>(w))) {
            Item it;
            for (const auto& [size, run] : p.runs()) it.sizes.push_back(size);
            it.distinct = static_cast<unsigned>(it.sizes.size());
            by_weight[w].push_back(std::move(it));
        }
    }
    PolySeries s(order);
    for (std::size_t w = 0; w < order; ++w) {
        MultiPoly acc;
        for (std::size_t a = 0; a <= w; ++a) {
            for (const Item& mu : by_weight[a]) {
                for (const Item& nu : by_weight[w - a]) {
                    unsigned shared = 0;
                    std::size_t i = 0, j = 0;
                    while (i < mu.sizes.size() && j < nu.sizes.size()) {
                        if (mu.sizes[i] < nu.sizes[j]) ++i;
                        else if (nu.sizes[j] < mu.sizes[i]) ++j;
                        else ++shared, ++i, ++j;
                    }
                    acc += MultiPoly::monomial(mu.distinct + nu.distinct, 2 * shared);
                }
            }
        }
        s.set_coeff(w, std::move(acc));
    }
    return s;
}

namespace {

// Shared knapsack-style pass: process candidate sizes ascending; row j
// accumulates selections of j distinct sizes, each contributing its copy
// count as a multiplicative weight. Updating rows top-down keeps each size
// used at most once per selection.
std::vector<IntSeries> weighted_selection_table(unsigned k_max, std::size_t order,
                                                std::size_t first_size,
                                                std::size_t size_step) {
    std::vector<std::vector<Int>> dp(k_max + 1, std::vector<Int>(order));
    if (order > 0) dp[0][0] = 1;
    for (std::size_t s = first_size; s < order; s += size_step) {
        for (unsigned j = k_max; j >= 1; --j) {
            auto& cur = dp[j];
            const auto& prev = dp[j - 1];
            for (std::size_t t = 1; t * s < order; ++t) {
                const Int weight(static_cast<unsigned long>(t));
                for (std::size_t n = t * s; n < order; ++n) {
                    const Int& p = prev[n - t * s];
                    if (!p.is_zero()) cur[n] += p * weight;
                }
            }
        }
    }
    std::vector<IntSeries> rows;
    rows.reserve(k_max + 1);
    for (unsigned j = 0; j <= k_max; ++j) {
        IntSeries row(order);
        for (std::size_t n = 0; n < order; ++n) row.set_coeff(n, std::move(dp[j][n]));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<IntSeries> ck_series_table(unsigned k_max, std::size_t order) {
    return weighted_selection_table(k_max, order, 1, 2);
}

IntSeries ck_enumerated(unsigned k, std::size_t order) {
    return std::move(ck_series_table(k, order)[k]);
}

std::vector<IntSeries> ak_series_table(unsigned k_max, std::size_t order) {
    return weighted_selection_table(k_max, order, 1, 1);
}

IntSeries ak_enumerated(unsigned k, std::size_t order) {
    if (k == 0)
        throw std::invalid_argument("ak_enumerated: k must be at least 1");
    return std::move(ak_series_table(k, order)[k]);
}

PDOPair bijection_forward(const PDOPartition& p) {
    PDOPartition::RunMap mu, nu;
    for (const auto& [size, run] : p.runs()) {
        if (run.multiplicity % 2 != 0)
            throw OddMultiplicity("part size " + std::to_string(size) + " occurs " +
                                  std::to_string(run.multiplicity) + " times");
        const unsigned m = run.multiplicity / 2;
        if (run.designated <= m)
            mu.emplace(size, PartRun{m, run.designated});
        else
            nu.emplace(size, PartRun{m, run.designated - m});
    }
    return PDOPair{PDOPartition(std::move(mu)), PDOPartition(std::move(nu))};
}

PDOPartition bijection_inverse(const PDOPair& p) {
    PDOPartition::RunMap runs;
    for (const auto& [size, run] : p.mu.runs())
        runs.emplace(size, PartRun{2 * run.multiplicity, run.designated});
    for (const auto& [size, run] : p.nu.runs()) {
        auto [it, inserted] = runs.emplace(
            size, PartRun{2 * run.multiplicity, run.multiplicity + run.designated});
        if (!inserted)
            throw SharedPartSize("part size " + std::to_string(size) +
                                 " appears on both sides");
    }
    return PDOPartition(std::move(runs));
}

namespace {

void require_wedge(unsigned n, unsigned m) {
    if (m < 1 || n <= m)
        throw NotInDomain("(" + std::to_string(n) + ", " + std::to_string(m) +
                          ") is outside the wedge n > m >= 1");
}

}  // namespace

std::pair<unsigned, unsigned> fe_map(unsigned n, unsigned m) {
    require_wedge(n, m);
    return {n + m, n - m};
}

std::pair<unsigned, unsigned> fo_map(unsigned n, unsigned m) {
    require_wedge(n, m);
    return {n + m - 1, n - m};
}

}  // namespace pdokit
