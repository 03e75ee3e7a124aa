// Command-line front end. Exit codes: 0 success, 1 a verified identity
// failed, 2 usage/parse/precondition errors.

#include <cstddef>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <pdokit/bigint.hpp>
#include <pdokit/errors.hpp>
#include <pdokit/identities.hpp>
#include <pdokit/partitions.hpp>
#include <pdokit/qfunctions.hpp>

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string report_line(const pdokit::IdentityReport& r) {
    std::string line = r.pass ? "[PASS] " : "[FAIL] ";
    line += r.id + " (truncation=" + std::to_string(r.truncation) + ")";
    if (r.first_mismatch) {
        line += "  first mismatch at q^" + std::to_string(r.first_mismatch->power) +
                ": expected " + r.first_mismatch->expected + ", actual " +
                r.first_mismatch->actual;
    }
    if (!r.note.empty()) line += "  [" + r.note + "]";
    return line;
}

int cmd_verify(const std::string& id, std::optional<std::size_t> truncation,
               const std::string& format) {
    std::vector<pdokit::IdentityReport> reports;
    if (id == "all") {
        reports = pdokit::run_all(truncation);
    } else {
        if (!pdokit::is_known_check(id)) {
            std::cerr << "unknown check id: " << id << "\nknown ids:";
            for (const auto& info : pdokit::check_registry())
                std::cerr << " " << info.id;
            std::cerr << " all\n";
            return 2;
        }
        reports.push_back(pdokit::run_check(id, truncation));
    }

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    if (format == "json") {
        if (id == "all") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) arr.push_back(pdokit::report_to_json(r));
            std::cout << arr.dump(2) << "\n";
        } else {
            std::cout << pdokit::report_to_json(reports.front()).dump(2) << "\n";
        }
    } else if (format == "csv") {
        std::cout << "id,truncation,pass,mismatch_power,expected,actual,note\n";
        for (const auto& r : reports) {
            std::cout << csv_escape(r.id) << "," << r.truncation << ","
                      << (r.pass ? "true" : "false") << ",";
            if (r.first_mismatch)
                std::cout << r.first_mismatch->power << ","
                          << csv_escape(r.first_mismatch->expected) << ","
                          << csv_escape(r.first_mismatch->actual);
            else
                std::cout << ",,";
            std::cout << "," << csv_escape(r.note) << "\n";
        }
    } else {
        for (const auto& r : reports) std::cout << report_line(r) << "\n";
        if (id == "all")
            std::cout << (all_pass ? "all checks passed" : "some checks FAILED")
                      << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_pdo_table(std::size_t max, const std::string& format) {
    const auto series = pdokit::pdo_counting_series(max + 1);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t n = 0; n <= max; ++n)
            arr.push_back({{"n", n}, {"count", pdokit::coeff_to_string(series.coeff(n))}});
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,count\n";
        for (std::size_t n = 0; n <= max; ++n)
            std::cout << n << "," << series.coeff(n) << "\n";
    } else {
        for (std::size_t n = 0; n <= max; ++n)
            std::cout << n << "\t" << series.coeff(n) << "\n";
    }
    return 0;
}

int cmd_enumerate(unsigned weight, const std::string& format) {
    const auto all = pdokit::enumerate_pdo(weight);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : all) arr.push_back(p.to_string());
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "partition\n";
        for (const auto& p : all) std::cout << csv_escape(p.to_string()) << "\n";
    } else {
        for (const auto& p : all) std::cout << p.to_string() << "\n";
        std::cout << "total: " << all.size() << "\n";
    }
    return 0;
}

int cmd_bijection_apply(const std::string& text) {
    const auto p = pdokit::PDOPartition::parse(text);
    std::cout << pdokit::pair_to_string(pdokit::bijection_forward(p)) << "\n";
    return 0;
}

int cmd_bijection_invert(const std::string& text) {
    const auto pair = pdokit::parse_pair(text);
    std::cout << pdokit::bijection_inverse(pair).to_string() << "\n";
    return 0;
}

int cmd_bijection_verify(unsigned weight) {
    std::size_t eligible = 0;
    std::set<std::string> images;
    for (const auto& p : pdokit::enumerate_pdo(weight)) {
        if (pdokit::pdo_stats(p).odd_multiplicity_sizes != 0) continue;
        ++eligible;
        const auto pair = pdokit::bijection_forward(p);
        if (pdokit::pair_stats(pair).weight * 2 != weight) {
            std::cerr << "weight not halved for " << p.to_string() << "\n";
            return 1;
        }
        if (pdokit::bijection_inverse(pair) != p) {
            std::cerr << "round trip failed for " << p.to_string() << "\n";
            return 1;
        }
        images.insert(pdokit::pair_to_string(pair));
    }
    if (images.size() != eligible) {
        std::cerr << "map is not injective at weight " << weight << "\n";
        return 1;
    }

    // Surjectivity: the image must be exactly the ordered pairs with
    // disjoint part-size sets, generated here independently of the map.
    std::set<std::string> expected;
    if (weight % 2 == 0) {
        const unsigned half = weight / 2;
        std::vector<std::vector<pdokit::PDOPartition>> by_weight;
        for (unsigned a = 0; a <= half; ++a)
            by_weight.push_back(pdokit::enumerate_pdo(a));
        for (unsigned a = 0; a <= half; ++a)
            for (const auto& mu : by_weight[a])
                for (const auto& nu : by_weight[half - a]) {
                    pdokit::PDOPair pr{mu, nu};
                    if (pdokit::pair_stats(pr).shared_sizes == 0)
                        expected.insert(pdokit::pair_to_string(pr));
                }
    }
    if (images != expected) {
        std::cerr << "image does not match the disjoint-size pairs at weight "
                  << weight << " (" << images.size() << " vs " << expected.size()
                  << ")\n";
        return 1;
    }
    std::cout << "weight " << weight << ": " << eligible
              << " evenly repeated partitions map onto all " << expected.size()
              << " disjoint-size pairs of weight " << weight / 2
              << "; all round trips check out\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series toolkit for marked odd-part partitions"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"text", "json", "csv"};

    auto* verify = app.add_subcommand("verify", "Run one named identity check, or all");
    std::string verify_id;
    std::size_t verify_trunc = 0;
    std::string verify_format = "text";
    verify->add_option("id", verify_id, "Check id, or 'all'")->required();
    auto* trunc_opt = verify->add_option("--truncation", verify_trunc,
                                         "Override the default truncation order");
    verify->add_option("--format", verify_format, "Output format")
        ->check(CLI::IsMember(formats));

    auto* table = app.add_subcommand("pdo-table", "Print counts of marked odd-part partitions");
    std::size_t table_max = 0;
    std::string table_format = "text";
    table->add_option("--max", table_max, "Largest weight to print")->required();
    table->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember(formats));

    auto* enumerate = app.add_subcommand("enumerate", "List all marked partitions of a weight");
    unsigned enum_weight = 0;
    std::string enum_format = "text";
    enumerate->add_option("--weight", enum_weight, "Weight to enumerate")->required();
    enumerate->add_option("--format", enum_format, "Output format")
        ->check(CLI::IsMember(formats));

    auto* bijection = app.add_subcommand("bijection", "Split evenly repeated partitions into pairs");
    bijection->require_subcommand(1);
    auto* apply = bijection->add_subcommand("apply", "Map a partition to its pair");
    std::string apply_text;
    apply->add_option("partition", apply_text, "Partition, e.g. \"3+3'+1'+1\"")->required();
    auto* invert = bijection->add_subcommand("invert", "Map a pair back to its partition");
    std::string invert_text;
    invert->add_option("pair", invert_text, "Pair, e.g. \"(1' | 3')\"")->required();
    auto* bverify = bijection->add_subcommand("verify", "Check the split at one weight exhaustively");
    unsigned bverify_weight = 0;
    bverify->add_option("--weight", bverify_weight, "Weight to check")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            std::optional<std::size_t> trunc;
            if (trunc_opt->count() > 0) trunc = verify_trunc;
            return cmd_verify(verify_id, trunc, verify_format);
        }
        if (app.got_subcommand(table)) return cmd_pdo_table(table_max, table_format);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(enum_weight, enum_format);
        if (app.got_subcommand(bijection)) {
            if (bijection->got_subcommand(apply)) return cmd_bijection_apply(apply_text);
            if (bijection->got_subcommand(invert)) return cmd_bijection_invert(invert_text);
            if (bijection->got_subcommand(bverify)) return cmd_bijection_verify(bverify_weight);
        }
    } catch (const pdokit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
