#ifndef SAITO_REPORT_HPP
#define SAITO_REPORT_HPP

#include <saito/cohomology.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace saito {

using nlohmann::json;

struct Source {
    FamilySpec spec;
    std::optional<FreeArrangement> built;   // families
    std::optional<LoadedArrangement> file;  // --file
    std::string label() const;
    const Arrangement& arrangement() const;
    // std::nullopt for a file without a basis
    const DerivationBasis* basis() const;
};

Source family_source(const FamilySpec& spec);
Source file_source(const std::string& path);

json bounds_json(const Bounds& b);
// {computation, family, n, r, bounds, per_weight, total, stabilized, paper_expected, match}
json graded_json(const GradedReport& g, const Source& src, const Bounds& b,
                 std::optional<std::size_t> paper_expected = std::nullopt, std::optional<bool> match = std::nullopt);

json info_json(const Source& src);
// Saito criterion plus the triangular, Bezout and orthogonality conditions; "pass" when all hold.
json check_json(const Source& src);

// space in {h0su, h1su, ce-s, ce-h1, coker, predict-h1, center}; q < 0 picks the default degree.
json cohomology_json(const std::string& space, const Source& src, const Bounds& b, int q = -1);

struct SuiteItem {
    std::string name;
    json expected, actual;
    bool pass = false;
    // Reported but not counted, e.g. claimed constants that differ from the computed ones.
    bool informational = false;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteItem> items;
    bool pass() const;
};

// "all" and "paper" expand to every suite that applies to the family.
const std::vector<std::string>& suite_names();
std::vector<SuiteResult> run_suite(const std::string& suite, const Source& src, const Bounds& b, std::uint64_t seed);
json verify_json(const std::vector<SuiteResult>& results, const Source& src, const Bounds& b, std::uint64_t seed);

// Key/value rendering of a report that keeps every JSON field.
std::string render_text(const json& report);

}  // namespace saito

#endif
