#ifndef ACD_CATALOG_HPP
#define ACD_CATALOG_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acd/codefile.hpp"

namespace acd {

/**
 * One bundled reference code: the file holding its published generator matrix
 * plus every property recorded for it. All recorded properties are recomputed
 * by verify_catalog except automorphism orders of codes longer than the
 * brute-force limit, which stay recorded-but-unverified metadata.
 */
struct CatalogEntry {
    std::string id;
    std::string file;
    CodeKind kind = CodeKind::Additive;
    size_t n = 0;
    size_t k = 0;  // additive k / GF(4) dimension / binary dimension, by kind
    std::optional<size_t> d;
    std::optional<bool> trh_acd;
    std::optional<bool> tre_acd;
    std::optional<bool> trh_self_dual;
    std::optional<bool> lcd;           // binary kind
    std::optional<bool> self_dual;     // binary kind
    std::optional<bool> euclid_lcd;    // linear4 kind
    std::optional<bool> linear;        // additive kind: GF(4)-linearity
    std::optional<std::map<size_t, uint64_t>> weights;  // full: unlisted = 0
    std::optional<uint64_t> paut;                       // recomputed (n <= 8)
    std::string paut_recorded;                          // beyond brute force
};

const std::vector<CatalogEntry>& catalog();

/// "A0=1 A4=17 A5=8 A6=6" (nonzero counts only).
std::string weight_distribution_string(const std::vector<uint64_t>& dist);

struct CheckResult {
    enum class Status { Pass, Fail, Skip };
    std::string id;
    std::string check;
    std::string expected;
    std::string got;
    Status status = Status::Pass;
};

/**
 * Recomputes every recorded property of every catalog entry (or just `only`)
 * from the data files in `data_dir` and diffs against the records. Includes
 * the cross-code identities: ex2_c4 = 1*ex2_c + w*ex2_d, F2^4 = ex2_c + ex2_d
 * directly, and ex3_c2 = fold(ex3_c1).
 */
std::vector<CheckResult> verify_catalog(const std::string& data_dir, const std::string& only = "");

bool all_passed(const std::vector<CheckResult>& results);

/// One aligned line per check plus a summary; returns all_passed.
bool print_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace acd

#endif
