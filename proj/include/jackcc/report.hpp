#pragma once

#include "jackcc/connection.hpp"
#include "jackcc/matchings.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jackcc {

enum class Format { text, json, csv };

/// "text", "json" or "csv"; throws UnsupportedFormat.
Format parse_format(std::string_view name);

/// Descending, compact: "2β²+β+1", "-3α+2", "0".
std::string pretty(const AlphaPoly & p, std::string_view var = "α");
/// Pulls out the content and all rational linear factors: "2α²(α+1)".
std::string pretty_factored(const AlphaPoly & p, std::string_view var = "α");
/// "c⁵₅₅" for one-part lambda with small n, "c^(2,1)_33" style otherwise.
std::string coefficient_label(std::string_view symbol, const Partition & lambda);

struct Check {
    std::string description;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string suite;
    int min_n = 1;
    int max_n = 0;
    std::vector<Check> checks;
    double elapsed_ms = 0;

    bool passed() const;
    std::size_t failures() const;
};

/// Suite names in the order `verify --suite` lists them.
const std::vector<std::string> & suite_names();
/// Default max_n for a suite; throws UnknownSuite.
int default_max_n(std::string_view suite);

/// Runs a bundled suite.  Checks are computed on `threads` workers and
/// assembled in a fixed order.  Throws UnknownSuite and DegreeTooLarge.
VerificationReport run_suite(std::string_view name, int max_n, int threads = 1);

/* Payloads accepted by render / emit. */

struct PartitionList {
    int n = 0;
    std::vector<Partition> partitions;
};

struct JackRow {
    Partition lambda;
    PSumVector row;
};

struct CoeffReport {
    std::string label;   // e.g. "a^(3)_{(3),(3)}"
    CoeffResult result;
    bool prefer_beta = false;   // text shows the form in b = a - 1
};

struct NnTable {
    int n = 0;
    std::vector<std::pair<Partition, AlphaPoly>> rows;   // alpha form
};

struct MatchingListing {
    WeightedMatchingSet set;
    bool weights = false;
};

struct RenderOptions {
    bool timing = false;   // include elapsed time in reports
};

std::string render(const VerificationReport & r, Format f, const RenderOptions & o = {});
std::string render(const PartitionList & p, Format f);
std::string render(const JackRow & row, Format f);
std::string render(const JackTable & t, Format f);
std::string render(const CoeffReport & c, Format f);
std::string render(const NnTable & t, Format f);
std::string render(const MatchingListing & m, Format f);

/// Writes text to `path`, or stdout when absent.  Throws IoError.
void write_output(const std::string & text, const std::optional<std::string> & path);

template <class Payload>
void emit(const Payload & payload, Format f, const std::optional<std::string> & path = std::nullopt)
{
    write_output(render(payload, f), path);
}

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

} // namespace jackcc
