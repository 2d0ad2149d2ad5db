#pragma once

#include "bj/series.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bj {

enum class Component { life, nonlife, total };

[[nodiscard]] std::string to_string(Component c);
/// Accepts "life", "nonlife"/"non-life", "total". Throws InvalidArgument.
[[nodiscard]] Component parse_component(std::string_view text);

struct PremiumRecord {
    int year = 0;
    int quarter = 1;
    double life_premium = 0;
    double nonlife_premium = 0;
    double total_premium = 0;
    double gdp = 0;
    /// Period label as printed in the source, when the file carries one.
    std::string source_label;
};

/// Selected premium divided by GDP. Throws DataError for non-positive GDP.
[[nodiscard]] double compute_ipr(const PremiumRecord& record, Component component);

/// Header names of the columns the loader reads (matched case-insensitively).
struct CsvSchema {
    std::string period = "year_quarter";
    std::string life = "life_premium";
    std::string nonlife = "nonlife_premium";
    std::string total = "total_premium";
    std::string gdp = "gdp";
    /// Optional column with the verbatim source label.
    std::string source_label = "source_label";
};

struct Dataset {
    std::vector<PremiumRecord> records;
    /// Non-fatal findings, e.g. life + non-life not adding up to the total.
    std::vector<std::string> warnings;
};

/// Parses "2013_Q1" (also "2013 Q1", "2013-Q1"). Throws DataError.
[[nodiscard]] Period parse_quarter_label(std::string_view label);

/// Reads CSV text. `source` names the input in error messages.
[[nodiscard]] Dataset parse_csv(std::istream& in, const CsvSchema& schema = {}, std::string_view source = "input");

/// Throws DataError for unreadable, empty, malformed, duplicated or gapped input.
[[nodiscard]] Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema = {});

/// Throws DataError unless consecutive records are one quarter apart.
void check_contiguous(const std::vector<PremiumRecord>& records);

/// Quarterly series starting at the first record's period.
[[nodiscard]] TimeSeries to_timeseries(const std::vector<PremiumRecord>& records, Component component);

/// The bundled 39-quarter premium/GDP dataset, 2013 Q1 to 2022 Q3, as CSV text.
[[nodiscard]] std::string_view fixture_csv();
[[nodiscard]] Dataset load_fixture();

}  // namespace bj
