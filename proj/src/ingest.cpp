#include "bj/ingest.hpp"

#include "bj/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <boost/tokenizer.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

namespace bj {

std::string to_string(Component c) {
    switch (c) {
        case Component::life: return "life";
        case Component::nonlife: return "nonlife";
        case Component::total: return "total";
    }
    return "total";
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string label_of(int year, int quarter) { return fmt::format("{}_Q{}", year, quarter); }

int quarter_index(int year, int quarter) { return year * 4 + (quarter - 1); }

// Plain decimal with optional comma thousands separators and a trailing '%'.
std::optional<double> parse_number(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.back() == '%') {
        text.remove_suffix(1);
        text = trim(text);
    }
    std::string digits;
    digits.reserve(text.size());
    for (char ch : text) {
        if (ch != ',') digits.push_back(ch);
    }
    if (digits.empty()) {
        return std::nullopt;
    }
    double value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;

std::vector<std::string> split_row(const std::string& line) {
    // Only quotes are special; backslashes in currency data are not escapes.
    boost::escaped_list_separator<char> sep(std::string(), std::string(","), std::string("\""));
    Tokenizer tok(line, sep);
    return {tok.begin(), tok.end()};
}

}  // namespace

Component parse_component(std::string_view text) {
    const auto t = lower(trim(text));
    if (t == "life") return Component::life;
    if (t == "nonlife" || t == "non-life" || t == "non_life") return Component::nonlife;
    if (t == "total") return Component::total;
    throw InvalidArgument(fmt::format("unknown component '{}' (expected total, life or nonlife)", text));
}

double compute_ipr(const PremiumRecord& record, Component component) {
    if (!(record.gdp > 0.0)) {
        throw DataError(fmt::format("{}: GDP must be positive, got {}", label_of(record.year, record.quarter),
                                    record.gdp));
    }
    switch (component) {
        case Component::life: return record.life_premium / record.gdp;
        case Component::nonlife: return record.nonlife_premium / record.gdp;
        case Component::total: return record.total_premium / record.gdp;
    }
    return record.total_premium / record.gdp;
}

Period parse_quarter_label(std::string_view label) {
    const auto t = trim(label);
    auto fail = [&] { return DataError(fmt::format("'{}' is not a quarter label of the form YYYY_Qn", label)); };
    if (t.size() != 7 || (t[4] != '_' && t[4] != ' ' && t[4] != '-') || (t[5] != 'Q' && t[5] != 'q')) {
        throw fail();
    }
    int year = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + 4, year);
    if (ec != std::errc{} || ptr != t.data() + 4) {
        throw fail();
    }
    const int quarter = t[6] - '0';
    if (quarter < 1 || quarter > 4) {
        throw fail();
    }
    return {year, quarter};
}

Dataset parse_csv(std::istream& in, const CsvSchema& schema, std::string_view source) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        if (!trim(line).empty()) {
            header = split_row(line);
            break;
        }
    }
    if (header.empty()) {
        throw DataError(fmt::format("{}: empty input", source));
    }

    auto column = [&](const std::string& name, bool required) -> std::optional<std::size_t> {
        const auto want = lower(trim(name));
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (lower(trim(header[i])) == want) return i;
        }
        if (required) {
            throw DataError(fmt::format("{}: header has no '{}' column", source, name));
        }
        return std::nullopt;
    };
    const auto c_period = *column(schema.period, true);
    const auto c_life = *column(schema.life, true);
    const auto c_nonlife = *column(schema.nonlife, true);
    const auto c_total = *column(schema.total, true);
    const auto c_gdp = *column(schema.gdp, true);
    const auto c_label = column(schema.source_label, false);

    Dataset ds;
    std::vector<std::size_t> lines;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        std::vector<std::string> cells;
        try {
            cells = split_row(line);
        } catch (const boost::escaped_list_error& e) {
            throw DataError(fmt::format("{}: line {}: malformed CSV ({})", source, line_no, e.what()));
        }
        if (cells.size() < header.size()) {
            throw DataError(fmt::format("{}: line {}: expected {} columns, found {}", source, line_no,
                                        header.size(), cells.size()));
        }
        auto number = [&](std::size_t col) {
            const auto v = parse_number(cells[col]);
            if (!v) {
                throw DataError(fmt::format("{}: line {}, column {} ({}): '{}' is not a number", source, line_no,
                                            col + 1, header[col], cells[col]));
            }
            return *v;
        };

        PremiumRecord r;
        try {
            const auto p = parse_quarter_label(cells[c_period]);
            r.year = p.year;
            r.quarter = p.period;
        } catch (const DataError& e) {
            throw DataError(fmt::format("{}: line {}, column {} ({}): {}", source, line_no, c_period + 1,
                                        header[c_period], e.what()));
        }
        r.life_premium = number(c_life);
        r.nonlife_premium = number(c_nonlife);
        r.total_premium = number(c_total);
        r.gdp = number(c_gdp);
        r.source_label = c_label ? std::string(trim(cells[*c_label])) : label_of(r.year, r.quarter);
        if (!(r.gdp > 0.0)) {
            throw DataError(fmt::format("{}: line {}, column {} ({}): GDP must be positive", source, line_no,
                                        c_gdp + 1, header[c_gdp]));
        }
        if (r.total_premium < 0.0) {
            throw DataError(fmt::format("{}: line {}, column {} ({}): negative total premium", source, line_no,
                                        c_total + 1, header[c_total]));
        }
        const double gap = std::abs(r.life_premium + r.nonlife_premium - r.total_premium);
        if (gap > 1e-3 * std::max(std::abs(r.total_premium), 1.0)) {
            ds.warnings.push_back(fmt::format("line {} ({}): life + non-life differs from the total by {:.0f}",
                                              line_no, label_of(r.year, r.quarter), gap));
        }
        for (std::size_t i = 0; i < ds.records.size(); ++i) {
            if (ds.records[i].year == r.year && ds.records[i].quarter == r.quarter) {
                throw DataError(fmt::format("{}: duplicate period {} on lines {} and {}", source,
                                            label_of(r.year, r.quarter), lines[i], line_no));
            }
        }
        ds.records.push_back(std::move(r));
        lines.push_back(line_no);
    }
    if (ds.records.empty()) {
        throw DataError(fmt::format("{}: no data rows", source));
    }
    check_contiguous(ds.records);
    return ds;
}

Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) {
        throw DataError(fmt::format("cannot open '{}'", path.string()));
    }
    return parse_csv(in, schema, path.string());
}

void check_contiguous(const std::vector<PremiumRecord>& records) {
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& a = records[i - 1];
        const auto& b = records[i];
        const int ia = quarter_index(a.year, a.quarter);
        const int ib = quarter_index(b.year, b.quarter);
        if (ib <= ia) {
            throw DataError(fmt::format("periods out of order: {} follows {}", label_of(b.year, b.quarter),
                                        label_of(a.year, a.quarter)));
        }
        if (ib != ia + 1) {
            std::vector<std::string> missing;
            for (int k = ia + 1; k < ib; ++k) {
                missing.push_back(label_of(k / 4, k % 4 + 1));
            }
            throw DataError(fmt::format("gap between {} and {}: missing {}", label_of(a.year, a.quarter),
                                        label_of(b.year, b.quarter), fmt::join(missing, ", ")));
        }
    }
}

TimeSeries to_timeseries(const std::vector<PremiumRecord>& records, Component component) {
    if (records.empty()) {
        throw DataError("no records to convert");
    }
    check_contiguous(records);
    std::vector<double> values;
    values.reserve(records.size());
    for (const auto& r : records) {
        values.push_back(compute_ipr(r, component));
    }
    return TimeSeries(std::move(values), {records.front().year, records.front().quarter}, 4);
}

Dataset load_fixture() {
    std::istringstream in{std::string(fixture_csv())};
    return parse_csv(in, {}, "bundled fixture");
}

}  // namespace bj
