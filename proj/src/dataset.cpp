#include "liqlab/dataset.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "liqlab/errors.hpp"

namespace liqlab {

namespace {

constexpr std::array<std::string_view, 15> kSchema = {
    "org_id",          "year",
    "sectors",         "cash_revenues",
    "total_assets",    "fixed_assets",
    "current_assets",  "inventories",
    "accounts_receivable", "cash_equivalents",
    "fund_capital",    "long_term_debt",
    "short_term_debt", "accounts_payable",
    "net_result",
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

/// Splits one CSV line. Fields may be double-quoted; a doubled quote inside
/// a quoted field is a literal quote.
std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"' && trim(current).empty()) {
            quoted = true;
            current.clear();
        } else if (c == ',') {
            fields.push_back(std::string(trim(current)));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::string(trim(current)));
    return fields;
}

bool parse_double(std::string_view text, double& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_int(std::string_view text, int& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string> parse_sectors(std::string_view field) {
    std::set<std::string> labels;
    std::size_t start = 0;
    while (start <= field.size()) {
        const std::size_t end = field.find(';', start);
        const std::string_view part =
            trim(field.substr(start, end == std::string_view::npos
                                         ? std::string_view::npos
                                         : end - start));
        if (!part.empty()) labels.insert(std::string(part));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return {labels.begin(), labels.end()};
}

struct NumericFieldRef {
    std::string_view name;
    std::optional<double> OrgRecord::* member;
};

constexpr std::array<NumericFieldRef, 12> kNumericFields = {{
    {"cash_revenues", &OrgRecord::cash_revenues},
    {"total_assets", &OrgRecord::total_assets},
    {"fixed_assets", &OrgRecord::fixed_assets},
    {"current_assets", &OrgRecord::current_assets},
    {"inventories", &OrgRecord::inventories},
    {"accounts_receivable", &OrgRecord::accounts_receivable},
    {"cash_equivalents", &OrgRecord::cash_equivalents},
    {"fund_capital", &OrgRecord::fund_capital},
    {"long_term_debt", &OrgRecord::long_term_debt},
    {"short_term_debt", &OrgRecord::short_term_debt},
    {"accounts_payable", &OrgRecord::accounts_payable},
    {"net_result", &OrgRecord::net_result},
}};

std::string format_value(double v) {
    // Whole values print without a decimal point so integer columns
    // round-trip at the text level; everything else uses the shortest
    // exact representation.
    if (v == std::floor(v) && std::abs(v) < 1e15)
        return fmt::format("{:.0f}", v);
    return fmt::format("{}", v);
}

}  // namespace

std::span<const std::string_view> csv_schema() { return kSchema; }

Dataset parse_csv(std::string_view text, std::string source_name) {
    Dataset ds;
    ds.provenance.source_path = std::move(source_name);

    // Strip a UTF-8 BOM if present.
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF")
        text.remove_prefix(3);

    std::vector<std::pair<std::size_t, std::string_view>> lines;  // (line no, text)
    {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no;
            if (!trim(line).empty()) lines.emplace_back(line_no, line);
            start = end + 1;
            if (end == text.size()) break;
        }
    }
    if (lines.empty()) throw LoadError("empty input: missing CSV header");

    const std::vector<std::string> header = split_fields(lines.front().second);
    std::map<std::string_view, std::size_t> position;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto known = std::find(kSchema.begin(), kSchema.end(), header[i]);
        if (known == kSchema.end())
            ds.provenance.warnings.push_back(
                fmt::format("ignoring unknown column \"{}\"", header[i]));
        else
            position[*known] = i;
    }
    for (const std::string_view name : kSchema)
        if (!position.count(name))
            throw LoadError(fmt::format("missing mandatory column \"{}\"", name));

    const auto cell = [&](const std::vector<std::string>& fields,
                          std::string_view name) -> std::string_view {
        return fields[position.at(name)];
    };

    std::set<std::pair<std::string, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [line_no, line] = lines[i];
        const auto reject = [&](std::string reason) {
            ds.rejects.push_back({line_no, std::move(reason)});
        };

        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != header.size()) {
            reject(fmt::format("field-count-mismatch: expected {} fields, got {}",
                               header.size(), fields.size()));
            continue;
        }

        OrgRecord rec;
        rec.org_id = std::string(cell(fields, "org_id"));
        if (rec.org_id.empty()) {
            reject("missing-org-id");
            continue;
        }

        const std::string_view year_text = cell(fields, "year");
        if (year_text.empty()) {
            reject("missing-year");
            continue;
        }
        if (!parse_int(year_text, rec.year)) {
            reject(fmt::format("year-parse: \"{}\"", year_text));
            continue;
        }
        if (rec.year < 1900 || rec.year > 2100) {
            reject(fmt::format("year-range: {}", rec.year));
            continue;
        }

        rec.sectors = parse_sectors(cell(fields, "sectors"));

        bool bad = false;
        for (const auto& field : kNumericFields) {
            const std::string_view raw = cell(fields, field.name);
            if (raw.empty()) continue;  // absent value
            double value = 0.0;
            if (!parse_double(raw, value)) {
                if (raw.find(',') != std::string_view::npos)
                    reject(fmt::format("comma-decimal-separator: {}", field.name));
                else
                    reject(fmt::format("numeric-parse: {} \"{}\"", field.name, raw));
                bad = true;
                break;
            }
            if (!std::isfinite(value)) {
                reject(fmt::format("non-finite: {}", field.name));
                bad = true;
                break;
            }
            rec.*(field.member) = value;
        }
        if (bad) continue;

        if (!seen.emplace(rec.org_id, rec.year).second) {
            reject(fmt::format("duplicate-org-year: ({}, {})", rec.org_id, rec.year));
            continue;
        }
        ds.records.push_back(std::move(rec));
    }

    ds.provenance.accepted = ds.records.size();
    ds.provenance.rejected = ds.rejects.size();
    return ds;
}

Dataset load_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LoadError(fmt::format("cannot open \"{}\" for reading", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str(), path.string());
}

std::string to_csv(std::span<const OrgRecord> records) {
    std::string out;
    for (std::size_t i = 0; i < kSchema.size(); ++i) {
        if (i) out += ',';
        out += kSchema[i];
    }
    out += '\n';
    for (const OrgRecord& rec : records) {
        out += rec.org_id;
        out += ',';
        out += std::to_string(rec.year);
        out += ',';
        for (std::size_t i = 0; i < rec.sectors.size(); ++i) {
            if (i) out += ';';
            out += rec.sectors[i];
        }
        for (const auto& field : kNumericFields) {
            out += ',';
            if (const auto& v = rec.*(field.member)) out += format_value(*v);
        }
        out += '\n';
    }
    return out;
}

Dataset filter(const Dataset& ds, const std::optional<std::string>& sector,
               std::optional<int> year) {
    Dataset out;
    out.provenance.source_path = ds.provenance.source_path;
    for (const OrgRecord& rec : ds.records) {
        if (sector && !rec.in_sector(*sector)) continue;
        if (year && rec.year != *year) continue;
        out.records.push_back(rec);
    }
    out.provenance.accepted = out.records.size();
    return out;
}

namespace {

std::optional<double> indicator_field(const IndicatorSet& set,
                                      std::string_view name) {
    if (name == "current_ratio") return set.current_ratio.value;
    if (name == "quick_ratio") return set.quick_ratio.value;
    if (name == "cash_ratio") return set.cash_ratio.value;
    if (name == "receivables_period") return set.receivables_period.value;
    if (name == "payables_period") return set.payables_period.value;
    if (name == "inventory_period") return set.inventory_period.value;
    if (name == "operating_cycle") return set.operating_cycle.value;
    if (name == "cash_cycle") return set.cash_cycle.value;
    if (name == "roa") return set.roa.value;
    if (name == "roe") return set.roe.value;
    return std::nullopt;
}

constexpr std::array<std::string_view, 10> kIndicatorNames = {
    "current_ratio",  "quick_ratio",      "cash_ratio",
    "receivables_period", "payables_period", "inventory_period",
    "operating_cycle", "cash_cycle",      "roa",
    "roe",
};

}  // namespace

const std::vector<std::string>& column_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& f : kNumericFields) v.emplace_back(f.name);
        for (const auto n : kIndicatorNames) v.emplace_back(n);
        return v;
    }();
    return names;
}

Sample column(const Dataset& ds, std::string_view name,
              const IndicatorPolicy& policy) {
    const auto& names = column_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw ValidationError("column",
                              fmt::format("unknown field or indicator \"{}\"", name));

    const bool is_indicator =
        std::find(kIndicatorNames.begin(), kIndicatorNames.end(), name) !=
        kIndicatorNames.end();

    std::vector<double> values;
    values.reserve(ds.records.size());
    for (const OrgRecord& rec : ds.records) {
        std::optional<double> v;
        if (is_indicator) {
            v = indicator_field(compute_indicators(rec, policy), name);
        } else {
            for (const auto& field : kNumericFields)
                if (field.name == name) v = rec.*(field.member);
        }
        if (v) values.push_back(*v);
    }
    return Sample(std::move(values));
}

}  // namespace liqlab
