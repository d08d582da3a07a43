#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liqlab/indicators.hpp"
#include "liqlab/stats.hpp"

namespace liqlab {

/// A rejected CSV row: 1-based file line number plus the reason code.
struct RejectedRow {
    std::size_t line;
    std::string reason;
};

struct Provenance {
    std::string source_path;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::vector<std::string> warnings;  // e.g. ignored extra columns
};

/// Validated organization-year records plus the load audit trail.
/// Immutable after load; accepted + rejected equals the file's data rows.
struct Dataset {
    std::vector<OrgRecord> records;
    Provenance provenance;
    std::vector<RejectedRow> rejects;
};

/// The mandatory CSV header columns, in canonical order.
std::span<const std::string_view> csv_schema();

/// Loads a header-first CSV of organization records.
///
/// Rows are accepted or rejected individually: malformed numerics, comma
/// decimal separators, out-of-range years, missing keys and duplicate
/// (org_id, year) pairs reject the row with a reason and the load goes on.
/// An unreadable file or a header missing mandatory columns throws
/// LoadError.
Dataset load_csv(const std::filesystem::path& path);

/// Parses CSV text directly (same semantics as load_csv).
Dataset parse_csv(std::string_view text, std::string source_name = "<memory>");

/// Serializes records back to the schema's CSV form. Absent fields become
/// empty cells; numbers keep their shortest exact representation.
std::string to_csv(std::span<const OrgRecord> records);

/// Keeps records matching the given sector membership and/or year. Either
/// criterion may be omitted. A record with several sectors matches each of
/// them, so different sector filters can share records.
Dataset filter(const Dataset& ds, const std::optional<std::string>& sector,
               std::optional<int> year);

/// All field and indicator names `column` accepts.
const std::vector<std::string>& column_names();

/// Collects the present values of a raw field or computed indicator across
/// the dataset, skipping absent ones; the sample size is the present count.
/// Throws ValidationError for an unknown name.
Sample column(const Dataset& ds, std::string_view name,
              const IndicatorPolicy& policy = {});

}  // namespace liqlab
