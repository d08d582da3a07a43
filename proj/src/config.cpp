#include "liqlab/config.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "liqlab/errors.hpp"

namespace liqlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view text, const std::string& key) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ValidationError(key, fmt::format("not a number: \"{}\"", text));
    return value;
}

bool parse_flag(std::string_view text, const std::string& key) {
    if (text == "true" || text == "yes" || text == "1") return true;
    if (text == "false" || text == "no" || text == "0") return false;
    throw ValidationError(key, fmt::format("not a boolean: \"{}\"", text));
}

/// One parsed section: ordered key/value pairs plus a consumption mark so
/// unknown keys can be reported with their location.
struct Section {
    std::string name;
    std::map<std::string, std::string> entries;

    std::optional<std::string> get(const std::string& key) {
        const auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        std::string value = it->second;
        entries.erase(it);
        return value;
    }

    double require_number(const std::string& key) {
        const auto v = get(key);
        if (!v) throw ValidationError(name + "." + key, "required key missing");
        return parse_number(*v, name + "." + key);
    }

    void expect_empty() const {
        if (!entries.empty())
            throw ValidationError(name + "." + entries.begin()->first,
                                  "unknown key");
    }
};

std::vector<Section> split_sections(std::string_view text) {
    std::vector<Section> sections;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) {
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw ValidationError(
                        "config", fmt::format("line {}: malformed section header",
                                              line_no));
                sections.push_back(
                    {std::string(trim(line.substr(1, line.size() - 2))), {}});
            } else {
                const auto eq = line.find('=');
                if (eq == std::string_view::npos)
                    throw ValidationError(
                        "config",
                        fmt::format("line {}: expected key = value", line_no));
                if (sections.empty())
                    throw ValidationError(
                        "config",
                        fmt::format("line {}: key outside any section", line_no));
                const std::string key{trim(line.substr(0, eq))};
                const std::string value{trim(line.substr(eq + 1))};
                auto& entries = sections.back().entries;
                if (!entries.emplace(key, value).second)
                    throw ValidationError(sections.back().name + "." + key,
                                          "duplicate key");
            }
        }
        if (end == text.size()) break;
    }
    return sections;
}

}  // namespace

std::vector<SZCurve::Anchor> parse_anchor_list(std::string_view text) {
    std::vector<SZCurve::Anchor> anchors;
    std::string token;
    const auto flush = [&] {
        if (token.empty()) return;
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw ValidationError("sz.anchors",
                                  fmt::format("expected ca_cr:sz pair, got \"{}\"",
                                              token));
        anchors.push_back(
            {parse_number(trim(std::string_view(token).substr(0, colon)),
                          "sz.anchors"),
             parse_number(trim(std::string_view(token).substr(colon + 1)),
                          "sz.anchors")});
        token.clear();
    };
    for (const char c : text) {
        if (c == ',' || c == ' ' || c == '\t')
            flush();
        else
            token += c;
    }
    flush();
    return anchors;
}

ScenarioConfig parse_scenario_config(std::string_view text) {
    ScenarioConfig config;
    bool have_market = false;
    bool have_weights = false;
    bool have_sz = false;

    for (Section& section : split_sections(text)) {
        if (section.name == "market") {
            if (have_market)
                throw ValidationError("market", "section given twice");
            have_market = true;
            config.market.risk_free_rate = section.require_number("risk_free_rate");
            config.market.market_return = section.require_number("market_return");
            config.market.tax_rate = section.require_number("tax_rate");
            if (const auto v = section.get("long_debt_spread"))
                config.market.long_debt_spread =
                    parse_number(*v, "market.long_debt_spread");
            if (const auto v = section.get("short_debt_spread"))
                config.market.short_debt_spread =
                    parse_number(*v, "market.short_debt_spread");
            section.expect_empty();
        } else if (section.name == "weights") {
            if (have_weights)
                throw ValidationError("weights", "section given twice");
            have_weights = true;
            config.weights.equity_share = section.require_number("equity");
            config.weights.long_debt_share = section.require_number("long_debt");
            config.weights.short_debt_share = section.require_number("short_debt");
            section.expect_empty();
        } else if (section.name == "rounding") {
            if (const auto v = section.get("statement_lines_to_integers"))
                config.rounding.statement_lines_to_integers =
                    parse_flag(*v, "rounding.statement_lines_to_integers");
            if (const auto v = section.get("beta_to_2dp"))
                config.rounding.beta_to_2dp = parse_flag(*v, "rounding.beta_to_2dp");
            section.expect_empty();
        } else if (section.name == "sz") {
            if (have_sz) throw ValidationError("sz", "section given twice");
            have_sz = true;
            const auto variant = section.get("variant");
            const auto anchors = section.get("anchors");
            if (variant && anchors)
                throw ValidationError("sz", "give either variant or anchors");
            if (variant)
                config.curve = SZCurve::builtin(*variant);
            else if (anchors)
                config.curve = SZCurve::custom(parse_anchor_list(*anchors));
            else
                throw ValidationError("sz", "need variant or anchors");
            section.expect_empty();
        } else if (section.name == "profile") {
            StrategyProfile profile;
            if (const auto v = section.get("name")) profile.name = *v;
            else profile.name = fmt::format("profile{}", config.profiles.size() + 1);
            profile.cash_revenues = section.require_number("cash_revenues");
            profile.ca_to_cr = section.require_number("ca_to_cr");
            profile.fixed_assets = section.require_number("fixed_assets");
            profile.ebit_share = section.require_number("ebit_share");
            profile.unleveraged_beta = section.require_number("unleveraged_beta");
            if (const auto v = section.get("payables_to_ca"))
                profile.payables_to_ca = parse_number(*v, "profile.payables_to_ca");
            if (const auto v = section.get("hamada_debt_equity_ratio"))
                profile.hamada_debt_equity_ratio =
                    parse_number(*v, "profile.hamada_debt_equity_ratio");
            section.expect_empty();
            profile.validate();
            config.profiles.push_back(std::move(profile));
        } else {
            throw ValidationError(section.name, "unknown section");
        }
    }

    if (!have_market) throw ValidationError("market", "section missing");
    if (!have_weights) throw ValidationError("weights", "section missing");
    if (!have_sz) throw ValidationError("sz", "section missing");
    if (config.profiles.empty())
        throw ValidationError("profile", "need at least one profile section");
    config.market.validate();
    config.weights.validate();
    return config;
}

ScenarioConfig load_scenario_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw LoadError(fmt::format("cannot open \"{}\" for reading", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_config(buffer.str());
}

}  // namespace liqlab
