#include "illiqdep/binarize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string_view>

#include "illiqdep/error.hpp"

namespace illiqdep {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::optional<std::chrono::sys_days> parse_iso_date(std::string_view s) {
    s = trim(s);
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    int y = 0;
    unsigned m = 0, d = 0;
    auto field = [&](std::size_t pos, std::size_t len, auto& out) {
        const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, out);
        return ec == std::errc{} && ptr == s.data() + pos + len;
    };
    if (!field(0, 4, y) || !field(5, 2, m) || !field(8, 2, d)) return std::nullopt;
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                          std::chrono::day{d}};
    if (!ymd.ok()) return std::nullopt;
    return std::chrono::sys_days{ymd};
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

ReturnSeries::ReturnSeries(std::vector<double> values, std::string source_id,
                           std::vector<std::chrono::sys_days> timestamps)
    : values_(std::move(values)), timestamps_(std::move(timestamps)),
      source_id_(std::move(source_id)) {
    if (values_.empty()) throw Error(ErrorKind::InvalidInput, "return series is empty");
    for (std::size_t t = 0; t < values_.size(); ++t) {
        if (!std::isfinite(values_[t])) {
            throw Error(ErrorKind::InvalidInput,
                        "non-finite return at index " + std::to_string(t), t);
        }
    }
    if (!timestamps_.empty()) {
        if (timestamps_.size() != values_.size()) {
            throw Error(ErrorKind::InvalidInput, "timestamps and values differ in length");
        }
        for (std::size_t t = 1; t < timestamps_.size(); ++t) {
            if (timestamps_[t] <= timestamps_[t - 1]) {
                throw Error(ErrorKind::InvalidInput,
                            "timestamps not strictly increasing at index " + std::to_string(t),
                            t);
            }
        }
    }
}

BinarySeries::BinarySeries(std::vector<std::uint8_t> bits, double threshold,
                           std::string source_id)
    : bits_(std::move(bits)), threshold_(threshold), source_id_(std::move(source_id)) {
    if (bits_.size() < 2) {
        throw Error(ErrorKind::InvalidInput, "binary series needs at least 2 observations");
    }
    for (std::size_t t = 0; t < bits_.size(); ++t) {
        if (bits_[t] > 1) {
            throw Error(ErrorKind::InvalidInput, "bit at index " + std::to_string(t) +
                                                     " is not 0 or 1", t);
        }
    }
    if (!(threshold_ >= 0.0) || !std::isfinite(threshold_)) {
        throw Error(ErrorKind::InvalidInput, "threshold must be a finite non-negative number");
    }
}

std::size_t BinarySeries::count_ones() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BinarySeries BinarySeries::complement() const {
    std::vector<std::uint8_t> flipped(bits_.size());
    std::transform(bits_.begin(), bits_.end(), flipped.begin(),
                   [](std::uint8_t b) { return static_cast<std::uint8_t>(1 - b); });
    return BinarySeries(std::move(flipped), threshold_, source_id_);
}

BinarySeries binarize(const ReturnSeries& returns, double threshold) {
    if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
        throw Error(ErrorKind::InvalidInput, "threshold must be a finite non-negative number");
    }
    const auto values = returns.values();
    std::vector<std::uint8_t> bits(values.size());
    std::transform(values.begin(), values.end(), bits.begin(), [threshold](double r) {
        return static_cast<std::uint8_t>(std::abs(r) <= threshold ? 0 : 1);
    });
    return BinarySeries(std::move(bits), threshold, returns.source_id());
}

double sample_mean(const BinarySeries& series) noexcept {
    return static_cast<double>(series.count_ones()) / static_cast<double>(series.size());
}

ReturnSeries parse_returns_csv(std::istream& in, std::string source_id) {
    std::vector<double> values;
    std::vector<std::chrono::sys_days> dates;
    std::optional<std::size_t> columns;
    bool seen_data_or_header = false;

    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        const auto content = trim(line);
        if (content.empty()) continue;

        std::vector<std::string_view> fields;
        std::string_view rest = content;
        for (;;) {
            const auto comma = rest.find(',');
            fields.push_back(trim(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() > 2) {
            throw Error(ErrorKind::InvalidInput,
                        "row " + std::to_string(row) + ": expected 1 or 2 columns, got " +
                            std::to_string(fields.size()),
                        row);
        }

        if (!seen_data_or_header) {
            seen_data_or_header = true;
            const bool header =
                (fields.size() == 2 && lower(fields[0]) == "date" &&
                 lower(fields[1]) == "return") ||
                (fields.size() == 1 && lower(fields[0]) == "return");
            columns = fields.size();
            if (header) continue;
        }
        if (fields.size() != *columns) {
            throw Error(ErrorKind::InvalidInput,
                        "row " + std::to_string(row) + ": column count changed", row);
        }

        const auto return_field = fields.back();
        const auto value = parse_double(return_field);
        if (!value) {
            throw Error(ErrorKind::InvalidInput,
                        "row " + std::to_string(row) + ": unparseable return '" +
                            std::string(return_field) + "'",
                        row);
        }
        if (!std::isfinite(*value)) {
            throw Error(ErrorKind::InvalidInput,
                        "row " + std::to_string(row) + ": non-finite return", row);
        }
        if (fields.size() == 2) {
            const auto date = parse_iso_date(fields[0]);
            if (!date) {
                throw Error(ErrorKind::InvalidInput,
                            "row " + std::to_string(row) + ": unparseable date '" +
                                std::string(fields[0]) + "'",
                            row);
            }
            dates.push_back(*date);
        }
        values.push_back(*value);
    }
    if (values.empty()) throw Error(ErrorKind::InvalidInput, "no returns in input");
    return ReturnSeries(std::move(values), std::move(source_id), std::move(dates));
}

ReturnSeries read_returns_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
    return parse_returns_csv(in, path.stem().string());
}

}  // namespace illiqdep
