#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace illiqdep {

/// Ordered log-returns, optionally dated. Construction validates: non-empty,
/// all finite, dates (when given) strictly increasing and one per value.
class ReturnSeries {
public:
    ReturnSeries(std::vector<double> values, std::string source_id,
                 std::vector<std::chrono::sys_days> timestamps = {});

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::span<const std::chrono::sys_days> timestamps() const noexcept {
        return timestamps_;
    }
    [[nodiscard]] bool has_timestamps() const noexcept { return !timestamps_.empty(); }
    [[nodiscard]] const std::string& source_id() const noexcept { return source_id_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
    std::vector<std::chrono::sys_days> timestamps_;
    std::string source_id_;
};

/// The trade/no-trade indicator sequence: 1 on days with a price change.
class BinarySeries {
public:
    /// Throws InvalidInput unless bits.size() >= 2 and every bit is 0 or 1.
    BinarySeries(std::vector<std::uint8_t> bits, double threshold = 0.0,
                 std::string source_id = {});

    [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] std::uint8_t operator[](std::size_t t) const noexcept { return bits_[t]; }
    [[nodiscard]] double threshold() const noexcept { return threshold_; }
    [[nodiscard]] const std::string& source_id() const noexcept { return source_id_; }
    [[nodiscard]] std::size_t count_ones() const noexcept;

    /// a_t -> 1 - a_t, provenance kept.
    [[nodiscard]] BinarySeries complement() const;

private:
    std::vector<std::uint8_t> bits_;
    double threshold_;
    std::string source_id_;
};

/// bits[t] = 0 iff |r_t| <= threshold. The default threshold of exactly zero
/// is the literal "no price change" rule.
[[nodiscard]] BinarySeries binarize(const ReturnSeries& returns, double threshold = 0.0);

[[nodiscard]] double sample_mean(const BinarySeries& series) noexcept;

// CSV ingestion. Accepted layouts: headerless single column of returns,
// `date,return` with or without the header line, or a one-column file with a
// `return` header. Dates are ISO `YYYY-MM-DD`. Any unparseable or missing
// return is a hard error naming the 1-based file row.
[[nodiscard]] ReturnSeries parse_returns_csv(std::istream& in, std::string source_id);
[[nodiscard]] ReturnSeries read_returns_csv(const std::filesystem::path& path);

}  // namespace illiqdep
