#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace carter {

using BigInt = boost::multiprecision::cpp_int;

/// A weakly decreasing finite sequence of positive integers.
///
/// Trailing zeros are never stored, so the zero partition is the empty
/// sequence. Rows and columns in the public API are 1-based.
class Partition {
public:
    Partition() = default;

    /// Accepts trailing zeros; throws NotWeaklyDecreasing otherwise.
    explicit Partition(std::span<const std::int64_t> parts);
    Partition(std::initializer_list<std::int64_t> parts);

    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
    std::int64_t degree() const noexcept { return degree_; }
    std::int64_t length() const noexcept { return static_cast<std::int64_t>(parts_.size()); }
    bool is_zero() const noexcept { return parts_.empty(); }

    /// Row i (1-based); zero beyond the length.
    std::int64_t operator[](std::int64_t i) const noexcept
    {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<std::int64_t> parts_;
    std::int64_t degree_ = 0;
};

Partition make_partition(std::span<const std::int64_t> parts);

/// "(3,1,1)"; the zero partition prints as "()".
std::string to_string(const Partition& lambda);

Partition transpose(const Partition& lambda);

/// Componentwise sum lambda + scale * mu (zero-padded).
Partition add_scaled(const Partition& lambda, const Partition& mu, std::int64_t scale);

/// (1,...,1) with n ones.
Partition omega(std::int64_t n);

/// lambda - omega(len(lambda)): removes the first column.
Partition remove_first_column(const Partition& lambda);

class HookTable {
public:
    explicit HookTable(const Partition& shape);

    const Partition& shape() const noexcept { return shape_; }
    std::int64_t at(std::int64_t row, std::int64_t col) const;
    std::int64_t cell_count() const noexcept { return static_cast<std::int64_t>(flat_.size()); }

    /// All hook lengths in row-reading order.
    const std::vector<std::int64_t>& values() const noexcept { return flat_; }

private:
    Partition shape_;
    std::vector<std::size_t> row_offset_;
    std::vector<std::int64_t> flat_;
};

HookTable hook_table(const Partition& lambda);

bool dominance_leq(const Partition& lambda, const Partition& mu);

bool is_l_regular(const Partition& lambda, std::int64_t l);
bool is_l_restricted(const Partition& lambda, std::int64_t l);

/// degree! / prod(hooks), exact.
BigInt standard_tableau_count(const Partition& lambda);

/// Partitions of a fixed degree in reverse-lexicographic order.
/// Single consumer; each caller makes its own stream.
class PartitionStream {
public:
    explicit PartitionStream(std::int64_t degree, std::optional<std::int64_t> max_length = std::nullopt);

    std::optional<Partition> next();

private:
    bool advance();

    std::int64_t degree_;
    std::int64_t max_length_;
    std::vector<std::int64_t> current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> enumerate_partitions(std::int64_t degree,
                                            std::optional<std::int64_t> max_length = std::nullopt);

void require_modulus(std::int64_t l);

}  // namespace carter
