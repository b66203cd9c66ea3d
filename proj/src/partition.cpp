#include "carter/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "carter/errors.hpp"

namespace carter {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::OddPrimeRequired: return "OddPrimeRequired";
    case ErrorKind::CriterionDisagreement: return "CriterionDisagreement";
    }
    return "Unknown";
}

Partition::Partition(std::span<const std::int64_t> parts)
{
    std::size_t n = parts.size();
    while (n > 0 && parts[n - 1] == 0)
        --n;
    for (std::size_t i = 0; i < n; ++i) {
        if (parts[i] <= 0)
            throw Error(ErrorKind::NotWeaklyDecreasing,
                        parts[i] < 0 ? "negative part" : "not weakly decreasing: zero followed by a positive part");
        if (i > 0 && parts[i] > parts[i - 1])
            throw Error(ErrorKind::NotWeaklyDecreasing, "not weakly decreasing");
    }
    parts_.assign(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(n));
    degree_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Partition::Partition(std::initializer_list<std::int64_t> parts)
    : Partition(std::span<const std::int64_t>(parts.begin(), parts.size()))
{
}

Partition make_partition(std::span<const std::int64_t> parts)
{
    return Partition(parts);
}

std::string to_string(const Partition& lambda)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i)
            os << ',';
        os << lambda.parts()[i];
    }
    os << ')';
    return os.str();
}

Partition transpose(const Partition& lambda)
{
    std::vector<std::int64_t> cols(static_cast<std::size_t>(lambda[1]), 0);
    for (auto row : lambda.parts())
        for (std::int64_t b = 0; b < row; ++b)
            ++cols[static_cast<std::size_t>(b)];
    return Partition(cols);
}

Partition add_scaled(const Partition& lambda, const Partition& mu, std::int64_t scale)
{
    const auto n = std::max(lambda.length(), mu.length());
    std::vector<std::int64_t> out(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i)
        out[static_cast<std::size_t>(i - 1)] = lambda[i] + scale * mu[i];
    return Partition(out);
}

Partition omega(std::int64_t n)
{
    return Partition(std::vector<std::int64_t>(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)), 1));
}

Partition remove_first_column(const Partition& lambda)
{
    std::vector<std::int64_t> out(lambda.parts());
    for (auto& v : out)
        --v;
    return Partition(out);
}

HookTable::HookTable(const Partition& shape)
    : shape_(shape)
{
    const Partition conj = transpose(shape);
    flat_.reserve(static_cast<std::size_t>(shape.degree()));
    for (std::int64_t a = 1; a <= shape.length(); ++a) {
        row_offset_.push_back(flat_.size());
        for (std::int64_t b = 1; b <= shape[a]; ++b)
            flat_.push_back(shape[a] + conj[b] - a - b + 1);
    }
}

std::int64_t HookTable::at(std::int64_t row, std::int64_t col) const
{
    if (row < 1 || row > shape_.length() || col < 1 || col > shape_[row])
        throw Error(ErrorKind::DomainError, "cell outside the diagram");
    return flat_[row_offset_[static_cast<std::size_t>(row - 1)] + static_cast<std::size_t>(col - 1)];
}

HookTable hook_table(const Partition& lambda)
{
    return HookTable(lambda);
}

bool dominance_leq(const Partition& lambda, const Partition& mu)
{
    if (lambda.degree() != mu.degree())
        return false;
    std::int64_t a = 0;
    std::int64_t b = 0;
    const auto n = std::max(lambda.length(), mu.length());
    for (std::int64_t i = 1; i <= n; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a > b)
            return false;
    }
    return true;
}

void require_modulus(std::int64_t l)
{
    if (l < 2)
        throw Error(ErrorKind::BadModulus, "modulus must be at least 2, got " + std::to_string(l));
}

bool is_l_regular(const Partition& lambda, std::int64_t l)
{
    require_modulus(l);
    std::int64_t run = 0;
    for (std::int64_t i = 1; i <= lambda.length(); ++i) {
        run = (i > 1 && lambda[i] == lambda[i - 1]) ? run + 1 : 1;
        if (run >= l)
            return false;
    }
    return true;
}

bool is_l_restricted(const Partition& lambda, std::int64_t l)
{
    require_modulus(l);
    for (std::int64_t i = 1; i <= lambda.length(); ++i)
        if (lambda[i] - lambda[i + 1] >= l)
            return false;
    return true;
}

BigInt standard_tableau_count(const Partition& lambda)
{
    BigInt num = 1;
    for (std::int64_t k = 2; k <= lambda.degree(); ++k)
        num *= k;
    BigInt den = 1;
    const HookTable table(lambda);
    for (auto h : table.values())
        den *= h;
    return num / den;
}

PartitionStream::PartitionStream(std::int64_t degree, std::optional<std::int64_t> max_length)
    : degree_(degree)
    , max_length_(max_length.value_or(degree))
{
    if (degree < 0)
        throw Error(ErrorKind::DomainError, "degree must be nonnegative");
    if (max_length_ < 0)
        throw Error(ErrorKind::DomainError, "max_length must be nonnegative");
}

std::optional<Partition> PartitionStream::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (degree_ == 0)
            return Partition{};
        if (max_length_ == 0) {
            done_ = true;
            return std::nullopt;
        }
        current_ = {degree_};
        return Partition(current_);
    }
    if (degree_ == 0 || !advance()) {
        done_ = true;
        return std::nullopt;
    }
    return Partition(current_);
}

// Decrease the rightmost part that can absorb the tail, then refill greedily.
bool PartitionStream::advance()
{
    std::int64_t tail = 0;
    for (auto i = static_cast<std::int64_t>(current_.size()) - 1; i >= 0; --i) {
        const auto idx = static_cast<std::size_t>(i);
        const std::int64_t part = current_[idx];
        const std::int64_t rem = tail + 1;
        const std::int64_t slots = max_length_ - 1 - i;
        if (part > 1 && rem <= (part - 1) * slots) {
            const std::int64_t cap = part - 1;
            current_.resize(idx + 1);
            current_[idx] = cap;
            std::int64_t left = rem;
            while (left > 0) {
                current_.push_back(std::min(cap, left));
                left -= current_.back();
            }
            return true;
        }
        tail += part;
    }
    return false;
}

std::vector<Partition> enumerate_partitions(std::int64_t degree, std::optional<std::int64_t> max_length)
{
    std::vector<Partition> out;
    PartitionStream stream(degree, max_length);
    while (auto p = stream.next())
        out.push_back(std::move(*p));
    return out;
}

}  // namespace carter
