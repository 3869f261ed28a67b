#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace momst {

using Cost = std::int64_t;
using CostView = std::span<const Cost>;

inline constexpr std::size_t kMaxDimension = 8;

// Fixed-capacity nonnegative integer cost vector. The dimension is set at
// construction and never changes.
class CostVector {
public:
    CostVector() = default;
    explicit CostVector(std::size_t dimension);
    CostVector(std::initializer_list<Cost> components);
    explicit CostVector(CostView components);

    std::size_t size() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    Cost operator[](std::size_t i) const noexcept {
        assert(i < dim_);
        return data_[i];
    }
    Cost& operator[](std::size_t i) noexcept {
        assert(i < dim_);
        return data_[i];
    }

    CostView view() const noexcept { return {data_.data(), dim_}; }
    std::span<Cost> mutable_view() noexcept { return {data_.data(), dim_}; }
    operator CostView() const noexcept { return view(); }

    const Cost* begin() const noexcept { return data_.data(); }
    const Cost* end() const noexcept { return data_.data() + dim_; }

    // Componentwise addition; throws std::overflow_error on overflow.
    CostVector& operator+=(CostView other);

    friend bool operator==(const CostVector& a, const CostVector& b) noexcept;

private:
    std::array<Cost, kMaxDimension> data_{};
    std::uint8_t dim_ = 0;
};

CostVector operator+(const CostVector& a, CostView b);

// out = a + b, checked. All three must have the same length.
void add_checked(CostView a, CostView b, std::span<Cost> out);

// x <= y componentwise and x != y.
bool dominates(CostView x, CostView y) noexcept;

// x <= y componentwise.
bool dominates_or_equal(CostView x, CostView y) noexcept;

// Strict lexicographic order.
bool lex_less(CostView x, CostView y) noexcept;

bool cost_equal(CostView x, CostView y) noexcept;

// Strict order on sum of components, ties broken lexicographically.
bool sum_less(CostView x, CostView y) noexcept;

std::string to_string(CostView c);
std::ostream& operator<<(std::ostream& os, const CostVector& c);

/// Permanent cost vectors of one transition node, stored flat in insertion
/// order (lex-nondecreasing for lex-sorted solvers).
class Frontier {
public:
    explicit Frontier(std::size_t dimension) : dim_(dimension) {}

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
    bool empty() const noexcept { return data_.empty(); }

    CostView operator[](std::size_t i) const noexcept {
        return {data_.data() + i * dim_, dim_};
    }

    void push_back(CostView c);

    // True iff some member is <= y componentwise. With skip_first, only
    // components 2..d are compared; the caller guarantees every member's
    // first component is <= y[0].
    bool dominates(CostView y, bool skip_first) const noexcept;

    // Like dominates(), but a member equal to y does not count.
    bool strictly_dominates(CostView y, bool skip_first) const noexcept;

    std::size_t memory_bytes() const noexcept { return data_.capacity() * sizeof(Cost); }

private:
    std::size_t dim_;
    std::vector<Cost> data_;
};

inline bool frontier_dominates(const Frontier& f, CostView y, bool skip_first) noexcept {
    return f.dominates(y, skip_first);
}

}  // namespace momst
