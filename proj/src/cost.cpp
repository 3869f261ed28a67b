#include "momst/cost.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace momst {

CostVector::CostVector(std::size_t dimension) : dim_(static_cast<std::uint8_t>(dimension)) {
    if (dimension > kMaxDimension)
        throw std::invalid_argument("cost dimension exceeds " + std::to_string(kMaxDimension));
}

CostVector::CostVector(std::initializer_list<Cost> components)
    : CostVector(CostView(components.begin(), components.size())) {}

CostVector::CostVector(CostView components) : CostVector(components.size()) {
    std::copy(components.begin(), components.end(), data_.begin());
}

CostVector& CostVector::operator+=(CostView other) {
    assert(other.size() == dim_);
    add_checked(view(), other, mutable_view());
    return *this;
}

bool operator==(const CostVector& a, const CostVector& b) noexcept {
    return cost_equal(a, b);
}

CostVector operator+(const CostVector& a, CostView b) {
    CostVector out = a;
    out += b;
    return out;
}

void add_checked(CostView a, CostView b, std::span<Cost> out) {
    assert(a.size() == b.size() && a.size() == out.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (__builtin_add_overflow(a[i], b[i], &out[i]))
            throw std::overflow_error("cost accumulation overflow");
    }
}

bool dominates(CostView x, CostView y) noexcept {
    assert(x.size() == y.size());
    bool strict = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) return false;
        strict |= x[i] < y[i];
    }
    return strict;
}

bool dominates_or_equal(CostView x, CostView y) noexcept {
    assert(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

bool lex_less(CostView x, CostView y) noexcept {
    assert(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

bool cost_equal(CostView x, CostView y) noexcept {
    return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
}

bool sum_less(CostView x, CostView y) noexcept {
    const Cost sx = std::accumulate(x.begin(), x.end(), Cost{0});
    const Cost sy = std::accumulate(y.begin(), y.end(), Cost{0});
    if (sx != sy) return sx < sy;
    return lex_less(x, y);
}

std::string to_string(CostView c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CostVector& c) {
    return os << to_string(c);
}

void Frontier::push_back(CostView c) {
    assert(c.size() == dim_);
    data_.insert(data_.end(), c.begin(), c.end());
}

bool Frontier::dominates(CostView y, bool skip_first) const noexcept {
    assert(y.size() == dim_);
    const std::size_t first = skip_first ? 1 : 0;
    for (auto it = data_.begin(); it != data_.end(); it += static_cast<std::ptrdiff_t>(dim_)) {
        std::size_t i = first;
        while (i < dim_ && it[static_cast<std::ptrdiff_t>(i)] <= y[i]) ++i;
        if (i == dim_) return true;
    }
    return false;
}

bool Frontier::strictly_dominates(CostView y, bool skip_first) const noexcept {
    assert(y.size() == dim_);
    const std::size_t first = skip_first ? 1 : 0;
    for (auto it = data_.begin(); it != data_.end(); it += static_cast<std::ptrdiff_t>(dim_)) {
        std::size_t i = first;
        while (i < dim_ && it[static_cast<std::ptrdiff_t>(i)] <= y[i]) ++i;
        if (i == dim_ && !std::equal(y.begin(), y.end(), it)) return true;
    }
    return false;
}

}  // namespace momst
