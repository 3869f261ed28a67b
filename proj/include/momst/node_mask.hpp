#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>

namespace momst {

using NodeId = std::uint32_t;

inline constexpr std::size_t kMaxNodes = 64;

// Subset of original nodes, one bit per node.
class NodeMask {
public:
    constexpr NodeMask() = default;
    constexpr explicit NodeMask(std::uint64_t bits) : bits_(bits) {}

    static constexpr NodeMask single(NodeId v) { return NodeMask(bit(v)); }

    // All nodes 0..n-1.
    static constexpr NodeMask full(std::size_t n) {
        assert(n <= kMaxNodes);
        return NodeMask(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool contains(NodeId v) const noexcept { return (bits_ & bit(v)) != 0; }
    constexpr NodeMask with(NodeId v) const noexcept { return NodeMask(bits_ | bit(v)); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int count() const noexcept { return std::popcount(bits_); }

    friend constexpr bool operator==(NodeMask, NodeMask) = default;

private:
    static constexpr std::uint64_t bit(NodeId v) {
        assert(v < kMaxNodes);
        return std::uint64_t{1} << v;
    }

    std::uint64_t bits_ = 0;
};

// Drops the root bit and packs the remaining n-1 bits into an integer, giving
// a bijection from root-containing masks onto [0, 2^(n-1)).
constexpr std::uint64_t node_index(NodeMask mask, NodeId root) noexcept {
    assert(mask.contains(root));
    const std::uint64_t bits = mask.bits();
    const std::uint64_t low = bits & ((std::uint64_t{1} << root) - 1);
    const std::uint64_t high = root >= 63 ? 0 : (bits >> (root + 1)) << root;
    return low | high;
}

}  // namespace momst

template <>
struct std::hash<momst::NodeMask> {
    std::size_t operator()(momst::NodeMask m) const noexcept {
        return std::hash<std::uint64_t>{}(m.bits());
    }
};
