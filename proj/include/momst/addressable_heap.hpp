#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace momst {

// Binary min-heap over small integer ids with O(log n) decrease-key. Each id
// is present at most once. `Less` compares two ids; its result may change
// for an id only through decrease() or remove-and-push.
template <class Less>
class AddressableHeap {
public:
    explicit AddressableHeap(Less less) : less_(std::move(less)) {}

    bool empty() const noexcept { return heap_.empty(); }
    std::size_t size() const noexcept { return heap_.size(); }

    bool contains(std::uint32_t id) const noexcept {
        return id < pos_.size() && pos_[id] != kAbsent;
    }

    std::uint32_t top() const noexcept {
        assert(!empty());
        return heap_.front();
    }

    void push(std::uint32_t id) {
        assert(!contains(id));
        if (id >= pos_.size()) pos_.resize(id + 1, kAbsent);
        pos_[id] = heap_.size();
        heap_.push_back(id);
        sift_up(heap_.size() - 1);
    }

    std::uint32_t pop() {
        assert(!empty());
        const std::uint32_t id = heap_.front();
        pos_[id] = kAbsent;
        const std::uint32_t last = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_.front() = last;
            pos_[last] = 0;
            sift_down(0);
        }
        return id;
    }

    // Call after the key of `id` became smaller.
    void decrease(std::uint32_t id) {
        assert(contains(id));
        sift_up(pos_[id]);
    }

    // Position table and heap order agree; every id appears once.
    bool valid() const {
        std::size_t present = 0;
        for (std::size_t id = 0; id < pos_.size(); ++id) {
            if (pos_[id] == kAbsent) continue;
            ++present;
            if (pos_[id] >= heap_.size() || heap_[pos_[id]] != id) return false;
        }
        if (present != heap_.size()) return false;
        for (std::size_t i = 1; i < heap_.size(); ++i)
            if (less_(heap_[i], heap_[(i - 1) / 2])) return false;
        return true;
    }

private:
    static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

    void place(std::size_t i, std::uint32_t id) {
        heap_[i] = id;
        pos_[id] = i;
    }

    void sift_up(std::size_t i) {
        const std::uint32_t id = heap_[i];
        while (i > 0) {
            const std::size_t parent = (i - 1) / 2;
            if (!less_(id, heap_[parent])) break;
            place(i, heap_[parent]);
            i = parent;
        }
        place(i, id);
    }

    void sift_down(std::size_t i) {
        const std::uint32_t id = heap_[i];
        const std::size_t n = heap_.size();
        for (;;) {
            std::size_t child = 2 * i + 1;
            if (child >= n) break;
            if (child + 1 < n && less_(heap_[child + 1], heap_[child])) ++child;
            if (!less_(heap_[child], id)) break;
            place(i, heap_[child]);
            i = child;
        }
        place(i, id);
    }

    Less less_;
    std::vector<std::uint32_t> heap_;
    std::vector<std::size_t> pos_;
};

}  // namespace momst
