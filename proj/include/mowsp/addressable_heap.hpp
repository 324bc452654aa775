#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "mowsp/errors.hpp"

namespace mowsp {

// Handle binding an inserted item to its heap slot. Valid until the item is
// popped or deleted; using it afterwards is a logic error.
struct HeapHandle {
    std::uint32_t slot = kHeapInvalidSlot;
    std::uint32_t generation = 0;

    static constexpr std::uint32_t kHeapInvalidSlot = 0xffffffffu;
    bool valid() const noexcept { return slot != kHeapInvalidSlot; }
    friend bool operator==(HeapHandle a, HeapHandle b) = default;
};

// Addressable pairing min-heap: amortized O(1) insert, O(log n) pop/delete.
// Ties on the key are broken by insertion sequence (FIFO), which makes pop
// order fully deterministic. Slots are recycled through a free list and
// guarded by a generation counter so stale handles are detected.
template <typename T>
class AddressableHeap {
public:
    struct Entry {
        double key;
        T item;
    };

    HeapHandle insert(double key, T item) {
        if (std::isnan(key) || std::isinf(key))
            throw_error(Errc::invalid_argument, "heap key must be finite");
        const std::uint32_t slot = alloc_slot();
        Node& n = nodes_[slot];
        n.key = key;
        n.item = std::move(item);
        n.seq = next_seq_++;
        n.parent = n.child = n.sibling = kNone;
        n.live = true;
        root_ = (root_ == kNone) ? slot : meld(root_, slot);
        ++size_;
        return {slot, nodes_[slot].generation};
    }

    Entry pop_min() {
        if (root_ == kNone)
            throw_error(Errc::state, "pop on empty heap");
        const std::uint32_t top = root_;
        Entry out{nodes_[top].key, std::move(nodes_[top].item)};
        root_ = merge_pairs(nodes_[top].child);
        if (root_ != kNone) nodes_[root_].parent = kNone;
        release_slot(top);
        --size_;
        return out;
    }

    void erase(HeapHandle h) {
        check_handle(h);
        const std::uint32_t slot = h.slot;
        if (slot == root_) {
            root_ = merge_pairs(nodes_[slot].child);
            if (root_ != kNone) nodes_[root_].parent = kNone;
        } else {
            detach(slot);
            const std::uint32_t sub = merge_pairs(nodes_[slot].child);
            if (sub != kNone) {
                nodes_[sub].parent = kNone;
                root_ = meld(root_, sub);
            }
        }
        release_slot(slot);
        --size_;
    }

    double key_of(HeapHandle h) const {
        check_handle(h);
        return nodes_[h.slot].key;
    }

    const T& item_of(HeapHandle h) const {
        check_handle(h);
        return nodes_[h.slot].item;
    }

    bool empty() const noexcept { return size_ == 0; }
    std::size_t size() const noexcept { return size_; }

    void clear() {
        nodes_.clear();
        free_.clear();
        root_ = kNone;
        size_ = 0;
    }

private:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    struct Node {
        double key = 0.0;
        T item{};
        std::uint64_t seq = 0;
        std::uint32_t parent = kNone;
        std::uint32_t child = kNone;
        std::uint32_t sibling = kNone;
        std::uint32_t generation = 0;
        bool live = false;
    };

    bool before(std::uint32_t a, std::uint32_t b) const {
        const Node& na = nodes_[a];
        const Node& nb = nodes_[b];
        return na.key < nb.key || (na.key == nb.key && na.seq < nb.seq);
    }

    std::uint32_t meld(std::uint32_t a, std::uint32_t b) {
        if (!before(a, b)) std::swap(a, b);
        nodes_[b].parent = a;
        nodes_[b].sibling = nodes_[a].child;
        nodes_[a].child = b;
        return a;
    }

    std::uint32_t merge_pairs(std::uint32_t first) {
        if (first == kNone || nodes_[first].sibling == kNone) return first;
        // two-pass pairing; iterative to avoid deep recursion
        scratch_.clear();
        for (std::uint32_t cur = first; cur != kNone;) {
            std::uint32_t a = cur;
            std::uint32_t b = nodes_[cur].sibling;
            cur = (b == kNone) ? kNone : nodes_[b].sibling;
            nodes_[a].sibling = kNone;
            if (b != kNone) {
                nodes_[b].sibling = kNone;
                scratch_.push_back(meld(a, b));
            } else {
                scratch_.push_back(a);
            }
        }
        std::uint32_t result = scratch_.back();
        for (std::size_t i = scratch_.size() - 1; i-- > 0;) result = meld(scratch_[i], result);
        return result;
    }

    void detach(std::uint32_t slot) {
        const std::uint32_t parent = nodes_[slot].parent;
        std::uint32_t cur = nodes_[parent].child;
        if (cur == slot) {
            nodes_[parent].child = nodes_[slot].sibling;
        } else {
            while (nodes_[cur].sibling != slot) cur = nodes_[cur].sibling;
            nodes_[cur].sibling = nodes_[slot].sibling;
        }
        nodes_[slot].parent = nodes_[slot].sibling = kNone;
    }

    std::uint32_t alloc_slot() {
        if (!free_.empty()) {
            const std::uint32_t slot = free_.back();
            free_.pop_back();
            return slot;
        }
        nodes_.emplace_back();
        return static_cast<std::uint32_t>(nodes_.size() - 1);
    }

    void release_slot(std::uint32_t slot) {
        nodes_[slot].live = false;
        nodes_[slot].generation++;
        nodes_[slot].child = nodes_[slot].parent = nodes_[slot].sibling = kNone;
        free_.push_back(slot);
    }

    void check_handle(HeapHandle h) const {
        if (!h.valid() || h.slot >= nodes_.size() || !nodes_[h.slot].live ||
            nodes_[h.slot].generation != h.generation)
            throw_error(Errc::logic, "stale or invalid heap handle");
    }

    std::vector<Node> nodes_;
    std::vector<std::uint32_t> free_;
    std::vector<std::uint32_t> scratch_;
    std::uint32_t root_ = kNone;
    std::uint64_t next_seq_ = 0;
    std::size_t size_ = 0;
};

}  // namespace mowsp
