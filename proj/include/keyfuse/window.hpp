#pragma once

#include <cstddef>
#include <deque>
#include <vector>

#include "keyfuse/kft.hpp"

namespace keyfuse {

/// FIFO queue of raw keys, as both endpoints maintain it. Single-owner
/// mutable state; not safe for concurrent mutation.
class KeyQueue {
public:
    explicit KeyQueue(const KeySpace& space) : space_(space) {}

    const KeySpace& space() const { return space_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    void push(KeyValue v);
    KeyValue pop();

private:
    KeySpace space_;
    std::deque<KeyValue> entries_;
};

/// Assignment of raw keys to protected messages: message i consumes the w
/// fresh keys [i*w, (i+1)*w).
struct WindowPlan {
    enum class Policy { Disjoint };

    WindowPlan(int window_size, int message_count, Policy policy = Policy::Disjoint);

    int window_size;
    int message_count;
    Policy policy;

    std::size_t total_keys() const {
        return static_cast<std::size_t>(window_size) * static_cast<std::size_t>(message_count);
    }
};

/// The per-message index lists: K lists of w raw-key indices, disjoint and
/// covering [0, K*w).
std::vector<std::vector<std::size_t>> assign_windows(const WindowPlan& plan);

/// Dequeues K*w raw keys and folds each window into one message key.
std::vector<KeyValue> fused_message_keys(const KftSpec& k, KeyQueue& q, const WindowPlan& plan);

} // namespace keyfuse
