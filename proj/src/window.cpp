#include "keyfuse/window.hpp"

#include <string>

namespace keyfuse {

void KeyQueue::push(KeyValue v) {
    if (v >= space_.size()) {
        throw RangeError("key value " + std::to_string(v) + " outside [0, " +
                         std::to_string(space_.size()) + ")");
    }
    entries_.push_back(v);
}

KeyValue KeyQueue::pop() {
    if (entries_.empty()) {
        throw UnderflowError("pop from empty key queue");
    }
    const KeyValue v = entries_.front();
    entries_.pop_front();
    return v;
}

WindowPlan::WindowPlan(int window_size_, int message_count_, Policy policy_)
    : window_size(window_size_), message_count(message_count_), policy(policy_) {
    if (window_size < 1) {
        throw ValidationError("window size must be >= 1, got " + std::to_string(window_size));
    }
    if (message_count < 1) {
        throw ValidationError("message count must be >= 1, got " + std::to_string(message_count));
    }
}

std::vector<std::vector<std::size_t>> assign_windows(const WindowPlan& plan) {
    std::vector<std::vector<std::size_t>> windows(static_cast<std::size_t>(plan.message_count));
    std::size_t next = 0;
    for (auto& window : windows) {
        window.resize(static_cast<std::size_t>(plan.window_size));
        for (auto& idx : window) {
            idx = next++;
        }
    }
    return windows;
}

std::vector<KeyValue> fused_message_keys(const KftSpec& k, KeyQueue& q, const WindowPlan& plan) {
    if (q.space() != k.space()) {
        throw DimensionError("queue and transformation live on different key spaces");
    }
    if (q.size() < plan.total_keys()) {
        throw UnderflowError("queue holds " + std::to_string(q.size()) + " keys, plan needs " +
                             std::to_string(plan.total_keys()));
    }
    std::vector<KeyValue> message_keys;
    message_keys.reserve(static_cast<std::size_t>(plan.message_count));
    std::vector<KeyValue> window(static_cast<std::size_t>(plan.window_size));
    for (int i = 0; i < plan.message_count; ++i) {
        for (auto& v : window) {
            v = q.pop();
        }
        message_keys.push_back(fuse_keys(k, window));
    }
    return message_keys;
}

} // namespace keyfuse
