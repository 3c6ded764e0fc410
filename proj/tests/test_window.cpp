#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "keyfuse/window.hpp"

using namespace keyfuse;

namespace {

KeyQueue queue_of(const KeySpace& s, std::initializer_list<KeyValue> vs) {
    KeyQueue q(s);
    for (KeyValue v : vs) {
        q.push(v);
    }
    return q;
}

} // namespace

TEST_CASE("queue is first-in first-out") {
    KeySpace s(3);
    auto q = queue_of(s, {4, 1, 7});
    CHECK(q.size() == 3);
    CHECK(q.pop() == 4);
    CHECK(q.pop() == 1);
    CHECK(q.pop() == 7);
    CHECK(q.empty());
    CHECK_THROWS_AS(q.pop(), UnderflowError);
    CHECK_THROWS_AS(q.push(8), RangeError);
}

TEST_CASE("window plan validation") {
    CHECK_THROWS_AS(WindowPlan(0, 3), ValidationError);
    CHECK_THROWS_AS(WindowPlan(2, 0), ValidationError);
    CHECK(WindowPlan(3, 4).total_keys() == 12);
}

TEST_CASE("disjoint assignment covers the key stream") {
    CHECK(assign_windows(WindowPlan(1, 3)) ==
          std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    CHECK(assign_windows(WindowPlan(2, 2)) ==
          std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
    CHECK(assign_windows(WindowPlan(3, 2)) ==
          std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4, 5}});

    // every raw key index appears exactly once
    const WindowPlan plan(4, 7);
    const auto windows = assign_windows(plan);
    std::vector<std::size_t> flat;
    for (const auto& w : windows) {
        CHECK(w.size() == 4);
        flat.insert(flat.end(), w.begin(), w.end());
    }
    std::vector<std::size_t> expected(plan.total_keys());
    std::iota(expected.begin(), expected.end(), 0u);
    CHECK(flat == expected);
}

TEST_CASE("fused message keys") {
    KeySpace s2(2);
    const auto xor2 = KftSpec::make_xor(s2);
    auto q = queue_of(s2, {1, 2, 3});
    CHECK(fused_message_keys(xor2, q, WindowPlan(3, 1)) == std::vector<KeyValue>{0});
    CHECK(q.empty());

    KeySpace s4(4);
    const auto add4 = KftSpec::make_add_mod(s4);
    auto q2 = queue_of(s4, {5, 6, 7, 8});
    CHECK(fused_message_keys(add4, q2, WindowPlan(2, 2)) == std::vector<KeyValue>{11, 15});

    // w = 1 degenerates to the raw queue prefix and leaves the rest
    auto q3 = queue_of(s4, {9, 3, 14, 2});
    CHECK(fused_message_keys(add4, q3, WindowPlan(1, 3)) == std::vector<KeyValue>{9, 3, 14});
    CHECK(q3.size() == 1);

    auto q4 = queue_of(s4, {1, 2, 3});
    CHECK_THROWS_AS(fused_message_keys(add4, q4, WindowPlan(2, 2)), UnderflowError);
    CHECK(q4.size() == 3); // nothing consumed on failure

    auto q5 = queue_of(s4, {1, 2, 3, 4});
    CHECK_THROWS_AS(fused_message_keys(xor2, q5, WindowPlan(2, 2)), DimensionError);
}

TEST_CASE("in-window shuffles are invisible for commutative-associative instances") {
    KeySpace s(3);
    for (const auto& k : {KftSpec::make_xor(s), KftSpec::make_add_mod(s)}) {
        REQUIRE(check_laws(k).commutative);
        REQUIRE(check_laws(k).associative);
        const std::vector<KeyValue> keys{3, 7, 1, 4, 0, 6};
        const WindowPlan plan(3, 2);

        auto run = [&](const std::vector<KeyValue>& order) {
            KeyQueue q(s);
            for (KeyValue v : order) {
                q.push(v);
            }
            return fused_message_keys(k, q, plan);
        };
        const auto baseline = run(keys);

        // permute inside each window: message keys unchanged
        std::vector<std::size_t> idx{0, 1, 2};
        do {
            std::vector<KeyValue> order;
            for (std::size_t i : idx) {
                order.push_back(keys[i]);
            }
            for (std::size_t i : idx) {
                order.push_back(keys[3 + i]);
            }
            CHECK(run(order) == baseline);
        } while (std::next_permutation(idx.begin(), idx.end()));

        // swapping keys across windows changes some message key
        std::vector<KeyValue> crossed = keys;
        std::swap(crossed[0], crossed[3]);
        CHECK(run(crossed) != baseline);
    }
}

TEST_CASE("a non-associative instance is order sensitive inside a window") {
    KeySpace s(2);
    const auto sub = KftSpec::make_sub_mod(s);
    auto q1 = queue_of(s, {1, 2});
    auto q2 = queue_of(s, {2, 1});
    CHECK(fused_message_keys(sub, q1, WindowPlan(2, 1)) == std::vector<KeyValue>{3});
    CHECK(fused_message_keys(sub, q2, WindowPlan(2, 1)) == std::vector<KeyValue>{1});
}
