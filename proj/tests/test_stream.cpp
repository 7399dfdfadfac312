#include <cstddef>
#include <deque>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mmx/indicator.hpp"
#include "mmx/stream.hpp"
#include "support/fixtures.hpp"

using namespace mmx;

namespace {

MiniMaxSeries batch_of(const std::deque<double>& tail, const IndicatorParams& params) {
    PriceSeries s;
    s.values.assign(tail.begin(), tail.end());
    return minimax(s, params);
}

}  // namespace

TEST_CASE("stream warms up before answering queries") {
    MiniMaxStream stream(3, IndicatorParams{1, Direction::Up});
    CHECK(!stream.ready());
    CHECK_THROWS_AS(stream.query(), std::logic_error);
    stream.push(1.0);
    stream.push(2.0);
    CHECK(!stream.ready());
    CHECK_THROWS_AS(stream.query(), std::logic_error);
    stream.push(4.0);
    CHECK(stream.ready());
    CHECK(stream.size() == 3);
    CHECK(stream.window() == 3);

    CHECK_THROWS_AS(stream.push(0.0), std::domain_error);
    CHECK_THROWS_AS(stream.push(-3.0), std::domain_error);
    CHECK_THROWS_AS(MiniMaxStream(1, IndicatorParams{}), std::invalid_argument);
    CHECK_THROWS_AS(MiniMaxStream(4, IndicatorParams{0, Direction::Up}), std::invalid_argument);
}

TEST_CASE("sliding queries match batch evaluation bit for bit") {
    const IndicatorParams params{1, Direction::Up};
    MiniMaxStream stream(3, params);
    std::deque<double> tail;
    for (double price : {1.0, 2.0, 4.0, 3.0, 5.0}) {
        stream.push(price);
        tail.push_back(price);
        if (tail.size() > 3) tail.pop_front();
        if (!stream.ready()) continue;
        const MiniMaxSeries got = stream.query();
        const MiniMaxSeries want = batch_of(tail, params);
        REQUIRE(got.weights.size() == want.weights.size());
        for (std::size_t i = 0; i < want.weights.size(); ++i)
            CHECK(got.weights[i] == want.weights[i]);
    }
}

TEST_CASE("long runs stay exact for both directions") {
    for (Direction dir : {Direction::Up, Direction::Down}) {
        const IndicatorParams params{8, dir};
        const std::size_t window = 64;
        MiniMaxStream stream(window, params);
        std::deque<double> tail;
        const PriceSeries feed = fixtures::random_walk(dir == Direction::Up ? 606u : 607u, 400,
                                                       100.0, 0.02);
        for (double price : feed.values) {
            stream.push(price);
            tail.push_back(price);
            if (tail.size() > window) tail.pop_front();
            if (!stream.ready()) continue;
            const MiniMaxSeries got = stream.query();
            const MiniMaxSeries want = batch_of(tail, params);
            for (std::size_t i = 0; i < window; ++i) CHECK(got.weights[i] == want.weights[i]);
        }
    }
}

TEST_CASE("per push work stays within the constant bound") {
    SUBCASE("tight case: smallest window") {
        MiniMaxStream stream(2, IndicatorParams{1, Direction::Up});
        const PriceSeries feed = fixtures::uniform_series(17, 50);
        for (double price : feed.values) {
            stream.push(price);
            CHECK(stream.last_push_q_recomputes() <= 4);  // 2m + 2
        }
    }
    SUBCASE("typical window") {
        const int m = 8;
        MiniMaxStream stream(64, IndicatorParams{m, Direction::Down});
        const PriceSeries feed = fixtures::random_walk(18, 300);
        std::uint64_t running = 0;
        for (double price : feed.values) {
            stream.push(price);
            running += stream.last_push_q_recomputes();
            if (stream.ready())
                CHECK(stream.last_push_q_recomputes() <= 2 * m + 2);
            else
                CHECK(stream.last_push_q_recomputes() <= m + 2);
        }
        CHECK(stream.total_q_recomputes() == running);
    }
    SUBCASE("reach wider than the window") {
        const int m = 10;
        MiniMaxStream stream(4, IndicatorParams{m, Direction::Up});
        std::deque<double> tail;
        const IndicatorParams params{m, Direction::Up};
        const PriceSeries feed = fixtures::uniform_series(19, 60);
        for (double price : feed.values) {
            stream.push(price);
            CHECK(stream.last_push_q_recomputes() <= 2 * m + 2);
            tail.push_back(price);
            if (tail.size() > 4) tail.pop_front();
            if (!stream.ready()) continue;
            const MiniMaxSeries got = stream.query();
            const MiniMaxSeries want = batch_of(tail, params);
            for (std::size_t i = 0; i < 4; ++i) CHECK(got.weights[i] == want.weights[i]);
        }
    }
}
