#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

namespace rpods {

/// Node-count plus wall-clock limit; whichever trips first ends the search.
struct Budget
{
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    std::chrono::milliseconds wall = std::chrono::milliseconds::max();

    static auto unlimited() -> Budget { return {}; }
    static auto nodes(std::uint64_t n) -> Budget { return {n, std::chrono::milliseconds::max()}; }
    static auto time(std::chrono::milliseconds ms) -> Budget
    {
        return {std::numeric_limits<std::uint64_t>::max(), ms};
    }
};

/// Parses "250ms", "3s", "2m", "1h" or a bare number of seconds.
auto parse_duration(std::string_view text) -> std::optional<std::chrono::milliseconds>;

/// Shared, thread-safe accounting against a Budget.  tick() is cheap; the
/// clock is only consulted every 1024 nodes.
class BudgetMeter
{
public:
    explicit BudgetMeter(const Budget & budget);

    /// Counts one node; returns false once the budget is exhausted.
    auto tick() -> bool;

    auto exhausted() const -> bool { return exhausted_.load(std::memory_order_relaxed); }
    auto nodes() const -> std::uint64_t { return nodes_.load(std::memory_order_relaxed); }
    auto elapsed() const -> std::chrono::milliseconds;

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
};

} // namespace rpods
