#include <ramsey_pods/budget.hpp>

#include <charconv>
#include <string>

namespace rpods {

auto parse_duration(std::string_view text) -> std::optional<std::chrono::milliseconds>
{
    double value = 0.0;
    std::size_t pos = 0;
    try {
        value = std::stod(std::string(text), &pos);
    }
    catch (const std::exception &) {
        return std::nullopt;
    }
    if (value < 0)
        return std::nullopt;
    auto unit = text.substr(pos);
    double scale = 1000.0;
    if (unit == "ms")
        scale = 1.0;
    else if (unit == "s" || unit.empty())
        scale = 1000.0;
    else if (unit == "m")
        scale = 60'000.0;
    else if (unit == "h")
        scale = 3'600'000.0;
    else
        return std::nullopt;
    return std::chrono::milliseconds(static_cast<std::int64_t>(value * scale));
}

BudgetMeter::BudgetMeter(const Budget & budget) :
    budget_(budget), start_(std::chrono::steady_clock::now())
{
}

auto BudgetMeter::tick() -> bool
{
    if (exhausted_.load(std::memory_order_relaxed))
        return false;
    auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_.max_nodes) {
        exhausted_.store(true, std::memory_order_relaxed);
        return false;
    }
    if ((n & 1023) == 0 && budget_.wall != std::chrono::milliseconds::max() && elapsed() > budget_.wall) {
        exhausted_.store(true, std::memory_order_relaxed);
        return false;
    }
    return true;
}

auto BudgetMeter::elapsed() const -> std::chrono::milliseconds
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
}

} // namespace rpods
