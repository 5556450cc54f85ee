#pragma once

// Exact desk-scale values of F, G, f and g with witnesses, budgets and a
// JSON-lines cache.

#include <ramsey_pods/budget.hpp>
#include <ramsey_pods/core.hpp>
#include <ramsey_pods/io.hpp>
#include <ramsey_pods/tournament.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <variant>

namespace rpods {

enum class Kind
{
    F, ///< longest r-increasing sequence in [n]^q
    G, ///< largest r-comparable set in [n]^q
    f, ///< min over ordered q-colorings of K_N of the longest <= r-colored monotone path
    g  ///< min over q-colored N-tournaments of the longest <= r-colored directed path
};

enum class Status
{
    Exact,
    LowerBound,
    UpperBound
};

/// Serial runs every branch root in order; Parallel hands roots to OpenMP.
/// Both return the same value and witness whenever the search closes.
enum class Execution
{
    Serial,
    Parallel
};

using Witness = std::variant<std::monostate, VectorFamily, OrderedColoring, ColoredTournament>;

struct ExtremalRecord
{
    Kind kind = Kind::F;
    int q = 0;
    int r = 0;
    int size = 0;
    std::int64_t value = 0;
    Status status = Status::Exact;
    Witness witness;
    std::uint64_t nodes = 0;
    double wall_ms = 0;
};

auto kind_name(Kind k) -> std::string;
auto parse_kind(std::string_view s) -> Kind;
auto status_name(Status s) -> std::string;
auto parse_status(std::string_view s) -> Status;

auto exact_F(int q, int r, int n, const Budget & budget = Budget::unlimited(), Execution exec = Execution::Parallel) -> ExtremalRecord;
auto exact_G(int q, int r, int n, const Budget & budget = Budget::unlimited()) -> ExtremalRecord;
auto exact_f(int q, int r, int n, const Budget & budget = Budget::unlimited(), Execution exec = Execution::Parallel) -> ExtremalRecord;
auto exact_g(int q, int r, int n, const Budget & budget = Budget::unlimited(), Execution exec = Execution::Parallel) -> ExtremalRecord;

auto run_search(Kind kind, int q, int r, int size, const Budget & budget = Budget::unlimited()) -> ExtremalRecord;

/// Checks that the witness has the right type and parameters and attains the
/// recorded value.  nullopt when consistent.
auto validate_record(const ExtremalRecord & rec) -> std::optional<std::string>;

auto record_to_json(const ExtremalRecord & rec) -> Json;
auto record_from_json(const Json & j) -> ExtremalRecord;

/// One CSV row: kind,q,r,size,value,status.
auto table_row(const ExtremalRecord & rec) -> std::string;
inline constexpr const char * table_header = "kind,q,r,size,value,status";

/// Append-only JSON-lines store keyed by (kind, q, r, size).  Loading
/// re-validates every witness and skips lines that fail; an Exact record is
/// never replaced by a bound.
class ExtremalCache
{
public:
    explicit ExtremalCache(std::filesystem::path path);

    /// $RAMSEY_PODS_CACHE, or ./cache.jsonl.
    static auto default_path() -> std::filesystem::path;

    auto get(Kind kind, int q, int r, int size) const -> std::optional<ExtremalRecord>;

    /// Returns false when the stored record is at least as informative.
    auto put(const ExtremalRecord & rec) -> bool;

    /// Rewrites the file with one line per key.
    auto compact() -> void;

    auto rejected_lines() const -> int { return rejected_; }
    auto path() const -> const std::filesystem::path & { return path_; }

private:
    using Key = std::tuple<Kind, int, int, int>;

    std::filesystem::path path_;
    std::map<Key, ExtremalRecord> records_;
    int rejected_ = 0;
    mutable std::mutex mutex_;
};

} // namespace rpods
