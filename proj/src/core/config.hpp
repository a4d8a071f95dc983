#ifndef ORV_CORE_CONFIG_HPP_
#define ORV_CORE_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/measure.hpp"

namespace orv {

enum class Strategy : std::uint8_t { BFS, DFS, HCS };

// Ordering policy for scheduling candidate steps. Weights bias classes of
// steps (higher first); ties fall back to lexicographic position order, or
// to a seeded shuffle in random mode.
struct Priorities {
    enum class Mode : std::uint8_t { Lexicographic, Random };
    Mode mode = Mode::Lexicographic;
    std::uint64_t seed = 0;
    long emission = 0;
    long reception = 0;
    long loop = 0;
    long simu = -1;  // simulation steps rank below execution steps by default
};

struct ExploreFilters {
    std::optional<long> max_depth;
    std::optional<long> max_loop_insts;  // cumulative loop instantiations along a path
    std::optional<std::size_t> max_node_number;
};

enum class GenMode : std::uint8_t { Exact, Prefix, Terminal };

enum class Verdict : std::uint8_t { Pass, WeakPass, WeakFail };
enum class Omega : std::uint8_t { Pass, Inconc };

inline Omega omega_of(Verdict v) { return v == Verdict::WeakFail ? Omega::Inconc : Omega::Pass; }

std::string to_string(Verdict v);
std::string to_string(Omega v);

enum class AnalysisKind : std::uint8_t { Accept, Prefix, Simulate };

// Lifeline grouping written in a configuration file; resolved against a
// signature when used.
struct PartitionSpec {
    enum class Kind : std::uint8_t { Discrete, Trivial, Groups };
    Kind kind = Kind::Discrete;
    std::vector<std::vector<std::string>> groups;
};

struct GraphicLoggerSpec {
    bool vertical = true;  // drawing direction of the emitted DOT graph
};

struct TracegenLoggerSpec {
    GenMode mode = GenMode::Exact;
    PartitionSpec partition;
};

struct LoggerSpec {
    enum class Type : std::uint8_t { Graphic, Tracegen };
    Type type = Type::Graphic;
    GraphicLoggerSpec graphic;
    TracegenLoggerSpec tracegen;
};

struct ExploreOptions {
    std::vector<LoggerSpec> loggers;
    Strategy strategy = Strategy::BFS;
    ExploreFilters filters;
    Priorities priorities;
};

struct AnalyzeOptions {
    std::vector<LoggerSpec> loggers;
    AnalysisKind kind = AnalysisKind::Simulate;
    MeasureOptions measure;
    Strategy strategy = Strategy::DFS;
    Priorities priorities;
    Verdict goal = Verdict::WeakPass;
};

struct ConfigFile {
    std::optional<ExploreOptions> explore;
    std::optional<AnalyzeOptions> analyze;
};

}  // namespace orv

#endif  // ORV_CORE_CONFIG_HPP_
