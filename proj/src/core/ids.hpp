#ifndef ORV_CORE_IDS_HPP_
#define ORV_CORE_IDS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

namespace orv {

// Base error for the library. Parse errors carry a position, see formats.hpp.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using LifelineId = std::uint16_t;
using MessageId = std::uint16_t;

// A set of lifelines as a bit mask. Systems are capped at 64 lifelines,
// which is far beyond the size of models this toolkit targets.
class LifelineSet {
  public:
    static constexpr std::size_t kMaxLifelines = 64;

    constexpr LifelineSet() : bits_(0) {}
    constexpr explicit LifelineSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr LifelineSet empty_set() { return LifelineSet(0); }
    // All 64 slots set. Pruning only ever tests membership of declared
    // lifelines, so the universe mask acts as "every lifeline".
    static constexpr LifelineSet universe() { return LifelineSet(~std::uint64_t{0}); }
    static constexpr LifelineSet single(LifelineId l) { return LifelineSet(std::uint64_t{1} << l); }
    static constexpr LifelineSet first_n(std::size_t n) {
        return LifelineSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    constexpr bool contains(LifelineId l) const { return (bits_ >> l) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr LifelineSet with(LifelineId l) const { return LifelineSet(bits_ | (std::uint64_t{1} << l)); }
    constexpr LifelineSet minus(LifelineSet o) const { return LifelineSet(bits_ & ~o.bits_); }
    constexpr LifelineSet intersect(LifelineSet o) const { return LifelineSet(bits_ & o.bits_); }
    constexpr LifelineSet unite(LifelineSet o) const { return LifelineSet(bits_ | o.bits_); }
    constexpr bool subset_of(LifelineSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr std::uint64_t bits() const { return bits_; }
    int count() const { return __builtin_popcountll(bits_); }

    friend constexpr bool operator==(LifelineSet a, LifelineSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(LifelineSet a, LifelineSet b) { return a.bits_ != b.bits_; }
    friend constexpr bool operator<(LifelineSet a, LifelineSet b) { return a.bits_ < b.bits_; }

  private:
    std::uint64_t bits_;
};

enum class ActionKind : std::uint8_t { Emit, Receive };

// One communication action: an emission l!m or a reception l?m.
struct CommAction {
    LifelineId lifeline = 0;
    ActionKind kind = ActionKind::Emit;
    MessageId message = 0;

    friend bool operator==(const CommAction& a, const CommAction& b) {
        return a.lifeline == b.lifeline && a.kind == b.kind && a.message == b.message;
    }
    friend bool operator!=(const CommAction& a, const CommAction& b) { return !(a == b); }
    friend bool operator<(const CommAction& a, const CommAction& b) {
        return std::tie(a.lifeline, a.kind, a.message) < std::tie(b.lifeline, b.kind, b.message);
    }
};

inline CommAction emit(LifelineId l, MessageId m) { return CommAction{l, ActionKind::Emit, m}; }
inline CommAction receive(LifelineId l, MessageId m) { return CommAction{l, ActionKind::Receive, m}; }

}  // namespace orv

#endif  // ORV_CORE_IDS_HPP_
