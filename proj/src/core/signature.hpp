#ifndef ORV_CORE_SIGNATURE_HPP_
#define ORV_CORE_SIGNATURE_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/ids.hpp"

namespace orv {

// The system signature: the set L of lifelines and the set M of messages.
// Identifiers are unique, non-empty, and the two namespaces are disjoint so
// that the text formats can resolve a bare identifier unambiguously.
class Signature {
  public:
    Signature() = default;

    LifelineId add_lifeline(const std::string& name);
    MessageId add_message(const std::string& name);

    std::size_t lifeline_count() const { return lifelines_.size(); }
    std::size_t message_count() const { return messages_.size(); }

    const std::string& lifeline_name(LifelineId l) const { return lifelines_.at(l); }
    const std::string& message_name(MessageId m) const { return messages_.at(m); }

    std::optional<LifelineId> find_lifeline(const std::string& name) const;
    std::optional<MessageId> find_message(const std::string& name) const;

    // Mask with one bit per declared lifeline.
    LifelineSet all_lifelines() const { return LifelineSet::first_n(lifelines_.size()); }

    std::string action_text(const CommAction& a) const {
        return lifeline_name(a.lifeline) + (a.kind == ActionKind::Emit ? "!" : "?") +
               message_name(a.message);
    }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.lifelines_ == b.lifelines_ && a.messages_ == b.messages_;
    }

  private:
    void check_fresh(const std::string& name) const;

    std::vector<std::string> lifelines_;
    std::vector<std::string> messages_;
    std::unordered_map<std::string, LifelineId> lifeline_index_;
    std::unordered_map<std::string, MessageId> message_index_;
};

}  // namespace orv

#endif  // ORV_CORE_SIGNATURE_HPP_
