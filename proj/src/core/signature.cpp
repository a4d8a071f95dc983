#include "core/signature.hpp"

namespace orv {

void Signature::check_fresh(const std::string& name) const {
    if (name.empty()) {
        throw Error("empty identifier in signature");
    }
    if (lifeline_index_.count(name) || message_index_.count(name)) {
        throw Error("duplicate identifier in signature: " + name);
    }
}

LifelineId Signature::add_lifeline(const std::string& name) {
    check_fresh(name);
    if (lifelines_.size() >= LifelineSet::kMaxLifelines) {
        throw Error("too many lifelines (at most 64 are supported)");
    }
    auto id = static_cast<LifelineId>(lifelines_.size());
    lifelines_.push_back(name);
    lifeline_index_.emplace(name, id);
    return id;
}

MessageId Signature::add_message(const std::string& name) {
    check_fresh(name);
    auto id = static_cast<MessageId>(messages_.size());
    messages_.push_back(name);
    message_index_.emplace(name, id);
    return id;
}

std::optional<LifelineId> Signature::find_lifeline(const std::string& name) const {
    auto it = lifeline_index_.find(name);
    if (it == lifeline_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<MessageId> Signature::find_message(const std::string& name) const {
    auto it = message_index_.find(name);
    if (it == message_index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace orv
