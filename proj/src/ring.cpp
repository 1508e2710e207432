#include "venkit/ring.hpp"

#include <algorithm>
#include <unordered_set>

namespace venkit {

RingSpec::RingSpec(std::vector<std::string> names, std::vector<bool> laurent)
    : names_(std::move(names)), laurent_(std::move(laurent)) {
    if (names_.size() != laurent_.size())
        throw error("ring: variable/flag count mismatch");
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw error("ring: empty variable name");
        if (!seen.insert(n).second)
            throw error("ring: duplicate variable '" + n + "'");
    }
}

std::optional<std::size_t> RingSpec::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t RingSpec::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw error("ring: unknown variable '" + std::string(name) + "'");
}

Ring make_ring(std::vector<std::string> names,
               const std::vector<std::string>& laurent) {
    std::vector<bool> flags(names.size(), false);
    for (const auto& l : laurent) {
        auto it = std::find(names.begin(), names.end(), l);
        if (it == names.end())
            throw error("ring: laurent variable '" + l + "' not in ring");
        flags[static_cast<std::size_t>(it - names.begin())] = true;
    }
    return std::make_shared<const RingSpec>(std::move(names), std::move(flags));
}

Ring with_laurent(const Ring& ring, const std::vector<std::string>& laurent) {
    return make_ring(ring->names(), laurent);
}

}  // namespace venkit
