#ifndef VENKIT_RING_HPP
#define VENKIT_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace venkit {

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ordered list of named variables. Laurent-flagged variables admit
/// negative exponents (localized rings such as Z[x, x^-1, v]).
class RingSpec {
public:
    RingSpec(std::vector<std::string> names, std::vector<bool> laurent);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    bool laurent(std::size_t i) const { return laurent_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<bool>& laurent_flags() const { return laurent_; }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws if absent

    bool operator==(const RingSpec& o) const {
        return names_ == o.names_ && laurent_ == o.laurent_;
    }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }
    bool same_variables(const RingSpec& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::vector<bool> laurent_;
};

using Ring = std::shared_ptr<const RingSpec>;

/// Build a ring from variable names; `laurent` lists the inverted subset.
Ring make_ring(std::vector<std::string> names,
               const std::vector<std::string>& laurent = {});

/// Same variables, different localization.
Ring with_laurent(const Ring& ring, const std::vector<std::string>& laurent);

inline bool same_ring(const Ring& a, const Ring& b) {
    return a == b || *a == *b;
}

}  // namespace venkit

#endif
