#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

namespace weightlab {

// Three-way natural comparison: maximal digit runs (with an optional leading
// '-' at the start of the string or after a separator) compare numerically,
// everything else byte-wise. Ties fall back to plain string order so the
// result is a strict total order consistent with string equality.
std::strong_ordering natural_compare(std::string_view a, std::string_view b);

// Opaque vertex identifier. Structured coordinates (path integers, grid
// pairs, tree words) are stored in their canonical text encoding.
struct VertexId {
    std::string value;

    VertexId() = default;
    VertexId(std::string v) : value(std::move(v)) {}
    VertexId(const char* v) : value(v) {}

    bool operator==(const VertexId&) const = default;
    std::strong_ordering operator<=>(const VertexId& other) const {
        return natural_compare(value, other.value);
    }

    const std::string& str() const { return value; }
};

// Unordered vertex pair, stored with u < v.
struct EdgeKey {
    VertexId u;
    VertexId v;

    EdgeKey() = default;
    EdgeKey(VertexId a, VertexId b);

    bool operator==(const EdgeKey&) const = default;
    std::strong_ordering operator<=>(const EdgeKey& other) const;

    std::string str() const { return u.value + "-" + v.value; }
};

}  // namespace weightlab

template <>
struct std::hash<weightlab::VertexId> {
    std::size_t operator()(const weightlab::VertexId& id) const noexcept {
        return std::hash<std::string>{}(id.value);
    }
};
