#include "weightlab/presented.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <queue>
#include <set>

#include "weightlab/errors.hpp"

namespace weightlab {
namespace {

// Canonical decimal integer: no '+', no leading zeros, no "-0".
std::optional<std::int64_t> parse_canonical_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    if (std::to_string(value) != s) return std::nullopt;
    return value;
}

std::optional<std::pair<std::int64_t, std::int64_t>> parse_pair(std::string_view s) {
    auto comma = s.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto x = parse_canonical_int(s.substr(0, comma));
    auto y = parse_canonical_int(s.substr(comma + 1));
    if (!x || !y) return std::nullopt;
    return std::make_pair(*x, *y);
}

std::string pair_id(std::int64_t x, std::int64_t y) {
    return std::to_string(x) + "," + std::to_string(y);
}

// Tree word as child indices; nullopt if malformed.
std::optional<std::vector<unsigned>> parse_tree_word(std::string_view s, unsigned d) {
    if (s.empty() || s[0] != 'r') return std::nullopt;
    std::vector<unsigned> word;
    std::size_t i = 1;
    while (i < s.size()) {
        if (s[i] != '.') return std::nullopt;
        std::size_t j = i + 1;
        while (j < s.size() && s[j] != '.') ++j;
        auto k = parse_canonical_int(s.substr(i + 1, j - i - 1));
        if (!k || *k < 0) return std::nullopt;
        unsigned limit = word.empty() ? d : d - 1;
        if (static_cast<std::uint64_t>(*k) >= limit) return std::nullopt;
        word.push_back(static_cast<unsigned>(*k));
        i = j;
    }
    return word;
}

std::string tree_id(const std::vector<unsigned>& word) {
    std::string s = "r";
    for (unsigned k : word) s += "." + std::to_string(k);
    return s;
}

}  // namespace

PresentedGraph PresentedGraph::regular_tree(unsigned d) {
    if (d < 2) throw InputError("tree degree must be at least 2");
    return PresentedGraph(Family::RegularTree, d);
}

PresentedGraph PresentedGraph::parse(std::string_view name) {
    if (name == "path") return path();
    if (name == "grid2d") return grid2d();
    if (name == "ladder") return ladder();
    if (name.starts_with("tree:")) {
        auto d = parse_canonical_int(name.substr(5));
        if (!d || *d < 2 || *d > 1000) throw InputError("bad tree degree in '" + std::string(name) + "'");
        return regular_tree(static_cast<unsigned>(*d));
    }
    throw InputError("unknown family '" + std::string(name) + "'");
}

std::string PresentedGraph::name() const {
    switch (family_) {
        case Family::Path: return "path";
        case Family::Grid2d: return "grid2d";
        case Family::Ladder: return "ladder";
        case Family::RegularTree: return "tree:" + std::to_string(degree_);
    }
    return {};
}

bool PresentedGraph::is_vertex(const VertexId& v) const {
    switch (family_) {
        case Family::Path: return parse_canonical_int(v.value).has_value();
        case Family::Grid2d: return parse_pair(v.value).has_value();
        case Family::Ladder: {
            auto p = parse_pair(v.value);
            return p && (p->second == 0 || p->second == 1);
        }
        case Family::RegularTree: return parse_tree_word(v.value, degree_).has_value();
    }
    return false;
}

void PresentedGraph::validate(const VertexId& v) const {
    if (!is_vertex(v)) {
        throw InputError("malformed vertex id '" + v.value + "' for family " + name());
    }
}

std::vector<VertexId> PresentedGraph::neighbors(const VertexId& v) const {
    validate(v);
    std::vector<VertexId> out;
    switch (family_) {
        case Family::Path: {
            auto n = *parse_canonical_int(v.value);
            out = {VertexId(std::to_string(n - 1)), VertexId(std::to_string(n + 1))};
            break;
        }
        case Family::Grid2d: {
            auto [x, y] = *parse_pair(v.value);
            out = {pair_id(x - 1, y), pair_id(x + 1, y), pair_id(x, y - 1), pair_id(x, y + 1)};
            break;
        }
        case Family::Ladder: {
            auto [x, s] = *parse_pair(v.value);
            out = {pair_id(x - 1, s), pair_id(x + 1, s), pair_id(x, 1 - s)};
            break;
        }
        case Family::RegularTree: {
            auto word = *parse_tree_word(v.value, degree_);
            if (!word.empty()) {
                auto parent = word;
                parent.pop_back();
                out.emplace_back(tree_id(parent));
            }
            unsigned children = word.empty() ? degree_ : degree_ - 1;
            for (unsigned k = 0; k < children; ++k) {
                auto child = word;
                child.push_back(k);
                out.emplace_back(tree_id(child));
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexId PresentedGraph::default_center() const {
    switch (family_) {
        case Family::Path: return VertexId("0");
        case Family::Grid2d:
        case Family::Ladder: return VertexId("0,0");
        case Family::RegularTree: return VertexId("r");
    }
    return {};
}

std::vector<VertexId> Ball::within(unsigned r) const {
    std::vector<VertexId> out;
    for (const auto& id : members) {
        if (distance.at(id) <= r) out.push_back(id);
    }
    return out;
}

Ball ball(const PresentedGraph& p, const VertexId& center, unsigned radius) {
    p.validate(center);
    Ball b;
    b.center = center;
    b.radius = radius;
    b.distance.emplace(center, 0);
    std::queue<VertexId> frontier;
    frontier.push(center);
    while (!frontier.empty()) {
        VertexId x = frontier.front();
        frontier.pop();
        unsigned dx = b.distance.at(x);
        if (dx == radius) continue;
        for (auto& y : p.neighbors(x)) {
            if (b.distance.emplace(y, dx + 1).second) frontier.push(y);
        }
    }
    std::vector<std::pair<VertexId, DegreeTag>> vertices;
    std::set<EdgeKey> edges;
    for (const auto& [id, d] : b.distance) {
        b.members.push_back(id);
        vertices.emplace_back(id, DegreeTag::finite());
        for (auto& y : p.neighbors(id)) {
            if (b.distance.contains(y)) edges.emplace(id, y);
        }
    }
    b.graph = FiniteGraph(std::move(vertices), {edges.begin(), edges.end()});
    return b;
}

}  // namespace weightlab
