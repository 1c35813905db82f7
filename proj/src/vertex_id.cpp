#include "weightlab/vertex_id.hpp"

#include <cctype>

#include "weightlab/errors.hpp"

namespace weightlab {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_separator(char c) { return !std::isalnum(static_cast<unsigned char>(c)) && c != '-'; }

// A number token starts at `i` if s[i] is a digit, or s[i] is '-' directly
// followed by a digit and preceded by nothing or a separator.
bool number_starts(std::string_view s, std::size_t i) {
    if (is_digit(s[i])) return true;
    return s[i] == '-' && i + 1 < s.size() && is_digit(s[i + 1]) &&
           (i == 0 || is_separator(s[i - 1]));
}

struct NumberToken {
    bool negative = false;
    std::string_view digits;  // leading zeros stripped
    std::size_t end = 0;
};

NumberToken read_number(std::string_view s, std::size_t i) {
    NumberToken t;
    if (s[i] == '-') {
        t.negative = true;
        ++i;
    }
    std::size_t start = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    std::size_t first = start;
    while (first + 1 < i && s[first] == '0') ++first;
    t.digits = s.substr(first, i - first);
    t.end = i;
    if (t.digits == "0") t.negative = false;
    return t;
}

std::strong_ordering compare_magnitude(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    int c = a.compare(b);
    return c <=> 0;
}

std::strong_ordering compare_numbers(const NumberToken& a, const NumberToken& b) {
    if (a.negative != b.negative) {
        return a.negative ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    auto mag = compare_magnitude(a.digits, b.digits);
    if (a.negative) return 0 <=> mag;
    return mag;
}

}  // namespace

std::strong_ordering natural_compare(std::string_view a, std::string_view b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        bool na = number_starts(a, i);
        bool nb = number_starts(b, j);
        if (na && nb) {
            NumberToken ta = read_number(a, i);
            NumberToken tb = read_number(b, j);
            if (auto c = compare_numbers(ta, tb); c != 0) return c;
            i = ta.end;
            j = tb.end;
            continue;
        }
        // numbers sort before any other character
        if (na != nb) return na ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a[i] != b[j]) {
            return static_cast<unsigned char>(a[i]) <=> static_cast<unsigned char>(b[j]);
        }
        ++i;
        ++j;
    }
    if ((a.size() - i) != 0 || (b.size() - j) != 0) {
        return (a.size() - i) <=> (b.size() - j);
    }
    int c = a.compare(b);
    return c <=> 0;
}

EdgeKey::EdgeKey(VertexId a, VertexId b) {
    if (a == b) throw InputError("loop edge at vertex '" + a.value + "'");
    if (b < a) std::swap(a, b);
    u = std::move(a);
    v = std::move(b);
}

std::strong_ordering EdgeKey::operator<=>(const EdgeKey& other) const {
    if (auto c = u <=> other.u; c != 0) return c;
    return v <=> other.v;
}

}  // namespace weightlab
