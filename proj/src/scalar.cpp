#include "rnckit/scalar.hpp"

#include <cctype>

#include "rnckit/errors.hpp"

namespace rnckit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Scalar parse_scalar(std::string_view text, const std::string& location) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError(location, "malformed rational '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError(location, "zero denominator in '" + std::string(text) + "'");
    Scalar out(n, d);
    out.canonicalize();
    return negative ? Scalar(-out) : out;
}

std::string to_string(const Scalar& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_str();
}

bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (!is_zero(x)) return false;
    }
    return true;
}

void normalize_first(Vector& v) {
    for (const auto& x : v) {
        if (!is_zero(x)) {
            Scalar inv = 1 / x;
            for (auto& y : v) y *= inv;
            return;
        }
    }
}

void normalize_last(Vector& v) {
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (!is_zero(*it)) {
            Scalar inv = 1 / *it;
            for (auto& y : v) y *= inv;
            return;
        }
    }
}

Scalar dot(const Vector& a, const Vector& b) {
    Scalar acc = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace rnckit
