#include "ncpart/catalan_sequences.hpp"

#include <algorithm>
#include <charconv>

#include "ncpart/error.hpp"

namespace ncpart {

CatSeq::CatSeq(std::vector<int> entries) : entries_(std::move(entries)) {
    if (auto why = sequence_violation(entries_)) throw ValidationError(*why);
}

std::string CatSeq::to_string() const { return format_sequence(entries_); }

std::optional<std::string> sequence_violation(std::span<const int> s) {
    const int n = static_cast<int>(s.size());
    for (int i = 1; i <= n; ++i) {
        const int j = s[i - 1];
        if (j < 1 || j > i) {
            return "condition (i) fails: s_" + std::to_string(i) + " = " + std::to_string(j) +
                   " is outside [1," + std::to_string(i) + "]";
        }
    }
    for (int i = 1; i <= n; ++i) {
        const int j = s[i - 1];
        for (int r = 1; r <= j - 1; ++r) {
            if (s[i - r - 1] > j - r) {
                return "condition (ii) fails: s_" + std::to_string(i) + " = " + std::to_string(j) +
                       " needs s_" + std::to_string(i - r) + " <= " + std::to_string(j - r);
            }
        }
    }
    return std::nullopt;
}

bool validate_sequence(std::span<const int> s) { return !sequence_violation(s).has_value(); }

std::vector<int> parse_sequence(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++pos;
            continue;
        }
        int value = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        const auto consumed = static_cast<std::size_t>(end - (text.data() + pos));
        if (ec != std::errc() || consumed == 0) {
            throw ParseError("malformed sequence text '" + std::string(text) + "'");
        }
        pos += consumed;
        if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r') {
            throw ParseError("malformed sequence text '" + std::string(text) + "'");
        }
        out.push_back(value);
    }
    return out;
}

std::string format_sequence(std::span<const int> s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
    }
    return out;
}

namespace {

std::size_t checked_length(int n) {
    if (n < 0) throw ValidationError("sequence length must be non-negative");
    return static_cast<std::size_t>(n);
}

}  // namespace

GoverningState::GoverningState(int n) : values_(checked_length(n), 1), cursor_(n) {
    bounds_.resize(static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q) bounds_[q - 1] = q;
}

int GoverningState::cursor_bound() const {
    if (complete()) throw ValidationError("governing state is complete");
    return bounds_[cursor_ - 1];
}

GoverningState GoverningState::set_value(int m) const {
    if (complete()) throw ValidationError("governing state is complete");
    const int q = cursor_;
    if (m < 1 || m > bounds_[q - 1]) {
        throw ValidationError("value " + std::to_string(m) + " at position " + std::to_string(q) +
                              " exceeds the bound " + std::to_string(bounds_[q - 1]));
    }
    GoverningState next = *this;
    next.values_[q - 1] = m;
    next.bounds_[q - 1] = m;
    // s_q = m caps the m-1 positions to its left at m-1, m-2, ..., 1.
    for (int r = 1; r <= m - 1; ++r) {
        int& bound = next.bounds_[q - r - 1];
        bound = std::min(bound, m - r);
    }
    next.cursor_ = q - 1;
    return next;
}

std::vector<int> governing_bounds(const GoverningState& state) { return state.bounds(); }

std::vector<GoverningState> replay_choices(int n, std::span<const int> choices) {
    std::vector<GoverningState> states{GoverningState(n)};
    for (int m : choices) states.push_back(states.back().set_value(m));
    return states;
}

namespace {

void descend(const GoverningState& state, const std::function<void(std::span<const int>)>& visit) {
    if (state.complete()) {
        visit(state.values());
        return;
    }
    const int limit = state.cursor_bound();
    for (int m = 1; m <= limit; ++m) descend(state.set_value(m), visit);
}

}  // namespace

void for_each_sequence(int n, const std::function<void(std::span<const int>)>& visit) {
    descend(GoverningState(n), visit);
}

std::vector<CatSeq> generate_all(int n) {
    std::vector<CatSeq> out;
    for_each_sequence(n, [&](std::span<const int> s) {
        out.emplace_back(std::vector<int>(s.begin(), s.end()));
    });
    return out;
}

}  // namespace ncpart
