#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncpart {

/// A sequence s_1..s_n with 1 <= s_i <= i such that s_i = j forces
/// s_{i-r} <= j - r for 1 <= r <= j-1. The empty sequence is the element
/// for n = 0.
class CatSeq {
public:
    CatSeq() = default;

    /// Throws ValidationError naming the violated condition.
    explicit CatSeq(std::vector<int> entries);

    std::size_t size() const { return entries_.size(); }
    const std::vector<int>& entries() const { return entries_; }
    /// 1-based.
    int at(std::size_t i) const { return entries_.at(i - 1); }

    /// Space-separated decimal entries; empty for n = 0.
    std::string to_string() const;

    bool operator==(const CatSeq&) const = default;

private:
    std::vector<int> entries_;
};

bool validate_sequence(std::span<const int> s);

/// Human-readable description of the first violated condition, or nullopt.
std::optional<std::string> sequence_violation(std::span<const int> s);

/// Parses space-separated integers. Throws ParseError on anything else.
/// Blank text is the empty sequence. Does not check membership.
std::vector<int> parse_sequence(std::string_view text);

std::string format_sequence(std::span<const int> s);

/// Generation state: positions are filled right to left starting at n. Unset
/// positions hold 1 in values(); bounds() holds, per position, the largest
/// value that keeps the eventual sequence valid given the positions already set.
class GoverningState {
public:
    explicit GoverningState(int n);

    int size() const { return static_cast<int>(values_.size()); }
    /// 1-based position filled by the next set_value; 0 once complete.
    int cursor() const { return cursor_; }
    bool complete() const { return cursor_ == 0; }

    const std::vector<int>& values() const { return values_; }
    const std::vector<int>& bounds() const { return bounds_; }

    /// Largest legal value at the cursor.
    int cursor_bound() const;

    /// Sets the cursor position to m and moves the cursor one step left.
    /// Throws ValidationError if m < 1, m exceeds the bound, or the state is
    /// already complete.
    GoverningState set_value(int m) const;

    bool operator==(const GoverningState&) const = default;

private:
    std::vector<int> values_;
    std::vector<int> bounds_;
    int cursor_ = 0;
};

std::vector<int> governing_bounds(const GoverningState& state);

/// States reached by playing `choices` from the initial state of size n:
/// element 0 is the initial state, element k the state after k choices.
std::vector<GoverningState> replay_choices(int n, std::span<const int> choices);

/// Visits every element of S_n once by depth-first search over legal values at
/// each cursor position, smaller values first.
void for_each_sequence(int n, const std::function<void(std::span<const int>)>& visit);

std::vector<CatSeq> generate_all(int n);

}  // namespace ncpart
