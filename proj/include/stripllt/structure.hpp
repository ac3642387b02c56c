#pragma once

#include "stripllt/strips.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Row indices are 1-based.

namespace sllt {

struct NoncommutingPath {
    std::vector<int> indices; // increasing, at least three
};

bool is_noncommuting_path(const HorizontalStrip& s, const std::vector<int>& idx);
bool is_minimal_ncp(const HorizontalStrip& s, const std::vector<int>& idx);
std::optional<NoncommutingPath> find_minimal_ncp(const HorizontalStrip& s, int i, int j);

bool is_strict_pair(const HorizontalStrip& s, int i, int j);
std::vector<std::pair<int, int>> strict_pairs(const HorizontalStrip& s);

struct StrictSequence {
    std::vector<int> indices;
    int witness = 0; // h

    friend bool operator==(const StrictSequence&, const StrictSequence&) = default;
    friend auto operator<=>(const StrictSequence&, const StrictSequence&) = default;
};

// Sorted; one entry per (sequence, witness) pair.
std::vector<StrictSequence> strict_sequences(const HorizontalStrip& s);

bool is_nesting(const HorizontalStrip& s);

HorizontalStrip local_rotate(const HorizontalStrip& s, int i);

enum class MoveKind { Translate, Cycle, Rotate, CommuteSwap, LocalRotate };

struct Move {
    MoveKind kind = MoveKind::Cycle;
    int arg = 0; // row index, or the shift for Translate

    friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

// Every move except Translate is followed by normalize_translation.
HorizontalStrip apply_move(const HorizontalStrip& s, const Move& m);

std::optional<std::vector<Move>> similarity_witness(const HorizontalStrip& from, const HorizontalStrip& to,
                                                    long budget = 100000);

} // namespace sllt
