#pragma once

// Scrambling products of B_0, B_1 and the pursuit game on their incidence
// graphs that bounds the product length needed.
//
// Vertices are numbered 1 .. n+1. The incidence graph of a matrix C has an
// edge j -> i iff C_ij > 0. The combined graph has the edges common to A_0
// and A_1 plus e_0 = (1 -> 1), active only for digit 0, and e_1 = (1 -> 2),
// active only for digit 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mcf/exact.hpp"
#include "mcf/word.hpp"

namespace mcf {

// Zero pattern of a square matrix of size <= 8, one byte per row.
class BoolMat {
 public:
  explicit BoolMat(std::size_t dim);
  static BoolMat identity(std::size_t dim);
  std::size_t dim() const noexcept { return dim_; }
  bool operator()(std::size_t i, std::size_t j) const noexcept { return (rows_[i] >> j) & 1U; }
  void set(std::size_t i, std::size_t j) noexcept { rows_[i] |= static_cast<std::uint8_t>(1U << j); }
  friend BoolMat operator*(const BoolMat& x, const BoolMat& y) noexcept;
  friend bool operator==(const BoolMat&, const BoolMat&) = default;

 private:
  std::size_t dim_ = 0;
  std::uint8_t rows_[8] = {};
};

// Throws InvalidInput on a negative entry, InvalidDimension above size 8.
BoolMat pattern(const IntMat& m);
BoolMat pattern(const RatMat& m);

bool is_scrambling(const BoolMat& c) noexcept;
bool is_scrambling(const IntMat& c);
bool is_scrambling(const RatMat& c);

// (n+1) n / 2.
std::size_t scrambling_bound(int n);

// Zero pattern of B_{w_0} ... B_{w_{s-1}} (same as for the A's).
BoolMat word_pattern(int n, const Word& w);

// First word of length s (in binary order) whose product is not
// scrambling. Requires 1 <= n <= 7 and s <= 30.
std::optional<Word> non_scrambling_word(int n, std::size_t s);
// Requires 2 <= n <= 6.
bool all_products_scrambling(int n);
bool all_products_scrambling(int n, std::size_t s);
// Least s such that every length-s product is scrambling.
std::size_t min_scrambling_length(int n);

// Out-neighbours of vertex v (1-based) when edge e_a is active.
std::vector<int> successors(int n, int a, int v);
// The unique vertex u with an edge u -> v other than e_0, e_1.
int backward_predecessor(int n, int v);

struct Chi {
  int gap = 0;
  int defect = 0;
  friend auto operator<=>(const Chi&, const Chi&) = default;
};

int leading_vertex(int n, int p, int q);
// Throws InvalidInput unless p != q are vertices of the graph.
Chi chi(int n, int p, int q);

// Minimax number of moves for the Lovers to meet, maximized over starting
// pairs, against an Enemy that sees the positions before choosing.
// Throws StrategyViolation if some pair can be kept apart forever.
std::size_t lovers_game_value(int n);

// One move of the explicit strategy; returns the new pair.
std::pair<int, int> strategy_move(int n, int p, int q, int a);
// Plays the explicit strategy against enemy[0], enemy[1], ... and returns
// the number of moves until the Lovers meet. Throws StrategyViolation if
// chi fails to decrease or the word runs out first.
std::size_t strategy_simulate(int n, int p, int q, const Word& enemy);
// chi decreases for every pair and every Enemy choice.
bool strategy_descends(int n);

}  // namespace mcf
