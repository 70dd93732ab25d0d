#include "mcf/combinatorics.hpp"

#include <atomic>

#include "mcf/parallel.hpp"
#include "mcf/simplex.hpp"

namespace mcf {

BoolMat::BoolMat(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > 8) throw Error(ErrorKind::InvalidDimension, "pattern matrices have size 1 .. 8");
}

BoolMat BoolMat::identity(std::size_t dim) {
  BoolMat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i);
  return m;
}

BoolMat operator*(const BoolMat& x, const BoolMat& y) noexcept {
  BoolMat r(x.dim_);
  for (std::size_t i = 0; i < x.dim_; ++i) {
    std::uint8_t row = 0;
    for (std::size_t k = 0; k < x.dim_; ++k)
      if ((x.rows_[i] >> k) & 1U) row |= y.rows_[k];
    r.rows_[i] = row;
  }
  return r;
}

namespace {

template <class M>
BoolMat pattern_of(const M& m) {
  BoolMat b(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m(i, j) < 0) throw Error(ErrorKind::InvalidInput, "scrambling is defined for nonnegative matrices");
      if (m(i, j) > 0) b.set(i, j);
    }
  return b;
}

void require_game_dimension(int n) {
  if (n < 2 || n > 7) throw Error(ErrorKind::InvalidDimension, "game needs 2 <= n <= 7");
}

}  // namespace

BoolMat pattern(const IntMat& m) { return pattern_of(m); }
BoolMat pattern(const RatMat& m) { return pattern_of(m); }

bool is_scrambling(const BoolMat& c) noexcept {
  std::uint8_t cols[8] = {};
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j)
      if (c(i, j)) cols[j] |= static_cast<std::uint8_t>(1U << i);
  for (std::size_t j1 = 0; j1 < c.dim(); ++j1)
    for (std::size_t j2 = j1 + 1; j2 < c.dim(); ++j2)
      if ((cols[j1] & cols[j2]) == 0) return false;
  return true;
}

bool is_scrambling(const IntMat& c) { return is_scrambling(pattern(c)); }
bool is_scrambling(const RatMat& c) { return is_scrambling(pattern(c)); }

std::size_t scrambling_bound(int n) { return static_cast<std::size_t>((n + 1) * n / 2); }

BoolMat word_pattern(int n, const Word& w) {
  const auto& m = map_matrices(n);
  const BoolMat b[2] = {pattern(m.B[0]), pattern(m.B[1])};
  BoolMat p = BoolMat::identity(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < w.size(); ++i) p = p * b[w[i]];
  return p;
}

std::optional<Word> non_scrambling_word(int n, std::size_t s) {
  if (n < 1 || n > 7) throw Error(ErrorKind::InvalidDimension, "pattern products need 1 <= n <= 7");
  if (s > 30) throw Error(ErrorKind::InvalidInput, "word length above 30 is not searched exhaustively");
  const auto& m = map_matrices(n);
  const BoolMat b[2] = {pattern(m.B[0]), pattern(m.B[1])};
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  if (s == 0) {
    if (is_scrambling(BoolMat::identity(d))) return std::nullopt;
    return Word{};
  }

  // Each task fixes the leading `split` digits and runs a depth-first walk
  // over the rest, reusing prefix products.
  const std::size_t split = std::min<std::size_t>(s, 6);
  const std::size_t tasks = std::size_t{1} << split;
  std::vector<std::optional<std::uint64_t>> found(tasks);
  std::atomic<std::size_t> best_task{tasks};
  parallel_for(tasks, [&](std::size_t task) {
    if (task > best_task.load()) return;
    BoolMat prefix = BoolMat::identity(d);
    for (std::size_t i = 0; i < split; ++i) prefix = prefix * b[(task >> (split - 1 - i)) & 1U];
    const std::size_t rest = s - split;
    std::vector<BoolMat> stack(rest + 1, prefix);
    for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << rest);) {
      // Rebuild from the deepest level that changed.
      std::size_t level = 0;
      if (tail != 0) level = rest - 1 - static_cast<std::size_t>(__builtin_ctzll(tail));
      for (std::size_t i = level; i < rest; ++i) stack[i + 1] = stack[i] * b[(tail >> (rest - 1 - i)) & 1U];
      if (!is_scrambling(stack[rest])) {
        found[task] = (static_cast<std::uint64_t>(task) << rest) | tail;
        std::size_t cur = best_task.load();
        while (task < cur && !best_task.compare_exchange_weak(cur, task)) {
        }
        return;
      }
      ++tail;
    }
  });
  for (const auto& f : found)
    if (f) return Word::from_bits(*f, s);
  return std::nullopt;
}

bool all_products_scrambling(int n, std::size_t s) { return !non_scrambling_word(n, s).has_value(); }

bool all_products_scrambling(int n) {
  if (n < 2 || n > 6) throw Error(ErrorKind::InvalidDimension, "exhaustive check needs 2 <= n <= 6");
  return all_products_scrambling(n, scrambling_bound(n));
}

std::size_t min_scrambling_length(int n) {
  if (n < 1 || n > 7) throw Error(ErrorKind::InvalidDimension, "pattern products need 1 <= n <= 7");
  // If every product of length s is scrambling, so is every longer one.
  for (std::size_t s = 0; s <= 30; ++s)
    if (all_products_scrambling(n, s)) return s;
  throw Error(ErrorKind::InvalidInput, "no scrambling length up to 30");
}

std::vector<int> successors(int n, int a, int v) {
  require_game_dimension(n);
  if (v < 1 || v > n + 1) throw Error(ErrorKind::InvalidInput, "vertex out of range");
  const IntMat& m = map_matrices(n).A[a];
  std::vector<int> out;
  for (int i = 1; i <= n + 1; ++i)
    if (m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(v - 1)) > 0) out.push_back(i);
  return out;
}

int backward_predecessor(int n, int v) {
  require_game_dimension(n);
  const IntMat& a0 = map_matrices(n).A[0];
  const IntMat& a1 = map_matrices(n).A[1];
  int found = 0;
  for (int u = 1; u <= n + 1; ++u) {
    const auto i = static_cast<std::size_t>(v - 1), j = static_cast<std::size_t>(u - 1);
    const bool common = a0(i, j) > 0 && a1(i, j) > 0;
    if (!common) continue;
    if (found != 0) throw Error(ErrorKind::StrategyViolation, "backward predecessor is not unique");
    found = u;
  }
  if (found == 0) throw Error(ErrorKind::StrategyViolation, "vertex has no backward predecessor");
  return found;
}

namespace {

// Length of the backward path from `from` to `to`, if any.
std::optional<int> backward_distance(int n, int from, int to) {
  int v = from;
  for (int len = 1; len <= 2 * (n + 1); ++len) {
    v = backward_predecessor(n, v);
    if (v == to) return len;
  }
  return std::nullopt;
}

void require_pair(int n, int p, int q) {
  if (p < 1 || q < 1 || p > n + 1 || q > n + 1 || p == q)
    throw Error(ErrorKind::InvalidInput, "need two distinct vertices in 1 .. n+1");
}

}  // namespace

int leading_vertex(int n, int p, int q) {
  require_game_dimension(n);
  require_pair(n, p, q);
  const auto pq = backward_distance(n, p, q), qp = backward_distance(n, q, p);
  if (pq && (!qp || *pq < *qp)) return p;
  if (qp && (!pq || *qp < *pq)) return q;
  if (!pq) throw Error(ErrorKind::StrategyViolation, "pair is not joined by a backward path");
  const int dp = p == 1 ? 0 : backward_distance(n, 1, p).value();
  const int dq = q == 1 ? 0 : backward_distance(n, 1, q).value();
  return dp <= dq ? p : q;
}

Chi chi(int n, int p, int q) {
  const int lead = leading_vertex(n, p, q);
  const int other = lead == p ? q : p;
  Chi c;
  c.gap = backward_distance(n, lead, other).value();
  c.defect = lead == 1 ? 0 : backward_distance(n, 1, lead).value();
  return c;
}

std::size_t lovers_game_value(int n) {
  require_game_dimension(n);
  const int d = n + 1;
  // value[p][q], p < q; -1 while undecided.
  std::vector<std::vector<int>> value(static_cast<std::size_t>(d + 1), std::vector<int>(static_cast<std::size_t>(d + 1), -1));
  auto val = [&](int p, int q) -> int {
    if (p == q) return 0;
    return value[static_cast<std::size_t>(std::min(p, q))][static_cast<std::size_t>(std::max(p, q))];
  };
  for (int k = 1; k <= d * d; ++k) {
    std::vector<std::pair<int, int>> fresh;
    for (int p = 1; p <= d; ++p)
      for (int q = p + 1; q <= d; ++q) {
        if (val(p, q) >= 0) continue;
        bool forced = true;
        for (int a = 0; a < 2 && forced; ++a) {
          bool reach = false;
          for (int p2 : successors(n, a, p))
            for (int q2 : successors(n, a, q)) {
              const int v = val(p2, q2);
              reach = reach || (v >= 0 && v <= k - 1);
            }
          forced = reach;
        }
        if (forced) fresh.emplace_back(p, q);
      }
    for (auto [p, q] : fresh) value[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = k;
  }
  int worst = 0;
  for (int p = 1; p <= d; ++p)
    for (int q = p + 1; q <= d; ++q) {
      if (val(p, q) < 0) throw Error(ErrorKind::StrategyViolation, "the Enemy can keep some pair apart forever");
      worst = std::max(worst, val(p, q));
    }
  return static_cast<std::size_t>(worst);
}

namespace {

int unique_move(int n, int a, int v) {
  const auto s = successors(n, a, v);
  if (s.size() != 1) throw Error(ErrorKind::StrategyViolation, "vertex has no unique edge");
  return s.front();
}

}  // namespace

std::pair<int, int> strategy_move(int n, int p, int q, int a) {
  require_game_dimension(n);
  require_pair(n, p, q);
  const int last = n + 1;
  if (std::min(p, q) == 1 && std::max(p, q) == last) {
    const int meet = a == 0 ? 1 : 2;
    return {meet, meet};
  }
  if (p != last && q != last) return {unique_move(n, a, p), unique_move(n, a, q)};
  const bool p_last = p == last;
  const int other = p_last ? q : p;
  const int moved_other = unique_move(n, a, other);
  const int moved_last = leading_vertex(n, p, q) == last ? 1 : 2;
  return p_last ? std::pair{moved_last, moved_other} : std::pair{moved_other, moved_last};
}

std::size_t strategy_simulate(int n, int p, int q, const Word& enemy) {
  require_game_dimension(n);
  if (p == q) return 0;
  std::size_t moves = 0;
  while (p != q) {
    if (moves == enemy.size()) throw Error(ErrorKind::StrategyViolation, "enemy word ran out before the Lovers met");
    const Chi before = chi(n, p, q);
    const auto [p2, q2] = strategy_move(n, p, q, enemy[moves]);
    ++moves;
    if (p2 != q2 && !(chi(n, p2, q2) < before))
      throw Error(ErrorKind::StrategyViolation, "chi did not decrease");
    p = p2;
    q = q2;
  }
  if (moves > scrambling_bound(n)) throw Error(ErrorKind::StrategyViolation, "strategy exceeded (n+1)n/2 moves");
  return moves;
}

bool strategy_descends(int n) {
  require_game_dimension(n);
  for (int p = 1; p <= n + 1; ++p)
    for (int q = p + 1; q <= n + 1; ++q)
      for (int a = 0; a < 2; ++a) {
        const auto [p2, q2] = strategy_move(n, p, q, a);
        if (p2 != q2 && !(chi(n, p2, q2) < chi(n, p, q))) return false;
      }
  return true;
}

}  // namespace mcf
