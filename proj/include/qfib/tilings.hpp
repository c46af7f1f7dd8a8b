#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qfib/polynomial.hpp"

namespace qfib {

enum class Tile : unsigned char { kSquare, kDomino };

// One tiling of an n-board, tiles listed left to right.
struct Tiling {
  std::vector<Tile> tiles;

  int board_length() const;
};

// Multiplicative weight of a tiling: a square on an odd cell contributes a,
// a square on an even cell contributes b, and a domino on cells (i, i+1)
// contributes q^i.
struct TileWeight {
  int a_exponent = 0;
  int b_exponent = 0;
  int q_exponent = 0;

  Polynomial to_polynomial() const {
    return Polynomial::monomial(1, a_exponent, b_exponent, q_exponent);
  }
};

TileWeight weight_of(const Tiling& tiling);

// Tile word in text form, 'S' for square and 'D' for domino; the empty
// board gives the empty word.
std::string tiling_word(const Tiling& tiling);

// Number of tilings of an n-board: the classical Fibonacci number with
// tiling_count(0) = tiling_count(1) = 1.
mpz_class tiling_count(int n);

// Boards longer than the cap raise ResourceError instead of enumerating.
inline constexpr int kDefaultEnumerationCap = 25;
void check_enumeration_cap(int n, int cap);

namespace detail {

// Depth-first walk over all completions of the current partial tiling.
// Trying the square before the domino at every cell makes the visit order
// lexicographic in the tile words.
template <typename Visitor>
void visit_tilings(int n, int pos, std::vector<Tile>& word, TileWeight& w,
                   Visitor& visit) {
  if (pos > n) {
    visit(word, w);
    return;
  }
  word.push_back(Tile::kSquare);
  int& square_exponent = pos % 2 == 1 ? w.a_exponent : w.b_exponent;
  ++square_exponent;
  visit_tilings(n, pos + 1, word, w, visit);
  --square_exponent;
  word.pop_back();
  if (pos + 1 <= n) {
    word.push_back(Tile::kDomino);
    w.q_exponent += pos;
    visit_tilings(n, pos + 2, word, w, visit);
    w.q_exponent -= pos;
    word.pop_back();
  }
}

}  // namespace detail

// Visits every tiling of the n-board in lexicographic order (square before
// domino).  The visitor receives the tile word and its weight; both refer
// to walk-local state and must be copied to be kept.
template <typename Visitor>
void for_each_tiling(int n, Visitor&& visit) {
  std::vector<Tile> word;
  TileWeight w;
  detail::visit_tilings(n, 1, word, w, visit);
}

// Materializes the tilings of the n-board in lexicographic order.
std::vector<Tiling> enumerate_tilings(int n, int cap = kDefaultEnumerationCap);

// Total weight of all tilings of the n-board; equals the (n+1)-st value of
// the weighted sequence.  total_weight aggregates prefix classes with
// OpenMP when available and falls back to the serial reference,
// total_weight_serial, otherwise.  Both produce identical polynomials.
Polynomial total_weight(int n, int cap = kDefaultEnumerationCap);
Polynomial total_weight_serial(int n, int cap = kDefaultEnumerationCap);

// Total weight of the tilings that use exactly n_tiles tiles of which
// k_dominoes are dominoes (board length n_tiles + k_dominoes), and its
// closed form
//   a^xi(n+k) q^(k^2) [n choose k]_q (ab)^floor((n-k)/2).
Polynomial weight_by_tile_count(int n_tiles, int k_dominoes,
                                int cap = kDefaultEnumerationCap);
Polynomial weight_by_tile_count_closed(int n_tiles, int k_dominoes);

// Splits the n-board total weight by breakability at cell m: a tiling is
// breakable there when no domino covers cells (m, m+1).  Returns the pair
// {breakable total, unbreakable total}.
std::pair<Polynomial, Polynomial> breakability_split(
    int n, int m, int cap = kDefaultEnumerationCap);

// Census of the tilings of the odd board 2n+1 by the position of the
// median square: cell (i, j) collects the weight of the tilings with i
// dominoes left of the median square and j dominoes right of it.
struct MedianCensus {
  int half_n = 0;  // board length is 2*half_n + 1
  std::vector<std::vector<Polynomial>> cells;

  Polynomial grand_total() const;
};

MedianCensus median_square_census(int n, int cap = kDefaultEnumerationCap);
MedianCensus median_square_census_serial(int n,
                                         int cap = kDefaultEnumerationCap);

// Weight predicted for census cell (i, j):
//   a (ab)^(n-i-j) q^(i^2 + (n+i+1) j) [n-j choose i]_q [n-i choose j]_q;
// zero when i + j > n.
Polynomial median_cell_closed(int n, int i, int j);

}  // namespace qfib
