#include "qfib/tilings.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qfib/errors.hpp"
#include "qfib/qtools.hpp"

namespace qfib {

namespace {

// Boards at least this long are worth splitting across threads.
constexpr int kParallelMinBoard = 18;
// Prefixes cover this many cells; the tail of the board is walked per task.
constexpr int kPrefixCells = 12;

struct Prefix {
  std::vector<Tile> word;
  int next_pos = 1;
  TileWeight w;
};

void collect_prefixes(int n, int depth, int pos, std::vector<Tile>& word,
                      TileWeight& w, std::vector<Prefix>& out) {
  if (pos > depth || pos > n) {
    out.push_back(Prefix{word, pos, w});
    return;
  }
  word.push_back(Tile::kSquare);
  int& square_exponent = pos % 2 == 1 ? w.a_exponent : w.b_exponent;
  ++square_exponent;
  collect_prefixes(n, depth, pos + 1, word, w, out);
  --square_exponent;
  word.pop_back();
  if (pos + 1 <= n) {
    word.push_back(Tile::kDomino);
    w.q_exponent += pos;
    collect_prefixes(n, depth, pos + 2, word, w, out);
    w.q_exponent -= pos;
    word.pop_back();
  }
}

std::vector<Prefix> board_prefixes(int n) {
  std::vector<Prefix> out;
  std::vector<Tile> word;
  TileWeight w;
  collect_prefixes(n, kPrefixCells, 1, word, w, out);
  return out;
}

// Runs the per-tiling visitor over every completion of every prefix, one
// accumulator per thread, then folds the accumulators in index order.  The
// fold is a plain polynomial sum, so the result does not depend on the
// schedule.
template <typename Accumulator, typename Visit>
Accumulator aggregate_parallel(int n, const Accumulator& empty, Visit visit) {
  const std::vector<Prefix> prefixes = board_prefixes(n);
#ifdef _OPENMP
  std::vector<Accumulator> partial(omp_get_max_threads(), empty);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t idx = 0; idx < prefixes.size(); ++idx) {
    Accumulator& acc = partial[omp_get_thread_num()];
    std::vector<Tile> word = prefixes[idx].word;
    TileWeight w = prefixes[idx].w;
    auto visitor = [&](const std::vector<Tile>& full, const TileWeight& fw) {
      visit(acc, full, fw);
    };
    detail::visit_tilings(n, prefixes[idx].next_pos, word, w, visitor);
  }
#else
  std::vector<Accumulator> partial(1, empty);
  for (std::size_t idx = 0; idx < prefixes.size(); ++idx) {
    Accumulator& acc = partial[0];
    std::vector<Tile> word = prefixes[idx].word;
    TileWeight w = prefixes[idx].w;
    auto visitor = [&](const std::vector<Tile>& full, const TileWeight& fw) {
      visit(acc, full, fw);
    };
    detail::visit_tilings(n, prefixes[idx].next_pos, word, w, visitor);
  }
#endif
  Accumulator total = empty;
  for (const Accumulator& part : partial) total += part;
  return total;
}

// Locates the median square of a word with an odd number of squares and
// reports the dominoes strictly left and right of it.
std::pair<int, int> median_split(const std::vector<Tile>& word) {
  int squares = 0;
  int dominoes = 0;
  for (Tile t : word) {
    if (t == Tile::kSquare) ++squares;
    else ++dominoes;
  }
  const int target = (squares + 1) / 2;
  int seen_squares = 0;
  int left_dominoes = 0;
  for (Tile t : word) {
    if (t == Tile::kSquare) {
      if (++seen_squares == target) break;
    } else {
      ++left_dominoes;
    }
  }
  return {left_dominoes, dominoes - left_dominoes};
}

// Wrapper so the census grid can ride through aggregate_parallel's +=.
struct CellGrid {
  std::vector<std::vector<Polynomial>> cells;

  CellGrid& operator+=(const CellGrid& other) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = 0; j < cells[i].size(); ++j) {
        cells[i][j] += other.cells[i][j];
      }
    }
    return *this;
  }
};

MedianCensus census_from_grid(int n, CellGrid grid) {
  MedianCensus census;
  census.half_n = n;
  census.cells = std::move(grid.cells);
  return census;
}

}  // namespace

int Tiling::board_length() const {
  int length = 0;
  for (Tile t : tiles) length += t == Tile::kSquare ? 1 : 2;
  return length;
}

TileWeight weight_of(const Tiling& tiling) {
  TileWeight w;
  int pos = 1;
  for (Tile t : tiling.tiles) {
    if (t == Tile::kSquare) {
      ++(pos % 2 == 1 ? w.a_exponent : w.b_exponent);
      pos += 1;
    } else {
      w.q_exponent += pos;
      pos += 2;
    }
  }
  return w;
}

std::string tiling_word(const Tiling& tiling) {
  std::string word;
  word.reserve(tiling.tiles.size());
  for (Tile t : tiling.tiles) word += t == Tile::kSquare ? 'S' : 'D';
  return word;
}

mpz_class tiling_count(int n) {
  if (n < 0) throw DomainError("board length must be non-negative");
  mpz_class prev = 1;
  mpz_class curr = 1;
  for (int i = 2; i <= n; ++i) {
    mpz_class next = curr + prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return n == 0 ? mpz_class(1) : curr;
}

void check_enumeration_cap(int n, int cap) {
  if (n < 0) throw DomainError("board length must be non-negative");
  if (n > cap) {
    throw ResourceError("enumerating the " + std::to_string(n) +
                        "-board would visit " + tiling_count(n).get_str() +
                        " tilings; the cap is board length " +
                        std::to_string(cap));
  }
}

std::vector<Tiling> enumerate_tilings(int n, int cap) {
  check_enumeration_cap(n, cap);
  std::vector<Tiling> out;
  for_each_tiling(n, [&](const std::vector<Tile>& word, const TileWeight&) {
    out.push_back(Tiling{word});
  });
  return out;
}

Polynomial total_weight_serial(int n, int cap) {
  check_enumeration_cap(n, cap);
  Polynomial total;
  for_each_tiling(n, [&](const std::vector<Tile>&, const TileWeight& w) {
    total.add_term(Monomial{w.a_exponent, w.b_exponent, w.q_exponent}, 1);
  });
  return total;
}

Polynomial total_weight(int n, int cap) {
  check_enumeration_cap(n, cap);
  if (n < kParallelMinBoard) return total_weight_serial(n, cap);
  return aggregate_parallel<Polynomial>(
      n, Polynomial{},
      [](Polynomial& acc, const std::vector<Tile>&, const TileWeight& w) {
        acc.add_term(Monomial{w.a_exponent, w.b_exponent, w.q_exponent}, 1);
      });
}

Polynomial weight_by_tile_count(int n_tiles, int k_dominoes, int cap) {
  if (n_tiles < 0 || k_dominoes < 0) {
    throw DomainError("tile counts must be non-negative");
  }
  if (k_dominoes > n_tiles) return Polynomial{};
  const int board = n_tiles + k_dominoes;
  check_enumeration_cap(board, cap);
  Polynomial total;
  for_each_tiling(board,
                  [&](const std::vector<Tile>& word, const TileWeight& w) {
                    if (static_cast<int>(word.size()) != n_tiles) return;
                    total.add_term(
                        Monomial{w.a_exponent, w.b_exponent, w.q_exponent}, 1);
                  });
  return total;
}

Polynomial weight_by_tile_count_closed(int n_tiles, int k_dominoes) {
  if (n_tiles < 0 || k_dominoes < 0) {
    throw DomainError("tile counts must be non-negative");
  }
  if (k_dominoes > n_tiles) return Polynomial{};
  const long long half = floor_div(n_tiles - k_dominoes, 2);
  return q_binomial(n_tiles, k_dominoes) *
         Polynomial::monomial(1, xi(n_tiles + k_dominoes), 0,
                              k_dominoes * k_dominoes) *
         Polynomial::monomial(1, static_cast<int>(half),
                              static_cast<int>(half), 0);
}

std::pair<Polynomial, Polynomial> breakability_split(int n, int m, int cap) {
  if (m < 0 || m > n) throw DomainError("break cell must satisfy 0 <= m <= n");
  check_enumeration_cap(n, cap);
  Polynomial breakable;
  Polynomial unbreakable;
  for_each_tiling(n, [&](const std::vector<Tile>& word, const TileWeight& w) {
    bool covers_break = false;
    int pos = 1;
    for (Tile t : word) {
      if (t == Tile::kDomino && pos == m) {
        covers_break = true;
        break;
      }
      pos += t == Tile::kSquare ? 1 : 2;
      if (pos > m) break;
    }
    (covers_break ? unbreakable : breakable)
        .add_term(Monomial{w.a_exponent, w.b_exponent, w.q_exponent}, 1);
  });
  return {breakable, unbreakable};
}

Polynomial MedianCensus::grand_total() const {
  Polynomial total;
  for (const auto& row : cells) {
    for (const Polynomial& cell : row) total += cell;
  }
  return total;
}

MedianCensus median_square_census_serial(int n, int cap) {
  if (n < 0) throw DomainError("census index must be non-negative");
  const int board = 2 * n + 1;
  check_enumeration_cap(board, cap);
  CellGrid grid{std::vector<std::vector<Polynomial>>(
      n + 1, std::vector<Polynomial>(n + 1))};
  for_each_tiling(board,
                  [&](const std::vector<Tile>& word, const TileWeight& w) {
                    const auto [left, right] = median_split(word);
                    grid.cells[left][right].add_term(
                        Monomial{w.a_exponent, w.b_exponent, w.q_exponent}, 1);
                  });
  return census_from_grid(n, std::move(grid));
}

MedianCensus median_square_census(int n, int cap) {
  if (n < 0) throw DomainError("census index must be non-negative");
  const int board = 2 * n + 1;
  check_enumeration_cap(board, cap);
  if (board < kParallelMinBoard) return median_square_census_serial(n, cap);
  CellGrid empty{std::vector<std::vector<Polynomial>>(
      n + 1, std::vector<Polynomial>(n + 1))};
  CellGrid grid = aggregate_parallel<CellGrid>(
      board, empty,
      [](CellGrid& acc, const std::vector<Tile>& word, const TileWeight& w) {
        const auto [left, right] = median_split(word);
        acc.cells[left][right].add_term(
            Monomial{w.a_exponent, w.b_exponent, w.q_exponent}, 1);
      });
  return census_from_grid(n, std::move(grid));
}

Polynomial median_cell_closed(int n, int i, int j) {
  if (n < 0 || i < 0 || j < 0) {
    throw DomainError("census cell indices must be non-negative");
  }
  if (i + j > n) return Polynomial{};
  const int ab = n - i - j;
  return q_binomial(n - j, i) * q_binomial(n - i, j) *
         Polynomial::monomial(1, ab + 1, ab, i * i + (n + i + 1) * j);
}

}  // namespace qfib
