#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gkat/algebra.hpp"
#include "gkat/finite_algebra.hpp"

namespace gkat {

struct ConstructionOptions {
  /// Largest carrier realized as a finite table.
  std::size_t cap = 4096;
  /// Past the cap, fall back to a sampled algebra instead of throwing.
  bool allow_sampling = false;
  /// Random elements drawn for a sampled realization (tests drawn extra).
  std::size_t sample_count = 48;
  std::uint64_t seed = 0;
};

/// Pointwise map X -> T.
struct FuzzySet {
  std::vector<Element> values;
  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;
};

/// Row-major |X| x |X| map into K.
struct FuzzyRelation {
  std::size_t n = 0;
  std::vector<Element> values;
  Element at(std::size_t x, std::size_t y) const { return values[x * n + y]; }
  friend bool operator==(const FuzzyRelation&, const FuzzyRelation&) = default;
};

/// Square matrix over a base algebra.
struct Matrix {
  std::size_t n = 0;
  std::vector<Element> entries;
  Element at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Words over an alphabet up to a length bound, in shortlex order.
class WordSpace {
 public:
  WordSpace(std::string alphabet, std::size_t max_len);

  std::size_t size() const noexcept { return words_.size(); }
  const std::string& word(std::size_t i) const { return words_[i]; }
  /// Throws ParameterError for words outside the space.
  std::size_t index_of(std::string_view w) const;
  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t max_len() const noexcept { return max_len_; }
  /// Index pairs (u, v) with u.v equal to word i, shortest u first.
  const std::vector<std::pair<std::size_t, std::size_t>>& splits(std::size_t i) const {
    return splits_[i];
  }

 private:
  std::string alphabet_;
  std::size_t max_len_;
  std::vector<std::string> words_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> splits_;
};

/// Dense map from the words of a WordSpace into K; words past the bound
/// are not represented, so equality is equality up to that length.
struct FuzzyLanguage {
  std::vector<Element> values;
  friend bool operator==(const FuzzyLanguage&, const FuzzyLanguage&) = default;
};

// Raw operations. `K` supplies +, ; and star for entries.

FuzzyRelation frel_identity(const Algebra& K, std::size_t n);
FuzzyRelation frel_compose(const Algebra& K, const FuzzyRelation& mu, const FuzzyRelation& nu);
/// Least fixpoint of S |-> Delta + mu o S from Delta. `height` bounds the
/// number of strict increases per entry; throws NonMonotoneAlgebraError
/// after n*n*height + 1 rounds.
FuzzyRelation frel_star(const Algebra& K, const FuzzyRelation& mu, std::size_t height);

/// Sum over every split w = u.v, including empty u or v.
Element flang_concat(const Algebra& K, const WordSpace& words, const FuzzyLanguage& l1,
                     const FuzzyLanguage& l2, std::string_view w);
/// Value at w of the least fixpoint of S |-> eps + l.S.
Element flang_star(const Algebra& K, const WordSpace& words, const FuzzyLanguage& l,
                   std::string_view w);

Matrix mat_identity(const Algebra& A, std::size_t n);
Matrix mat_plus(const Algebra& A, const Matrix& x, const Matrix& y);
Matrix mat_seq(const Algebra& A, const Matrix& x, const Matrix& y);
/// 2x2 block recursion, splitting at n/2; the 1x1 case is A's star.
Matrix mat_star(const Algebra& A, const Matrix& m);

// Algebras. Finite realizations are tabulated; the others are sampled.

/// FSET(T) over ground set X (one character per point). Values range over
/// T's tests and every element is a test.
AlgebraPtr fset_algebra(AlgebraPtr T, std::string_view X, const ConstructionOptions& opts = {});

/// FREL(K, T) over X. T's tests are located in K by name; tests of the
/// result are the diagonal relations with test entries.
AlgebraPtr frel_algebra(AlgebraPtr K, AlgebraPtr T, std::string_view X,
                        const ConstructionOptions& opts = {});

/// FLANG(K, T) over alphabet sigma, words up to max_len. Always sampled.
AlgebraPtr flang_algebra(AlgebraPtr K, AlgebraPtr T, std::string_view sigma,
                         std::size_t max_len, const ConstructionOptions& opts = {});

/// M(n, A), sampled. Tests are diagonal matrices with test entries.
AlgebraPtr mat_algebra(AlgebraPtr A, std::size_t n, const ConstructionOptions& opts = {});

/// M(n, A) as a table when A is finite and |A|^(n*n) <= opts.cap.
FiniteAlgebraPtr mat_algebra_tabulated(AlgebraPtr A, std::size_t n,
                                       const ConstructionOptions& opts = {});

/// Parses "fset:<base>:<X>", "frel:<K>:<T>:<X>",
/// "flang:<K>:<T>:<sigma>:<maxlen>" and "mat:<base>:<n>". Bases are builtin
/// names or paths ending in ".alg".
AlgebraPtr make_construction(std::string_view spec, const ConstructionOptions& opts = {});

}  // namespace gkat
