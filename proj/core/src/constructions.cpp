#include "gkat/constructions.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "gkat/algebra_file.hpp"
#include "gkat/errors.hpp"
#include "gkat/instances.hpp"
#include "gkat/value_algebra.hpp"

namespace gkat {

// ---------------------------------------------------------------- words

WordSpace::WordSpace(std::string alphabet, std::size_t max_len)
    : alphabet_(std::move(alphabet)), max_len_(max_len) {
  if (alphabet_.empty()) throw ParameterError("alphabet must not be empty");
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_.find(alphabet_[i]) != i) throw ParameterError("alphabet repeats a letter");
  }
  std::vector<std::string> layer{""};
  words_.push_back("");
  for (std::size_t len = 1; len <= max_len_; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (char c : alphabet_) next.push_back(w + c);
    }
    if (words_.size() + next.size() > 1'000'000) throw SizeError("word space too large");
    words_.insert(words_.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  splits_.resize(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const auto& w = words_[i];
    for (std::size_t k = 0; k <= w.size(); ++k) {
      splits_[i].emplace_back(index_of(std::string_view(w).substr(0, k)),
                              index_of(std::string_view(w).substr(k)));
    }
  }
}

std::size_t WordSpace::index_of(std::string_view w) const {
  if (w.size() > max_len_) throw ParameterError("word longer than the length bound");
  // Shortlex rank: words of shorter length first, then base-|alphabet| digits.
  const std::size_t s = alphabet_.size();
  std::size_t offset = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len < w.size(); ++len) {
    offset += layer;
    layer *= s;
  }
  std::size_t rank = 0;
  for (char c : w) {
    const auto pos = alphabet_.find(c);
    if (pos == std::string::npos) throw ParameterError(std::string("letter '") + c + "' not in alphabet");
    rank = rank * s + pos;
  }
  return offset + rank;
}

// ---------------------------------------------------------------- relations

FuzzyRelation frel_identity(const Algebra& K, std::size_t n) {
  FuzzyRelation r{n, std::vector<Element>(n * n, K.zero())};
  for (std::size_t i = 0; i < n; ++i) r.values[i * n + i] = K.one();
  return r;
}

FuzzyRelation frel_compose(const Algebra& K, const FuzzyRelation& mu, const FuzzyRelation& nu) {
  if (mu.n != nu.n) throw DomainMismatchError("relations over different ground sets");
  const std::size_t n = mu.n;
  FuzzyRelation out{n, std::vector<Element>(n * n, K.zero())};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Element acc = K.zero();
      for (std::size_t z = 0; z < n; ++z) acc = K.plus(acc, K.seq(mu.at(x, z), nu.at(z, y)));
      out.values[x * n + y] = acc;
    }
  }
  return out;
}

namespace {

FuzzyRelation frel_plus(const Algebra& K, const FuzzyRelation& a, const FuzzyRelation& b) {
  if (a.n != b.n) throw DomainMismatchError("relations over different ground sets");
  FuzzyRelation out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = K.plus(a.values[i], b.values[i]);
  return out;
}

std::size_t height_of(const Algebra& K) {
  if (auto f = dynamic_cast<const FiniteAlgebra*>(&K)) return std::max<std::size_t>(1, f->height());
  return 4096;
}

}  // namespace

FuzzyRelation frel_star(const Algebra& K, const FuzzyRelation& mu, std::size_t height) {
  const FuzzyRelation delta = frel_identity(K, mu.n);
  const std::size_t bound = mu.n * mu.n * height + 1;
  FuzzyRelation s = delta;
  for (std::size_t round = 0; round <= bound; ++round) {
    FuzzyRelation next = frel_plus(K, delta, frel_compose(K, mu, s));
    if (next == s) return s;
    s = std::move(next);
  }
  throw NonMonotoneAlgebraError("relation star did not stabilise within " +
                                std::to_string(bound) + " rounds");
}

// ---------------------------------------------------------------- languages

namespace {

FuzzyLanguage lang_concat(const Algebra& K, const WordSpace& words, const FuzzyLanguage& a,
                          const FuzzyLanguage& b) {
  FuzzyLanguage out{std::vector<Element>(words.size(), K.zero())};
  for (std::size_t i = 0; i < words.size(); ++i) {
    Element acc = K.zero();
    for (auto [u, v] : words.splits(i)) acc = K.plus(acc, K.seq(a.values[u], b.values[v]));
    out.values[i] = acc;
  }
  return out;
}

FuzzyLanguage lang_epsilon(const Algebra& K, const WordSpace& words, Element value) {
  FuzzyLanguage out{std::vector<Element>(words.size(), K.zero())};
  out.values[0] = value;
  return out;
}

FuzzyLanguage lang_star(const Algebra& K, const WordSpace& words, const FuzzyLanguage& l) {
  const FuzzyLanguage eps = lang_epsilon(K, words, K.one());
  const std::size_t bound = words.size() * height_of(K) + 1;
  FuzzyLanguage s = eps;
  for (std::size_t round = 0; round <= bound; ++round) {
    FuzzyLanguage next = lang_concat(K, words, l, s);
    for (std::size_t i = 0; i < next.values.size(); ++i) next.values[i] = K.plus(eps.values[i], next.values[i]);
    if (next == s) return s;
    s = std::move(next);
  }
  throw NonMonotoneAlgebraError("language star did not stabilise");
}

}  // namespace

Element flang_concat(const Algebra& K, const WordSpace& words, const FuzzyLanguage& l1,
                     const FuzzyLanguage& l2, std::string_view w) {
  const std::size_t i = words.index_of(w);
  Element acc = K.zero();
  for (auto [u, v] : words.splits(i)) acc = K.plus(acc, K.seq(l1.values[u], l2.values[v]));
  return acc;
}

Element flang_star(const Algebra& K, const WordSpace& words, const FuzzyLanguage& l,
                   std::string_view w) {
  // Only suffixes of w feed the value at w: s[k] is the star at w[k..],
  // the least solution of s[k] = [k = |w|] + sum_j l(w[k..j]);s[j].
  const std::size_t n = w.size();
  words.index_of(w);
  std::vector<Element> s(n + 1, K.zero());
  for (std::size_t round = 0; round <= (n + 1) * height_of(K) + 1; ++round) {
    bool changed = false;
    for (std::size_t k = n + 1; k-- > 0;) {
      Element acc = k == n ? K.one() : K.zero();
      for (std::size_t j = k; j <= n; ++j) {
        acc = K.plus(acc, K.seq(l.values[words.index_of(w.substr(k, j - k))], s[j]));
      }
      if (acc != s[k]) {
        s[k] = acc;
        changed = true;
      }
    }
    if (!changed) return s[0];
  }
  throw NonMonotoneAlgebraError("language star did not stabilise");
}

// ---------------------------------------------------------------- matrices

namespace {

struct Block {
  std::size_t rows = 0, cols = 0;
  std::vector<Element> e;
  Element& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  Element at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

Block block_zero(const Algebra& A, std::size_t r, std::size_t c) {
  return Block{r, c, std::vector<Element>(r * c, A.zero())};
}

Block block_plus(const Algebra& A, const Block& x, const Block& y) {
  Block out = x;
  for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] = A.plus(x.e[i], y.e[i]);
  return out;
}

Block block_seq(const Algebra& A, const Block& x, const Block& y) {
  Block out = block_zero(A, x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < y.cols; ++j) {
      Element acc = A.zero();
      for (std::size_t k = 0; k < x.cols; ++k) acc = A.plus(acc, A.seq(x.at(i, k), y.at(k, j)));
      out.at(i, j) = acc;
    }
  }
  return out;
}

Block sub(const Block& m, std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) {
  Block out{r, c, std::vector<Element>(r * c)};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) out.at(i, j) = m.at(r0 + i, c0 + j);
  }
  return out;
}

void put(Block& m, const Block& part, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < part.rows; ++i) {
    for (std::size_t j = 0; j < part.cols; ++j) m.at(r0 + i, c0 + j) = part.at(i, j);
  }
}

Block block_star(const Algebra& A, const Block& m) {
  const std::size_t n = m.rows;
  if (n == 0) return m;
  if (n == 1) return Block{1, 1, {A.star(m.e[0])}};
  const std::size_t n1 = n / 2;
  const std::size_t n2 = n - n1;
  const Block a = sub(m, 0, 0, n1, n1);
  const Block b = sub(m, 0, n1, n1, n2);
  const Block c = sub(m, n1, 0, n2, n1);
  const Block d = sub(m, n1, n1, n2, n2);
  const Block ds = block_star(A, d);
  const Block f = block_star(A, block_plus(A, a, block_seq(A, block_seq(A, b, ds), c)));
  const Block fbds = block_seq(A, block_seq(A, f, b), ds);
  const Block dscf = block_seq(A, block_seq(A, ds, c), f);
  Block out = block_zero(A, n, n);
  put(out, f, 0, 0);
  put(out, fbds, 0, n1);
  put(out, dscf, n1, 0);
  put(out, block_plus(A, ds, block_seq(A, dscf, block_seq(A, b, ds))), n1, n1);
  return out;
}

}  // namespace

Matrix mat_identity(const Algebra& A, std::size_t n) {
  Matrix m{n, std::vector<Element>(n * n, A.zero())};
  for (std::size_t i = 0; i < n; ++i) m.entries[i * n + i] = A.one();
  return m;
}

Matrix mat_plus(const Algebra& A, const Matrix& x, const Matrix& y) {
  if (x.n != y.n) throw DomainMismatchError("matrices of different dimension");
  const Block r = block_plus(A, Block{x.n, x.n, x.entries}, Block{y.n, y.n, y.entries});
  return Matrix{x.n, r.e};
}

Matrix mat_seq(const Algebra& A, const Matrix& x, const Matrix& y) {
  if (x.n != y.n) throw DomainMismatchError("matrices of different dimension");
  const Block r = block_seq(A, Block{x.n, x.n, x.entries}, Block{y.n, y.n, y.entries});
  return Matrix{x.n, r.e};
}

Matrix mat_star(const Algebra& A, const Matrix& m) {
  return Matrix{m.n, block_star(A, Block{m.n, m.n, m.entries}).e};
}

// ---------------------------------------------------------------- algebras

namespace {

using Vec = std::vector<Element>;

std::size_t hash_vec(const Vec& v) {
  std::uint64_t h = 14695981039346656037ull;
  for (auto e : v) {
    h ^= e.index;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// Splits on `sep` outside any bracket pair.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '[' || c == '{' || c == '(') ++depth;
    if (c == ']' || c == '}' || c == ')') --depth;
    if (depth == 0 && c == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::optional<std::string_view> strip(std::string_view s, char open, char close) {
  if (s.size() < 2 || s.front() != open || s.back() != close) return std::nullopt;
  return s.substr(1, s.size() - 2);
}

/// Test subset of K given by the names of T's tests; must be a
/// subalgebra closed under +, ; and ->.
std::unordered_set<Element> test_subset(const Algebra& K, const Algebra& T) {
  std::unordered_set<Element> out;
  for (auto t : T.test_elements()) {
    auto e = K.find_element(T.element_name(t));
    if (!e || !K.is_test(*e)) {
      throw ParameterError("test '" + T.element_name(t) + "' of " + T.name() +
                           " is not a test of " + K.name());
    }
    out.insert(*e);
  }
  out.insert(K.zero());
  out.insert(K.one());
  for (auto a : out) {
    for (auto b : out) {
      for (Element r : {K.plus(a, b), K.seq(a, b), K.arrow(a, b)}) {
        if (!out.count(r)) {
          throw ParameterError("tests of " + T.name() + " are not closed inside " + K.name() +
                               " (" + K.element_name(r) + ")");
        }
      }
    }
  }
  return out;
}

std::vector<Element> ordered_tests(const Algebra& K, const std::unordered_set<Element>& set) {
  std::vector<Element> out;
  for (auto e : K.elements()) {
    if (set.count(e)) out.push_back(e);
  }
  return out;
}

// Shared by FREL and M(n, A): square arrays, composition by sup of
// products, diagonal tests, entrywise arrow on the diagonal.
struct SquareCarrier {
  using Value = Vec;
  AlgebraPtr base;
  std::size_t n = 0;
  std::unordered_set<Element> tests;
  bool block_star = false;
  std::size_t height = 1;

  Value zero() const { return Vec(n * n, base->zero()); }
  Value one() const { return frel_identity(*base, n).values; }
  Value plus(const Value& a, const Value& b) const {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = base->plus(a[i], b[i]);
    return out;
  }
  Value seq(const Value& a, const Value& b) const {
    return frel_compose(*base, FuzzyRelation{n, a}, FuzzyRelation{n, b}).values;
  }
  Value star(const Value& a) const {
    if (block_star) return mat_star(*base, Matrix{n, a}).entries;
    return frel_star(*base, FuzzyRelation{n, a}, height).values;
  }
  Value arrow(const Value& a, const Value& b) const {
    Vec out = zero();
    if (!is_test(a) || !is_test(b)) return out;
    for (std::size_t i = 0; i < n; ++i) out[i * n + i] = base->arrow(a[i * n + i], b[i * n + i]);
    return out;
  }
  bool is_test(const Value& a) const {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Element e = a[i * n + j];
        if (i == j ? !tests.count(e) : e != base->zero()) return false;
      }
    }
    return true;
  }
  std::string render(const Value& a) const {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ';';
      for (std::size_t j = 0; j < n; ++j) {
        if (j) s += ',';
        s += base->element_name(a[i * n + j]);
      }
    }
    return s + "]";
  }
  std::optional<Value> parse(std::string_view s) const {
    auto body = strip(s, '[', ']');
    if (!body) return std::nullopt;
    auto rows = split_top(*body, ';');
    if (rows.size() != n) return std::nullopt;
    Vec out;
    for (auto row : rows) {
      auto cells = split_top(row, ',');
      if (cells.size() != n) return std::nullopt;
      for (auto c : cells) {
        auto e = base->find_element(c);
        if (!e) return std::nullopt;
        out.push_back(*e);
      }
    }
    return out;
  }
  std::size_t hash(const Value& v) const { return hash_vec(v); }
};

struct FSetCarrier {
  using Value = Vec;
  AlgebraPtr base;
  std::size_t n = 0;

  Value zero() const { return Vec(n, base->zero()); }
  Value one() const { return Vec(n, base->one()); }
  Value plus(const Value& a, const Value& b) const { return map2(a, b, [&](auto x, auto y) { return base->plus(x, y); }); }
  Value seq(const Value& a, const Value& b) const { return map2(a, b, [&](auto x, auto y) { return base->seq(x, y); }); }
  Value arrow(const Value& a, const Value& b) const { return map2(a, b, [&](auto x, auto y) { return base->arrow(x, y); }); }
  Value star(const Value& a) const {
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = star_lfp(*base, a[i]);
    return out;
  }
  bool is_test(const Value&) const { return true; }
  std::string render(const Value& a) const {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ',';
      s += base->element_name(a[i]);
    }
    return s + "]";
  }
  std::optional<Value> parse(std::string_view s) const {
    auto body = strip(s, '[', ']');
    if (!body) return std::nullopt;
    auto cells = split_top(*body, ',');
    if (cells.size() != n) return std::nullopt;
    Vec out;
    for (auto c : cells) {
      auto e = base->find_element(c);
      if (!e || !base->is_test(*e)) return std::nullopt;
      out.push_back(*e);
    }
    return out;
  }
  std::size_t hash(const Value& v) const { return hash_vec(v); }

  template <class F>
  static Vec map2(const Vec& a, const Vec& b, F&& f) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i], b[i]);
    return out;
  }
};

struct FLangCarrier {
  using Value = Vec;
  AlgebraPtr base;
  std::shared_ptr<const WordSpace> words;
  std::unordered_set<Element> tests;

  Value zero() const { return Vec(words->size(), base->zero()); }
  Value one() const { return lang_epsilon(*base, *words, base->one()).values; }
  Value plus(const Value& a, const Value& b) const {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = base->plus(a[i], b[i]);
    return out;
  }
  Value seq(const Value& a, const Value& b) const {
    return lang_concat(*base, *words, FuzzyLanguage{a}, FuzzyLanguage{b}).values;
  }
  Value star(const Value& a) const { return lang_star(*base, *words, FuzzyLanguage{a}).values; }
  // Nonzero only at eps, where it is the product over u of a(u) -> b(u).
  Value arrow(const Value& a, const Value& b) const {
    Vec out = zero();
    if (!is_test(a) || !is_test(b)) return out;
    Element acc = base->one();
    for (std::size_t u = 0; u < words->size(); ++u) acc = base->seq(acc, base->arrow(a[u], b[u]));
    out[0] = acc;
    return out;
  }
  bool is_test(const Value& a) const {
    if (!tests.count(a[0])) return false;
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (a[i] != base->zero()) return false;
    }
    return true;
  }
  std::string render(const Value& a) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == base->zero()) continue;
      if (!first) s += ',';
      first = false;
      s += (i == 0 ? std::string("eps") : words->word(i)) + ":" + base->element_name(a[i]);
    }
    return s + "}";
  }
  std::optional<Value> parse(std::string_view s) const {
    auto body = strip(s, '{', '}');
    if (!body) return std::nullopt;
    Vec out = zero();
    if (body->empty()) return out;
    for (auto item : split_top(*body, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string_view::npos) return std::nullopt;
      const auto w = item.substr(0, colon);
      auto e = base->find_element(item.substr(colon + 1));
      if (!e) return std::nullopt;
      try {
        out[w == "eps" ? 0 : words->index_of(w)] = *e;
      } catch (const ParameterError&) {
        return std::nullopt;
      }
    }
    return out;
  }
  std::size_t hash(const Value& v) const { return hash_vec(v); }
};

template <class Carrier>
std::shared_ptr<ValueAlgebra<Carrier>> value_algebra(std::string name, Carrier c) {
  return std::make_shared<ValueAlgebra<Carrier>>(std::move(name), std::move(c));
}

// Odometer over `digits` positions each drawn from `domain`.
template <class F>
void enumerate_vectors(const std::vector<Element>& domain, std::size_t digits, F&& f) {
  std::vector<std::size_t> idx(digits, 0);
  Vec v(digits, domain.front());
  for (;;) {
    f(v);
    std::size_t k = digits;
    while (k > 0) {
      --k;
      if (++idx[k] < domain.size()) {
        v[k] = domain[idx[k]];
        break;
      }
      idx[k] = 0;
      v[k] = domain[0];
      if (k == 0) return;
    }
    if (digits == 0) return;
  }
}

bool fits(std::size_t base, std::size_t digits, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (total > cap / std::max<std::size_t>(base, 1)) return false;
    total *= base;
  }
  return total <= cap;
}

template <class Carrier>
FiniteAlgebraPtr tabulate_all(const std::shared_ptr<ValueAlgebra<Carrier>>& alg,
                              const std::vector<Element>& domain, std::size_t digits,
                              const std::string& name) {
  std::vector<Element> carrier;
  enumerate_vectors(domain, digits, [&](const Vec& v) { carrier.push_back(alg->intern(v)); });
  return tabulate(*alg, carrier, name);
}

std::vector<Element> span_vec(std::span<const Element> s) { return {s.begin(), s.end()}; }

void require_ground(std::string_view X) {
  if (X.empty() || X.size() > 8) throw ParameterError("ground set needs 1 to 8 points");
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X.find(X[i]) != i) throw ParameterError("ground set repeats a point");
  }
}

// Random square arrays plus random diagonal tests.
template <class Carrier>
void sample_square(ValueAlgebra<Carrier>& alg, const Carrier& c, const ConstructionOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const auto elems = span_vec(c.base->elements());
  const auto tests = ordered_tests(*c.base, c.tests);
  std::vector<Vec> samples;
  for (std::size_t s = 0; s < opts.sample_count; ++s) {
    Vec v(c.n * c.n);
    for (auto& e : v) e = elems[rng() % elems.size()];
    samples.push_back(std::move(v));
  }
  for (std::size_t s = 0; s < (opts.sample_count + 1) / 2; ++s) {
    Vec v = c.zero();
    for (std::size_t i = 0; i < c.n; ++i) v[i * c.n + i] = tests[rng() % tests.size()];
    samples.push_back(std::move(v));
  }
  alg.set_samples(samples);
}

}  // namespace

AlgebraPtr fset_algebra(AlgebraPtr T, std::string_view X, const ConstructionOptions& opts) {
  require_ground(X);
  const std::string name = "fset:" + T->name() + ":" + std::string(X);
  FSetCarrier c{T, X.size()};
  auto alg = value_algebra(name, c);
  const auto domain = span_vec(T->test_elements());
  if (T->is_finite() && fits(domain.size(), X.size(), opts.cap)) {
    return tabulate_all(alg, domain, X.size(), name);
  }
  if (!opts.allow_sampling) {
    throw SizeError("carrier of " + name + " exceeds the cap of " + std::to_string(opts.cap));
  }
  std::mt19937_64 rng(opts.seed);
  std::vector<Vec> samples;
  for (std::size_t s = 0; s < opts.sample_count; ++s) {
    Vec v(X.size());
    for (auto& e : v) e = domain[rng() % domain.size()];
    samples.push_back(std::move(v));
  }
  alg->set_samples(samples);
  return alg;
}

AlgebraPtr frel_algebra(AlgebraPtr K, AlgebraPtr T, std::string_view X,
                        const ConstructionOptions& opts) {
  require_ground(X);
  const std::string name = "frel:" + K->name() + ":" + T->name() + ":" + std::string(X);
  SquareCarrier c{K, X.size(), test_subset(*K, *T), false, height_of(*K)};
  auto alg = value_algebra(name, c);
  const auto domain = span_vec(K->elements());
  if (K->is_finite() && fits(domain.size(), X.size() * X.size(), opts.cap)) {
    return tabulate_all(alg, domain, X.size() * X.size(), name);
  }
  if (!opts.allow_sampling) {
    throw SizeError("carrier of " + name + " exceeds the cap of " + std::to_string(opts.cap));
  }
  sample_square(*alg, c, opts);
  return alg;
}

AlgebraPtr mat_algebra(AlgebraPtr A, std::size_t n, const ConstructionOptions& opts) {
  if (n < 1 || n > 16) throw ParameterError("matrix dimension must be in 1..16");
  const std::string name = "mat:" + A->name() + ":" + std::to_string(n);
  std::unordered_set<Element> tests(A->test_elements().begin(), A->test_elements().end());
  SquareCarrier c{A, n, tests, true, height_of(*A)};
  auto alg = value_algebra(name, c);
  sample_square(*alg, c, opts);
  return alg;
}

FiniteAlgebraPtr mat_algebra_tabulated(AlgebraPtr A, std::size_t n, const ConstructionOptions& opts) {
  if (n < 1 || n > 16) throw ParameterError("matrix dimension must be in 1..16");
  const std::string name = "mat:" + A->name() + ":" + std::to_string(n);
  const auto domain = span_vec(A->elements());
  if (!A->is_finite() || !fits(domain.size(), n * n, opts.cap)) {
    throw SizeError("carrier of " + name + " exceeds the cap of " + std::to_string(opts.cap));
  }
  std::unordered_set<Element> tests(A->test_elements().begin(), A->test_elements().end());
  SquareCarrier c{A, n, tests, true, height_of(*A)};
  return tabulate_all(value_algebra(name, c), domain, n * n, name);
}

AlgebraPtr flang_algebra(AlgebraPtr K, AlgebraPtr T, std::string_view sigma, std::size_t max_len,
                         const ConstructionOptions& opts) {
  if (max_len > 8) throw ParameterError("word length bound must be at most 8");
  auto words = std::make_shared<const WordSpace>(std::string(sigma), max_len);
  const std::string name = "flang:" + K->name() + ":" + T->name() + ":" + std::string(sigma) +
                           ":" + std::to_string(max_len);
  FLangCarrier c{K, words, test_subset(*K, *T)};
  auto alg = value_algebra(name, c);
  std::mt19937_64 rng(opts.seed);
  const auto elems = span_vec(K->elements());
  const auto tests = ordered_tests(*K, c.tests);
  std::vector<Vec> samples;
  for (std::size_t s = 0; s < opts.sample_count; ++s) {
    Vec v = c.zero();
    const std::size_t support = 1 + rng() % 3;
    for (std::size_t k = 0; k < support; ++k) v[rng() % words->size()] = elems[rng() % elems.size()];
    samples.push_back(std::move(v));
  }
  for (std::size_t s = 0; s < (opts.sample_count + 1) / 2; ++s) {
    samples.push_back(lang_epsilon(*K, *words, tests[rng() % tests.size()]).values);
  }
  alg->set_samples(samples);
  return alg;
}

// ---------------------------------------------------------------- specs

namespace {

AlgebraPtr resolve_base(std::string_view s) {
  if (s.size() > 4 && s.substr(s.size() - 4) == ".alg") return load_algebra(std::string(s));
  return make_builtin(s);
}

std::optional<AlgebraPtr> try_base(std::string_view s) {
  try {
    return resolve_base(s);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::size_t parse_size(std::string_view s, const char* what) {
  std::size_t v = 0;
  if (s.empty()) throw ParameterError(std::string("missing ") + what);
  for (char c : s) {
    if (c < '0' || c > '9') throw ParameterError(std::string("bad ") + what + " '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

// Splits "K:T" where either side may itself contain ':'.
std::pair<AlgebraPtr, AlgebraPtr> split_pair(std::string_view s) {
  for (std::size_t i = s.find(':'); i != std::string_view::npos; i = s.find(':', i + 1)) {
    auto k = try_base(s.substr(0, i));
    if (!k) continue;
    auto t = try_base(s.substr(i + 1));
    if (t) return {*k, *t};
  }
  throw ParameterError("cannot split '" + std::string(s) + "' into two base algebras");
}

}  // namespace

AlgebraPtr make_construction(std::string_view spec, const ConstructionOptions& opts) {
  const auto colon = spec.find(':');
  const auto last = spec.rfind(':');
  if (colon == std::string_view::npos || last == colon) {
    throw ParameterError("construction spec '" + std::string(spec) + "' is incomplete");
  }
  const auto kind = spec.substr(0, colon);
  const auto middle = spec.substr(colon + 1, last - colon - 1);
  const auto tail = spec.substr(last + 1);
  if (kind == "fset") return fset_algebra(resolve_base(middle), tail, opts);
  if (kind == "mat") return mat_algebra(resolve_base(middle), parse_size(tail, "dimension"), opts);
  if (kind == "frel") {
    auto [k, t] = split_pair(middle);
    return frel_algebra(k, t, tail, opts);
  }
  if (kind == "flang") {
    const auto sep = middle.rfind(':');
    if (sep == std::string_view::npos) throw ParameterError("flang spec needs K:T:sigma:maxlen");
    auto [k, t] = split_pair(middle.substr(0, sep));
    return flang_algebra(k, t, middle.substr(sep + 1), parse_size(tail, "length bound"), opts);
  }
  throw ParameterError("unknown construction '" + std::string(kind) + "'");
}

}  // namespace gkat
