#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkat/finite_algebra.hpp"
#include "gkat/value_algebra.hpp"

namespace gkat {

using Rational = boost::multiprecision::cpp_rational;

/// "0", "1", "3/4".
std::string render_rational(const Rational& r);
std::optional<Rational> parse_rational(std::string_view s);

struct InstanceSpec {
  enum class Kind : std::uint8_t {
    Bool2, Chain3, Powerset, LukaChain, GodelChain, ProductSampled, Wajsberg,
    TropicalSampled, Ex9, CommutationTableA, CommutationTableB
  };
  Kind kind = Kind::Bool2;
  /// Subdivisions for the chains, k for Wajsberg.
  int n = 0;
  /// Ground-set letters for Powerset, one character per point.
  std::string ground;
  /// Sample values for the sampled instances (0 and 1 are always added).
  std::vector<Rational> samples;
  /// Largest finite tropical cost admitted into the sample list.
  std::optional<Rational> cap;
};

/// Parses the builtin names: bool2, chain3, powerset:xyz, luka:N, godel:N,
/// wajsberg:K, product[:r1,r2,...], tropical[:CAP], ex9, lemma4, lemma6.
/// Throws ParameterError.
InstanceSpec parse_instance_spec(std::string_view text);

/// Finite specs yield a FiniteAlgebra, product and tropical a sampled
/// ValueAlgebra. Throws ParameterError on out-of-range parameters.
AlgebraPtr make_builtin(const InstanceSpec& spec);
AlgebraPtr make_builtin(std::string_view text);

/// Table data behind the finite builtins, also used to write golden files.
FiniteAlgebraData builtin_data(const InstanceSpec& spec);

/// Standard product algebra on [0,1]: max, multiplication, Goguen
/// implication. Every element is a test.
struct ProductCarrier {
  using Value = Rational;
  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value plus(const Value& a, const Value& b) const { return a < b ? b : a; }
  Value seq(const Value& a, const Value& b) const { return a * b; }
  Value star(const Value&) const { return 1; }
  Value arrow(const Value& a, const Value& b) const {
    return a <= b ? Value(1) : Value(b / a);
  }
  bool is_test(const Value&) const { return true; }
  std::string render(const Value& v) const { return render_rational(v); }
  std::optional<Value> parse(std::string_view s) const;
  std::size_t hash(const Value& v) const;
};

/// Costs in [0, inf]; + is min, ; is addition, 0 is inf and 1 is cost 0.
struct Cost {
  bool infinite = false;
  Rational value = 0;
  friend bool operator==(const Cost& a, const Cost& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

struct TropicalCarrier {
  using Value = Cost;
  Value zero() const { return Cost{true, 0}; }
  Value one() const { return Cost{false, 0}; }
  Value plus(const Value& a, const Value& b) const;
  Value seq(const Value& a, const Value& b) const;
  Value star(const Value&) const { return one(); }
  /// max(b - a, 0); a -> inf = inf for finite a; inf -> b = 0.
  Value arrow(const Value& a, const Value& b) const;
  bool is_test(const Value&) const { return true; }
  std::string render(const Value& v) const;
  std::optional<Value> parse(std::string_view s) const;
  std::size_t hash(const Value& v) const;
};

using ProductAlgebra = ValueAlgebra<ProductCarrier>;
using TropicalAlgebra = ValueAlgebra<TropicalCarrier>;

}  // namespace gkat
