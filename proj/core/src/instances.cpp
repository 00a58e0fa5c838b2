#include "gkat/instances.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "gkat/errors.hpp"

namespace gkat {

std::string render_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(std::string_view s) {
  auto parse_int = [](std::string_view t) -> std::optional<long long> {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) return std::nullopt;
    return v;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto v = parse_int(s);
    if (!v) return std::nullopt;
    return Rational(*v);
  }
  auto n = parse_int(s.substr(0, slash));
  auto d = parse_int(s.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

std::optional<Rational> ProductCarrier::parse(std::string_view s) const {
  auto r = parse_rational(s);
  if (!r || *r < 0 || *r > 1) return std::nullopt;
  return r;
}

std::size_t ProductCarrier::hash(const Value& v) const {
  return std::hash<std::string>{}(render_rational(v));
}

Cost TropicalCarrier::plus(const Cost& a, const Cost& b) const {
  if (a.infinite) return b;
  if (b.infinite) return a;
  return a.value < b.value ? a : b;
}

Cost TropicalCarrier::seq(const Cost& a, const Cost& b) const {
  if (a.infinite || b.infinite) return zero();
  return Cost{false, a.value + b.value};
}

Cost TropicalCarrier::arrow(const Cost& a, const Cost& b) const {
  if (a.infinite) return one();
  if (b.infinite) return zero();
  return b.value > a.value ? Cost{false, b.value - a.value} : one();
}

std::string TropicalCarrier::render(const Cost& v) const {
  return v.infinite ? "inf" : render_rational(v.value);
}

std::optional<Cost> TropicalCarrier::parse(std::string_view s) const {
  if (s == "inf") return zero();
  auto r = parse_rational(s);
  if (!r || *r < 0) return std::nullopt;
  return Cost{false, *r};
}

std::size_t TropicalCarrier::hash(const Cost& v) const {
  return std::hash<std::string>{}(render(v));
}

namespace {

using Op = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

FiniteAlgebraData tabulated(std::string name, std::vector<std::string> names,
                            std::vector<std::uint32_t> tests, std::uint32_t zero,
                            std::uint32_t one, const Op& plus, const Op& seq,
                            const Op& arrow, const std::function<std::uint32_t(std::uint32_t)>& star) {
  FiniteAlgebraData d;
  d.name = std::move(name);
  d.element_names = std::move(names);
  d.tests = std::move(tests);
  d.zero = zero;
  d.one = one;
  const auto n = static_cast<std::uint32_t>(d.size());
  std::vector<std::uint8_t> is_test(n, 0);
  for (auto t : d.tests) is_test[t] = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      d.plus.push_back(plus(i, j));
      d.seq.push_back(seq(i, j));
      d.arrow.push_back(is_test[i] && is_test[j] ? arrow(i, j) : FiniteAlgebraData::kUnset);
    }
    d.star.push_back(star(i));
  }
  return d;
}

std::vector<std::uint32_t> all_indices(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

FiniteAlgebraData from_rows(std::string name, const std::vector<std::uint32_t>& tests,
                            const std::uint32_t (&seq)[4][4], const std::uint32_t (&arrow)[4][4]) {
  FiniteAlgebraData d;
  d.name = std::move(name);
  d.element_names = {"0", "n", "m", "1"};
  d.tests = tests;
  d.zero = 0;
  d.one = 3;
  for (std::uint32_t i = 0; i < 4; ++i) {
    for (std::uint32_t j = 0; j < 4; ++j) {
      d.plus.push_back(std::max(i, j));
      d.seq.push_back(seq[i][j]);
      d.arrow.push_back(arrow[i][j]);
    }
    d.star.push_back(3);
  }
  return d;
}

// Element indices 0, n, m, 1.
constexpr std::uint32_t Z = 0, N = 1, M = 2, I = 3;

int parse_int_param(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParameterError("bad " + std::string(what) + " parameter '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

InstanceSpec parse_instance_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const bool has_arg = colon != std::string_view::npos;
  const std::string_view arg = has_arg ? text.substr(colon + 1) : std::string_view{};
  InstanceSpec s;
  using K = InstanceSpec::Kind;
  auto no_arg = [&](K k) {
    if (has_arg) throw ParameterError("builtin '" + std::string(head) + "' takes no parameter");
    s.kind = k;
    return s;
  };
  if (head == "bool2") return no_arg(K::Bool2);
  if (head == "chain3") return no_arg(K::Chain3);
  if (head == "ex9") return no_arg(K::Ex9);
  if (head == "lemma4") return no_arg(K::CommutationTableA);
  if (head == "lemma6") return no_arg(K::CommutationTableB);
  if (head == "powerset") {
    s.kind = K::Powerset;
    s.ground = has_arg ? std::string(arg) : "xy";
    return s;
  }
  if (head == "luka" || head == "godel" || head == "wajsberg") {
    if (!has_arg) throw ParameterError("builtin '" + std::string(head) + "' needs a size");
    s.kind = head == "luka" ? K::LukaChain : head == "godel" ? K::GodelChain : K::Wajsberg;
    s.n = parse_int_param(arg, head);
    return s;
  }
  if (head == "product" || head == "tropical") {
    s.kind = head == "product" ? K::ProductSampled : K::TropicalSampled;
    if (!has_arg) return s;
    if (s.kind == K::TropicalSampled) {
      auto cap = parse_rational(arg);
      if (!cap || *cap < 0) throw ParameterError("bad tropical cap '" + std::string(arg) + "'");
      s.cap = *cap;
      return s;
    }
    std::size_t start = 0;
    while (start <= arg.size()) {
      const auto comma = arg.find(',', start);
      const auto piece = arg.substr(start, comma == std::string_view::npos ? arg.npos : comma - start);
      auto r = parse_rational(piece);
      if (!r || *r < 0 || *r > 1) {
        throw ParameterError("bad product sample '" + std::string(piece) + "'");
      }
      s.samples.push_back(*r);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return s;
  }
  throw ParameterError("unknown builtin '" + std::string(text) + "'");
}

FiniteAlgebraData builtin_data(const InstanceSpec& spec) {
  using K = InstanceSpec::Kind;
  switch (spec.kind) {
    case K::Bool2:
      return tabulated(
          "bool2", {"bot", "top"}, {0, 1}, 0, 1,
          [](auto a, auto b) { return a | b; }, [](auto a, auto b) { return a & b; },
          [](auto a, auto b) { return (1 - a) | b; }, [](auto) { return 1u; });
    case K::Chain3:
      return tabulated(
          "chain3", {"bot", "u", "top"}, {0, 1, 2}, 0, 2,
          [](auto a, auto b) { return std::max(a, b); },
          [](auto a, auto b) { return std::min(a, b); },
          [](auto a, auto b) { return a <= b ? 2u : b; }, [](auto) { return 2u; });
    case K::Powerset: {
      const auto& g = spec.ground;
      if (g.empty() || g.size() > 8) throw ParameterError("powerset ground set needs 1 to 8 points");
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.find(g[i]) != i) throw ParameterError("powerset ground set repeats a point");
      }
      const std::uint32_t n = 1u << g.size();
      const std::uint32_t full = n - 1;
      std::vector<std::string> names;
      for (std::uint32_t m = 0; m < n; ++m) {
        std::string s = "{";
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (m & (1u << i)) {
            if (s.size() > 1) s += ',';
            s += g[i];
          }
        }
        names.push_back(s + "}");
      }
      return tabulated(
          "powerset:" + g, names, all_indices(n), 0, full,
          [](auto a, auto b) { return a | b; }, [](auto a, auto b) { return a & b; },
          [full](auto a, auto b) { return (~a & full) | b; }, [full](auto) { return full; });
    }
    case K::LukaChain:
    case K::GodelChain: {
      const int n = spec.n;
      if (n < 1 || n > 64) throw ParameterError("chain subdivisions must be in 1..64");
      const auto top = static_cast<std::uint32_t>(n);
      std::vector<std::string> names;
      for (int i = 0; i <= n; ++i) names.push_back(render_rational(Rational(i, n)));
      const bool luka = spec.kind == K::LukaChain;
      const std::string name = (luka ? "luka:" : "godel:") + std::to_string(n);
      Op seq = luka ? Op([top](std::uint32_t a, std::uint32_t b) { return a + b > top ? a + b - top : 0u; })
                    : Op([](std::uint32_t a, std::uint32_t b) { return std::min(a, b); });
      Op arrow = luka ? Op([top](std::uint32_t a, std::uint32_t b) { return std::min(top, top - a + b); })
                      : Op([top](std::uint32_t a, std::uint32_t b) { return a <= b ? top : b; });
      return tabulated(
          name, names, all_indices(top + 1), 0, top,
          [](auto a, auto b) { return std::max(a, b); }, seq, arrow,
          [top](auto) { return top; });
    }
    case K::Wajsberg: {
      const int k = spec.n;
      if (k < 2 || k > 64) throw ParameterError("wajsberg order must be in 2..64");
      const auto last = static_cast<std::uint32_t>(k - 1);
      std::vector<std::string> names;
      for (int i = 0; i < k; ++i) names.push_back("a^" + std::to_string(i));
      return tabulated(
          "wajsberg:" + std::to_string(k), names, all_indices(last + 1), last, 0,
          [](auto a, auto b) { return std::min(a, b); },
          [last](auto a, auto b) { return std::min(a + b, last); },
          [](auto a, auto b) { return b > a ? b - a : 0u; }, [](auto) { return 0u; });
    }
    case K::Ex9: {
      const std::uint32_t seq[4][4] = {{Z, Z, Z, Z}, {Z, Z, Z, N}, {Z, Z, Z, M}, {Z, N, M, I}};
      const std::uint32_t arrow[4][4] = {{I, Z, I, I}, {Z, Z, Z, Z}, {M, Z, I, I}, {Z, Z, M, I}};
      return from_rows("ex9", {Z, M, I}, seq, arrow);
    }
    case K::CommutationTableA: {
      const std::uint32_t seq[4][4] = {{Z, Z, Z, Z}, {Z, Z, Z, N}, {Z, N, M, M}, {Z, N, M, I}};
      const std::uint32_t arrow[4][4] = {{I, Z, I, I}, {Z, Z, Z, Z}, {Z, Z, I, I}, {Z, Z, M, I}};
      return from_rows("lemma4", {Z, M, I}, seq, arrow);
    }
    case K::CommutationTableB: {
      const std::uint32_t seq[4][4] = {{Z, Z, Z, Z}, {Z, Z, N, N}, {Z, Z, M, M}, {Z, N, M, I}};
      const std::uint32_t arrow[4][4] = {{I, I, Z, I}, {N, I, Z, I}, {Z, Z, Z, Z}, {Z, N, Z, I}};
      return from_rows("lemma6", {Z, N, I}, seq, arrow);
    }
    case K::ProductSampled:
    case K::TropicalSampled:
      break;
  }
  throw ParameterError("builtin has no finite table");
}

AlgebraPtr make_builtin(const InstanceSpec& spec) {
  using K = InstanceSpec::Kind;
  if (spec.kind == K::ProductSampled) {
    auto alg = std::make_shared<ProductAlgebra>("product", ProductCarrier{});
    std::vector<Rational> samples = spec.samples;
    if (samples.empty()) {
      samples = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4)};
    }
    alg->set_samples(samples);
    return alg;
  }
  if (spec.kind == K::TropicalSampled) {
    std::string name = "tropical";
    if (spec.cap) name += ":" + render_rational(*spec.cap);
    auto alg = std::make_shared<TropicalAlgebra>(name, TropicalCarrier{});
    std::vector<Cost> samples;
    for (const Rational& r : {Rational(1, 2), Rational(1), Rational(2), Rational(4)}) {
      if (!spec.cap || r <= *spec.cap) samples.push_back(Cost{false, r});
    }
    if (spec.cap) samples.push_back(Cost{false, *spec.cap});
    alg->set_samples(samples);
    return alg;
  }
  return std::make_shared<FiniteAlgebra>(builtin_data(spec));
}

AlgebraPtr make_builtin(std::string_view text) { return make_builtin(parse_instance_spec(text)); }

}  // namespace gkat
