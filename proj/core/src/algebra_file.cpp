#include "gkat/algebra_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "gkat/errors.hpp"

namespace gkat {

namespace {

struct Word {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Word> words;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t w = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > w) line.words.push_back({std::string(raw.substr(w, i - w)), w + 1});
    }
    if (!line.words.empty()) out.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(split_lines(text)) {}

  FiniteAlgebraData read() {
    FiniteAlgebraData d;
    const Line& head = directive("algebra", 1);
    d.name = head.words[1].text;

    const Line& elems = directive("elements");
    if (elems.words.size() < 2) fail(elems, elems.words[0], "'elements' needs at least one name");
    for (std::size_t i = 1; i < elems.words.size(); ++i) {
      const auto& w = elems.words[i];
      if (w.text == "_") fail(elems, w, "'_' is reserved");
      if (!names_.emplace(w.text, static_cast<std::uint32_t>(i - 1)).second) {
        fail(elems, w, "duplicate element '" + w.text + "'");
      }
      d.element_names.push_back(w.text);
    }
    element_names_ = d.element_names;

    const Line& tests = directive("tests");
    for (std::size_t i = 1; i < tests.words.size(); ++i) d.tests.push_back(lookup(tests, tests.words[i]));

    const Line& zero = directive("zero", 1);
    d.zero = lookup(zero, zero.words[1]);
    const Line& one = directive("one", 1);
    d.one = lookup(one, one.words[1]);

    d.plus = table("plus", d.size(), d.size(), false);
    d.seq = table("seq", d.size(), d.size(), false);
    d.arrow = table("arrow", d.size(), d.size(), true);
    d.star = table("star", 1, d.size(), false);

    if (pos_ < lines_.size()) fail(lines_[pos_], lines_[pos_].words[0], "unexpected content after star table");
    return d;
  }

 private:
  [[noreturn]] void fail(const Line& line, const Word& w, const std::string& msg) const {
    throw ParseError(msg, line.number, w.column);
  }
  [[noreturn]] void fail_eof(const std::string& msg) const {
    const std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
    throw ParseError(msg, line, 1);
  }

  const Line& next(const std::string& expecting) {
    if (pos_ >= lines_.size()) fail_eof("unexpected end of file, expecting " + expecting);
    current_ = &lines_[pos_++];
    return *current_;
  }

  const Line& directive(const std::string& keyword, std::size_t args = 0) {
    const Line& l = next("'" + keyword + "'");
    if (l.words[0].text != keyword) fail(l, l.words[0], "expected '" + keyword + "'");
    if (args && l.words.size() != args + 1) {
      fail(l, l.words[0], "'" + keyword + "' takes " + std::to_string(args) + " argument");
    }
    return l;
  }

  std::uint32_t lookup(const Line& l, const Word& w) const {
    auto it = names_.find(w.text);
    if (it == names_.end()) fail(l, w, "unknown element '" + w.text + "'");
    return it->second;
  }

  std::vector<std::uint32_t> table(const std::string& name, std::size_t rows, std::size_t cols,
                                   bool allow_unset) {
    const Line& h = next("'table " + name + "'");
    if (h.words.size() != 2 || h.words[0].text != "table" || h.words[1].text != name) {
      fail(h, h.words[0], "expected 'table " + name + "'");
    }
    std::vector<std::uint32_t> out;
    out.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Line& l = next("a row of table " + name);
      if (l.words.size() != cols) {
        fail(l, l.words[0], "table " + name + " row has " + std::to_string(l.words.size()) +
                                " entries, expected " + std::to_string(cols));
      }
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& w = l.words[c];
        if (allow_unset && w.text == "_") {
          out.push_back(FiniteAlgebraData::kUnset);
          continue;
        }
        auto it = names_.find(w.text);
        if (it == names_.end()) {
          // An undeclared entry breaks closure; name the cell it sits in.
          const std::string row = rows == 1 ? "-" : element_names_[r];
          throw ClosureError(name, rows == 1 ? element_names_[c] : row,
                             rows == 1 ? "-" : element_names_[c],
                             "undeclared element '" + w.text + "' at " +
                                 std::to_string(l.number) + ":" + std::to_string(w.column));
        }
        out.push_back(it->second);
      }
    }
    return out;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  const Line* current_ = nullptr;
  std::unordered_map<std::string, std::uint32_t> names_;
  std::vector<std::string> element_names_;
};

}  // namespace

FiniteAlgebraData parse_algebra_data(std::string_view text) { return Reader(text).read(); }

FiniteAlgebraPtr parse_algebra(std::string_view text) {
  return std::make_shared<const FiniteAlgebra>(parse_algebra_data(text));
}

FiniteAlgebraPtr load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read algebra file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

void save_algebra(const FiniteAlgebra& alg, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write algebra file '" + path.string() + "'");
  out << serialize(alg.data());
}

}  // namespace gkat
