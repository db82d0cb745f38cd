#include "cyclotri/io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cyclotri/error.hpp"

namespace cyclotri {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Non-empty lines that are not comments.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    const std::string_view t = trim(raw);
    if (!t.empty() && t.front() != '#') out.push_back({number, t});
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view s, std::size_t line) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    parse_error(line, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<int> split_ints(std::string_view s, char sep, std::size_t line) {
  std::vector<int> out;
  if (sep == ' ') {
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
      if (j > i) out.push_back(parse_int(s.substr(i, j - i), line));
      i = j;
    }
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(parse_int(s.substr(start, pos - start), line));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int header_value(const Line& l, std::string_view key) {
  if (l.text.substr(0, key.size()) != key || l.text.size() <= key.size() ||
      (l.text[key.size()] != ' ' && l.text[key.size()] != '\t')) {
    parse_error(l.number, "expected '" + std::string(key) + " <value>'");
  }
  return parse_int(l.text.substr(key.size()), l.number);
}

}  // namespace

CyclicComplex parse_dc(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error("empty difference-cycle file");
  const int n = header_value(lines[0], "n");
  if (n <= 0) parse_error(lines[0].number, "vertex count must be positive");
  std::vector<DifferenceCycle> cycles;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto entries = split_ints(lines[i].text, ':', lines[i].number);
    try {
      cycles.emplace_back(entries);
    } catch (const Error& e) {
      parse_error(lines[i].number, e.what());
    }
    if (cycles.back().vertex_count() != n) {
      parse_error(lines[i].number, "entries sum to " + std::to_string(cycles.back().vertex_count()) +
                                       ", not " + std::to_string(n));
    }
  }
  return CyclicComplex(n, std::move(cycles));
}

std::string format_dc(const CyclicComplex& cc) {
  std::ostringstream os;
  os << "n " << cc.n() << '\n';
  for (const auto& d : cc.cycles()) {
    const auto e = d.entries();
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? ":" : "") << e[i];
    os << '\n';
  }
  return os.str();
}

SimplicialComplex parse_tri(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() < 2) throw Error("facet-list file needs 'dim' and 'vertices' lines");
  const int dim = header_value(lines[0], "dim");
  const int n = header_value(lines[1], "vertices");
  if (dim < 0 || n < 0) parse_error(lines[0].number, "negative header value");
  std::vector<Simplex> facets;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto v = split_ints(lines[i].text, ' ', lines[i].number);
    if (static_cast<int>(v.size()) != dim + 1) {
      parse_error(lines[i].number, "facet needs " + std::to_string(dim + 1) + " vertices");
    }
    Simplex s;
    try {
      s = Simplex(std::vector<Vertex>(v.begin(), v.end()));
    } catch (const Error& e) {
      parse_error(lines[i].number, e.what());
    }
    if (s.back() >= n) {
      parse_error(lines[i].number, "vertex id " + std::to_string(s.back()) + " >= " + std::to_string(n));
    }
    facets.push_back(std::move(s));
  }
  return SimplicialComplex(n, std::move(facets));
}

std::string format_tri(const SimplicialComplex& c) {
  std::ostringstream os;
  os << "dim " << std::max(c.dimension(), 0) << '\n' << "vertices " << c.label_bound() << '\n';
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    os << '\n';
  }
  return os.str();
}

AnyComplex parse_any(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error("empty input");
  const auto first = lines[0].text;
  if (first.substr(0, 2) == "n " || first.substr(0, 2) == "n\t") return parse_dc(text);
  if (first.substr(0, 3) == "dim") return parse_tri(text);
  throw Error("line " + std::to_string(lines[0].number) + ": unknown format (expected 'n <N>' or 'dim <d>')");
}

std::string read_input(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

SimplicialComplex as_simplicial(const AnyComplex& c) {
  if (const auto* cc = std::get_if<CyclicComplex>(&c)) return expand(*cc);
  return std::get<SimplicialComplex>(c);
}

}  // namespace cyclotri
