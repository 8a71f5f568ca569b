#include "qgw/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qgw {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("expected integer in " + context + ": '" + s + "'");
  }
}

}  // namespace

SimpleGraph preset_graph(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'A' && name[0] != 'D'))
    throw std::invalid_argument("unknown graph preset '" + std::string(name) + "'");
  const int n = parse_int(std::string(name.substr(1)), "graph preset");
  SimpleGraph g;
  g.vertex_count = n;
  if (name[0] == 'A') {
    if (n < 1) throw std::invalid_argument("A<n> needs n >= 1");
    for (int v = 1; v < n; ++v) g.edges.emplace_back(v, v + 1);
  } else {
    if (n < 4) throw std::invalid_argument("D<n> needs n >= 4");
    for (int v = 1; v < n - 1; ++v) g.edges.emplace_back(v, v + 1);
    g.edges.emplace_back(n - 2, n);
  }
  return g;
}

SimpleGraph parse_graph(std::string_view text) {
  const std::string t = trim(text);
  if (!t.empty() && t.find('\n') == std::string::npos && t.find(':') == std::string::npos)
    return preset_graph(t);
  SimpleGraph g;
  bool have_vertices = false;
  std::istringstream in(t);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string l = trim(line);
    if (l.empty() || l[0] == '#') continue;
    const auto colon = l.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("graph line " + std::to_string(line_no) + ": missing ':'");
    const std::string key = trim(l.substr(0, colon));
    std::istringstream rest(l.substr(colon + 1));
    const std::string where = "graph line " + std::to_string(line_no);
    if (key == "vertices") {
      std::string v;
      rest >> v;
      g.vertex_count = parse_int(v, where);
      have_vertices = true;
    } else if (key == "edge") {
      std::string a, b, extra;
      rest >> a >> b;
      if (rest >> extra) throw std::invalid_argument(where + ": trailing tokens");
      g.edges.emplace_back(parse_int(a, where), parse_int(b, where));
    } else {
      throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
  }
  if (!have_vertices) throw std::invalid_argument("graph file has no 'vertices:' line");
  return g;
}

int CartanData::entry(int i, int j) const {
  if (!contains(i) || !contains(j))
    throw std::out_of_range("Cartan index out of range: (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
  return matrix_[i - 1][j - 1];
}

CartanData CartanData::type_a(int n_minus_one) {
  return cartan_from_graph(preset_graph("A" + std::to_string(n_minus_one)));
}

CartanData cartan_from_graph(const SimpleGraph& graph) {
  if (graph.vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
  const int n = graph.vertex_count;
  std::set<std::pair<int, int>> seen;
  CartanData c;
  c.graph_ = graph;
  c.matrix_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c.matrix_[i][i] = 2;
  for (auto [a, b] : graph.edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("edge endpoint outside 1.." + std::to_string(n));
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate edge {" + std::to_string(key.first) + ", " +
                                  std::to_string(key.second) + "}");
    c.matrix_[a - 1][b - 1] = -1;
    c.matrix_[b - 1][a - 1] = -1;
  }
  return c;
}

// --- Weight -------------------------------------------------------------------

Weight Weight::from_content(std::vector<int> content) {
  if (content.size() < 2) throw std::invalid_argument("sl_n content needs n >= 2 entries");
  std::vector<int> d(content.size() - 1);
  for (std::size_t i = 0; i + 1 < content.size(); ++i) d[i] = content[i + 1] - content[i];
  Weight w(std::move(d));
  w.content_ = std::move(content);
  return w;
}

bool Weight::is_null() const {
  return content_ && std::any_of(content_->begin(), content_->end(), [](int x) { return x < 0; });
}

int Weight::pairing(int i) const {
  if (i < 1 || i > static_cast<int>(pairings_.size()))
    throw std::out_of_range("weight has no pairing with alpha_" + std::to_string(i));
  return pairings_[i - 1];
}

Weight Weight::shifted(const CartanData& cartan, int i, int r) const {
  if (!cartan.contains(i)) throw std::out_of_range("unknown index " + std::to_string(i));
  Weight w = *this;
  for (int j = 1; j <= cartan.rank(); ++j) w.pairings_[j - 1] += r * cartan.entry(i, j);
  if (w.content_) {
    (*w.content_)[i - 1] -= r;
    (*w.content_)[i] += r;
  }
  return w;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  const auto& v = content_ ? *content_ : pairings_;
  os << (content_ ? '(' : '[');
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << (content_ ? ')' : ']');
  return os.str();
}

bool operator==(const Weight& a, const Weight& b) {
  if (a.content_ && b.content_) return *a.content_ == *b.content_;
  return a.pairings_ == b.pairings_;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.content_ && b.content_) return *a.content_ < *b.content_;
  return a.pairings_ < b.pairings_;
}

int pairing(const Weight& weight, int i) { return weight.pairing(i); }

Weight reflect(const CartanData& cartan, const Weight& weight, int i) {
  if (weight.content()) {
    auto c = *weight.content();
    std::swap(c[i - 1], c[i]);
    return Weight::from_content(std::move(c));
  }
  return weight.shifted(cartan, i, -weight.pairing(i));
}

Weight parse_weight(std::string_view text) {
  const std::string t = trim(text);
  if (t.size() < 2) throw std::invalid_argument("weight must look like (l1,...) or [d1,...]");
  const char open = t.front(), close = t.back();
  const bool content = open == '(' && close == ')';
  if (!content && !(open == '[' && close == ']'))
    throw std::invalid_argument("weight must look like (l1,...) or [d1,...]: '" + t + "'");
  std::vector<int> v;
  std::istringstream in(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(parse_int(trim(item), "weight"));
  if (v.empty()) throw std::invalid_argument("empty weight");
  return content ? Weight::from_content(std::move(v)) : Weight(std::move(v));
}

// --- Braid words --------------------------------------------------------------

BraidWord free_reduce(const BraidWord& word) {
  BraidWord out;
  for (const auto& letter : word) {
    if (!out.empty() && out.back().index == letter.index &&
        out.back().exponent == -letter.exponent) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

void validate_braid_word(const CartanData& cartan, const BraidWord& word) {
  for (const auto& l : word) {
    if (!cartan.contains(l.index))
      throw std::invalid_argument("braid letter index " + std::to_string(l.index) +
                                  " not a vertex");
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("braid letter exponent must be +1 or -1");
  }
}

}  // namespace qgw
