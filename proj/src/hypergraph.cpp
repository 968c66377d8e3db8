#include "hyperburn/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hb {

Hypergraph::Hypergraph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("hypergraph needs at least one vertex");
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges) : Hypergraph(n) {
  for (auto& e : edges) add_edge(std::move(e));
}

void Hypergraph::add_edge(std::vector<int> edge) {
  if (edge.empty()) throw std::invalid_argument("empty edge");
  std::sort(edge.begin(), edge.end());
  edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
  if (edge.front() < 0 || edge.back() >= n_)
    throw std::invalid_argument("edge vertex index out of range");
  edges_.push_back(std::move(edge));
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_)
    for (int v : e) ++deg[v];
  return deg;
}

std::vector<std::vector<int>> Hypergraph::incidence() const {
  std::vector<std::vector<int>> inc(n_);
  for (int i = 0; i < edge_count(); ++i)
    for (int v : edges_[i]) inc[v].push_back(i);
  return inc;
}

std::vector<int> Hypergraph::distinct_edge_sizes() const {
  std::vector<int> sizes;
  for (const auto& e : edges_) sizes.push_back(static_cast<int>(e.size()));
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

Hypergraph Hypergraph::canonical() const {
  Hypergraph out(n_);
  out.edges_ = edges_;
  std::sort(out.edges_.begin(), out.edges_.end());
  return out;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.n_ != b.n_) return false;
  auto ea = a.edges_;
  auto eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

int threshold(const Proportion& p, int size) {
  if (size < 1) throw std::invalid_argument("edge size must be positive");
  return static_cast<int>(ceil_mul(p.num(), p.den(), size));
}

EdgeClass classify_edge(const Proportion& p, int size) {
  if (size < 1) throw std::invalid_argument("edge size must be positive");
  if (size == 1) return EdgeClass::NonFlammable;
  // size*num <= den  <=>  ceil(p*size) = 1
  if (checked_mul(size, p.num()) <= p.den()) return EdgeClass::HighlyFlammable;
  // size*(den-num) < den  <=>  size < 1/(1-p)  <=>  ceil(p*size) = size
  if (checked_mul(size, p.den() - p.num()) < p.den()) return EdgeClass::NonFlammable;
  return EdgeClass::Flammable;
}

Hypergraph strip_nonflammable(const Hypergraph& h, const Proportion& p) {
  Hypergraph out(h.vertex_count());
  for (const auto& e : h.edges())
    if (is_flammable(classify_edge(p, static_cast<int>(e.size())))) out.add_edge(e);
  return out;
}

Hypergraph gen_tight_path(int k, int n) {
  if (k < 2) throw std::invalid_argument("tight path needs k >= 2");
  if (n < k) throw std::invalid_argument("tight path needs n >= k");
  Hypergraph h(n);
  for (int start = 0; start + k <= n; ++start) {
    std::vector<int> e(k);
    std::iota(e.begin(), e.end(), start);
    h.add_edge(std::move(e));
  }
  return h;
}

Hypergraph gen_nested_chain(int n) {
  if (n < 2) throw std::invalid_argument("nested chain needs n >= 2");
  Hypergraph h(n);
  for (int len = 2; len <= n; ++len) {
    std::vector<int> e(len);
    std::iota(e.begin(), e.end(), 0);
    h.add_edge(std::move(e));
  }
  return h;
}

Hypergraph gen_single_edge(int k) {
  if (k < 1) throw std::invalid_argument("single edge needs k >= 1");
  Hypergraph h(k);
  std::vector<int> e(k);
  std::iota(e.begin(), e.end(), 0);
  h.add_edge(std::move(e));
  return h;
}

Hypergraph gen_figure(const std::string& name) {
  if (name == "fig1") {
    // One five-vertex edge chained to two overlapping eight-vertex edges.
    return Hypergraph(13, {{0, 1, 2, 3, 4}, {1, 2, 3, 4, 5, 6, 7, 8}, {5, 6, 7, 8, 9, 10, 11, 12}});
  }
  if (name == "fig2") {
    return Hypergraph(9, {{0, 1, 2, 3, 4, 5}, {4, 5, 6, 7, 8}});
  }
  if (name == "fig4") {
    return Hypergraph(8, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4, 5, 6, 7}});
  }
  if (name == "fig5") {
    return Hypergraph(10, {{0, 1, 2, 3, 4}, {4, 5}, {5, 6, 7, 8, 9}});
  }
  throw std::invalid_argument("unknown figure: " + name);
}

std::vector<std::string> figure_names() { return {"fig1", "fig2", "fig4", "fig5"}; }

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<int> parse_index_line(const std::string& line, int n, int lineno) {
  std::istringstream in(line);
  std::vector<int> vals;
  std::string tok;
  while (in >> tok) {
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("line " + std::to_string(lineno) + ": bad vertex index '" + tok + "'");
    long v = std::strtol(tok.c_str(), nullptr, 10);
    if (v < 0 || v >= n)
      throw ParseError("line " + std::to_string(lineno) + ": vertex index " + tok +
                       " out of range [0," + std::to_string(n) + ")");
    vals.push_back(static_cast<int>(v));
  }
  if (vals.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty edge line");
  return vals;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra) || n < 1 || m < 0)
      throw ParseError("line " + std::to_string(lineno) + ": malformed header, expected 'n m'");
    break;
  }
  if (n < 0) throw ParseError("missing header line 'n m'");

  Hypergraph h(static_cast<int>(n));
  long read = 0;
  while (read < m && std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    h.add_edge(parse_index_line(line, static_cast<int>(n), lineno));
    ++read;
  }
  if (read < m) throw ParseError("expected " + std::to_string(m) + " edge lines, got " + std::to_string(read));
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank_or_comment(line))
      throw ParseError("line " + std::to_string(lineno) + ": trailing data after " +
                       std::to_string(m) + " edges");
  }
  return h;
}

std::string serialize_hypergraph(const Hypergraph& h) {
  Hypergraph c = h.canonical();
  std::string out = std::to_string(c.vertex_count()) + " " + std::to_string(c.edge_count()) + "\n";
  for (const auto& e : c.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<std::vector<int>> components(const Hypergraph& h) {
  int n = h.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : h.edges()) {
    int root = uf_find(parent, e[0]);
    for (int v : e) parent[uf_find(parent, v)] = root;
  }
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[uf_find(parent, v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& g : groups)
    if (!g.empty()) out.push_back(std::move(g));
  return out;
}

bool is_connected(const Hypergraph& h) { return components(h).size() == 1; }

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& new_index_of) {
  int n = h.vertex_count();
  if (static_cast<int>(new_index_of.size()) != n)
    throw std::invalid_argument("relabel permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (int v : new_index_of) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("relabel map is not a permutation");
    seen[v] = true;
  }
  Hypergraph out(n);
  for (const auto& e : h.edges()) {
    std::vector<int> mapped;
    mapped.reserve(e.size());
    for (int v : e) mapped.push_back(new_index_of[v]);
    out.add_edge(std::move(mapped));
  }
  return out;
}

}  // namespace hb
