#include "hyperburn/designs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hb {

std::string u128_to_string(unsigned __int128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s += static_cast<char>('0' + static_cast<int>(x % 10));
    x /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Design validate_bibd(const Hypergraph& h, int v, int k, int lambda, std::string name) {
  auto fail = [&](const std::string& why) {
    throw ValidationError((name.empty() ? std::string("design") : name) + ": " + why);
  };
  if (!(v > k && k >= 2)) fail("parameters need v > k >= 2");
  if (lambda < 1) fail("lambda must be positive");
  if (h.vertex_count() != v)
    fail("point count " + std::to_string(h.vertex_count()) + " differs from v=" + std::to_string(v));
  for (int e = 0; e < h.edge_count(); ++e)
    if (h.edge_size(e) != k)
      fail("block " + std::to_string(e) + " has " + std::to_string(h.edge_size(e)) +
           " points, expected k=" + std::to_string(k));

  std::vector<int> pair_count(static_cast<std::size_t>(v) * v, 0);
  for (const auto& block : h.edges())
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        ++pair_count[static_cast<std::size_t>(block[i]) * v + block[j]];
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) {
      int c = pair_count[static_cast<std::size_t>(a) * v + b];
      if (c != lambda)
        fail("pair (" + std::to_string(a) + "," + std::to_string(b) + ") lies in " +
             std::to_string(c) + " blocks, expected " + std::to_string(lambda));
    }

  long long rn = static_cast<long long>(lambda) * (v - 1);
  if (rn % (k - 1) != 0) fail("replication number lambda(v-1)/(k-1) is not an integer");
  long long bn = static_cast<long long>(lambda) * v * (v - 1);
  if (bn % (static_cast<long long>(k) * (k - 1)) != 0)
    fail("block count lambda*v*(v-1)/(k(k-1)) is not an integer");
  long long b_expected = bn / (static_cast<long long>(k) * (k - 1));
  if (b_expected != h.edge_count())
    fail("found " + std::to_string(h.edge_count()) + " blocks, expected " +
         std::to_string(b_expected));

  Design d{h.canonical(), v, k, lambda, static_cast<int>(rn / (k - 1)),
           static_cast<int>(b_expected), std::move(name), {}};
  return d;
}

Design double_design(const Design& d) {
  Hypergraph h(d.v);
  for (const auto& block : d.hg.edges()) {
    h.add_edge(block);
    h.add_edge(block);
  }
  return validate_bibd(h, d.v, d.k, 2 * d.lambda, d.name + "-x2");
}

Design merge_designs(const Design& a, const Design& b) {
  if (a.v != b.v || a.k != b.k)
    throw ValidationError("cannot merge designs with different (v,k)");
  Hypergraph h(a.v);
  for (const auto& block : a.hg.edges()) h.add_edge(block);
  for (const auto& block : b.hg.edges()) h.add_edge(block);
  return validate_bibd(h, a.v, a.k, a.lambda + b.lambda, a.name + "+" + b.name);
}

// ---------------------------------------------------------------------------
// Automorphism counting
// ---------------------------------------------------------------------------

namespace {

struct BlockTable {
  int v = 0;
  std::vector<std::uint32_t> distinct;  // distinct block masks
  std::vector<int> mult;                // multiplicity per distinct block
  std::vector<int> mult_of_mask;        // 1<<v lookup: multiplicity or 0

  explicit BlockTable(const Hypergraph& h) : v(h.vertex_count()) {
    std::map<std::uint32_t, int> seen;
    for (const auto& e : h.edges()) {
      std::uint32_t m = 0;
      for (int x : e) m |= std::uint32_t{1} << x;
      ++seen[m];
    }
    mult_of_mask.assign(std::size_t{1} << v, 0);
    for (auto& [mask, count] : seen) {
      distinct.push_back(mask);
      mult.push_back(count);
      mult_of_mask[mask] = count;
    }
  }

  // Total multiplicity of blocks containing every vertex of `subset`.
  int containing(std::uint32_t subset) const {
    int total = 0;
    for (std::size_t i = 0; i < distinct.size(); ++i)
      if ((distinct[i] & subset) == subset) total += mult[i];
    return total;
  }

  unsigned __int128 multiplicity_factor() const {
    unsigned __int128 f = 1;
    for (int c : mult)
      for (int i = 2; i <= c; ++i) f *= static_cast<unsigned>(i);
    return f;
  }
};

std::uint32_t map_mask(std::uint32_t mask, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::uint32_t bits = mask; bits; bits &= bits - 1)
    out |= std::uint32_t{1} << perm[std::countr_zero(bits)];
  return out;
}

// Iterated colour refinement plus stabilizer-chain backtracking. Vertices
// are assigned in a fixed order; at each level the number of extendable
// images of the next vertex (under the identity prefix) is one orbit size of
// the chain, and the group order is their product.
class RefinementCounter {
 public:
  explicit RefinementCounter(const Hypergraph& h) : table_(h), v_(h.vertex_count()) {
    refine_colors(h);
    order_.resize(v_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<int> class_size(num_classes_, 0);
    for (int c : color_) ++class_size[c];
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (class_size[color_[a]] != class_size[color_[b]])
        return class_size[color_[a]] < class_size[color_[b]];
      return a < b;
    });
    incident_.resize(v_);
    for (std::size_t i = 0; i < table_.distinct.size(); ++i)
      for (std::uint32_t bits = table_.distinct[i]; bits; bits &= bits - 1)
        incident_[std::countr_zero(bits)].push_back(static_cast<int>(i));
  }

  unsigned long long count() {
    unsigned long long total = 1;
    std::vector<int> sigma(v_, -1);
    std::uint32_t domain = 0, image = 0;
    for (int t = 0; t < v_; ++t) {
      int x = order_[t];
      unsigned long long images = 0;
      for (int a = 0; a < v_; ++a) {
        if (color_[a] != color_[x]) continue;
        if (image >> a & 1) continue;
        if (!consistent(sigma, domain, x, a)) continue;
        sigma[x] = a;
        if (extend(sigma, domain | (std::uint32_t{1} << x), image | (std::uint32_t{1} << a), t + 1))
          ++images;
        sigma[x] = -1;
      }
      total *= images;
      if (images == 0) return 0;  // cannot happen: the identity always extends
      sigma[x] = x;
      domain |= std::uint32_t{1} << x;
      image |= std::uint32_t{1} << x;
    }
    return total;
  }

 private:
  void refine_colors(const Hypergraph& h) {
    (void)h;
    color_.assign(v_, 0);
    num_classes_ = 1;
    // Refinement only ever splits classes, so the class count is monotone
    // and equality means the partition is stable.
    for (int round = 0; round < v_; ++round) {
      std::vector<std::string> sig(v_);
      for (int x = 0; x < v_; ++x) {
        // Current colour plus, per incident distinct block, its size,
        // multiplicity, and the colour profile of its members.
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < table_.distinct.size(); ++i) {
          std::uint32_t m = table_.distinct[i];
          if (!(m >> x & 1)) continue;
          std::vector<int> members;
          for (std::uint32_t bits = m; bits; bits &= bits - 1)
            members.push_back(color_[std::countr_zero(bits)]);
          std::sort(members.begin(), members.end());
          std::string s = std::to_string(std::popcount(m)) + ":" + std::to_string(table_.mult[i]) + ":";
          for (int c : members) s += std::to_string(c) + ",";
          parts.push_back(std::move(s));
        }
        std::sort(parts.begin(), parts.end());
        sig[x] = std::to_string(color_[x]) + "|";
        for (auto& p : parts) sig[x] += p + ";";
      }
      std::map<std::string, int> ids;
      for (int x = 0; x < v_; ++x) ids.emplace(sig[x], 0);
      int next_id = 0;
      for (auto& [key, id] : ids) id = next_id++;
      for (int x = 0; x < v_; ++x) color_[x] = ids[sig[x]];
      if (next_id == num_classes_) break;
      num_classes_ = next_id;
    }
  }

  // Every block through x must keep its "blocks containing this assigned
  // part" count when the part is pushed through sigma.
  bool consistent(const std::vector<int>& sigma, std::uint32_t domain, int x, int a) const {
    std::uint32_t dom = domain | (std::uint32_t{1} << x);
    for (int bi : incident_[x]) {
      std::uint32_t part = table_.distinct[bi] & dom;
      std::uint32_t mapped = 0;
      for (std::uint32_t bits = part & ~(std::uint32_t{1} << x); bits; bits &= bits - 1)
        mapped |= std::uint32_t{1} << sigma[std::countr_zero(bits)];
      mapped |= std::uint32_t{1} << a;
      if (table_.containing(part) != table_.containing(mapped)) return false;
    }
    return true;
  }

  bool extend(std::vector<int>& sigma, std::uint32_t domain, std::uint32_t image, int t) {
    if (t == v_) return verify(sigma);
    int x = order_[t];
    for (int a = 0; a < v_; ++a) {
      if (color_[a] != color_[x]) continue;
      if (image >> a & 1) continue;
      if (!consistent(sigma, domain, x, a)) continue;
      sigma[x] = a;
      if (extend(sigma, domain | (std::uint32_t{1} << x), image | (std::uint32_t{1} << a), t + 1))
        return true;
      sigma[x] = -1;
    }
    return false;
  }

  bool verify(const std::vector<int>& sigma) const {
    for (std::size_t i = 0; i < table_.distinct.size(); ++i) {
      std::uint32_t mapped = map_mask(table_.distinct[i], sigma);
      if (table_.mult_of_mask[mapped] != table_.mult[i]) return false;
    }
    return true;
  }

  BlockTable table_;
  int v_;
  int num_classes_ = 1;
  std::vector<int> color_;
  std::vector<int> order_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace

AutResult automorphism_order_brute(const Hypergraph& h) {
  int v = h.vertex_count();
  if (v > 10)
    throw std::invalid_argument("refusing: exhaustive automorphism scan capped at 10 vertices");
  BlockTable table(h);
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  unsigned long long count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < table.distinct.size(); ++i)
      ok = table.mult_of_mask[map_mask(table.distinct[i], perm)] == table.mult[i];
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  AutResult r;
  r.point_stabilizer_count = count;
  r.multiplicity_factor = table.multiplicity_factor();
  r.order = static_cast<unsigned __int128>(count) * r.multiplicity_factor;
  return r;
}

AutResult automorphism_order(const Hypergraph& h) {
  int v = h.vertex_count();
  if (v > 16)
    throw std::invalid_argument("refusing: automorphism counting capped at 16 vertices");
  RefinementCounter counter(h);
  BlockTable table(h);
  AutResult r;
  r.point_stabilizer_count = counter.count();
  r.multiplicity_factor = table.multiplicity_factor();
  r.order = static_cast<unsigned __int128>(r.point_stabilizer_count) * r.multiplicity_factor;
  return r;
}

// ---------------------------------------------------------------------------
// Correlation report
// ---------------------------------------------------------------------------

std::vector<CorrelationRow> correlation_report(const std::vector<Design>& corpus,
                                               const SolveLimits& limits) {
  std::vector<CorrelationRow> rows;
  for (const Design& d : corpus) {
    CorrelationRow row;
    row.name = d.name;
    row.v = d.v;
    row.k = d.k;
    row.lambda = d.lambda;
    LazyResult lr = lazy_burning_number(d.hg, Proportion(d.k - 1, d.k), limits);
    row.lazy_status = lr.status;
    row.lazy_lower = lr.lower;
    row.lazy_upper = lr.upper;
    row.aut = automorphism_order(d.hg);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const CorrelationRow& a, const CorrelationRow& b) {
    return std::tie(a.v, a.k, a.lambda, a.name) < std::tie(b.v, b.k, b.lambda, b.name);
  });
  return rows;
}

std::string correlation_csv(const std::vector<CorrelationRow>& rows) {
  std::string out = "name,v,k,lambda,b_L,aut_order\n";
  for (const auto& r : rows) {
    out += r.name + "," + std::to_string(r.v) + "," + std::to_string(r.k) + "," +
           std::to_string(r.lambda) + ",";
    if (r.lazy_status == SolveStatus::Exact)
      out += std::to_string(r.lazy_upper);
    else
      out += std::to_string(r.lazy_lower) + ".." + std::to_string(r.lazy_upper) + " (partial)";
    out += "," + r.aut.order_str() + "\n";
  }
  // Rank agreement within each parameter class.
  std::map<std::tuple<int, int, int>, std::vector<const CorrelationRow*>> classes;
  for (const auto& r : rows) classes[{r.v, r.k, r.lambda}].push_back(&r);
  for (const auto& [params, members] : classes) {
    if (members.size() < 2) continue;
    const CorrelationRow* max_aut = members[0];
    const CorrelationRow* max_lazy = members[0];
    for (const auto* m : members) {
      if (m->aut.order > max_aut->aut.order) max_aut = m;
      if (m->lazy_upper > max_lazy->lazy_upper) max_lazy = m;
    }
    out += "# class (" + std::to_string(std::get<0>(params)) + "," +
           std::to_string(std::get<1>(params)) + "," + std::to_string(std::get<2>(params)) +
           "): max aut " + max_aut->name + ", max lazy " + max_lazy->name +
           (max_aut == max_lazy ? " (agree)\n" : " (differ)\n");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus text format
// ---------------------------------------------------------------------------

std::vector<Design> parse_design_corpus(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Design> out;

  std::string pending_header;
  auto next_content_line = [&](std::string* dst) {
    while (std::getline(in, line)) {
      std::string trimmed = line.substr(0, line.find('#'));
      bool blank = trimmed.find_first_not_of(" \t\r") == std::string::npos;
      if (blank) continue;
      *dst = trimmed;
      return true;
    }
    return false;
  };

  while (true) {
    std::string header;
    if (!next_content_line(&header)) break;
    std::istringstream hs(header);
    std::string tag, name;
    long v, k, lambda;
    if (!(hs >> tag >> v >> k >> lambda >> name) || tag != "BIBD")
      throw ParseError("expected 'BIBD v k lambda name', got: " + header);
    if (v <= k || k < 2 || lambda < 1)
      throw ParseError(name + ": malformed parameters in header: " + header);
    long long bn = lambda * v * (v - 1);
    if (bn % (k * (k - 1)) != 0)
      throw ParseError(name + ": lambda*v*(v-1) is not divisible by k(k-1)");
    long long blocks = bn / (k * (k - 1));

    std::vector<std::vector<std::string>> raw_blocks;
    for (long long i = 0; i < blocks; ++i) {
      std::string bl;
      if (!next_content_line(&bl))
        throw ParseError(name + ": expected " + std::to_string(blocks) + " block lines");
      std::istringstream bs(bl);
      std::vector<std::string> toks;
      std::string t;
      while (bs >> t) toks.push_back(t);
      raw_blocks.push_back(std::move(toks));
    }

    // Integer tokens in range are used directly; anything else goes through
    // a label table in sorted order.
    bool all_indices = true;
    for (const auto& bl : raw_blocks)
      for (const auto& t : bl) {
        bool numeric = !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
        long val = numeric ? std::strtol(t.c_str(), nullptr, 10) : -1;
        all_indices = all_indices && numeric && val >= 0 && val < v;
      }

    Hypergraph h(static_cast<int>(v));
    std::vector<std::string> labels;
    if (all_indices) {
      for (const auto& bl : raw_blocks) {
        std::vector<int> e;
        for (const auto& t : bl) e.push_back(static_cast<int>(std::strtol(t.c_str(), nullptr, 10)));
        h.add_edge(std::move(e));
      }
    } else {
      std::set<std::string> uniq;
      for (const auto& bl : raw_blocks) uniq.insert(bl.begin(), bl.end());
      if (static_cast<long>(uniq.size()) > v)
        throw ParseError(name + ": " + std::to_string(uniq.size()) + " distinct labels exceed v=" +
                         std::to_string(v));
      std::map<std::string, int> index_of;
      for (const auto& l : uniq) {
        index_of[l] = static_cast<int>(labels.size());
        labels.push_back(l);
      }
      for (const auto& bl : raw_blocks) {
        std::vector<int> e;
        for (const auto& t : bl) e.push_back(index_of[t]);
        h.add_edge(std::move(e));
      }
    }

    Design d = validate_bibd(h, static_cast<int>(v), static_cast<int>(k),
                             static_cast<int>(lambda), name);
    d.labels = std::move(labels);
    out.push_back(std::move(d));
  }
  return out;
}

std::string serialize_design_corpus(const std::vector<Design>& corpus) {
  std::string out;
  for (const Design& d : corpus) {
    out += "BIBD " + std::to_string(d.v) + " " + std::to_string(d.k) + " " +
           std::to_string(d.lambda) + " " + d.name + "\n";
    Hypergraph canon = d.hg.canonical();
    for (const auto& block : canon.edges()) {
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += ' ';
        out += d.labels.empty() ? std::to_string(block[i]) : d.labels[block[i]];
      }
      out += '\n';
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

Design fano() {
  Hypergraph h(7);
  for (int i = 0; i < 7; ++i) h.add_edge({i, (i + 1) % 7, (i + 3) % 7});
  return validate_bibd(h, 7, 3, 1, "fano");
}

Design ag23() {
  // Triples of points of the 3x3 affine grid summing to zero coordinatewise.
  Hypergraph h(9);
  auto row = [](int p) { return p / 3; };
  auto col = [](int p) { return p % 3; };
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      for (int c = b + 1; c < 9; ++c)
        if ((row(a) + row(b) + row(c)) % 3 == 0 && (col(a) + col(b) + col(c)) % 3 == 0)
          h.add_edge({a, b, c});
  return validate_bibd(h, 9, 3, 1, "sts9");
}

Design sts13_cyclic() {
  Hypergraph h(13);
  for (int i = 0; i < 13; ++i) {
    h.add_edge({i, (i + 1) % 13, (i + 4) % 13});
    h.add_edge({i, (i + 2) % 13, (i + 7) % 13});
  }
  return validate_bibd(h, 13, 3, 1, "sts13-1");
}

Design sts13_noncyclic() {
  Design base = sts13_cyclic();
  auto aut_base = automorphism_order(base.hg).order;
  const auto& blocks = base.hg.edges();
  int nb = base.b;

  // Pair -> block index (each pair lies in exactly one block).
  std::vector<int> block_of(13 * 13, -1);
  for (int i = 0; i < nb; ++i)
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        block_of[blocks[i][a] * 13 + blocks[i][b]] = i;
        block_of[blocks[i][b] * 13 + blocks[i][a]] = i;
      }
  auto third = [&](int bi, int x, int y) {
    for (int p : blocks[bi])
      if (p != x && p != y) return p;
    return -1;
  };

  // Quadrilateral {a,b,c},{a,d,e},{f,b,d},{f,c,e}: switching it trades the
  // four blocks for {f,b,c},{f,d,e},{a,b,d},{a,c,e} and preserves all pair
  // counts. The first switch producing a different group order is the
  // second, non-cyclic system.
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      if (i == j) continue;
      for (int ai = 0; ai < 3; ++ai) {
        int a = blocks[i][ai];
        if (std::find(blocks[j].begin(), blocks[j].end(), a) == blocks[j].end()) continue;
        std::vector<int> bc, de;
        for (int p : blocks[i])
          if (p != a) bc.push_back(p);
        for (int p : blocks[j])
          if (p != a) de.push_back(p);
        if (bc.size() != 2 || de.size() != 2) continue;
        for (int swap_bc = 0; swap_bc < 2; ++swap_bc) {
          int b = bc[swap_bc], c = bc[1 - swap_bc];
          for (int swap_de = 0; swap_de < 2; ++swap_de) {
            int d = de[swap_de], e = de[1 - swap_de];
            int b3 = block_of[b * 13 + d];
            int f = third(b3, b, d);
            if (f == a || f == c || f == e) continue;
            int b4 = block_of[c * 13 + e];
            if (third(b4, c, e) != f) continue;
            Hypergraph trade(13);
            for (int t = 0; t < nb; ++t)
              if (t != i && t != j && t != b3 && t != b4) trade.add_edge(blocks[t]);
            trade.add_edge({f, b, c});
            trade.add_edge({f, d, e});
            trade.add_edge({a, b, d});
            trade.add_edge({a, c, e});
            Design candidate = validate_bibd(trade, 13, 3, 1, "sts13-2");
            if (automorphism_order(candidate.hg).order != aut_base) return candidate;
          }
        }
      }
    }
  throw std::logic_error("no quadrilateral switch changed the group order");
}

Design sts15_points_lines() {
  // Points are the nonzero 4-bit vectors; lines are the triples with zero sum.
  Hypergraph h(15);
  for (int a = 1; a <= 15; ++a)
    for (int b = a + 1; b <= 15; ++b) {
      int c = a ^ b;
      if (c > b) h.add_edge({a - 1, b - 1, c - 1});
    }
  return validate_bibd(h, 15, 3, 1, "sts15-1");
}

Design bibd_13_4_1() {
  // Projective plane of order 3: coordinate triples over Z3 normalized so
  // the first nonzero coordinate is 1, one block per dual vector.
  std::vector<std::array<int, 3>> points;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        int first = x != 0 ? x : (y != 0 ? y : z);
        if (first == 1) points.push_back({x, y, z});
      }
  Hypergraph h(13);
  for (const auto& line : points) {
    std::vector<int> block;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& p = points[i];
      if ((line[0] * p[0] + line[1] * p[1] + line[2] * p[2]) % 3 == 0)
        block.push_back(static_cast<int>(i));
    }
    h.add_edge(std::move(block));
  }
  return validate_bibd(h, 13, 4, 1, "pg23");
}

Design bibd_16_4_1() {
  // Affine plane of order 4 over the field {0,1,w,w+1}, addition = xor.
  auto mul = [](int a, int b) {
    static const int table[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return table[a][b];
  };
  Hypergraph h(16);
  auto idx = [](int x, int y) { return 4 * x + y; };
  // Lines y = m*x + c, plus the vertical lines x = c.
  for (int m = 0; m < 4; ++m)
    for (int c = 0; c < 4; ++c) {
      std::vector<int> line;
      for (int x = 0; x < 4; ++x) line.push_back(idx(x, mul(m, x) ^ c));
      h.add_edge(std::move(line));
    }
  for (int c = 0; c < 4; ++c) h.add_edge({idx(c, 0), idx(c, 1), idx(c, 2), idx(c, 3)});
  return validate_bibd(h, 16, 4, 1, "ag24");
}

std::vector<Design> shipped_corpus() {
  Design f = fano();
  Design s9 = ag23();
  std::vector<Design> all;
  all.push_back(f);
  Design f2 = double_design(f);
  f2.name = "fano-x2";
  all.push_back(f2);
  Design f3 = merge_designs(f2, f);
  f3.name = "fano-x3";
  all.push_back(f3);
  all.push_back(s9);
  Design s9x2 = double_design(s9);
  s9x2.name = "sts9-x2";
  all.push_back(s9x2);
  all.push_back(sts13_cyclic());
  all.push_back(sts13_noncyclic());
  all.push_back(bibd_13_4_1());
  all.push_back(sts15_points_lines());
  all.push_back(bibd_16_4_1());
  std::sort(all.begin(), all.end(), [](const Design& a, const Design& b) {
    return std::tie(a.v, a.k, a.lambda, a.name) < std::tie(b.v, b.k, b.lambda, b.name);
  });
  return all;
}

}  // namespace hb
