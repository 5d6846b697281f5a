#include "critfix/hurwitz.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "critfix/partitions.hpp"

namespace critfix {

std::string BranchData::to_string() const {
  std::string s = "d=" + std::to_string(d) + ";";
  for (std::size_t i = 0; i < partitions.size(); ++i) s += (i ? "," : " ") + partition_list(partitions[i]);
  return s;
}

BranchData parse_branch_data(const std::string& text) {
  BranchData bd;
  auto semi = text.find(';');
  if (semi == std::string::npos) throw DomainError("branch data needs the form 'd=N; [..],[..]'");
  std::string head = text.substr(0, semi), body = text.substr(semi + 1);
  auto eq = head.find('=');
  try {
    bd.d = std::stoi(eq == std::string::npos ? head : head.substr(eq + 1));
  } catch (const std::exception&) {
    throw DomainError("bad degree in branch data: " + head);
  }
  std::size_t pos = 0;
  while ((pos = body.find('[', pos)) != std::string::npos) {
    auto close = body.find(']', pos);
    if (close == std::string::npos) throw DomainError("unbalanced bracket in branch data");
    bd.partitions.push_back(parse_partition(body.substr(pos, close - pos + 1)));
    pos = close + 1;
  }
  if (bd.partitions.empty()) throw DomainError("branch data has no partitions");
  return bd;
}

Tuple parse_tuple(const std::string& text, int d) {
  Tuple t;
  std::string cur;
  int depth = 0;
  for (char c : text + ",") {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      std::string s;
      for (char ch : cur)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
      if (!s.empty()) t.push_back(Perm::parse(s, d));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return t;
}

std::string tuple_to_string(const Tuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + t[i].to_string();
  return s;
}

Report validate_branch_data(const BranchData& bd) {
  Report r;
  auto fail = [&](std::string m) {
    r.ok = false;
    r.problems.push_back(std::move(m));
  };
  if (bd.d < 1) fail("degree must be positive");
  int rh = 0;
  for (std::size_t i = 0; i < bd.partitions.size(); ++i) {
    const auto& p = bd.partitions[i];
    int s = std::accumulate(p.begin(), p.end(), 0);
    if (s != bd.d) fail("partition " + std::to_string(i + 1) + " does not sum to d");
    if (std::none_of(p.begin(), p.end(), [](int k) { return k >= 2; }))
      fail("partition " + std::to_string(i + 1) + " is unbranched");
    for (int k : p)
      if (k < 1 || k > bd.d) fail("partition " + std::to_string(i + 1) + " has a part out of range");
    rh += bd.d - static_cast<int>(p.size());
  }
  if (rh != 2 * (bd.d - 1)) fail("Riemann-Hurwitz count is " + std::to_string(rh) + ", expected " + std::to_string(2 * bd.d - 2));
  return r;
}

Report validate_factorization(const Tuple& t, const BranchData& bd) {
  Report r;
  auto fail = [&](std::string m) {
    r.ok = false;
    r.problems.push_back(std::move(m));
  };
  if (t.size() != bd.partitions.size()) {
    fail("tuple length differs from the number of branch values");
    return r;
  }
  for (const auto& p : t)
    if (p.degree() != bd.d) {
      fail("permutation degree differs from d");
      return r;
    }
  if (!is_transitive(t)) fail("generated group is not transitive");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (cycle_type(t[i]) != normalize_partition(bd.partitions[i]))
      fail("entry " + std::to_string(i + 1) + " has cycle type " + partition_list(cycle_type(t[i])) + ", expected " +
           partition_list(bd.partitions[i]));
  if (!compose_all(t, bd.d).is_identity()) fail("product is not the identity");
  return r;
}

const std::vector<Perm>& conjugacy_class(const Partition& type_in, int d) {
  static std::map<std::pair<Partition, int>, std::vector<Perm>> cache;
  Partition type = normalize_partition(type_in);
  auto key = std::make_pair(type, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (d > 10) throw DomainError("conjugacy classes are enumerated only for d <= 10");
  std::vector<Perm> out;
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  do {
    Perm p(img);
    if (cycle_type(p) == type) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return cache.emplace(key, std::move(out)).first->second;
}

Perm class_representative(const Partition& type_in, int d) {
  Partition type = normalize_partition(type_in);
  std::vector<int> img(d);
  int off = 0;
  for (int k : type) {
    for (int j = 0; j < k; ++j) img[off + j] = off + (j + 1) % k;
    off += k;
  }
  if (off != d) throw DomainError("cycle type does not sum to d");
  return Perm(img);
}

namespace {

// relabel points in breadth-first order from s, generators in tuple order
std::vector<int> bfs_labels(const Tuple& t, int s, int d) {
  std::vector<int> lab(d, -1), order;
  lab[s] = 0;
  order.push_back(s);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const auto& p : t) {
      int y = p(order[k]);
      if (lab[y] < 0) {
        lab[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  return order.size() == static_cast<std::size_t>(d) ? lab : std::vector<int>{};
}

Tuple relabel(const Tuple& t, const std::vector<int>& lab) {
  Tuple out;
  for (const auto& p : t) {
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[lab[i]] = lab[p(i)];
    out.emplace_back(img);
  }
  return out;
}

std::vector<int> flat(const Tuple& t) {
  std::vector<int> v;
  for (const auto& p : t) v.insert(v.end(), p.images().begin(), p.images().end());
  return v;
}

}  // namespace

Tuple canonical_tuple(const Tuple& t) {
  if (t.empty()) return t;
  const int d = t[0].degree();
  Tuple best;
  std::vector<int> bestflat;
  bool transitive = is_transitive(t);
  if (transitive) {
    for (int s = 0; s < d; ++s) {
      Tuple c = relabel(t, bfs_labels(t, s, d));
      auto f = flat(c);
      if (best.empty() || f < bestflat) {
        best = std::move(c);
        bestflat = std::move(f);
      }
    }
    return best;
  }
  // intransitive tuples: brute force over all relabelings
  std::vector<int> lab(d);
  std::iota(lab.begin(), lab.end(), 0);
  do {
    Tuple c = relabel(t, lab);
    auto f = flat(c);
    if (best.empty() || f < bestflat) {
      best = std::move(c);
      bestflat = std::move(f);
    }
  } while (std::next_permutation(lab.begin(), lab.end()));
  return best;
}

std::vector<Tuple> search_factorizations(const BranchData& bd, const SearchOptions& opt) {
  Report rep = validate_branch_data(bd);
  if (!rep.ok) throw DomainError("inadmissible branch data: " + rep.problems.front());
  const int d = bd.d;
  const int n = static_cast<int>(bd.partitions.size());
  if (n == 1) return {};
  double work = 1;
  for (int i = 1; i + 1 < n; ++i) work *= static_cast<double>(conjugacy_class(bd.partitions[i], d).size());
  if (work > opt.max_candidates)
    throw DomainError("search space of " + std::to_string(work) + " candidates exceeds the bound");

  std::set<std::vector<int>> seen;
  std::vector<Tuple> out;
  const Partition last_type = normalize_partition(bd.partitions[n - 1]);
  Tuple t(n);
  t[0] = class_representative(bd.partitions[0], d);
  auto rec = [&](auto&& self, int i, const Perm& prefix) -> void {
    if (i == n - 1) {
      Perm lastp = prefix.inverse();
      if (cycle_type(lastp) != last_type) return;
      t[n - 1] = lastp;
      if (!is_transitive(t)) return;
      Tuple c = canonical_tuple(t);
      if (seen.insert(flat(c)).second) out.push_back(std::move(c));
      return;
    }
    for (const auto& p : conjugacy_class(bd.partitions[i], d)) {
      t[i] = p;
      self(self, i + 1, compose(prefix, p));
    }
  };
  rec(rec, 1, t[0]);
  std::sort(out.begin(), out.end(), [](const Tuple& a, const Tuple& b) { return flat(a) < flat(b); });
  return out;
}

Tuple braid_move(const Tuple& t, int i, bool forward) {
  if (i < 0 || i + 1 >= static_cast<int>(t.size())) throw DomainError("braid move position out of range");
  Tuple r = t;
  const Perm& a = t[i];
  const Perm& b = t[i + 1];
  if (forward) {
    r[i] = compose(compose(a, b), a.inverse());
    r[i + 1] = a;
  } else {
    r[i] = b;
    r[i + 1] = compose(compose(b.inverse(), a), b);
  }
  return r;
}

OrbitResult braid_orbits(const std::vector<Tuple>& classes) {
  OrbitResult res;
  std::map<std::vector<int>, int> id;
  std::vector<int> parent;
  std::vector<Tuple> nodes;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto node = [&](const Tuple& t) {
    Tuple c = canonical_tuple(t);
    auto f = flat(c);
    auto it = id.find(f);
    if (it != id.end()) return std::make_pair(it->second, false);
    int k = static_cast<int>(nodes.size());
    id.emplace(f, k);
    parent.push_back(k);
    nodes.push_back(std::move(c));
    return std::make_pair(k, true);
  };
  std::deque<int> q;
  std::vector<int> start;
  for (const auto& t : classes) {
    auto [k, fresh] = node(t);
    start.push_back(k);
    if (fresh) q.push_back(k);
  }
  while (!q.empty()) {
    int k = q.front();
    q.pop_front();
    for (int i = 0; i + 1 < static_cast<int>(nodes[k].size()); ++i)
      for (bool fw : {true, false}) {
        auto [m, fresh] = node(braid_move(nodes[k], i, fw));
        int a = find(k), b = find(m);
        if (a != b) parent[a] = b;
        if (fresh) q.push_back(m);
      }
  }
  std::map<int, int> orbit_id;
  for (int k : start) {
    int r = find(k);
    if (!orbit_id.count(r)) orbit_id.emplace(r, static_cast<int>(orbit_id.size()));
    res.orbit_of.push_back(orbit_id[r]);
  }
  std::set<int> roots;
  for (std::size_t k = 0; k < nodes.size(); ++k) roots.insert(find(static_cast<int>(k)));
  res.orbits = static_cast<int>(roots.size());
  res.explored = static_cast<int>(nodes.size());
  return res;
}

BranchData critically_fixed_branch_data(const Partition& p, int d) {
  if (!is_admissible(p, d)) throw DomainError("partition is not admissible for degree " + std::to_string(d));
  BranchData bd;
  bd.d = d;
  for (int m : p) {
    Partition q{m + 1};
    for (int k = 0; k < d - m - 1; ++k) q.push_back(1);
    bd.partitions.push_back(q);
  }
  return bd;
}

BranchData branch_data_of(const Tuple& t) {
  if (t.empty()) throw DomainError("empty tuple");
  BranchData bd;
  bd.d = t[0].degree();
  for (const auto& p : t) bd.partitions.push_back(cycle_type(p));
  return bd;
}

Tuple from_monodromy(const std::vector<Perm>& ms) {
  BranchData bd = branch_data_of(ms);
  Report r = validate_branch_data(bd);
  if (r.ok) r = validate_factorization(ms, bd);
  if (!r.ok) throw DomainError("monodromy is not a Hurwitz factorization: " + r.problems.front());
  return ms;
}

}  // namespace critfix
