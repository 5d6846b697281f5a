#include "critfix/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace critfix {

std::vector<Partition> admissible_partitions(int d) {
  if (d < 2) throw DomainError("degree must be at least 2");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == d) return;
    for (int k = std::min(maxpart, remaining); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(2 * d - 2, d - 1);
  return young_sort(std::move(out), d);
}

std::vector<Partition> nonpolynomial_partitions(int d) {
  std::vector<Partition> out;
  for (auto& p : admissible_partitions(d))
    if (!classify(p, d).polynomial_type) out.push_back(p);
  return out;
}

bool is_admissible(const Partition& p, int d) {
  if (d < 2 || p.empty() || static_cast<int>(p.size()) > d) return false;
  int s = 0;
  for (int k : p) {
    if (k < 1 || k > d - 1) return false;
    s += k;
  }
  return s == 2 * d - 2;
}

unsigned long long young_key(const Partition& p, int d) {
  const unsigned long long B = static_cast<unsigned long long>(2 * d - 1);
  Partition q = normalize_partition(p);
  unsigned long long v = 0;
  for (int k : q) v = v * B + static_cast<unsigned long long>(k);
  return v;
}

std::vector<Partition> young_sort(std::vector<Partition> ps, int d) {
  for (auto& p : ps) p = normalize_partition(p);
  std::sort(ps.begin(), ps.end(),
            [d](const Partition& a, const Partition& b) { return young_key(a, d) > young_key(b, d); });
  return ps;
}

PartitionFlags classify(const Partition& p, int d) {
  PartitionFlags f;
  int mx = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
  f.polynomial_type = mx == d - 1;
  f.newton_candidate = static_cast<int>(p.size()) == d;
  f.belyi_candidate = p.size() == 3;
  return f;
}

Partition normalize_partition(Partition p) {
  std::sort(p.rbegin(), p.rend());
  return p;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  bool separated = text.find_first_of("+,[ ") != std::string::npos;
  if (separated) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) {
        p.push_back(std::stoi(cur));
        cur.clear();
      }
    };
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c)))
        cur += c;
      else if (c == '+' || c == ',' || c == ' ' || c == '[' || c == ']')
        flush();
      else
        throw DomainError("bad partition: " + text);
    }
    flush();
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad partition: " + text);
      p.push_back(c - '0');
    }
  }
  if (p.empty()) throw DomainError("empty partition");
  for (int k : p)
    if (k < 1) throw DomainError("partition parts must be positive");
  return normalize_partition(p);
}

std::string partition_plus(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(p[i]);
  }
  return s;
}

std::string partition_compact(const Partition& p) {
  std::string s;
  bool big = std::any_of(p.begin(), p.end(), [](int k) { return k > 9; });
  if (big) return partition_plus(p);
  for (int k : p) s += std::to_string(k);
  return s;
}

std::string partition_list(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace critfix
