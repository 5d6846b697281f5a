#include "critfix/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace critfix {

Perm::Perm(std::vector<int> images0) : img_(std::move(images0)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) throw DomainError("not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 0);
  std::vector<char> used(d, 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k], b = c[(k + 1) % c.size()];
      if (a < 1 || a > d || b < 1 || b > d) throw DomainError("cycle point out of range");
      if (used[a - 1]) throw DomainError("point repeated in cycle notation");
      used[a - 1] = 1;
      v[a - 1] = b - 1;
    }
  }
  return Perm(std::move(v));
}

Perm Perm::parse(const std::string& text, int d) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int maxpt = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.compare(i, 2, "id") == 0) i = text.size();
  while (i < text.size()) {
    skip();
    if (i >= text.size()) break;
    if (text[i] != '(') throw DomainError("bad cycle notation: " + text);
    auto close = text.find(')', i);
    if (close == std::string::npos) throw DomainError("unbalanced cycle notation: " + text);
    std::string body = text.substr(i + 1, close - i - 1);
    i = close + 1;
    bool separated = body.find_first_of(" ,") != std::string::npos;
    std::vector<int> cyc;
    if (separated) {
      for (char& ch : body)
        if (ch == ',') ch = ' ';
      std::istringstream ss(body);
      int x;
      while (ss >> x) cyc.push_back(x);
      if (!ss.eof()) throw DomainError("bad cycle entry: " + body);
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw DomainError("bad cycle entry: " + body);
        cyc.push_back(ch - '0');
      }
    }
    for (int x : cyc) maxpt = std::max(maxpt, x);
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  if (d == 0) d = std::max(maxpt, 1);
  if (maxpt > d) throw DomainError("cycle point exceeds degree");
  return from_cycles(d, cycles);
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(j + 1);
    }
    if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_string(bool include_fixed) const {
  auto cs = cycles(include_fixed);
  if (cs.empty()) return "()";
  bool compact = degree() <= 9;
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k && !compact) s += ' ';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw DomainError("degree mismatch in compose");
  std::vector<int> v(p.degree());
  for (int i = 0; i < p.degree(); ++i) v[i] = q(p(i));
  return Perm(std::move(v));
}

Perm compose_all(const std::vector<Perm>& ps, int d) {
  Perm r = Perm::identity(d);
  for (const auto& p : ps) r = compose(r, p);
  return r;
}

Perm conjugate(const Perm& g, const Perm& x) { return compose(compose(x.inverse(), g), x); }

Partition cycle_type(const Perm& p) {
  Partition t;
  for (const auto& c : p.cycles(true)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int orbit_count(const std::vector<Perm>& ps, int d) {
  std::vector<int> comp(d, -1);
  int count = 0;
  for (int s = 0; s < d; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& p : ps) {
        int y = p(x);
        if (comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return count;
}

bool is_transitive(const std::vector<Perm>& ps) {
  if (ps.empty()) throw DomainError("is_transitive of empty sequence");
  int d = ps.front().degree();
  for (const auto& p : ps)
    if (p.degree() != d) throw DomainError("degree mismatch");
  return orbit_count(ps, d) == 1;
}

// ---- words ----

Word::Word(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.gen < 1 || l.gen > n_) throw DomainError("generator index out of range");
    if (l.exp != 1 && l.exp != -1) throw DomainError("letter exponent must be +-1");
  }
}

Word Word::parse(const std::string& text, int n, const std::string& alphabet) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto at = [&](char c) { return i < text.size() && text[i] == c; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    int g = 0;
    if (c == '1' && (i + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      continue;
    }
    if (!alphabet.empty() && alphabet.find(c) != std::string::npos) {
      g = static_cast<int>(alphabet.find(c)) + 1;
      ++i;
    } else if (c == 'g') {
      ++i;
      if (at('_')) ++i;
      bool brace = at('{');
      if (brace) ++i;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw DomainError("bad generator in word: " + text);
      g = std::stoi(text.substr(i, j - i));
      i = j;
      if (brace) {
        if (!at('}')) throw DomainError("bad generator in word: " + text);
        ++i;
      }
    } else {
      throw DomainError("bad word: " + text);
    }
    int power = 1;
    if (at('^')) {
      ++i;
      bool brace = at('{');
      if (brace) ++i;
      std::size_t j = i;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string num = text.substr(i, j - i);
      if (num.empty() || num == "-" || num == "+") throw DomainError("bad exponent in word: " + text);
      power = std::stoi(num);
      i = j;
      if (brace) {
        if (!at('}')) throw DomainError("bad exponent in word: " + text);
        ++i;
      }
    }
    int e = power < 0 ? -1 : 1;
    for (int k = 0; k < std::abs(power); ++k) out.push_back({g, e});
  }
  return Word(n, std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> v(letters_.rbegin(), letters_.rend());
  for (auto& l : v) l.exp = -l.exp;
  return Word(n_, std::move(v));
}

Word Word::operator*(const Word& o) const {
  if (n_ != o.n_) throw DomainError("generator count mismatch");
  std::vector<Letter> v = letters_;
  for (const auto& l : o.letters_) {
    if (!v.empty() && v.back().gen == l.gen && v.back().exp == -l.exp)
      v.pop_back();
    else
      v.push_back(l);
  }
  Word w(n_);
  w.letters_ = std::move(v);
  return w;
}

Word Word::reduced() const { return Word(n_) * *this; }

static std::string letter_name(int g, const std::string& alphabet) {
  if (!alphabet.empty() && g <= static_cast<int>(alphabet.size())) return std::string(1, alphabet[g - 1]);
  return "g" + std::to_string(g);
}

std::string Word::to_string(const std::string& alphabet) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += '*';
    s += letter_name(letters_[k].gen, alphabet);
    if (letters_[k].exp < 0) s += "^-1";
  }
  return s;
}

std::string Word::to_compact(const std::string& alphabet) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    s += letter_name(l.gen, alphabet);
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

Word word_normalize(const Word& w, bool use_sphere_relation) {
  if (!use_sphere_relation || w.n() == 0) return w.reduced();
  const int n = w.n();
  // g_n = (g_1 ... g_{n-1})^{-1}
  std::vector<Letter> prod;
  for (int g = 1; g < n; ++g) prod.push_back({g, 1});
  Word gn_value = Word(n, prod).inverse();
  Word out(n);
  for (const auto& l : w.letters()) {
    if (l.gen == n)
      out = out * (l.exp > 0 ? gn_value : gn_value.inverse());
    else
      out = out * Word(n, {l});
  }
  return out;
}

// ---- wreath elements ----

WreathElement WreathElement::identity(int d, int n) {
  return WreathElement{std::vector<Word>(d, Word(n)), Perm::identity(d)};
}

std::string WreathElement::to_string(const std::string& alphabet) const {
  std::string s = "<";
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (k) s += ", ";
    s += words[k].to_compact(alphabet);
  }
  s += ">";
  s += perm.to_string();
  return s;
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b) {
  if (a.degree() != b.degree() || a.words.size() != b.words.size())
    throw DomainError("degree mismatch in wreath product");
  if (static_cast<int>(a.words.size()) != a.degree()) throw DomainError("word vector length differs from degree");
  WreathElement r;
  r.perm = compose(a.perm, b.perm);
  r.words.reserve(a.words.size());
  for (int i = 0; i < a.degree(); ++i) r.words.push_back((a.words[i] * b.words[a.perm(i)]).reduced());
  return r;
}

}  // namespace critfix
