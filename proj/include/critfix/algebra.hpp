#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace critfix {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Partition = std::vector<int>;

// Permutation of {1..d}, stored 0-based. Acts on the right: i^(pq) = (i^p)^q.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images0);

  static Perm identity(int d);
  // cycles given with 1-based points
  static Perm from_cycles(int d, const std::vector<std::vector<int>>& cycles);
  // "(1 2 5 3 4)(6)" or "(12534)" when every point is a single digit
  static Perm parse(const std::string& text, int d = 0);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i0) const { return img_[i0]; }
  int image1(int i1) const { return img_[i1 - 1] + 1; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;  // 1-based
  std::string to_string(bool include_fixed = false) const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

// p applied first, then q
Perm compose(const Perm& p, const Perm& q);
Perm compose_all(const std::vector<Perm>& ps, int d);
// x^{-1} g x
Perm conjugate(const Perm& g, const Perm& x);
Partition cycle_type(const Perm& p);
bool is_transitive(const std::vector<Perm>& ps);
int orbit_count(const std::vector<Perm>& ps, int d);

struct Letter {
  int gen;  // 1..n
  int exp;  // +1 or -1
  friend bool operator==(const Letter& a, const Letter& b) { return a.gen == b.gen && a.exp == b.exp; }
};

class Word {
 public:
  Word() = default;
  explicit Word(int n) : n_(n) {}
  Word(int n, std::vector<Letter> letters);

  static Word gen(int n, int g, int e = 1) { return Word(n, {{g, e}}); }
  // "g2*g3^-1", "1" for empty; also accepts an alphabet like "ab" for letters a,b
  static Word parse(const std::string& text, int n, const std::string& alphabet = "");

  int n() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& o) const;
  Word reduced() const;
  std::string to_string(const std::string& alphabet = "") const;
  // g_2g_3^{-1} is rendered as "g2g3^-1"
  std::string to_compact(const std::string& alphabet = "") const;

  friend bool operator==(const Word& a, const Word& b) { return a.n_ == b.n_ && a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Letter> letters_;
};

Word word_normalize(const Word& w, bool use_sphere_relation);

struct WreathElement {
  std::vector<Word> words;
  Perm perm;

  static WreathElement identity(int d, int n);
  int degree() const { return perm.degree(); }
  std::string to_string(const std::string& alphabet = "") const;
};

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b);

}  // namespace critfix
