#pragma once

// Fusion rings of the free orthogonal (SU(2)-type), quantum permutation
// (SO(3)-type) and quantum reflection (word monoid) families, plus the
// tensor powers of the fundamental representation of the free unitary group.

#include "eqg/arith.hpp"
#include "eqg/family.hpp"

#include <algorithm>
#include <compare>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace eqg {

// ---------------------------------------------------------------------------
// Labels

/// A word over Z/sZ; letters are stored as 1..s, with s standing for the class of 0.
struct Word {
  std::vector<int> letters;
  int modulus = 1;

  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// u_k of the SU(2)/SO(3)-type rings.
struct SpinLabel {
  int k = 0;
  friend bool operator==(const SpinLabel&, const SpinLabel&) = default;
  friend auto operator<=>(const SpinLabel&, const SpinLabel&) = default;
};

/// The irreducible u^{⊗k} of the free unitary group (α^k in word notation).
struct FreeLabel {
  int k = 0;
  friend bool operator==(const FreeLabel&, const FreeLabel&) = default;
  friend auto operator<=>(const FreeLabel&, const FreeLabel&) = default;
};

using IrrepLabel = std::variant<SpinLabel, FreeLabel, Word>;

inline int reduce_letter(int value, int s) {
  const int r = ((value % s) + s) % s;
  return r == 0 ? s : r;
}

inline Word make_word(std::vector<int> letters, int s) {
  if (s < 1) throw Error(ErrorKind::invalid_argument, "modulus must be at least 1");
  for (int a : letters) {
    if (a < 1 || a > s) {
      throw Error(ErrorKind::invalid_argument, "letter " + std::to_string(a) + " outside 1.." + std::to_string(s));
    }
  }
  return {std::move(letters), s};
}

/// (i_1 ... i_k)‾ = (-i_k) ... (-i_1).
inline Word word_involution(const Word& w) {
  Word out{{}, w.modulus};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(reduce_letter(-*it, w.modulus));
  return out;
}

/// i_1 ... i_{k-1} (i_k + j_1) j_2 ... j_l; absent when either word is empty.
inline std::optional<Word> word_fusion(const Word& a, const Word& b) {
  if (a.modulus != b.modulus) throw Error(ErrorKind::modulus_mismatch, "words over different moduli");
  if (a.empty() || b.empty()) return std::nullopt;
  Word out{a.letters, a.modulus};
  out.letters.back() = reduce_letter(out.letters.back() + b.letters.front(), a.modulus);
  out.letters.insert(out.letters.end(), b.letters.begin() + 1, b.letters.end());
  return out;
}

/// Letter sum; the degree of r_x.
inline int word_degree(const Word& w) { return std::accumulate(w.letters.begin(), w.letters.end(), 0); }

inline std::string to_string(const IrrepLabel& label) {
  if (auto* u = std::get_if<SpinLabel>(&label)) return "u" + std::to_string(u->k);
  if (auto* f = std::get_if<FreeLabel>(&label)) return "a" + std::to_string(f->k);
  const auto& w = std::get<Word>(label);
  std::string out = "r[";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.letters[i]);
  }
  return out + "]@" + std::to_string(w.modulus);
}

namespace detail {

inline int parse_small_int(const std::string& text, const std::string& context) {
  if (text.empty() || text.size() > 6 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::parse, "bad integer in label '" + context + "'");
  }
  return std::stoi(text);
}

}  // namespace detail

/// Parses `u<k>`, `a<k>`, `r[a,b,...]@s` or `r[a,b,...]` (the latter needs `default_s`).
inline IrrepLabel parse_label(const std::string& text, std::optional<int> default_s = std::nullopt) {
  if (text.size() >= 2 && text[0] == 'u') return SpinLabel{detail::parse_small_int(text.substr(1), text)};
  if (text.size() >= 2 && text[0] == 'a') return FreeLabel{detail::parse_small_int(text.substr(1), text)};
  if (text.size() >= 3 && text[0] == 'r' && text[1] == '[') {
    const auto close = text.find(']');
    if (close == std::string::npos) throw Error(ErrorKind::parse, "missing ']' in label '" + text + "'");
    std::vector<int> letters;
    const std::string body = text.substr(2, close - 2);
    std::size_t start = 0;
    while (start < body.size()) {
      auto comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      letters.push_back(detail::parse_small_int(body.substr(start, comma - start), text));
      start = comma + 1;
      if (comma + 1 == body.size()) throw Error(ErrorKind::parse, "trailing ',' in label '" + text + "'");
    }
    int s = 0;
    const std::string rest = text.substr(close + 1);
    if (rest.empty()) {
      if (!default_s) throw Error(ErrorKind::parse, "label '" + text + "' needs a modulus (@s)");
      s = *default_s;
    } else if (rest[0] == '@') {
      s = detail::parse_small_int(rest.substr(1), text);
    } else {
      throw Error(ErrorKind::parse, "trailing characters in label '" + text + "'");
    }
    if (s < 1) throw Error(ErrorKind::parse, "modulus must be at least 1 in '" + text + "'");
    for (int a : letters) {
      if (a < 1 || a > s) throw Error(ErrorKind::parse, "letter out of range in '" + text + "'");
    }
    return Word{std::move(letters), s};
  }
  throw Error(ErrorKind::parse, "unrecognized label '" + text + "'");
}

// ---------------------------------------------------------------------------
// Fusion vectors

/// Finitely supported integer combination of irreducible labels; zero terms are never stored.
class FusionVector {
 public:
  using Terms = std::map<IrrepLabel, BigInt>;

  FusionVector() = default;
  explicit FusionVector(const IrrepLabel& label, BigInt mult = 1) { add(label, mult); }

  void add(const IrrepLabel& label, const BigInt& mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.emplace(label, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const FusionVector& other, const BigInt& scale = 1) {
    for (const auto& [label, m] : other.terms_) add(label, m * scale);
  }

  BigInt coefficient(const IrrepLabel& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  bool contains(const IrrepLabel& label) const { return terms_.contains(label); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  std::vector<IrrepLabel> support() const {
    std::vector<IrrepLabel> out;
    out.reserve(terms_.size());
    for (const auto& [label, m] : terms_) out.push_back(label);
    return out;
  }

  BigInt total() const {
    BigInt t = 0;
    for (const auto& [label, m] : terms_) t += m;
    return t;
  }

  friend FusionVector operator+(FusionVector a, const FusionVector& b) {
    a.add(b);
    return a;
  }
  friend FusionVector operator-(FusionVector a, const FusionVector& b) {
    a.add(b, -1);
    return a;
  }
  friend bool operator==(const FusionVector&, const FusionVector&) = default;

 private:
  Terms terms_;
};

inline std::string to_string(const FusionVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [label, m] : v.terms()) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += m.str() + "*";
    out += to_string(label);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rules

/// u_k ⊗ u_l = u_{|k-l|} + u_{|k-l|+2} + ... + u_{k+l}.
inline FusionVector su2_decompose(int k, int l) {
  if (k < 0 || l < 0) throw Error(ErrorKind::invalid_argument, "negative spin label");
  FusionVector out;
  for (int j = std::abs(k - l); j <= k + l; j += 2) out.add(SpinLabel{j}, 1);
  return out;
}

inline FusionVector so3_decompose(int k, int l) {
  if (k % 2 != 0 || l % 2 != 0) throw Error(ErrorKind::odd_label, "SO(3)-type labels must be even");
  return su2_decompose(k, l);
}

/// r_x ⊗ r_y = Σ_{x = vz, y = z̄w} r_{vw} + r_{v·w}.
inline FusionVector h_decompose(const Word& x, const Word& y) {
  if (x.modulus != y.modulus) throw Error(ErrorKind::modulus_mismatch, "words over different moduli");
  const int s = x.modulus;
  const int p = x.length();
  const int q = y.length();
  FusionVector out;
  for (int t = 0; t <= std::min(p, q); ++t) {
    // z is the suffix of x of length t; y must start with z̄.
    if (t > 0 && y.letters[t - 1] != reduce_letter(-x.letters[p - t], s)) break;
    Word vw{std::vector<int>(x.letters.begin(), x.letters.end() - t), s};
    const Word v = vw;
    const Word w{std::vector<int>(y.letters.begin() + t, y.letters.end()), s};
    vw.letters.insert(vw.letters.end(), w.letters.begin(), w.letters.end());
    out.add(vw, 1);
    if (auto fused = word_fusion(v, w)) out.add(*fused, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rings

class FusionRing {
 public:
  virtual ~FusionRing() = default;

  virtual std::string name() const = 0;
  virtual IrrepLabel trivial() const = 0;
  virtual FusionVector fundamental() const = 0;
  /// Throws when the label does not belong to this ring.
  virtual void validate(const IrrepLabel& label) const = 0;
  virtual FusionVector decompose_irreps(const IrrepLabel& a, const IrrepLabel& b) const = 0;
  /// The contragredient label, if it exists in the ring.
  virtual std::optional<IrrepLabel> dual(const IrrepLabel& label) const = 0;
  /// A Z-valued grading additive under ⊗ with trivial in degree 0, when the ring has one.
  virtual std::optional<int> grading(const IrrepLabel&) const { return std::nullopt; }
  /// Smallest n for which dim is meaningful.
  virtual int min_n() const { return 2; }
  /// dim of an irreducible at size n.
  virtual BigInt dim(const IrrepLabel& label, int n) const = 0;
  /// Labels trivial = l_0, l_1, ..., l_d = label with l_{i+1} ≤ l_i ⊗ fundamental, when known.
  virtual std::optional<std::vector<IrrepLabel>> ascent_path(const IrrepLabel&) const { return std::nullopt; }
  /// Modulus s of the word rings, else 0.
  virtual int modulus() const { return 0; }

  FusionVector decompose(const IrrepLabel& a, const IrrepLabel& b) const {
    validate(a);
    validate(b);
    return decompose_irreps(a, b);
  }

  FusionVector multiply(const FusionVector& a, const FusionVector& b) const {
    FusionVector out;
    for (const auto& [la, ma] : a.terms()) {
      for (const auto& [lb, mb] : b.terms()) out.add(decompose(la, lb), ma * mb);
    }
    return out;
  }

  /// fundamental^{⊗ℓ}, memoized; references stay valid for the lifetime of the ring.
  const FusionVector& power(int level) const {
    if (level < 0) throw Error(ErrorKind::invalid_argument, "negative tensor power");
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (powers_.empty()) powers_.emplace_back(trivial());
    while (static_cast<int>(powers_.size()) <= level) powers_.push_back(multiply(powers_.back(), fundamental()));
    return powers_[level];
  }

 private:
  mutable std::mutex memo_mutex_;
  mutable std::deque<FusionVector> powers_;
};

/// Clebsch-Gordan rules of SU(2); the fusion ring of O_n^+.
class OrthogonalFusion final : public FusionRing {
 public:
  std::string name() const override { return "O+"; }
  IrrepLabel trivial() const override { return SpinLabel{0}; }
  FusionVector fundamental() const override { return FusionVector(SpinLabel{1}); }
  void validate(const IrrepLabel& label) const override {
    const auto* u = std::get_if<SpinLabel>(&label);
    if (!u) throw Error(ErrorKind::wrong_family, to_string(label) + " is not a label of " + name());
    if (u->k < 0) throw Error(ErrorKind::invalid_argument, "negative spin label");
  }
  FusionVector decompose_irreps(const IrrepLabel& a, const IrrepLabel& b) const override {
    return su2_decompose(std::get<SpinLabel>(a).k, std::get<SpinLabel>(b).k);
  }
  std::optional<IrrepLabel> dual(const IrrepLabel& label) const override { return label; }
  std::optional<std::vector<IrrepLabel>> ascent_path(const IrrepLabel& label) const override {
    validate(label);
    std::vector<IrrepLabel> path;
    for (int j = 0; j <= std::get<SpinLabel>(label).k; ++j) path.push_back(SpinLabel{j});
    return path;
  }
  BigInt dim(const IrrepLabel& label, int n) const override {
    validate(label);
    if (n < min_n()) throw Error(ErrorKind::invalid_argument, "n too small for " + name());
    // u_1 ⊗ u_k = u_{k-1} + u_{k+1}
    BigInt prev = 1;
    BigInt cur = n;
    const int k = std::get<SpinLabel>(label).k;
    if (k == 0) return 1;
    for (int j = 1; j < k; ++j) {
      BigInt next = cur * n - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    if (cur <= 0) throw Error(ErrorKind::inconsistent_dimension, "non-positive dimension for " + to_string(label));
    return cur;
  }
};

/// SU(2) rules restricted to even labels; the fusion ring of S_n^+ with u = u_0 + u_2.
class PermutationFusion final : public FusionRing {
 public:
  std::string name() const override { return "S+"; }
  IrrepLabel trivial() const override { return SpinLabel{0}; }
  FusionVector fundamental() const override { return FusionVector(SpinLabel{0}) + FusionVector(SpinLabel{2}); }
  void validate(const IrrepLabel& label) const override {
    const auto* u = std::get_if<SpinLabel>(&label);
    if (!u) throw Error(ErrorKind::wrong_family, to_string(label) + " is not a label of " + name());
    if (u->k < 0) throw Error(ErrorKind::invalid_argument, "negative spin label");
    if (u->k % 2 != 0) throw Error(ErrorKind::odd_label, to_string(label) + " is odd");
  }
  FusionVector decompose_irreps(const IrrepLabel& a, const IrrepLabel& b) const override {
    return so3_decompose(std::get<SpinLabel>(a).k, std::get<SpinLabel>(b).k);
  }
  std::optional<IrrepLabel> dual(const IrrepLabel& label) const override { return label; }
  std::optional<std::vector<IrrepLabel>> ascent_path(const IrrepLabel& label) const override {
    validate(label);
    std::vector<IrrepLabel> path;
    for (int j = 0; j <= std::get<SpinLabel>(label).k; j += 2) path.push_back(SpinLabel{j});
    return path;
  }
  int min_n() const override { return 4; }
  BigInt dim(const IrrepLabel& label, int n) const override {
    validate(label);
    if (n < min_n()) throw Error(ErrorKind::invalid_argument, "n too small for " + name());
    // u_2 ⊗ u_{2j} = u_{2j-2} + u_{2j} + u_{2j+2}
    const int k = std::get<SpinLabel>(label).k / 2;
    if (k == 0) return 1;
    BigInt prev = 1;
    BigInt cur = n - 1;
    for (int j = 1; j < k; ++j) {
      BigInt next = (n - 2) * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    if (cur <= 0) throw Error(ErrorKind::inconsistent_dimension, "non-positive dimension for " + to_string(label));
    return cur;
  }
};

/// Word-monoid rules of the quantum reflection group H_n^{s+}; fundamental r_1.
class ReflectionFusion final : public FusionRing {
 public:
  explicit ReflectionFusion(int s) : s_(s) {
    if (s < 1) throw Error(ErrorKind::invalid_argument, "s must be at least 1");
  }

  std::string name() const override { return "H+(s=" + std::to_string(s_) + ")"; }
  IrrepLabel trivial() const override { return Word{{}, s_}; }
  FusionVector fundamental() const override { return FusionVector(Word{{1}, s_}); }
  void validate(const IrrepLabel& label) const override {
    const auto* w = std::get_if<Word>(&label);
    if (!w) throw Error(ErrorKind::wrong_family, to_string(label) + " is not a label of " + name());
    if (w->modulus != s_) {
      throw Error(ErrorKind::modulus_mismatch, to_string(label) + " is not a word over Z/" + std::to_string(s_));
    }
    for (int a : w->letters) {
      if (a < 1 || a > s_) throw Error(ErrorKind::invalid_argument, "letter out of range in " + to_string(label));
    }
  }
  FusionVector decompose_irreps(const IrrepLabel& a, const IrrepLabel& b) const override {
    return h_decompose(std::get<Word>(a), std::get<Word>(b));
  }
  std::optional<IrrepLabel> dual(const IrrepLabel& label) const override {
    return word_involution(std::get<Word>(label));
  }
  /// Appends each letter as 1 and raises it through r_x ⊗ r_1 ∋ r_{x·1}.
  std::optional<std::vector<IrrepLabel>> ascent_path(const IrrepLabel& label) const override {
    validate(label);
    std::vector<IrrepLabel> path{Word{{}, s_}};
    Word current{{}, s_};
    for (int a : std::get<Word>(label).letters) {
      current.letters.push_back(1);
      path.push_back(current);
      for (int step = 1; step < a; ++step) {
        ++current.letters.back();
        path.push_back(current);
      }
    }
    return path;
  }
  int modulus() const override { return s_; }

  /// Single letters a < s have dimension n, the letter s has n - 1; longer words
  /// follow from r_{x'} ⊗ r_a = r_{x'a} + r_{x'·a} (+ r_v when the last letter of x' cancels a).
  BigInt dim(const IrrepLabel& label, int n) const override {
    validate(label);
    if (n < min_n()) throw Error(ErrorKind::invalid_argument, "n too small for " + name());
    std::lock_guard<std::mutex> lock(dim_mutex_);
    if (dim_n_ != n) {
      dim_cache_.clear();
      dim_n_ = n;
    }
    return word_dim(std::get<Word>(label), n);
  }

 private:
  BigInt word_dim(const Word& w, int n) const {
    if (w.empty()) return 1;
    if (w.length() == 1) return w.letters[0] == s_ ? BigInt(n - 1) : BigInt(n);
    auto it = dim_cache_.find(w.letters);
    if (it != dim_cache_.end()) return it->second;
    const Word prefix{std::vector<int>(w.letters.begin(), w.letters.end() - 1), s_};
    const int a = w.letters.back();
    BigInt d = word_dim(prefix, n) * word_dim(Word{{a}, s_}, n);
    d -= word_dim(*word_fusion(prefix, Word{{a}, s_}), n);
    if (reduce_letter(prefix.letters.back() + a, s_) == s_) {
      d -= word_dim(Word{std::vector<int>(prefix.letters.begin(), prefix.letters.end() - 1), s_}, n);
    }
    if (d <= 0) throw Error(ErrorKind::inconsistent_dimension, "non-positive dimension for " + to_string(IrrepLabel(w)));
    dim_cache_.emplace(w.letters, d);
    return d;
  }

  int s_;
  mutable std::mutex dim_mutex_;
  mutable int dim_n_ = -1;
  mutable std::map<std::vector<int>, BigInt> dim_cache_;
};

/// Tensor powers of the fundamental representation of U_n^+. Every u^{⊗k} is
/// irreducible (α^k, no cancellation occurs), so a_j ⊗ a_k = a_{j+k}.
class FreeUnitaryFusion final : public FusionRing {
 public:
  std::string name() const override { return "U+"; }
  IrrepLabel trivial() const override { return FreeLabel{0}; }
  FusionVector fundamental() const override { return FusionVector(FreeLabel{1}); }
  void validate(const IrrepLabel& label) const override {
    const auto* f = std::get_if<FreeLabel>(&label);
    if (!f) throw Error(ErrorKind::wrong_family, to_string(label) + " is not a label of " + name());
    if (f->k < 0) throw Error(ErrorKind::invalid_argument, "negative power");
  }
  FusionVector decompose_irreps(const IrrepLabel& a, const IrrepLabel& b) const override {
    return FusionVector(FreeLabel{std::get<FreeLabel>(a).k + std::get<FreeLabel>(b).k});
  }
  /// The contragredient ᾱ^k is not a summand of any tensor power of u.
  std::optional<IrrepLabel> dual(const IrrepLabel& label) const override {
    if (std::get<FreeLabel>(label).k == 0) return label;
    return std::nullopt;
  }
  std::optional<int> grading(const IrrepLabel& label) const override { return std::get<FreeLabel>(label).k; }
  std::optional<std::vector<IrrepLabel>> ascent_path(const IrrepLabel& label) const override {
    validate(label);
    std::vector<IrrepLabel> path;
    for (int j = 0; j <= std::get<FreeLabel>(label).k; ++j) path.push_back(FreeLabel{j});
    return path;
  }
  BigInt dim(const IrrepLabel& label, int n) const override {
    validate(label);
    if (n < min_n()) throw Error(ErrorKind::invalid_argument, "n too small for " + name());
    return ipow(n, static_cast<unsigned>(std::get<FreeLabel>(label).k));
  }
};

inline std::shared_ptr<const FusionRing> make_fusion_ring(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::orthogonal: return std::make_shared<OrthogonalFusion>();
    case Family::permutation: return std::make_shared<PermutationFusion>();
    case Family::reflection: return std::make_shared<ReflectionFusion>(spec.s);
    case Family::unitary: return std::make_shared<FreeUnitaryFusion>();
  }
  throw Error(ErrorKind::invalid_argument, "unknown family");
}

// ---------------------------------------------------------------------------
// Derived quantities

/// generator^{⊗ℓ} for an arbitrary element of the ring.
inline FusionVector power_decompose(const FusionRing& ring, const FusionVector& generator, int level) {
  if (level < 0) throw Error(ErrorKind::invalid_argument, "negative tensor power");
  FusionVector out(ring.trivial());
  for (int i = 0; i < level; ++i) out = ring.multiply(out, generator);
  return out;
}

/// Smallest ℓ with label ≤ fundamental^{⊗ℓ}, searched up to level_cap.
inline int degree(const FusionRing& ring, const IrrepLabel& label, int level_cap) {
  ring.validate(label);
  for (int level = 0; level <= level_cap; ++level) {
    if (ring.power(level).contains(label)) return level;
  }
  throw Error(ErrorKind::not_reachable,
              to_string(label) + " does not occur in tensor powers up to " + std::to_string(level_cap));
}

/// Checks an ascent path step by step; on success the label occurs in
/// fundamental^{⊗d} with d the returned path length.
inline std::optional<int> verified_ascent(const FusionRing& ring, const IrrepLabel& label) {
  const auto path = ring.ascent_path(label);
  if (!path || path->empty() || path->front() != ring.trivial() || path->back() != label) return std::nullopt;
  const FusionVector u = ring.fundamental();
  for (std::size_t i = 0; i + 1 < path->size(); ++i) {
    if (!ring.multiply(FusionVector((*path)[i]), u).contains((*path)[i + 1])) return std::nullopt;
  }
  return static_cast<int>(path->size()) - 1;
}

/// Number of letters of a word label.
inline int length(const IrrepLabel& label) {
  const auto* w = std::get_if<Word>(&label);
  if (!w) throw Error(ErrorKind::wrong_family, "length is defined for word labels only");
  return w->length();
}

struct ChainGroupResult {
  int order = 0;           // 0: no level ≤ cap falls into the class of level 0
  int level_cap = 0;
  std::vector<int> level_class;  // class index of each level 0..cap
  int label_count = 0;
};

/// Irreducibles up to level_cap, identified when they occur in a common tensor
/// power of the fundamental; the class of level ℓ generates a cyclic quotient.
inline ChainGroupResult chain_group(const FusionRing& ring, int level_cap) {
  if (level_cap < 1) throw Error(ErrorKind::invalid_argument, "level cap must be positive");
  std::map<IrrepLabel, int> index;
  std::vector<int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto id_of = [&](const IrrepLabel& label) {
    auto [it, inserted] = index.emplace(label, static_cast<int>(parent.size()));
    if (inserted) parent.push_back(it->second);
    return it->second;
  };
  std::vector<int> representative;
  for (int level = 0; level <= level_cap; ++level) {
    const auto support = ring.power(level).support();
    const int first = id_of(support.front());
    representative.push_back(first);
    for (const auto& label : support) {
      const int a = find(first);
      const int b = find(id_of(label));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  ChainGroupResult out;
  out.level_cap = level_cap;
  out.label_count = static_cast<int>(parent.size());
  std::map<int, int> class_number;
  for (int level = 0; level <= level_cap; ++level) {
    const int root = find(representative[level]);
    auto [it, inserted] = class_number.emplace(root, static_cast<int>(class_number.size()));
    out.level_class.push_back(it->second);
  }
  for (int level = 1; level <= level_cap; ++level) {
    if (out.level_class[level] == out.level_class[0]) {
      out.order = level;
      break;
    }
  }
  return out;
}

/// Irreducibles occurring in fundamental^{⊗ℓ} for some ℓ ≤ level_cap, each with its degree,
/// ordered by degree and then label.
inline std::vector<std::pair<IrrepLabel, int>> irreducibles_up_to(const FusionRing& ring, int level_cap) {
  std::map<IrrepLabel, int> seen;
  for (int level = 0; level <= level_cap; ++level) {
    for (const auto& [label, m] : ring.power(level).terms()) seen.emplace(label, level);
  }
  std::vector<std::pair<IrrepLabel, int>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

}  // namespace eqg
