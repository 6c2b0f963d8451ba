#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace losq {

using cplx = std::complex<double>;

/// Ladder alphabet of the two modes: a, a†, b, b†.
enum class Letter : std::uint8_t { a, ad, b, bd };

enum class Mode : std::uint8_t { A, B };

constexpr Mode mode_of(Letter l) noexcept {
  return (l == Letter::a || l == Letter::ad) ? Mode::A : Mode::B;
}
constexpr bool is_creation(Letter l) noexcept { return l == Letter::ad || l == Letter::bd; }
constexpr Letter dagger(Letter l) noexcept {
  switch (l) {
    case Letter::a: return Letter::ad;
    case Letter::ad: return Letter::a;
    case Letter::b: return Letter::bd;
    case Letter::bd: return Letter::b;
  }
  return l;
}
std::string_view symbol(Letter l) noexcept;

using Word = std::vector<Letter>;

/// Longest word an expression may contain.
inline constexpr std::size_t kMaxDegree = 8;

class ModeSet {
 public:
  ModeSet() = default;
  ModeSet(std::initializer_list<Mode> modes);

  static ModeSet all() { return {Mode::A, Mode::B}; }

  bool contains(Mode m) const noexcept { return (bits_ >> static_cast<unsigned>(m)) & 1u; }
  bool empty() const noexcept { return bits_ == 0; }

 private:
  unsigned bits_ = 0;
};

/// Exponents of a word in the form a†^m a^n b†^p b^q.
struct NormalPowers {
  int ad = 0;
  int a = 0;
  int bd = 0;
  int b = 0;
};

/// Exponents of `w` if it already has the form a†^m a^n b†^p b^q.
bool normal_powers(const Word& w, NormalPowers& out) noexcept;

/// Finite sum of complex-weighted words over {a, a†, b, b†}.
///
/// Terms live in a map keyed by word, so the representation is canonical:
/// words sorted lexicographically, like terms merged, exact zeros dropped.
/// Letters inside a word keep their operator order.
class OperatorExpr {
 public:
  using Terms = std::map<Word, cplx>;

  OperatorExpr() = default;

  static OperatorExpr scalar(cplx c);
  static OperatorExpr letter(Letter l);
  static OperatorExpr word(const Word& w, cplx c = 1.0);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t degree() const noexcept;

  /// True if the expression is c·1 (or empty); writes c.
  bool is_scalar(cplx& value) const;

  cplx coefficient(const Word& w) const;
  void add_term(const Word& w, cplx c);

  OperatorExpr& operator+=(const OperatorExpr& rhs);
  OperatorExpr& operator-=(const OperatorExpr& rhs);
  OperatorExpr& operator*=(cplx c);

  friend OperatorExpr operator+(OperatorExpr lhs, const OperatorExpr& rhs) { return lhs += rhs; }
  friend OperatorExpr operator-(OperatorExpr lhs, const OperatorExpr& rhs) { return lhs -= rhs; }
  friend OperatorExpr operator-(OperatorExpr e) { return e *= -1.0; }
  friend OperatorExpr operator*(OperatorExpr e, cplx c) { return e *= c; }
  friend OperatorExpr operator*(cplx c, OperatorExpr e) { return e *= c; }
  /// Operator product; words are concatenated, not reordered.
  friend OperatorExpr operator*(const OperatorExpr& lhs, const OperatorExpr& rhs);

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

 private:
  Terms terms_;
};

/// Canonical text: "(re,im)*ad*a + (re,im)"; the empty expression prints "0".
std::string to_string(const OperatorExpr& e);

/// f†: words reversed, letters daggered, coefficients conjugated.
OperatorExpr adjoint(const OperatorExpr& f);

/// f† f, expanded.
OperatorExpr adjoint_product(const OperatorExpr& f);

/// Operator-preserving rewrite into a†^m a^n b†^p b^q words using
/// [a, a†] = [b, b†] = 1 and commutation of the two modes.
OperatorExpr reorder(const OperatorExpr& e);

/// Formal normal ordering with respect to `modes`: creators of a selected mode
/// are moved left of its annihilators with commutator terms dropped; the
/// remaining mode is reordered operator-preservingly. Idempotent.
OperatorExpr formal_normal_order(const OperatorExpr& e, ModeSet modes);

/// L = e^{iθ} a†b + e^{−iθ} a b†, the balanced-homodyne difference count.
OperatorExpr homodyne_observable(double theta);

}  // namespace losq
