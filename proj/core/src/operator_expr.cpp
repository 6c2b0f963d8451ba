#include "losq/operator_expr.hpp"

#include <algorithm>
#include <utility>

#include "losq/error.hpp"
#include "losq/report_json.hpp"

namespace losq {

std::string_view symbol(Letter l) noexcept {
  switch (l) {
    case Letter::a: return "a";
    case Letter::ad: return "ad";
    case Letter::b: return "b";
    case Letter::bd: return "bd";
  }
  return "?";
}

ModeSet::ModeSet(std::initializer_list<Mode> modes) {
  for (Mode m : modes) bits_ |= 1u << static_cast<unsigned>(m);
}

bool normal_powers(const Word& w, NormalPowers& out) noexcept {
  // Expected letter sequence: ad* a* bd* b*.
  NormalPowers p;
  int stage = 0;
  for (Letter l : w) {
    const int s = static_cast<int>(l == Letter::ad ? 0 : l == Letter::a ? 1 : l == Letter::bd ? 2 : 3);
    if (s < stage) return false;
    stage = s;
    switch (l) {
      case Letter::ad: ++p.ad; break;
      case Letter::a: ++p.a; break;
      case Letter::bd: ++p.bd; break;
      case Letter::b: ++p.b; break;
    }
  }
  out = p;
  return true;
}

namespace {

void check_degree(const Word& w) {
  if (w.size() > kMaxDegree) {
    throw DegreeError("operator word of degree " + std::to_string(w.size()) +
                      " exceeds the cap of " + std::to_string(kMaxDegree));
  }
}

}  // namespace

OperatorExpr OperatorExpr::scalar(cplx c) { return word({}, c); }

OperatorExpr OperatorExpr::letter(Letter l) { return word({l}, 1.0); }

OperatorExpr OperatorExpr::word(const Word& w, cplx c) {
  OperatorExpr e;
  e.add_term(w, c);
  return e;
}

std::size_t OperatorExpr::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

bool OperatorExpr::is_scalar(cplx& value) const {
  if (terms_.empty()) {
    value = 0.0;
    return true;
  }
  if (terms_.size() == 1 && terms_.begin()->first.empty()) {
    value = terms_.begin()->second;
    return true;
  }
  return false;
}

cplx OperatorExpr::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

void OperatorExpr::add_term(const Word& w, cplx c) {
  check_degree(w);
  if (c == cplx(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx(0.0)) terms_.erase(it);
  }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(cplx c) {
  if (c == cplx(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second == cplx(0.0) ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

OperatorExpr operator*(const OperatorExpr& lhs, const OperatorExpr& rhs) {
  OperatorExpr out;
  for (const auto& [wl, cl] : lhs.terms_) {
    for (const auto& [wr, cr] : rhs.terms_) {
      Word w = wl;
      w.insert(w.end(), wr.begin(), wr.end());
      out.add_term(w, cl * cr);
    }
  }
  return out;
}

std::string to_string(const OperatorExpr& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    if (!first) out += " + ";
    first = false;
    out += '(' + format_double(c.real()) + ',' + format_double(c.imag()) + ')';
    for (Letter l : w) {
      out += '*';
      out += symbol(l);
    }
  }
  return out;
}

OperatorExpr adjoint(const OperatorExpr& f) {
  OperatorExpr out;
  for (const auto& [w, c] : f.terms()) {
    Word rev(w.rbegin(), w.rend());
    std::transform(rev.begin(), rev.end(), rev.begin(), dagger);
    out.add_term(rev, std::conj(c));
  }
  return out;
}

OperatorExpr adjoint_product(const OperatorExpr& f) { return adjoint(f) * f; }

namespace {

// Single-mode words as creator flags; result maps (creators, annihilators) to
// the coefficient of a†^m a^n.
using ModeWord = std::vector<bool>;
using ModePolynomial = std::map<std::pair<int, int>, double>;

ModePolynomial normal_order_mode(const ModeWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!w[i] && w[i + 1]) {
      // a a† = a† a + 1
      ModeWord swapped = w;
      swapped[i] = true;
      swapped[i + 1] = false;
      ModeWord contracted;
      contracted.reserve(w.size() - 2);
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (k != i && k != i + 1) contracted.push_back(w[k]);
      }
      ModePolynomial out = normal_order_mode(swapped);
      for (const auto& [powers, c] : normal_order_mode(contracted)) out[powers] += c;
      return out;
    }
  }
  const int creators = static_cast<int>(std::count(w.begin(), w.end(), true));
  return {{{creators, static_cast<int>(w.size()) - creators}, 1.0}};
}

ModePolynomial formal_order_mode(const ModeWord& w) {
  const int creators = static_cast<int>(std::count(w.begin(), w.end(), true));
  return {{{creators, static_cast<int>(w.size()) - creators}, 1.0}};
}

Word assemble(std::pair<int, int> a_powers, std::pair<int, int> b_powers) {
  Word w;
  w.insert(w.end(), a_powers.first, Letter::ad);
  w.insert(w.end(), a_powers.second, Letter::a);
  w.insert(w.end(), b_powers.first, Letter::bd);
  w.insert(w.end(), b_powers.second, Letter::b);
  return w;
}

template <typename PerMode>
OperatorExpr order_terms(const OperatorExpr& e, PerMode&& order_mode) {
  OperatorExpr out;
  for (const auto& [w, c] : e.terms()) {
    ModeWord mode_a;
    ModeWord mode_b;
    for (Letter l : w) {
      (mode_of(l) == Mode::A ? mode_a : mode_b).push_back(is_creation(l));
    }
    const ModePolynomial pa = order_mode(Mode::A, mode_a);
    const ModePolynomial pb = order_mode(Mode::B, mode_b);
    for (const auto& [powers_a, ca] : pa) {
      for (const auto& [powers_b, cb] : pb) {
        out.add_term(assemble(powers_a, powers_b), c * (ca * cb));
      }
    }
  }
  return out;
}

}  // namespace

OperatorExpr reorder(const OperatorExpr& e) {
  return order_terms(e, [](Mode, const ModeWord& w) { return normal_order_mode(w); });
}

OperatorExpr formal_normal_order(const OperatorExpr& e, ModeSet modes) {
  if (modes.empty()) {
    throw InvalidArgument("formal normal ordering needs at least one mode");
  }
  return order_terms(e, [&](Mode m, const ModeWord& w) {
    return modes.contains(m) ? formal_order_mode(w) : normal_order_mode(w);
  });
}

OperatorExpr homodyne_observable(double theta) {
  const cplx phase = std::polar(1.0, theta);
  OperatorExpr l = OperatorExpr::word({Letter::ad, Letter::b}, phase);
  l += OperatorExpr::word({Letter::a, Letter::bd}, std::conj(phase));
  return l;
}

}  // namespace losq
