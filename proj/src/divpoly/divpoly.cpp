#include "divpoly/divpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace edsp {

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> r(c_);
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::divexact_scalar(const Int& d) const {
  std::vector<Int> r(c_);
  for (auto& v : r) {
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
      throw DivisionNotExact("IntPoly scalar division not exact");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(r));
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

Int IntPoly::eval(const Int& x) const {
  Int acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    Int a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

bool HomogPoly::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (deg_ != o.deg_) throw std::invalid_argument("HomogPoly degree mismatch in +");
  std::vector<Int> r(c_);
  for (size_t i = 0; i <= static_cast<size_t>(deg_); ++i) r[i] += o.c_[i];
  return HomogPoly(deg_, std::move(r));
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    std::vector<Int> r(o.c_);
    for (auto& v : r) v = -v;
    return HomogPoly(o.deg_, std::move(r));
  }
  if (deg_ != o.deg_) throw std::invalid_argument("HomogPoly degree mismatch in -");
  std::vector<Int> r(c_);
  for (size_t i = 0; i <= static_cast<size_t>(deg_); ++i) r[i] -= o.c_[i];
  return HomogPoly(deg_, std::move(r));
}

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
  std::vector<Int> r(deg_ + o.deg_ + 1, Int(0));
  for (int i = 0; i <= deg_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j <= o.deg_; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return HomogPoly(deg_ + o.deg_, std::move(r));
}

HomogPoly HomogPoly::divexact_scalar(const Int& d) const {
  std::vector<Int> r(c_);
  for (auto& v : r) {
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
      throw DivisionNotExact("HomogPoly scalar division not exact");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  }
  return HomogPoly(deg_, std::move(r));
}

Int HomogPoly::eval(const Int& X, const Int& Y) const {
  // sum c_i X^i Y^(d-i): Horner in X, folding one extra power of Y per step
  Int acc = c_[deg_];
  Int ypow(1);
  for (int i = deg_ - 1; i >= 0; --i) {
    ypow *= Y;
    acc = acc * X + c_[i] * ypow;
  }
  return acc;
}

IntPoly HomogPoly::substitute(const Int& a) const {
  std::vector<Int> r(2 * deg_ + 1, Int(0));
  Int ya(1);
  for (int i = deg_; i >= 0; --i) {
    r[2 * i] += c_[i] * ya;
    ya *= a;
  }
  return IntPoly(std::move(r));
}

std::string HomogPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = deg_; i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    Int a = abs(c);
    bool named = false;
    if (a != 1 || deg_ == 0) { os << a.get_str(); named = true; }
    if (i > 0) { if (named) os << "*"; os << "X"; if (i > 1) os << "^" << i; named = true; }
    if (deg_ - i > 0) { if (named) os << "*"; os << "Y"; if (deg_ - i > 1) os << "^" << (deg_ - i); named = true; }
    if (!named) os << "1";
    first = false;
  }
  if (first) return "0";
  return os.str();
}

// graded recurrence working set ---------------------------------------------

int graded_degree(unsigned n) {
  if (n == 0) return 0;
  return n % 2 ? static_cast<int>((n * n - 1) / 4) : static_cast<int>((n * n - 4) / 4);
}

namespace {

// W2 = (x^3 + ax)^2 viewed in the grading: X (X + Y)^2, degree 3.
const HomogPoly& w2_graded() {
  static const HomogPoly w{3, {Int(0), Int(1), Int(2), Int(1)}};  // Y^2 X? -> c_i X^i Y^(3-i): X Y^2 + 2 X^2 Y + X^3
  return w;
}

HomogPoly graded_base(unsigned n) {
  switch (n) {
    case 0: return HomogPoly::constant(Int(0));
    case 1: return HomogPoly::constant(Int(1));
    case 2: return HomogPoly::constant(Int(2));
    case 3: return HomogPoly(2, {Int(-1), Int(6), Int(3)});                 // 3X^2 + 6XY - Y^2
    case 4: return HomogPoly(3, {Int(-4), Int(-20), Int(20), Int(4)});      // 4(X^3 + 5X^2 Y - 5X Y^2 - Y^3)
    default: throw std::logic_error("graded_base: n > 4");
  }
}

std::mutex g_graded_mutex;
std::vector<HomogPoly> g_graded_cache;  // index n

}  // namespace

HomogPoly graded_p(unsigned n) {
  std::lock_guard<std::mutex> lock(g_graded_mutex);
  if (g_graded_cache.empty())
    for (unsigned k = 0; k <= 4; ++k) g_graded_cache.push_back(graded_base(k));
  if (n < g_graded_cache.size()) return g_graded_cache[n];
  for (unsigned k = static_cast<unsigned>(g_graded_cache.size()); k <= n; ++k) {
    unsigned m = k / 2;
    const auto& P = g_graded_cache;
    HomogPoly next;
    if (k % 2 == 1) {
      if (m % 2 == 0)
        next = w2_graded() * P[m + 2] * P[m] * P[m] * P[m] - P[m - 1] * P[m + 1] * P[m + 1] * P[m + 1];
      else
        next = P[m + 2] * P[m] * P[m] * P[m] - w2_graded() * P[m - 1] * P[m + 1] * P[m + 1] * P[m + 1];
    } else {
      next = (P[m] * (P[m + 2] * P[m - 1] * P[m - 1] - P[m - 2] * P[m + 1] * P[m + 1]))
                 .divexact_scalar(Int(2));
    }
    if (next.degree() != graded_degree(k))
      throw std::logic_error("graded_p: degree mismatch in recurrence");
    g_graded_cache.push_back(std::move(next));
  }
  return g_graded_cache[n];
}

IntPoly psi(unsigned n, const Int& a) {
  if (n == 0) throw InvalidIndex("psi: n must be >= 1");
  return graded_p(n).substitute(a);
}

IntPoly psi_sq(unsigned n, const Int& a) {
  IntPoly p = psi(n, a);
  IntPoly sq = p * p;
  if (n % 2 == 0) {
    IntPoly w({Int(0), a, Int(0), Int(1)});  // x^3 + a x
    sq = sq * w;
  }
  return sq;
}

IntPoly phi(unsigned n, const Int& a) {
  if (n == 0) throw InvalidIndex("phi: n must be >= 1");
  IntPoly x({Int(0), Int(1)});
  IntPoly w({Int(0), a, Int(0), Int(1)});
  IntPoly pn = psi(n, a);
  IntPoly pn1 = graded_p(n + 1).substitute(a);
  IntPoly pn_1 = graded_p(n - 1).substitute(a);
  if (n % 2 == 1) return x * pn * pn - w * pn1 * pn_1;
  return x * w * pn * pn - pn1 * pn_1;
}

std::vector<HomogEval> homog_eval_range(unsigned n, const Int& a, const Int& u, const Int& v) {
  if (v < 1 || gcd(u, v) != 1) throw NotCoprime();
  // hp_k = graded_p(k) evaluated at (X, Y) = (u^2, a v^2), by the same recurrence
  Int X = u * u;
  Int Y = a * v * v;
  Int W2 = X * (X + Y) * (X + Y);
  size_t top = std::max<size_t>(n + 2, 5);
  std::vector<Int> hp(top + 1);
  hp[0] = 0;
  hp[1] = 1;
  hp[2] = 2;
  hp[3] = 3 * X * X + 6 * X * Y - Y * Y;
  hp[4] = 4 * (X * X * X + 5 * X * X * Y - 5 * X * Y * Y - Y * Y * Y);
  for (size_t k = 5; k <= top; ++k) {
    size_t m = k / 2;
    Int val;
    if (k % 2 == 1) {
      if (m % 2 == 0)
        val = W2 * hp[m + 2] * hp[m] * hp[m] * hp[m] - hp[m - 1] * hp[m + 1] * hp[m + 1] * hp[m + 1];
      else
        val = hp[m + 2] * hp[m] * hp[m] * hp[m] - W2 * hp[m - 1] * hp[m + 1] * hp[m + 1] * hp[m + 1];
    } else {
      val = hp[m] * (hp[m + 2] * hp[m - 1] * hp[m - 1] - hp[m - 2] * hp[m + 1] * hp[m + 1]);
      if (!mpz_divisible_ui_p(val.get_mpz_t(), 2))
        throw DivisionNotExact("homog_eval_range: even-index recurrence not divisible by 2");
      mpz_divexact_ui(val.get_mpz_t(), val.get_mpz_t(), 2);
    }
    hp[k] = std::move(val);
  }
  Int w = u * u * u + a * u * v * v;  // v^3 * (x^3 + a x)|_{x=u/v}
  std::vector<HomogEval> out(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    HomogEval e;
    e.hp = hp[k];
    if (k % 2 == 1) {
      e.psi_sq = hp[k] * hp[k];
      e.phi = u * e.psi_sq - w * hp[k + 1] * hp[k - 1];
    } else {
      e.psi_sq = w * hp[k] * hp[k];
      e.phi = X * (X + Y) * hp[k] * hp[k] - hp[k + 1] * hp[k - 1];
    }
    out[k] = std::move(e);
  }
  return out;
}

Int homog_eval_psi_sq(unsigned n, const Int& a, const Int& u, const Int& v) {
  if (n == 0) throw InvalidIndex("homog_eval_psi_sq: n must be >= 1");
  return homog_eval_range(n, a, u, v)[n].psi_sq;
}

Int homog_eval_phi(unsigned n, const Int& a, const Int& u, const Int& v) {
  if (n == 0) throw InvalidIndex("homog_eval_phi: n must be >= 1");
  return homog_eval_range(n, a, u, v)[n].phi;
}

}  // namespace edsp
