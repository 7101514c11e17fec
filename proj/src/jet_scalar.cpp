#include "g2eds/jet_scalar.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace g2eds {

namespace {

using Expo = std::array<std::uint8_t, 7>;

struct MonoTables {
  std::vector<Expo> expo;                // key -> exponent vector
  std::vector<int> degree;               // key -> total degree
  std::map<Expo, MonoKey> lookup;        // exponent vector -> key
  std::vector<std::vector<int>> product; // [a][b] -> key or -1

  MonoTables() {
    // enumerate degree by degree so keys are grouped as documented
    Expo z{};
    push(z);
    for (int i = 0; i < 7; ++i) {
      Expo e{};
      e[i] = 1;
      push(e);
    }
    for (int i = 0; i < 7; ++i)
      for (int j = i; j < 7; ++j) {
        Expo e{};
        e[i] += 1;
        e[j] += 1;
        push(e);
      }
    for (int i = 0; i < 7; ++i)
      for (int j = i; j < 7; ++j)
        for (int k = j; k < 7; ++k) {
          Expo e{};
          e[i] += 1;
          e[j] += 1;
          e[k] += 1;
          push(e);
        }

    const int n = static_cast<int>(expo.size());
    product.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (degree[a] + degree[b] > kMaxJetOrder) continue;
        Expo e{};
        for (int i = 0; i < 7; ++i) e[i] = expo[a][i] + expo[b][i];
        product[a][b] = lookup.at(e);
      }
  }

  void push(const Expo& e) {
    int d = 0;
    for (auto x : e) d += x;
    degree.push_back(d);
    lookup[e] = static_cast<MonoKey>(expo.size());
    expo.push_back(e);
  }
};

const MonoTables& tab() {
  static const MonoTables t;
  return t;
}

}  // namespace

int mono_degree(MonoKey k) { return tab().degree.at(k); }
MonoKey mono_unit() { return 0; }
MonoKey mono_var(int axis) { return static_cast<MonoKey>(1 + axis); }

int mono_count(int max_degree) {
  int c = 0;
  for (std::size_t k = 0; k < tab().degree.size(); ++k)
    if (tab().degree[k] <= max_degree) ++c;
  return c;
}

int mono_product(MonoKey a, MonoKey b) { return tab().product.at(a).at(b); }

std::pair<int, MonoKey> mono_derivative(MonoKey k, int axis) {
  const Expo& e = tab().expo.at(k);
  if (e[axis] == 0) return {0, 0};
  Expo d = e;
  d[axis] -= 1;
  return {e[axis], tab().lookup.at(d)};
}

std::string mono_label(MonoKey k) {
  const Expo& e = tab().expo.at(k);
  std::string s;
  for (int i = 0; i < 7; ++i)
    for (int r = 0; r < e[i]; ++r) {
      if (!s.empty()) s += "*";
      s += "u" + std::to_string(i + 1);
    }
  return s;
}

MonoKey mono_from_label(const std::string& label) {
  Expo e{};
  std::size_t pos = 0;
  while (pos < label.size()) {
    if (label[pos] == '*') {
      ++pos;
      continue;
    }
    if (label[pos] != 'u' || pos + 1 >= label.size())
      throw std::invalid_argument("monomial label: " + label);
    int axis = label[pos + 1] - '1';
    if (axis < 0 || axis > 6) throw std::invalid_argument("monomial label: " + label);
    e[axis] += 1;
    pos += 2;
  }
  auto it = tab().lookup.find(e);
  if (it == tab().lookup.end()) throw std::invalid_argument("monomial degree > 3: " + label);
  return it->second;
}

void JetScalar::check_order(int order) {
  if (order < 0 || order > kMaxJetOrder)
    throw std::invalid_argument("JetScalar: order must be 0.." + std::to_string(kMaxJetOrder));
}

JetScalar JetScalar::constant(int order, const Scalar& c) {
  JetScalar j(order);
  j.set(mono_unit(), c);
  return j;
}

Scalar JetScalar::value() const {
  auto it = terms_.find(mono_unit());
  if (it != terms_.end()) return it->second;
  if (!terms_.empty()) return zero_like(terms_.begin()->second);
  return Scalar();
}

void JetScalar::set(MonoKey k, const Scalar& c) {
  if (mono_degree(k) > order_) throw std::invalid_argument("JetScalar::set: degree > order");
  if (c.is_zero())
    terms_.erase(k);
  else
    terms_[k] = c;
}

Scalar JetScalar::coefficient(MonoKey k) const {
  auto it = terms_.find(k);
  if (it != terms_.end()) return it->second;
  return value().is_exact() ? Scalar() : zero_like(value());
}

void JetScalar::add_term(MonoKey k, const Scalar& c) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

JetScalar JetScalar::truncated(int order) const {
  check_order(order);
  JetScalar r(order);
  for (const auto& [k, c] : terms_)
    if (mono_degree(k) <= order) r.terms_.emplace(k, c);
  return r;
}

JetScalar JetScalar::derivative(int axis) const {
  if (order_ == 0) throw std::domain_error("JetScalar::derivative: order 0");
  JetScalar r(order_ - 1);
  for (const auto& [k, c] : terms_) {
    auto [factor, dk] = mono_derivative(k, axis);
    if (factor != 0) r.add_term(dk, c * factor);
  }
  return r;
}

JetScalar JetScalar::operator-() const {
  JetScalar r(order_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

JetScalar& JetScalar::operator+=(const JetScalar& o) {
  if (order_ != o.order_) throw std::invalid_argument("JetScalar: mixed orders");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

JetScalar& JetScalar::operator-=(const JetScalar& o) {
  if (order_ != o.order_) throw std::invalid_argument("JetScalar: mixed orders");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

JetScalar& JetScalar::operator*=(long k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

JetScalar& JetScalar::operator/=(long k) {
  if (k == 0) throw std::domain_error("JetScalar: division by zero");
  for (auto& [m, c] : terms_) c /= k;
  return *this;
}

JetScalar operator*(const JetScalar& a, const JetScalar& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("JetScalar: mixed orders");
  JetScalar r(a.order_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      int k = mono_product(ka, kb);
      if (k < 0 || mono_degree(static_cast<MonoKey>(k)) > a.order_) continue;
      r.add_term(static_cast<MonoKey>(k), ca * cb);
    }
  return r;
}

JetScalar JetScalar::inverse() const {
  Scalar c = value();
  if (c.is_zero()) throw std::domain_error("JetScalar::inverse: zero constant term");
  // (c + m)^-1 = sum_i (-1)^i c^-(i+1) m^i with m nilpotent of index <= order
  Scalar ic = c.inverse();
  JetScalar m = *this;
  m.add_term(mono_unit(), -c);  // nilpotent part
  JetScalar r = JetScalar::constant(order_, ic);
  JetScalar power = JetScalar::constant(order_, one_like(c));
  Scalar coeff = ic;
  for (int i = 1; i <= order_; ++i) {
    power = power * m;
    coeff *= ic;
    JetScalar scaled(order_);
    for (const auto& [k, v] : power.terms())
      scaled.set(k, (i % 2 == 1) ? -(v * coeff) : v * coeff);
    r += scaled;
  }
  return r;
}

JetScalar JetScalar::nth_root(unsigned n) const {
  if (n == 0) throw std::domain_error("JetScalar: 0th root");
  Scalar c = value();
  Scalar root = c.nth_root(n);  // throws in exact mode if not a perfect power
  JetScalar x = JetScalar::constant(order_, root);
  // Newton: x <- x - (x^n - a) / (n x^(n-1)); each step doubles jet accuracy
  int steps = 0;
  for (int correct = 1; correct <= order_; correct *= 2) ++steps;
  for (int i = 0; i < steps; ++i) {
    JetScalar xn1 = x;
    for (unsigned k = 2; k < n; ++k) xn1 = xn1 * x;
    JetScalar xn = xn1 * x;
    JetScalar num = xn - *this;
    JetScalar den = xn1 * static_cast<long>(n);
    x = x - num * den.inverse();
  }
  return x;
}

Scalar JetScalar::eval(const std::array<Scalar, 7>& u) const {
  Scalar acc = terms_.empty() ? Scalar() : zero_like(terms_.begin()->second);
  for (const auto& [k, c] : terms_) {
    Scalar m = c;
    MonoKey kk = k;
    // peel off one variable at a time via the derivative table
    while (mono_degree(kk) > 0) {
      for (int axis = 0; axis < 7; ++axis) {
        auto [factor, dk] = mono_derivative(kk, axis);
        if (factor != 0) {
          m *= u[axis];
          kk = dk;
          break;
        }
      }
    }
    acc += m;
  }
  return acc;
}

JetScalar zero_like(const JetScalar& x) { return JetScalar(x.order()); }

JetScalar one_like(const JetScalar& x) {
  return JetScalar::constant(x.order(), one_like(value_part(x)));
}

JetScalar fraction_like(const JetScalar& x, long num, long den) {
  return JetScalar::constant(x.order(), fraction_like(value_part(x), num, den));
}

Scalar value_part(const JetScalar& x) { return x.value(); }

}  // namespace g2eds
