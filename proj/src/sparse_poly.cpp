#include "chowkit/sparse_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace chowkit {

SparsePoly SparsePoly::constant(int nvars, const Scalar& c) {
  SparsePoly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars)
    throw std::invalid_argument("SparsePoly: variable index out of range");
  SparsePoly p(nvars);
  Expo e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Scalar(1));
  return p;
}

SparsePoly SparsePoly::univariate(const std::vector<Scalar>& coeffs) {
  SparsePoly p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term({static_cast<std::uint32_t>(i)}, coeffs[i]);
  return p;
}

void SparsePoly::add_term(const Expo& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("SparsePoly: exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  r += o;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("SparsePoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  return *this + (-o);
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("SparsePoly: variable count mismatch");
  SparsePoly r(nvars_);
  Expo e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::operator*(const Scalar& c) const {
  SparsePoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

long SparsePoly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long t = 0;
    for (auto x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

Scalar SparsePoly::eval(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("SparsePoly: evaluation point length mismatch");
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

SparsePoly SparsePoly::exact_div(const SparsePoly& d) const {
  if (d.is_zero()) throw std::domain_error("SparsePoly: division by zero");
  if (nvars_ != d.nvars_)
    throw std::invalid_argument("SparsePoly: variable count mismatch");
  SparsePoly q(nvars_);
  SparsePoly r = *this;
  const auto& [de, dc] = *d.terms_.rbegin();  // lex-leading term of d
  Expo e(nvars_);
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms_.rbegin();
    for (int i = 0; i < nvars_; ++i) {
      if (re[i] < de[i])
        throw std::domain_error("SparsePoly: not exactly divisible");
      e[i] = re[i] - de[i];
    }
    Scalar c = rc / dc;
    q.add_term(e, c);
    SparsePoly t(nvars_);
    t.add_term(e, c);
    r -= t * d;
  }
  return q;
}

long SparsePoly::degree1() const {
  if (nvars_ != 1) throw std::invalid_argument("SparsePoly: not univariate");
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first[0];
}

Scalar SparsePoly::coeff1(long i) const {
  if (nvars_ != 1) throw std::invalid_argument("SparsePoly: not univariate");
  auto it = terms_.find({static_cast<std::uint32_t>(i)});
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<Scalar> SparsePoly::coeffs1() const {
  long d = degree1();
  std::vector<Scalar> out(static_cast<std::size_t>(d + 1), Scalar(0));
  for (const auto& [e, c] : terms_) out[e[0]] = c;
  return out;
}

SparsePoly SparsePoly::derivative1() const {
  if (nvars_ != 1) throw std::invalid_argument("SparsePoly: not univariate");
  SparsePoly r(1);
  for (const auto& [e, c] : terms_)
    if (e[0] > 0) r.add_term({e[0] - 1}, c * Scalar(static_cast<long>(e[0])));
  return r;
}

SparsePoly SparsePoly::monic1() const {
  if (is_zero()) return *this;
  return *this * terms_.rbegin()->second.inv();
}

SparsePoly gcd_univariate(const SparsePoly& f, const SparsePoly& g) {
  if (f.nvars() != 1 || g.nvars() != 1)
    throw std::invalid_argument("gcd_univariate: inputs must be univariate");
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("gcd_univariate: both inputs are zero");
  SparsePoly a = f, b = g;
  while (!b.is_zero()) {
    // a mod b by monic long division
    SparsePoly bm = b.monic1();
    while (!a.is_zero() && a.degree1() >= b.degree1()) {
      long shift = a.degree1() - b.degree1();
      Scalar lead = a.coeff1(a.degree1());
      SparsePoly t(1);
      t.add_term({static_cast<std::uint32_t>(shift)}, lead);
      a -= t * bm;
    }
    std::swap(a, b);
  }
  return a.monic1();
}

std::string SparsePoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*";
      if (static_cast<std::size_t>(i) < names.size())
        os << names[i];
      else
        os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) {
  return os << p.str();
}

}  // namespace chowkit
