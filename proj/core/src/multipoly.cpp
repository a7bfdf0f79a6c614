#include "cospec/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "cospec/poly.hpp"

namespace cospec {

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace_back(0, mpz_class(c));
}

MultiPoly MultiPoly::variable(int var) {
  if (var < 0 || var >= kMaxVars)
    throw std::out_of_range("MultiPoly: variable index beyond packed capacity");
  MultiPoly p;
  p.terms_.emplace_back(uint64_t(1) << (var * kExpBits), mpz_class(1));
  p.nvars_ = var + 1;
  return p;
}

MultiPoly MultiPoly::term(const mpz_class& c, uint64_t key, int nvars) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace_back(key, c);
  p.nvars_ = nvars;
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t out = 0;
  for (size_t i = 0; i < terms_.size();) {
    uint64_t key = terms_[i].first;
    mpz_class sum = std::move(terms_[i].second);
    size_t j = i + 1;
    while (j < terms_.size() && terms_[j].first == key) sum += terms_[j++].second;
    if (sum != 0) terms_[out++] = {key, std::move(sum)};
    i = j;
  }
  terms_.resize(out);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  nvars_ = std::max(nvars_, o.nvars_);
  normalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  terms_.reserve(terms_.size() + o.terms_.size());
  for (const auto& [k, c] : o.terms_) terms_.emplace_back(k, mpz_class(-c));
  nvars_ = std::max(nvars_, o.nvars_);
  normalize();
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  std::unordered_map<uint64_t, mpz_class> acc;
  acc.reserve(a.terms_.size() * 2);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) acc[ka + kb] += ca * cb;
  r.terms_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) r.terms_.emplace_back(k, std::move(c));
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return r;
}

UniPoly MultiPoly::subst_powers() const {
  UniPoly out;
  for (const auto& [key, c] : terms_) {
    int qdeg = 0;
    for (int v = 0; v < kMaxVars; ++v) qdeg += v * exponent(key, v);
    out += UniPoly::monomial(c, qdeg);
  }
  return out;
}

namespace {

int total_degree(uint64_t key) {
  int d = 0;
  for (int v = 0; v < MultiPoly::kMaxVars; ++v)
    d += MultiPoly::exponent(key, v);
  return d;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<uint64_t, mpz_class>> ts = terms_;
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [key, c] : ts) {
    bool neg = c < 0;
    mpz_class mag = neg ? mpz_class(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    if (mag != 1 || key == 0) body = mag.get_str();
    for (int v = 0; v < kMaxVars; ++v) {
      int e = exponent(key, v);
      if (e == 0) continue;
      if (!body.empty()) body += "*";
      body += "t_" + std::to_string(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    out += body;
  }
  return out;
}

}  // namespace cospec
