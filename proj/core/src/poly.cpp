#include "cospec/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace cospec {

namespace {
const mpz_class kZero = 0;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(const mpz_class& c, int deg) {
  UniPoly p;
  if (c != 0) {
    p.c_.assign(deg + 1, mpz_class(0));
    p.c_[deg] = c;
  }
  return p;
}

UniPoly UniPoly::from_coeffs(std::vector<mpz_class> ascending) {
  UniPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

const mpz_class& UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const mpz_class& UniPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly::from_coeffs(std::move(r));
}

UniPoly& UniPoly::operator*=(const mpz_class& s) {
  if (s == 0) { c_.clear(); return *this; }
  for (auto& v : c_) v *= s;
  return *this;
}

mpz_class UniPoly::eval(const mpz_class& v) const {
  mpz_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
  return r;
}

mpq_class UniPoly::eval(const mpq_class& v) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + mpq_class(*it);
  return r;
}

mpz_class UniPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return UniPoly();
  mpz_class g = content();
  if (c_.back() < 0) g = -g;
  UniPoly r = *this;
  for (auto& v : r.c_) v /= g;
  return r;
}

// ----- text form -----

namespace {

// Append "sign magnitude*var^k" to out; first term gets a bare leading '-'.
void append_term(std::string& out, const mpz_class& coeff,
                 const std::vector<std::pair<std::string, int>>& vars) {
  bool neg = coeff < 0;
  mpz_class mag = neg ? mpz_class(-coeff) : coeff;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  std::string body;
  bool all_zero_exp = true;
  for (const auto& [v, e] : vars)
    if (e > 0) all_zero_exp = false;
  if (mag != 1 || all_zero_exp) body = mag.get_str();
  for (const auto& [v, e] : vars) {
    if (e == 0) continue;
    if (!body.empty()) body += "*";
    body += v;
    if (e > 1) body += "^" + std::to_string(e);
  }
  out += body;
}

}  // namespace

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k)
    if (c_[k] != 0) append_term(out, c_[k], {{var, k}});
  return out;
}

std::string ratpoly_str(const std::vector<mpq_class>& ascending,
                        const std::string& var) {
  std::string out;
  for (int k = static_cast<int>(ascending.size()) - 1; k >= 0; --k) {
    const mpq_class& c = ascending[k];
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class mag = neg ? mpq_class(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    if (mag != 1 || k == 0) body = mag.get_str();
    if (k > 0) {
      if (!body.empty()) body += "*";
      body += var;
      if (k > 1) body += "^" + std::to_string(k);
    }
    out += body;
  }
  return out.empty() ? "0" : out;
}

// ----- integer factorisation + rational roots -----

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(const mpz_class& n) {
  // 40 Miller-Rabin rounds; composite never slips through in practice.
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

mpz_class pollard_rho(const mpz_class& n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  while (true) {
    mpz_class x = rng() % n, y = x, c = rng() % n + 1, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle without factor, retry with new c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(const mpz_class& n, std::map<mpz_class, int>& out,
                std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  mpz_class d = pollard_rho(n, rng);
  factor_rec(d, out, rng);
  factor_rec(n / d, out, rng);
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factor_integer(const mpz_class& n_in) {
  mpz_class n = n_in < 0 ? mpz_class(-n_in) : n_in;
  std::map<mpz_class, int> fac;
  if (n > 1) {
    for (long p = 2; p <= 100000 && mpz_class(p) * p <= n; p += (p == 2) ? 1 : 2) {
      while (n % p == 0) {
        fac[p]++;
        n /= p;
      }
    }
    if (n > 1) {
      std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
      factor_rec(n, fac, rng);
    }
  }
  return {fac.begin(), fac.end()};
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<mpq_class> rational_roots(const UniPoly& f_in) {
  if (f_in.is_zero())
    throw std::invalid_argument("rational_roots: zero polynomial");
  // Strip q^k: q = 0 is a root iff the constant term vanishes.
  std::vector<mpz_class> c = f_in.coeffs();
  std::set<mpq_class> roots;
  size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) roots.insert(mpq_class(0));
  UniPoly f = UniPoly::from_coeffs(
      std::vector<mpz_class>(c.begin() + low, c.end()));
  if (f.degree() >= 1) {
    std::vector<mpz_class> ps = divisors_of(f.coeff(0));
    std::vector<mpz_class> qs = divisors_of(f.leading());
    for (const auto& p : ps)
      for (const auto& s : qs) {
        mpq_class cand(p, s);
        cand.canonicalize();
        if (f.eval(cand) == 0) roots.insert(cand);
        cand = -cand;
        if (f.eval(cand) == 0) roots.insert(cand);
      }
  }
  return {roots.begin(), roots.end()};
}

// ----- gcd via primitive pseudo-remainder sequence -----

namespace {

// lc(b)^(deg a - deg b + 1) * a  reduced mod b, staying in Z[q].
UniPoly pseudo_rem(UniPoly a, const UniPoly& b) {
  int db = b.degree();
  const mpz_class& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    int shift = a.degree() - db;
    mpz_class la = a.leading();
    UniPoly scaled = a;
    scaled *= lb;
    UniPoly sub = b * UniPoly::monomial(la, shift);
    a = scaled - sub;
  }
  return a;
}

}  // namespace

UniPoly poly_gcd(const UniPoly& a_in, const UniPoly& b_in) {
  if (a_in.is_zero()) return b_in.is_zero() ? UniPoly() : b_in.primitive_part() * UniPoly(b_in.content());
  if (b_in.is_zero()) return a_in.primitive_part() * UniPoly(a_in.content());
  mpz_class cont;
  mpz_gcd(cont.get_mpz_t(), a_in.content().get_mpz_t(), b_in.content().get_mpz_t());
  UniPoly a = a_in.primitive_part(), b = b_in.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  UniPoly g = a;  // already primitive with positive leading coefficient
  g *= cont;
  return g;
}

// ----- BivarPoly -----

void BivarPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BivarPoly BivarPoly::from_xcoeffs(std::vector<UniPoly> ascending) {
  BivarPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

BivarPoly BivarPoly::term(const mpz_class& c, int qdeg, int xdeg) {
  BivarPoly p;
  if (c != 0) {
    p.c_.assign(xdeg + 1, UniPoly());
    p.c_[xdeg] = UniPoly::monomial(c, qdeg);
  }
  return p;
}

const UniPoly& BivarPoly::coeff_x(int k) const {
  static const UniPoly zero;
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return BivarPoly();
  std::vector<UniPoly> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return BivarPoly::from_xcoeffs(std::move(r));
}

std::vector<mpq_class> BivarPoly::eval_q(const mpq_class& q) const {
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].eval(q);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

mpq_class BivarPoly::eval(const mpq_class& x, const mpq_class& q) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->eval(q);
  return r;
}

std::string BivarPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree_x(); k >= 0; --k) {
    const UniPoly& cq = c_[k];
    for (int j = 0; j <= cq.degree(); ++j)
      if (cq.coeff(j) != 0) append_term(out, cq.coeff(j), {{"q", j}, {"x", k}});
  }
  return out;
}

// Grammar accepted: signed monomials "[-] A [*q[^j]] [*x[^k]]" joined by +/-.
// This is exactly what str() emits, modulo whitespace and term order.
std::optional<BivarPoly> BivarPoly::parse(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) return std::nullopt;
  if (t == "0") return BivarPoly();

  BivarPoly acc;
  size_t i = 0;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    }
    size_t j = i;
    while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
    std::string term = t.substr(i, j - i);
    if (term.empty()) return std::nullopt;
    i = j;

    mpz_class coeff = sign;
    int qe = 0, xe = 0;
    size_t pos = 0;
    while (pos < term.size()) {
      size_t stop = term.find('*', pos);
      std::string fac = term.substr(pos, stop == std::string::npos
                                             ? std::string::npos
                                             : stop - pos);
      pos = stop == std::string::npos ? term.size() : stop + 1;
      if (fac.empty()) return std::nullopt;
      if (fac[0] == 'q' || fac[0] == 'x') {
        int e = 1;
        if (fac.size() > 1) {
          if (fac[1] != '^') return std::nullopt;
          try {
            e = std::stoi(fac.substr(2));
          } catch (...) {
            return std::nullopt;
          }
          if (e < 0) return std::nullopt;
        }
        (fac[0] == 'q' ? qe : xe) += e;
      } else {
        for (char c : fac)
          if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        coeff *= mpz_class(fac);
      }
    }
    acc += BivarPoly::term(coeff, qe, xe);
  }
  return acc;
}

}  // namespace cospec
