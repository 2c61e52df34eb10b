#include "asch/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace asch {

int RingCtx::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

Ring make_ring(std::vector<std::string> vars, MonOrder order) {
  auto ctx = std::make_shared<RingCtx>();
  ctx->vars = std::move(vars);
  ctx->order = order;
  for (size_t i = 0; i < ctx->vars.size(); ++i)
    for (size_t j = i + 1; j < ctx->vars.size(); ++j)
      if (ctx->vars[i] == ctx->vars[j])
        throw Error("duplicate variable name: " + ctx->vars[i]);
  return ctx;
}

int total_deg(const Expo& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool divides(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo expo_mul(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Expo expo_div(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool expo_coprime(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

bool mono_less(const Expo& a, const Expo& b, MonOrder order) {
  if (order == MonOrder::lex) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
  // grevlex: compare total degree, then reversed exponents with reversed sign
  int da = total_deg(a), db = total_deg(b);
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

MPoly::MPoly(Ring r, std::vector<Term> terms) : ring_(std::move(r)) {
  normalize(std::move(terms));
}

void MPoly::normalize(std::vector<Term> raw) {
  const MonOrder ord = ring_->order;
  std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) {
    return mono_less(b.expo, a.expo, ord);  // descending
  });
  terms_.clear();
  for (auto& t : raw) {
    if (!terms_.empty() && terms_.back().expo == t.expo)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.coeff == 0; }),
               terms_.end());
  for (auto& t : terms_) t.coeff.canonicalize();
}

MPoly MPoly::constant(const Ring& r, const Rat& c) {
  MPoly p(r);
  if (c != 0) p.terms_.push_back({Expo(r->vars.size(), 0), c});
  return p;
}

MPoly MPoly::var(const Ring& r, int i, int power) {
  if (i < 0 || i >= (int)r->vars.size()) throw Error("variable index out of range");
  Expo e(r->vars.size(), 0);
  e[i] = power;
  MPoly p(r);
  p.terms_.push_back({std::move(e), Rat(1)});
  return p;
}

MPoly MPoly::var(const Ring& r, const std::string& name, int power) {
  int i = r->index_of(name);
  if (i < 0) throw Error("unknown variable: " + name);
  return var(r, i, power);
}

MPoly MPoly::monomial(const Ring& r, Expo e, const Rat& c) {
  MPoly p(r);
  if (c != 0) p.terms_.push_back({std::move(e), c});
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_deg(terms_[0].expo) == 0);
}

int MPoly::degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, total_deg(t.expo));
  return d;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (auto& t : terms_) d = std::max(d, t.expo[var]);
  return d;
}

const Term& MPoly::lead() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.front();
}

MPoly MPoly::lead_mono() const { return monomial(ring_, lead().expo, Rat(1)); }

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  std::vector<Term> raw = terms_;
  raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
  return MPoly(ring_, std::move(raw));
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) raw.push_back({expo_mul(a.expo, b.expo), a.coeff * b.coeff});
  return MPoly(ring_, std::move(raw));
}

MPoly MPoly::operator*(const Rat& c) const {
  if (c == 0) return MPoly(ring_);
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].expo != o.terms_[i].expo || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

MPoly MPoly::pow(int n) const {
  if (n < 0) throw Error("negative power of a polynomial");
  MPoly acc = constant(ring_, 1);
  MPoly base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / lead().coeff);
}

MPoly MPoly::primitive() const {
  if (is_zero()) return *this;
  Int num_gcd = 0, den_lcm = 1;
  for (auto& t : terms_) {
    num_gcd = gcd(num_gcd, Int(t.coeff.get_num()));
    den_lcm = lcm(den_lcm, Int(t.coeff.get_den()));
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  MPoly r = *this * scale;
  if (r.lead().coeff < 0) r = -r;
  return r;
}

MPoly MPoly::subst(const Ring& target, const std::vector<MPoly>& images) const {
  if (images.size() != ring_->vars.size())
    throw Error("substitution image count mismatch");
  MPoly acc(target);
  for (auto& t : terms_) {
    MPoly m = MPoly::constant(target, t.coeff);
    for (size_t i = 0; i < t.expo.size(); ++i)
      if (t.expo[i] > 0) m = m * images[i].pow(t.expo[i]);
    acc = acc + m;
  }
  return acc;
}

MPoly MPoly::lift_to(const Ring& target) const {
  std::vector<int> map(ring_->vars.size());
  for (size_t i = 0; i < ring_->vars.size(); ++i) {
    map[i] = target->index_of(ring_->vars[i]);
    if (map[i] < 0) throw Error("lift_to: missing variable " + ring_->vars[i]);
  }
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (auto& t : terms_) {
    Expo e(target->vars.size(), 0);
    for (size_t i = 0; i < t.expo.size(); ++i) e[map[i]] = t.expo[i];
    raw.push_back({std::move(e), t.coeff});
  }
  return MPoly(target, std::move(raw));
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool has_var = total_deg(t.expo) > 0;
    if (c != 1 || !has_var) {
      os << c.get_str();
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (size_t i = 0; i < t.expo.size(); ++i) {
      if (t.expo[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->vars[i];
      if (t.expo[i] > 1) os << "^" << t.expo[i];
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const Ring& ring;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) { ++pos; return true; }
    return false;
  }

  MPoly parse_expr() {
    MPoly acc = parse_term_signed();
    while (true) {
      skip_ws();
      if (eat('+')) acc = acc + parse_term_signed();
      else if (eat('-')) acc = acc - parse_term_signed();
      else break;
    }
    return acc;
  }

  MPoly parse_term_signed() {
    bool neg = false;
    while (true) {
      skip_ws();
      if (eat('-')) neg = !neg;
      else if (eat('+')) continue;
      else break;
    }
    MPoly t = parse_product();
    return neg ? -t : t;
  }

  MPoly parse_product() {
    MPoly acc = parse_power();
    while (true) {
      skip_ws();
      if (eat('*')) { acc = acc * parse_power(); continue; }
      if (pos < s.size() &&
          (std::isalpha((unsigned char)s[pos]) || s[pos] == '(' ||
           std::isdigit((unsigned char)s[pos]) || s[pos] == '_')) {
        acc = acc * parse_power();  // implicit multiplication
        continue;
      }
      break;
    }
    return acc;
  }

  MPoly parse_power() {
    MPoly base = parse_atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      int n = (int)parse_nat();
      return base.pow(n);
    }
    return base;
  }

  unsigned long parse_nat() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
      throw Error("expected a number at position " + std::to_string(pos) +
                  " in '" + s + "'");
    unsigned long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
      v = v * 10 + (s[pos++] - '0');
    return v;
  }

  MPoly parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw Error("unexpected end of polynomial '" + s + "'");
    if (eat('(')) {
      MPoly inner = parse_expr();
      if (!eat(')')) throw Error("missing ')' in '" + s + "'");
      return inner;
    }
    char c = s[pos];
    if (std::isdigit((unsigned char)c)) {
      unsigned long num = parse_nat();
      if (eat('/')) {
        unsigned long den = parse_nat();
        Rat q((long)num, (long)den);
        q.canonicalize();
        return MPoly::constant(ring, q);
      }
      return MPoly::constant(ring, Rat((long)num));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      int idx = ring->index_of(name);
      if (idx < 0) throw Error("unknown variable: " + name);
      return MPoly::var(ring, idx);
    }
    throw Error(std::string("unexpected character '") + c + "' in '" + s + "'");
  }
};

}  // namespace

MPoly parse_poly(const Ring& r, const std::string& text) {
  Parser p{r, text};
  MPoly result = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw Error("trailing input in polynomial '" + text + "'");
  return result;
}

bool is_univariate(const MPoly& f, int* var_out) {
  int var = -1;
  for (auto& t : f.terms())
    for (size_t i = 0; i < t.expo.size(); ++i)
      if (t.expo[i] > 0) {
        if (var == -1) var = (int)i;
        else if (var != (int)i) return false;
      }
  if (var_out) *var_out = var;  // -1 for constants
  return true;
}

MPoly derivative(const MPoly& f, int var) {
  std::vector<Term> raw;
  for (auto& t : f.terms()) {
    if (t.expo[var] == 0) continue;
    Term d = t;
    d.coeff *= t.expo[var];
    d.expo[var] -= 1;
    raw.push_back(std::move(d));
  }
  return MPoly(f.ring(), std::move(raw));
}

}  // namespace asch
