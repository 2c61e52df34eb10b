#ifndef ASCH_POLY_HPP
#define ASCH_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace asch {

using Rat = mpq_class;
using Int = mpz_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class MonOrder { grevlex, lex };

/// A polynomial ring context: named variables plus the active monomial order.
/// Shared immutably by every polynomial built over it.
struct RingCtx {
  std::vector<std::string> vars;
  MonOrder order = MonOrder::grevlex;

  int index_of(const std::string& name) const;
};

using Ring = std::shared_ptr<const RingCtx>;

Ring make_ring(std::vector<std::string> vars, MonOrder order = MonOrder::grevlex);

/// Exponent vector. Length always equals the ring's variable count.
using Expo = std::vector<int>;

int total_deg(const Expo& e);
bool divides(const Expo& a, const Expo& b);          // a | b componentwise
Expo expo_mul(const Expo& a, const Expo& b);
Expo expo_div(const Expo& a, const Expo& b);         // requires divides(b, a)
Expo expo_lcm(const Expo& a, const Expo& b);
bool expo_coprime(const Expo& a, const Expo& b);

/// Strict monomial comparison: returns true when a < b in the given order.
bool mono_less(const Expo& a, const Expo& b, MonOrder order);

struct Term {
  Expo expo;
  Rat coeff;
};

/// Multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted descending in the ring's monomial order with no
/// zero coefficients, so equal polynomials have identical representations.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(Ring r) : ring_(std::move(r)) {}
  MPoly(Ring r, std::vector<Term> terms);

  static MPoly zero(const Ring& r) { return MPoly(r); }
  static MPoly constant(const Ring& r, const Rat& c);
  static MPoly var(const Ring& r, int i, int power = 1);
  static MPoly var(const Ring& r, const std::string& name, int power = 1);
  static MPoly monomial(const Ring& r, Expo e, const Rat& c);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;                 // total degree, -1 for zero
  int degree_in(int var) const;       // max exponent of one variable

  const Term& lead() const;           // leading term; throws on zero
  MPoly lead_mono() const;            // leading monomial with coefficient 1

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& c) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(int n) const;

  /// Scale so the leading coefficient is 1 (no-op on zero).
  MPoly monic() const;
  /// Clear denominators and content: primitive integer coefficients,
  /// positive leading coefficient.
  MPoly primitive() const;

  /// Substitute each variable by the given polynomial over a target ring.
  MPoly subst(const Ring& target, const std::vector<MPoly>& images) const;

  /// Same polynomial over another ring whose variable list contains this
  /// ring's variables (matched by name).
  MPoly lift_to(const Ring& target) const;

  std::string str() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;  // sorted descending, no zeros

  void normalize(std::vector<Term> raw);
};

/// Parse "y^2 - x^3 + 1/2*x*y" over the given ring. '*' is optional between
/// factors; throws Error on unknown variable names or malformed input.
MPoly parse_poly(const Ring& r, const std::string& text);

/// Univariate view helpers (polynomials in a single ring variable).
bool is_univariate(const MPoly& f, int* var_out = nullptr);
MPoly derivative(const MPoly& f, int var);

}  // namespace asch

#endif
