#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace gsw {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Simple Lie types. B1 and C1 coincide with A1, and D2 with A1 x A1; the
// degree tables make those aliases agree, so we allow them.
enum class LieType { A, B, C, D, E, F, G };

LieType parse_lie_type(const std::string& s);
std::string lie_type_name(LieType t);

// A simple factor together with the degrees of its basic Weyl-invariant
// polynomials. Everything downstream (Weyl order, positive roots, point
// counts over F_q) is a function of this degree list.
struct WeylData {
  LieType type;
  int rank;
  std::vector<int> degrees;  // ascending

  // Validates the rank range for the type (A>=1, B>=1, C>=1, D>=2,
  // E in {6,7,8}, F4, G2) and fills in the degree table.
  static WeylData make(LieType type, int rank);
};

// Dense polynomial with arbitrary-precision integer coefficients,
// index = exponent. Only what the generating functions here need.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial one();
  // 1 + q + ... + q^top (top >= 0)
  static IntPolynomial geometric(int top);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  IntPolynomial operator*(const IntPolynomial& rhs) const;
  BigInt eval(const BigInt& q) const;
  std::string str(const std::string& var = "q") const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

int positive_root_count(const WeylData& w);
BigInt weyl_group_order(const WeylData& w);

// Length generating function of the Weyl group: prod_i (1 + q + ... +
// q^{d_i - 1}). Coefficient of q^l counts elements of length l; the top
// exponent is the positive-root count and the value at 1 is the group order.
IntPolynomial poincare_polynomial(const WeylData& w);

// Number of F_q points of the corresponding simply connected group:
// q^R * prod_i (q^{d_i} - 1), with R the positive-root count. q >= 2.
BigInt chevalley_group_order(const WeylData& w, const BigInt& q);

// q^R / P(q) with P the Poincare polynomial: the fraction of the group
// order carried by the top unipotent cell. Strictly increasing in q with
// limit 1, and multiplicative over direct factors.
BigRational steinberg_ratio(const WeylData& w, const BigInt& q);

// A product of simple factors, e.g. A2 x B3.
struct SemisimpleProduct {
  std::vector<WeylData> factors;

  int rank() const;
  int positive_roots() const;
  std::vector<int> degrees() const;  // concatenated, ascending
  BigInt weyl_order() const;
  IntPolynomial poincare() const;
  BigInt group_order(const BigInt& q) const;
  BigRational steinberg(const BigInt& q) const;
};

// Parses "A2", "A2xB3", "e6 x g2" (case-insensitive, 'x' or '*' between
// factors). Throws input_error on malformed descriptions.
SemisimpleProduct parse_semisimple(const std::string& desc);

}  // namespace gsw
