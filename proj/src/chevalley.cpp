#include "gsw/chevalley.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gsw/errors.hpp"

namespace gsw {

LieType parse_lie_type(const std::string& s) {
  if (s.size() != 1) throw input_error("unknown Lie type '" + s + "'");
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': return LieType::A;
    case 'B': return LieType::B;
    case 'C': return LieType::C;
    case 'D': return LieType::D;
    case 'E': return LieType::E;
    case 'F': return LieType::F;
    case 'G': return LieType::G;
    default: throw input_error("unknown Lie type '" + s + "'");
  }
}

std::string lie_type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E: return "E";
    case LieType::F: return "F";
    case LieType::G: return "G";
  }
  return "?";
}

WeylData WeylData::make(LieType type, int rank) {
  WeylData w{type, rank, {}};
  auto bad_rank = [&]() {
    throw input_error("rank " + std::to_string(rank) + " out of range for type " +
                      lie_type_name(type));
  };
  switch (type) {
    case LieType::A:
      if (rank < 1) bad_rank();
      for (int i = 0; i < rank; ++i) w.degrees.push_back(i + 2);
      break;
    case LieType::B:
    case LieType::C:
      if (rank < 1) bad_rank();
      for (int i = 1; i <= rank; ++i) w.degrees.push_back(2 * i);
      break;
    case LieType::D:
      if (rank < 2) bad_rank();
      for (int i = 1; i < rank; ++i) w.degrees.push_back(2 * i);
      w.degrees.push_back(rank);
      break;
    case LieType::E:
      if (rank == 6) w.degrees = {2, 5, 6, 8, 9, 12};
      else if (rank == 7) w.degrees = {2, 6, 8, 10, 12, 14, 18};
      else if (rank == 8) w.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
      else bad_rank();
      break;
    case LieType::F:
      if (rank != 4) bad_rank();
      w.degrees = {2, 6, 8, 12};
      break;
    case LieType::G:
      if (rank != 2) bad_rank();
      w.degrees = {2, 6};
      break;
  }
  std::sort(w.degrees.begin(), w.degrees.end());
  return w;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({BigInt(1)}); }

IntPolynomial IntPolynomial::geometric(int top) {
  if (top < 0) throw input_error("geometric: negative top exponent");
  return IntPolynomial(std::vector<BigInt>(top + 1, BigInt(1)));
}

const BigInt& IntPolynomial::coeff(int k) const {
  static const BigInt zero(0);
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[k];
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) return IntPolynomial();
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::eval(const BigInt& q) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string IntPolynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || coeffs_[k] != 1) os << coeffs_[k].str();
    if (k > 0) {
      if (coeffs_[k] != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

int positive_root_count(const WeylData& w) {
  int r = 0;
  for (int d : w.degrees) r += d - 1;
  return r;
}

BigInt weyl_group_order(const WeylData& w) {
  BigInt o(1);
  for (int d : w.degrees) o *= d;
  return o;
}

IntPolynomial poincare_polynomial(const WeylData& w) {
  IntPolynomial p = IntPolynomial::one();
  for (int d : w.degrees) p = p * IntPolynomial::geometric(d - 1);
  return p;
}

namespace {

void require_prime_power_range(const BigInt& q) {
  if (q < 2) throw input_error("field size must be at least 2");
}

}  // namespace

BigInt chevalley_group_order(const WeylData& w, const BigInt& q) {
  require_prime_power_range(q);
  BigInt order = boost::multiprecision::pow(q, positive_root_count(w));
  for (int d : w.degrees)
    order *= boost::multiprecision::pow(q, d) - 1;
  return order;
}

BigRational steinberg_ratio(const WeylData& w, const BigInt& q) {
  require_prime_power_range(q);
  const BigInt num = boost::multiprecision::pow(q, positive_root_count(w));
  const BigInt den = poincare_polynomial(w).eval(q);
  return BigRational(num, den);
}

int SemisimpleProduct::rank() const {
  int r = 0;
  for (const WeylData& w : factors) r += w.rank;
  return r;
}

int SemisimpleProduct::positive_roots() const {
  int r = 0;
  for (const WeylData& w : factors) r += positive_root_count(w);
  return r;
}

std::vector<int> SemisimpleProduct::degrees() const {
  std::vector<int> d;
  for (const WeylData& w : factors) d.insert(d.end(), w.degrees.begin(), w.degrees.end());
  std::sort(d.begin(), d.end());
  return d;
}

BigInt SemisimpleProduct::weyl_order() const {
  BigInt o(1);
  for (const WeylData& w : factors) o *= weyl_group_order(w);
  return o;
}

IntPolynomial SemisimpleProduct::poincare() const {
  IntPolynomial p = IntPolynomial::one();
  for (const WeylData& w : factors) p = p * poincare_polynomial(w);
  return p;
}

BigInt SemisimpleProduct::group_order(const BigInt& q) const {
  BigInt o(1);
  for (const WeylData& w : factors) o *= chevalley_group_order(w, q);
  return o;
}

BigRational SemisimpleProduct::steinberg(const BigInt& q) const {
  BigRational r(1);
  for (const WeylData& w : factors) r *= steinberg_ratio(w, q);
  return r;
}

SemisimpleProduct parse_semisimple(const std::string& desc) {
  SemisimpleProduct out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw input_error("empty factor in '" + desc + "'");
    const std::string type(1, token[0]);
    const std::string digits = token.substr(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw input_error("malformed factor '" + token + "'");
    out.factors.push_back(WeylData::make(parse_lie_type(type), std::stoi(digits)));
    token.clear();
  };
  for (char c : desc) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'x' || c == 'X' || c == '*') {
      // 'x' splits factors; a leading 'x' with no pending token is malformed.
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

}  // namespace gsw
