#include "lasgap/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lasgap {

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  if (text.front() == '+') text.remove_prefix(1);  // GMP rejects an explicit plus
  const std::string s(text);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

Eigen::MatrixXd to_double_matrix(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out(i, j) = m(i, j).get_d();
    }
  }
  return out;
}

Eigen::VectorXd to_double_vector(const RationalVector& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = v(i).get_d();
  }
  return out;
}

RationalVector to_rational_vector(const Eigen::VectorXd& v) {
  RationalVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = Rational(v(i));  // mpq_set_d is exact for finite doubles
  }
  return out;
}

}  // namespace lasgap
