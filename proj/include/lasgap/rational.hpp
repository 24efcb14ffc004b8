#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <string>
#include <string_view>

namespace Eigen {

// Dense algebra over exact rationals. GMP keeps every value canonical
// (lowest terms, positive denominator) after each operation, so matrix
// equality is plain entrywise comparison.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace lasgap {

using Rational = mpq_class;
using Integer = mpz_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Eigen::MatrixXd to_double_matrix(const RationalMatrix& m);
Eigen::VectorXd to_double_vector(const RationalVector& v);

/// Exact embedding: every finite double is a dyadic rational.
RationalVector to_rational_vector(const Eigen::VectorXd& v);

}  // namespace lasgap
