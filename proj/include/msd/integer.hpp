#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace msd {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer. Expression templates are off so the type
/// behaves like a plain value inside Eigen expressions.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;

inline Integer lcm_of(const std::vector<Integer>& values)
{
    Integer result = 1;
    for (const auto& v : values) {
        result = mp::lcm(result, v);
    }
    return result;
}

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace msd
