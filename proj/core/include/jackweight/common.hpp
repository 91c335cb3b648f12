#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace jw {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Permutations of {0..N-1} stored as image arrays: w[i] = w(i).
// Products compose right to left, (a*b)(i) = a(b(i)).
using Perm = std::vector<int>;

// Exponent vector of a Laurent monomial x^alpha.
using Exponent = std::vector<int>;

inline constexpr double kPi = 3.14159265358979323846;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPartition : public Error { public: using Error::Error; };
class SpectralCollision : public Error { public: using Error::Error; };
class DegreeCapExceeded : public Error { public: using Error::Error; };
class SingularPoint : public Error { public: using Error::Error; };
class StepUnderflow : public Error { public: using Error::Error; };
class NonFinite : public Error { public: using Error::Error; };
class PathCollision : public Error { public: using Error::Error; };
class HalfIntegerKappa : public Error { public: using Error::Error; };
class OutsideRadius : public Error { public: using Error::Error; };
class RankDeficient : public Error { public: using Error::Error; };
class MissingCoefficient : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };

}  // namespace jw
