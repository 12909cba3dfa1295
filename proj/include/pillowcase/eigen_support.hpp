#pragma once

// NumTraits plumbing so Eigen dense matrices can carry GMP scalars.  We only
// use Eigen as exact storage plus our own elimination loops, so the cost
// constants are nominal.

#include <gmpxx.h>

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 150,
        MulCost = 100,
    };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 120,
        MulCost = 80,
    };
};

} // namespace Eigen

namespace pillowcase {

using IntMatrix = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;
using RationalMatrix = Eigen::Matrix<mpq_class, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<mpq_class, Eigen::Dynamic, 1>;

} // namespace pillowcase
