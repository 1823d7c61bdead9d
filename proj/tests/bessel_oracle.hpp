#ifndef CORRLAT_TESTS_BESSEL_ORACLE_HPP
#define CORRLAT_TESTS_BESSEL_ORACLE_HPP

namespace corrlat::testing {

/// Modified Bessel K_n(u) for integer order n >= 0, evaluated from the
/// ascending power series in arbitrary precision (mpfr). The series suffers
/// catastrophic cancellation ~ e^{2u}, so the working precision scales with
/// u; the result is correct to double precision for any u the library
/// evaluates. Independent of the boost::math backend used in production.
double bessel_k_oracle(int order, double u);

} // namespace corrlat::testing

#endif
