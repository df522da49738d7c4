// elliptic.hpp
// Complete elliptic integrals and Jacobi elliptic functions over the real
// parameter m = k^2.  Negative parameters (imaginary modulus) are supported
// throughout; they are reduced to the positive-parameter range by
//
//     K(-k^2/k'^2) = k' K(k^2)
//     E(-k^2/k'^2) = E(k^2) / k'
//     sn(z, mu)    = k' sn(z/k', m) / dn(z/k', m),   m = -mu/(1-mu)
//
// with cn, dn obtained from the same descent.  The positive-parameter core is
// the arithmetic-geometric mean for K and E and the descending Landen
// (AGM backward) recurrence for sn, cn, dn.

#ifndef LAWSON_ELLIPTIC_HPP
#define LAWSON_ELLIPTIC_HPP

#include "lawson/errors.hpp"

namespace lawson {

// Validated elliptic parameter m = k^2.  Any m < 1 is accepted; m = 1 is
// admitted only because E(1) = 1 is finite (K rejects it at call time).
class EllipticParameter {
 public:
  explicit EllipticParameter(double m) : m_(m) {
    if (!(m <= 1.0)) throw DomainError("elliptic parameter must satisfy m <= 1");
  }
  double value() const { return m_; }
  double complement() const { return 1.0 - m_; }

 private:
  double m_;
};

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

// Complete integral of the first kind.  Throws DivergentError at m = 1 and
// DomainError for m in (1 - 1e-12, 1), where the logarithmic blow-up makes
// double evaluation meaningless.
double elliptic_K(const EllipticParameter& p);

// Complete integral of the second kind, valid for m <= 1 with E(1) = 1.
double elliptic_E(const EllipticParameter& p);

// Jacobi sn, cn, dn at real argument u.  Requires m < 1.
JacobiTriple jacobi_elliptic(double u, const EllipticParameter& p);

inline double elliptic_K(double m) { return elliptic_K(EllipticParameter(m)); }
inline double elliptic_E(double m) { return elliptic_E(EllipticParameter(m)); }
inline JacobiTriple jacobi_elliptic(double u, double m) {
  return jacobi_elliptic(u, EllipticParameter(m));
}

}  // namespace lawson

#endif
