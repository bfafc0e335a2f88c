#ifndef DVCURVE_PRECISION_HPP
#define DVCURVE_PRECISION_HPP

namespace dvcurve {

// Working precision for truncated series.  Each ring interprets the fields
// it needs:
//   n_t — retained powers of t (results valid mod t^n_t),
//   n_x — retained x window: plain x-powers for T[[x]] and k[[x,y]],
//         x^-1-powers (validity floor) for k((x^-1))[[t]],
//   m_x — principal-part window for Laurent coefficients (serialization
//         and display; positive x-powers beyond it are still stored).
// Every value carries its own precision; operations recompute it as the
// minimum of the inputs under the ring's rule.
struct Precision {
  int n_t = 8;
  int n_x = 12;
  int m_x = 8;
};

}  // namespace dvcurve

#endif
