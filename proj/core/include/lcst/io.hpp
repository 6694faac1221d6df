#pragma once

#include <map>
#include <string>

#include "lcst/grid.hpp"
#include "lcst/param_matrix.hpp"
#include "lcst/signal.hpp"

namespace lcst {

enum class SignalKind { Gaussian, LinearChirp, LcChirp };

struct GenParams {
  SignalKind kind = SignalKind::Gaussian;
  double center = 0.0;  // gaussian
  double width = 1.0;   // gaussian
  double rate = 0.0;    // linear chirp phase rate
  double carrier = 0.0;  // linear chirp carrier frequency
  ParamMatrix matrix;   // lc chirp e^{-i A t^2 / (2B)}
};

Signal gen_signal(const GenParams& p, double t0, double dt, std::size_t n);

/// CSV with header "t,re,im"; 17 significant digits, so write/read round
/// trips are bit exact.
void write_signal(const Signal& s, const std::string& path);
Signal read_signal(const std::string& path);

/// Long-format CSV "a,b,re,im" (a ascending outer, b inner) plus a
/// "<path>.meta" sidecar of "key = value" lines describing the grid and,
/// optionally, matrices and window.
void write_plane(const CoefficientPlane& plane, const std::string& path,
                 const std::map<std::string, std::string>& meta = {});
CoefficientPlane read_plane(const std::string& path);

/// Filter coefficient CSV with header "n,re,im".
void write_filter(const struct FilterSequence& f, const std::string& path);
struct FilterSequence read_filter(const std::string& path);

}  // namespace lcst
