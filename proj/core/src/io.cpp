#include "lcst/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lcst/errors.hpp"
#include "lcst/mra.hpp"

namespace lcst {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + tok +
                     "'");
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(line) + ": trailing junk in '" +
                     tok + "'");
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "' for writing");
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "' for reading");
  return f;
}

}  // namespace

Signal gen_signal(const GenParams& p, double t0, double dt, std::size_t n) {
  if (n < 2 || !(dt > 0)) throw BadParams("need n >= 2 and dt > 0");
  std::vector<cplx> s(n);
  switch (p.kind) {
    case SignalKind::Gaussian: {
      if (!(p.width > 0)) throw BadParams("gaussian width must be positive");
      for (std::size_t k = 0; k < n; ++k) {
        const double x = (t0 + static_cast<double>(k) * dt - p.center) / p.width;
        s[k] = std::exp(-0.5 * x * x);
      }
      break;
    }
    case SignalKind::LinearChirp:
      for (std::size_t k = 0; k < n; ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        s[k] = std::polar(1.0, 0.5 * p.rate * t * t + p.carrier * t);
      }
      break;
    case SignalKind::LcChirp: {
      if (p.matrix.b == 0.0) throw ZeroB("chirp matrix needs B != 0");
      for (std::size_t k = 0; k < n; ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        s[k] = std::polar(1.0, -0.5 * p.matrix.a * t * t / p.matrix.b);
      }
      break;
    }
  }
  return Signal(t0, dt, std::move(s));
}

void write_signal(const Signal& s, const std::string& path) {
  auto f = open_out(path);
  f << "t,re,im\n";
  for (std::size_t k = 0; k < s.size(); ++k)
    f << fmt(s.t(k)) << ',' << fmt(s[k].real()) << ',' << fmt(s[k].imag())
      << '\n';
}

Signal read_signal(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  if (!std::getline(f, line) || line != "t,re,im")
    throw ParseError("line 1: expected header 't,re,im'");
  std::vector<double> ts;
  std::vector<cplx> vs;
  std::size_t ln = 1;
  while (std::getline(f, line)) {
    ++ln;
    if (line.empty()) continue;
    const auto tok = split_csv(line);
    if (tok.size() != 3)
      throw ParseError("line " + std::to_string(ln) + ": expected 3 fields");
    ts.push_back(parse_double(tok[0], ln));
    vs.emplace_back(parse_double(tok[1], ln), parse_double(tok[2], ln));
  }
  if (ts.size() < 2) throw ParseError("signal file needs at least 2 rows");
  const double dt = ts[1] - ts[0];
  if (!(dt > 0)) throw NonUniformGrid("time column must be increasing");
  for (std::size_t k = 1; k < ts.size(); ++k) {
    const double step = ts[k] - ts[k - 1];
    if (std::abs(step - dt) > 1e-9 * std::abs(dt))
      throw NonUniformGrid("non-constant time step at row " +
                           std::to_string(k + 1));
  }
  return Signal(ts[0], dt, std::move(vs));
}

void write_plane(const CoefficientPlane& plane, const std::string& path,
                 const std::map<std::string, std::string>& meta) {
  const auto& g = plane.grid();
  {
    auto f = open_out(path);
    f << "a,b,re,im\n";
    for (std::size_t i = 0; i < g.n_scales(); ++i)
      for (std::size_t j = 0; j < g.n_shifts(); ++j) {
        const cplx v = plane(i, j);
        f << fmt(g.scales()[i]) << ',' << fmt(g.shifts()[j]) << ','
          << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
      }
  }
  auto mf = open_out(path + ".meta");
  mf << "n_scales = " << g.n_scales() << '\n';
  mf << "n_shifts = " << g.n_shifts() << '\n';
  for (const auto& [k, v] : meta) mf << k << " = " << v << '\n';
}

CoefficientPlane read_plane(const std::string& path) {
  std::size_t meta_scales = 0, meta_shifts = 0;
  {
    auto mf = open_in(path + ".meta");
    std::string line;
    while (std::getline(mf, line)) {
      const auto eq = line.find(" = ");
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(0, eq);
      const std::string val = line.substr(eq + 3);
      if (key == "n_scales") meta_scales = std::stoul(val);
      if (key == "n_shifts") meta_shifts = std::stoul(val);
    }
  }
  auto f = open_in(path);
  std::string line;
  if (!std::getline(f, line) || line != "a,b,re,im")
    throw ParseError("line 1: expected header 'a,b,re,im'");
  std::vector<double> as, bs;
  std::vector<cplx> vals;
  std::size_t ln = 1;
  while (std::getline(f, line)) {
    ++ln;
    if (line.empty()) continue;
    const auto tok = split_csv(line);
    if (tok.size() != 4)
      throw ParseError("line " + std::to_string(ln) + ": expected 4 fields");
    const double a = parse_double(tok[0], ln);
    const double b = parse_double(tok[1], ln);
    if (as.empty() || a != as.back()) as.push_back(a);
    if (as.size() == 1) bs.push_back(b);
    vals.emplace_back(parse_double(tok[2], ln), parse_double(tok[3], ln));
  }
  if (meta_scales != as.size() || meta_shifts != bs.size())
    throw MetaMismatch("plane is " + std::to_string(as.size()) + "x" +
                       std::to_string(bs.size()) + " but metadata says " +
                       std::to_string(meta_scales) + "x" +
                       std::to_string(meta_shifts));
  if (vals.size() != as.size() * bs.size())
    throw ParseError("plane file truncated: " + std::to_string(vals.size()) +
                     " rows for a " + std::to_string(as.size()) + "x" +
                     std::to_string(bs.size()) + " grid");
  return CoefficientPlane(ScaleShiftGrid(std::move(as), std::move(bs)),
                          std::move(vals));
}

void write_filter(const FilterSequence& flt, const std::string& path) {
  auto f = open_out(path);
  f << "n,re,im\n";
  for (long k = flt.first(); k <= flt.last(); ++k)
    f << k << ',' << fmt(flt.at(k).real()) << ',' << fmt(flt.at(k).imag())
      << '\n';
}

FilterSequence read_filter(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  if (!std::getline(f, line) || line != "n,re,im")
    throw ParseError("line 1: expected header 'n,re,im'");
  std::vector<long> ns;
  std::vector<cplx> cs;
  std::size_t ln = 1;
  while (std::getline(f, line)) {
    ++ln;
    if (line.empty()) continue;
    const auto tok = split_csv(line);
    if (tok.size() != 3)
      throw ParseError("line " + std::to_string(ln) + ": expected 3 fields");
    ns.push_back(std::lround(parse_double(tok[0], ln)));
    cs.emplace_back(parse_double(tok[1], ln), parse_double(tok[2], ln));
    if (ns.size() >= 2 && ns.back() != ns[ns.size() - 2] + 1)
      throw ParseError("line " + std::to_string(ln) +
                       ": filter indices must be consecutive");
  }
  if (ns.empty()) throw ParseError("empty filter file");
  FilterSequence flt;
  flt.offset = ns[0];
  flt.coeffs = std::move(cs);
  return flt;
}

}  // namespace lcst
