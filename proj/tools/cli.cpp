#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>

#include "lcst/errors.hpp"
#include "lcst/fft.hpp"
#include "lcst/io.hpp"
#include "lcst/lcst.hpp"
#include "lcst/lct.hpp"
#include "lcst/mra.hpp"
#include "lcst/rkhs.hpp"
#include "lcst/tfa.hpp"

namespace lcst::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<double> split_nums(const std::string& s, char sep = ',') {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw BadParams("cannot parse number '" + tok + "' in '" + s + "'");
    }
  }
  return out;
}

ParamMatrix parse_matrix(const std::string& s) {
  const auto v = split_nums(s);
  if (v.size() != 4)
    throw BadParams("matrix must be four numbers A,B,C,D, got '" + s + "'");
  return sl2r_new(v[0], v[1], v[2], v[3]);
}

std::pair<ParamMatrix, ParamMatrix> parse_preset(const std::string& s) {
  if (s == "classical") return special_case(SpecialCase::Classical);
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    const std::string name = s.substr(0, colon);
    const auto p = split_nums(s.substr(colon + 1));
    if (p.size() == 2 && name == "frst")
      return special_case(SpecialCase::Frst, p[0], p[1]);
    if (p.size() == 2 && name == "fresnel")
      return special_case(SpecialCase::Fresnel, p[0], p[1]);
  }
  throw BadParams("unknown preset '" + s +
                  "'; expected classical, frst:a,b or fresnel:B1,B2");
}

// Matrices from --m1/--m2 or --preset; preset wins if both given.
std::pair<ParamMatrix, ParamMatrix> resolve_matrices(const std::string& preset,
                                                     const std::string& m1,
                                                     const std::string& m2) {
  if (!preset.empty()) return parse_preset(preset);
  if (m1.empty() || m2.empty())
    throw BadParams("need either --preset or both --m1 and --m2");
  return {parse_matrix(m1), parse_matrix(m2)};
}

WindowSpec parse_window(const std::string& s) {
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  if (name == "gaussian" && colon != std::string::npos)
    return WindowSpec::gaussian(std::stod(s.substr(colon + 1)));
  if (name == "hann" && colon != std::string::npos)
    return WindowSpec::hann(std::stod(s.substr(colon + 1)));
  if (name == "boxcar" && colon != std::string::npos) {
    const auto p = split_nums(s.substr(colon + 1), ':');
    if (p.size() == 2) return WindowSpec::boxcar(p[0], p[1]);
  }
  if (name == "file" && colon != std::string::npos)
    return WindowSpec::sampled(read_signal(s.substr(colon + 1)));
  throw BadParams("unknown window '" + s +
                  "'; expected gaussian:w, hann:s, boxcar:lo:hi or file:path");
}

struct Range3 {
  double lo = 0, hi = 0;
  std::size_t n = 0;
};

Range3 parse_range(const std::string& s) {
  const auto v = split_nums(s, ':');
  if (v.size() != 3 || v[2] < 1)
    throw BadParams("range must be min:max:count, got '" + s + "'");
  return {v[0], v[1], static_cast<std::size_t>(v[2])};
}

FilterSequence parse_filter(const std::string& s) {
  if (s == "haar") {
    FilterSequence f;
    f.offset = 0;
    f.coeffs = {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
    return f;
  }
  return read_filter(s);
}

std::vector<double> make_u_grid(const ParamMatrix& m1, std::size_t n) {
  const double period = 2.0 * std::numbers::pi * std::abs(m1.b);
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i)
    u[i] = period * static_cast<double>(i) / static_cast<double>(n);
  return u;
}

void emit(const json& j) { std::cout << j.dump() << std::endl; }

int run(const std::vector<std::string>& args) {
  CLI::App app{"Scale-shift chirp transform toolkit"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "Generate a test signal");
  std::string gen_kind = "gaussian", gen_out;
  double gen_center = 0, gen_width = 1, gen_rate = 0, gen_carrier = 0;
  std::string gen_matrix;
  double gen_t0 = -8, gen_dt = 1.0 / 64;
  std::size_t gen_n = 1024;
  gen->add_option("--kind", gen_kind, "gaussian|linear_chirp|lc_chirp");
  gen->add_option("--center", gen_center);
  gen->add_option("--width", gen_width);
  gen->add_option("--rate", gen_rate);
  gen->add_option("--carrier", gen_carrier);
  gen->add_option("--matrix", gen_matrix, "A,B,C,D for lc_chirp");
  gen->add_option("--t0", gen_t0);
  gen->add_option("--dt", gen_dt);
  gen->add_option("--n", gen_n);
  gen->add_option("-o,--output", gen_out)->required();

  // ---- lct ----
  auto* lct_cmd = app.add_subcommand("lct", "Linear canonical transform");
  std::string lct_in, lct_out, lct_m1, lct_m2, lct_preset;
  bool lct_direct = false, lct_inv = false;
  lct_cmd->add_option("-i,--input", lct_in)->required();
  lct_cmd->add_option("-o,--output", lct_out)->required();
  lct_cmd->add_option("--m1", lct_m1, "matrix A,B,C,D");
  lct_cmd->add_option("--m2", lct_m2)->description("ignored; m1 drives the transform");
  lct_cmd->add_option("--preset", lct_preset);
  lct_cmd->add_flag("--direct", lct_direct, "force quadrature path");
  lct_cmd->add_flag("--inverse", lct_inv);

  // ---- lcst ----
  auto* st = app.add_subcommand("lcst", "Forward scale-shift transform");
  std::string st_in, st_out, st_m1, st_m2, st_preset, st_win = "gaussian:1";
  std::string st_scales, st_shifts;
  bool st_direct = false;
  st->add_option("-i,--input", st_in)->required();
  st->add_option("-o,--output", st_out)->required();
  st->add_option("--m1", st_m1);
  st->add_option("--m2", st_m2);
  st->add_option("--preset", st_preset);
  st->add_option("--window", st_win);
  st->add_option("--scales", st_scales, "min:max:count, geometric")->required();
  st->add_option("--shifts", st_shifts, "min:max:count, arithmetic")->required();
  st->add_flag("--direct", st_direct);

  // ---- ilcst ----
  auto* ist = app.add_subcommand("ilcst", "Inverse scale-shift transform");
  std::string ist_in, ist_out, ist_m1, ist_m2, ist_preset, ist_win = "gaussian:1";
  double ist_c = 0;
  double ist_t0 = 0, ist_dt = 0;
  std::size_t ist_n = 0;
  ist->add_option("-i,--input", ist_in)->required();
  ist->add_option("-o,--output", ist_out)->required();
  ist->add_option("--m1", ist_m1);
  ist->add_option("--m2", ist_m2);
  ist->add_option("--preset", ist_preset);
  ist->add_option("--window", ist_win);
  ist->add_option("--c-value", ist_c)->required();
  ist->add_option("--t0", ist_t0);
  ist->add_option("--dt", ist_dt);
  ist->add_option("--n", ist_n);

  // ---- admissibility ----
  auto* adm = app.add_subcommand("admissibility", "Admissibility constant");
  std::string adm_m1, adm_m2, adm_preset, adm_win = "gaussian:1";
  std::string adm_probes = "0.5,1,2", adm_range = "0.1:100:256";
  std::string adm_variant = "b1a";
  adm->add_option("--m1", adm_m1);
  adm->add_option("--m2", adm_m2);
  adm->add_option("--preset", adm_preset);
  adm->add_option("--window", adm_win);
  adm->add_option("--probes", adm_probes, "comma-separated frequencies");
  adm->add_option("--a-range", adm_range, "min:max:steps");
  adm->add_option("--variant", adm_variant, "b1|b1a");

  // ---- tfwindow ----
  auto* tfw = app.add_subcommand("tfwindow", "Window geometry and Q factor");
  std::string tfw_m1, tfw_m2, tfw_preset, tfw_win = "gaussian:1";
  double tfw_a = 1, tfw_b = 0;
  std::string tfw_xi = "-32:32:4096";
  tfw->add_option("--m1", tfw_m1);
  tfw->add_option("--m2", tfw_m2);
  tfw->add_option("--preset", tfw_preset);
  tfw->add_option("--window", tfw_win);
  tfw->add_option("--a", tfw_a);
  tfw->add_option("--b", tfw_b);
  tfw->add_option("--xi", tfw_xi, "spectral sampling grid min:max:count");

  // ---- rkhs-kernel ----
  auto* rk = app.add_subcommand("rkhs-kernel", "Reproducing kernel value");
  std::string rk_m1, rk_m2, rk_preset, rk_win = "gaussian:1";
  std::string rk_p = "1,0", rk_q = "1,0", rk_quad;
  double rk_c = 0;
  rk->add_option("--m1", rk_m1);
  rk->add_option("--m2", rk_m2);
  rk->add_option("--preset", rk_preset);
  rk->add_option("--window", rk_win);
  rk->add_option("--p", rk_p, "a,b");
  rk->add_option("--q", rk_q, "c,d");
  rk->add_option("--c-value", rk_c)->required();
  rk->add_option("--quad", rk_quad, "quadrature grid t0:dt:n");

  // ---- mra ----
  auto* mra = app.add_subcommand("mra", "Multiresolution filter analysis");
  mra->require_subcommand(1);
  std::string mra_m1, mra_m2, mra_preset, mra_win = "gaussian:1";
  std::string mra_filter = "haar", mra_wavelet, mra_out;
  std::size_t mra_ugrid = 256;
  long mra_kmin = -32, mra_kmax = 32;
  int mra_level = 0;
  long mra_nlo = -2, mra_nhi = 2;
  for (const char* name :
       {"riesz", "orthonormalize", "qmf", "derive-wavelet", "unitarity",
        "gram"}) {
    auto* sub = mra->add_subcommand(name);
    sub->add_option("--m1", mra_m1);
    sub->add_option("--m2", mra_m2);
    sub->add_option("--preset", mra_preset);
    sub->add_option("--window", mra_win);
    sub->add_option("--filter", mra_filter, "haar or a filter CSV path");
    sub->add_option("--wavelet", mra_wavelet, "wavelet filter CSV path");
    sub->add_option("--u-points", mra_ugrid);
    sub->add_option("--k-min", mra_kmin);
    sub->add_option("--k-max", mra_kmax);
    sub->add_option("--level", mra_level);
    sub->add_option("--n-lo", mra_nlo);
    sub->add_option("--n-hi", mra_nhi);
    sub->add_option("-o,--output", mra_out);
  }

  std::vector<const char*> argv;
  argv.push_back("lcst");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  if (*gen) {
    GenParams p;
    if (gen_kind == "gaussian") {
      p.kind = SignalKind::Gaussian;
      p.center = gen_center;
      p.width = gen_width;
    } else if (gen_kind == "linear_chirp") {
      p.kind = SignalKind::LinearChirp;
      p.rate = gen_rate;
      p.carrier = gen_carrier;
    } else if (gen_kind == "lc_chirp") {
      p.kind = SignalKind::LcChirp;
      p.matrix = parse_matrix(gen_matrix);
    } else {
      throw BadParams("unknown signal kind '" + gen_kind + "'");
    }
    const Signal s = gen_signal(p, gen_t0, gen_dt, gen_n);
    write_signal(s, gen_out);
    emit({{"command", "gen"},
          {"kind", gen_kind},
          {"n", gen_n},
          {"norm", s.norm()},
          {"output", gen_out}});
    return 0;
  }

  if (*lct_cmd) {
    const Signal f = read_signal(lct_in);
    ParamMatrix m = lct_preset.empty() ? parse_matrix(lct_m1)
                                       : parse_preset(lct_preset).first;
    Signal F = [&] {
      if (lct_inv) return lct_inverse(f, m);
      if (lct_direct || !fft::is_power_of_two(f.size()))
        return lct_forward(f, m);
      return lct_forward_fast(f, m);
    }();
    write_signal(F, lct_out);
    emit({{"command", "lct"},
          {"inverse", lct_inv},
          {"n", F.size()},
          {"norm", F.norm()},
          {"output", lct_out}});
    return 0;
  }

  if (*st) {
    const Signal f = read_signal(st_in);
    const auto [m1, m2] = resolve_matrices(st_preset, st_m1, st_m2);
    const WindowSpec psi = parse_window(st_win);
    const auto sc = parse_range(st_scales);
    const auto sh = parse_range(st_shifts);
    const auto grid =
        ScaleShiftGrid::make(sc.lo, sc.hi, sc.n, sh.lo, sh.hi, sh.n);
    const auto plane = [&] {
      if (st_direct) return lcst_forward(f, psi, m1, m2, grid);
      try {
        return lcst_forward_fast(f, psi, m1, m2, grid);
      } catch (const IncommensurateGrids&) {
        return lcst_forward(f, psi, m1, m2, grid);
      }
    }();
    write_plane(plane, st_out,
                {{"m1", st_preset.empty() ? st_m1 : st_preset},
                 {"m2", st_preset.empty() ? st_m2 : st_preset},
                 {"window", psi.descriptor()}});
    emit({{"command", "lcst"},
          {"scales", grid.n_scales()},
          {"shifts", grid.n_shifts()},
          {"energy", plane.energy()},
          {"output", st_out}});
    return 0;
  }

  if (*ist) {
    const auto plane = read_plane(ist_in);
    const auto [m1, m2] = resolve_matrices(ist_preset, ist_m1, ist_m2);
    const WindowSpec psi = parse_window(ist_win);
    std::optional<GridSpec> g;
    if (ist_n > 0) g = GridSpec{ist_t0, ist_dt, ist_n};
    const Signal f = lcst_inverse(plane, psi, m1, m2, ist_c, g);
    write_signal(f, ist_out);
    emit({{"command", "ilcst"},
          {"n", f.size()},
          {"norm", f.norm()},
          {"output", ist_out}});
    return 0;
  }

  if (*adm) {
    const auto [m1, m2] = resolve_matrices(adm_preset, adm_m1, adm_m2);
    const WindowSpec psi = parse_window(adm_win);
    const auto r = parse_range(adm_range);
    const auto variant = adm_variant == "b1"
                             ? AdmissibilityVariant::ModOneOverB1
                             : AdmissibilityVariant::ModOneOverB1a;
    const auto rep = admissibility_constant(psi, m1, m2, split_nums(adm_probes),
                                            {r.lo, r.hi, r.n}, variant);
    emit({{"command", "admissibility"},
          {"c_value", rep.c_value},
          {"relative_spread", rep.relative_spread},
          {"probes", rep.xi_probes},
          {"per_probe", rep.per_probe_values},
          {"variant", adm_variant}});
    return 0;
  }

  if (*tfw) {
    const auto [m1, m2] = resolve_matrices(tfw_preset, tfw_m1, tfw_m2);
    const WindowSpec psi = parse_window(tfw_win);
    const auto xr = parse_range(tfw_xi);
    const auto pg = window_geometry(psi);
    const GridSpec xi{xr.lo, (xr.hi - xr.lo) / static_cast<double>(xr.n - 1),
                      xr.n};
    const auto sg = window_geometry(spectral_window(psi, m1, m2, xi));
    const auto rect = tf_rectangle(pg, sg, m1, m2, tfw_a, tfw_b);
    emit({{"command", "tfwindow"},
          {"time_center", pg.center / tfw_a + tfw_b},
          {"time_radius", pg.radius / tfw_a},
          {"spectral_center", spectral_window_geometry(sg, m1, m2, tfw_a).center},
          {"spectral_radius", spectral_window_geometry(sg, m1, m2, tfw_a).radius},
          {"q", q_factor(sg)},
          {"area", rect.area}});
    return 0;
  }

  if (*rk) {
    const auto [m1, m2] = resolve_matrices(rk_preset, rk_m1, rk_m2);
    const WindowSpec psi = parse_window(rk_win);
    const auto p = split_nums(rk_p);
    const auto q = split_nums(rk_q);
    if (p.size() != 2 || q.size() != 2)
      throw BadParams("--p and --q each need two numbers a,b");
    GridSpec quad;
    if (!rk_quad.empty()) {
      const auto v = split_nums(rk_quad, ':');
      if (v.size() != 3) throw BadParams("--quad must be t0:dt:n");
      quad = {v[0], v[1], static_cast<std::size_t>(v[2])};
    } else {
      const double ext = psi.suggested_extent() / std::min(p[0], q[0]) +
                         std::max(std::abs(p[1]), std::abs(q[1]));
      quad = {-ext, 2 * ext / 8191.0, 8192};
    }
    const KernelContext ctx{psi, m1, m2, rk_c, quad};
    const cplx k = reproducing_kernel(ctx, p[0], p[1], q[0], q[1]);
    emit({{"command", "rkhs-kernel"},
          {"re", k.real()},
          {"im", k.imag()},
          {"abs", std::abs(k)}});
    return 0;
  }

  if (*mra) {
    const auto [m1, m2] = resolve_matrices(mra_preset, mra_m1, mra_m2);
    const auto u = make_u_grid(m1, mra_ugrid);
    auto* sub = mra->get_subcommands().front();
    const std::string name = sub->get_name();

    if (name == "qmf") {
      const auto c = parse_filter(mra_filter);
      emit({{"command", "mra qmf"},
            {"deviation", qmf_check(c, m1, m2, u)}});
      return 0;
    }
    if (name == "derive-wavelet") {
      const auto c = parse_filter(mra_filter);
      const auto d = derive_wavelet_coeffs(c, m1, m2);
      if (!mra_out.empty()) write_filter(d, mra_out);
      emit({{"command", "mra derive-wavelet"},
            {"support", {d.first(), d.last()}},
            {"unitarity", unitarity_check(c, d, m1, m2, u)},
            {"output", mra_out}});
      return 0;
    }
    if (name == "unitarity") {
      const auto c = parse_filter(mra_filter);
      const auto d = mra_wavelet.empty() ? derive_wavelet_coeffs(c, m1, m2)
                                         : read_filter(mra_wavelet);
      emit({{"command", "mra unitarity"},
            {"deviation", unitarity_check(c, d, m1, m2, u)},
            {"cross_orthogonality", cross_orthogonality_check(c, d, m1, m2, u)}});
      return 0;
    }
    if (name == "riesz") {
      const ScalingFunction sf{parse_window(mra_win), m1, m2};
      const auto [lo, hi] = riesz_bounds(sf, u, mra_kmin, mra_kmax);
      emit({{"command", "mra riesz"}, {"a_est", lo}, {"b_est", hi}});
      return 0;
    }
    if (name == "orthonormalize") {
      const ScalingFunction sf{parse_window(mra_win), m1, m2};
      const auto prof = orthonormalize(sf, u, mra_kmin, mra_kmax);
      const double target = 1.0 / (2.0 * std::numbers::pi * std::abs(m2.b));
      double dev = 0.0;
      for (std::size_t i = 0; i < prof.u_grid.size(); ++i)
        dev = std::max(dev, std::abs(prof.periodized_sum(i) - target));
      if (!mra_out.empty()) {
        std::ofstream f(mra_out);
        f << "u,k,re,im\n";
        char buf[40];
        for (std::size_t i = 0; i < prof.u_grid.size(); ++i)
          for (long k = prof.k_min; k <= prof.k_max; ++k) {
            const cplx v = prof.values[i][static_cast<std::size_t>(k - prof.k_min)];
            std::snprintf(buf, sizeof buf, "%.17g", prof.u_grid[i]);
            f << buf << ',' << k << ',';
            std::snprintf(buf, sizeof buf, "%.17g", v.real());
            f << buf << ',';
            std::snprintf(buf, sizeof buf, "%.17g", v.imag());
            f << buf << '\n';
          }
      }
      emit({{"command", "mra orthonormalize"},
            {"target", target},
            {"max_deviation", dev},
            {"output", mra_out}});
      return 0;
    }
    if (name == "gram") {
      const ScalingFunction sf{parse_window(mra_win), m1, m2};
      const auto g = gram_matrix(sf, mra_level, mra_nlo, mra_nhi);
      double diag_dev = 0.0, off_max = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
          if (i == j)
            diag_dev = std::max(diag_dev, std::abs(g[i][j] - cplx(1.0)));
          else
            off_max = std::max(off_max, std::abs(g[i][j]));
        }
      emit({{"command", "mra gram"},
            {"size", g.size()},
            {"diag_deviation", diag_dev},
            {"max_offdiagonal", off_max}});
      return 0;
    }
  }

  return 64;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  try {
    return run(args);
  } catch (const ValidationError& e) {
    std::cout << json{{"error", "validation"}, {"message", e.what()}}.dump()
              << std::endl;
    return 1;
  } catch (const NumericalGuardError& e) {
    std::cout << json{{"error", "numerical-guard"}, {"message", e.what()}}.dump()
              << std::endl;
    return 2;
  }
}

}  // namespace lcst::cli
